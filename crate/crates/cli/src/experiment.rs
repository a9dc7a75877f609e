//! Batch runs over whole families of degree sequences (identity and bounds
//! suites) and random realization pairs (conjectures suite).

use std::fmt::Write as _;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use swapdist_core::decomp::{exact_max_decomposition, shortest_circuit_len};
use swapdist_core::oracle::{certify_identity, CertifyOptions, CertifyReport, DegreeSpec};
use swapdist_core::realize::{erdos_gallai_check, fulkerson_check, gale_ryser_check};
use swapdist_core::swapgen::bound_parameters;
use swapdist_core::{
    symmetric_difference, BipartiteDegreeSequence, ChordGraph, DegreeSequence, DirectedDegreeSequence,
    Error, Flavor, GraphKind, Move, Swap,
};

use crate::Budget;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Identity,
    Bounds,
    Conjectures,
}

#[derive(Debug, Clone, Copy)]
pub struct Params {
    pub suite: Suite,
    pub kind: GraphKind,
    pub n: usize,
    pub trials: Option<usize>,
    pub edges: Option<usize>,
    pub seed: u64,
    pub budget: Budget,
}

/// Every non-increasing sequence of `len` values in `0..=max`.
fn non_increasing(len: usize, max: usize) -> Vec<Vec<usize>> {
    fn rec(len: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in (0..=cap).rev() {
            cur.push(v);
            rec(len, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(len, max, &mut Vec::new(), &mut out);
    out
}

pub fn undirected_sequences(n: usize) -> Vec<DegreeSequence> {
    non_increasing(n, n.saturating_sub(1))
        .into_iter()
        .map(DegreeSequence::new)
        .filter(erdos_gallai_check)
        .collect()
}

/// Class sizes `(ceil(n/2), floor(n/2))`.
pub fn bipartite_sequences(n: usize) -> Vec<BipartiteDegreeSequence> {
    let (k, l) = (n.div_ceil(2), n / 2);
    let firsts = non_increasing(k, l);
    let seconds = non_increasing(l, k);
    firsts
        .iter()
        .flat_map(|a| seconds.iter().map(move |b| BipartiteDegreeSequence::new(a.clone(), b.clone())))
        .filter(gale_ryser_check)
        .collect()
}

/// Sequences of `(out, in)` pairs up to relabeling of the vertices.
pub fn directed_sequences(n: usize) -> Vec<DirectedDegreeSequence> {
    let codes = non_increasing(n, (n * n).saturating_sub(1));
    codes
        .into_iter()
        .map(|c| {
            let (out, inn) = c.iter().map(|&x| (x / n, x % n)).unzip();
            DirectedDegreeSequence::new(out, inn)
        })
        .filter(fulkerson_check)
        .collect()
}

fn describe(flat: &[usize], flavor: Flavor) -> String {
    let join = |s: &[usize]| s.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
    match flavor {
        Flavor::Undirected { .. } => join(flat),
        Flavor::Bipartite { k, .. } | Flavor::Directed { n: k } => format!("{} / {}", join(&flat[..k]), join(&flat[k..])),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SequenceRow {
    pub sequence: String,
    pub realizations: usize,
    pub pairs: usize,
    pub violations: usize,
    pub budget_exceeded: bool,
    pub m: usize,
    pub m_star: usize,
    pub factor: f64,
    pub max_distance: Option<usize>,
    pub h_prime_bound: Option<f64>,
    pub m_star_bound: f64,
    pub m_bound: f64,
    pub details: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SequenceSuiteReport {
    pub suite: &'static str,
    pub kind: String,
    pub n: usize,
    pub seed: u64,
    pub pair_cap: usize,
    pub rows: Vec<SequenceRow>,
    pub pairs: usize,
    pub violations: usize,
    pub budget_exceeded: usize,
}

fn sequence_row<D: DegreeSpec + Sync>(d: &D, opts: &CertifyOptions) -> SequenceRow {
    let flavor = d.flavor();
    let flat = d.flat_degrees();
    let (m, m_star, factor) = bound_parameters(flavor, &flat);
    let mut row = SequenceRow {
        sequence: describe(&flat, flavor),
        realizations: 0,
        pairs: 0,
        violations: 0,
        budget_exceeded: false,
        m,
        m_star,
        factor,
        max_distance: None,
        h_prime_bound: None,
        m_star_bound: m_star as f64 / 2.0 * factor,
        m_bound: m as f64 * factor,
        details: Vec::new(),
    };
    match certify_identity(d, opts) {
        Ok(report) => fill(&mut row, &report, factor),
        Err(e @ (Error::BudgetExceeded { .. } | Error::CapExceeded { .. })) => {
            row.budget_exceeded = true;
            row.details.push(e.to_string());
        }
        Err(e) => {
            row.violations += 1;
            row.details.push(e.to_string());
        }
    }
    row
}

fn fill(row: &mut SequenceRow, report: &CertifyReport, factor: f64) {
    row.realizations = report.realizations;
    row.pairs = report.pairs.len();
    let details: Vec<String> = report
        .identity_violations
        .iter()
        .chain(&report.structure_violations)
        .chain(&report.bound_violations)
        .chain(&report.move_set_violations)
        .chain(&report.transform_violations)
        .cloned()
        .collect();
    row.violations = details.len();
    row.details = details;
    row.max_distance = report.pairs.iter().filter_map(|p| p.oracle).max();
    row.h_prime_bound = report.pairs.iter().map(|p| p.h_prime).max().map(|h| h as f64 * factor);
}

fn sequence_suite(p: &Params) -> SequenceSuiteReport {
    let pair_cap = p.trials.unwrap_or(200);
    let opts = CertifyOptions {
        pair_cap,
        seed: p.seed,
        node_budget: p.budget.nodes,
        edge_budget: p.budget.edges,
        ..CertifyOptions::default()
    };
    let rows: Vec<SequenceRow> = match p.kind {
        GraphKind::Undirected => undirected_sequences(p.n).par_iter().map(|d| sequence_row(d, &opts)).collect(),
        GraphKind::Bipartite => bipartite_sequences(p.n).par_iter().map(|d| sequence_row(d, &opts)).collect(),
        GraphKind::Directed => directed_sequences(p.n).par_iter().map(|d| sequence_row(d, &opts)).collect(),
    };
    SequenceSuiteReport {
        suite: if p.suite == Suite::Bounds { "bounds" } else { "identity" },
        kind: p.kind.code().to_string(),
        n: p.n,
        seed: p.seed,
        pair_cap,
        pairs: rows.iter().map(|r| r.pairs).sum(),
        violations: rows.iter().map(|r| r.violations).sum(),
        budget_exceeded: rows.iter().filter(|r| r.budget_exceeded).count(),
        rows,
    }
}

fn render_sequence_suite(r: &SequenceSuiteReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "suite {}  kind {}  n {}  seed {}  pairs per sequence <= {}", r.suite, r.kind, r.n, r.seed, r.pair_cap);
    let width = r.rows.iter().map(|x| x.sequence.len()).max().unwrap_or(8).max(8);
    if r.suite == "identity" {
        let _ = writeln!(out, "{:<width$}  {:>12}  {:>6}  {:>10}", "sequence", "realizations", "pairs", "violations");
        for row in &r.rows {
            let v = if row.budget_exceeded { "budget".to_string() } else { row.violations.to_string() };
            let _ = writeln!(out, "{:<width$}  {:>12}  {:>6}  {:>10}", row.sequence, row.realizations, row.pairs, v);
        }
    } else {
        let _ = writeln!(
            out,
            "{:<width$}  {:>4}  {:>4}  {:>8}  {:>8}  {:>8}  {:>8}  {:>10}",
            "sequence", "m", "m*", "max dist", "H'*f", "m*/2*f", "m*f", "violations"
        );
        for row in &r.rows {
            let dist = row.max_distance.map_or("-".to_string(), |d| d.to_string());
            let hb = row.h_prime_bound.map_or("-".to_string(), |b| format!("{b:.2}"));
            let v = if row.budget_exceeded { "budget".to_string() } else { row.violations.to_string() };
            let _ = writeln!(
                out,
                "{:<width$}  {:>4}  {:>4}  {:>8}  {:>8}  {:>8.2}  {:>8.2}  {:>10}",
                row.sequence, row.m, row.m_star, dist, hb, row.m_star_bound, row.m_bound, v
            );
        }
    }
    for row in &r.rows {
        for d in &row.details {
            let _ = writeln!(out, "  {}: {d}", row.sequence);
        }
    }
    let _ = writeln!(
        out,
        "total: {} sequences, {} pairs, {} violations, {} over budget",
        r.rows.len(),
        r.pairs,
        r.violations,
        r.budget_exceeded
    );
    out
}

// ---------------------------------------------------------------------------
// Conjectures

/// Observed slack `bound - value` of one conjectured inequality.
#[derive(Debug, Clone, Serialize)]
pub struct SlackRow {
    pub statement: &'static str,
    pub cases: usize,
    pub min_slack: Option<f64>,
    pub max_slack: Option<f64>,
    pub negative: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConjectureReport {
    pub suite: &'static str,
    pub label: &'static str,
    pub n: usize,
    pub edges: usize,
    pub trials: usize,
    pub seed: u64,
    pub identical: usize,
    pub budget_exceeded: usize,
    pub rows: Vec<SlackRow>,
}

const STATEMENTS: [&str; 6] = [
    "shortest circuit <= 3n^2/mu",
    "c >= mu^2/(6n^2)",
    "dist <= H'(1 - m/(3n^2))",
    "dist <= m*(1/2 - m/(6n^2))",
    "dist <= m(1 - m/(3n^2))",
    "dist <= 5n^2/24",
];

/// Random simple graph with `m` edges.
fn random_graph(n: usize, m: usize, rng: &mut ChaCha8Rng) -> ChordGraph {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let picked = sample(rng, pairs.len(), m.min(pairs.len()));
    ChordGraph::new(Flavor::Undirected { n }, picked.into_iter().map(|i| pairs[i])).expect("pairs are distinct chords")
}

/// Random walk of attempted swaps; failed attempts leave the graph as is.
fn scramble(g: &ChordGraph, steps: usize, rng: &mut ChaCha8Rng) -> ChordGraph {
    let mut g = g.clone();
    for _ in 0..steps {
        let edges: Vec<(usize, usize)> = g.edges().collect();
        if edges.len() < 2 {
            break;
        }
        let (i, j) = (rng.gen_range(0..edges.len()), rng.gen_range(0..edges.len()));
        let ((a, c), (mut b, mut d)) = (edges[i], edges[j]);
        if rng.gen_bool(0.5) {
            std::mem::swap(&mut b, &mut d);
        }
        let _ = Move::C4(Swap { a, b, c, d }).apply(&mut g);
    }
    g
}

/// Slack of every statement for one pair, `None` where it does not apply.
fn trial_slacks(n: usize, seed: u64, trial: usize, m: usize, budget: &Budget) -> Result<Option<[Option<f64>; 6]>, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (trial as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let g1 = random_graph(n, m, &mut rng);
    let g2 = scramble(&g1, 4 * m + 4, &mut rng);
    let rb = symmetric_difference(&g1, &g2)?;
    let mu = rb.edge_count();
    if mu == 0 {
        return Ok(None);
    }
    let exact = exact_max_decomposition(&rb, budget.edges)?;
    let shortest = shortest_circuit_len(&rb, budget.nodes)?.expect("non-empty balanced graph has a circuit");
    let (nf, muf, mf) = (n as f64, mu as f64, m as f64);
    let h = (mu / 2) as f64;
    let c = exact.k as f64;
    let dist = h - c;
    let (_, m_star, _) = bound_parameters(g1.flavor(), &g1.degrees());
    let m_star = m_star as f64;
    let n2 = nf * nf;
    Ok(Some([
        Some(3.0 * n2 / muf - shortest as f64),
        Some(c - muf * muf / (6.0 * n2)),
        Some(h * (1.0 - mf / (3.0 * n2)) - dist),
        Some(m_star * (0.5 - mf / (6.0 * n2)) - dist),
        Some(mf * (1.0 - mf / (3.0 * n2)) - dist),
        Some(5.0 * n2 / 24.0 - dist),
    ]))
}

fn conjecture_suite(p: &Params) -> ConjectureReport {
    let n = p.n;
    let edges = p.edges.unwrap_or(n * n / 4);
    let trials = p.trials.unwrap_or(100);
    let outcomes: Vec<Result<Option<[Option<f64>; 6]>, Error>> =
        (0..trials).into_par_iter().map(|t| trial_slacks(n, p.seed, t, edges, &p.budget)).collect();
    let mut rows: Vec<SlackRow> = STATEMENTS
        .iter()
        .map(|&statement| SlackRow {
            statement,
            cases: 0,
            min_slack: None,
            max_slack: None,
            negative: 0,
        })
        .collect();
    let (mut identical, mut budget_exceeded) = (0, 0);
    for outcome in &outcomes {
        match outcome {
            Ok(None) => identical += 1,
            Ok(Some(slacks)) => {
                for (row, s) in rows.iter_mut().zip(slacks) {
                    let Some(s) = *s else { continue };
                    row.cases += 1;
                    row.min_slack = Some(row.min_slack.map_or(s, |x| x.min(s)));
                    row.max_slack = Some(row.max_slack.map_or(s, |x| x.max(s)));
                    if s < -1e-9 {
                        row.negative += 1;
                    }
                }
            }
            Err(_) => budget_exceeded += 1,
        }
    }
    ConjectureReport {
        suite: "conjectures",
        label: "EMPIRICAL",
        n,
        edges,
        trials,
        seed: p.seed,
        identical,
        budget_exceeded,
        rows,
    }
}

fn render_conjectures(r: &ConjectureReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "suite conjectures ({})  n {}  m {}  trials {}  seed {}",
        r.label, r.n, r.edges, r.trials, r.seed
    );
    let _ = writeln!(out, "{:<28}  {:>6}  {:>10}  {:>10}  {:>8}", "statement", "cases", "min slack", "max slack", "negative");
    let f = |x: Option<f64>| x.map_or("-".to_string(), |v| format!("{v:.3}"));
    for row in &r.rows {
        let _ = writeln!(
            out,
            "{:<28}  {:>6}  {:>10}  {:>10}  {:>8}",
            row.statement,
            row.cases,
            f(row.min_slack),
            f(row.max_slack),
            row.negative
        );
    }
    let _ = writeln!(
        out,
        "{} identical pairs skipped, {} over budget; slack is observed only, nothing is asserted",
        r.identical, r.budget_exceeded
    );
    out
}

pub struct Outcome {
    pub text: String,
    pub json: String,
    pub clean: bool,
}

pub fn run(p: &Params) -> Outcome {
    match p.suite {
        Suite::Identity | Suite::Bounds => {
            let r = sequence_suite(p);
            Outcome {
                text: render_sequence_suite(&r),
                json: serde_json::to_string_pretty(&r).expect("report serializes"),
                clean: r.violations == 0,
            }
        }
        Suite::Conjectures => {
            let r = conjecture_suite(p);
            Outcome {
                text: render_conjectures(&r),
                json: serde_json::to_string_pretty(&r).expect("report serializes"),
                clean: true,
            }
        }
    }
}
