//! `swapdist`: swap distances between realizations of degree sequences.

mod experiment;
mod format;

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use swapdist_core::decomp::{DEFAULT_EDGE_BUDGET, MAX_EDGE_BUDGET};
use swapdist_core::oracle::DEFAULT_NODE_BUDGET;
use swapdist_core::realize::{erdos_gallai_check, fulkerson_check, gale_ryser_check};
use swapdist_core::swapgen::{distance_report, transform, verify_chord, DistanceReport, Mode};
use swapdist_core::{ChordGraph, Flavor, GraphKind, SwapSequence};

use crate::experiment::{Params, Suite};
use crate::format::{kind_from_code, parse_graph, parse_sequence, sequence_from_record, sequence_record, ParseError, Sequence, SequenceRecord};

/// Search limits: maximum red-blue edges for the exact decomposition and
/// maximum states for exhaustive search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub edges: usize,
    pub nodes: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            edges: DEFAULT_EDGE_BUDGET,
            nodes: DEFAULT_NODE_BUDGET,
        }
    }
}

/// `N` sets the edge budget; `edges=N,nodes=M` sets either or both.
impl FromStr for Budget {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut b = Budget::default();
        let s = s.trim();
        if let Ok(edges) = s.parse() {
            b.edges = edges;
        } else {
            Self::apply_pairs(&mut b, s)?;
        }
        if b.edges > MAX_EDGE_BUDGET {
            return Err(format!("edge budget is at most {MAX_EDGE_BUDGET}"));
        }
        Ok(b)
    }
}

impl Budget {
    fn apply_pairs(b: &mut Budget, s: &str) -> Result<(), String> {
        for part in s.split(',') {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| format!("expected `N` or `edges=N,nodes=M`, found `{part}`"))?;
            let value: usize = value.trim().parse().map_err(|_| format!("`{value}` is not a number"))?;
            match key.trim() {
                "edges" => b.edges = value,
                "nodes" => b.nodes = value,
                other => return Err(format!("unknown budget `{other}`")),
            }
        }
        Ok(())
    }
}

#[derive(Parser)]
#[command(name = "swapdist", version, about = "Swap distances between realizations of degree sequences")]
struct Cli {
    /// Search budget: `N` (edges) or `edges=N,nodes=M`.
    #[arg(long, global = true, env = "SWAPDIST_BUDGET")]
    budget: Option<Budget>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    U,
    B,
    D,
}

impl From<KindArg> for GraphKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::U => GraphKind::Undirected,
            KindArg::B => GraphKind::Bipartite,
            KindArg::D => GraphKind::Directed,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Greedy,
    Exact,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a degree sequence is graphical.
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "u")]
        kind: KindArg,
    },
    /// Swap distance between two realizations.
    Distance {
        graph1: PathBuf,
        graph2: PathBuf,
        #[arg(long, value_enum, default_value = "exact")]
        mode: ModeArg,
        #[arg(long)]
        json: bool,
    },
    /// Write a swap sequence turning the first graph into the second.
    Transform {
        graph1: PathBuf,
        graph2: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "exact")]
        mode: ModeArg,
    },
    /// Replay a swap sequence from the first graph and compare with the second.
    Verify { sequence: PathBuf, graph1: PathBuf, graph2: PathBuf },
    /// Run an experiment suite.
    Experiment {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 5)]
        n: usize,
        /// Pairs per sequence (identity, bounds) or random pairs (conjectures).
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "u")]
        kind: KindArg,
        /// Edges of the random graphs in the conjectures suite (default n^2/4).
        #[arg(long)]
        edges: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug)]
enum CliError {
    Io(PathBuf, std::io::Error),
    Parse(PathBuf, ParseError),
    Core(swapdist_core::Error),
    Mismatch(String),
    Verify { index: usize, reason: String },
    Negative(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        use swapdist_core::Error as E;
        match self {
            CliError::Negative(_) => 1,
            CliError::Io(..) | CliError::Parse(..) => 2,
            CliError::Mismatch(_) | CliError::Core(E::DegreeMismatch | E::FlavorMismatch) => 3,
            CliError::Core(E::BudgetExceeded { .. } | E::CapExceeded { .. }) => 4,
            CliError::Verify { .. } | CliError::Core(E::VerificationFailed { .. }) => 5,
            CliError::Core(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(p, e) => write!(f, "{}: {e}", p.display()),
            CliError::Parse(p, e) => write!(f, "{}:{e}", p.display()),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Mismatch(m) | CliError::Negative(m) => f.write_str(m),
            CliError::Verify { index, reason } => write!(f, "verification failed at move {index}: {reason}"),
        }
    }
}

impl From<swapdist_core::Error> for CliError {
    fn from(e: swapdist_core::Error) -> Self {
        CliError::Core(e)
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

fn load_graph(path: &Path) -> Result<ChordGraph, CliError> {
    parse_graph(&read(path)?).map_err(|e| CliError::Parse(path.to_path_buf(), e))
}

fn load_pair(a: &Path, b: &Path) -> Result<(ChordGraph, ChordGraph), CliError> {
    let (g1, g2) = (load_graph(a)?, load_graph(b)?);
    if g1.flavor() != g2.flavor() {
        return Err(CliError::Mismatch(format!(
            "{} and {} are graphs of different kinds or sizes",
            a.display(),
            b.display()
        )));
    }
    if g1.degrees() != g2.degrees() {
        return Err(CliError::Core(swapdist_core::Error::DegreeMismatch));
    }
    Ok((g1, g2))
}

fn mode(m: ModeArg, budget: Budget) -> Mode {
    match m {
        ModeArg::Greedy => Mode::Greedy,
        ModeArg::Exact => Mode::Exact { edge_budget: budget.edges },
    }
}

fn cmd_check(file: &Path, kind: GraphKind) -> Result<(), CliError> {
    let seq = parse_sequence(&read(file)?, kind).map_err(|e| CliError::Parse(file.to_path_buf(), e))?;
    let graphical = match &seq {
        Sequence::Undirected(d) => erdos_gallai_check(d),
        Sequence::Bipartite(d) => gale_ryser_check(d),
        Sequence::Directed(d) => fulkerson_check(d),
    };
    if graphical {
        println!("GRAPHICAL");
        Ok(())
    } else {
        println!("NOT GRAPHICAL");
        Err(CliError::Negative(String::new()))
    }
}

fn factor_formula(flavor: Flavor) -> &'static str {
    match flavor {
        Flavor::Undirected { .. } => "1 - 4/(3n)",
        Flavor::Bipartite { .. } => "1 - 2/n'",
        Flavor::Directed { .. } => "1 - 1/n",
    }
}

#[derive(Serialize)]
struct DistanceJson {
    kind: String,
    h_prime: usize,
    k: usize,
    distance: usize,
    exact: bool,
    triangular_c6_count: Option<usize>,
    circuit_lengths: Vec<usize>,
    move_weights: Vec<usize>,
    m: usize,
    m_star: usize,
    factor: f64,
    h_prime_bound: f64,
    m_star_bound: f64,
    m_bound: f64,
}

fn distance_json(r: &DistanceReport, seq: &SwapSequence, factor: f64) -> DistanceJson {
    DistanceJson {
        kind: r.kind.code().to_string(),
        h_prime: r.h_prime,
        k: r.k,
        distance: r.distance,
        exact: r.exact,
        triangular_c6_count: r.triangular_c6_count,
        circuit_lengths: r.decomposition.circuits().iter().map(|c| c.len()).collect(),
        move_weights: seq.moves.iter().map(|m| m.weight()).collect(),
        m: r.m,
        m_star: r.m_star,
        factor,
        h_prime_bound: r.h_prime_bound,
        m_star_bound: r.m_star_bound,
        m_bound: r.m_bound,
    }
}

fn cmd_distance(a: &Path, b: &Path, m: ModeArg, json: bool, budget: Budget) -> Result<(), CliError> {
    let (g1, g2) = load_pair(a, b)?;
    let report = distance_report(&g1, &g2, mode(m, budget))?;
    let seq = transform(&g1, &g2, &report.decomposition)?;
    let (_, _, factor) = swapdist_core::swapgen::bound_parameters(g1.flavor(), &g1.degrees());
    let out = distance_json(&report, &seq, factor);
    if json {
        println!("{}", serde_json::to_string_pretty(&out).expect("report serializes"));
        return Ok(());
    }
    let weights: Vec<String> = out.move_weights.iter().map(usize::to_string).collect();
    println!("kind      {}", out.kind);
    println!("H'        {}", out.h_prime);
    println!("k         {}", out.k);
    println!("distance  {} {}", out.distance, if out.exact { "EXACT" } else { "UPPER BOUND" });
    if let Some(t) = out.triangular_c6_count {
        println!("triangular C6 circuits  {t}");
    }
    println!("moves     {}", if weights.is_empty() { "-".to_string() } else { weights.join(" ") });
    println!("factor    f = {} = {:.4}", factor_formula(g1.flavor()), factor);
    println!("bounds    H'*f = {:.4}  m*/2*f = {:.4}  m*f = {:.4}  (m = {}, m* = {})", out.h_prime_bound, out.m_star_bound, out.m_bound, out.m, out.m_star);
    Ok(())
}

fn cmd_transform(a: &Path, b: &Path, out: Option<&Path>, m: ModeArg, budget: Budget) -> Result<(), CliError> {
    let (g1, g2) = load_pair(a, b)?;
    let report = distance_report(&g1, &g2, mode(m, budget))?;
    let seq = transform(&g1, &g2, &report.decomposition)?;
    let mut text = serde_json::to_string_pretty(&sequence_record(&seq)).expect("sequence serializes");
    text.push('\n');
    match out {
        Some(path) => {
            fs::write(path, &text).map_err(|e| CliError::Io(path.to_path_buf(), e))?;
            println!("{} moves, total weight {}", seq.len(), seq.total_weight());
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn cmd_verify(seq_path: &Path, a: &Path, b: &Path) -> Result<(), CliError> {
    let text = read(seq_path)?;
    let rec: SequenceRecord = serde_json::from_str(&text).map_err(|e| {
        CliError::Parse(
            seq_path.to_path_buf(),
            ParseError {
                line: e.line(),
                col: e.column(),
                msg: e.to_string(),
            },
        )
    })?;
    let (g1, g2) = (load_graph(a)?, load_graph(b)?);
    if g1.flavor() != g2.flavor() {
        return Err(CliError::Mismatch("graphs are of different kinds or sizes".into()));
    }
    if kind_from_code(&rec.kind) != Some(g1.flavor().kind()) {
        return Err(CliError::Mismatch(format!(
            "sequence kind `{}` does not match graph kind `{}`",
            rec.kind,
            g1.flavor().kind()
        )));
    }
    let seq = sequence_from_record(&rec, g1.flavor()).map_err(|(index, reason)| CliError::Verify { index, reason })?;
    let report = verify_chord(&seq, &g1, &g2);
    if !report.passed {
        return Err(CliError::Verify {
            index: report.failed_at.unwrap_or(0),
            reason: report.reason.unwrap_or_default(),
        });
    }
    if rec.total_weight != seq.total_weight() {
        return Err(CliError::Verify {
            index: seq.len(),
            reason: format!("recorded total weight {} differs from {}", rec.total_weight, seq.total_weight()),
        });
    }
    println!("OK {} moves, total weight {}", seq.len(), seq.total_weight());
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    let budget = cli.budget.unwrap_or_default();
    match cli.command {
        Command::Check { file, kind } => cmd_check(&file, kind.into()),
        Command::Distance { graph1, graph2, mode, json } => cmd_distance(&graph1, &graph2, mode, json, budget),
        Command::Transform { graph1, graph2, out, mode } => cmd_transform(&graph1, &graph2, out.as_deref(), mode, budget),
        Command::Verify { sequence, graph1, graph2 } => cmd_verify(&sequence, &graph1, &graph2),
        Command::Experiment {
            suite,
            n,
            trials,
            seed,
            kind,
            edges,
            json,
        } => {
            let outcome = experiment::run(&Params {
                suite,
                kind: kind.into(),
                n,
                trials,
                edges,
                seed,
                budget,
            });
            if json {
                println!("{}", outcome.json);
            } else {
                print!("{}", outcome.text);
            }
            if outcome.clean {
                Ok(())
            } else {
                Err(CliError::Negative("violations found".into()))
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let msg = e.to_string();
            if !msg.is_empty() {
                eprintln!("swapdist: {msg}");
            }
            ExitCode::from(e.exit_code())
        }
    }
}
