//! Turning circuit decompositions into explicit move sequences.
//!
//! Each elementary circuit of length `2t` is resolved with `t - 1` moves by
//! repeatedly shortcutting the walk at a vertex that occurs once. A step
//! either swaps in the graph that owns the first edge of the residual walk or,
//! when that would create an existing edge, swaps in the other graph; swaps
//! made on the stop side are replayed inverted at the end.

use std::collections::BTreeSet;

use crate::decomp::{
    exact_max_decomposition, greedy_maximize, is_triangular_c6, DecompositionReport,
};
use crate::error::{Error, Result};
use crate::graphs::{canonical, chord_symmetric_difference, ChordGraph, Flavor, GraphKind, Realization};
use crate::rbgraph::{euler_decompose, is_elementary, Circuit, Decomposition};

type Pair = (usize, usize);

/// Remove `(a, c)` and `(b, d)`, add `(b, c)` and `(a, d)`; flat coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Swap {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

impl Swap {
    pub fn removed(&self) -> [(usize, usize); 2] {
        [canonical(self.a, self.c), canonical(self.b, self.d)]
    }

    pub fn added(&self) -> [(usize, usize); 2] {
        [canonical(self.b, self.c), canonical(self.a, self.d)]
    }

    pub fn inverse(&self) -> Swap {
        Swap {
            a: self.b,
            b: self.a,
            c: self.c,
            d: self.d,
        }
    }

    /// Same swap with `a` and `b` on the first class, when the flavor has
    /// classes.
    pub fn normalized(&self, flavor: Flavor) -> Swap {
        if matches!(flavor, Flavor::Undirected { .. }) || flavor.in_first_class(self.a) {
            *self
        } else {
            Swap {
                a: self.c,
                b: self.d,
                c: self.a,
                d: self.b,
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Move {
    C4(Swap),
    /// Reverses the directed triangle `x -> y -> z -> x` (native vertices).
    TriangularC6 { triangle: [usize; 3] },
}

impl Move {
    pub fn weight(&self) -> usize {
        match self {
            Move::C4(_) => 1,
            Move::TriangularC6 { .. } => 2,
        }
    }

    pub fn inverse(&self) -> Move {
        match *self {
            Move::C4(s) => Move::C4(s.inverse()),
            Move::TriangularC6 { triangle: [x, y, z] } => Move::TriangularC6 { triangle: [x, z, y] },
        }
    }

    /// Flat pairs removed and added by the move.
    pub fn edits(&self, flavor: Flavor) -> (Vec<Pair>, Vec<Pair>) {
        match *self {
            Move::C4(s) => (s.removed().to_vec(), s.added().to_vec()),
            Move::TriangularC6 { triangle: [x, y, z] } => {
                let arc = |p, q| flavor.from_native((p, q));
                (
                    vec![arc(x, y), arc(y, z), arc(z, x)],
                    vec![arc(y, x), arc(z, y), arc(x, z)],
                )
            }
        }
    }

    /// Applies the move in place, checking that removed pairs are present,
    /// added pairs absent and allowed, and the touched vertices distinct.
    pub fn apply(&self, g: &mut ChordGraph) -> std::result::Result<(), String> {
        let flavor = g.flavor();
        if let Move::C4(s) = self {
            let v = [s.a, s.b, s.c, s.d];
            if (0..4).any(|i| (i + 1..4).any(|j| v[i] == v[j])) {
                return Err("swap vertices are not distinct".into());
            }
        }
        if let Move::TriangularC6 { triangle } = self {
            let Flavor::Directed { n } = flavor else {
                return Err("triangular move on an undirected graph".into());
            };
            let [x, y, z] = *triangle;
            if x == y || y == z || x == z || triangle.iter().any(|&v| v >= n) {
                return Err("bad triangle".into());
            }
        }
        let (removed, added) = self.edits(flavor);
        for &(p, q) in &removed {
            if !g.has_edge(p, q) {
                return Err(format!("edge {:?} absent", flavor.to_native((p, q))));
            }
        }
        for &(p, q) in &added {
            if !flavor.is_chord(p, q) {
                return Err(format!("pair {p}-{q} is not allowed"));
            }
            if g.has_edge(p, q) {
                return Err(format!("edge {:?} already present", flavor.to_native((p, q))));
            }
        }
        for &(p, q) in &removed {
            g.remove(p, q);
        }
        for &(p, q) in &added {
            g.insert(p, q);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwapSequence {
    pub flavor: Flavor,
    pub moves: Vec<Move>,
    pub start_fingerprint: String,
    pub stop_fingerprint: String,
}

impl SwapSequence {
    pub fn total_weight(&self) -> usize {
        self.moves.iter().map(Move::weight).sum()
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn kind(&self) -> GraphKind {
        self.flavor.kind()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub passed: bool,
    /// Index of the first failing move; `moves.len()` when only the final
    /// graph or a fingerprint is wrong.
    pub failed_at: Option<usize>,
    pub reason: Option<String>,
}

impl VerifyReport {
    fn fail(index: usize, reason: impl Into<String>) -> Self {
        VerifyReport {
            passed: false,
            failed_at: Some(index),
            reason: Some(reason.into()),
        }
    }
}

/// Replays `seq` from `g1`, checking every move and the degree sequence of
/// every intermediate graph, and compares the result with `g2`.
pub fn verify_chord(seq: &SwapSequence, g1: &ChordGraph, g2: &ChordGraph) -> VerifyReport {
    if g1.flavor() != seq.flavor || g2.flavor() != seq.flavor {
        return VerifyReport::fail(0, "graph kind differs from the sequence");
    }
    let degrees = g1.degrees();
    let mut g = g1.clone();
    for (i, m) in seq.moves.iter().enumerate() {
        if let Err(reason) = m.apply(&mut g) {
            return VerifyReport::fail(i, reason);
        }
        if g.degrees() != degrees {
            return VerifyReport::fail(i, "degree sequence changed");
        }
    }
    let end = seq.moves.len();
    if &g != g2 {
        return VerifyReport::fail(end, "replay does not reach the stop graph");
    }
    if seq.start_fingerprint != g1.fingerprint() || seq.stop_fingerprint != g2.fingerprint() {
        return VerifyReport::fail(end, "fingerprint mismatch");
    }
    VerifyReport {
        passed: true,
        failed_at: None,
        reason: None,
    }
}

pub fn verify<G: Realization>(seq: &SwapSequence, g1: &G, g2: &G) -> VerifyReport {
    verify_chord(seq, &g1.to_chord_graph(), &g2.to_chord_graph())
}

// ---------------------------------------------------------------------------
// Generation

/// The two graphs being brought together and the moves made on each side.
struct Sides {
    fwd_graph: ChordGraph,
    back_graph: ChordGraph,
    fwd: Vec<Move>,
    back: Vec<Move>,
}

impl Sides {
    fn new(start: &ChordGraph, stop: &ChordGraph) -> Self {
        Sides {
            fwd_graph: start.clone(),
            back_graph: stop.clone(),
            fwd: Vec::new(),
            back: Vec::new(),
        }
    }

    fn push(&mut self, forward: bool, m: Move) {
        let (g, list) = if forward {
            (&mut self.fwd_graph, &mut self.fwd)
        } else {
            (&mut self.back_graph, &mut self.back)
        };
        m.apply(g).expect("generated move applies");
        list.push(m);
    }

    fn normalized_swap(&self, a: usize, b: usize, c: usize, d: usize) -> Move {
        Move::C4(Swap { a, b, c, d }.normalized(self.fwd_graph.flavor()))
    }

    /// One shortcut at `r[0]`: afterwards `r` has lost `r[1]` and `r[2]`.
    fn shortcut(&mut self, r: &mut Vec<usize>) {
        let (s0, s1, s2, s3) = (r[0], r[1], r[2], r[3]);
        let x_forward = self.fwd_graph.has_edge(s0, s1);
        let x = if x_forward { &self.fwd_graph } else { &self.back_graph };
        if r.len() == 4 || !x.has_edge(s0, s3) {
            // in the owner of s0s1: s0s1, s2s3 -> s1s2, s0s3
            let m = self.normalized_swap(s0, s2, s1, s3);
            self.push(x_forward, m);
        } else {
            // s0s3 is in both graphs: s1s2, s0s3 -> s0s1, s2s3 in the other
            let m = self.normalized_swap(s1, s3, s2, s0);
            self.push(!x_forward, m);
        }
        r.drain(1..3);
    }

    fn finish(self) -> Vec<Move> {
        debug_assert_eq!(self.fwd_graph, self.back_graph);
        let mut moves = self.fwd;
        moves.extend(self.back.iter().rev().map(Move::inverse));
        moves
    }
}

/// Applies the circuit's alternation to `start`: edges in `start` go, the
/// others come. Checks that the walk's edges alternate between the graphs.
fn flip_walk(start: &ChordGraph, walk: &[usize]) -> Result<ChordGraph> {
    let flavor = start.flavor();
    let len = walk.len();
    if len < 4 || len % 2 == 1 {
        return Err(Error::InvalidCircuit(format!("walk of length {len}")));
    }
    let owner = start.has_edge(walk[0], walk[1]);
    let mut stop = start.clone();
    let mut seen = BTreeSet::new();
    for i in 0..len {
        let (p, q) = (walk[i], walk[(i + 1) % len]);
        if !flavor.is_chord(p, q) || !seen.insert(canonical(p, q)) {
            return Err(Error::InvalidCircuit(format!("bad pair {p}-{q}")));
        }
        let present = start.has_edge(p, q);
        if present != (owner == (i % 2 == 0)) {
            return Err(Error::DifferenceMismatch(format!("pair {p}-{q} breaks the alternation")));
        }
        if present {
            stop.remove(p, q);
        } else {
            stop.insert(p, q);
        }
    }
    Ok(stop)
}

/// Moves for an elementary walk of an undirected or bipartite difference.
fn elementary_moves(start: &ChordGraph, walk: &[usize]) -> Result<(Vec<Move>, ChordGraph)> {
    let stop = flip_walk(start, walk)?;
    let c = Circuit::walk(walk.to_vec());
    if !is_elementary(&c) {
        return Err(Error::NotElementary);
    }
    let occ = c.occurrences();
    let len = walk.len();
    // lowest i with v_i and v_{i+1} unique; start at v_{i+1} so that both
    // ends of the walk are unique
    let i = (0..len)
        .find(|&i| occ[&walk[i]] == 1 && occ[&walk[(i + 1) % len]] == 1)
        .expect("elementary circuit has a unique adjacent pair");
    let mut r = c.rotated((i + 1) % len).vertices().to_vec();
    let mut sides = Sides::new(start, &stop);
    while !r.is_empty() {
        let last = r.len() == 4;
        sides.shortcut(&mut r);
        if last {
            break;
        }
    }
    Ok((sides.finish(), stop))
}

/// Moves for an alternating cycle of the bipartite representation of a
/// digraph; total weight `t - 1`.
fn directed_moves(start: &ChordGraph, walk: &[usize]) -> Result<(Vec<Move>, ChordGraph)> {
    let flavor = start.flavor();
    let Flavor::Directed { n } = flavor else {
        return Err(Error::FlavorMismatch);
    };
    let stop = flip_walk(start, walk)?;
    let c = Circuit::walk(walk.to_vec());
    if !c.is_cycle() {
        return Err(Error::NotACycle);
    }
    let mut sides = Sides::new(start, &stop);
    let mut r = walk.to_vec();
    loop {
        let on: BTreeSet<usize> = r.iter().copied().collect();
        let lonely = r.iter().copied().filter(|&v| !on.contains(&flavor.partner(v).unwrap())).min();
        if let Some(v) = lonely {
            // s0 keeps its partner off the cycle for good: no step can add a
            // non-chord or leave a triangular six-cycle behind
            let p = r.iter().position(|&x| x == v).unwrap();
            r.rotate_left(p);
            loop {
                let last = r.len() == 4;
                sides.shortcut(&mut r);
                if last {
                    return Ok((sides.finish(), stop));
                }
            }
        }
        if r.len() == 6 {
            debug_assert!(is_triangular_c6(&Circuit::walk(r.clone()), flavor));
            let g = &sides.fwd_graph;
            let x = r.iter().copied().filter(|&v| v < n).min().unwrap();
            let head = |t: usize| {
                (0..n)
                    .find(|&y| on.contains(&(n + y)) && g.has_edge(t, n + y))
                    .expect("triangle arc")
            };
            let y = head(x);
            let z = head(y);
            sides.push(true, Move::TriangularC6 { triangle: [x, y, z] });
            return Ok((sides.finish(), stop));
        }
        // every partner is on the cycle and |C| >= 8: some direction from
        // the lowest vertex has no partner at distance three
        let v = *r.iter().min().unwrap();
        let p = r.iter().position(|&x| x == v).unwrap();
        r.rotate_left(p);
        if flavor.partner(r[0]) == Some(r[3]) {
            r[1..].reverse();
        }
        sides.shortcut(&mut r);
    }
}

fn circuit_moves(start: &ChordGraph, walk: &[usize]) -> Result<(Vec<Move>, ChordGraph)> {
    match start.flavor() {
        Flavor::Directed { .. } => directed_moves(start, walk),
        _ => elementary_moves(start, walk),
    }
}

fn check_difference(start: &ChordGraph, stop: &ChordGraph, walks: &[&[usize]]) -> Result<()> {
    let rb = chord_symmetric_difference(start, stop)?;
    let mut want: Vec<(usize, usize)> = rb.edges().iter().map(|e| canonical(e.a, e.b)).collect();
    let mut got: Vec<(usize, usize)> = walks
        .iter()
        .flat_map(|w| (0..w.len()).map(move |i| canonical(w[i], w[(i + 1) % w.len()])))
        .collect();
    want.sort_unstable();
    got.sort_unstable();
    if want != got {
        return Err(Error::DifferenceMismatch(format!(
            "difference has {} edges, circuits cover {}",
            want.len(),
            got.len()
        )));
    }
    Ok(())
}

fn sequence_between(start: &ChordGraph, stop: &ChordGraph, walks: &[&[usize]]) -> Result<SwapSequence> {
    if start.flavor() != stop.flavor() {
        return Err(Error::FlavorMismatch);
    }
    check_difference(start, stop, walks)?;
    let mut cur = start.clone();
    let mut moves = Vec::new();
    for walk in walks {
        let (m, next) = circuit_moves(&cur, walk)?;
        moves.extend(m);
        cur = next;
    }
    let seq = SwapSequence {
        flavor: start.flavor(),
        moves,
        start_fingerprint: start.fingerprint(),
        stop_fingerprint: stop.fingerprint(),
    };
    let report = verify_chord(&seq, start, stop);
    if !report.passed {
        return Err(Error::VerificationFailed {
            index: report.failed_at.unwrap_or(0),
            reason: report.reason.unwrap_or_default(),
        });
    }
    Ok(seq)
}

/// `t - 1` swaps turning `start` into `stop` when their difference is the
/// single elementary circuit `c` (undirected or bipartite).
pub fn circuit_to_swaps<G: Realization>(start: &G, stop: &G, c: &Circuit) -> Result<SwapSequence> {
    let (s, t) = (start.to_chord_graph(), stop.to_chord_graph());
    if matches!(s.flavor(), Flavor::Directed { .. }) {
        return Err(Error::FlavorMismatch);
    }
    sequence_between(&s, &t, &[c.vertices()])
}

/// Moves of total weight `t - 1` for a single alternating cycle of the
/// bipartite representation.
pub fn directed_circuit_to_moves<G: Realization>(start: &G, stop: &G, c: &Circuit) -> Result<SwapSequence> {
    let (s, t) = (start.to_chord_graph(), stop.to_chord_graph());
    if !matches!(s.flavor(), Flavor::Directed { .. }) {
        return Err(Error::FlavorMismatch);
    }
    sequence_between(&s, &t, &[c.vertices()])
}

/// Resolves the circuits of `d` one after another; the result has total
/// weight `H' - k` and has been replayed end to end.
pub fn transform<G: Realization>(g1: &G, g2: &G, d: &Decomposition) -> Result<SwapSequence> {
    let walks: Vec<&[usize]> = d.circuits().iter().map(Circuit::vertices).collect();
    sequence_between(&g1.to_chord_graph(), &g2.to_chord_graph(), &walks)
}

/// [`transform`] restricted to directed graphs.
pub fn directed_transform<G: Realization>(g1: &G, g2: &G, d: &Decomposition) -> Result<SwapSequence> {
    let (s, t) = (g1.to_chord_graph(), g2.to_chord_graph());
    if !matches!(s.flavor(), Flavor::Directed { .. }) {
        return Err(Error::FlavorMismatch);
    }
    let walks: Vec<&[usize]> = d.circuits().iter().map(Circuit::vertices).collect();
    sequence_between(&s, &t, &walks)
}

// ---------------------------------------------------------------------------
// Distance reports

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Greedy,
    Exact { edge_budget: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct DistanceReport {
    pub kind: GraphKind,
    pub h_prime: usize,
    pub k: usize,
    pub distance: usize,
    /// Without it `distance` is only an upper bound.
    pub exact: bool,
    pub triangular_c6_count: Option<usize>,
    pub m: usize,
    pub m_star: usize,
    /// The chain `distance <= h_prime_bound <= m_star_bound <= m_bound`.
    pub h_prime_bound: f64,
    pub m_star_bound: f64,
    pub m_bound: f64,
    pub decomposition: Decomposition,
}

impl DistanceReport {
    pub fn bounds_hold(&self) -> bool {
        const EPS: f64 = 1e-9;
        let d = self.distance as f64;
        d <= self.h_prime_bound + EPS
            && self.h_prime_bound <= self.m_star_bound + EPS
            && self.m_star_bound <= self.m_bound + EPS
    }
}

/// `(m, m*, factor)` for realizations with the given flat degrees; every
/// bound is `x * factor` for `x` in `{H', m*/2, m}`.
pub fn bound_parameters(flavor: Flavor, deg: &[usize]) -> (usize, usize, f64) {
    let m = deg.iter().sum::<usize>() / 2;
    match flavor {
        Flavor::Undirected { n } => {
            let m_star = deg.iter().map(|&d| d.min(n - d)).sum();
            let factor = if n == 0 { 0.0 } else { 1.0 - 4.0 / (3.0 * n as f64) };
            (m, m_star, factor)
        }
        Flavor::Bipartite { k, l } => {
            // the larger class carries the degrees bounded by the smaller size
            let (big, small) = if l <= k { (&deg[..k], l) } else { (&deg[k..], k) };
            let m_star = 2 * big.iter().map(|&a| a.min(small - a)).sum::<usize>();
            let n2 = 2 * small;
            let factor = if n2 == 0 { 0.0 } else { 1.0 - 2.0 / n2 as f64 };
            (m, m_star, factor)
        }
        Flavor::Directed { n } => {
            let m_star = deg.iter().map(|&d| d.min(n - d)).sum();
            let factor = if n == 0 { 0.0 } else { 1.0 - 1.0 / n as f64 };
            (m, m_star, factor)
        }
    }
}

/// `H' - k` for the best decomposition `mode` finds, with the general upper
/// bounds for comparison.
pub fn distance_report<G: Realization>(g1: &G, g2: &G, mode: Mode) -> Result<DistanceReport> {
    let (s, t) = (g1.to_chord_graph(), g2.to_chord_graph());
    let rb = chord_symmetric_difference(&s, &t)?;
    let report: DecompositionReport = match mode {
        Mode::Exact { edge_budget } => exact_max_decomposition(&rb, edge_budget)?,
        Mode::Greedy => greedy_maximize(&rb, &euler_decompose(&rb)?),
    };
    let h_prime = rb.edge_count() / 2;
    let (m, m_star, factor) = bound_parameters(s.flavor(), &s.degrees());
    Ok(DistanceReport {
        kind: s.flavor().kind(),
        h_prime,
        k: report.k,
        distance: h_prime - report.k,
        exact: report.exact,
        triangular_c6_count: report.triangular_c6_count,
        m,
        m_star,
        h_prime_bound: h_prime as f64 * factor,
        m_star_bound: m_star as f64 / 2.0 * factor,
        m_bound: m as f64 * factor,
        decomposition: report.decomposition,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::DEFAULT_EDGE_BUDGET;
    use crate::graphs::{symmetric_difference, BipartiteGraph, DirectedGraph, SimpleGraph};

    const EXACT: Mode = Mode::Exact {
        edge_budget: DEFAULT_EDGE_BUDGET,
    };

    /// Matchings whose union is the single alternating cycle 0 1 2 ... 2h-1.
    fn cyclic_matchings(h: usize) -> (SimpleGraph, SimpleGraph, Circuit) {
        let n = 2 * h;
        let g1 = SimpleGraph::new(n, (0..h).map(|i| (2 * i, 2 * i + 1))).unwrap();
        let g2 = SimpleGraph::new(n, (0..h).map(|i| (2 * i + 1, (2 * i + 2) % n))).unwrap();
        let rb = symmetric_difference(&g1, &g2).unwrap();
        let c = Circuit::from_vertices(&rb, (0..n).collect()).unwrap();
        (g1, g2, c)
    }

    #[test]
    fn matching_cycles() {
        for (h, len) in [(2, 1), (3, 2), (5, 4)] {
            let (g1, g2, c) = cyclic_matchings(h);
            let seq = circuit_to_swaps(&g1, &g2, &c).unwrap();
            assert_eq!(seq.len(), len);
            assert!(verify(&seq, &g1, &g2).passed);
        }
    }

    #[test]
    fn wrong_start_fails_verification() {
        let (g1, g2, c) = cyclic_matchings(2);
        let seq = circuit_to_swaps(&g1, &g2, &c).unwrap();
        let r = verify(&seq, &g2, &g1);
        assert!(!r.passed);
        assert_eq!(r.failed_at, Some(0));
        let empty = transform(&g1, &g1, &Decomposition::default()).unwrap();
        assert!(empty.is_empty());
        assert!(verify(&empty, &g1, &g1).passed);
    }

    #[test]
    fn difference_mismatch() {
        let (g1, g2, _) = cyclic_matchings(3);
        let (_, _, c4) = cyclic_matchings(2);
        assert!(matches!(circuit_to_swaps(&g1, &g2, &c4), Err(Error::DifferenceMismatch(_))));
    }

    #[test]
    fn non_elementary_rejected() {
        // three C4s glued at vertex 0
        let g1 = SimpleGraph::new(10, [(0, 1), (2, 3), (0, 4), (5, 6), (0, 7), (8, 9)]).unwrap();
        let g2 = SimpleGraph::new(10, [(1, 2), (3, 0), (4, 5), (6, 0), (7, 8), (9, 0)]).unwrap();
        let rb = symmetric_difference(&g1, &g2).unwrap();
        let c = Circuit::from_vertices(&rb, vec![0, 1, 2, 3, 0, 4, 5, 6, 0, 7, 8, 9]).unwrap();
        assert_eq!(circuit_to_swaps(&g1, &g2, &c).unwrap_err(), Error::NotElementary);
    }

    #[test]
    fn even_repeat_is_still_elementary() {
        let g1 = SimpleGraph::new(7, [(0, 1), (2, 3), (0, 4), (5, 6)]).unwrap();
        let g2 = SimpleGraph::new(7, [(1, 2), (3, 0), (4, 5), (6, 0)]).unwrap();
        let rb = symmetric_difference(&g1, &g2).unwrap();
        let c = Circuit::from_vertices(&rb, vec![0, 1, 2, 3, 0, 4, 5, 6]).unwrap();
        assert_eq!(circuit_to_swaps(&g1, &g2, &c).unwrap().len(), 3);
    }

    #[test]
    fn two_disjoint_c4() {
        let g1 = SimpleGraph::new(8, [(0, 1), (2, 3), (4, 5), (6, 7)]).unwrap();
        let g2 = SimpleGraph::new(8, [(1, 2), (3, 0), (5, 6), (7, 4)]).unwrap();
        let rb = symmetric_difference(&g1, &g2).unwrap();
        let d = euler_decompose(&rb).unwrap();
        assert_eq!(d.circuit_count(), 2);
        let seq = transform(&g1, &g2, &d).unwrap();
        assert_eq!(seq.len(), 2);
    }

    #[test]
    fn elementary_with_crossing_repeats() {
        let g1 = SimpleGraph::new(6, [(0, 1), (2, 3), (1, 4), (5, 2)]).unwrap();
        let g2 = SimpleGraph::new(6, [(1, 2), (3, 1), (4, 5), (2, 0)]).unwrap();
        let rb = symmetric_difference(&g1, &g2).unwrap();
        let c = Circuit::from_vertices(&rb, vec![0, 1, 2, 3, 1, 4, 5, 2]).unwrap();
        assert!(is_elementary(&c));
        let seq = circuit_to_swaps(&g1, &g2, &c).unwrap();
        assert_eq!(seq.len(), 3);
    }

    #[test]
    fn bipartite_c6() {
        let g1 = BipartiteGraph::new(3, 3, [(0, 0), (1, 1), (2, 2)]).unwrap();
        let g2 = BipartiteGraph::new(3, 3, [(1, 0), (2, 1), (0, 2)]).unwrap();
        let rb = symmetric_difference(&g1, &g2).unwrap();
        let d = euler_decompose(&rb).unwrap();
        let seq = transform(&g1, &g2, &d).unwrap();
        assert_eq!(seq.len(), 2);
        for m in &seq.moves {
            let Move::C4(s) = m else { panic!() };
            assert!(s.a < 3 && s.b < 3 && s.c >= 3 && s.d >= 3);
        }
    }

    #[test]
    fn swap_inverse() {
        let s = Swap { a: 0, b: 1, c: 2, d: 3 };
        assert_eq!(s.inverse().inverse(), s);
        assert_eq!(s.inverse().removed(), s.added());
        let flavor = Flavor::Bipartite { k: 2, l: 2 };
        let t = Swap { a: 2, b: 3, c: 0, d: 1 }.normalized(flavor);
        assert_eq!(t, Swap { a: 0, b: 1, c: 2, d: 3 });
        let mut r1 = Swap { a: 2, b: 3, c: 0, d: 1 }.removed();
        let mut r2 = t.removed();
        r1.sort_unstable();
        r2.sort_unstable();
        assert_eq!(r1, r2);
    }

    fn oriented_triangles() -> (DirectedGraph, DirectedGraph) {
        (
            DirectedGraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap(),
            DirectedGraph::new(3, [(1, 0), (2, 1), (0, 2)]).unwrap(),
        )
    }

    #[test]
    fn triangular_move() {
        let (g1, g2) = oriented_triangles();
        let rb = symmetric_difference(&g1, &g2).unwrap();
        let d = euler_decompose(&rb).unwrap();
        let seq = directed_transform(&g1, &g2, &d).unwrap();
        assert_eq!(seq.moves, vec![Move::TriangularC6 { triangle: [0, 1, 2] }]);
        assert_eq!(seq.total_weight(), 2);
        assert!(verify(&seq, &g1, &g2).passed);
    }

    #[test]
    fn non_triangular_c6() {
        // 0->1, 2->3, 4->5 against 2->1, 4->3, 0->5 on n = 6
        let g1 = DirectedGraph::new(6, [(0, 1), (2, 3), (4, 5)]).unwrap();
        let g2 = DirectedGraph::new(6, [(2, 1), (4, 3), (0, 5)]).unwrap();
        let rb = symmetric_difference(&g1, &g2).unwrap();
        let d = euler_decompose(&rb).unwrap();
        assert_eq!(d.circuit_count(), 1);
        let seq = directed_transform(&g1, &g2, &d).unwrap();
        assert_eq!(seq.len(), 2);
        assert!(seq.moves.iter().all(|m| matches!(m, Move::C4(_))));
    }

    #[test]
    fn bowtie_transform() {
        let g1 = DirectedGraph::new(5, [(1, 2), (2, 0), (0, 1), (0, 3), (3, 4), (4, 0)]).unwrap();
        let g2 = DirectedGraph::new(5, [(2, 1), (0, 2), (1, 0), (3, 0), (4, 3), (0, 4)]).unwrap();
        let r = distance_report(&g1, &g2, EXACT).unwrap();
        assert_eq!((r.h_prime, r.k, r.distance), (6, 2, 4));
        assert!(r.exact);
        assert!(r.bounds_hold());
        let seq = directed_transform(&g1, &g2, &r.decomposition).unwrap();
        assert_eq!(seq.total_weight(), 4);
        assert_eq!(seq.len(), 4);
    }

    #[test]
    fn matching_distance_report() {
        let (g1, g2, _) = cyclic_matchings(5);
        let r = distance_report(&g1, &g2, EXACT).unwrap();
        assert_eq!((r.h_prime, r.k, r.distance), (5, 1, 4));
        let same = distance_report(&g1, &g1, EXACT).unwrap();
        assert_eq!((same.h_prime, same.k, same.distance), (0, 0, 0));
        let greedy = distance_report(&g1, &g2, Mode::Greedy).unwrap();
        assert!(!greedy.exact);
        assert_eq!(greedy.distance, 4);
    }

    #[test]
    fn degree_mismatch() {
        let g1 = SimpleGraph::new(4, [(0, 1)]).unwrap();
        let g2 = SimpleGraph::new(4, [(2, 3)]).unwrap();
        assert_eq!(distance_report(&g1, &g2, EXACT).unwrap_err(), Error::DegreeMismatch);
    }
}
