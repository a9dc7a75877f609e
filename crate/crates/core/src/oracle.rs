//! Exhaustive ground truth for small instances: every realization of a
//! degree sequence, and shortest move sequences over the realization graph.

use std::collections::HashMap;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::decomp::{
    exact_max_decomposition, maximum_structure_violations, shortest_circuit_violations, DEFAULT_EDGE_BUDGET,
};
use crate::error::{Error, Result};
use crate::graphs::{
    chord_symmetric_difference, BipartiteDegreeSequence, BipartiteGraph, ChordGraph, DegreeSequence,
    DirectedDegreeSequence, DirectedGraph, Flavor, Realization, SimpleGraph,
};
use crate::swapgen::{bound_parameters, transform, verify_chord};

pub const DEFAULT_NODE_BUDGET: usize = 1_000_000;

/// Largest number of vertex pairs a search state can hold.
pub const MAX_CHORDS: usize = 128;

/// Moves allowed in a directed search. Undirected and bipartite searches
/// always use plain swaps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoveSet {
    C4Only,
    /// Swaps plus triangle reversals of weight two.
    Standard,
    /// Swaps plus every alternating six-cycle at weight two.
    Permissive,
}

/// Degree data a realization list can be generated from.
pub trait DegreeSpec {
    type Graph: Realization;
    fn flavor(&self) -> Flavor;
    /// Required degree of every flat vertex.
    fn flat_degrees(&self) -> Vec<usize>;
}

impl DegreeSpec for DegreeSequence {
    type Graph = SimpleGraph;

    fn flavor(&self) -> Flavor {
        Flavor::Undirected { n: self.len() }
    }

    fn flat_degrees(&self) -> Vec<usize> {
        self.as_slice().to_vec()
    }
}

impl DegreeSpec for BipartiteDegreeSequence {
    type Graph = BipartiteGraph;

    fn flavor(&self) -> Flavor {
        Flavor::Bipartite {
            k: self.class_u.len(),
            l: self.class_w.len(),
        }
    }

    fn flat_degrees(&self) -> Vec<usize> {
        self.class_u.iter().chain(&self.class_w).copied().collect()
    }
}

impl DegreeSpec for DirectedDegreeSequence {
    type Graph = DirectedGraph;

    fn flavor(&self) -> Flavor {
        Flavor::Directed { n: self.len() }
    }

    fn flat_degrees(&self) -> Vec<usize> {
        self.out_degrees.iter().chain(&self.in_degrees).copied().collect()
    }
}

/// All labeled realizations over `flavor` with the given flat degrees, in
/// lexicographic order of their edge sets.
pub fn enumerate_chord_realizations(flavor: Flavor, degrees: &[usize], cap: usize) -> Result<Vec<ChordGraph>> {
    let nv = flavor.vertex_count();
    if degrees.len() != nv {
        return Err(Error::InvalidGraph(format!("{} degrees for {nv} vertices", degrees.len())));
    }
    let mut out = Vec::new();
    let mut residual = degrees.to_vec();
    let mut edges = Vec::new();
    enumerate_from(flavor, 0, &mut residual, &mut edges, &mut out, cap)?;
    Ok(out)
}

fn enumerate_from(
    flavor: Flavor,
    v: usize,
    residual: &mut [usize],
    edges: &mut Vec<(usize, usize)>,
    out: &mut Vec<ChordGraph>,
    cap: usize,
) -> Result<()> {
    let nv = residual.len();
    let Some(v) = (v..nv).find(|&x| residual[x] > 0) else {
        if out.len() == cap {
            return Err(Error::CapExceeded { cap });
        }
        out.push(ChordGraph::new(flavor, edges.iter().copied()).expect("chords only"));
        return Ok(());
    };
    let candidates: Vec<usize> = (v + 1..nv).filter(|&w| residual[w] > 0 && flavor.is_chord(v, w)).collect();
    let need = residual[v];
    if candidates.len() < need {
        return Ok(());
    }
    // all `need`-subsets of the candidates, lexicographic
    let mut pick: Vec<usize> = (0..need).collect();
    residual[v] = 0;
    loop {
        for &i in &pick {
            residual[candidates[i]] -= 1;
            edges.push((v, candidates[i]));
        }
        let r = enumerate_from(flavor, v + 1, residual, edges, out, cap);
        for &i in &pick {
            residual[candidates[i]] += 1;
            edges.pop();
        }
        if let Err(e) = r {
            residual[v] = need;
            return Err(e);
        }
        let Some(pos) = (0..need).rev().find(|&p| pick[p] < candidates.len() - need + p) else {
            break;
        };
        pick[pos] += 1;
        for q in pos + 1..need {
            pick[q] = pick[q - 1] + 1;
        }
    }
    residual[v] = need;
    Ok(())
}

pub fn enumerate_realizations<D: DegreeSpec>(d: &D, cap: usize) -> Result<Vec<D::Graph>> {
    enumerate_chord_realizations(d.flavor(), &d.flat_degrees(), cap)?
        .iter()
        .map(D::Graph::from_chord_graph)
        .collect()
}

// ---------------------------------------------------------------------------
// Realization graph search

/// Edge sets over one flavor encoded as bitmasks of its vertex pairs.
#[derive(Debug, Clone)]
pub struct StateSpace {
    flavor: Flavor,
    chords: Vec<(usize, usize)>,
    index: Vec<Vec<Option<u32>>>,
}

impl StateSpace {
    pub fn new(flavor: Flavor) -> Result<Self> {
        let nv = flavor.vertex_count();
        let chords: Vec<(usize, usize)> = (0..nv)
            .flat_map(|a| (a + 1..nv).map(move |b| (a, b)))
            .filter(|&(a, b)| flavor.is_chord(a, b))
            .collect();
        if chords.len() > MAX_CHORDS {
            return Err(Error::BudgetExceeded {
                what: "vertex pair",
                limit: MAX_CHORDS,
            });
        }
        let mut index = vec![vec![None; nv]; nv];
        for (i, &(a, b)) in chords.iter().enumerate() {
            index[a][b] = Some(i as u32);
            index[b][a] = Some(i as u32);
        }
        Ok(StateSpace { flavor, chords, index })
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn encode(&self, g: &ChordGraph) -> u128 {
        g.edges().fold(0, |s, (a, b)| s | 1 << self.index[a][b].expect("chord"))
    }

    pub fn decode(&self, s: u128) -> ChordGraph {
        let edges = (0..self.chords.len()).filter(|&i| s >> i & 1 == 1).map(|i| self.chords[i]);
        ChordGraph::new(self.flavor, edges).expect("chords only")
    }

    fn bit(&self, a: usize, b: usize) -> Option<u128> {
        if a == b {
            return None;
        }
        self.index[a][b].map(|i| 1u128 << i)
    }

    /// Successor states with move weights.
    fn successors(&self, s: u128, moves: MoveSet, out: &mut Vec<(u128, usize)>) {
        out.clear();
        let present: Vec<(usize, usize)> = (0..self.chords.len())
            .filter(|&i| s >> i & 1 == 1)
            .map(|i| self.chords[i])
            .collect();
        let free = |bit: Option<u128>| bit.filter(|&b| s & b == 0);
        for i in 0..present.len() {
            let (p, q) = present[i];
            for &(r, t) in &present[i + 1..] {
                if p == r || p == t || q == r || q == t {
                    continue;
                }
                let gone = self.bit(p, q).unwrap() | self.bit(r, t).unwrap();
                for (x, y) in [((p, t), (r, q)), ((p, r), (q, t))] {
                    if let (Some(b1), Some(b2)) = (free(self.bit(x.0, x.1)), free(self.bit(y.0, y.1))) {
                        out.push((s & !gone | b1 | b2, 1));
                    }
                }
            }
        }
        let Flavor::Directed { n } = self.flavor else {
            return;
        };
        match moves {
            MoveSet::C4Only => {}
            MoveSet::Standard => {
                for &(x, wy) in &present {
                    let y = wy - n;
                    if x > y {
                        continue;
                    }
                    for z in x + 1..n {
                        if z == y {
                            continue;
                        }
                        let arcs = [(x, y), (y, z), (z, x)];
                        let back = [(y, x), (z, y), (x, z)];
                        let on = |&(a, b): &(usize, usize)| self.bit(a, n + b).is_some_and(|bit| s & bit != 0);
                        if arcs.iter().all(on) && !back.iter().any(on) {
                            let gone = arcs.iter().fold(0, |m, &(a, b)| m | self.bit(a, n + b).unwrap());
                            let new = back.iter().fold(0, |m, &(a, b)| m | self.bit(a, n + b).unwrap());
                            out.push((s & !gone | new, 2));
                        }
                    }
                }
            }
            MoveSet::Permissive => {
                // edges (u1,w1), (u2,w2), (u3,w3) become (u2,w1), (u3,w2), (u1,w3)
                for (i, &(u1, w1)) in present.iter().enumerate() {
                    for (j, &(u2, w2)) in present.iter().enumerate() {
                        for (k, &(u3, w3)) in present.iter().enumerate() {
                            if i == j || j == k || i == k {
                                continue;
                            }
                            if u1 == u2 || u2 == u3 || u1 == u3 || w1 == w2 || w2 == w3 || w1 == w3 {
                                continue;
                            }
                            let (Some(b1), Some(b2), Some(b3)) =
                                (free(self.bit(u2, w1)), free(self.bit(u3, w2)), free(self.bit(u1, w3)))
                            else {
                                continue;
                            };
                            let gone = self.bit(u1, w1).unwrap() | self.bit(u2, w2).unwrap() | self.bit(u3, w3).unwrap();
                            out.push((s & !gone | b1 | b2 | b3, 2));
                        }
                    }
                }
            }
        }
    }

    /// Minimum-weight distances from `from` to every reachable state, or
    /// until `target` is settled. Weights are 1 or 2, so a bucket queue
    /// indexed by distance is exact.
    pub fn search(&self, from: u128, target: Option<u128>, moves: MoveSet, node_budget: usize) -> Result<HashMap<u128, usize>> {
        let mut dist: HashMap<u128, usize> = HashMap::new();
        let mut settled: HashMap<u128, usize> = HashMap::new();
        let mut buckets: Vec<Vec<u128>> = vec![vec![from]];
        dist.insert(from, 0);
        let mut succ = Vec::new();
        let mut d = 0;
        while d < buckets.len() {
            while let Some(s) = buckets[d].pop() {
                if settled.contains_key(&s) || dist[&s] != d {
                    continue;
                }
                settled.insert(s, d);
                if Some(s) == target {
                    return Ok(settled);
                }
                self.successors(s, moves, &mut succ);
                for &(t, w) in &succ {
                    let nd = d + w;
                    if dist.get(&t).is_some_and(|&old| old <= nd) {
                        continue;
                    }
                    if !dist.contains_key(&t) && dist.len() >= node_budget {
                        return Err(Error::BudgetExceeded {
                            what: "search node",
                            limit: node_budget,
                        });
                    }
                    dist.insert(t, nd);
                    if buckets.len() <= nd {
                        buckets.resize(nd + 1, Vec::new());
                    }
                    buckets[nd].push(t);
                }
            }
            d += 1;
        }
        Ok(settled)
    }
}

/// Swap distance (weighted for directed graphs); `None` when `g2` cannot
/// be reached with the given moves.
pub fn exact_swap_distance<G: Realization>(g1: &G, g2: &G, moves: MoveSet, node_budget: usize) -> Result<Option<usize>> {
    let (a, b) = (g1.to_chord_graph(), g2.to_chord_graph());
    if a.flavor() != b.flavor() {
        return Err(Error::FlavorMismatch);
    }
    if a.degrees() != b.degrees() {
        return Err(Error::DegreeMismatch);
    }
    let space = StateSpace::new(a.flavor())?;
    let target = space.encode(&b);
    let found = space.search(space.encode(&a), Some(target), moves, node_budget)?;
    Ok(found.get(&target).copied())
}

/// Distances from `g` to every realization reachable from it.
pub fn distances_from<G: Realization>(g: &G, moves: MoveSet, node_budget: usize) -> Result<Vec<(G, usize)>> {
    let c = g.to_chord_graph();
    let space = StateSpace::new(c.flavor())?;
    let mut found: Vec<(u128, usize)> = space.search(space.encode(&c), None, moves, node_budget)?.into_iter().collect();
    found.sort_unstable();
    found
        .into_iter()
        .map(|(s, d)| Ok((G::from_chord_graph(&space.decode(s))?, d)))
        .collect()
}

// ---------------------------------------------------------------------------
// Identity certification

#[derive(Debug, Clone, Copy)]
pub struct CertifyOptions {
    pub pair_cap: usize,
    pub seed: u64,
    pub realization_cap: usize,
    pub node_budget: usize,
    pub edge_budget: usize,
    /// Also compare against the any-six-cycle search (directed only).
    pub permissive: bool,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            pair_cap: 200,
            seed: 0,
            realization_cap: 100_000,
            node_budget: DEFAULT_NODE_BUDGET,
            edge_budget: DEFAULT_EDGE_BUDGET,
            permissive: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairOutcome {
    pub first: usize,
    pub second: usize,
    pub h_prime: usize,
    pub k: usize,
    pub oracle: Option<usize>,
    pub permissive: Option<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CertifyReport {
    pub realizations: usize,
    pub pairs: Vec<PairOutcome>,
    /// Pairs where the search distance differs from `H' - k`.
    pub identity_violations: Vec<String>,
    /// Structural properties of the maximum decompositions.
    pub structure_violations: Vec<String>,
    pub bound_violations: Vec<String>,
    /// Permissive and restricted directed searches disagree.
    pub move_set_violations: Vec<String>,
    /// Generated sequences that failed replay or had the wrong weight.
    pub transform_violations: Vec<String>,
}

impl CertifyReport {
    pub fn is_clean(&self) -> bool {
        self.identity_violations.is_empty()
            && self.structure_violations.is_empty()
            && self.bound_violations.is_empty()
            && self.move_set_violations.is_empty()
            && self.transform_violations.is_empty()
    }
}

/// Pair indices `(i, j)`, `i < j`; a seeded sample of `cap` of them when
/// there are more.
pub fn sample_pairs(count: usize, cap: usize, seed: u64) -> Vec<(usize, usize)> {
    let all: Vec<(usize, usize)> = (0..count).flat_map(|i| (i + 1..count).map(move |j| (i, j))).collect();
    if all.len() <= cap {
        return all;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut picked: Vec<(usize, usize)> = sample(&mut rng, all.len(), cap).into_iter().map(|i| all[i]).collect();
    picked.sort_unstable();
    picked
}

type Distances = HashMap<u128, usize>;

/// Checks `dist = H' - c` on pairs of realizations of `d`, along with the
/// structure of every maximum decomposition, the general upper bounds and
/// the generated move sequences.
pub fn certify_identity<D: DegreeSpec>(d: &D, opts: &CertifyOptions) -> Result<CertifyReport> {
    let flavor = d.flavor();
    let graphs = enumerate_chord_realizations(flavor, &d.flat_degrees(), opts.realization_cap)?;
    let space = StateSpace::new(flavor)?;
    let directed = matches!(flavor, Flavor::Directed { .. });
    let moves = if directed { MoveSet::Standard } else { MoveSet::C4Only };
    let mut report = CertifyReport {
        realizations: graphs.len(),
        ..CertifyReport::default()
    };
    let pairs = sample_pairs(graphs.len(), opts.pair_cap, opts.seed);
    let mut cache: Option<(usize, Distances, Option<Distances>)> = None;
    for (i, j) in pairs {
        if cache.as_ref().is_none_or(|c| c.0 != i) {
            let from = space.encode(&graphs[i]);
            let restricted = space.search(from, None, moves, opts.node_budget)?;
            let permissive = if directed && opts.permissive {
                Some(space.search(from, None, MoveSet::Permissive, opts.node_budget)?)
            } else {
                None
            };
            cache = Some((i, restricted, permissive));
        }
        let (_, restricted, permissive) = cache.as_ref().unwrap();
        let (g1, g2) = (&graphs[i], &graphs[j]);
        let target = space.encode(g2);
        let oracle = restricted.get(&target).copied();
        let loose = permissive.as_ref().and_then(|p| p.get(&target).copied());

        let rb = chord_symmetric_difference(g1, g2)?;
        let exact = exact_max_decomposition(&rb, opts.edge_budget)?;
        let h_prime = rb.edge_count() / 2;
        let predicted = h_prime - exact.k;
        let tag = format!("{:?} realizations {i} and {j}", d.flat_degrees());

        if oracle != Some(predicted) {
            report
                .identity_violations
                .push(format!("{tag}: search {oracle:?}, H' - c = {h_prime} - {} = {predicted}", exact.k));
        }
        if permissive.is_some() && loose != oracle {
            report
                .move_set_violations
                .push(format!("{tag}: permissive {loose:?}, restricted {oracle:?}"));
        }
        for v in maximum_structure_violations(&rb, &exact.decomposition) {
            report.structure_violations.push(format!("{tag}: {v}"));
        }
        if !directed {
            for v in shortest_circuit_violations(&rb, &exact.decomposition) {
                report.structure_violations.push(format!("{tag}: {v}"));
            }
        }
        if let Some(dist) = oracle {
            let (m, m_star, factor) = bound_parameters(flavor, &g1.degrees());
            let chain = [dist as f64, h_prime as f64 * factor, m_star as f64 / 2.0 * factor, m as f64 * factor];
            if chain.windows(2).any(|w| w[0] > w[1] + 1e-9) {
                report.bound_violations.push(format!("{tag}: chain {chain:?} not increasing"));
            }
        }
        match transform(g1, g2, &exact.decomposition) {
            Ok(seq) => {
                let ok = verify_chord(&seq, g1, g2).passed && seq.total_weight() == predicted;
                if !ok {
                    report.transform_violations.push(format!("{tag}: weight {} != {predicted}", seq.total_weight()));
                }
            }
            Err(e) => report.transform_violations.push(format!("{tag}: {e}")),
        }
        report.pairs.push(PairOutcome {
            first: i,
            second: j,
            h_prime,
            k: exact.k,
            oracle,
            permissive: loose,
        });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_count(flavor: Flavor, degrees: &[usize]) -> usize {
        let space = StateSpace::new(flavor).unwrap();
        let m = space.chords.len();
        (0u64..1 << m).filter(|&mask| space.decode(mask as u128).degrees() == degrees).count()
    }

    #[test]
    fn enumeration_examples() {
        let d = DegreeSequence::new(vec![1, 1, 1, 1]);
        assert_eq!(enumerate_realizations(&d, 100).unwrap().len(), 3);
        let d = DegreeSequence::new(vec![2, 2, 2, 2]);
        assert_eq!(enumerate_realizations(&d, 100).unwrap().len(), brute_count(Flavor::Undirected { n: 4 }, &[2; 4]));
        assert_eq!(enumerate_realizations(&d, 100).unwrap().len(), 3);
        let t = DirectedDegreeSequence::new(vec![1, 1, 1], vec![1, 1, 1]);
        assert_eq!(enumerate_realizations(&t, 100).unwrap().len(), 2);
        assert_eq!(enumerate_realizations(&d, 2).unwrap_err(), Error::CapExceeded { cap: 2 });
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for degrees in [vec![2, 2, 1, 1, 2], vec![3, 2, 2, 2, 1], vec![1, 1, 2, 2, 2]] {
            let d = DegreeSequence::new(degrees.clone());
            let n = degrees.len();
            assert_eq!(
                enumerate_realizations(&d, 10_000).unwrap().len(),
                brute_count(Flavor::Undirected { n }, &degrees)
            );
        }
        let dd = DirectedDegreeSequence::new(vec![2, 1, 1, 0], vec![1, 1, 1, 1]);
        let flat = dd.flat_degrees();
        assert_eq!(enumerate_realizations(&dd, 10_000).unwrap().len(), brute_count(dd.flavor(), &flat));
        let bd = BipartiteDegreeSequence::new(vec![2, 1, 1], vec![1, 2, 1]);
        assert_eq!(
            enumerate_realizations(&bd, 10_000).unwrap().len(),
            brute_count(bd.flavor(), &bd.flat_degrees())
        );
    }

    #[test]
    fn triangle_search() {
        let g1 = DirectedGraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let g2 = DirectedGraph::new(3, [(1, 0), (2, 1), (0, 2)]).unwrap();
        assert_eq!(exact_swap_distance(&g1, &g1, MoveSet::Standard, 100).unwrap(), Some(0));
        assert_eq!(exact_swap_distance(&g1, &g2, MoveSet::Standard, 100).unwrap(), Some(2));
        assert_eq!(exact_swap_distance(&g1, &g2, MoveSet::C4Only, 100).unwrap(), None);
        assert_eq!(exact_swap_distance(&g1, &g2, MoveSet::Permissive, 100).unwrap(), Some(2));
    }

    #[test]
    fn budget_is_reported() {
        let d = DegreeSequence::new(vec![2; 6]);
        let gs = enumerate_realizations(&d, 1000).unwrap();
        assert_eq!(
            exact_swap_distance(&gs[0], &gs[gs.len() - 1], MoveSet::C4Only, 3).unwrap_err(),
            Error::BudgetExceeded {
                what: "search node",
                limit: 3
            }
        );
    }

    #[test]
    fn certify_small() {
        for degrees in [vec![1, 1, 1, 1], vec![2, 2, 2, 2], vec![2, 2, 2, 2, 2, 2]] {
            let r = certify_identity(&DegreeSequence::new(degrees), &CertifyOptions::default()).unwrap();
            assert!(r.is_clean(), "{r:?}");
        }
        let bowtie = DirectedDegreeSequence::new(vec![2, 1, 1, 1, 1], vec![2, 1, 1, 1, 1]);
        let opts = CertifyOptions {
            pair_cap: 30,
            ..CertifyOptions::default()
        };
        let r = certify_identity(&bowtie, &opts).unwrap();
        assert!(r.is_clean(), "{r:?}");
    }

    #[test]
    fn sampling_is_deterministic() {
        assert_eq!(sample_pairs(4, 100, 1).len(), 6);
        let a = sample_pairs(50, 20, 7);
        assert_eq!(a, sample_pairs(50, 20, 7));
        assert_eq!(a.len(), 20);
    }
}
