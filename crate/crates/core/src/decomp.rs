//! Refining alternating circuit decompositions toward maximum cardinality.
//!
//! A *repeat* of a circuit is a pair of positions `i < j` holding the same
//! vertex. Repeats at even distance split the circuit in two; two crossing
//! repeats `i < k < j < l` can be rerouted so that an even repeat appears.
//! Circuits with neither are elementary.

use std::collections::{HashMap, HashSet};
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graphs::Flavor;
use crate::rbgraph::{is_elementary, Circuit, Color, Decomposition, EdgeId, RedBlueGraph};

/// Default edge budget for [`exact_max_decomposition`].
pub const DEFAULT_EDGE_BUDGET: usize = 24;

/// Hard ceiling of the exhaustive search (residual edge sets are `u64` masks).
pub const MAX_EDGE_BUDGET: usize = 64;

/// Sub-circuit search effort per circuit in [`greedy_maximize`].
const GREEDY_NODE_LIMIT: usize = 20_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionReport {
    pub decomposition: Decomposition,
    pub k: usize,
    /// Only exhaustive search sets this.
    pub exact: bool,
    /// `⌈2|E| / 3n⌉` with `n` the vertex count of the red-blue graph.
    pub lower_bound: usize,
    /// Directed flavor only.
    pub triangular_c6_count: Option<usize>,
}

impl DecompositionReport {
    fn new(g: &RedBlueGraph, decomposition: Decomposition, exact: bool) -> Self {
        let triangular_c6_count = match g.flavor() {
            Flavor::Directed { .. } => Some(
                decomposition
                    .circuits()
                    .iter()
                    .filter(|c| is_triangular_c6(c, g.flavor()))
                    .count(),
            ),
            _ => None,
        };
        DecompositionReport {
            k: decomposition.circuit_count(),
            decomposition,
            exact,
            lower_bound: lower_bound(g),
            triangular_c6_count,
        }
    }
}

/// `⌈2|E| / 3n⌉`.
pub fn lower_bound(g: &RedBlueGraph) -> usize {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    (2 * g.edge_count()).div_ceil(3 * n)
}

/// A six-cycle of the bipartite representation whose three diagonals are
/// non-chords, i.e. an oriented triangle against its reversal.
pub fn is_triangular_c6(c: &Circuit, flavor: Flavor) -> bool {
    if c.len() != 6 || !matches!(flavor, Flavor::Directed { .. }) {
        return false;
    }
    let v = c.vertices();
    (0..6).all(|i| flavor.partner(v[i]) == Some(v[(i + 3) % 6]))
}

/// Position pairs `(i, j)`, `i < j`, holding the same vertex.
fn repeats(c: &Circuit) -> Vec<(usize, usize)> {
    let mut first: HashMap<usize, Vec<usize>> = HashMap::new();
    for (i, &v) in c.vertices().iter().enumerate() {
        first.entry(v).or_default().push(i);
    }
    let mut out = Vec::new();
    for positions in first.values() {
        for (x, &i) in positions.iter().enumerate() {
            for &j in &positions[x + 1..] {
                out.push((i, j));
            }
        }
    }
    out.sort_unstable();
    out
}

/// Splits `c` at the first repeat of even distance into `v_i..v_j` and
/// `v_j..v_i`.
pub fn split_even_repeat(c: &Circuit) -> Option<(Circuit, Circuit)> {
    let (i, j) = repeats(c).into_iter().find(|&(i, j)| (j - i) % 2 == 0)?;
    let v = c.vertices();
    let e = c.edges();
    let inner = Circuit::from_parts(v[i..j].to_vec(), e[i..j].to_vec());
    let outer_v: Vec<usize> = v[j..].iter().chain(&v[..i]).copied().collect();
    let outer_e: Vec<EdgeId> = e[j..].iter().chain(&e[..i]).copied().collect();
    Some((inner, Circuit::from_parts(outer_v, outer_e)))
}

/// Two repeats `(i, j)` and `(k, l)` with `i < k < j < l`.
fn crossing_repeats(c: &Circuit) -> Option<((usize, usize), (usize, usize))> {
    let reps = repeats(c);
    for &(i, j) in &reps {
        for &(k, l) in &reps {
            if i < k && k < j && j < l {
                return Some(((i, j), (k, l)));
            }
        }
    }
    None
}

/// Reverses the closed sub-walk between the two occurrences `i < j` of one
/// vertex. The edge set is unchanged and alternation is preserved because
/// the sub-walk has odd length.
fn reroute(c: &Circuit, i: usize, j: usize) -> Circuit {
    let mut v = c.vertices().to_vec();
    let mut e = c.edges().to_vec();
    v[i + 1..j].reverse();
    e[i..j].reverse();
    Circuit::from_parts(v, e)
}

/// Splits and reroutes one circuit until every piece is elementary.
fn elementarize_circuit(c: Circuit) -> Vec<Circuit> {
    let mut out = Vec::new();
    let mut stack = vec![c];
    while let Some(c) = stack.pop() {
        if let Some((a, b)) = split_even_repeat(&c) {
            stack.push(b);
            stack.push(a);
        } else if let Some(((i, j), _)) = crossing_repeats(&c) {
            stack.push(reroute(&c, i, j));
        } else {
            debug_assert!(is_elementary(&c), "{:?}", c.vertices());
            out.push(c);
        }
    }
    out
}

/// Every output circuit is elementary; `k` never decreases and the edge set
/// is unchanged.
pub fn elementarize(d: &Decomposition) -> Decomposition {
    let circuits = d
        .circuits()
        .iter()
        .cloned()
        .flat_map(elementarize_circuit)
        .collect();
    Decomposition::from_circuits(circuits)
}

// ---------------------------------------------------------------------------
// Circuit enumeration

/// Callback receiving each circuit's vertices and edges.
type Visit<'v> = dyn FnMut(&[usize], &[EdgeId]) -> ControlFlow<()> + 'v;

/// Enumerates alternating circuits without even-distance repeats that start
/// with edge `first` traversed from its lower endpoint, using only edges
/// accepted by `allowed`.
struct CircuitWalker<'a, F> {
    g: &'a RedBlueGraph,
    allowed: F,
    max_len: usize,
    node_limit: usize,
    nodes: usize,
    used: Vec<bool>,
    // per vertex: number of occurrences and position of the first one
    count: Vec<u8>,
    pos: Vec<usize>,
    vertices: Vec<usize>,
    edges: Vec<EdgeId>,
}

impl<'a, F: Fn(EdgeId) -> bool> CircuitWalker<'a, F> {
    fn new(g: &'a RedBlueGraph, allowed: F, max_len: usize, node_limit: usize) -> Self {
        CircuitWalker {
            g,
            allowed,
            max_len,
            node_limit,
            nodes: 0,
            used: vec![false; g.edge_count()],
            count: vec![0; g.vertex_count()],
            pos: vec![0; g.vertex_count()],
            vertices: Vec::new(),
            edges: Vec::new(),
        }
    }

    /// Returns `Break` when the callback asked to stop or the node limit ran out.
    fn run(&mut self, first: EdgeId, visit: &mut Visit<'_>) -> ControlFlow<()> {
        let e = self.g.edge(first);
        self.used[first] = true;
        self.count[e.a] = 1;
        self.pos[e.a] = 0;
        self.vertices.push(e.a);
        self.edges.push(first);
        let flow = self.step(e.a, e.b, e.color.opposite(), visit);
        self.vertices.pop();
        self.edges.pop();
        self.count[e.a] = 0;
        self.used[first] = false;
        flow
    }

    fn step(
        &mut self,
        start: usize,
        cur: usize,
        need: Color,
        visit: &mut Visit<'_>,
    ) -> ControlFlow<()> {
        self.nodes += 1;
        if self.nodes > self.node_limit {
            return ControlFlow::Break(());
        }
        let p = self.vertices.len();
        if cur == start && p.is_multiple_of(2) {
            return visit(&self.vertices, &self.edges);
        }
        if p >= self.max_len {
            return ControlFlow::Continue(());
        }
        match self.count[cur] {
            0 => self.pos[cur] = p,
            1 if (p - self.pos[cur]) % 2 == 1 => {}
            _ => return ControlFlow::Continue(()),
        }
        self.count[cur] += 1;
        self.vertices.push(cur);
        let g = self.g;
        let mut flow = ControlFlow::Continue(());
        for &(next, id) in g.neighbors(cur) {
            if self.used[id] || g.edge(id).color != need || !(self.allowed)(id) {
                continue;
            }
            self.used[id] = true;
            self.edges.push(id);
            flow = self.step(start, next, need.opposite(), visit);
            self.edges.pop();
            self.used[id] = false;
            if flow.is_break() {
                break;
            }
        }
        self.vertices.pop();
        self.count[cur] -= 1;
        flow
    }
}

/// Length of a shortest alternating circuit of `g`, or `None` when `g` has
/// no edges.
pub fn shortest_circuit_len(g: &RedBlueGraph, node_limit: usize) -> Result<Option<usize>> {
    let mut budget = node_limit;
    let mut max_len = 4;
    while max_len <= g.edge_count() {
        for first in 0..g.edge_count() {
            let mut walker = CircuitWalker::new(g, |_| true, max_len, budget);
            let mut found = None;
            let flow = walker.run(first, &mut |_, e| {
                found = Some(e.len());
                ControlFlow::Break(())
            });
            if found.is_some() {
                return Ok(found);
            }
            budget = budget.saturating_sub(walker.nodes);
            if flow.is_break() || budget == 0 {
                return Err(Error::BudgetExceeded {
                    what: "circuit search node",
                    limit: node_limit,
                });
            }
        }
        max_len += 2;
    }
    Ok(None)
}

// ---------------------------------------------------------------------------
// Greedy

/// Shortest proper alternating sub-circuit of `c`, searched by increasing
/// length within a node budget.
fn proper_subcircuit(g: &RedBlueGraph, c: &Circuit) -> Option<Circuit> {
    let mut member = vec![false; g.edge_count()];
    for &id in c.edges() {
        member[id] = true;
    }
    let mut budget = GREEDY_NODE_LIMIT;
    let mut max_len = 4;
    while max_len < c.len() && budget > 0 {
        for &first in c.edges() {
            let mut walker = CircuitWalker::new(g, |id| member[id], max_len, budget);
            let mut found = None;
            let _ = walker.run(first, &mut |v, e| {
                if e.len() < c.len() {
                    found = Some(Circuit::from_parts(v.to_vec(), e.to_vec()));
                    ControlFlow::Break(())
                } else {
                    ControlFlow::Continue(())
                }
            });
            budget = budget.saturating_sub(walker.nodes);
            if found.is_some() {
                return found;
            }
            if budget == 0 {
                break;
            }
        }
        max_len += 2;
    }
    None
}

/// Alternating Euler walk restricted to `ids` (which must be balanced).
pub(crate) fn euler_on(g: &RedBlueGraph, ids: &[EdgeId]) -> Vec<Circuit> {
    let mut avail = vec![false; g.edge_count()];
    for &id in ids {
        avail[id] = true;
    }
    let mut left = ids.len();
    let mut out = Vec::new();
    while left > 0 {
        let pivot = ids
            .iter()
            .filter(|&&id| avail[id])
            .map(|&id| g.edge(id).a)
            .min()
            .expect("edges left");
        let mut cur = pivot;
        let first = g
            .neighbors(pivot)
            .iter()
            .find(|&&(_, id)| avail[id])
            .map(|&(_, id)| g.edge(id).color)
            .expect("pivot has an edge");
        let mut need = first;
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        loop {
            let &(next, id) = g
                .neighbors(cur)
                .iter()
                .find(|&&(_, id)| avail[id] && g.edge(id).color == need)
                .expect("balanced edge set");
            avail[id] = false;
            left -= 1;
            vertices.push(cur);
            edges.push(id);
            cur = next;
            need = need.opposite();
            if cur == pivot && need == first {
                break;
            }
        }
        out.push(Circuit::from_parts(vertices, edges));
    }
    out
}

/// Heuristic maximization: elementarize, then repeatedly carve the shortest
/// proper alternating sub-circuit out of the longest circuits. Directed
/// graphs additionally have triangular six-cycles that kiss another cycle
/// rejoined. `k` never decreases; the result is never flagged exact.
pub fn greedy_maximize(g: &RedBlueGraph, d: &Decomposition) -> DecompositionReport {
    let mut circuits = elementarize(d).into_circuits();
    loop {
        let mut order: Vec<usize> = (0..circuits.len()).collect();
        order.sort_by(|&a, &b| circuits[b].len().cmp(&circuits[a].len()).then(a.cmp(&b)));
        let mut improved = false;
        for idx in order {
            if circuits[idx].len() <= 4 {
                continue;
            }
            let Some(sub) = proper_subcircuit(g, &circuits[idx]) else {
                continue;
            };
            let taken: HashSet<EdgeId> = sub.edges().iter().copied().collect();
            let rest: Vec<EdgeId> = circuits[idx].edges().iter().copied().filter(|id| !taken.contains(id)).collect();
            let mut pieces = elementarize_circuit(sub);
            for c in euler_on(g, &rest) {
                pieces.extend(elementarize_circuit(c));
            }
            circuits.splice(idx..=idx, pieces);
            improved = true;
            break;
        }
        if !improved {
            break;
        }
    }
    if matches!(g.flavor(), Flavor::Directed { .. }) {
        circuits = untangle_triangles(g, circuits);
    }
    DecompositionReport::new(g, Decomposition::from_circuits(circuits), false)
}

/// Some directed vertex `x` with both `u_x` and `w_x` on both cycles.
fn kissing_vertex(flavor: Flavor, a: &Circuit, b: &Circuit) -> Option<usize> {
    let Flavor::Directed { n } = flavor else {
        return None;
    };
    let on_a: HashSet<usize> = a.vertices().iter().copied().collect();
    let on_b: HashSet<usize> = b.vertices().iter().copied().collect();
    (0..n).find(|&x| on_a.contains(&x) && on_a.contains(&(x + n)) && on_b.contains(&x) && on_b.contains(&(x + n)))
}

fn untangle_triangles(g: &RedBlueGraph, mut circuits: Vec<Circuit>) -> Vec<Circuit> {
    let flavor = g.flavor();
    let mut stuck: HashSet<(Vec<usize>, Vec<usize>)> = HashSet::new();
    'outer: loop {
        for i in 0..circuits.len() {
            if !is_triangular_c6(&circuits[i], flavor) {
                continue;
            }
            for j in 0..circuits.len() {
                if i == j {
                    continue;
                }
                let Some(x) = kissing_vertex(flavor, &circuits[i], &circuits[j]) else {
                    continue;
                };
                let key = (circuits[i].vertices().to_vec(), circuits[j].vertices().to_vec());
                if stuck.contains(&key) {
                    continue;
                }
                let (a, b) = rejoin(g, &circuits[i], &circuits[j], x);
                let replacement: Vec<Circuit> = if a.is_cycle() && b.is_cycle() {
                    if is_triangular_c6(&a, flavor) || is_triangular_c6(&b, flavor) {
                        stuck.insert(key);
                        continue;
                    }
                    vec![a, b]
                } else {
                    // shared vertices besides x: splitting gains a circuit
                    let mut v = elementarize_circuit(a);
                    v.extend(elementarize_circuit(b));
                    v
                };
                let (lo, hi) = (i.min(j), i.max(j));
                circuits.remove(hi);
                circuits.remove(lo);
                circuits.splice(lo..lo, replacement);
                continue 'outer;
            }
        }
        break;
    }
    circuits
}

/// Rotates cycle `c` to start at `u`; returns the two `u -> w` trails as
/// `(vertices, edges)`, the one starting with a red edge first.
fn trails(c: &Circuit, u: usize, w: usize, g: &RedBlueGraph) -> [(Vec<usize>, Vec<EdgeId>); 2] {
    let pu = c.vertices().iter().position(|&v| v == u).expect("u on cycle");
    let c = c.rotated(pu);
    let len = c.len();
    let pw = c.vertices().iter().position(|&v| v == w).expect("w on cycle");
    let fwd = (c.vertices()[..=pw].to_vec(), c.edges()[..pw].to_vec());
    let mut bv = vec![u];
    bv.extend((pw..len).rev().map(|i| c.vertices()[i]));
    let be: Vec<EdgeId> = (pw..len).rev().map(|i| c.edges()[i]).collect();
    let back = (bv, be);
    if g.edge(fwd.1[0]).color == Color::Red {
        [fwd, back]
    } else {
        [back, fwd]
    }
}

/// Pairs the red-starting trail of one cycle with the blue-starting trail of
/// the other at `u_x` and `w_x`.
fn rejoin(g: &RedBlueGraph, c1: &Circuit, c2: &Circuit, x: usize) -> (Circuit, Circuit) {
    let Flavor::Directed { n } = g.flavor() else {
        unreachable!("kissing is defined for directed graphs");
    };
    let (u, w) = (x, x + n);
    let [a_red, a_blue] = trails(c1, u, w, g);
    let [b_red, b_blue] = trails(c2, u, w, g);
    let join = |(pv, pe): &(Vec<usize>, Vec<EdgeId>), (qv, qe): &(Vec<usize>, Vec<EdgeId>)| {
        let mut v = pv.clone();
        v.extend(qv[1..qv.len() - 1].iter().rev());
        let mut e = pe.clone();
        e.extend(qe.iter().rev());
        Circuit::from_parts(v, e)
    };
    (join(&a_red, &b_blue), join(&a_blue, &b_red))
}

/// Recombines the four `u_x`/`w_x` trails of two kissing cycles into two
/// cycles over the same edges, neither of them a triangular six-cycle.
pub fn resolve_kissing(g: &RedBlueGraph, c1: &Circuit, c2: &Circuit, x: usize) -> Result<(Circuit, Circuit)> {
    let flavor = g.flavor();
    let Flavor::Directed { n } = flavor else {
        return Err(Error::NotKissing { vertex: x });
    };
    let both = |c: &Circuit| c.is_cycle() && c.vertices().contains(&x) && c.vertices().contains(&(x + n));
    if x >= n || !both(c1) || !both(c2) {
        return Err(Error::NotKissing { vertex: x });
    }
    let (a, b) = rejoin(g, c1, c2, x);
    for c in [&a, &b] {
        if !c.is_cycle() || is_triangular_c6(c, flavor) {
            return Err(Error::KissingOverlap { vertex: x });
        }
        Circuit::from_vertices(g, c.vertices().to_vec())?;
    }
    Ok((a, b))
}

// ---------------------------------------------------------------------------
// Exact search

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Score {
    circuits: usize,
    triangular: usize,
    shortest: usize,
}

impl Score {
    const EMPTY: Score = Score {
        circuits: 0,
        triangular: 0,
        shortest: usize::MAX,
    };

    fn key(&self) -> (usize, std::cmp::Reverse<usize>, std::cmp::Reverse<usize>) {
        (self.circuits, std::cmp::Reverse(self.triangular), std::cmp::Reverse(self.shortest))
    }

    fn with(&self, len: usize, triangular: bool) -> Score {
        Score {
            circuits: self.circuits + 1,
            triangular: self.triangular + usize::from(triangular),
            shortest: self.shortest.min(len),
        }
    }
}

struct Candidate {
    mask: u64,
    vertices: Vec<usize>,
    edges: Vec<EdgeId>,
    triangular: bool,
}

struct ExactSearch<'g> {
    g: &'g RedBlueGraph,
    memo: HashMap<u64, Score>,
}

impl<'g> ExactSearch<'g> {
    /// All distinct circuits through the lowest edge of `mask`.
    fn candidates(&self, mask: u64) -> Vec<Candidate> {
        let first = mask.trailing_zeros() as EdgeId;
        let mut walker = CircuitWalker::new(self.g, |id| mask >> id & 1 == 1, usize::MAX, usize::MAX);
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        let flavor = self.g.flavor();
        let _ = walker.run(first, &mut |v, e| {
            let m = e.iter().fold(0u64, |m, &id| m | 1 << id);
            if seen.insert(m) {
                let c = Circuit::from_parts(v.to_vec(), e.to_vec());
                out.push(Candidate {
                    mask: m,
                    triangular: is_triangular_c6(&c, flavor),
                    vertices: v.to_vec(),
                    edges: e.to_vec(),
                });
            }
            ControlFlow::Continue(())
        });
        out
    }

    fn best(&mut self, mask: u64) -> Score {
        if mask == 0 {
            return Score::EMPTY;
        }
        if let Some(&s) = self.memo.get(&mask) {
            return s;
        }
        let edges = mask.count_ones() as usize;
        let ideal = Score {
            circuits: edges / 4,
            triangular: 0,
            shortest: 4,
        };
        let mut best: Option<Score> = None;
        for cand in self.candidates(mask) {
            let s = self.best(mask & !cand.mask).with(cand.edges.len(), cand.triangular);
            if best.is_none_or(|b| s.key() > b.key()) {
                best = Some(s);
                if s == ideal {
                    break;
                }
            }
        }
        // A balanced non-empty edge set always contains a circuit.
        let best = best.expect("balanced residual has a circuit");
        self.memo.insert(mask, best);
        best
    }

    fn reconstruct(&mut self, mut mask: u64) -> Vec<Circuit> {
        let mut out = Vec::new();
        while mask != 0 {
            let target = self.best(mask);
            let pick = self
                .candidates(mask)
                .into_iter()
                .find(|c| self.best(mask & !c.mask).with(c.edges.len(), c.triangular) == target)
                .expect("optimal choice is among the candidates");
            mask &= !pick.mask;
            out.push(Circuit::from_parts(pick.vertices, pick.edges));
        }
        out
    }
}

/// Maximum-cardinality alternating circuit decomposition by exhaustive
/// search over residual edge sets. Among maximum decompositions it prefers
/// fewer triangular six-cycles (directed flavor), then a shorter shortest
/// circuit.
pub fn exact_max_decomposition(g: &RedBlueGraph, budget: usize) -> Result<DecompositionReport> {
    let limit = budget.min(MAX_EDGE_BUDGET);
    if g.edge_count() > limit {
        return Err(Error::BudgetExceeded { what: "edge", limit });
    }
    g.check_balanced()?;
    let mut search = ExactSearch {
        g,
        memo: HashMap::new(),
    };
    let full = if g.edge_count() == 64 {
        u64::MAX
    } else {
        (1u64 << g.edge_count()) - 1
    };
    let circuits = search.reconstruct(full);
    Ok(DecompositionReport::new(g, Decomposition::from_circuits(circuits), true))
}

// ---------------------------------------------------------------------------
// Structural checks

/// Properties every maximum decomposition has; returns one message per
/// violated property. Empty means all hold.
pub fn maximum_structure_violations(g: &RedBlueGraph, d: &Decomposition) -> Vec<String> {
    let mut out = Vec::new();
    let n = g.vertex_count();
    for (ci, c) in d.circuits().iter().enumerate() {
        let t = c.half_length();
        let unique = c.unique_vertex_count();
        if 3 * unique < 2 * t + 6 {
            out.push(format!("circuit {ci}: {unique} unique vertices < 2t/3 + 2 with t = {t}"));
        }
        if 4 * t > 3 * n.saturating_sub(1) {
            out.push(format!("circuit {ci}: length {} > 3(n-1)/2 with n = {n}", 2 * t));
        }
        if !is_elementary(c) {
            out.push(format!("circuit {ci}: not elementary"));
        }
        if repeats(c).iter().any(|&(i, j)| (j - i) % 2 == 0) {
            out.push(format!("circuit {ci}: repeat at even distance"));
        }
        if crossing_repeats(c).is_some() {
            out.push(format!("circuit {ci}: crossing repeats"));
        }
    }
    if d.circuit_count() < lower_bound(g) {
        out.push(format!("k = {} below ⌈2|E|/3n⌉ = {}", d.circuit_count(), lower_bound(g)));
    }
    if matches!(g.flavor(), Flavor::Directed { .. }) {
        for (i, a) in d.circuits().iter().enumerate() {
            if !is_triangular_c6(a, g.flavor()) {
                continue;
            }
            for (j, b) in d.circuits().iter().enumerate() {
                if i != j && kissing_vertex(g.flavor(), a, b).is_some() {
                    out.push(format!("triangular circuit {i} kisses circuit {j}"));
                }
            }
        }
    }
    out
}

/// For the shortest circuit of a decomposition that minimizes the shortest
/// circuit length among maximum ones: no edge of another circuit may join
/// two of its positions at odd distance.
pub fn shortest_circuit_violations(g: &RedBlueGraph, d: &Decomposition) -> Vec<String> {
    let Some((si, shortest)) = d.circuits().iter().enumerate().min_by_key(|(_, c)| c.len()) else {
        return Vec::new();
    };
    let mut positions: HashMap<usize, Vec<usize>> = HashMap::new();
    for (p, &v) in shortest.vertices().iter().enumerate() {
        positions.entry(v).or_default().push(p);
    }
    let mut out = Vec::new();
    for (ci, c) in d.circuits().iter().enumerate() {
        if ci == si {
            continue;
        }
        for &id in c.edges() {
            let e = g.edge(id);
            let (Some(pa), Some(pb)) = (positions.get(&e.a), positions.get(&e.b)) else {
                continue;
            };
            if pa.iter().any(|&i| pb.iter().any(|&j| i.abs_diff(j) % 2 == 1)) {
                out.push(format!("edge {id} of circuit {ci} splits the shortest circuit into odd trails"));
            }
        }
    }
    out
}
