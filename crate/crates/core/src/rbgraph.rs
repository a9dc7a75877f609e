//! Red-blue graphs, alternating circuits and Euler-style decompositions.

use std::collections::HashMap;

use crate::decomp::split_even_repeat;
use crate::error::{Error, Result};
use crate::graphs::{canonical, Flavor};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn opposite(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

pub type EdgeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RbEdge {
    pub a: usize,
    pub b: usize,
    pub color: Color,
}

impl RbEdge {
    pub fn other(&self, v: usize) -> usize {
        if v == self.a {
            self.b
        } else {
            self.a
        }
    }
}

/// Edge-colored simple graph over a flavored vertex set. Edge ids follow
/// the sorted order of the canonical endpoint pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RedBlueGraph {
    flavor: Flavor,
    edges: Vec<RbEdge>,
    index: HashMap<(usize, usize), EdgeId>,
    adj: Vec<Vec<(usize, EdgeId)>>,
}

impl RedBlueGraph {
    pub fn new(flavor: Flavor, edges: impl IntoIterator<Item = (usize, usize, Color)>) -> Result<Self> {
        let mut list: Vec<RbEdge> = Vec::new();
        for (a, b, color) in edges {
            if !flavor.is_chord(a, b) {
                return Err(Error::InvalidGraph(format!(
                    "{}-{} cannot hold an edge",
                    flavor.label(a),
                    flavor.label(b)
                )));
            }
            let (a, b) = canonical(a, b);
            list.push(RbEdge { a, b, color });
        }
        list.sort_by_key(|e| (e.a, e.b));
        let mut index = HashMap::with_capacity(list.len());
        let mut adj = vec![Vec::new(); flavor.vertex_count()];
        for (id, e) in list.iter().enumerate() {
            if index.insert((e.a, e.b), id).is_some() {
                return Err(Error::InvalidGraph(format!(
                    "duplicate edge {}-{}",
                    flavor.label(e.a),
                    flavor.label(e.b)
                )));
            }
            adj[e.a].push((e.b, id));
            adj[e.b].push((e.a, id));
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        Ok(RedBlueGraph {
            flavor,
            edges: list,
            index,
            adj,
        })
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn vertex_count(&self) -> usize {
        self.flavor.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[RbEdge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> RbEdge {
        self.edges[id]
    }

    pub fn edge_between(&self, a: usize, b: usize) -> Option<EdgeId> {
        self.index.get(&canonical(a, b)).copied()
    }

    /// `(neighbor, edge)` pairs sorted by neighbor.
    pub fn neighbors(&self, v: usize) -> &[(usize, EdgeId)] {
        &self.adj[v]
    }

    pub fn red_count(&self) -> usize {
        self.edges.iter().filter(|e| e.color == Color::Red).count()
    }

    /// First vertex whose red and blue degrees differ.
    pub fn unbalanced_vertex(&self) -> Option<usize> {
        (0..self.vertex_count()).find(|&v| {
            let red = self.adj[v].iter().filter(|&&(_, id)| self.edges[id].color == Color::Red).count();
            2 * red != self.adj[v].len()
        })
    }

    /// Red degree equals blue degree everywhere. For the directed flavor this
    /// is balance of red/blue out-degrees at every `u_x` and in-degrees at
    /// every `w_x`.
    pub fn is_balanced(&self) -> bool {
        self.unbalanced_vertex().is_none()
    }

    pub(crate) fn check_balanced(&self) -> Result<()> {
        match self.unbalanced_vertex() {
            Some(vertex) => Err(Error::NotBalanced { vertex }),
            None => Ok(()),
        }
    }
}

/// Closed alternating trail `v_0 v_1 .. v_{2t-1} (v_0)`. `edges[i]` joins
/// `vertices[i]` and `vertices[i + 1]` (cyclically).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Circuit {
    vertices: Vec<usize>,
    edges: Vec<EdgeId>,
}

impl Circuit {
    /// Circuit through `vertices` in `g`, rejecting anything that is not an
    /// alternating closed trail.
    pub fn from_vertices(g: &RedBlueGraph, vertices: Vec<usize>) -> Result<Circuit> {
        let len = vertices.len();
        let mut edges = Vec::with_capacity(len);
        for i in 0..len {
            let (a, b) = (vertices[i], vertices[(i + 1) % len]);
            let id = g.edge_between(a, b).ok_or_else(|| {
                Error::InvalidCircuit(format!("no edge {}-{}", g.flavor.label(a), g.flavor.label(b)))
            })?;
            edges.push(id);
        }
        let c = Circuit { vertices, edges };
        check_circuit(&c, g).map_err(Error::InvalidCircuit)?;
        Ok(c)
    }

    pub(crate) fn from_parts(vertices: Vec<usize>, edges: Vec<EdgeId>) -> Circuit {
        debug_assert_eq!(vertices.len(), edges.len());
        Circuit { vertices, edges }
    }

    /// Circuit known only by its vertices (edge ids are placeholders).
    pub(crate) fn walk(vertices: Vec<usize>) -> Circuit {
        let edges = vec![EdgeId::MAX; vertices.len()];
        Circuit { vertices, edges }
    }

    /// Number of edges (always even for valid circuits).
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn half_length(&self) -> usize {
        self.vertices.len() / 2
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    /// `v_0, .., v_{2t}` with the start repeated at the end.
    pub fn closed_walk(&self) -> Vec<usize> {
        let mut w = self.vertices.clone();
        if let Some(&first) = w.first() {
            w.push(first);
        }
        w
    }

    pub(crate) fn occurrences(&self) -> HashMap<usize, usize> {
        let mut occ = HashMap::new();
        for &v in &self.vertices {
            *occ.entry(v).or_insert(0) += 1;
        }
        occ
    }

    /// Vertices appearing exactly once.
    pub fn unique_vertex_count(&self) -> usize {
        self.occurrences().values().filter(|&&c| c == 1).count()
    }

    /// Distinct vertices appearing more than once.
    pub fn repeated_vertex_count(&self) -> usize {
        self.occurrences().values().filter(|&&c| c > 1).count()
    }

    pub fn is_cycle(&self) -> bool {
        self.occurrences().values().all(|&c| c == 1)
    }

    /// Same circuit read from position `start`.
    pub(crate) fn rotated(&self, start: usize) -> Circuit {
        let mut vertices = self.vertices.clone();
        let mut edges = self.edges.clone();
        vertices.rotate_left(start);
        edges.rotate_left(start);
        Circuit { vertices, edges }
    }
}

fn check_circuit(c: &Circuit, g: &RedBlueGraph) -> std::result::Result<(), String> {
    let len = c.len();
    if len != c.edges.len() {
        return Err("vertex and edge lists differ in length".into());
    }
    if len < 4 || len % 2 == 1 {
        return Err(format!("length {len} is not an even number of at least 4"));
    }
    let mut seen = vec![false; g.edge_count()];
    for i in 0..len {
        let id = c.edges[i];
        if id >= g.edge_count() {
            return Err(format!("edge id {id} out of range"));
        }
        if std::mem::replace(&mut seen[id], true) {
            return Err(format!("edge id {id} used twice"));
        }
        let e = g.edge(id);
        if canonical(c.vertices[i], c.vertices[(i + 1) % len]) != (e.a, e.b) {
            return Err(format!("step {i} does not follow edge {id}"));
        }
        let next = g.edge(c.edges[(i + 1) % len]);
        if e.color == next.color {
            return Err(format!("colors do not alternate at position {}", (i + 1) % len));
        }
    }
    Ok(())
}

/// True iff `c` is an alternating closed trail of `g`.
pub fn validate_circuit(c: &Circuit, g: &RedBlueGraph) -> bool {
    check_circuit(c, g).is_ok()
}

/// No vertex occurs more than twice, and some two consecutive vertices
/// both occur exactly once.
pub fn is_elementary(c: &Circuit) -> bool {
    let occ = c.occurrences();
    if occ.values().any(|&k| k > 2) {
        return false;
    }
    let len = c.len();
    (0..len).any(|i| occ[&c.vertices[i]] == 1 && occ[&c.vertices[(i + 1) % len]] == 1)
}

/// Edge-partition of a red-blue graph into alternating circuits.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Decomposition {
    circuits: Vec<Circuit>,
}

impl Decomposition {
    pub fn new(g: &RedBlueGraph, circuits: Vec<Circuit>) -> Result<Decomposition> {
        let mut used = vec![false; g.edge_count()];
        for (ci, c) in circuits.iter().enumerate() {
            check_circuit(c, g).map_err(|e| Error::InvalidDecomposition(format!("circuit {ci}: {e}")))?;
            for &id in &c.edges {
                if std::mem::replace(&mut used[id], true) {
                    return Err(Error::InvalidDecomposition(format!("edge {id} covered twice")));
                }
            }
        }
        if let Some(id) = used.iter().position(|&u| !u) {
            return Err(Error::InvalidDecomposition(format!("edge {id} not covered")));
        }
        Ok(Decomposition { circuits })
    }

    pub(crate) fn from_circuits(circuits: Vec<Circuit>) -> Decomposition {
        Decomposition { circuits }
    }

    pub fn circuits(&self) -> &[Circuit] {
        &self.circuits
    }

    pub fn into_circuits(self) -> Vec<Circuit> {
        self.circuits
    }

    pub fn circuit_count(&self) -> usize {
        self.circuits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circuits.is_empty()
    }
}

/// Greedy alternating Euler walk: start at the lowest vertex with unused
/// edges on its lowest red edge, always continue along the lowest unused
/// edge of the other color, and close as soon as the walk is back at the
/// start on a blue edge. For bipartite and directed flavors the circuits are
/// then split at repeated vertices, so every circuit is a cycle.
pub fn euler_decompose(g: &RedBlueGraph) -> Result<Decomposition> {
    g.check_balanced()?;
    let mut used = vec![false; g.edge_count()];
    let mut remaining: Vec<usize> = (0..g.vertex_count()).map(|v| g.neighbors(v).len()).collect();
    let mut circuits = Vec::new();
    let mut pivot = 0;
    loop {
        while pivot < remaining.len() && remaining[pivot] == 0 {
            pivot += 1;
        }
        if pivot == remaining.len() {
            break;
        }
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        let mut cur = pivot;
        let mut need = Color::Red;
        loop {
            let &(next, id) = g
                .neighbors(cur)
                .iter()
                .find(|&&(_, id)| !used[id] && g.edge(id).color == need)
                .expect("balanced graph always offers the next alternating edge");
            used[id] = true;
            remaining[cur] -= 1;
            remaining[next] -= 1;
            vertices.push(cur);
            edges.push(id);
            cur = next;
            need = need.opposite();
            if cur == pivot && need == Color::Red {
                break;
            }
        }
        circuits.push(Circuit::from_parts(vertices, edges));
    }
    if !matches!(g.flavor(), Flavor::Undirected { .. }) {
        circuits = split_into_cycles(circuits);
    }
    Ok(Decomposition::from_circuits(circuits))
}

fn split_into_cycles(circuits: Vec<Circuit>) -> Vec<Circuit> {
    let mut out = Vec::new();
    let mut stack = circuits;
    stack.reverse();
    while let Some(c) = stack.pop() {
        match split_even_repeat(&c) {
            Some((a, b)) => {
                stack.push(b);
                stack.push(a);
            }
            None => out.push(c),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{symmetric_difference, DirectedGraph, SimpleGraph};

    fn c4() -> RedBlueGraph {
        RedBlueGraph::new(
            Flavor::Undirected { n: 4 },
            [(0, 1, Color::Red), (1, 2, Color::Blue), (2, 3, Color::Red), (3, 0, Color::Blue)],
        )
        .unwrap()
    }

    pub(crate) fn bowtie_difference() -> RedBlueGraph {
        let g1 = DirectedGraph::new(5, [(1, 2), (2, 0), (0, 1), (0, 3), (3, 4), (4, 0)]).unwrap();
        let g2 = DirectedGraph::new(5, [(2, 1), (0, 2), (1, 0), (3, 0), (4, 3), (0, 4)]).unwrap();
        symmetric_difference(&g1, &g2).unwrap()
    }

    fn check_partition(g: &RedBlueGraph, d: &Decomposition) {
        Decomposition::new(g, d.circuits().to_vec()).expect("partition");
    }

    #[test]
    fn empty_graph_decomposes_to_nothing() {
        let g = SimpleGraph::empty(3);
        let rb = symmetric_difference(&g, &g).unwrap();
        assert_eq!(euler_decompose(&rb).unwrap().circuit_count(), 0);
    }

    #[test]
    fn c4_is_one_circuit() {
        let g = c4();
        let d = euler_decompose(&g).unwrap();
        assert_eq!(d.circuit_count(), 1);
        assert_eq!(d.circuits()[0].vertices(), &[0, 1, 2, 3]);
        check_partition(&g, &d);
    }

    #[test]
    fn bowtie_difference_decomposes_into_cycles() {
        let g = bowtie_difference();
        let d = euler_decompose(&g).unwrap();
        assert!((1..=2).contains(&d.circuit_count()));
        assert!(d.circuits().iter().all(Circuit::is_cycle));
        assert_eq!(d.circuit_count(), 2);
        check_partition(&g, &d);
    }

    #[test]
    fn unbalanced_is_rejected() {
        let g = RedBlueGraph::new(Flavor::Undirected { n: 3 }, [(0, 1, Color::Red), (1, 2, Color::Blue)]).unwrap();
        assert_eq!(euler_decompose(&g).unwrap_err(), Error::NotBalanced { vertex: 0 });
    }

    #[test]
    fn circuit_validation() {
        let g = c4();
        let good = Circuit::from_vertices(&g, vec![0, 1, 2, 3]).unwrap();
        assert!(validate_circuit(&good, &g));
        assert!(validate_circuit(&good.rotated(1), &g));

        // same four vertices with colors R R B B
        let bad = RedBlueGraph::new(
            Flavor::Undirected { n: 4 },
            [(0, 1, Color::Red), (1, 2, Color::Red), (2, 3, Color::Blue), (3, 0, Color::Blue)],
        )
        .unwrap();
        assert!(Circuit::from_vertices(&bad, vec![0, 1, 2, 3]).is_err());
        let forced = Circuit::from_parts(vec![0, 1, 2, 3], vec![0, 1, 2, 3]);
        assert!(!validate_circuit(&forced, &bad));

        // odd closed walk on a 5-cycle
        let five = RedBlueGraph::new(
            Flavor::Undirected { n: 5 },
            [
                (0, 1, Color::Red),
                (1, 2, Color::Blue),
                (2, 3, Color::Red),
                (3, 4, Color::Blue),
                (0, 4, Color::Red),
            ],
        )
        .unwrap();
        assert!(Circuit::from_vertices(&five, vec![0, 1, 2, 3, 4]).is_err());
    }

    #[test]
    fn elementary_examples() {
        let c = Circuit::from_parts(vec![0, 1, 2, 3], vec![0; 4]);
        assert!(is_elementary(&c));
        // v0 at three positions
        let triple = Circuit::from_parts(vec![0, 1, 2, 3, 0, 4, 5, 6, 0, 7, 8, 9], vec![0; 12]);
        assert!(!is_elementary(&triple));
        // every step touches a repeated vertex
        let no_pair = Circuit::from_parts(vec![0, 1, 2, 3, 4, 1, 6, 3], vec![0; 8]);
        assert!(!is_elementary(&no_pair));
        // figure-eight: v0 occurs twice in the cyclic sequence
        let eight = Circuit::from_parts(vec![0, 1, 2, 3, 0, 4, 5, 6], vec![0; 8]);
        assert!(is_elementary(&eight));
    }

    #[test]
    fn triangular_cycle_is_elementary() {
        let g = bowtie_difference();
        // u_a w_b u_c w_a u_b w_c with n = 5: u_x = x, w_x = 5 + x
        let c = Circuit::from_vertices(&g, vec![0, 6, 2, 5, 1, 7]).unwrap();
        assert!(is_elementary(&c));
        assert_eq!(c.unique_vertex_count(), 6);
    }

    #[test]
    fn counts() {
        let c = Circuit::from_parts(vec![0, 1, 2, 3, 0, 4, 5, 6], vec![0; 8]);
        assert_eq!(c.unique_vertex_count(), 6);
        assert_eq!(c.repeated_vertex_count(), 1);
        assert_eq!(c.closed_walk(), vec![0, 1, 2, 3, 0, 4, 5, 6, 0]);
        assert_eq!(c.half_length(), 4);
    }
}
