//! Labeled realizations of undirected, bipartite and directed degree sequences.
//!
//! All three graph kinds share one internal form, [`ChordGraph`]: a simple
//! undirected graph over a dense vertex range together with a [`Flavor`]
//! that says which vertex pairs may hold an edge. Bipartite graphs place the
//! `U` class at `0..k` and the `W` class at `k..k + l`. Directed graphs are
//! stored through their bipartite representation: the tail copy `u_x` is
//! vertex `x` and the head copy `w_x` is vertex `n + x`, so the directed edge
//! `x -> y` becomes the pair `(x, n + y)` and `(x, n + x)` is a non-chord.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::rbgraph::{Color, RedBlueGraph};

/// Which pairs of vertices can hold an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    Undirected { n: usize },
    Bipartite { k: usize, l: usize },
    Directed { n: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphKind {
    Undirected,
    Bipartite,
    Directed,
}

impl GraphKind {
    pub fn code(self) -> &'static str {
        match self {
            GraphKind::Undirected => "u",
            GraphKind::Bipartite => "b",
            GraphKind::Directed => "d",
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl Flavor {
    pub fn kind(&self) -> GraphKind {
        match self {
            Flavor::Undirected { .. } => GraphKind::Undirected,
            Flavor::Bipartite { .. } => GraphKind::Bipartite,
            Flavor::Directed { .. } => GraphKind::Directed,
        }
    }

    /// Number of vertices of the internal (flat) graph.
    pub fn vertex_count(&self) -> usize {
        match *self {
            Flavor::Undirected { n } => n,
            Flavor::Bipartite { k, l } => k + l,
            Flavor::Directed { n } => 2 * n,
        }
    }

    /// Number of vertices of the graph as the user sees it.
    pub fn native_vertex_count(&self) -> usize {
        match *self {
            Flavor::Undirected { n } | Flavor::Directed { n } => n,
            Flavor::Bipartite { k, l } => k + l,
        }
    }

    /// True when `v` is on the `U` side (bipartite and directed flavors).
    pub fn in_first_class(&self, v: usize) -> bool {
        match *self {
            Flavor::Undirected { .. } => true,
            Flavor::Bipartite { k, .. } => v < k,
            Flavor::Directed { n } => v < n,
        }
    }

    pub fn is_chord(&self, a: usize, b: usize) -> bool {
        let total = self.vertex_count();
        if a >= total || b >= total || a == b {
            return false;
        }
        match *self {
            Flavor::Undirected { .. } => true,
            Flavor::Bipartite { .. } => self.in_first_class(a) != self.in_first_class(b),
            Flavor::Directed { n } => {
                self.in_first_class(a) != self.in_first_class(b) && a.abs_diff(b) != n
            }
        }
    }

    /// The vertex `v` may never be joined to (only directed flavors have one).
    pub fn partner(&self, v: usize) -> Option<usize> {
        match *self {
            Flavor::Directed { n } if v < n => Some(v + n),
            Flavor::Directed { n } if v < 2 * n => Some(v - n),
            _ => None,
        }
    }

    /// Flat pair to the edge as written in graph files: `(u, w)` class
    /// indices for bipartite, `(tail, head)` for directed.
    pub fn to_native(&self, (a, b): (usize, usize)) -> (usize, usize) {
        let (a, b) = canonical(a, b);
        match *self {
            Flavor::Undirected { .. } => (a, b),
            Flavor::Bipartite { k, .. } => (a, b - k),
            Flavor::Directed { n } => (a, b - n),
        }
    }

    pub fn from_native(&self, (x, y): (usize, usize)) -> (usize, usize) {
        match *self {
            Flavor::Undirected { .. } => canonical(x, y),
            Flavor::Bipartite { k, .. } => (x, k + y),
            Flavor::Directed { n } => (x, n + y),
        }
    }

    /// Human-readable vertex name: `3` for undirected, `u3`/`w1` otherwise.
    pub fn label(&self, v: usize) -> String {
        match *self {
            Flavor::Undirected { .. } => v.to_string(),
            Flavor::Bipartite { k, .. } if v < k => format!("u{v}"),
            Flavor::Bipartite { k, .. } => format!("w{}", v - k),
            Flavor::Directed { n } if v < n => format!("u{v}"),
            Flavor::Directed { n } => format!("w{}", v - n),
        }
    }

    fn header(&self) -> String {
        match *self {
            Flavor::Undirected { n } => format!("u {n}"),
            Flavor::Bipartite { k, l } => format!("b {k} {l}"),
            Flavor::Directed { n } => format!("d {n}"),
        }
    }
}

#[inline]
pub(crate) fn canonical(a: usize, b: usize) -> (usize, usize) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Simple graph over a flavored vertex set; the common currency of the
/// swap and search routines.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChordGraph {
    flavor: Flavor,
    edges: BTreeSet<(usize, usize)>,
}

impl ChordGraph {
    pub fn new(flavor: Flavor, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if !flavor.is_chord(a, b) {
                return Err(Error::InvalidGraph(format!(
                    "{}-{} cannot hold an edge",
                    flavor.label(a),
                    flavor.label(b)
                )));
            }
            if !set.insert(canonical(a, b)) {
                return Err(Error::InvalidGraph(format!(
                    "duplicate edge {}-{}",
                    flavor.label(a),
                    flavor.label(b)
                )));
            }
        }
        Ok(ChordGraph { flavor, edges: set })
    }

    pub fn empty(flavor: Flavor) -> Self {
        ChordGraph {
            flavor,
            edges: BTreeSet::new(),
        }
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical `(min, max)` pairs in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&canonical(a, b))
    }

    pub(crate) fn insert(&mut self, a: usize, b: usize) -> bool {
        self.edges.insert(canonical(a, b))
    }

    pub(crate) fn remove(&mut self, a: usize, b: usize) -> bool {
        self.edges.remove(&canonical(a, b))
    }

    /// Degree of every flat vertex.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.flavor.vertex_count()];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    /// The graph in the line-oriented file format (header plus one native
    /// edge per line, sorted).
    pub fn canonical_text(&self) -> String {
        let mut out = self.flavor.header();
        out.push('\n');
        let mut native: Vec<_> = self.edges.iter().map(|&e| self.flavor.to_native(e)).collect();
        native.sort_unstable();
        for (x, y) in native {
            let _ = writeln!(out, "{x} {y}");
        }
        out
    }

    /// SHA-256 of [`canonical_text`](Self::canonical_text), hex encoded.
    pub fn fingerprint(&self) -> String {
        hex::encode(Sha256::digest(self.canonical_text().as_bytes()))
    }
}

// ---------------------------------------------------------------------------
// Degree sequences

/// Undirected degree sequence `d_1..d_n`. Construction does not check
/// graphicality; see [`crate::realize`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeSequence {
    degrees: Vec<usize>,
}

impl DegreeSequence {
    pub fn new(degrees: Vec<usize>) -> Self {
        DegreeSequence { degrees }
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.degrees.iter().sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BipartiteDegreeSequence {
    pub class_u: Vec<usize>,
    pub class_w: Vec<usize>,
}

impl BipartiteDegreeSequence {
    pub fn new(class_u: Vec<usize>, class_w: Vec<usize>) -> Self {
        BipartiteDegreeSequence { class_u, class_w }
    }
}

/// Out-degrees and in-degrees of a directed graph, both indexed by vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DirectedDegreeSequence {
    pub out_degrees: Vec<usize>,
    pub in_degrees: Vec<usize>,
}

impl DirectedDegreeSequence {
    pub fn new(out_degrees: Vec<usize>, in_degrees: Vec<usize>) -> Self {
        DirectedDegreeSequence {
            out_degrees,
            in_degrees,
        }
    }

    pub fn len(&self) -> usize {
        self.out_degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.out_degrees.is_empty()
    }
}

// ---------------------------------------------------------------------------
// Realizations

/// Common interface of the three graph kinds.
pub trait Realization: Clone + fmt::Debug {
    type Degrees: Clone + PartialEq + fmt::Debug;

    fn degree_sequence(&self) -> Self::Degrees;
    fn to_chord_graph(&self) -> ChordGraph;
    fn from_chord_graph(g: &ChordGraph) -> Result<Self>;
}

impl Realization for ChordGraph {
    type Degrees = Vec<usize>;

    fn degree_sequence(&self) -> Vec<usize> {
        self.degrees()
    }

    fn to_chord_graph(&self) -> ChordGraph {
        self.clone()
    }

    fn from_chord_graph(g: &ChordGraph) -> Result<Self> {
        Ok(g.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let g = ChordGraph::new(Flavor::Undirected { n }, edges)?;
        Ok(SimpleGraph { n, edges: g.edges })
    }

    pub fn empty(n: usize) -> Self {
        SimpleGraph {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&canonical(a, b))
    }
}

impl Realization for SimpleGraph {
    type Degrees = DegreeSequence;

    fn degree_sequence(&self) -> DegreeSequence {
        let mut d = vec![0; self.n];
        for &(a, b) in &self.edges {
            d[a] += 1;
            d[b] += 1;
        }
        DegreeSequence::new(d)
    }

    fn to_chord_graph(&self) -> ChordGraph {
        ChordGraph {
            flavor: Flavor::Undirected { n: self.n },
            edges: self.edges.clone(),
        }
    }

    fn from_chord_graph(g: &ChordGraph) -> Result<Self> {
        match g.flavor {
            Flavor::Undirected { n } => Ok(SimpleGraph {
                n,
                edges: g.edges.clone(),
            }),
            _ => Err(Error::FlavorMismatch),
        }
    }
}

/// Bipartite graph with classes `U = {u_0..u_{k-1}}` and `W = {w_0..w_{l-1}}`;
/// edges are `(u-index, w-index)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    k: usize,
    l: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl BipartiteGraph {
    pub fn new(k: usize, l: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, w) in edges {
            if u >= k || w >= l {
                return Err(Error::InvalidGraph(format!("edge u{u}-w{w} out of range")));
            }
            if !set.insert((u, w)) {
                return Err(Error::InvalidGraph(format!("duplicate edge u{u}-w{w}")));
            }
        }
        Ok(BipartiteGraph { k, l, edges: set })
    }

    pub fn class_sizes(&self) -> (usize, usize) {
        (self.k, self.l)
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, w: usize) -> bool {
        self.edges.contains(&(u, w))
    }
}

impl Realization for BipartiteGraph {
    type Degrees = BipartiteDegreeSequence;

    fn degree_sequence(&self) -> BipartiteDegreeSequence {
        let mut a = vec![0; self.k];
        let mut b = vec![0; self.l];
        for &(u, w) in &self.edges {
            a[u] += 1;
            b[w] += 1;
        }
        BipartiteDegreeSequence::new(a, b)
    }

    fn to_chord_graph(&self) -> ChordGraph {
        let flavor = Flavor::Bipartite {
            k: self.k,
            l: self.l,
        };
        ChordGraph {
            flavor,
            edges: self.edges.iter().map(|&e| flavor.from_native(e)).collect(),
        }
    }

    fn from_chord_graph(g: &ChordGraph) -> Result<Self> {
        match g.flavor {
            Flavor::Bipartite { k, l } => Ok(BipartiteGraph {
                k,
                l,
                edges: g.edges.iter().map(|&e| g.flavor.to_native(e)).collect(),
            }),
            _ => Err(Error::FlavorMismatch),
        }
    }
}

/// Loop-free directed graph; antiparallel pairs are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DirectedGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl DirectedGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (x, y) in edges {
            if x >= n || y >= n {
                return Err(Error::InvalidGraph(format!("edge {x}->{y} out of range")));
            }
            if x == y {
                return Err(Error::InvalidGraph(format!("loop at {x}")));
            }
            if !set.insert((x, y)) {
                return Err(Error::InvalidGraph(format!("duplicate edge {x}->{y}")));
            }
        }
        Ok(DirectedGraph { n, edges: set })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        self.edges.contains(&(x, y))
    }
}

impl Realization for DirectedGraph {
    type Degrees = DirectedDegreeSequence;

    fn degree_sequence(&self) -> DirectedDegreeSequence {
        let mut out = vec![0; self.n];
        let mut inn = vec![0; self.n];
        for &(x, y) in &self.edges {
            out[x] += 1;
            inn[y] += 1;
        }
        DirectedDegreeSequence::new(out, inn)
    }

    fn to_chord_graph(&self) -> ChordGraph {
        let flavor = Flavor::Directed { n: self.n };
        ChordGraph {
            flavor,
            edges: self.edges.iter().map(|&e| flavor.from_native(e)).collect(),
        }
    }

    fn from_chord_graph(g: &ChordGraph) -> Result<Self> {
        match g.flavor {
            Flavor::Directed { n } => Ok(DirectedGraph {
                n,
                edges: g.edges.iter().map(|&e| g.flavor.to_native(e)).collect(),
            }),
            _ => Err(Error::FlavorMismatch),
        }
    }
}

/// Bipartite graph `B(G)` of a digraph: `u_x` carries the out-edges of `x`,
/// `w_x` its in-edges, and the diagonal pairs `(u_x, w_x)` are non-chords.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteRepresentation {
    pub graph: BipartiteGraph,
}

impl BipartiteRepresentation {
    pub fn vertex_count(&self) -> usize {
        self.graph.k
    }

    pub fn non_chords(&self) -> impl Iterator<Item = (usize, usize)> {
        (0..self.graph.k).map(|x| (x, x))
    }

    pub fn is_non_chord(&self, u: usize, w: usize) -> bool {
        u == w
    }

    /// Inverse of [`bipartite_representation`].
    pub fn to_directed(&self) -> DirectedGraph {
        DirectedGraph {
            n: self.graph.k,
            edges: self.graph.edges.clone(),
        }
    }
}

pub fn bipartite_representation(g: &DirectedGraph) -> BipartiteRepresentation {
    BipartiteRepresentation {
        graph: BipartiteGraph {
            k: g.n,
            l: g.n,
            edges: g.edges.clone(),
        },
    }
}

fn check_same<G: Realization>(g1: &G, g2: &G) -> Result<(ChordGraph, ChordGraph)> {
    let c1 = g1.to_chord_graph();
    let c2 = g2.to_chord_graph();
    if c1.flavor != c2.flavor {
        return Err(Error::FlavorMismatch);
    }
    if g1.degree_sequence() != g2.degree_sequence() {
        return Err(Error::DegreeMismatch);
    }
    Ok((c1, c2))
}

/// Red-blue graph of `E(g1) Δ E(g2)`: red edges are in `g1` only, blue in
/// `g2` only. Directed inputs yield the red-blue bipartite representation.
pub fn symmetric_difference<G: Realization>(g1: &G, g2: &G) -> Result<RedBlueGraph> {
    let (c1, c2) = check_same(g1, g2)?;
    chord_symmetric_difference(&c1, &c2)
}

pub(crate) fn chord_symmetric_difference(c1: &ChordGraph, c2: &ChordGraph) -> Result<RedBlueGraph> {
    if c1.flavor != c2.flavor {
        return Err(Error::FlavorMismatch);
    }
    if c1.degrees() != c2.degrees() {
        return Err(Error::DegreeMismatch);
    }
    let red = c1.edges.difference(&c2.edges).map(|&(a, b)| (a, b, Color::Red));
    let blue = c2.edges.difference(&c1.edges).map(|&(a, b)| (a, b, Color::Blue));
    RedBlueGraph::new(c1.flavor, red.chain(blue))
}

/// `|E(g1) Δ E(g2)| / 2`.
pub fn halved_hamming<G: Realization>(g1: &G, g2: &G) -> Result<usize> {
    let (c1, c2) = check_same(g1, g2)?;
    Ok(c1.edges.difference(&c2.edges).count())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bowtie() -> (DirectedGraph, DirectedGraph) {
        // a=0 b=1 c=2 d=3 e=4
        let g1 = DirectedGraph::new(5, [(1, 2), (2, 0), (0, 1), (0, 3), (3, 4), (4, 0)]).unwrap();
        let g2 = DirectedGraph::new(5, [(2, 1), (0, 2), (1, 0), (3, 0), (4, 3), (0, 4)]).unwrap();
        (g1, g2)
    }

    #[test]
    fn degree_sequences() {
        let tri = SimpleGraph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(tri.degree_sequence().as_slice(), &[2, 2, 2]);
        assert_eq!(SimpleGraph::empty(4).degree_sequence().as_slice(), &[0, 0, 0, 0]);
        let (g1, g2) = bowtie();
        let dd = DirectedDegreeSequence::new(vec![2, 1, 1, 1, 1], vec![2, 1, 1, 1, 1]);
        assert_eq!(g1.degree_sequence(), dd);
        assert_eq!(g2.degree_sequence(), dd);
    }

    #[test]
    fn rejects_loops_and_duplicates() {
        assert!(SimpleGraph::new(3, [(1, 1)]).is_err());
        assert!(SimpleGraph::new(3, [(0, 1), (1, 0)]).is_err());
        assert!(SimpleGraph::new(3, [(0, 3)]).is_err());
        assert!(DirectedGraph::new(3, [(2, 2)]).is_err());
        assert!(DirectedGraph::new(3, [(0, 1), (1, 0)]).is_ok());
        assert!(BipartiteGraph::new(2, 1, [(0, 1)]).is_err());
    }

    #[test]
    fn symmetric_difference_of_matchings() {
        let g1 = SimpleGraph::new(4, [(0, 1), (2, 3)]).unwrap();
        let g2 = SimpleGraph::new(4, [(0, 2), (1, 3)]).unwrap();
        let rb = symmetric_difference(&g1, &g2).unwrap();
        assert_eq!(rb.edge_count(), 4);
        let red: Vec<_> = rb.edges().iter().filter(|e| e.color == Color::Red).map(|e| (e.a, e.b)).collect();
        let blue: Vec<_> = rb.edges().iter().filter(|e| e.color == Color::Blue).map(|e| (e.a, e.b)).collect();
        assert_eq!(red, vec![(0, 1), (2, 3)]);
        assert_eq!(blue, vec![(0, 2), (1, 3)]);
        assert!(rb.is_balanced());
        assert_eq!(halved_hamming(&g1, &g2).unwrap(), 2);
        assert_eq!(halved_hamming(&g1, &g1).unwrap(), 0);
        assert_eq!(symmetric_difference(&g1, &g1).unwrap().edge_count(), 0);
    }

    #[test]
    fn degree_mismatch_is_eager() {
        let g1 = SimpleGraph::new(4, [(0, 1), (2, 3)]).unwrap();
        let g2 = SimpleGraph::new(4, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(symmetric_difference(&g1, &g2).unwrap_err(), Error::DegreeMismatch);
        assert_eq!(halved_hamming(&g1, &g2).unwrap_err(), Error::DegreeMismatch);
        let g3 = SimpleGraph::new(5, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(symmetric_difference(&g1, &g3).unwrap_err(), Error::FlavorMismatch);
    }

    #[test]
    fn bipartite_representation_examples() {
        let g = DirectedGraph::new(2, [(0, 1)]).unwrap();
        let b = bipartite_representation(&g);
        assert_eq!(b.graph.edges().collect::<Vec<_>>(), vec![(0, 1)]);

        let cyc = DirectedGraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let b = bipartite_representation(&cyc);
        assert_eq!(b.graph.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 0)]);
        assert!(b.graph.edges().all(|(u, w)| !b.is_non_chord(u, w)));
        assert_eq!(b.to_directed(), cyc);

        let (g1, _) = bowtie();
        let b = bipartite_representation(&g1);
        assert_eq!(b.graph.edge_count(), 6);
        let bd = b.graph.degree_sequence();
        let dd = g1.degree_sequence();
        assert_eq!(bd.class_u, dd.out_degrees);
        assert_eq!(bd.class_w, dd.in_degrees);
    }

    #[test]
    fn bowtie_difference() {
        let (g1, g2) = bowtie();
        let rb = symmetric_difference(&g1, &g2).unwrap();
        assert_eq!(rb.edge_count(), 12);
        assert!(rb.is_balanced());
        assert_eq!(halved_hamming(&g1, &g2).unwrap(), 6);
        // u_a is incident to four difference edges
        assert_eq!(rb.neighbors(0).len(), 4);
    }

    #[test]
    fn flavor_chords() {
        let d = Flavor::Directed { n: 3 };
        assert!(d.is_chord(0, 4));
        assert!(!d.is_chord(0, 3));
        assert!(!d.is_chord(0, 1));
        assert_eq!(d.partner(4), Some(1));
        let b = Flavor::Bipartite { k: 2, l: 3 };
        assert!(b.is_chord(1, 4));
        assert!(!b.is_chord(2, 4));
        assert_eq!(b.to_native((1, 4)), (1, 2));
        assert_eq!(b.label(3), "w1");
    }

    #[test]
    fn fingerprint_is_order_independent() {
        let a = SimpleGraph::new(4, [(0, 1), (2, 3)]).unwrap().to_chord_graph();
        let b = SimpleGraph::new(4, [(3, 2), (1, 0)]).unwrap().to_chord_graph();
        assert_eq!(a.fingerprint(), b.fingerprint());
        assert_eq!(a.canonical_text(), "u 4\n0 1\n2 3\n");
    }
}
