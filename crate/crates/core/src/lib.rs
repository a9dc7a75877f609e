//! Swap distances between realizations of undirected, bipartite and directed
//! degree sequences.
//!
//! The distance between two realizations equals half their symmetric
//! difference minus the maximum number of circuits in an alternating circuit
//! decomposition of it (for directed graphs, with triangular six-cycles
//! handled by a dedicated weight-two move). This crate builds
//! decompositions, turns them into explicit swap sequences and checks the
//! identity against exhaustive search on small instances.

pub mod decomp;
pub mod error;
pub mod graphs;
pub mod oracle;
pub mod rbgraph;
pub mod realize;
pub mod swapgen;

pub use decomp::{
    elementarize, exact_max_decomposition, greedy_maximize, is_triangular_c6, resolve_kissing,
    split_even_repeat, DecompositionReport,
};
pub use error::{Error, Result};
pub use graphs::{
    bipartite_representation, halved_hamming, symmetric_difference, BipartiteDegreeSequence,
    BipartiteGraph, BipartiteRepresentation, ChordGraph, DegreeSequence, DirectedDegreeSequence,
    DirectedGraph, Flavor, GraphKind, Realization, SimpleGraph,
};
pub use rbgraph::{
    euler_decompose, is_elementary, validate_circuit, Circuit, Color, Decomposition, EdgeId,
    RedBlueGraph,
};
pub use swapgen::{Move, Swap, SwapSequence};
