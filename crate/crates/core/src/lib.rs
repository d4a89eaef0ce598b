//! Twin-class decomposition of finite simple graphs and exact Wiener /
//! Steiner–Wiener indices.
//!
//! The twin classes of a graph `G` partition its vertices so that
//! `G = H[G_1, ..., G_k]`, a generalized composition of the reduced graph `H`
//! with cliques and edgeless graphs. [`reduced`] evaluates `SW_m(G)` from that
//! structure; [`steiner`] evaluates the same quantity subset by subset and
//! serves as the reference. [`algebra`] and [`generators`] build the power
//! graphs of finite groups and the zero-divisor, ideal-based zero-divisor and
//! comaximal ideal graphs of finite commutative rings.
//!
//! Vertex indices are 0-based throughout.

pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod generators;
pub mod graph;
pub mod reduced;
pub mod steiner;
pub mod twins;

pub use graph::{generalized_composition, CompositionSpec, Graph, GraphError, GraphFormat};
pub use reduced::{steiner_wiener_reduced, wiener_reduced, ClassProfile};
pub use steiner::{steiner_distance, steiner_wiener_naive, wiener_index, Count, IndexError};
pub use twins::{are_twins, recompose, twin_partition, ClassKind, TwinDecomposition};
