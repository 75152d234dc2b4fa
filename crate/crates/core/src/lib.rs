//! k-edge colouring parameterized by the number of maximum-degree vertices.
//!
//! The pipeline reduces a graph to its semi-core (the subgraph induced by the
//! maximum-degree vertices and their neighbours), solves that exactly, and
//! extends the colouring back to the whole graph by adding the remaining
//! vertices one at a time with alternating-path recolouring. The same
//! extension run from an empty semi-core gives a constructive `Δ + 1`
//! colouring, so [`solver::chromatic_index`] always returns a witness.

pub mod bench;
pub mod colouring;
pub mod decompose;
pub mod exact;
pub mod extension;
pub mod graph;
pub mod instances;
pub mod io;
pub mod solver;

pub use colouring::{Colour, ColourSet, PartialEdgeColouring, Violation};
pub use decompose::SemiCoreDecomposition;
pub use graph::{EdgeId, Graph, GraphError, Vertex};
pub use solver::{chromatic_index, oracle_solve, solve, ChromaticIndex, Shortcut, SolveReport};
