//! Undirected multigraphs with self-loops, cuts and degree intervals.

mod analysis;
mod cut;
mod multigraph;

pub use analysis::DegreeInterval;
pub use cut::Cut;
pub use multigraph::{Adjacency, Edge, Multigraph};
