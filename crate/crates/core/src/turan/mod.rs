//! Extremal numbers `ex(Q_n, H)` at small scale, and the finite counting
//! facts behind the layer argument for zero Turán density.

mod extremal;
mod hitting;
mod hypergraph;
mod mass;
mod stars;

use serde::Serialize;

pub use extremal::{density_sequence, extremal_number, guest_id, DensityReport, DensityRow};
pub use hypergraph::hypergraph_extremal;
pub use mass::middle_mass;
pub use stars::{star_count_identity, up_set_full_vertices, LayerGraph, StarCountReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtremalStatus {
    /// the branch-and-bound tree was closed
    Exact,
    /// best value found before the budget ran out
    LowerBound,
    /// copies could not be enumerated within budget
    Inconclusive,
}

/// An exact or bounded extremal number with an H-free witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalResult<E> {
    pub n: usize,
    pub guest_id: String,
    pub value: usize,
    pub witness_edges: Vec<E>,
    pub status: ExtremalStatus,
    pub nodes_explored: u64,
}
