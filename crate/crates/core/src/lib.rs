pub mod blocks;
pub mod constructions;
pub mod copies;
pub mod cubicality;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod graph;
pub mod partite;
pub mod search;
pub mod subset;
pub mod suite;
pub mod turan;

pub use blocks::{blocks, BlockDecomposition};
pub use copies::{enumerate_copies, is_free_of, CopyEnumeration, SubgraphCopy};
pub use error::{Error, Result};
pub use graph::{bipartition, build_hypercube, build_hypercube_capped, layer_subgraph, Bipartition, Graph};
pub use search::{SearchBudget, SearchOutcome, SearchStatus};
pub use subset::{VertexSubset, MAX_GROUND_SET};
pub use constructions::{
    complete, complete_bipartite, cycle, glue_at_vertex, h_graph, path, star_of_copies, subdivide, theta,
    MarkedGraph, Role,
};
pub use cubicality::{
    coloring_to_embedding, embed_in_hypercube, embed_in_hypercube_with, embedding_to_coloring,
    find_nice_coloring, verify_nice_coloring, ColoringViolation, Embedding, NiceColoring, NiceColoringCheck,
    Symmetry,
};
pub use partite::{
    blocks_have_representations, find_representation, find_representation_with, glue_bottom, glue_top,
    is_k_partite, pole_distance_scan, theta_representation, verify_representation, BlockOutcome, BlockReport,
    BlockResult, GluedRepresentation, Hypergraph, PoleScanReport, Representation, RepresentationCheck,
    RepresentationViolation,
};
pub use turan::{
    density_sequence, extremal_number, guest_id, hypergraph_extremal, middle_mass, star_count_identity,
    up_set_full_vertices, DensityReport, DensityRow, ExtremalResult, ExtremalStatus, LayerGraph,
    StarCountReport,
};
