use serde::Serialize;

use crate::blocks::blocks;
use crate::error::Error;
use crate::graph::{bipartition, Graph};
use crate::partite::layer::find_representation;
use crate::partite::Representation;
use crate::search::{SearchBudget, SearchStatus};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum BlockResult {
    Represented { k: usize, n: usize, representation: Representation },
    NotBipartite { odd_cycle: Vec<usize> },
    NoneInRange,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockOutcome {
    /// block edges in the original vertex numbering
    pub edges: Vec<(usize, usize)>,
    /// block vertex i is original vertex `vertices[i]`
    pub vertices: Vec<usize>,
    pub result: BlockResult,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockReport {
    pub blocks: Vec<BlockOutcome>,
    /// every block has a partite representation, so the graph has zero
    /// Turán density in the hypercube
    pub zero_density: bool,
    pub nodes_explored: u64,
}

/// Looks for a partite representation of every block, trying `k = 1..`
/// then `n = k..` in increasing order, each run with its own `budget`.
pub fn blocks_have_representations(h: &Graph, k_max: usize, n_max: usize, budget: SearchBudget) -> BlockReport {
    let decomposition = blocks(h);
    let mut nodes = 0;
    let mut out = Vec::new();
    for edges in decomposition.blocks {
        let (block, vertices) = h.from_edge_set(&edges);
        let result = match bipartition(&block) {
            Err(Error::NotBipartite { cycle }) => BlockResult::NotBipartite {
                odd_cycle: cycle.into_iter().map(|v| vertices[v]).collect(),
            },
            _ => {
                let mut result = BlockResult::NoneInRange;
                'search: for k in 1..=k_max {
                    for n in k..=n_max {
                        let outcome = find_representation(&block, k, n, budget).expect("block is connected and bipartite");
                        nodes += outcome.nodes_explored;
                        match outcome.status() {
                            SearchStatus::Found => {
                                result = BlockResult::Represented {
                                    k,
                                    n,
                                    representation: outcome.into_witness().unwrap(),
                                };
                                break 'search;
                            }
                            SearchStatus::Inconclusive => result = BlockResult::Inconclusive,
                            SearchStatus::ExhaustedNone => {}
                        }
                    }
                }
                result
            }
        };
        out.push(BlockOutcome { edges, vertices, result });
    }
    BlockReport {
        zero_density: out.iter().all(|b| matches!(b.result, BlockResult::Represented { .. })),
        blocks: out,
        nodes_explored: nodes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{h_graph, path};

    #[test]
    fn h3_blocks_are_thetas_with_representations() {
        let h = h_graph(3).unwrap().graph;
        let r = blocks_have_representations(&h, 2, 5, SearchBudget::default());
        assert_eq!(r.blocks.len(), 2);
        assert!(r.zero_density);
        for b in &r.blocks {
            assert!(matches!(b.result, BlockResult::Represented { k: 2, n: 5, .. }));
        }
    }

    #[test]
    fn tree_blocks_use_layer_one() {
        let r = blocks_have_representations(&path(3).unwrap(), 1, 1, SearchBudget::default());
        assert_eq!(r.blocks.len(), 3);
        assert!(r.zero_density);
    }

    #[test]
    fn triangle_block_is_an_obstruction() {
        let g = Graph::new(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let r = blocks_have_representations(&g, 3, 5, SearchBudget::default());
        assert!(!r.zero_density);
        assert!(matches!(r.blocks[0].result, BlockResult::NotBipartite { .. }));
        assert!(matches!(r.blocks[1].result, BlockResult::Represented { k: 1, .. }));
    }
}
