use std::collections::BTreeSet;

use serde::Serialize;

use crate::graph::Graph;

/// Blocks (maximal 2-connected subgraphs and bridges) and cut vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    /// Each block as a sorted edge list; blocks sorted by first edge.
    pub blocks: Vec<Vec<(usize, usize)>>,
    pub cut_vertices: BTreeSet<usize>,
}

impl BlockDecomposition {
    pub fn block_vertices(&self, i: usize) -> Vec<usize> {
        let mut v: Vec<usize> = self.blocks[i].iter().flat_map(|&(a, b)| [a, b]).collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

/// Biconnected components by the Hopcroft–Tarjan edge-stack DFS, run
/// iteratively.
pub fn blocks(g: &Graph) -> BlockDecomposition {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut out: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut cuts = BTreeSet::new();

    for root in 0..n {
        if disc[root] != usize::MAX || g.degree(root) == 0 {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut root_children = 0;
        // (vertex, parent, next neighbour position)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(&mut (u, parent, ref mut pos)) = stack.last_mut() {
            if let Some(&w) = g.neighbors(u).get(*pos) {
                *pos += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((u, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    if u == root {
                        root_children += 1;
                    }
                    stack.push((w, u, 0));
                } else if w != parent && disc[w] < disc[u] {
                    edge_stack.push((u, w));
                    low[u] = low[u].min(disc[w]);
                }
                continue;
            }
            stack.pop();
            if parent == usize::MAX {
                continue;
            }
            low[parent] = low[parent].min(low[u]);
            if low[u] >= disc[parent] {
                if parent != root {
                    cuts.insert(parent);
                }
                let mut block = Vec::new();
                while let Some(e) = edge_stack.pop() {
                    block.push((e.0.min(e.1), e.0.max(e.1)));
                    if e == (parent, u) {
                        break;
                    }
                }
                block.sort_unstable();
                out.push(block);
            }
        }
        if root_children > 1 {
            cuts.insert(root);
        }
    }
    out.sort();
    BlockDecomposition {
        blocks: out,
        cut_vertices: cuts,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_hypercube;

    #[test]
    fn path_has_one_block_per_edge() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = blocks(&g);
        assert_eq!(b.blocks, vec![vec![(0, 1)], vec![(1, 2)], vec![(2, 3)]]);
        assert_eq!(b.cut_vertices.iter().copied().collect::<Vec<_>>(), vec![1, 2]);
    }

    #[test]
    fn cube_is_one_block() {
        let b = blocks(&build_hypercube(3).unwrap());
        assert_eq!(b.blocks.len(), 1);
        assert_eq!(b.blocks[0].len(), 12);
        assert!(b.cut_vertices.is_empty());
    }

    #[test]
    fn bowtie_and_isolated_vertices() {
        // two triangles sharing vertex 2, plus isolated vertex 5
        let g = Graph::new(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let b = blocks(&g);
        assert_eq!(b.blocks, vec![vec![(0, 1), (0, 2), (1, 2)], vec![(2, 3), (2, 4), (3, 4)]]);
        assert_eq!(b.cut_vertices.into_iter().collect::<Vec<_>>(), vec![2]);
    }

    #[test]
    fn blocks_partition_edges() {
        let g = Graph::new(
            9,
            [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3), (5, 6), (7, 8)],
        )
        .unwrap();
        let b = blocks(&g);
        let mut all: Vec<_> = b.blocks.iter().flatten().copied().collect();
        all.sort_unstable();
        assert_eq!(all, g.edges());
        assert_eq!(b.blocks.len(), 5);
        assert_eq!(b.cut_vertices.into_iter().collect::<Vec<_>>(), vec![2, 3, 5]);
    }
}
