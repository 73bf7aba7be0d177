//! Up-sets, full vertices, and the k-star count of a layer subgraph.
//!
//! For `G ⊆ L_j`, a vertex `y ∈ V_j` of the up-set trace `U_x` is full when
//! all `k` sets `y ∖ {e}`, `e ∈ y ∖ x`, are neighbours of `y` in `G`. The
//! leaves of a downward k-star at `y` intersect in exactly one
//! `x ∈ V_{j-k}`, so `Σ_x u_x` equals the number of k-stars
//! `Σ_y C(d_G(y), k)`.

use std::collections::{BTreeMap, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{domain, Result};
use crate::graph::{layer_subgraph, Graph};
use crate::subset::{k_subsets, VertexSubset};

/// A labelled subgraph of the edge layer `L_j` of `Q_n`.
#[derive(Debug, Clone)]
pub struct LayerGraph {
    graph: Graph,
    n: usize,
    j: usize,
    by_label: HashMap<u32, usize>,
}

impl LayerGraph {
    pub fn new(graph: Graph, j: usize) -> Result<Self> {
        let (Some(labels), Some(n)) = (graph.labels(), graph.ground_set_size()) else {
            return domain("layer graph needs subset labels");
        };
        if j == 0 || j > n {
            return domain(format!("layer {j} does not exist in Q_{n}"));
        }
        if let Some(bad) = labels.iter().find(|s| s.len() != j && s.len() + 1 != j) {
            return domain(format!("label {bad} is not in V_{j} or V_{}", j - 1));
        }
        let by_label = labels.iter().enumerate().map(|(v, s)| (s.bits(), v)).collect();
        Ok(LayerGraph { graph, n, j, by_label })
    }

    /// The whole layer `L_j`.
    pub fn complete(n: usize, j: usize) -> Result<Self> {
        LayerGraph::new(layer_subgraph(n, j)?, j)
    }

    /// `L_j` with each edge kept independently with probability `p`.
    pub fn random(n: usize, j: usize, p: f64, seed: u64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return domain(format!("edge probability {p} outside [0, 1]"));
        }
        let full = layer_subgraph(n, j)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let kept: Vec<(usize, usize)> = full.edges().iter().copied().filter(|_| rng.random_bool(p)).collect();
        LayerGraph::new(full.edge_subgraph(kept)?, j)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn vertex_of(&self, s: VertexSubset) -> Option<usize> {
        self.by_label.get(&s.bits()).copied()
    }

    /// Vertices in `V_j`.
    pub fn top_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        let labels = self.graph.labels().unwrap();
        (0..self.graph.vertex_count()).filter(move |&v| labels[v].len() == self.j)
    }
}

/// `u_x`: the number of full vertices of `U_x` for `|x| = j - k`.
pub fn up_set_full_vertices(g: &LayerGraph, x: VertexSubset, k: usize) -> Result<u64> {
    if k > g.j || x.len() + k != g.j {
        return domain(format!("|x| = {} but the layer needs j - k = {} - {k}", x.len(), g.j));
    }
    let labels = g.graph.labels().unwrap();
    let x = x.bits();
    let mut count = 0;
    for y in g.top_vertices() {
        let ybits = labels[y].bits();
        if ybits & x != x {
            continue;
        }
        let mut rest = ybits & !x;
        let mut full = true;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest ^= bit;
            match g.by_label.get(&(ybits ^ bit)) {
                Some(&below) if g.graph.has_edge(y, below) => {}
                _ => {
                    full = false;
                    break;
                }
            }
        }
        if full {
            count += 1;
        }
    }
    Ok(count)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StarCountReport {
    pub j: usize,
    pub k: usize,
    /// `Σ_{y ∈ V_j} C(d_G(y), k)`
    pub t: u64,
    /// `u_x` for every `x ∈ V_{j-k}` with `u_x > 0`
    pub per_x_full_counts: BTreeMap<VertexSubset, u64>,
    pub full_total: u64,
}

impl StarCountReport {
    pub fn holds(&self) -> bool {
        self.t == self.full_total
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Counts k-stars centred in `V_j` by the degree formula and, separately,
/// full vertices over all `x ∈ V_{j-k}`.
pub fn star_count_identity(g: &LayerGraph, k: usize) -> Result<StarCountReport> {
    if k > g.j {
        return domain(format!("star size {k} exceeds layer {}", g.j));
    }
    let t = g.top_vertices().map(|y| binomial(g.graph.degree(y) as u64, k as u64)).sum();
    let xs: Vec<u32> = k_subsets(g.n, g.j - k).collect();
    let counts: Vec<(u32, u64)> = xs
        .par_iter()
        .map(|&x| {
            let s = VertexSubset::from_bits_unchecked(x, g.n);
            (x, up_set_full_vertices(g, s, k).expect("cardinality checked"))
        })
        .collect();
    let per_x_full_counts: BTreeMap<VertexSubset, u64> = counts
        .into_iter()
        .filter(|&(_, c)| c > 0)
        .map(|(x, c)| (VertexSubset::from_bits_unchecked(x, g.n), c))
        .collect();
    let full_total = per_x_full_counts.values().sum();
    Ok(StarCountReport {
        j: g.j,
        k,
        t,
        per_x_full_counts,
        full_total,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(e: &[usize], n: usize) -> VertexSubset {
        VertexSubset::from_elements(e, n).unwrap()
    }

    #[test]
    fn complete_layer_everything_full() {
        let g = LayerGraph::complete(3, 2).unwrap();
        assert_eq!(up_set_full_vertices(&g, set(&[], 3), 2).unwrap(), 3);
        let r = star_count_identity(&g, 2).unwrap();
        assert_eq!((r.t, r.full_total), (3, 3));
        assert_eq!(r.per_x_full_counts.len(), 1);
    }

    #[test]
    fn one_missing_edge() {
        let full = layer_subgraph(3, 2).unwrap();
        let kept: Vec<_> = full.edges()[1..].to_vec();
        let g = LayerGraph::new(full.edge_subgraph(kept).unwrap(), 2).unwrap();
        assert_eq!(up_set_full_vertices(&g, set(&[], 3), 2).unwrap(), 2);
        assert!(star_count_identity(&g, 2).unwrap().holds());
    }

    #[test]
    fn low_degrees_give_zero() {
        let full = layer_subgraph(4, 2).unwrap();
        let g = LayerGraph::new(full.edge_subgraph([]).unwrap(), 2).unwrap();
        let r = star_count_identity(&g, 2).unwrap();
        assert_eq!((r.t, r.full_total), (0, 0));
        assert!(r.per_x_full_counts.is_empty());
    }

    #[test]
    fn cardinality_mismatch_is_an_error() {
        let g = LayerGraph::complete(4, 3).unwrap();
        assert!(up_set_full_vertices(&g, set(&[1, 2], 4), 2).is_err());
        assert!(star_count_identity(&g, 4).is_err());
    }

    #[test]
    fn random_layers_are_seeded() {
        let a = LayerGraph::random(6, 3, 0.5, 7).unwrap();
        let b = LayerGraph::random(6, 3, 0.5, 7).unwrap();
        assert_eq!(a.graph(), b.graph());
        assert!(a.graph().edge_count() < 60);
    }
}
