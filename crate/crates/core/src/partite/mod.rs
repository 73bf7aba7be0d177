//! k-partite representations: a graph placed in the edge layer `L_k` of a
//! hypercube so that its top vertices (the `k`-sets) form the edge set of a
//! k-partite k-uniform hypergraph.

mod blocks_rep;
mod glue;
mod kpartite;
mod layer;
mod poles;

use std::collections::HashSet;

use serde::Serialize;

use crate::constructions::theta;
use crate::error::{domain, Error, Result};
use crate::graph::Graph;
use crate::subset::{VertexSubset, MAX_GROUND_SET};

pub use blocks_rep::{blocks_have_representations, BlockOutcome, BlockReport, BlockResult};
pub use glue::{glue_bottom, glue_top, GluedRepresentation};
pub use kpartite::is_k_partite;
pub use layer::{find_representation, find_representation_with};
pub use poles::{pole_distance_scan, PoleScanReport};

/// A `k`-uniform hypergraph on the ground set `[n]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Hypergraph {
    pub n: usize,
    pub k: usize,
    edges: Vec<VertexSubset>,
}

impl Hypergraph {
    /// Duplicates are merged; every hyperedge must have exactly `k`
    /// elements of `[n]`.
    pub fn new(n: usize, k: usize, edges: impl IntoIterator<Item = VertexSubset>) -> Result<Self> {
        if n > MAX_GROUND_SET {
            return Err(Error::ResourceLimit {
                what: "ground set size",
                value: n,
                cap: MAX_GROUND_SET,
            });
        }
        let mut list = Vec::new();
        for e in edges {
            if e.len() != k || e.bits() >> n != 0 {
                return domain(format!("hyperedge {e} is not a {k}-subset of [{n}]"));
            }
            list.push(VertexSubset::from_bits_unchecked(e.bits(), n));
        }
        list.sort_unstable();
        list.dedup();
        Ok(Hypergraph { n, k, edges: list })
    }

    /// Convenience constructor from 1-based element lists.
    pub fn from_lists(n: usize, k: usize, edges: &[&[usize]]) -> Result<Self> {
        let sets = edges
            .iter()
            .map(|e| VertexSubset::from_elements(e, n))
            .collect::<Result<Vec<_>>>()?;
        Hypergraph::new(n, k, sets)
    }

    pub fn edges(&self) -> &[VertexSubset] {
        &self.edges
    }

    /// Union of all hyperedges.
    pub fn support(&self) -> u32 {
        self.edges.iter().fold(0, |acc, e| acc | e.bits())
    }
}

/// A layer embedding plus a partition of the ground set certifying that
/// the top hypergraph is k-partite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Representation {
    pub k: usize,
    pub n: usize,
    /// guest vertex -> subset of size `k` (top) or `k - 1` (bottom)
    pub images: Vec<VertexSubset>,
    pub parts: Vec<VertexSubset>,
}

impl Representation {
    pub fn is_top(&self, v: usize) -> bool {
        self.images[v].len() == self.k
    }

    pub fn top_vertices(&self) -> Vec<usize> {
        (0..self.images.len()).filter(|&v| self.is_top(v)).collect()
    }

    /// The hypergraph formed by the top images.
    pub fn top_hypergraph(&self) -> Result<Hypergraph> {
        Hypergraph::new(
            self.n,
            self.k,
            self.images.iter().copied().filter(|s| s.len() == self.k),
        )
    }

    /// Adds a fresh element to every image and a new singleton part,
    /// giving a `(k + 1)`-partite representation on `[n + 1]`.
    pub fn padded(&self) -> Result<Representation> {
        let n = self.n + 1;
        if n > MAX_GROUND_SET {
            return Err(Error::ResourceLimit {
                what: "ground set size",
                value: n,
                cap: MAX_GROUND_SET,
            });
        }
        let fresh = 1u32 << self.n;
        let lift = |s: &VertexSubset| VertexSubset::from_bits_unchecked(s.bits(), n);
        let mut parts: Vec<VertexSubset> = self.parts.iter().map(lift).collect();
        parts.push(VertexSubset::from_bits_unchecked(fresh, n));
        Ok(Representation {
            k: self.k + 1,
            n,
            images: self
                .images
                .iter()
                .map(|s| VertexSubset::from_bits_unchecked(s.bits() | fresh, n))
                .collect(),
            parts,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum RepresentationViolation {
    ImageCount { images: usize, vertices: usize },
    OutsideGroundSet { vertex: usize },
    NotInLayer { vertex: usize, size: usize },
    NotInjective { u: usize, v: usize },
    EdgeNotInCube { u: usize, v: usize },
    PartCount { parts: usize },
    PartsOverlap { first: usize, second: usize },
    UncoveredElement { element: usize },
    NotTransversal { vertex: usize, part: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum RepresentationCheck {
    Valid,
    Invalid(RepresentationViolation),
}

impl RepresentationCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, RepresentationCheck::Valid)
    }
}

/// Checks every representation invariant and reports the first failure.
pub fn verify_representation(h: &Graph, r: &Representation) -> RepresentationCheck {
    use RepresentationViolation::*;
    let fail = RepresentationCheck::Invalid;
    if r.images.len() != h.vertex_count() {
        return fail(ImageCount {
            images: r.images.len(),
            vertices: h.vertex_count(),
        });
    }
    let ground = if r.n >= 32 { u32::MAX } else { (1u32 << r.n) - 1 };
    let mut seen = HashSet::new();
    let mut support = 0u32;
    for (v, s) in r.images.iter().enumerate() {
        if s.bits() & !ground != 0 {
            return fail(OutsideGroundSet { vertex: v });
        }
        if s.len() != r.k && s.len() + 1 != r.k {
            return fail(NotInLayer { vertex: v, size: s.len() });
        }
        support |= s.bits();
        if !seen.insert(s.bits()) {
            let u = r.images.iter().position(|t| t == s).unwrap();
            return fail(NotInjective { u, v });
        }
    }
    for &(u, v) in h.edges() {
        if !r.images[u].is_cube_neighbor(r.images[v]) {
            return fail(EdgeNotInCube { u, v });
        }
    }
    if r.parts.len() != r.k {
        return fail(PartCount { parts: r.parts.len() });
    }
    let mut covered = 0u32;
    for (i, p) in r.parts.iter().enumerate() {
        if let Some(j) = (0..i).find(|&j| r.parts[j].bits() & p.bits() != 0) {
            return fail(PartsOverlap { first: j, second: i });
        }
        covered |= p.bits();
    }
    let missing = support & !covered;
    if missing != 0 {
        return fail(UncoveredElement {
            element: missing.trailing_zeros() as usize + 1,
        });
    }
    for (v, s) in r.images.iter().enumerate() {
        if s.len() != r.k {
            continue;
        }
        if let Some(part) = r.parts.iter().position(|p| (p.bits() & s.bits()).count_ones() != 1) {
            return fail(NotTransversal { vertex: v, part });
        }
    }
    RepresentationCheck::Valid
}

/// The explicit 2-partite representation of `Θ(q)` on `[q + 2]`, using the
/// vertex numbering of [`crate::constructions::theta`]: main poles map to
/// `{1}` and `{2}`, middle pole `i` to `{i + 3}`, and the subdivision
/// vertex between middle pole `i` and main pole `t` to `{t, i + 3}`.
/// Parts are `{1, 2}` and `{3, .., q + 2}`.
pub fn theta_representation(q: usize) -> Result<Representation> {
    let t = theta(q)?;
    let n = q + 2;
    if n > MAX_GROUND_SET {
        return Err(Error::ResourceLimit {
            what: "ground set size",
            value: n,
            cap: MAX_GROUND_SET,
        });
    }
    let single = |e: usize| VertexSubset::from_bits_unchecked(1 << e, n);
    let mut images = vec![single(0); t.graph.vertex_count()];
    for (i, image) in images.iter_mut().take(q).enumerate() {
        *image = single(i + 2);
    }
    images[q] = single(0);
    images[q + 1] = single(1);
    // subdivision vertex of K_{q,2} edge (i, q + t) is q + 2 + 2i + t
    for i in 0..q {
        for side in 0..2 {
            images[q + 2 + 2 * i + side] = VertexSubset::from_bits_unchecked(1 << side | 1 << (i + 2), n);
        }
    }
    let parts = vec![
        VertexSubset::from_bits_unchecked(0b11, n),
        VertexSubset::from_bits_unchecked(((1u32 << q) - 1) << 2, n),
    ];
    Ok(Representation { k: 2, n, images, parts })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(e: &[usize], n: usize) -> VertexSubset {
        VertexSubset::from_elements(e, n).unwrap()
    }

    use crate::fixtures::c8_representation as c8_example;

    #[test]
    fn eight_cycle_example() {
        let (g, r) = c8_example([&[1, 3], &[2, 4]]);
        assert!(verify_representation(&g, &r).is_valid());
        let (g, r) = c8_example([&[1, 2], &[3, 4]]);
        assert!(matches!(
            verify_representation(&g, &r),
            RepresentationCheck::Invalid(RepresentationViolation::NotTransversal { vertex: 1, .. })
        ));
    }

    #[test]
    fn coinciding_images_are_rejected() {
        let (g, mut r) = c8_example([&[1, 3], &[2, 4]]);
        r.images[7] = r.images[1];
        assert!(matches!(
            verify_representation(&g, &r),
            RepresentationCheck::Invalid(RepresentationViolation::NotInjective { u: 1, v: 7 })
        ));
    }

    #[test]
    fn other_violations() {
        let (g, mut r) = c8_example([&[1, 3], &[2, 4]]);
        r.images[0] = set(&[1, 2, 3], 4);
        assert!(!verify_representation(&g, &r).is_valid());
        let (g, mut r) = c8_example([&[1, 3], &[2]]);
        assert_eq!(
            verify_representation(&g, &r),
            RepresentationCheck::Invalid(RepresentationViolation::UncoveredElement { element: 4 })
        );
        r.parts = vec![set(&[1, 3, 4], 4), set(&[2, 4], 4)];
        assert!(matches!(
            verify_representation(&g, &r),
            RepresentationCheck::Invalid(RepresentationViolation::PartsOverlap { .. })
        ));
    }

    #[test]
    fn theta_representation_is_valid() {
        for q in 2..=8 {
            let t = theta(q).unwrap();
            let r = theta_representation(q).unwrap();
            assert_eq!(verify_representation(&t.graph, &r), RepresentationCheck::Valid, "q = {q}");
        }
    }

    #[test]
    fn theta3_leg_through_first_middle_pole() {
        let t = theta(3).unwrap();
        let r = theta_representation(3).unwrap();
        // leg: main pole 3 - sub 5 - middle 0 - sub 6 - main pole 4
        let leg: Vec<String> = [3, 5, 0, 6, 4].iter().map(|&v| r.images[v].to_string()).collect();
        assert_eq!(leg, ["{1}", "{1,3}", "{3}", "{2,3}", "{2}"]);
        for w in [3usize, 5, 0, 6, 4].windows(2) {
            assert!(t.graph.has_edge(w[0], w[1]));
        }
        let top = r.top_hypergraph().unwrap();
        assert_eq!(top.edges().len(), 6);
        assert_eq!(r.images.len(), 11);
        assert!(r.images.iter().all(|s| s.len() <= 2 && s.ground_size() == 5));
    }

    #[test]
    fn padding_keeps_validity() {
        let t = theta(3).unwrap();
        let r = theta_representation(3).unwrap().padded().unwrap();
        assert_eq!((r.k, r.n), (3, 6));
        assert!(verify_representation(&t.graph, &r).is_valid());
    }

    #[test]
    fn hypergraph_rejects_wrong_sizes() {
        assert!(Hypergraph::from_lists(4, 2, &[&[1, 2, 3]]).is_err());
        assert!(Hypergraph::from_lists(3, 2, &[&[1, 4]]).is_err());
        let h = Hypergraph::from_lists(4, 2, &[&[1, 2], &[2, 1]]).unwrap();
        assert_eq!(h.edges().len(), 1);
    }
}
