//! Gluing two represented graphs at one vertex, keeping a partite
//! representation: at a shared top vertex the layers add up, at a shared
//! bottom vertex the ground sets are overlapped on the shared image.

use serde::Serialize;

use crate::constructions::{glue_at_vertex, glued_index, MarkedGraph};
use crate::error::{domain, Error, Result};
use crate::graph::Graph;
use crate::partite::{verify_representation, Representation, RepresentationCheck};
use crate::subset::{VertexSubset, MAX_GROUND_SET};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GluedRepresentation {
    #[serde(skip)]
    pub graph: MarkedGraph,
    pub representation: Representation,
}

fn check_inputs(ga: &Graph, ra: &Representation, gb: &Graph, rb: &Representation) -> Result<()> {
    for (g, r, name) in [(ga, ra, "first"), (gb, rb, "second")] {
        if let RepresentationCheck::Invalid(v) = verify_representation(g, r) {
            return domain(format!("{name} representation is invalid: {v:?}"));
        }
    }
    if ra.k != rb.k {
        return domain(format!("representations have different k ({} and {})", ra.k, rb.k));
    }
    Ok(())
}

fn check_ground(n: usize) -> Result<()> {
    if n > MAX_GROUND_SET {
        return Err(Error::ResourceLimit {
            what: "glued ground set size",
            value: n,
            cap: MAX_GROUND_SET,
        });
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn assemble(
    ga: &Graph,
    a: usize,
    gb: &Graph,
    b: usize,
    images_a: Vec<u32>,
    images_b: Vec<u32>,
    k: usize,
    n: usize,
    parts: Vec<u32>,
) -> Result<GluedRepresentation> {
    let graph = glue_at_vertex(&MarkedGraph::plain(ga.clone()), a, &MarkedGraph::plain(gb.clone()), b)?;
    let mut images = vec![0u32; graph.graph.vertex_count()];
    images[..images_a.len()].copy_from_slice(&images_a);
    for (y, img) in images_b.into_iter().enumerate() {
        if y != b {
            images[glued_index(ga.vertex_count(), a, b, y)] = img;
        }
    }
    let sub = |x: u32| VertexSubset::from_bits_unchecked(x, n);
    Ok(GluedRepresentation {
        graph,
        representation: Representation {
            k,
            n,
            images: images.into_iter().map(sub).collect(),
            parts: parts.into_iter().map(sub).collect(),
        },
    })
}

/// Glues at top vertices `a` and `b`. The ground sets are made disjoint,
/// every vertex `x` of the first graph becomes `x ∪ w` and every vertex `y`
/// of the second becomes `u ∪ y`, where `u` and `w` are the images of `a`
/// and `b`. The result lives in layer `2k` with parts `U_1..U_k, W_1..W_k`.
pub fn glue_top(
    ga: &Graph,
    ra: &Representation,
    a: usize,
    gb: &Graph,
    rb: &Representation,
    b: usize,
) -> Result<GluedRepresentation> {
    check_inputs(ga, ra, gb, rb)?;
    if a >= ra.images.len() || !ra.is_top(a) || b >= rb.images.len() || !rb.is_top(b) {
        return domain(format!("glue_top needs top vertices; got {a} and {b}"));
    }
    let n = ra.n + rb.n;
    check_ground(n)?;
    let shift = ra.n;
    let u = ra.images[a].bits();
    let w = rb.images[b].bits() << shift;
    let images_a = ra.images.iter().map(|x| x.bits() | w).collect();
    let images_b = rb.images.iter().map(|y| y.bits() << shift | u).collect();
    let parts = ra
        .parts
        .iter()
        .map(|p| p.bits())
        .chain(rb.parts.iter().map(|p| p.bits() << shift))
        .collect();
    assemble(ga, a, gb, b, images_a, images_b, 2 * ra.k, n, parts)
}

/// Relabelling of one side for [`glue_bottom`]: parts reordered so that the
/// part holding the `i`-th element of the shared image comes `i`-th, and
/// ground elements renamed so that the shared image becomes `{0..k-2}`.
struct BottomFrame {
    /// old element -> new element
    rename: Vec<u32>,
    /// parts in the new order, old labels
    parts: Vec<u32>,
}

fn bottom_frame(r: &Representation, v: usize, offset: u32) -> Result<BottomFrame> {
    let image = r.images[v].bits();
    let mut with_elem: Vec<(u32, u32)> = Vec::new();
    let mut without: Vec<u32> = Vec::new();
    for p in &r.parts {
        let hit = p.bits() & image;
        match hit.count_ones() {
            0 => without.push(p.bits()),
            1 => with_elem.push((hit.trailing_zeros(), p.bits())),
            _ => return domain(format!("image of vertex {v} meets a part twice")),
        }
    }
    if with_elem.len() + 1 != r.k || (image.count_ones() as usize) != with_elem.len() {
        return domain(format!("image of vertex {v} is not covered by distinct parts"));
    }
    with_elem.sort_unstable();
    let mut rename = vec![u32::MAX; r.n];
    for (i, &(e, _)) in with_elem.iter().enumerate() {
        rename[e as usize] = i as u32;
    }
    for (next, slot) in (offset..).zip(rename.iter_mut().filter(|s| **s == u32::MAX)) {
        *slot = next;
    }
    let parts = with_elem.into_iter().map(|(_, p)| p).chain(without).collect();
    Ok(BottomFrame { rename, parts })
}

fn apply(rename: &[u32], bits: u32) -> u32 {
    (0..rename.len()).filter(|&i| bits >> i & 1 == 1).fold(0, |acc, i| acc | 1 << rename[i])
}

/// Glues at bottom vertices `a` and `b`. Both ground sets are renamed so
/// that they overlap exactly in `{1..k-1}`, which is the image of the
/// shared vertex on both sides; the parts are aligned so that `U_i ∪ W_i`
/// stays a partition. The result stays in layer `k`.
pub fn glue_bottom(
    ga: &Graph,
    ra: &Representation,
    a: usize,
    gb: &Graph,
    rb: &Representation,
    b: usize,
) -> Result<GluedRepresentation> {
    check_inputs(ga, ra, gb, rb)?;
    if a >= ra.images.len() || ra.is_top(a) || b >= rb.images.len() || rb.is_top(b) {
        return domain(format!("glue_bottom needs bottom vertices; got {a} and {b}"));
    }
    let k = ra.k;
    let n = ra.n + rb.n - (k - 1);
    check_ground(n)?;
    let fa = bottom_frame(ra, a, (k - 1) as u32)?;
    let fb = bottom_frame(rb, b, ra.n as u32)?;
    let images_a = ra.images.iter().map(|x| apply(&fa.rename, x.bits())).collect();
    let images_b = rb.images.iter().map(|y| apply(&fb.rename, y.bits())).collect();
    let parts = fa
        .parts
        .iter()
        .zip(&fb.parts)
        .map(|(&p, &q)| apply(&fa.rename, p) | apply(&fb.rename, q))
        .collect();
    assemble(ga, a, gb, b, images_a, images_b, k, n, parts)
}
