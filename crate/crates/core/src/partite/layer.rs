//! Backtracking embeddings of a bipartite guest into the edge layer `L_k`
//! of `Q_n`.

use std::collections::HashSet;

use crate::cubicality::Symmetry;
use crate::error::{domain, Error, Result};
use crate::graph::{bipartition, Graph};
use crate::partite::kpartite::k_partition;
use crate::partite::{Hypergraph, Representation};
use crate::search::{Meter, SearchBudget, SearchOutcome};
use crate::subset::{k_subsets, VertexSubset, MAX_GROUND_SET};

/// Search order: BFS from vertex 0. Built once per (guest, k, n, top side).
pub(crate) struct LayerPlan {
    order: Vec<usize>,
    parent: Vec<Option<usize>>,
    /// earlier adjacent positions other than the parent
    back: Vec<Vec<usize>>,
    dist: Vec<Vec<u32>>,
    /// whether the vertex at each position is a top vertex
    top: Vec<bool>,
    k: usize,
    n: usize,
}

impl LayerPlan {
    /// `None` when a degree bound already rules out every embedding: a
    /// `k`-set has `k` neighbours below it and a `(k-1)`-set has
    /// `n - k + 1` above it.
    pub(crate) fn new(g: &Graph, k: usize, n: usize, top_side: u8) -> Result<Option<LayerPlan>> {
        if k == 0 || k > n {
            return domain(format!("layer {k} does not exist in Q_{n}"));
        }
        if n > MAX_GROUND_SET {
            return Err(Error::ResourceLimit {
                what: "hypercube dimension",
                value: n,
                cap: MAX_GROUND_SET,
            });
        }
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        let sides = bipartition(g)?;
        let is_top = |v: usize| sides.side(v) == top_side;
        let fits = (0..g.vertex_count()).all(|v| {
            let cap = if is_top(v) { k } else { n - k + 1 };
            g.degree(v) <= cap
        });
        if !fits || g.vertex_count() == 0 {
            return Ok(None);
        }
        let order: Vec<usize> = g.bfs_order(0).into_iter().map(|(v, _)| v).collect();
        let mut pos = vec![0; g.vertex_count()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let raw = g.distance_matrix();
        let mut parent = Vec::new();
        let mut back = Vec::new();
        for (i, &v) in order.iter().enumerate() {
            let mut earlier: Vec<usize> = g.neighbors(v).iter().map(|&w| pos[w]).filter(|&p| p < i).collect();
            earlier.sort_unstable();
            parent.push(earlier.first().copied());
            back.push(earlier.into_iter().skip(1).collect());
        }
        Ok(Some(LayerPlan {
            dist: order.iter().map(|&u| order.iter().map(|&v| raw[u][v]).collect()).collect(),
            top: order.iter().map(|&v| is_top(v)).collect(),
            order,
            parent,
            back,
            k,
            n,
        }))
    }
}

/// Visits every layer embedding (up to coordinate permutations when
/// `symmetry` is `Reduced`). The visitor gets images indexed by guest
/// vertex and returns `false` to stop. Returns `None` if the budget ran
/// out, `Some(true)` if the visitor stopped the search, `Some(false)` if
/// the tree was closed.
pub(crate) fn visit_layer_embeddings(
    plan: &LayerPlan,
    symmetry: Symmetry,
    meter: &Meter,
    visit: &mut dyn FnMut(&[u32]) -> bool,
) -> Option<bool> {
    struct Walk<'a> {
        plan: &'a LayerPlan,
        meter: &'a Meter,
        symmetry: Symmetry,
        images: Vec<u32>,
        by_vertex: Vec<u32>,
        taken: HashSet<u32>,
        touched: u32,
        visit: &'a mut dyn FnMut(&[u32]) -> bool,
    }

    impl Walk<'_> {
        fn place(&mut self, pos: usize, x: u32) -> Option<bool> {
            if !self.meter.tick() {
                return None;
            }
            if self.taken.contains(&x) {
                return Some(false);
            }
            let plan = self.plan;
            if plan.back[pos].iter().any(|&b| (self.images[b] ^ x).count_ones() != 1) {
                return Some(false);
            }
            let fine = self.images[..pos].iter().enumerate().all(|(i, &y)| {
                let h = (x ^ y).count_ones();
                let d = plan.dist[pos][i];
                h <= d && (h ^ d) & 1 == 0
            });
            if !fine {
                return Some(false);
            }
            self.images[pos] = x;
            self.by_vertex[plan.order[pos]] = x;
            self.taken.insert(x);
            let saved = self.touched;
            self.touched |= x;
            let r = self.extend(pos + 1);
            self.touched = saved;
            self.taken.remove(&x);
            r
        }

        fn extend(&mut self, pos: usize) -> Option<bool> {
            if pos == self.images.len() {
                return Some(!(self.visit)(&self.by_vertex));
            }
            let y = self.images[self.plan.parent[pos].unwrap()];
            let n = self.plan.n;
            if self.plan.top[pos] {
                // go up: add one element
                let limit = match self.symmetry {
                    Symmetry::Reduced => n.min(self.touched.count_ones() as usize + 1),
                    Symmetry::Full => n,
                };
                for c in (0..limit).filter(|&c| y >> c & 1 == 0) {
                    match self.place(pos, y | 1 << c) {
                        Some(false) => {}
                        other => return other,
                    }
                }
            } else {
                let mut rest = y;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    rest ^= bit;
                    match self.place(pos, y ^ bit) {
                        Some(false) => {}
                        other => return other,
                    }
                }
            }
            Some(false)
        }
    }

    let count = plan.order.len();
    let root_card = if plan.top[0] { plan.k } else { plan.k - 1 };
    let roots: Vec<u32> = match symmetry {
        Symmetry::Reduced => vec![(1u32 << root_card) - 1],
        Symmetry::Full => k_subsets(plan.n, root_card).collect(),
    };
    let mut walk = Walk {
        plan,
        meter,
        symmetry,
        images: vec![0; count],
        by_vertex: vec![0; count],
        taken: HashSet::new(),
        touched: 0,
        visit,
    };
    for r in roots {
        match walk.place(0, r) {
            Some(false) => {}
            other => return other,
        }
    }
    Some(false)
}

/// Exhaustive search for a `k`-partite representation of `h` inside
/// `L_k` of `Q_n`, trying both sides of the bipartition as the top side.
pub fn find_representation(h: &Graph, k: usize, n: usize, budget: SearchBudget) -> Result<SearchOutcome<Representation>> {
    find_representation_with(h, k, n, budget, Symmetry::Reduced)
}

pub fn find_representation_with(
    h: &Graph,
    k: usize,
    n: usize,
    budget: SearchBudget,
    symmetry: Symmetry,
) -> Result<SearchOutcome<Representation>> {
    bipartition(h)?;
    let meter = Meter::new(budget);
    let mut found: Option<Representation> = None;
    let mut incomplete = false;
    for top_side in 0..2u8 {
        let Some(plan) = LayerPlan::new(h, k, n, top_side)? else {
            continue;
        };
        let mut visit = |images: &[u32]| {
            let tops = images
                .iter()
                .filter(|b| b.count_ones() as usize == k)
                .map(|&b| VertexSubset::from_bits_unchecked(b, n));
            let hyper = Hypergraph::new(n, k, tops).expect("top images are k-sets");
            let outcome = k_partition(&hyper, &meter);
            match outcome.into_witness() {
                Some(parts) => {
                    found = Some(Representation {
                        k,
                        n,
                        images: images.iter().map(|&b| VertexSubset::from_bits_unchecked(b, n)).collect(),
                        parts,
                    });
                    false
                }
                None => !meter.is_exhausted(),
            }
        };
        match visit_layer_embeddings(&plan, symmetry, &meter, &mut visit) {
            None => incomplete = true,
            Some(true) if found.is_none() => incomplete = true,
            _ => {}
        }
        if found.is_some() || incomplete {
            break;
        }
    }
    Ok(match found {
        Some(r) => SearchOutcome::found(r, meter.nodes()),
        None if incomplete => SearchOutcome::inconclusive(meter.nodes()),
        None => SearchOutcome::exhausted(meter.nodes()),
    })
}
