//! Cubical graphs: nice edge-colourings, hypercube embeddings, and the
//! conversions between them.
//!
//! A nice colouring induces a vertex potential `φ`: XOR of the colour
//! indicator vectors along any path from a root. The cycle condition says
//! `φ` is well defined; the path condition says it is injective; together
//! `φ` is an embedding into `Q_c`.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::graph::Graph;
use crate::search::{Meter, SearchBudget, SearchOutcome};
use crate::subset::{VertexSubset, MAX_GROUND_SET};

/// Edge colouring indexed like [`Graph::edges`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NiceColoring {
    pub colors: Vec<usize>,
    pub color_count: usize,
}

/// Guest vertex -> vertex of `Q_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Embedding {
    pub n: usize,
    pub images: Vec<VertexSubset>,
}

impl Embedding {
    pub fn new(n: usize, images: Vec<VertexSubset>) -> Result<Self> {
        if n > MAX_GROUND_SET {
            return Err(Error::ResourceLimit {
                what: "ground set size",
                value: n,
                cap: MAX_GROUND_SET,
            });
        }
        if let Some(bad) = images.iter().find(|s| s.bits() >> n != 0) {
            return domain(format!("image {bad} lies outside a ground set of size {n}"));
        }
        Ok(Embedding { n, images })
    }

    /// Checks injectivity and that every edge of `g` maps to a cube edge.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.images.len() != g.vertex_count() {
            return domain(format!(
                "embedding has {} images for {} vertices",
                self.images.len(),
                g.vertex_count()
            ));
        }
        let mut seen = HashSet::new();
        for (v, s) in self.images.iter().enumerate() {
            if !seen.insert(s.bits()) {
                return domain(format!("embedding is not injective at vertex {v} ({s})"));
            }
        }
        for &(u, v) in g.edges() {
            if !self.images[u].is_cube_neighbor(self.images[v]) {
                return domain(format!("edge ({u}, {v}) does not map to a hypercube edge"));
            }
        }
        Ok(())
    }

    /// XOR-translates every image so that vertex `v` maps to the empty set.
    pub fn translated_to_root(&self, v: usize) -> Embedding {
        let shift = self.images[v].bits();
        Embedding {
            n: self.n,
            images: self
                .images
                .iter()
                .map(|s| VertexSubset::from_bits_unchecked(s.bits() ^ shift, self.n))
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ColoringViolation {
    /// A cycle on which some colour appears an odd number of times.
    OddColorCycle { cycle: Vec<usize> },
    /// A path between `u` and `v` on which every colour appears an even
    /// number of times.
    EvenColorPath { u: usize, v: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum NiceColoringCheck {
    Valid,
    Invalid(ColoringViolation),
}

impl NiceColoringCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, NiceColoringCheck::Valid)
    }
}

const MAX_COLORS: usize = 64;

fn tree_path(mut a: usize, mut b: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    left.extend(right.into_iter().rev());
    left
}

/// Checks the nice-colouring conditions through the potential map.
pub fn verify_nice_coloring(g: &Graph, c: &NiceColoring) -> Result<NiceColoringCheck> {
    if c.colors.len() != g.edge_count() {
        return domain(format!(
            "{} colours given for {} edges; every edge must be coloured",
            c.colors.len(),
            g.edge_count()
        ));
    }
    if c.color_count > MAX_COLORS {
        return Err(Error::ResourceLimit {
            what: "colour count",
            value: c.color_count,
            cap: MAX_COLORS,
        });
    }
    if let Some(&bad) = c.colors.iter().find(|&&x| x >= c.color_count) {
        return domain(format!("colour {bad} outside 0..{}", c.color_count));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    if n == 0 {
        return Ok(NiceColoringCheck::Valid);
    }
    let color_of = |u: usize, v: usize| c.colors[g.edge_index(u, v).unwrap()];

    let mut phi = vec![0u64; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let order = g.bfs_order(0);
    for &(v, p) in &order[1..] {
        let p = p.unwrap();
        parent[v] = p;
        depth[v] = depth[p] + 1;
        phi[v] = phi[p] ^ 1 << color_of(p, v);
    }
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if parent[v] == u || parent[u] == v {
            continue;
        }
        if phi[u] ^ phi[v] != 1 << c.colors[i] {
            return Ok(NiceColoringCheck::Invalid(ColoringViolation::OddColorCycle {
                cycle: tree_path(u, v, &parent, &depth),
            }));
        }
    }
    let mut sorted: Vec<(u64, usize)> = phi.iter().copied().zip(0..).collect();
    sorted.sort_unstable();
    for w in sorted.windows(2) {
        if w[0].0 == w[1].0 {
            return Ok(NiceColoringCheck::Invalid(ColoringViolation::EvenColorPath {
                u: w[0].1,
                v: w[1].1,
            }));
        }
    }
    Ok(NiceColoringCheck::Valid)
}

/// The potential map of a nice colouring, as an embedding into
/// `Q_{color_count}` with vertex 0 at the empty set.
pub fn coloring_to_embedding(g: &Graph, c: &NiceColoring) -> Result<Embedding> {
    if let NiceColoringCheck::Invalid(v) = verify_nice_coloring(g, c)? {
        return domain(format!("colouring is not nice: {v:?}"));
    }
    if c.color_count > MAX_GROUND_SET {
        return Err(Error::ResourceLimit {
            what: "colour count",
            value: c.color_count,
            cap: MAX_GROUND_SET,
        });
    }
    let mut phi = vec![0u32; g.vertex_count()];
    if g.vertex_count() > 0 {
        for &(v, p) in &g.bfs_order(0)[1..] {
            let p = p.unwrap();
            phi[v] = phi[p] ^ 1 << c.colors[g.edge_index(p, v).unwrap()];
        }
    }
    Embedding::new(
        c.color_count,
        phi.into_iter()
            .map(|b| VertexSubset::from_bits_unchecked(b, c.color_count))
            .collect(),
    )
}

/// Colours every edge by the coordinate in which its endpoint images differ.
pub fn embedding_to_coloring(g: &Graph, e: &Embedding) -> Result<NiceColoring> {
    e.validate(g)?;
    let colors = g
        .edges()
        .iter()
        .map(|&(u, v)| (e.images[u].bits() ^ e.images[v].bits()).trailing_zeros() as usize)
        .collect();
    Ok(NiceColoring {
        colors,
        color_count: e.n,
    })
}

/// How much of `Q_n`'s automorphism group the searches quotient out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symmetry {
    /// Root at the empty set; coordinates introduced in index order.
    Reduced,
    /// No reduction; every root image and coordinate is tried.
    Full,
}

/// Search order shared by both cubicality searches.
struct Plan {
    order: Vec<usize>,
    /// BFS parent position (None for the root)
    parent: Vec<Option<usize>>,
    /// earlier positions adjacent in the guest, other than the parent
    back: Vec<Vec<usize>>,
    /// guest distances between positions
    dist: Vec<Vec<u32>>,
}

fn plan(g: &Graph) -> Result<Plan> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let order: Vec<usize> = g.bfs_order(0).into_iter().map(|(v, _)| v).collect();
    let mut pos = vec![0; g.vertex_count()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let raw = g.distance_matrix();
    let dist = order
        .iter()
        .map(|&u| order.iter().map(|&v| raw[u][v]).collect())
        .collect();
    let mut parent = Vec::with_capacity(order.len());
    let mut back = Vec::with_capacity(order.len());
    for (i, &v) in order.iter().enumerate() {
        let mut earlier: Vec<usize> = g.neighbors(v).iter().map(|&w| pos[w]).filter(|&p| p < i).collect();
        earlier.sort_unstable();
        let p = earlier.first().copied();
        parent.push(p);
        back.push(earlier.into_iter().skip(1).collect());
    }
    Ok(Plan {
        order,
        parent,
        back,
        dist,
    })
}

/// Hamming distance between images must not exceed the guest distance and
/// must have the same parity; distinct vertices need distinct images.
#[inline]
fn distances_ok(plan: &Plan, images: &[u32], pos: usize, x: u32) -> bool {
    images[..pos].iter().enumerate().all(|(i, &y)| {
        let h = (x ^ y).count_ones();
        let d = plan.dist[pos][i];
        h >= 1 && h <= d && (h ^ d) & 1 == 0
    })
}

fn check_dimension(n: usize) -> Result<()> {
    if n > MAX_GROUND_SET {
        return Err(Error::ResourceLimit {
            what: "hypercube dimension",
            value: n,
            cap: MAX_GROUND_SET,
        });
    }
    Ok(())
}

/// Searches for a nice colouring with at most `c_max` colours by choosing
/// the colour of each BFS-tree edge, which fixes the potential of the
/// child. Colours are introduced in index order. `ExhaustedNone` proves
/// that `g` is not a subgraph of `Q_{c_max}`.
pub fn find_nice_coloring(g: &Graph, c_max: usize, budget: SearchBudget) -> Result<SearchOutcome<NiceColoring>> {
    if c_max == 0 {
        return domain("colour bound must be at least 1");
    }
    check_dimension(c_max)?;
    let plan = plan(g)?;
    let meter = Meter::new(budget);
    let n = plan.order.len();
    if n == 0 {
        return Ok(SearchOutcome::found(NiceColoring { colors: vec![], color_count: 0 }, 0));
    }
    let mut phi = vec![0u32; n];
    // colours used so far, indexed by depth
    let mut used = vec![0usize; n + 1];

    fn go(plan: &Plan, meter: &Meter, c_max: usize, phi: &mut [u32], used: &mut [usize], pos: usize) -> Option<bool> {
        if pos == phi.len() {
            return Some(true);
        }
        let parent = phi[plan.parent[pos].unwrap()];
        let open = used[pos];
        for color in 0..c_max.min(open + 1) {
            if !meter.tick() {
                return None;
            }
            let x = parent ^ 1 << color;
            if !distances_ok(plan, phi, pos, x) {
                continue;
            }
            phi[pos] = x;
            used[pos + 1] = open.max(color + 1);
            match go(plan, meter, c_max, phi, used, pos + 1) {
                Some(false) => {}
                other => return other,
            }
        }
        Some(false)
    }

    match go(&plan, &meter, c_max, &mut phi, &mut used, 1) {
        None => Ok(SearchOutcome::inconclusive(meter.nodes())),
        Some(false) => Ok(SearchOutcome::exhausted(meter.nodes())),
        Some(true) => {
            let mut by_vertex = vec![0u32; n];
            for (i, &v) in plan.order.iter().enumerate() {
                by_vertex[v] = phi[i];
            }
            let colors = g
                .edges()
                .iter()
                .map(|&(u, v)| (by_vertex[u] ^ by_vertex[v]).trailing_zeros() as usize)
                .collect();
            Ok(SearchOutcome::found(
                NiceColoring {
                    colors,
                    color_count: used[n],
                },
                meter.nodes(),
            ))
        }
    }
}

/// Direct backtracking embedding of `g` into `Q_n`.
pub fn embed_in_hypercube(g: &Graph, n: usize, budget: SearchBudget) -> Result<SearchOutcome<Embedding>> {
    embed_in_hypercube_with(g, n, budget, Symmetry::Reduced)
}

/// [`embed_in_hypercube`] with an explicit symmetry mode; `Full` exists to
/// cross-check the completeness of the reduction on small inputs.
pub fn embed_in_hypercube_with(
    g: &Graph,
    n: usize,
    budget: SearchBudget,
    symmetry: Symmetry,
) -> Result<SearchOutcome<Embedding>> {
    check_dimension(n)?;
    let plan = plan(g)?;
    let meter = Meter::new(budget);
    let count = plan.order.len();
    if count == 0 {
        return Ok(SearchOutcome::found(Embedding::new(n, vec![])?, 0));
    }

    struct State<'a> {
        plan: &'a Plan,
        meter: &'a Meter,
        n: usize,
        symmetry: Symmetry,
        images: Vec<u32>,
        taken: HashSet<u32>,
        /// union of all coordinates touched so far
        touched: u32,
    }

    impl State<'_> {
        fn place(&mut self, pos: usize, x: u32) -> Option<bool> {
            if !self.meter.tick() {
                return None;
            }
            if self.taken.contains(&x) || !distances_ok(self.plan, &self.images, pos, x) {
                return Some(false);
            }
            if self.plan.back[pos]
                .iter()
                .any(|&b| (self.images[b] ^ x).count_ones() != 1)
            {
                return Some(false);
            }
            self.images[pos] = x;
            self.taken.insert(x);
            let saved = self.touched;
            if let Some(p) = self.plan.parent[pos] {
                self.touched |= x ^ self.images[p];
            }
            let r = self.extend(pos + 1);
            self.touched = saved;
            self.taken.remove(&x);
            r
        }

        fn extend(&mut self, pos: usize) -> Option<bool> {
            if pos == self.images.len() {
                return Some(true);
            }
            let parent = self.images[self.plan.parent[pos].unwrap()];
            let limit = match self.symmetry {
                // touched coordinates always form a prefix 0..m
                Symmetry::Reduced => self.n.min(self.touched.count_ones() as usize + 1),
                Symmetry::Full => self.n,
            };
            for coord in 0..limit {
                match self.place(pos, parent ^ 1 << coord) {
                    Some(false) => {}
                    other => return other,
                }
            }
            Some(false)
        }
    }

    let mut st = State {
        plan: &plan,
        meter: &meter,
        n,
        symmetry,
        images: vec![0; count],
        taken: HashSet::new(),
        touched: 0,
    };
    let roots: Vec<u32> = match symmetry {
        Symmetry::Reduced => vec![0],
        Symmetry::Full => (0..1u32 << n).collect(),
    };
    let mut result = Some(false);
    for r in roots {
        result = st.place(0, r);
        if result != Some(false) {
            break;
        }
    }
    match result {
        None => Ok(SearchOutcome::inconclusive(meter.nodes())),
        Some(false) => Ok(SearchOutcome::exhausted(meter.nodes())),
        Some(true) => {
            let mut images = vec![VertexSubset::from_bits_unchecked(0, n); count];
            for (i, &v) in plan.order.iter().enumerate() {
                images[v] = VertexSubset::from_bits_unchecked(st.images[i], n);
            }
            Ok(SearchOutcome::found(Embedding::new(n, images)?, meter.nodes()))
        }
    }
}
