//! Constructors for the graph families used throughout the crate, with
//! their distinguished vertices recorded as marks.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    MainPoles,
    Poles,
    SubdivisionVertices,
    SharedVertex,
}

impl Role {
    pub const ALL: [Role; 4] = [
        Role::MainPoles,
        Role::Poles,
        Role::SubdivisionVertices,
        Role::SharedVertex,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Role::MainPoles => "main_poles",
            Role::Poles => "poles",
            Role::SubdivisionVertices => "subdivision_vertices",
            Role::SharedVertex => "shared_vertex",
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Role {
    type Err = Error;

    fn from_str(s: &str) -> Result<Role> {
        Role::ALL
            .into_iter()
            .find(|r| r.as_str() == s)
            .ok_or_else(|| Error::Domain(format!("unknown role {s:?}")))
    }
}

/// A graph together with named vertex roles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedGraph {
    pub graph: Graph,
    marks: BTreeMap<Role, Vec<usize>>,
}

impl MarkedGraph {
    pub fn plain(graph: Graph) -> Self {
        MarkedGraph {
            graph,
            marks: BTreeMap::new(),
        }
    }

    /// Adds a role; vertices are sorted and deduplicated.
    pub fn with_mark(mut self, role: Role, mut vertices: Vec<usize>) -> Result<Self> {
        if let Some(&v) = vertices.iter().find(|&&v| v >= self.graph.vertex_count()) {
            return domain(format!("marked vertex {v} is not in the graph"));
        }
        vertices.sort_unstable();
        vertices.dedup();
        self.marks.insert(role, vertices);
        Ok(self)
    }

    pub fn marks(&self) -> &BTreeMap<Role, Vec<usize>> {
        &self.marks
    }

    pub fn mark(&self, role: Role) -> &[usize] {
        self.marks.get(&role).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn main_poles(&self) -> &[usize] {
        self.mark(Role::MainPoles)
    }

    pub fn shared_vertex(&self) -> Option<usize> {
        self.mark(Role::SharedVertex).first().copied()
    }
}

/// Cycle `C_len` on vertices `0..len` in cyclic order.
pub fn cycle(len: usize) -> Result<Graph> {
    if len < 3 {
        return domain(format!("a cycle needs at least 3 vertices, got {len}"));
    }
    Graph::new(len, (0..len).map(|i| (i, (i + 1) % len)))
}

/// Path with `edges` edges on vertices `0..=edges`.
pub fn path(edges: usize) -> Result<Graph> {
    Graph::new(edges + 1, (0..edges).map(|i| (i, i + 1)))
}

pub fn complete(n: usize) -> Result<Graph> {
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `K_{s,t}`: the `s`-side is `0..s`, the `t`-side is `s..s+t`.
pub fn complete_bipartite(s: usize, t: usize) -> Result<Graph> {
    if s == 0 || t == 0 {
        return domain("complete bipartite sides must be non-empty");
    }
    Graph::new(s + t, (0..s).flat_map(|u| (s..s + t).map(move |v| (u, v))))
}

/// The 1-subdivision `G(1)`. Poles keep their indices; the subdivision
/// vertex of the `i`-th edge (in [`Graph::edges`] order) is `|V(G)| + i`.
pub fn subdivide(g: &Graph) -> Result<MarkedGraph> {
    let n = g.vertex_count();
    let edges = g
        .edges()
        .iter()
        .enumerate()
        .flat_map(|(i, &(u, v))| [(u, n + i), (n + i, v)]);
    let sub = Graph::new(n + g.edge_count(), edges)?;
    MarkedGraph::plain(sub)
        .with_mark(Role::Poles, (0..n).collect())?
        .with_mark(Role::SubdivisionVertices, (n..n + g.edge_count()).collect())
}

/// `Θ(q) = K_{q,2}(1)`: `q` internally disjoint paths of length 4 between
/// the main poles `q` and `q + 1`. Middle poles are `0..q`.
pub fn theta(q: usize) -> Result<MarkedGraph> {
    if q < 2 {
        return domain(format!("theta graph needs q >= 2, got {q}"));
    }
    subdivide(&complete_bipartite(q, 2)?)?.with_mark(Role::MainPoles, vec![q, q + 1])
}

/// Index of `B`'s vertex `x` after gluing `B` onto `A` with `b` identified
/// to `a`.
pub fn glued_index(a_len: usize, a: usize, b: usize, x: usize) -> usize {
    use std::cmp::Ordering::*;
    match x.cmp(&b) {
        Equal => a,
        Less => a_len + x,
        Greater => a_len + x - 1,
    }
}

/// Disjoint union of `A` and `B` with `a` and `b` identified. `A` keeps its
/// numbering; `B`'s other vertices follow in order. Marks of both sides
/// are merged and the identified vertex is marked as shared.
pub fn glue_at_vertex(a_graph: &MarkedGraph, a: usize, b_graph: &MarkedGraph, b: usize) -> Result<MarkedGraph> {
    let (ga, gb) = (&a_graph.graph, &b_graph.graph);
    if a >= ga.vertex_count() || b >= gb.vertex_count() {
        return domain(format!("glue vertices ({a}, {b}) are not in the graphs"));
    }
    let an = ga.vertex_count();
    let map = |x| glued_index(an, a, b, x);
    let edges = ga
        .edges()
        .iter()
        .copied()
        .chain(gb.edges().iter().map(|&(u, v)| (map(u), map(v))));
    let graph = Graph::new(an + gb.vertex_count() - 1, edges)?;
    let mut out = MarkedGraph::plain(graph);
    for role in Role::ALL {
        let mut vs: Vec<usize> = a_graph.mark(role).to_vec();
        vs.extend(b_graph.mark(role).iter().map(|&x| map(x)));
        if role == Role::SharedVertex {
            vs.push(a);
        }
        if !vs.is_empty() {
            out = out.with_mark(role, vs)?;
        }
    }
    Ok(out)
}

/// `H(q)`: two copies of `Θ(q)` where the first main pole of copy 2 is
/// identified with the least subdivision vertex of copy 1 adjacent to copy
/// 1's first main pole.
pub fn h_graph(q: usize) -> Result<MarkedGraph> {
    if q < 3 {
        return domain(format!("H(q) needs q >= 3, got {q}"));
    }
    let t = theta(q)?;
    let pole = t.main_poles()[0];
    let sub = t
        .graph
        .neighbors(pole)
        .iter()
        .copied()
        .filter(|v| t.mark(Role::SubdivisionVertices).contains(v))
        .min()
        .expect("main pole has subdivision neighbours");
    glue_at_vertex(&t, sub, &t, pole)
}

/// `q` copies of `B` pairwise sharing only their copy of `b`.
pub fn star_of_copies(b_graph: &MarkedGraph, b: usize, q: usize) -> Result<MarkedGraph> {
    if q == 0 {
        return domain("star of copies needs q >= 1");
    }
    if b >= b_graph.graph.vertex_count() {
        return domain(format!("vertex {b} is not in the graph"));
    }
    let mut out = b_graph.clone().with_mark(Role::SharedVertex, vec![b])?;
    for _ in 1..q {
        out = glue_at_vertex(&out, b, b_graph, b)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::blocks;
    use crate::copies::enumerate_copies;
    use crate::graph::bipartition;
    use crate::search::SearchBudget;

    fn degrees(g: &Graph) -> Vec<usize> {
        let mut d: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    fn isomorphic(a: &Graph, b: &Graph) -> bool {
        a.vertex_count() == b.vertex_count()
            && a.edge_count() == b.edge_count()
            && !enumerate_copies(a, b, 1, SearchBudget::default()).copies.is_empty()
    }

    #[test]
    fn subdivision_examples() {
        let c6 = subdivide(&complete(3).unwrap()).unwrap();
        assert!(isomorphic(&c6.graph, &cycle(6).unwrap()));
        let p2 = subdivide(&path(1).unwrap()).unwrap();
        assert!(isomorphic(&p2.graph, &path(2).unwrap()));
        let t = subdivide(&complete_bipartite(3, 2).unwrap()).unwrap();
        assert_eq!((t.graph.vertex_count(), t.graph.edge_count()), (11, 12));
        assert_eq!(t.mark(Role::Poles).len(), 5);
        assert_eq!(t.mark(Role::SubdivisionVertices).len(), 6);
    }

    #[test]
    fn complete_bipartite_examples() {
        assert_eq!(complete_bipartite(1, 1).unwrap().edges(), &[(0, 1)]);
        let k = complete_bipartite(3, 2).unwrap();
        assert_eq!((k.vertex_count(), k.edge_count()), (5, 6));
        assert_eq!(degrees(&complete_bipartite(2, 4).unwrap()), vec![4, 4, 2, 2, 2, 2]);
        assert!(complete_bipartite(0, 2).is_err());
    }

    #[test]
    fn theta_examples() {
        assert!(isomorphic(&theta(2).unwrap().graph, &cycle(8).unwrap()));
        let t3 = theta(3).unwrap();
        assert_eq!((t3.graph.vertex_count(), t3.graph.edge_count()), (11, 12));
        assert_eq!(degrees(&t3.graph).iter().filter(|&&d| d == 3).count(), 2);
        let t5 = theta(5).unwrap();
        assert_eq!((t5.graph.vertex_count(), t5.graph.edge_count()), (17, 20));
        assert!(theta(1).is_err());
    }

    #[test]
    fn theta_legs_have_length_four() {
        for q in 2..=6 {
            let t = theta(q).unwrap();
            let [a, b] = t.main_poles() else { panic!() };
            assert_eq!(t.graph.degree(*a), q);
            assert_eq!(t.graph.bfs_distances(*a)[*b], 4);
            let side = bipartition(&t.graph).unwrap();
            assert_eq!(side.side(*a), side.side(*b));
        }
    }

    #[test]
    fn h_graph_examples() {
        let h = h_graph(3).unwrap();
        assert_eq!((h.graph.vertex_count(), h.graph.edge_count()), (21, 24));
        assert_eq!(h.graph.degree(h.shared_vertex().unwrap()), 5);
        let h4 = h_graph(4).unwrap();
        let b = blocks(&h4.graph);
        assert_eq!(b.blocks.iter().map(Vec::len).collect::<Vec<_>>(), vec![16, 16]);
        assert_eq!(b.cut_vertices.len(), 1);
        assert!(h_graph(2).is_err());
    }

    #[test]
    fn every_h3_identification_is_isomorphic() {
        let t = theta(3).unwrap();
        let reference = h_graph(3).unwrap().graph;
        for &s in t.mark(Role::SubdivisionVertices) {
            for &p in t.main_poles() {
                let alt = glue_at_vertex(&t, s, &t, p).unwrap();
                assert!(isomorphic(&alt.graph, &reference), "sub {s}, pole {p}");
            }
        }
    }

    #[test]
    fn gluing_examples() {
        let e = MarkedGraph::plain(path(1).unwrap());
        let p = glue_at_vertex(&e, 1, &e, 0).unwrap();
        assert!(isomorphic(&p.graph, &path(2).unwrap()));
        let c8 = MarkedGraph::plain(cycle(8).unwrap());
        let two = glue_at_vertex(&c8, 3, &c8, 5).unwrap();
        assert_eq!((two.graph.vertex_count(), two.graph.edge_count()), (15, 16));
        assert_eq!(blocks(&two.graph).cut_vertices.len(), 1);
        assert_eq!(two.shared_vertex(), Some(3));
    }

    #[test]
    fn star_of_copies_examples() {
        let e = MarkedGraph::plain(path(1).unwrap());
        let star = star_of_copies(&e, 0, 5).unwrap();
        assert!(isomorphic(&star.graph, &complete_bipartite(1, 5).unwrap()));
        let c8 = MarkedGraph::plain(cycle(8).unwrap());
        let s = star_of_copies(&c8, 2, 2).unwrap();
        assert_eq!((s.graph.vertex_count(), s.graph.edge_count()), (15, 16));
        let t = theta(3).unwrap();
        let s = star_of_copies(&t, t.main_poles()[0], 3).unwrap();
        assert_eq!((s.graph.vertex_count(), s.graph.edge_count()), (31, 36));
        assert_eq!(s.graph.degree(s.shared_vertex().unwrap()), 9);
    }
}
