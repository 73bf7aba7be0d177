//! Simple undirected graphs, hypercubes and their edge layers.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::subset::{k_subsets, VertexSubset, MAX_GROUND_SET};

/// Largest vertex count accepted by [`Graph::new`].
pub const MAX_VERTICES: usize = 1 << 30;

/// A finite simple undirected graph on vertices `0..vertex_count`.
///
/// Edges are stored once as `(u, v)` with `u < v`, sorted
/// lexicographically. Neighbour lists are sorted. Optional subset labels
/// record a placement inside some `Q_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    neighbors: Vec<Vec<usize>>,
    labels: Option<Vec<VertexSubset>>,
    ground_set_size: Option<usize>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) are merged; self-loops are rejected.
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if vertex_count > MAX_VERTICES {
            return Err(Error::ResourceLimit {
                what: "vertex count",
                value: vertex_count,
                cap: MAX_VERTICES,
            });
        }
        let mut list = Vec::new();
        for (u, v) in edges {
            if u == v {
                return domain(format!("self-loop at vertex {u}"));
            }
            if u >= vertex_count || v >= vertex_count {
                return domain(format!(
                    "edge ({u}, {v}) references a vertex outside 0..{vertex_count}"
                ));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        list.dedup();
        let mut neighbors = vec![Vec::new(); vertex_count];
        for &(u, v) in &list {
            neighbors[u].push(v);
            neighbors[v].push(u);
        }
        for nb in &mut neighbors {
            nb.sort_unstable();
        }
        Ok(Graph {
            vertex_count,
            edges: list,
            neighbors,
            labels: None,
            ground_set_size: None,
        })
    }

    /// Attaches subset labels, checking that every edge joins two subsets
    /// that differ in exactly one element.
    pub fn with_labels(mut self, labels: Vec<VertexSubset>, n: usize) -> Result<Self> {
        if labels.len() != self.vertex_count {
            return domain(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.vertex_count
            ));
        }
        if n > MAX_GROUND_SET {
            return Err(Error::ResourceLimit {
                what: "ground set size",
                value: n,
                cap: MAX_GROUND_SET,
            });
        }
        if let Some(bad) = labels.iter().find(|l| l.bits() >> n != 0) {
            return domain(format!("label {bad} lies outside a ground set of size {n}"));
        }
        let labels: Vec<VertexSubset> = labels
            .into_iter()
            .map(|l| VertexSubset::from_bits_unchecked(l.bits(), n))
            .collect();
        for &(u, v) in &self.edges {
            if !labels[u].is_cube_neighbor(labels[v]) {
                return domain(format!(
                    "edge ({u}, {v}) joins labels {} and {} which are not cube neighbours",
                    labels[u], labels[v]
                ));
            }
        }
        self.labels = Some(labels);
        self.ground_set_size = Some(n);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.neighbors.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count && self.neighbors[u].binary_search(&v).is_ok()
    }

    /// Position of the edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn labels(&self) -> Option<&[VertexSubset]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<VertexSubset> {
        self.labels.as_ref().map(|l| l[v])
    }

    pub fn ground_set_size(&self) -> Option<usize> {
        self.ground_set_size
    }

    /// The spanning subgraph keeping only the listed edges (and all
    /// vertices and labels).
    pub fn edge_subgraph(&self, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let g = Graph::new(self.vertex_count, edges)?;
        match (&self.labels, self.ground_set_size) {
            (Some(l), Some(n)) => g.with_labels(l.clone(), n),
            _ => Ok(g),
        }
    }

    /// The graph formed by an edge set, with vertices renumbered in
    /// increasing order of their original index. Returns the graph and the
    /// new-to-old vertex map.
    pub fn from_edge_set(&self, edges: &[(usize, usize)]) -> (Graph, Vec<usize>) {
        let mut verts: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        verts.sort_unstable();
        verts.dedup();
        let index = |x: usize| verts.binary_search(&x).unwrap();
        let g = Graph::new(verts.len(), edges.iter().map(|&(u, v)| (index(u), index(v))))
            .expect("edges of a valid graph");
        (g, verts)
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        self.bfs_distances(0).iter().all(|&d| d != u32::MAX)
    }

    /// Breadth-first distances from `source`; `u32::MAX` marks unreachable.
    pub fn bfs_distances(&self, source: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.vertex_count];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &w in &self.neighbors[u] {
                if dist[w] == u32::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// All-pairs distances; meant for the small guest graphs of the
    /// embedding searches.
    pub fn distance_matrix(&self) -> Vec<Vec<u32>> {
        (0..self.vertex_count).map(|v| self.bfs_distances(v)).collect()
    }

    /// Vertices in breadth-first order from `root`, each with its BFS
    /// parent (`None` for the root). Only the root's component is listed.
    pub fn bfs_order(&self, root: usize) -> Vec<(usize, Option<usize>)> {
        let mut seen = vec![false; self.vertex_count];
        let mut order = Vec::with_capacity(self.vertex_count);
        let mut queue = VecDeque::new();
        seen[root] = true;
        queue.push_back(root);
        order.push((root, None));
        while let Some(u) = queue.pop_front() {
            for &w in &self.neighbors[u] {
                if !seen[w] {
                    seen[w] = true;
                    order.push((w, Some(u)));
                    queue.push_back(w);
                }
            }
        }
        order
    }
}

/// Which side of a bipartite graph each vertex lies on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bipartition {
    side: Vec<u8>,
}

impl Bipartition {
    pub fn side(&self, v: usize) -> u8 {
        self.side[v]
    }

    pub fn sides(&self) -> &[u8] {
        &self.side
    }

    pub fn class(&self, s: u8) -> Vec<usize> {
        (0..self.side.len()).filter(|&v| self.side[v] == s).collect()
    }

    /// Sizes of side 0 and side 1.
    pub fn sizes(&self) -> (usize, usize) {
        let ones = self.side.iter().filter(|&&s| s == 1).count();
        (self.side.len() - ones, ones)
    }
}

/// Canonical 2-colouring: the least vertex of every component is on side 0.
/// An odd cycle is returned as the witness when none exists.
pub fn bipartition(g: &Graph) -> Result<Bipartition> {
    let n = g.vertex_count();
    let mut side = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for start in 0..n {
        if side[start] != u8::MAX {
            continue;
        }
        side[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[u];
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                } else if side[w] == side[u] {
                    return Err(Error::NotBipartite {
                        cycle: odd_cycle(u, w, &parent, &depth),
                    });
                }
            }
        }
    }
    Ok(Bipartition { side })
}

fn odd_cycle(mut a: usize, mut b: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
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

fn check_dimension(n: usize, cap: usize) -> Result<()> {
    let cap = cap.min(MAX_GROUND_SET);
    if n > cap {
        return Err(Error::ResourceLimit {
            what: "hypercube dimension",
            value: n,
            cap,
        });
    }
    Ok(())
}

/// `Q_n`; vertex `v` is the subset with bit pattern `v`.
pub fn build_hypercube(n: usize) -> Result<Graph> {
    build_hypercube_capped(n, MAX_GROUND_SET)
}

/// [`build_hypercube`] with a caller-chosen dimension cap (never above
/// [`MAX_GROUND_SET`]).
pub fn build_hypercube_capped(n: usize, cap: usize) -> Result<Graph> {
    check_dimension(n, cap)?;
    let count = 1usize << n;
    let mut edges = Vec::with_capacity(n << n.saturating_sub(1));
    for v in 0..count {
        for i in 0..n {
            if v >> i & 1 == 0 {
                edges.push((v, v | 1 << i));
            }
        }
    }
    let labels = (0..count)
        .map(|v| VertexSubset::from_bits_unchecked(v as u32, n))
        .collect();
    Graph::new(count, edges)?.with_labels(labels, n)
}

/// The edge layer `L_j` of `Q_n`: the subgraph induced by `V_j ∪ V_{j-1}`.
/// Vertices are numbered in increasing order of their bit pattern.
pub fn layer_subgraph(n: usize, j: usize) -> Result<Graph> {
    check_dimension(n, MAX_GROUND_SET)?;
    if j == 0 || j > n {
        return domain(format!("layer index {j} outside 1..={n}"));
    }
    let mut verts: Vec<u32> = k_subsets(n, j - 1).chain(k_subsets(n, j)).collect();
    verts.sort_unstable();
    let index = |b: u32| verts.binary_search(&b).unwrap();
    let mut edges = Vec::new();
    for &top in verts.iter().filter(|b| b.count_ones() as usize == j) {
        let t = index(top);
        let mut rest = top;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest ^= bit;
            edges.push((index(top ^ bit), t));
        }
    }
    let labels = verts
        .iter()
        .map(|&b| VertexSubset::from_bits_unchecked(b, n))
        .collect();
    Graph::new(verts.len(), edges)?.with_labels(labels, n)
}
