use std::collections::BTreeSet;

use cubeturan::fixtures::c8_representation;
use cubeturan::format::{parse_graph, write_graph};
use cubeturan::{
    blocks, build_hypercube, embed_in_hypercube, embed_in_hypercube_with, embedding_to_coloring,
    coloring_to_embedding, enumerate_copies, find_representation, find_representation_with, glue_bottom, glue_top,
    is_k_partite, layer_subgraph, middle_mass, path, star_count_identity, theta, theta_representation,
    verify_nice_coloring, verify_representation, Graph, Hypergraph, LayerGraph, MarkedGraph, NiceColoring,
    SearchBudget, SearchStatus, Symmetry, VertexSubset,
};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn budget() -> SearchBudget {
    SearchBudget::default()
}

/// Any graph on 1..=max vertices.
fn any_graph(max: usize) -> impl Strategy<Value = Graph> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::new(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

/// Connected graph: a random tree plus random extra edges.
fn connected_graph(max: usize) -> impl Strategy<Value = Graph> {
    (2..=max).prop_flat_map(|n| {
        (
            proptest::collection::vec(any::<prop::sample::Index>(), n - 1),
            proptest::collection::vec(prop::bool::weighted(0.2), n * (n - 1) / 2),
        )
            .prop_map(move |(parents, extra)| {
                let mut edges: Vec<(usize, usize)> =
                    parents.iter().enumerate().map(|(i, p)| (p.index(i + 1), i + 1)).collect();
                let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
                edges.extend(pairs.zip(extra).filter(|(_, b)| *b).map(|(e, _)| e));
                Graph::new(n, edges).unwrap()
            })
    })
}

/// Connected bipartite graph: a random tree plus random edges across the
/// tree's two colour classes.
fn bipartite_graph(max: usize) -> impl Strategy<Value = Graph> {
    connected_graph(max).prop_map(|g| {
        let tree: Vec<(usize, usize)> = g.bfs_order(0).iter().filter_map(|&(v, p)| p.map(|p| (p, v))).collect();
        let t = Graph::new(g.vertex_count(), tree.iter().copied()).unwrap();
        let side = cubeturan::bipartition(&t).unwrap();
        let kept = g.edges().iter().copied().filter(|&(u, v)| side.side(u) != side.side(v));
        Graph::new(g.vertex_count(), kept).unwrap()
    })
}

/// Connected subgraph of `Q_dim` grown from the empty set, relabelled
/// 0..m in order of discovery.
fn cube_subgraph(dim: usize) -> impl Strategy<Value = Graph> {
    (
        proptest::collection::vec((any::<prop::sample::Index>(), 0..dim), 1..12),
        proptest::collection::vec(any::<bool>(), 64),
    )
        .prop_map(move |(steps, extra)| {
            let mut verts: Vec<u32> = vec![0];
            let mut edges = BTreeSet::new();
            for (from, bit) in steps {
                let a = verts[from.index(verts.len())];
                let b = a ^ 1 << bit;
                let bi = match verts.iter().position(|&x| x == b) {
                    Some(i) => i,
                    None => {
                        verts.push(b);
                        verts.len() - 1
                    }
                };
                let ai = verts.iter().position(|&x| x == a).unwrap();
                edges.insert((ai.min(bi), ai.max(bi)));
            }
            let mut k = 0;
            for i in 0..verts.len() {
                for j in i + 1..verts.len() {
                    if (verts[i] ^ verts[j]).count_ones() == 1 {
                        if extra[k % 64] {
                            edges.insert((i, j));
                        }
                        k += 1;
                    }
                }
            }
            Graph::new(verts.len(), edges).unwrap()
        })
}

fn is_connected_without(g: &Graph, skip: usize, vertices: &[usize]) -> bool {
    let rest: Vec<usize> = vertices.iter().copied().filter(|&v| v != skip).collect();
    let Some(&start) = rest.first() else { return true };
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if w != skip && rest.contains(&w) && seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen.len() == rest.len()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn layers_partition_cube_edges(n in 1usize..=9) {
        let q = build_hypercube(n).unwrap();
        let mut seen = BTreeSet::new();
        for j in 1..=n {
            let l = layer_subgraph(n, j).unwrap();
            let labels = l.labels().unwrap();
            for &(u, v) in l.edges() {
                let (a, b) = (labels[u].bits() as usize, labels[v].bits() as usize);
                prop_assert!(q.has_edge(a, b));
                prop_assert!(seen.insert((a.min(b), a.max(b))));
            }
        }
        prop_assert_eq!(seen.len(), q.edge_count());
    }

    #[test]
    fn blocks_partition_edges(g in any_graph(9)) {
        let d = blocks(&g);
        let mut all: Vec<(usize, usize)> = d.blocks.iter().flatten().copied().collect();
        all.sort_unstable();
        prop_assert_eq!(&all[..], g.edges());
        let mut count = vec![0; g.vertex_count()];
        for i in 0..d.blocks.len() {
            let vs = d.block_vertices(i);
            for &v in &vs {
                count[v] += 1;
            }
            if d.blocks[i].len() > 1 {
                let (b, _) = g.from_edge_set(&d.blocks[i]);
                let local: Vec<usize> = (0..b.vertex_count()).collect();
                for v in 0..b.vertex_count() {
                    prop_assert!(is_connected_without(&b, v, &local));
                }
            }
        }
        let cuts: BTreeSet<usize> = (0..g.vertex_count()).filter(|&v| count[v] > 1).collect();
        prop_assert_eq!(cuts, d.cut_vertices.clone());
    }

    #[test]
    fn single_edge_copies_are_edges(g in any_graph(8)) {
        let found = enumerate_copies(&g, &path(1).unwrap(), 0, budget());
        prop_assert!(found.complete);
        prop_assert_eq!(found.copies.len(), g.edge_count());
    }

    #[test]
    fn graph_format_round_trips(g in any_graph(9)) {
        let m = MarkedGraph::plain(g);
        prop_assert_eq!(parse_graph(&write_graph(&m)).unwrap(), m);
    }

    #[test]
    fn embedding_round_trip_up_to_translation(g in cube_subgraph(5), perm in Just(()).prop_perturb(|_, mut rng| {
        let mut p: Vec<usize> = (0..5).collect();
        for i in (1..5).rev() {
            p.swap(i, rng.random_range(0..=i));
        }
        p
    })) {
        let e = embed_in_hypercube(&g, 5, budget()).unwrap().into_witness().expect("built inside Q_5");
        let c = embedding_to_coloring(&g, &e).unwrap();
        prop_assert!(verify_nice_coloring(&g, &c).unwrap().is_valid());
        prop_assert_eq!(coloring_to_embedding(&g, &c).unwrap(), e.translated_to_root(0));
        let permuted = NiceColoring { colors: c.colors.iter().map(|&x| perm[x]).collect(), color_count: c.color_count };
        prop_assert!(verify_nice_coloring(&g, &permuted).unwrap().is_valid());
    }

    #[test]
    fn reduced_embedding_search_is_complete(g in connected_graph(7), n in 1usize..=4) {
        let r = embed_in_hypercube_with(&g, n, budget(), Symmetry::Reduced).unwrap();
        let f = embed_in_hypercube_with(&g, n, budget(), Symmetry::Full).unwrap();
        prop_assert_eq!(r.status(), f.status());
        if let Some(e) = f.witness() {
            e.validate(&g).unwrap();
        }
    }

    #[test]
    fn star_identity_holds(n in 2usize..=7, j_seed in any::<prop::sample::Index>(), k_seed in any::<prop::sample::Index>(),
                           p in 0.0f64..=1.0, seed in any::<u64>()) {
        let j = 1 + j_seed.index(n);
        let k = 1 + k_seed.index(j);
        let g = LayerGraph::random(n, j, p, seed).unwrap();
        let r = star_count_identity(&g, k).unwrap();
        prop_assert_eq!(r.t, r.full_total);
    }

    #[test]
    fn middle_mass_is_a_probability(n in 1usize..=200) {
        let m = middle_mass(n).unwrap();
        prop_assert!(m >= num_rational::BigRational::zero() && m <= num_rational::BigRational::one());
        // n^(2/3) >= n/2 exactly when 8 n^2 >= n^3
        if n <= 8 {
            prop_assert!(m.is_zero());
        }
    }
}

fn brute_partite(h: &Hypergraph) -> bool {
    let elements: Vec<usize> = (0..32).filter(|&i| h.support() >> i & 1 == 1).collect();
    let m = elements.len();
    let total = h.k.pow(m as u32);
    (0..total).any(|mut code| {
        let mut color = [usize::MAX; 32];
        for &x in &elements {
            color[x] = code % h.k;
            code /= h.k;
        }
        h.edges().iter().all(|e| {
            let cs: BTreeSet<usize> = e.elements().map(|x| color[x - 1]).collect();
            cs.len() == h.k
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn k_partite_matches_brute_force(k in 2usize..=3, raw in proptest::collection::vec(any::<u32>(), 1..8)) {
        let n = 7;
        let edges: Vec<VertexSubset> = raw
            .into_iter()
            .filter_map(|r| {
                let mut bits = 0u32;
                let mut x = r;
                while (bits.count_ones() as usize) < k {
                    bits |= 1 << (x % n as u32);
                    x = x / n as u32 + 7;
                }
                VertexSubset::new(bits, n).ok()
            })
            .collect();
        let h = Hypergraph::new(n, k, edges).unwrap();
        let out = is_k_partite(&h, budget());
        prop_assert_eq!(out.is_found(), brute_partite(&h));
        if let Some(parts) = out.witness() {
            prop_assert_eq!(parts.len(), k);
            for e in h.edges() {
                for p in parts {
                    prop_assert_eq!((e.bits() & p.bits()).count_ones(), 1);
                }
            }
        }
    }

    #[test]
    fn found_representations_are_copies(g in bipartite_graph(7), k in 1usize..=2) {
        let n = 5;
        let r = find_representation(&g, k, n, budget()).unwrap();
        let full = find_representation_with(&g, k, n, budget(), Symmetry::Full).unwrap();
        prop_assert_eq!(r.status(), full.status());
        if let Some(rep) = r.witness() {
            prop_assert!(verify_representation(&g, rep).is_valid());
            let q = build_hypercube(n).unwrap();
            let image = q
                .edge_subgraph(g.edges().iter().map(|&(u, v)| (rep.images[u].bits() as usize, rep.images[v].bits() as usize)))
                .unwrap();
            let copies = enumerate_copies(&image, &g, 1, budget());
            prop_assert_eq!(copies.copies.len(), 1);
            let padded = rep.padded().unwrap();
            prop_assert!(verify_representation(&g, &padded).is_valid());
        }
    }

    #[test]
    fn gluing_keeps_representations_valid(
        first in 0usize..4, second in 0usize..4, top in any::<bool>(),
        a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>(),
    ) {
        let fixture = |i: usize| match i {
            3 => c8_representation([&[1, 3], &[2, 4]]),
            q => (theta(q + 2).unwrap().graph, theta_representation(q + 2).unwrap()),
        };
        let (ga, ra) = fixture(first);
        let (gb, rb) = fixture(second);
        let pick = |r: &cubeturan::Representation, idx: prop::sample::Index| {
            let vs: Vec<usize> = (0..r.images.len()).filter(|&v| r.is_top(v) == top).collect();
            vs[idx.index(vs.len())]
        };
        let (va, vb) = (pick(&ra, a), pick(&rb, b));
        let glued = if top { glue_top(&ga, &ra, va, &gb, &rb, vb) } else { glue_bottom(&ga, &ra, va, &gb, &rb, vb) }.unwrap();
        let r = &glued.representation;
        prop_assert_eq!(r.k, if top { 2 * ra.k } else { ra.k });
        prop_assert_eq!(glued.graph.graph.vertex_count(), ga.vertex_count() + gb.vertex_count() - 1);
        prop_assert!(verify_representation(&glued.graph.graph, r).is_valid());
    }
}

#[test]
fn inconclusive_under_tiny_budget() {
    let g = theta(3).unwrap().graph;
    let r = find_representation(&g, 2, 6, SearchBudget::nodes(1)).unwrap();
    assert_eq!(r.status(), SearchStatus::Inconclusive);
}
