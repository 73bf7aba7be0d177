//! Exact values checked against brute force written independently of the
//! library's search code.

use cubeturan::{
    build_hypercube, complete, complete_bipartite, cycle, embed_in_hypercube, enumerate_copies, extremal_number,
    find_nice_coloring, h_graph, hypergraph_extremal, path, theta, ExtremalStatus, Graph, Hypergraph, SearchBudget,
    SearchStatus, VertexSubset,
};

fn budget() -> SearchBudget {
    SearchBudget::default()
}

/// Edge sets (as bit masks over host edge indices) of all copies of
/// `guest` in `host`, from every injective vertex map.
fn copy_masks(host: &Graph, guest: &Graph) -> Vec<u64> {
    assert!(host.edge_count() <= 64);
    let mut masks = Vec::new();
    let mut map = vec![usize::MAX; guest.vertex_count()];
    fn go(i: usize, host: &Graph, guest: &Graph, map: &mut Vec<usize>, out: &mut Vec<u64>) {
        if i == guest.vertex_count() {
            let mut mask = 0u64;
            for &(u, v) in guest.edges() {
                match host.edge_index(map[u], map[v]) {
                    Some(e) => mask |= 1 << e,
                    None => return,
                }
            }
            out.push(mask);
            return;
        }
        for x in 0..host.vertex_count() {
            if !map[..i].contains(&x) {
                map[i] = x;
                go(i + 1, host, guest, map, out);
            }
        }
    }
    go(0, host, guest, &mut map, &mut masks);
    masks.sort_unstable();
    masks.dedup();
    masks
}

fn brute_extremal(host: &Graph, guest: &Graph) -> usize {
    let copies = copy_masks(host, guest);
    let m = host.edge_count();
    (0u64..1 << m)
        .filter(|s| copies.iter().all(|c| c & s != *c))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap()
}

#[test]
fn six_cycles_in_q3() {
    let q = build_hypercube(3).unwrap();
    let c6 = cycle(6).unwrap();
    let found = enumerate_copies(&q, &c6, 0, budget());
    assert!(found.complete);
    assert_eq!(found.copies.len(), copy_masks(&q, &c6).len());
    assert_eq!(found.copies.len(), 16);
    for c in &found.copies {
        assert!(c.is_valid(&q, &c6));
    }
}

#[test]
fn copy_counts_match_brute_force() {
    let q3 = build_hypercube(3).unwrap();
    let guests = [
        path(1).unwrap(),
        path(2).unwrap(),
        path(3).unwrap(),
        complete_bipartite(1, 3).unwrap(),
        cycle(4).unwrap(),
        cycle(8).unwrap(),
        complete(3).unwrap(),
    ];
    for g in &guests {
        let found = enumerate_copies(&q3, g, 0, budget());
        assert!(found.complete);
        assert_eq!(found.copies.len(), copy_masks(&q3, g).len(), "{g:?}");
    }
}

#[test]
fn extremal_numbers_match_exhaustive_search() {
    let guests = [
        path(1).unwrap(),
        path(2).unwrap(),
        path(3).unwrap(),
        complete_bipartite(1, 3).unwrap(),
        cycle(4).unwrap(),
        cycle(6).unwrap(),
        theta(2).unwrap().graph,
    ];
    for n in 1..=3 {
        let q = build_hypercube(n).unwrap();
        for g in &guests {
            let r = extremal_number(n, g, budget()).unwrap();
            assert_eq!(r.status, ExtremalStatus::Exact);
            assert_eq!(r.value, brute_extremal(&q, g), "n = {n}, guest {g:?}");
            assert_eq!(r.witness_edges.len(), r.value);
            let w = q.edge_subgraph(r.witness_edges.iter().copied()).unwrap();
            assert!(enumerate_copies(&w, g, 1, budget()).copies.is_empty());
        }
    }
}

#[test]
fn c4_in_q3_is_nine() {
    let q = build_hypercube(3).unwrap();
    assert_eq!(brute_extremal(&q, &cycle(4).unwrap()), 9);
    assert_eq!(extremal_number(3, &cycle(4).unwrap(), budget()).unwrap().value, 9);
}

#[test]
fn triangle_free_cube_keeps_every_edge() {
    for n in 1..=4 {
        let r = extremal_number(n, &complete(3).unwrap(), budget()).unwrap();
        assert_eq!((r.value, r.status), (n << (n - 1), ExtremalStatus::Exact));
    }
}

#[test]
fn c4_density_does_not_rise() {
    let d = cubeturan::density_sequence(&cycle(4).unwrap(), 1, 4, budget()).unwrap();
    assert!(d.rows.iter().all(|r| r.status == ExtremalStatus::Exact));
    let values: Vec<usize> = d.rows.iter().map(|r| r.value).collect();
    assert_eq!(values, vec![1, 3, 9, 24]);
    assert!(d.non_increasing());
}

fn brute_graph_extremal(n: usize, forbidden: &Graph) -> usize {
    let kn = complete(n).unwrap();
    brute_extremal(&kn, forbidden)
}

#[test]
fn hypergraph_extremal_matches_brute_force() {
    let c4 = Hypergraph::from_lists(4, 2, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]).unwrap();
    let r = hypergraph_extremal(4, 2, &c4, budget()).unwrap();
    assert_eq!(r.status, ExtremalStatus::Exact);
    assert_eq!(r.value, brute_graph_extremal(4, &cycle(4).unwrap()));
    assert_eq!(r.value, 4);

    let k22 = Hypergraph::from_lists(4, 2, &[&[1, 3], &[1, 4], &[2, 3], &[2, 4]]).unwrap();
    let r = hypergraph_extremal(5, 2, &k22, budget()).unwrap();
    assert_eq!(r.value, brute_graph_extremal(5, &complete_bipartite(2, 2).unwrap()));
    assert_eq!(r.value, 6);
    assert!(r.witness_edges.iter().all(|e: &VertexSubset| e.len() == 2));

    let p2 = Hypergraph::from_lists(3, 2, &[&[1, 2], &[2, 3]]).unwrap();
    let r = hypergraph_extremal(5, 2, &p2, budget()).unwrap();
    assert_eq!(r.value, brute_graph_extremal(5, &path(2).unwrap()));
}

#[test]
fn embedding_and_colouring_agree() {
    let mut graphs: Vec<Graph> = (3..=9).map(|l| cycle(l).unwrap()).collect();
    graphs.extend([
        complete(3).unwrap(),
        complete(4).unwrap(),
        complete_bipartite(2, 3).unwrap(),
        complete_bipartite(1, 5).unwrap(),
        complete_bipartite(3, 3).unwrap(),
        theta(2).unwrap().graph,
        theta(3).unwrap().graph,
        build_hypercube(3).unwrap(),
    ]);
    for g in &graphs {
        for n in 1..=6 {
            let e = embed_in_hypercube(g, n, budget()).unwrap();
            let c = find_nice_coloring(g, n, budget()).unwrap();
            assert_ne!(e.status(), SearchStatus::Inconclusive);
            assert_eq!(e.status(), c.status(), "n = {n}, graph {g:?}");
        }
    }
}

#[test]
fn h3_is_cubical() {
    let h = h_graph(3).unwrap().graph;
    let e = embed_in_hypercube(&h, 10, budget()).unwrap();
    assert!(e.is_found());
    e.witness().unwrap().validate(&h).unwrap();
}
