//! Small named inputs shared by tests, benches and the acceptance suite.

use crate::constructions::{complete_bipartite, cycle, h_graph, path, subdivide, theta, complete};
use crate::cubicality::NiceColoring;
use crate::graph::{build_hypercube, layer_subgraph, Graph};
use crate::partite::Representation;
use crate::subset::VertexSubset;

/// Θ(3) with a nice colouring in 5 colours: each leg, read from main pole
/// 3 to main pole 4, is coloured own, 3, 4, own, where own is the leg index.
pub fn theta3_coloring() -> (Graph, NiceColoring) {
    let g = theta(3).expect("fixed size").graph;
    let (a, b) = (3, 4);
    let mut colors = vec![usize::MAX; g.edge_count()];
    for leg in 0..3 {
        // subdivision vertices of K_{3,2} edges (leg, a) and (leg, b)
        let sa = 5 + 2 * leg;
        let sb = sa + 1;
        colors[g.edge_index(a, sa).unwrap()] = leg;
        colors[g.edge_index(sa, leg).unwrap()] = 3;
        colors[g.edge_index(leg, sb).unwrap()] = 4;
        colors[g.edge_index(sb, b).unwrap()] = leg;
    }
    (g, NiceColoring { colors, color_count: 5 })
}

/// The 8-cycle in `L_2(Q_4)` running 1, 12, 2, 23, 3, 34, 4, 14, with the
/// two given parts.
pub fn c8_representation(parts: [&[usize]; 2]) -> (Graph, Representation) {
    let g = cycle(8).expect("fixed size");
    let set = |e: &[usize]| VertexSubset::from_elements(e, 4).expect("inside [4]");
    let images = [&[1][..], &[1, 2], &[2], &[2, 3], &[3], &[3, 4], &[4], &[1, 4]]
        .iter()
        .map(|e| set(e))
        .collect();
    let r = Representation {
        k: 2,
        n: 4,
        images,
        parts: parts.iter().map(|p| set(p)).collect(),
    };
    (g, r)
}

/// Connected cubical graphs used for certificate round trips.
pub fn cubical_corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    for len in [4, 6, 8, 10] {
        out.push((format!("cycle-{len}"), cycle(len).unwrap()));
    }
    for e in 1..=5 {
        out.push((format!("path-{e}"), path(e).unwrap()));
    }
    out.push(("star-4".into(), complete_bipartite(1, 4).unwrap()));
    out.push(("k2-3-subdivided".into(), subdivide(&complete_bipartite(2, 3).unwrap()).unwrap().graph));
    out.push(("k4-subdivided".into(), subdivide(&complete(4).unwrap()).unwrap().graph));
    for q in 2..=4 {
        out.push((format!("theta-{q}"), theta(q).unwrap().graph));
    }
    out.push(("h-3".into(), h_graph(3).unwrap().graph));
    for n in 2..=4 {
        out.push((format!("hypercube-{n}"), build_hypercube(n).unwrap()));
    }
    out.push(("layer-4-2".into(), layer_subgraph(4, 2).unwrap()));
    out.push(("layer-5-3".into(), layer_subgraph(5, 3).unwrap()));
    out
}
