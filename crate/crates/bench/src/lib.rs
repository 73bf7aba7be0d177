//! Inputs shared by the kernel benchmarks.

use cubeturan::{build_hypercube, cycle, h_graph, theta, Graph, SearchBudget};

pub fn budget() -> SearchBudget {
    SearchBudget::default()
}

/// Host and guest for copy enumeration: 6-cycles in `Q_5`.
pub fn copies_input() -> (Graph, Graph) {
    (build_hypercube(5).expect("small cube"), cycle(6).expect("small cycle"))
}

pub fn c4() -> Graph {
    cycle(4).expect("small cycle")
}

pub fn h3() -> Graph {
    h_graph(3).expect("fixed size").graph
}

pub fn theta3() -> Graph {
    theta(3).expect("fixed size").graph
}
