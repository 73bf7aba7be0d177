use std::fmt::Write;
use std::io::Read;
use std::path::{Path, PathBuf};

use cubeturan::format::{parse_graph, parse_representation, write_embedding, write_graph, write_representation};
use cubeturan::suite::{self, SuiteConfig};
use cubeturan::{
    blocks_have_representations, build_hypercube, coloring_to_embedding, complete, complete_bipartite, cycle,
    density_sequence, embed_in_hypercube, extremal_number, find_nice_coloring, find_representation, glue_bottom,
    glue_top, h_graph, layer_subgraph, path, pole_distance_scan, star_count_identity, subdivide, theta,
    verify_representation, BlockResult, Error, ExtremalStatus, LayerGraph, MarkedGraph, RepresentationCheck,
    SearchBudget, SearchStatus,
};
use serde::Serialize;
use serde_json::json;

use crate::args::{Cli, Command, Construct, Format, GlueArgs, GlueMode, Method};

pub const FOUND: u8 = 0;
pub const NONE: u8 = 1;
pub const INCONCLUSIVE: u8 = 2;
pub const USAGE: u8 = 3;
pub const IO: u8 = 4;

pub struct CliError {
    pub code: u8,
    pub message: String,
}

type Outcome = Result<(u8, String), CliError>;

fn usage(message: impl Into<String>) -> CliError {
    CliError {
        code: USAGE,
        message: message.into(),
    }
}

fn input_error(source: &str, e: Error) -> CliError {
    CliError {
        code: IO,
        message: format!("{source}: {e}"),
    }
}

fn lib_error(e: Error) -> CliError {
    CliError {
        code: USAGE,
        message: e.to_string(),
    }
}

fn read_text(path: Option<&Path>) -> Result<(String, String), CliError> {
    match path {
        None => read_stdin(),
        Some(p) if p == Path::new("-") => read_stdin(),
        Some(p) => std::fs::read_to_string(p).map(|s| (p.display().to_string(), s)).map_err(|e| CliError {
            code: IO,
            message: format!("{}: {e}", p.display()),
        }),
    }
}

fn read_stdin() -> Result<(String, String), CliError> {
    let mut s = String::new();
    std::io::stdin().read_to_string(&mut s).map_err(|e| CliError {
        code: IO,
        message: format!("stdin: {e}"),
    })?;
    Ok(("stdin".into(), s))
}

fn read_graph(path: Option<&PathBuf>) -> Result<MarkedGraph, CliError> {
    let (source, text) = read_text(path.map(PathBuf::as_path))?;
    parse_graph(&text).map_err(|e| input_error(&source, e))
}

fn json_line(s: &mut String, value: &impl Serialize) {
    s.push_str(&serde_json::to_string(value).expect("plain data serialises"));
    s.push('\n');
}

fn status_code(s: SearchStatus) -> u8 {
    match s {
        SearchStatus::Found => FOUND,
        SearchStatus::ExhaustedNone => NONE,
        SearchStatus::Inconclusive => INCONCLUSIVE,
    }
}

fn status_name(s: SearchStatus) -> &'static str {
    match s {
        SearchStatus::Found => "found",
        SearchStatus::ExhaustedNone => "exhausted_none",
        SearchStatus::Inconclusive => "inconclusive",
    }
}

fn extremal_name(s: ExtremalStatus) -> &'static str {
    match s {
        ExtremalStatus::Exact => "exact",
        ExtremalStatus::LowerBound => "lower_bound",
        ExtremalStatus::Inconclusive => "inconclusive",
    }
}

fn budget(cli: &Cli) -> Result<SearchBudget, CliError> {
    let d = SearchBudget::default();
    let nodes = cli.budget_nodes.unwrap_or(d.max_nodes);
    let seconds = cli.budget_seconds.unwrap_or(d.max_seconds);
    if nodes == 0 || seconds.is_nan() || seconds <= 0.0 {
        return Err(usage("budgets must be positive"));
    }
    Ok(SearchBudget::new(nodes, seconds))
}

pub fn run(cli: &Cli) -> Outcome {
    if let Some(t) = cli.threads {
        if t == 0 {
            return Err(usage("--threads must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| usage(format!("thread pool: {e}")))?;
    }
    let json = cli.format == Format::Json;
    let budget = budget(cli)?;
    match &cli.command {
        Command::Construct { kind } => construct(kind, json),
        Command::CheckCubical { input, nmax, method } => check_cubical(read_graph(input.as_ref())?, *nmax, *method, budget, json),
        Command::FindRep { input, k, n } => {
            let g = read_graph(input.as_ref())?;
            let out = find_representation(&g.graph, *k, *n, budget).map_err(lib_error)?;
            let mut s = String::new();
            if json {
                json_line(
                    &mut s,
                    &json!({"status": out.status(), "k": k, "n": n, "nodes": out.nodes_explored, "representation": out.witness()}),
                );
            } else {
                writeln!(s, "# status {}\n# nodes {}", status_name(out.status()), out.nodes_explored).unwrap();
                if let Some(r) = out.witness() {
                    s.push_str(&write_representation(r));
                }
            }
            Ok((status_code(out.status()), s))
        }
        Command::VerifyRep { graph, rep } => {
            let g = read_graph(Some(graph))?;
            let (source, text) = read_text(Some(rep))?;
            let r = parse_representation(&text).map_err(|e| input_error(&source, e))?;
            let check = verify_representation(&g.graph, &r);
            let mut s = String::new();
            match (&check, json) {
                (_, true) => json_line(
                    &mut s,
                    &json!({"valid": check.is_valid(), "violation": match &check {
                        RepresentationCheck::Valid => None,
                        RepresentationCheck::Invalid(v) => Some(v),
                    }}),
                ),
                (RepresentationCheck::Valid, false) => s.push_str("valid\n"),
                (RepresentationCheck::Invalid(v), false) => writeln!(s, "invalid: {v:?}").unwrap(),
            }
            Ok((if check.is_valid() { FOUND } else { NONE }, s))
        }
        Command::Glue(args) => glue(args, json),
        Command::ScanPoles { q, n } => scan_poles(*q, *n, budget, json),
        Command::BlocksRep { input, k_max, n_max } => {
            let g = read_graph(input.as_ref())?;
            blocks_rep(&g, *k_max, *n_max, budget, json)
        }
        Command::Extremal { n, guest } => {
            let h = read_graph(Some(guest))?;
            let r = extremal_number(*n, &h.graph, budget).map_err(lib_error)?;
            let mut s = String::new();
            if json {
                json_line(
                    &mut s,
                    &json!({"n": r.n, "value": r.value, "status": r.status, "nodes": r.nodes_explored,
                        "guest": r.guest_id, "witness_edges": r.witness_edges}),
                );
            } else {
                writeln!(
                    s,
                    "# guest {}\n# value {}\n# status {}\n# nodes {}",
                    r.guest_id,
                    r.value,
                    extremal_name(r.status),
                    r.nodes_explored
                )
                .unwrap();
                let q = build_hypercube(*n).map_err(lib_error)?;
                let w = q.edge_subgraph(r.witness_edges.iter().copied()).map_err(lib_error)?;
                s.push_str(&write_graph(&MarkedGraph::plain(w)));
            }
            let code = if r.status == ExtremalStatus::Exact { FOUND } else { INCONCLUSIVE };
            Ok((code, s))
        }
        Command::Density { guest, from, to } => {
            let h = read_graph(Some(guest))?;
            let d = density_sequence(&h.graph, *from, *to, budget).map_err(lib_error)?;
            let mut s = String::new();
            for r in &d.rows {
                if json {
                    json_line(
                        &mut s,
                        &json!({"n": r.n, "value": r.value, "cube_edges": r.cube_edges, "status": r.status}),
                    );
                } else {
                    writeln!(s, "{} {} {} {:.6} {}", r.n, r.value, r.cube_edges, r.ratio, extremal_name(r.status)).unwrap();
                }
            }
            if json {
                json_line(&mut s, &json!({"non_increasing": d.non_increasing(), "increases": d.increases}));
            } else {
                writeln!(s, "# non_increasing {}", d.non_increasing()).unwrap();
            }
            let code = if !d.non_increasing() {
                NONE
            } else if d.rows.iter().all(|r| r.status == ExtremalStatus::Exact) {
                FOUND
            } else {
                INCONCLUSIVE
            };
            Ok((code, s))
        }
        Command::Starcount { n, j, k, density } => {
            let g = LayerGraph::random(*n, *j, *density, cli.seed).map_err(lib_error)?;
            let r = star_count_identity(&g, *k).map_err(lib_error)?;
            let mut s = String::new();
            if json {
                json_line(
                    &mut s,
                    &json!({"n": n, "j": j, "k": k, "seed": cli.seed, "edges": g.graph().edge_count(),
                        "t": r.t, "full_total": r.full_total, "holds": r.holds()}),
                );
            } else {
                writeln!(
                    s,
                    "edges {}\nt {}\nfull_total {}\nholds {}",
                    g.graph().edge_count(),
                    r.t,
                    r.full_total,
                    r.holds()
                )
                .unwrap();
            }
            Ok((if r.holds() { FOUND } else { NONE }, s))
        }
        Command::Report { timings, fixtures } => {
            let mut extra = Vec::new();
            for p in fixtures {
                extra.push((p.display().to_string(), read_graph(Some(p))?.graph));
            }
            let cfg = SuiteConfig {
                budget,
                seed: cli.seed,
                extra_corpus: extra,
            };
            let results = suite::run_suite(&cfg);
            let mut s = String::new();
            if json {
                for r in &results {
                    let mut v = serde_json::to_value(r).expect("plain data serialises");
                    if *timings {
                        v["seconds"] = json!(r.elapsed.as_secs_f64());
                    }
                    json_line(&mut s, &v);
                }
            } else {
                s.push_str(&suite::render(&results, *timings));
            }
            Ok((suite::exit_code(&results) as u8, s))
        }
    }
}

fn emit_graph(g: &MarkedGraph, json: bool) -> String {
    if !json {
        return write_graph(g);
    }
    let mut s = String::new();
    json_line(
        &mut s,
        &json!({"vertex_count": g.graph.vertex_count(), "edges": g.graph.edges(),
            "labels": g.graph.labels(), "marks": g.marks()}),
    );
    s
}

fn construct(kind: &Construct, json: bool) -> Outcome {
    let plain = |g: cubeturan::Result<cubeturan::Graph>| g.map(MarkedGraph::plain);
    let g = match kind {
        Construct::Theta { q } => theta(*q),
        Construct::H { q } => h_graph(*q),
        Construct::CompleteBipartite { s, t } => plain(complete_bipartite(*s, *t)),
        Construct::Cycle { len } => plain(cycle(*len)),
        Construct::Path { edges } => plain(path(*edges)),
        Construct::Complete { n } => plain(complete(*n)),
        Construct::Hypercube { n } => plain(build_hypercube(*n)),
        Construct::Layer { n, j } => plain(layer_subgraph(*n, *j)),
        Construct::Subdivide { input } => subdivide(&read_graph(input.as_ref())?.graph),
    }
    .map_err(lib_error)?;
    Ok((FOUND, emit_graph(&g, json)))
}

fn check_cubical(g: MarkedGraph, nmax: usize, method: Method, budget: SearchBudget, json: bool) -> Outcome {
    let out = match method {
        Method::Embed => embed_in_hypercube(&g.graph, nmax, budget),
        Method::Coloring => find_nice_coloring(&g.graph, nmax, budget).and_then(|o| {
            let nodes = o.nodes_explored;
            let status = o.status();
            match o.into_witness() {
                Some(c) => coloring_to_embedding(&g.graph, &c).map(|e| cubeturan::SearchOutcome::found(e, nodes)),
                None if status == SearchStatus::Inconclusive => Ok(cubeturan::SearchOutcome::inconclusive(nodes)),
                None => Ok(cubeturan::SearchOutcome::exhausted(nodes)),
            }
        }),
    }
    .map_err(lib_error)?;
    let mut s = String::new();
    if json {
        json_line(&mut s, &json!({"status": out.status(), "nodes": out.nodes_explored, "embedding": out.witness()}));
    } else {
        writeln!(s, "# status {}\n# nodes {}", status_name(out.status()), out.nodes_explored).unwrap();
        if let Some(e) = out.witness() {
            s.push_str(&write_embedding(e));
        }
    }
    Ok((status_code(out.status()), s))
}

fn glue(a: &GlueArgs, json: bool) -> Outcome {
    let load = |g: &PathBuf, r: &PathBuf| -> Result<_, CliError> {
        let graph = read_graph(Some(g))?;
        let (source, text) = read_text(Some(r))?;
        let rep = parse_representation(&text).map_err(|e| input_error(&source, e))?;
        Ok((graph.graph, rep))
    };
    let (ga, ra) = load(&a.first, &a.first_rep)?;
    let (gb, rb) = load(&a.second, &a.second_rep)?;
    let glued = match a.mode {
        GlueMode::Top => glue_top(&ga, &ra, a.first_vertex, &gb, &rb, a.second_vertex),
        GlueMode::Bottom => glue_bottom(&ga, &ra, a.first_vertex, &gb, &rb, a.second_vertex),
    }
    .map_err(lib_error)?;
    if let Some(p) = &a.graph_out {
        std::fs::write(p, write_graph(&glued.graph)).map_err(|e| CliError {
            code: IO,
            message: format!("{}: {e}", p.display()),
        })?;
    }
    let mut s = String::new();
    if json {
        json_line(&mut s, &glued.representation);
    } else {
        s.push_str(&write_representation(&glued.representation));
    }
    Ok((FOUND, s))
}

fn scan_poles(q: usize, n: usize, budget: SearchBudget, json: bool) -> Outcome {
    let r = pole_distance_scan(q, n, budget).map_err(lib_error)?;
    let mut s = String::new();
    if json {
        json_line(&mut s, &r);
    } else {
        writeln!(s, "q {} n {}\nembeddings {}\ncomplete {}", r.q, r.n, r.embeddings, r.complete).unwrap();
        for (d, c) in &r.distances {
            writeln!(s, "distance {d} {c}").unwrap();
        }
        if let Some((k, images)) = &r.counterexample {
            let list: Vec<String> = images.iter().map(|x| x.to_hex()).collect();
            writeln!(s, "counterexample k={k} {}", list.join(" ")).unwrap();
        }
    }
    let code = if !r.all_distance_two() {
        NONE
    } else if r.complete {
        FOUND
    } else {
        INCONCLUSIVE
    };
    Ok((code, s))
}

fn blocks_rep(g: &MarkedGraph, k_max: usize, n_max: usize, budget: SearchBudget, json: bool) -> Outcome {
    let r = blocks_have_representations(&g.graph, k_max, n_max, budget);
    let mut s = String::new();
    if json {
        json_line(&mut s, &r);
    } else {
        for (i, b) in r.blocks.iter().enumerate() {
            let verdict = match &b.result {
                BlockResult::Represented { k, n, .. } => format!("represented k={k} n={n}"),
                BlockResult::NotBipartite { odd_cycle } => format!("not bipartite, odd cycle {odd_cycle:?}"),
                BlockResult::NoneInRange => "no representation in range".into(),
                BlockResult::Inconclusive => "inconclusive".into(),
            };
            writeln!(s, "block {i} vertices {:?}: {verdict}", b.vertices).unwrap();
        }
        writeln!(s, "zero_density {}", r.zero_density).unwrap();
    }
    let code = if r.zero_density {
        FOUND
    } else if r.blocks.iter().any(|b| b.result == BlockResult::Inconclusive) {
        INCONCLUSIVE
    } else {
        NONE
    };
    Ok((code, s))
}
