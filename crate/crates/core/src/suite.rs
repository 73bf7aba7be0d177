//! The acceptance suite: eleven criteria, each reduced to a verdict and a
//! one-line detail. Shared by the `report` subcommand and the acceptance
//! test target.

use std::fmt::Write;
use std::time::{Duration, Instant};

use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::blocks::blocks;
use crate::constructions::{complete, cycle, glue_at_vertex, h_graph, theta, MarkedGraph};
use crate::copies::enumerate_copies;
use crate::cubicality::{
    coloring_to_embedding, embed_in_hypercube, embedding_to_coloring, find_nice_coloring, verify_nice_coloring,
};
use crate::error::Result;
use crate::fixtures::{c8_representation, cubical_corpus, theta3_coloring};
use crate::graph::{build_hypercube, Graph};
use crate::partite::{
    blocks_have_representations, find_representation, glue_bottom, glue_top, is_k_partite, pole_distance_scan,
    theta_representation, verify_representation, BlockResult, Hypergraph, Representation,
};
use crate::search::{SearchBudget, SearchStatus};
use crate::turan::{density_sequence, extremal_number, middle_mass, star_count_identity, ExtremalStatus, LayerGraph};

pub const DEFAULT_SEED: u64 = 0x5eed_2718;

pub const CRITERIA: [&str; 11] = [
    "constructions",
    "cubicality",
    "representation-fixtures",
    "gluing",
    "non-partiteness",
    "pole-distance",
    "extremal-numbers",
    "star-count",
    "middle-mass",
    "block-predicate",
    "determinism",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub budget: SearchBudget,
    pub seed: u64,
    /// further connected graphs for the certificate round trips
    pub extra_corpus: Vec<(String, Graph)>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            budget: SearchBudget::default(),
            seed: DEFAULT_SEED,
            extra_corpus: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub verdict: Verdict,
    pub detail: String,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Default)]
struct Tally {
    failures: Vec<String>,
    open: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    /// Records a search status that should be `want`.
    fn expect(&mut self, got: SearchStatus, want: SearchStatus, what: impl FnOnce() -> String) {
        if got == SearchStatus::Inconclusive {
            self.open.push(format!("{} ran out of budget", what()));
        } else if got != want {
            self.failures.push(format!("{}: expected {want:?}, got {got:?}", what()));
        }
    }

    fn within(&mut self, elapsed: Duration, limit: Duration, what: &str) {
        if elapsed >= limit {
            self.failures
                .push(format!("{what} took {:.2}s, limit {:.0}s", elapsed.as_secs_f64(), limit.as_secs_f64()));
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    fn error(&mut self, r: Result<()>) {
        if let Err(e) = r {
            self.failures.push(format!("error: {e}"));
        }
    }

    fn finish(self) -> (Verdict, String) {
        let (verdict, lines) = if !self.failures.is_empty() {
            (Verdict::Fail, self.failures)
        } else if !self.open.is_empty() {
            (Verdict::Inconclusive, self.open)
        } else {
            (Verdict::Pass, self.notes)
        };
        let mut shown: Vec<String> = Vec::new();
        for l in lines {
            if !shown.contains(&l) {
                shown.push(l);
            }
        }
        const SHOWN: usize = 3;
        if shown.len() > SHOWN {
            let more = shown.len() - SHOWN;
            shown.truncate(SHOWN);
            shown.push(format!("{more} more"));
        }
        (verdict, shown.join("; "))
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

const SECOND: Duration = Duration::from_secs(1);

fn constructions(cfg: &SuiteConfig, t: &mut Tally) -> Result<()> {
    let (r, elapsed) = timed(|| -> Result<()> {
        for q in 2..=8 {
            let g = theta(q)?.graph;
            t.check(g.vertex_count() == 3 * q + 2 && g.edge_count() == 4 * q, || {
                format!("theta({q}) has {} vertices, {} edges", g.vertex_count(), g.edge_count())
            });
        }
        for q in 3..=6 {
            let h = h_graph(q)?;
            let g = &h.graph;
            t.check(g.vertex_count() == 6 * q + 3 && g.edge_count() == 8 * q, || {
                format!("H({q}) has {} vertices, {} edges", g.vertex_count(), g.edge_count())
            });
            let d = blocks(g);
            t.check(d.blocks.len() == 2, || format!("H({q}) has {} blocks", d.blocks.len()));
            t.check(
                d.cut_vertices.len() == 1 && d.cut_vertices.first().copied() == h.shared_vertex(),
                || format!("H({q}) cut vertices {:?}", d.cut_vertices),
            );
            let th = theta(q)?.graph;
            for edges in &d.blocks {
                let (block, _) = g.from_edge_set(edges);
                let same_size = block.vertex_count() == th.vertex_count() && block.edge_count() == th.edge_count();
                let found = enumerate_copies(&block, &th, 1, cfg.budget);
                if !found.complete && found.copies.is_empty() {
                    t.open.push(format!("isomorphism test for a block of H({q}) ran out of budget"));
                } else {
                    t.check(same_size && !found.copies.is_empty(), || {
                        format!("a block of H({q}) is not isomorphic to theta({q})")
                    });
                }
            }
        }
        Ok(())
    });
    t.within(elapsed, SECOND, "constructions");
    t.note("theta(2..8) and H(3..6) sizes and blocks checked");
    r
}

fn cubicality(cfg: &SuiteConfig, t: &mut Tally) -> Result<()> {
    let (g, c) = theta3_coloring();
    t.check(verify_nice_coloring(&g, &c)?.is_valid(), || "theta(3) reference colouring rejected".into());

    let h = h_graph(3)?.graph;
    let (found, elapsed) = timed(|| find_nice_coloring(&h, 10, cfg.budget));
    let found = found?;
    t.expect(found.status(), SearchStatus::Found, || "nice colouring of H(3)".into());
    t.within(elapsed, Duration::from_secs(60), "nice colouring of H(3)");
    if let Some(c) = found.witness() {
        t.check(verify_nice_coloring(&h, c)?.is_valid(), || "H(3) colouring fails verification".into());
        t.note(format!("H(3) nicely coloured with {} colours", c.color_count));
    }

    let k3 = complete(3)?;
    let (r, elapsed) = timed(|| -> Result<()> {
        for c_max in 1..=6 {
            let out = find_nice_coloring(&k3, c_max, cfg.budget)?;
            t.expect(out.status(), SearchStatus::ExhaustedNone, || format!("K_3 with {c_max} colours"));
        }
        Ok(())
    });
    r?;
    t.within(elapsed, SECOND, "K_3 colourings");

    let mut corpus = cubical_corpus();
    corpus.extend(cfg.extra_corpus.iter().cloned());
    for (name, g) in &corpus {
        let out = embed_in_hypercube(g, 12, cfg.budget)?;
        t.expect(out.status(), SearchStatus::Found, || format!("embedding {name}"));
        let Some(e) = out.witness() else { continue };
        let c = embedding_to_coloring(g, e)?;
        let ok = verify_nice_coloring(g, &c)?.is_valid();
        t.check(ok, || format!("{name}: colouring from embedding is not nice"));
        if !ok {
            continue;
        }
        let back = coloring_to_embedding(g, &c)?;
        t.check(back == e.translated_to_root(0), || format!("{name}: embedding round trip differs"));
        t.check(embedding_to_coloring(g, &back)? == c, || format!("{name}: colouring round trip differs"));
    }
    t.note(format!("{} corpus graphs round-tripped", corpus.len()));
    Ok(())
}

fn representation_fixtures(t: &mut Tally) -> Result<()> {
    let (r, elapsed) = timed(|| -> Result<()> {
        for q in 2..=8 {
            let g = theta(q)?.graph;
            let r = theta_representation(q)?;
            t.check(verify_representation(&g, &r).is_valid(), || format!("theta({q}) representation rejected"));
        }
        Ok(())
    });
    r?;
    t.within(elapsed, SECOND, "theta representations");
    let (g, r) = c8_representation([&[1, 3], &[2, 4]]);
    t.check(verify_representation(&g, &r).is_valid(), || "8-cycle with parts 13|24 rejected".into());
    let (g, r) = c8_representation([&[1, 2], &[3, 4]]);
    t.check(!verify_representation(&g, &r).is_valid(), || "8-cycle with parts 12|34 accepted".into());
    t.note("theta(2..8) and the 8-cycle verified");
    Ok(())
}

fn gluing(cfg: &SuiteConfig, t: &mut Tally) -> Result<()> {
    let th = (theta(3)?.graph, theta_representation(3)?);
    let c8 = c8_representation([&[1, 3], &[2, 4]]);
    let fixtures: [&(Graph, Representation); 2] = [&th, &c8];
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let pick = |rng: &mut ChaCha8Rng, r: &Representation, top: bool| -> usize {
        let vs: Vec<usize> = (0..r.images.len()).filter(|&v| r.is_top(v) == top).collect();
        vs[rng.random_range(0..vs.len())]
    };
    let (mut tops, mut bottoms) = (0, 0);
    let (r, elapsed) = timed(|| -> Result<()> {
        for i in 0..100 {
            let (ga, ra) = fixtures[rng.random_range(0..2)];
            let (gb, rb) = fixtures[rng.random_range(0..2)];
            let top = rng.random_bool(0.5);
            let a = pick(&mut rng, ra, top);
            let b = pick(&mut rng, rb, top);
            let glued = if top {
                tops += 1;
                glue_top(ga, ra, a, gb, rb, b)?
            } else {
                bottoms += 1;
                glue_bottom(ga, ra, a, gb, rb, b)?
            };
            let r = &glued.representation;
            let want = if top { 2 * ra.k } else { ra.k };
            t.check(r.k == want, || format!("gluing {i}: layer {} instead of {want}", r.k));
            t.check(verify_representation(&glued.graph.graph, r).is_valid(), || {
                format!("gluing {i} ({}) produced an invalid representation", if top { "top" } else { "bottom" })
            });
        }
        Ok(())
    });
    r?;
    t.within(elapsed, Duration::from_secs(10), "gluings");
    t.note(format!("{tops} top and {bottoms} bottom gluings verified"));
    Ok(())
}

fn non_partiteness(cfg: &SuiteConfig, t: &mut Tally) -> Result<()> {
    let tri = Hypergraph::from_lists(4, 3, &[&[1, 2, 4], &[2, 3, 4], &[1, 3, 4]])?;
    t.expect(is_k_partite(&tri, cfg.budget).status(), SearchStatus::ExhaustedNone, || {
        "3-partiteness of 124, 234, 134".into()
    });
    let h = h_graph(3)?.graph;
    let mut closed = None;
    let mut nodes = 0;
    for n in 2..=7 {
        let out = find_representation(&h, 2, n, cfg.budget)?;
        nodes += out.nodes_explored;
        match out.status() {
            SearchStatus::ExhaustedNone => closed = Some(n),
            SearchStatus::Found => {
                t.check(false, || format!("H(3) has a 2-partite representation with n = {n}"));
                break;
            }
            SearchStatus::Inconclusive => break,
        }
    }
    match closed {
        Some(n) => t.note(format!("H(3) has no 2-partite representation for n <= {n} ({nodes} nodes)")),
        None => t.open.push("H(3) search did not close at n = 2".into()),
    }
    Ok(())
}

fn pole_distance(cfg: &SuiteConfig, t: &mut Tally) -> Result<()> {
    for n in [5, 6] {
        let r = pole_distance_scan(3, n, cfg.budget)?;
        if !r.complete {
            t.open.push(format!("theta(3) scan at n = {n} ran out of budget"));
            continue;
        }
        t.check(r.embeddings > 0, || format!("theta(3) scan at n = {n} found no embeddings"));
        t.check(r.all_distance_two(), || format!("theta(3) at n = {n}: distances {:?}", r.distances));
        t.note(format!("theta(3) n={n}: {} embeddings, all at distance 2", r.embeddings));
    }
    let r = pole_distance_scan(2, 4, cfg.budget)?;
    if r.all_distance_two() && !r.complete {
        t.open.push("theta(2) scan at n = 4 ran out of budget".into());
    } else {
        t.check(!r.all_distance_two(), || "theta(2) at n = 4 never violates distance 2".into());
        if let Some((k, images)) = &r.counterexample {
            let list: Vec<String> = images.iter().map(ToString::to_string).collect();
            t.note(format!("theta(2) counterexample in layer {k}: {}", list.join(" ")));
        }
    }
    Ok(())
}

/// Largest C4-free edge subset of `Q_3` by trying all `2^12` subsets and
/// looking for a closed walk of four distinct vertices directly.
fn c4_oracle_q3() -> usize {
    let q = build_hypercube(3).expect("small cube");
    let m = q.edge_count();
    let index = |u: usize, v: usize| q.edge_index(u, v).unwrap();
    let mut best = 0;
    for mask in 0u32..1 << m {
        let has = |u: usize, v: usize| mask >> index(u, v) & 1 == 1;
        let mut found = false;
        'outer: for a in 0..8 {
            for &b in q.neighbors(a) {
                for &c in q.neighbors(b) {
                    for &d in q.neighbors(c) {
                        if c != a && d != b && d != a && q.has_edge(d, a) && has(a, b) && has(b, c) && has(c, d) && has(d, a)
                        {
                            found = true;
                            break 'outer;
                        }
                    }
                }
            }
        }
        if !found {
            best = best.max(mask.count_ones() as usize);
        }
    }
    best
}

fn extremal_numbers(cfg: &SuiteConfig, t: &mut Tally) -> Result<()> {
    let c4 = cycle(4)?;
    let exact = |t: &mut Tally, r: &crate::turan::ExtremalResult<(usize, usize)>, what: &str| -> bool {
        match r.status {
            ExtremalStatus::Exact => true,
            _ => {
                t.open.push(format!("{what} not closed ({:?})", r.status));
                false
            }
        }
    };
    let r = extremal_number(2, &c4, cfg.budget)?;
    if exact(t, &r, "ex(Q_2, C4)") {
        t.check(r.value == 3, || format!("ex(Q_2, C4) = {}", r.value));
    }
    let (r, bb_time) = timed(|| extremal_number(3, &c4, cfg.budget));
    let r = r?;
    let (oracle, oracle_time) = timed(c4_oracle_q3);
    t.within(oracle_time, Duration::from_secs(300), "brute-force oracle");
    if exact(t, &r, "ex(Q_3, C4)") {
        t.within(bb_time, SECOND, "ex(Q_3, C4)");
        t.check(r.value == oracle, || format!("ex(Q_3, C4) = {} but the oracle says {oracle}", r.value));
        t.note(format!("ex(Q_3, C4) = {} = oracle", r.value));
    }
    let k3 = complete(3)?;
    for n in 1..=4 {
        let r = extremal_number(n, &k3, cfg.budget)?;
        if exact(t, &r, &format!("ex(Q_{n}, K_3)")) {
            t.check(r.value == n << (n - 1), || format!("ex(Q_{n}, K_3) = {}", r.value));
        }
    }
    let d = density_sequence(&c4, 1, 4, cfg.budget)?;
    t.check(d.non_increasing(), || format!("C4 density rises at {:?}", d.increases));
    let values: Vec<String> = d
        .rows
        .iter()
        .filter(|r| r.status == ExtremalStatus::Exact)
        .map(|r| format!("{}/{}", r.value, r.cube_edges))
        .collect();
    t.note(format!("C4 densities {}", values.join(" ")));
    Ok(())
}

fn star_count(cfg: &SuiteConfig, t: &mut Tally) -> Result<()> {
    let (r, elapsed) = timed(|| -> Result<usize> {
        let mut checked = 0;
        for i in 0..50u64 {
            let g = LayerGraph::random(6, 3, 0.5, cfg.seed.wrapping_add(i))?;
            for k in [2, 3] {
                let s = star_count_identity(&g, k)?;
                t.check(s.holds(), || format!("random layer {i}, k = {k}: t = {}, sum = {}", s.t, s.full_total));
                checked += 1;
            }
        }
        for n in 3..=6 {
            for j in 1..=n {
                let g = LayerGraph::complete(n, j)?;
                for k in 1..=j {
                    let s = star_count_identity(&g, k)?;
                    t.check(s.holds(), || format!("complete L_{j}(Q_{n}), k = {k}: t = {}, sum = {}", s.t, s.full_total));
                    checked += 1;
                }
            }
        }
        Ok(checked)
    });
    t.within(elapsed, Duration::from_secs(30), "star counts");
    t.note(format!("{} identities checked", r?));
    Ok(())
}

fn mass(t: &mut Tally) -> Result<()> {
    let (r, elapsed) = timed(|| -> Result<()> {
        t.check(middle_mass(4)?.is_zero(), || "middle_mass(4) is not zero".into());
        let values = [10, 20, 40, 80].map(middle_mass);
        let values: Vec<_> = values.into_iter().collect::<Result<_>>()?;
        t.check(values.windows(2).all(|w| w[0] > w[1]), || {
            format!("middle_mass not strictly decreasing: {values:?}")
        });
        let shown: Vec<String> = values.iter().map(|v| format!("{:.3e}", v.to_f64().unwrap_or(f64::NAN))).collect();
        t.note(format!("middle_mass at 10, 20, 40, 80: {}", shown.join(" > ")));
        Ok(())
    });
    t.within(elapsed, SECOND, "middle_mass");
    r
}

fn block_predicate(cfg: &SuiteConfig, t: &mut Tally) -> Result<()> {
    let h = h_graph(3)?.graph;
    let report = blocks_have_representations(&h, 2, 5, cfg.budget);
    if report.blocks.iter().any(|b| b.result == BlockResult::Inconclusive) {
        t.open.push("H(3) block search ran out of budget".into());
    } else {
        t.check(report.blocks.len() == 2, || format!("H(3) reported {} blocks", report.blocks.len()));
        t.check(
            report.blocks.iter().all(|b| matches!(b.result, BlockResult::Represented { .. })),
            || "an H(3) block was not represented".into(),
        );
        t.check(report.zero_density, || "no zero-density verdict for H(3)".into());
    }
    let tri = MarkedGraph::plain(complete(3)?);
    let square = MarkedGraph::plain(cycle(4)?);
    let g = glue_at_vertex(&tri, 0, &square, 0)?.graph;
    let report = blocks_have_representations(&g, 2, 5, cfg.budget);
    t.check(
        report.blocks.iter().any(|b| matches!(b.result, BlockResult::NotBipartite { .. })) && !report.zero_density,
        || "the triangle block was not reported".into(),
    );
    t.note("H(3) blocks represented; triangle block reported as not bipartite");
    Ok(())
}

fn determinism(cfg: &SuiteConfig, t: &mut Tally) -> Result<()> {
    let mut outputs = Vec::new();
    for threads in [1, 8, 1, 8] {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| crate::error::Error::Domain(format!("thread pool: {e}")))?;
        let results = pool.install(|| (1..=10).map(|id| run_criterion(id, cfg)).collect::<Vec<_>>());
        outputs.push((threads, render(&results, false)));
    }
    for (threads, out) in &outputs[1..] {
        t.check(out == &outputs[0].1, || format!("output with {threads} threads differs from the first run"));
    }
    t.note("criteria 1-10 identical over two runs each on 1 and 8 threads");
    Ok(())
}

/// Runs one criterion, numbered from 1.
pub fn run_criterion(id: usize, cfg: &SuiteConfig) -> CriterionResult {
    assert!((1..=CRITERIA.len()).contains(&id), "no criterion {id}");
    let mut t = Tally::default();
    let start = Instant::now();
    let r = match id {
        1 => constructions(cfg, &mut t),
        2 => cubicality(cfg, &mut t),
        3 => representation_fixtures(&mut t),
        4 => gluing(cfg, &mut t),
        5 => non_partiteness(cfg, &mut t),
        6 => pole_distance(cfg, &mut t),
        7 => extremal_numbers(cfg, &mut t),
        8 => star_count(cfg, &mut t),
        9 => mass(&mut t),
        10 => block_predicate(cfg, &mut t),
        _ => determinism(cfg, &mut t),
    };
    t.error(r);
    let elapsed = start.elapsed();
    let (verdict, detail) = t.finish();
    CriterionResult {
        id,
        name: CRITERIA[id - 1],
        verdict,
        detail,
        elapsed,
    }
}

pub fn run_suite(cfg: &SuiteConfig) -> Vec<CriterionResult> {
    (1..=CRITERIA.len()).map(|id| run_criterion(id, cfg)).collect()
}

/// One line per criterion; timings are left out unless asked for, so that
/// the text is reproducible.
pub fn render(results: &[CriterionResult], timings: bool) -> String {
    let mut s = String::new();
    for r in results {
        write!(s, "{:<15}{:>2} {:<24} {}", format!("[{}]", r.verdict.as_str()), r.id, r.name, r.detail).unwrap();
        if timings {
            write!(s, " ({:.3}s)", r.elapsed.as_secs_f64()).unwrap();
        }
        s.push('\n');
    }
    s
}

/// 0 if everything passed, 1 if anything failed, otherwise 2.
pub fn exit_code(results: &[CriterionResult]) -> i32 {
    if results.iter().any(|r| r.verdict == Verdict::Fail) {
        1
    } else if results.iter().any(|r| r.verdict == Verdict::Inconclusive) {
        2
    } else {
        0
    }
}
