use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cubeturan::suite::DEFAULT_SEED;

pub const VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), " (format 1)");

#[derive(Parser, Debug)]
#[command(name = "cubeturan", version = VERSION, about = "Cubical graphs, partite representations and hypercube Turán numbers")]
pub struct Cli {
    /// output style; json is one record per line
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// worker threads (default: all cores)
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// node budget per search
    #[arg(long, env = "CUBETURAN_BUDGET_NODES", global = true)]
    pub budget_nodes: Option<u64>,
    /// wall-clock budget per search, in seconds
    #[arg(long, env = "CUBETURAN_BUDGET_SECONDS", global = true)]
    pub budget_seconds: Option<f64>,
    /// seed for randomized checks
    #[arg(long, default_value_t = DEFAULT_SEED, global = true)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum GlueMode {
    Top,
    Bottom,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// place vertices on cube vertices directly
    Embed,
    /// search for a nice edge colouring
    Coloring,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a named graph as an edge list
    Construct {
        #[command(subcommand)]
        kind: Construct,
    },
    /// Decide whether a graph embeds in Q_n for some n <= nmax
    CheckCubical {
        /// edge-list file; stdin when absent or "-"
        input: Option<PathBuf>,
        #[arg(long)]
        nmax: usize,
        #[arg(long, value_enum, default_value_t = Method::Embed)]
        method: Method,
    },
    /// Search for a k-partite representation inside L_k(Q_n)
    FindRep {
        input: Option<PathBuf>,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// Check a representation file against a graph
    VerifyRep {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        rep: PathBuf,
    },
    /// Glue two represented graphs at a vertex
    Glue(GlueArgs),
    /// Main-pole distances over all layer embeddings of theta(q)
    ScanPoles {
        #[arg(long)]
        q: usize,
        #[arg(long)]
        n: usize,
    },
    /// Look for a partite representation of every block
    BlocksRep {
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 2)]
        k_max: usize,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
    },
    /// Exact ex(Q_n, H)
    Extremal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        guest: PathBuf,
    },
    /// ex(Q_n, H) / ||Q_n|| over a range of n
    Density {
        #[arg(long)]
        guest: PathBuf,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
    },
    /// Star-count identity on a random subgraph of L_j(Q_n)
    Starcount {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
    },
    /// Run the acceptance suite
    Report {
        /// include wall-clock timings (output is then not reproducible)
        #[arg(long)]
        timings: bool,
        /// extra connected cubical graphs for the round-trip check
        #[arg(long = "fixture")]
        fixtures: Vec<PathBuf>,
    },
}

#[derive(Args, Debug)]
pub struct GlueArgs {
    #[arg(long, value_enum)]
    pub mode: GlueMode,
    #[arg(long)]
    pub first: PathBuf,
    #[arg(long)]
    pub first_rep: PathBuf,
    #[arg(long)]
    pub first_vertex: usize,
    #[arg(long)]
    pub second: PathBuf,
    #[arg(long)]
    pub second_rep: PathBuf,
    #[arg(long)]
    pub second_vertex: usize,
    /// also write the glued graph here
    #[arg(long)]
    pub graph_out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Construct {
    Theta { q: usize },
    H { q: usize },
    CompleteBipartite { s: usize, t: usize },
    Cycle { len: usize },
    Path { edges: usize },
    Complete { n: usize },
    Hypercube { n: usize },
    Layer { n: usize, j: usize },
    /// 1-subdivision of an edge-list graph
    Subdivide { input: Option<PathBuf> },
}
