//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "ordram",
    version,
    about = "Ordered Ramsey experiments: jumbled matchings, shift statistics, scanning, exact search, local-lemma audits and density checks",
    after_help = "Text formats are one-based; JSON and CSV reports are zero-based.\nExit status: 0 success, 1 violated property or runtime failure, 2 usage error."
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
#[command(next_help_heading = "Global Options")]
pub struct GlobalOpts {
    /// Seed of the counter-based generator
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Report format
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// Write the report to this file instead of stdout
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Worker threads for Monte Carlo runs (0 = all cores)
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LogBaseArg {
    /// Binary logarithm
    #[value(name = "2")]
    Two,
    /// Natural logarithm
    #[value(name = "e", alias = "natural")]
    Natural,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Solver {
    /// Exhaustive depth-first search with a node budget
    Dfs,
    /// CDCL SAT solver over one variable per edge
    Sat,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build matchings and permutations
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// Check structural claims and re-verify emitted certificates
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Shift statistic of one permutation or its distribution
    Lstat(LstatArgs),
    /// Multi-thread scanning of color matrices and colorings
    #[command(subcommand)]
    Scan(ScanCmd),
    /// Exact ordered Ramsey number of a pair of patterns
    Exact(ExactArgs),
    /// Local-lemma parameter audit and random colorings
    #[command(subcommand)]
    Lll(LllCmd),
    /// Interval-density experiment on random bipartite matchings
    Density(DensityArgs),
    /// Scanning bound ceil(4n(sqrt(n l) + 1))
    Bound(BoundArgs),
}

#[derive(Debug, Subcommand)]
pub enum ConstructCmd {
    /// Grid matching on 2t^2 vertices
    #[command(name = "m-t")]
    MT {
        /// Block length and block count
        #[arg(long)]
        t: usize,
        /// Write the block layout as JSON to this file
        #[arg(long, value_name = "FILE")]
        layout_out: Option<PathBuf>,
    },
    /// Block matching with interval chromatic number k on k(k-1)t^2 vertices
    #[command(name = "m-kt")]
    MKt {
        /// Number of classes (at least 3)
        #[arg(long)]
        k: usize,
        /// Block length
        #[arg(long)]
        t: usize,
        /// Write the class, block and superblock layout as JSON to this file
        #[arg(long, value_name = "FILE")]
        layout_out: Option<PathBuf>,
    },
    /// Bipartite matching {i, n + pi(i)} of a permutation file
    FromPerm {
        /// Permutation file (one line of one-based images)
        #[arg(long, value_name = "FILE")]
        perm: PathBuf,
    },
    /// Uniform random permutation drawn from stream INDEX of the seed
    RandomPerm {
        /// Length
        #[arg(long)]
        n: usize,
        /// Trial index (stream number)
        #[arg(long, default_value_t = 0)]
        index: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum VerifyCmd {
    /// Interval chromatic number with an optimal interval partition
    Chi {
        /// Ordered graph file (.og)
        #[arg(long, value_name = "FILE")]
        graph: PathBuf,
    },
    /// Order-preserving containment of a pattern in a host graph
    Contains {
        /// Host graph file (.og)
        #[arg(long, value_name = "FILE")]
        host: PathBuf,
        /// Pattern graph file (.og)
        #[arg(long, value_name = "FILE")]
        pattern: PathBuf,
    },
    /// Every pair of long intervals across the halves of the grid matching has an edge
    #[command(name = "m-t")]
    MT {
        /// Block length and block count
        #[arg(long)]
        t: usize,
        /// Minimum interval length (default 2t); smaller values are reported as tightness probes
        #[arg(long)]
        min_len: Option<usize>,
    },
    /// Density, superblock and chromatic claims of the block matching
    #[command(name = "m-kt")]
    MKt {
        /// Number of classes (at least 3)
        #[arg(long)]
        k: usize,
        /// Block length
        #[arg(long)]
        t: usize,
    },
    /// A coloring has no red copy of RED and no blue copy of BLUE
    Certificate {
        /// Edge coloring file
        #[arg(long, value_name = "FILE")]
        coloring: PathBuf,
        /// Red pattern file (.og)
        #[arg(long, alias = "pattern-red", value_name = "FILE")]
        red: PathBuf,
        /// Blue pattern file (.og)
        #[arg(long, alias = "pattern-blue", value_name = "FILE")]
        blue: PathBuf,
    },
    /// A shift witness (JSON from `lstat --format json`) is valid for a permutation
    ShiftWitness {
        /// Permutation file
        #[arg(long, value_name = "FILE")]
        perm: PathBuf,
        /// JSON file holding a witness object
        #[arg(long, value_name = "FILE")]
        witness: PathBuf,
    },
    /// The edge count of an interval pair (JSON) matches a recount
    IntervalPair {
        /// Permutation file of the bipartite matching
        #[arg(long, value_name = "FILE")]
        perm: PathBuf,
        /// JSON file holding an interval pair
        #[arg(long, value_name = "FILE")]
        witness: PathBuf,
    },
    /// A verdict from `scan check --format json` holds for the coloring
    ScanVerdict {
        /// Edge coloring file
        #[arg(long, value_name = "FILE")]
        coloring: PathBuf,
        /// Bipartite matching file (.og)
        #[arg(long, value_name = "FILE")]
        matching: PathBuf,
        /// JSON file holding the verdict
        #[arg(long, value_name = "FILE")]
        verdict: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct LstatArgs {
    /// Permutation file; compute L with a witness
    #[arg(long, value_name = "FILE", conflicts_with_all = ["n", "samples", "exact"])]
    pub perm: Option<PathBuf>,
    /// Cross-check against brute force (n <= 10)
    #[arg(long, requires = "perm")]
    pub bruteforce: bool,
    /// Permutation length for a distribution
    #[arg(long, required_unless_present = "perm")]
    pub n: Option<usize>,
    /// Number of seeded uniform samples [default: 1000]
    #[arg(long, conflicts_with = "exact")]
    pub samples: Option<u64>,
    /// Enumerate all of S_n instead of sampling (n <= 10)
    #[arg(long)]
    pub exact: bool,
}

#[derive(Debug, Subcommand)]
pub enum ScanCmd {
    /// Run the scanning threads over a color matrix and report every trace
    Trace {
        /// R/B color matrix file
        #[arg(long, value_name = "FILE")]
        matrix: PathBuf,
        /// Permutation file
        #[arg(long, value_name = "FILE")]
        perm: PathBuf,
        /// Number of threads [default: ceil(sqrt(n / max(L, 1))), capped by the matrix]
        #[arg(long)]
        scan_threads: Option<usize>,
    },
    /// Find a blue triangle, a red clique or a red matching copy in a coloring of K_2N
    Check {
        /// Edge coloring file with an even number of vertices
        #[arg(long, value_name = "FILE")]
        coloring: PathBuf,
        /// Bipartite matching file (.og)
        #[arg(long, value_name = "FILE")]
        matching: PathBuf,
        /// Shift-statistic bound l used for the size threshold
        #[arg(long)]
        ell: usize,
    },
}

#[derive(Debug, Args)]
pub struct ExactArgs {
    /// Red pattern file (.og)
    #[arg(long = "pattern-red", alias = "red", value_name = "FILE")]
    pub pattern_red: PathBuf,
    /// Blue pattern file (.og)
    #[arg(long = "pattern-blue", alias = "blue", value_name = "FILE")]
    pub pattern_blue: PathBuf,
    /// Largest N tried
    #[arg(long)]
    pub nmax: usize,
    /// Search-node budget per N (depth-first solver only)
    #[arg(long, default_value_t = ordram_core::ramsey::DEFAULT_BUDGET)]
    pub budget: u64,
    /// Use the triangle-free blue search (BLUE must be K_3)
    #[arg(long)]
    pub specialize_triangle: bool,
    /// Decision procedure
    #[arg(long, value_enum, default_value_t = Solver::Dfs)]
    pub solver: Solver,
    /// Write a good coloring on r - 1 vertices (largest found) to this file
    #[arg(long, value_name = "FILE")]
    pub certificate_out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum LllCmd {
    /// Check the parameter inequalities, evaluate margins and scan for crossovers
    Audit(LllAuditArgs),
    /// Draw a random coloring with blue probability 1/(2 gamma) and census it
    Sample(LllSampleArgs),
}

#[derive(Debug, Args)]
pub struct LllAuditArgs {
    /// Exponent alpha (fraction, integer or decimal)
    #[arg(long)]
    pub alpha: String,
    /// Exponent beta
    #[arg(long)]
    pub beta: String,
    /// Exponent gamma
    #[arg(long)]
    pub gamma: String,
    /// Exponent delta
    #[arg(long)]
    pub delta: String,
    /// Point at which the margins are evaluated
    #[arg(long, default_value_t = 1_000_000)]
    pub n: u64,
    /// Base of the logarithm inside the weights
    #[arg(long, value_enum, default_value_t = LogBaseArg::Two)]
    pub log_base: LogBaseArg,
    /// Upper end of the crossover grid
    #[arg(long, default_value_t = 100_000_000)]
    pub grid_max: u64,
    /// Points of the logarithmic crossover grid
    #[arg(long, default_value_t = 200)]
    pub grid_points: usize,
}

#[derive(Debug, Args)]
pub struct LllSampleArgs {
    /// Number of vertices
    #[arg(long)]
    pub v: usize,
    /// gamma >= 1; blue edges appear with probability 1/(2 gamma)
    #[arg(long)]
    pub gamma_scale: f64,
    /// Part size of the red K_{s,s} census
    #[arg(long, default_value_t = 2)]
    pub s: usize,
    /// Monte Carlo samples for the census when s > 3
    #[arg(long, default_value_t = 10_000)]
    pub estimator_samples: u64,
    /// Write the coloring to this file
    #[arg(long, value_name = "FILE")]
    pub coloring_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DensityArgs {
    /// Half the number of vertices
    #[arg(long)]
    pub n: usize,
    /// Number of seeded samples
    #[arg(long, default_value_t = 200, conflicts_with = "enumerate")]
    pub samples: u64,
    /// Evaluate every permutation of S_n (n <= 8)
    #[arg(long)]
    pub enumerate: bool,
    /// Base of the logarithm in the thresholds
    #[arg(long, value_enum, default_value_t = LogBaseArg::Two)]
    pub log_base: LogBaseArg,
    /// Override the interval length L [default: ceil(2 sqrt(n log n))]
    #[arg(long)]
    pub interval_len: Option<usize>,
    /// Override the cap coefficient c in cap(s) = c s [default: 12 sqrt(log n / n)]
    #[arg(long)]
    pub cap_coeff: Option<f64>,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    /// Matching size n
    #[arg(long)]
    pub n: u64,
    /// Shift-statistic bound l (at least 1)
    #[arg(long)]
    pub ell: u64,
    /// Also print 4n(sqrt(3 n^1.5) + 1), the bound with l = 3 sqrt(n)
    #[arg(long)]
    pub composed: bool,
}
