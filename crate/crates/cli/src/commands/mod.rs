//! One module per subcommand. Each returns a [`Report`] or a [`CliError`].

mod construct;
mod density;
mod exact;
mod lll;
mod lstat;
mod scan;
mod verify;

use std::path::Path;

use ordram_core::matching::permutation_from_matching;
use ordram_core::scan::{composed_random_bound, scan_bound};
use ordram_core::{EdgeColoring, OrderedGraph, OrderedMatching, Permutation};
use serde_json::{json, Value};

use crate::cli::{BoundArgs, Command, GlobalOpts, LogBaseArg};
use crate::formats::{self, FormatError};
use crate::report::{usage, CliError, Report};

/// Settings shared by every command.
pub struct Ctx {
    pub seed: u64,
    pub threads: usize,
}

impl Ctx {
    pub fn from_global(g: &GlobalOpts) -> Self {
        Ctx {
            seed: g.seed,
            threads: g.threads,
        }
    }

    /// Runs `f` on a pool of the requested size. Results gathered with
    /// indexed parallel iterators keep their order, so output does not
    /// depend on the thread count.
    pub fn parallel<T: Send>(&self, f: impl FnOnce() -> T + Send) -> Result<T, CliError> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.threads)
            .build()
            .map_err(|e| CliError::Runtime(format!("cannot start worker threads: {e}")))?;
        Ok(pool.install(f))
    }
}

pub fn dispatch(cmd: &Command, ctx: &Ctx) -> Result<Report, CliError> {
    match cmd {
        Command::Construct(c) => construct::run(c, ctx),
        Command::Verify(c) => verify::run(c),
        Command::Lstat(a) => lstat::run(a, ctx),
        Command::Scan(c) => scan::run(c),
        Command::Exact(a) => exact::run(a),
        Command::Lll(c) => lll::run(c, ctx),
        Command::Density(a) => density::run(a, ctx),
        Command::Bound(a) => bound(a),
    }
}

fn bound(a: &BoundArgs) -> Result<Report, CliError> {
    if a.ell == 0 {
        return Err(usage("--ell must be at least 1"));
    }
    if a.n > 1 << 20 || a.ell > 1 << 20 {
        return Err(usage("--n and --ell must be at most 2^20"));
    }
    let b = scan_bound(a.n, a.ell);
    let mut text = b.to_string();
    let mut j = json!({ "n": a.n, "ell": a.ell, "bound": b });
    if a.composed {
        let c = composed_random_bound(a.n as f64);
        text.push_str(&format!("\ncomposed {c}"));
        j["composed"] = json!(c);
    }
    Ok(Report::new(j, text))
}

pub fn log_base(b: LogBaseArg) -> ordram_core::lll::LogBase {
    match b {
        LogBaseArg::Two => ordram_core::lll::LogBase::Two,
        LogBaseArg::Natural => ordram_core::lll::LogBase::Natural,
    }
}

pub fn load_graph(p: &Path) -> Result<OrderedGraph, CliError> {
    with_path(p, formats::parse_graph(&formats::read_file(p)?))
}

pub fn load_perm(p: &Path) -> Result<Permutation, CliError> {
    with_path(p, formats::parse_permutation(&formats::read_file(p)?))
}

pub fn load_coloring(p: &Path) -> Result<EdgeColoring, CliError> {
    with_path(p, formats::parse_coloring(&formats::read_file(p)?))
}

/// A perfect matching between the halves, with its permutation.
pub fn load_bipartite_matching(p: &Path) -> Result<(OrderedMatching, Permutation), CliError> {
    let m = OrderedMatching::new(load_graph(p)?)
        .map_err(|e| usage(format!("{}: {e}", p.display())))?;
    let pi = permutation_from_matching(&m).map_err(|e| usage(format!("{}: {e}", p.display())))?;
    Ok((m, pi))
}

pub fn load_json(p: &Path) -> Result<Value, CliError> {
    let text = formats::read_file(p)?;
    serde_json::from_str(&text).map_err(|e| usage(format!("{}: invalid JSON: {e}", p.display())))
}

fn with_path<T>(p: &Path, r: Result<T, FormatError>) -> Result<T, CliError> {
    r.map_err(|e| match e {
        FormatError::Io { .. } => usage(e.to_string()),
        other => usage(format!("{}: {other}", p.display())),
    })
}

pub fn write_file(p: &Path, content: &str) -> Result<(), CliError> {
    std::fs::write(p, content).map_err(|e| CliError::Runtime(format!("cannot write {}: {e}", p.display())))
}

pub fn graph_json(g: &OrderedGraph) -> Value {
    json!({ "n_vertices": g.n_vertices(), "edges": g.edges() })
}

pub fn edge_rows(g: &OrderedGraph) -> Vec<Vec<String>> {
    g.edges().iter().map(|&(u, v)| vec![u.to_string(), v.to_string()]).collect()
}

/// Space-separated one-based numbers.
pub fn one_based(xs: &[usize]) -> String {
    xs.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(" ")
}
