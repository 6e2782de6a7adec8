use ordram_core::scan::{
    cross_thread_intersections, default_thread_count, multi_thread_scan, scan_certificate_check, ScanVerdict,
    ThreadOutcome,
};
use ordram_core::shift::shift_statistic;
use serde_json::json;

use super::{load_bipartite_matching, load_coloring, load_perm, one_based};
use crate::cli::ScanCmd;
use crate::formats;
use crate::report::{usage, CliError, Report};

pub fn run(cmd: &ScanCmd) -> Result<Report, CliError> {
    match cmd {
        ScanCmd::Trace { matrix, perm, scan_threads } => {
            let a = formats::parse_matrix(&formats::read_file(matrix)?)
                .map_err(|e| usage(format!("{}: {e}", matrix.display())))?;
            let pi = load_perm(perm)?;
            let n = pi.len();
            if n > a.dim() {
                return Err(usage(format!("permutation of length {n} does not fit a {0}x{0} matrix", a.dim())));
            }
            let l = shift_statistic(&pi).length;
            let max_threads = a.dim() - n + 1;
            let threads = scan_threads.unwrap_or_else(|| default_thread_count(n, l).min(max_threads));
            if threads == 0 || threads > max_threads {
                return Err(usage(format!("--scan-threads must be in 1..={max_threads}")));
            }
            let trace = multi_thread_scan(&a, &pi, threads)?;
            trace_report(&trace, l)
        }
        ScanCmd::Check { coloring, matching, ell } => {
            if *ell == 0 {
                return Err(usage("--ell must be at least 1"));
            }
            let chi = load_coloring(coloring)?;
            let (m, _) = load_bipartite_matching(matching)?;
            if chi.n_vertices() % 2 != 0 {
                return Err(usage("the coloring must have an even number of vertices"));
            }
            let check = scan_certificate_check(&chi, &m, *ell)?;
            let verdict = match &check.verdict {
                ScanVerdict::BlueTriangle { vertices } => format!("blue triangle {}", one_based(vertices)),
                ScanVerdict::RedClique { center, vertices } => {
                    format!("red clique in the blue neighborhood of {}: {}", center + 1, one_based(vertices))
                }
                ScanVerdict::RedMatchingCopy { offset, rows, columns } => format!(
                    "red matching copy at offset {offset}\nleft {}\nright {}",
                    one_based(rows),
                    one_based(&columns.iter().map(|c| c + check.dim).collect::<Vec<_>>())
                ),
                ScanVerdict::BoundViolatedCounterexample => "none of the three outcomes".into(),
            };
            let violated =
                check.verdict == ScanVerdict::BoundViolatedCounterexample && check.preconditions_met;
            let text = format!(
                "{verdict}\nN {} n {} ell {} bound {} preconditions {}",
                check.dim,
                check.n,
                check.ell,
                check.bound,
                if check.preconditions_met { "met" } else { "not met (advisory)" }
            );
            Ok(Report::new(serde_json::to_value(&check).expect("serializes"), text).violated(violated))
        }
    }
}

fn trace_report(trace: &ordram_core::scan::ScanTrace, l: usize) -> Result<Report, CliError> {
    let threads = trace.threads.len();
    let mut pairs = Vec::new();
    let mut worst = 0;
    for t in 0..threads {
        for u in 0..t {
            if let Ok(k) = cross_thread_intersections(trace, t, u) {
                worst = worst.max(k);
                pairs.push(json!({ "thread": t, "earlier": u, "intersections": k }));
            }
        }
    }
    let mut text = String::new();
    let mut rows = Vec::new();
    for (t, o) in trace.threads.iter().enumerate() {
        match o {
            ThreadOutcome::Success { rows: r, columns, blue_revealed } => {
                text.push_str(&format!(
                    "thread {t}: success rows {} columns {} blue {blue_revealed}\n",
                    one_based(r),
                    one_based(columns)
                ));
                rows.push(vec![t.to_string(), "success".into(), blue_revealed.to_string(), "0".into()]);
            }
            ThreadOutcome::Failure { segments, blue_revealed } => {
                text.push_str(&format!(
                    "thread {t}: failure blue {blue_revealed} segments {}\n",
                    segments.len()
                ));
                rows.push(vec![t.to_string(), "failure".into(), blue_revealed.to_string(), segments.len().to_string()]);
            }
        }
    }
    let first = trace.first_success();
    text.push_str(&match first {
        Some(t) => format!("first success {t}\n"),
        None => "first success none\n".into(),
    });
    text.push_str(&format!("max intersections {worst} (L = {l})"));
    let mut j = serde_json::to_value(trace).expect("serializes");
    j["shift_statistic"] = json!(l);
    j["first_success"] = json!(first);
    j["intersections"] = json!(pairs);
    j["max_intersections"] = json!(worst);
    Ok(Report::new(j, text)
        .with_table(&["thread", "outcome", "blue_revealed", "segments"], rows)
        .violated(worst > l))
}
