use ordram_core::ramsey::{ordered_ramsey, ArrowingResult, RamseyOptions, RamseyValue, MAX_VERTICES};
use serde_json::json;

use super::{load_graph, write_file};
use crate::cli::{ExactArgs, Solver};
use crate::formats::write_coloring;
use crate::report::{usage, CliError, Report};
use crate::sat::ordered_ramsey_sat;

pub fn run(a: &ExactArgs) -> Result<Report, CliError> {
    let red = load_graph(&a.pattern_red)?;
    let blue = load_graph(&a.pattern_blue)?;
    if a.nmax > MAX_VERTICES {
        return Err(usage(format!("--nmax must be at most {MAX_VERTICES}")));
    }
    let (value, steps) = match a.solver {
        Solver::Dfs => {
            let opts = RamseyOptions {
                n_max: a.nmax,
                budget: a.budget,
                specialize_triangle: a.specialize_triangle,
            };
            let out = ordered_ramsey(&red, &blue, opts)?;
            (out.value, out.steps)
        }
        Solver::Sat => {
            if a.specialize_triangle {
                return Err(usage("--specialize-triangle applies to the dfs solver only"));
            }
            ordered_ramsey_sat(&red, &blue, a.nmax)?
        }
    };
    // A good coloring on the most vertices proves the strongest lower bound.
    let best: Option<&ArrowingResult> = steps.iter().rev().find(|s| s.certificate.is_some());
    if let (Some(path), Some(step)) = (&a.certificate_out, best) {
        write_file(path, &write_coloring(step.certificate.as_ref().expect("filtered")))?;
    }
    let (exact, text) = match value {
        RamseyValue::Exact(r) => (Some(r), r.to_string()),
        RamseyValue::Unknown { n_max } => (None, format!(">{n_max}")),
    };
    let step_json: Vec<_> = steps
        .iter()
        .map(|s| json!({ "n": s.n, "arrows": s.arrows, "nodes_explored": s.nodes_explored }))
        .collect();
    let rows = steps
        .iter()
        .map(|s| vec![s.n.to_string(), s.arrows.to_string(), s.nodes_explored.to_string()])
        .collect();
    let j = json!({
        "value": exact,
        "n_max": a.nmax,
        "solver": match a.solver { Solver::Dfs => "dfs", Solver::Sat => "sat" },
        "specialize_triangle": a.specialize_triangle,
        "steps": step_json,
        "certificate_n": best.map(|s| s.n),
    });
    Ok(Report::new(j, text).with_table(&["n", "arrows", "nodes_explored"], rows))
}
