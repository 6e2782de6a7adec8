use num_rational::Ratio;
use ordram_core::lll::{
    audit_lll_conditions, check_param_inequalities, lll_crossover_scan, sample_lll_coloring, LllParams,
    RationalParams,
};
use serde_json::json;

use super::{log_base, write_file, Ctx};
use crate::cli::{LllAuditArgs, LllCmd, LllSampleArgs};
use crate::formats::{parse_ratio, write_coloring};
use crate::report::{usage, CliError, Report};

const MAX_SAMPLE_VERTICES: usize = 5000;

pub fn run(cmd: &LllCmd, ctx: &Ctx) -> Result<Report, CliError> {
    match cmd {
        LllCmd::Audit(a) => audit(a),
        LllCmd::Sample(a) => sample(a, ctx),
    }
}

fn ratio(name: &str, s: &str) -> Result<Ratio<i64>, CliError> {
    parse_ratio(s).map_err(|e| usage(format!("--{name}: {e}")))
}

fn audit(a: &LllAuditArgs) -> Result<Report, CliError> {
    let p = RationalParams {
        alpha: ratio("alpha", &a.alpha)?,
        beta: ratio("beta", &a.beta)?,
        gamma: ratio("gamma", &a.gamma)?,
        delta: ratio("delta", &a.delta)?,
    };
    if a.n < 2 || a.grid_max < 2 || a.grid_points < 2 {
        return Err(usage("--n and --grid-max must be at least 2 and --grid-points at least 2"));
    }
    if a.grid_points > 100_000 {
        return Err(usage("--grid-points must be at most 100000"));
    }
    let base = log_base(a.log_base);
    let check = check_param_inequalities(&p);
    let audit = audit_lll_conditions(&LllParams::from_rational(&p, a.n), base)?;
    let scan = lll_crossover_scan(&p, base, a.grid_max, a.grid_points)?;

    let show = |r: &Ratio<i64>| r.to_string();
    let mut text = String::new();
    if check.ok {
        text.push_str("inequalities ok\n");
    } else {
        for v in &check.violated {
            text.push_str(&format!("violated: {}\n", v.describe()));
        }
    }
    let m = audit.margins;
    text.push_str(&format!(
        "n {} log base {}\nmargin P {}\nmargin Q {}\nmargin R {}\nall positive {}\n",
        a.n,
        match a.log_base {
            crate::cli::LogBaseArg::Two => "2",
            crate::cli::LogBaseArg::Natural => "e",
        },
        m.p,
        m.q,
        m.r,
        m.all_positive()
    ));
    for c in &scan.conditions {
        text.push_str(&format!(
            "crossover {} {}\n",
            c.condition,
            c.crossover_n.map_or("none".to_string(), |n| n.to_string())
        ));
    }
    text.push_str(&format!(
        "crossover n {}",
        scan.crossover_n.map_or("none".to_string(), |n| n.to_string())
    ));
    if !audit.base_sensitive.is_empty() {
        text.push_str(&format!("\nbase-sensitive {}", audit.base_sensitive.join(" ")));
    }
    let violated: Vec<&str> = check.violated.iter().map(|v| v.describe()).collect();
    let j = json!({
        "params": { "alpha": show(&p.alpha), "beta": show(&p.beta), "gamma": show(&p.gamma), "delta": show(&p.delta) },
        "n": a.n,
        "check": { "ok": check.ok, "violated": violated },
        "margins": { "P": m.p, "Q": m.q, "R": m.r },
        "all_positive": m.all_positive(),
        "margins_other_base": { "P": audit.margins_other_base.p, "Q": audit.margins_other_base.q, "R": audit.margins_other_base.r },
        "o_term": audit.o_term,
        "weights_log": audit.weights_log,
        "budget_log": audit.budget_log,
        "log_base": audit.base,
        "base_sensitive": audit.base_sensitive,
        "crossover": scan.conditions,
        "crossover_n": scan.crossover_n,
    });
    Ok(Report::new(j, text).violated(!check.ok))
}

fn sample(a: &LllSampleArgs, ctx: &Ctx) -> Result<Report, CliError> {
    if a.v > MAX_SAMPLE_VERTICES {
        return Err(usage(format!("--v must be at most {MAX_SAMPLE_VERTICES}")));
    }
    if !a.gamma_scale.is_finite() {
        return Err(usage("--gamma-scale must be finite"));
    }
    let s = sample_lll_coloring(a.v, a.gamma_scale, ctx.seed, a.s, a.estimator_samples)?;
    if let Some(path) = &a.coloring_out {
        write_file(path, &write_coloring(&s.coloring))?;
    }
    let c = &s.red_bipartite;
    let text = format!(
        "v {} gamma {} seed {}\nblue probability {}\nblue edges {}\nblue triangles {}\nred K_{{{s},{s}}} {}{}",
        a.v,
        a.gamma_scale,
        ctx.seed,
        s.blue_probability,
        s.blue_edges,
        s.blue_triangles,
        c.count,
        if c.exact {
            " (exact)".to_string()
        } else {
            format!(" (estimate, std error {}, {} samples)", c.std_error, c.samples)
        },
        s = c.s,
    );
    let j = json!({
        "v": a.v,
        "gamma_scale": a.gamma_scale,
        "seed": ctx.seed,
        "blue_probability": s.blue_probability,
        "blue_edges": s.blue_edges,
        "blue_triangles": s.blue_triangles,
        "red_bipartite": c,
    });
    Ok(Report::new(j, text))
}
