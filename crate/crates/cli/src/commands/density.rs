use ordram_core::density::{density_trial, enumerate_density, DensityReport, DensityThresholds, SampleOutcome};
use rayon::prelude::*;

use super::{log_base, Ctx};
use crate::cli::DensityArgs;
use crate::report::{usage, CliError, Report};

const ENUMERATE_MAX_N: usize = 8;
const SAMPLE_MAX_N: usize = 100_000;

pub fn run(a: &DensityArgs, ctx: &Ctx) -> Result<Report, CliError> {
    if a.n < 2 {
        return Err(usage("--n must be at least 2"));
    }
    let mut th = DensityThresholds::standard(a.n, log_base(a.log_base));
    if let Some(l) = a.interval_len {
        if l == 0 {
            return Err(usage("--interval-len must be positive"));
        }
        th.interval_len = l;
    }
    if let Some(c) = a.cap_coeff {
        if !(c.is_finite() && c > 0.0) {
            return Err(usage("--cap-coeff must be positive and finite"));
        }
        th.cap_coeff = c;
    }
    let (report, outcomes) = if a.enumerate {
        if a.n > ENUMERATE_MAX_N {
            return Err(usage(format!("--enumerate needs n <= {ENUMERATE_MAX_N}")));
        }
        enumerate_density(a.n, &th)
    } else {
        if a.n > SAMPLE_MAX_N {
            return Err(usage(format!("--n must be at most {SAMPLE_MAX_N}")));
        }
        let (n, seed, samples) = (a.n, ctx.seed, a.samples);
        let outcomes: Vec<SampleOutcome> =
            ctx.parallel(|| (0..samples).into_par_iter().map(|i| density_trial(n, seed, i, &th)).collect())?;
        (DensityReport::from_outcomes(n, Some(seed), th, &outcomes), outcomes)
    };
    let rows = outcomes
        .iter()
        .map(|o| {
            let (count, len, excess) = match &o.worst_cap {
                Some(w) => (w.pair.count.to_string(), w.pair.second.len().to_string(), w.excess.to_string()),
                None => (String::new(), String::new(), String::new()),
            };
            vec![
                o.sample_id.to_string(),
                o.prop1_ok.to_string(),
                o.prop2_ok.to_string(),
                o.min_cross.map(|p| p.count.to_string()).unwrap_or_default(),
                count,
                len,
                excess,
            ]
        })
        .collect();
    let text = format!(
        "n {} samples {} seed {}\ninterval length {} cap coefficient {}\nproperty 1 failures {} rate {}\nproperty 2 failures {} rate {}",
        report.n,
        report.samples,
        report.seed.map_or("none (exhaustive)".to_string(), |s| s.to_string()),
        th.interval_len,
        th.cap_coeff,
        report.prop1_failures,
        report.prop1_fail_rate,
        report.prop2_failures,
        report.prop2_fail_rate
    );
    Ok(Report::new(serde_json::to_value(&report).expect("serializes"), text).with_table(
        &[
            "sample_id",
            "prop1_ok",
            "prop2_ok",
            "min_cross",
            "worst_cap_count",
            "worst_cap_len",
            "worst_cap_excess",
        ],
        rows,
    ))
}
