use ordram_core::shift::{
    exact_l_distribution, sample_trial, shift_statistic, shift_statistic_bruteforce, LDistribution, BRUTEFORCE_MAX_N,
};
use rayon::prelude::*;
use serde_json::json;

use super::{load_perm, one_based, Ctx};
use crate::cli::LstatArgs;
use crate::report::{usage, CliError, Report};

const DEFAULT_SAMPLES: u64 = 1000;
const EXACT_MAX_N: usize = 10;
const SAMPLE_MAX_N: usize = 1 << 16;

pub fn run(a: &LstatArgs, ctx: &Ctx) -> Result<Report, CliError> {
    if let Some(path) = &a.perm {
        return single(path, a.bruteforce);
    }
    let n = a.n.expect("clap requires --n without --perm");
    let dist = if a.exact {
        if n > EXACT_MAX_N {
            return Err(usage(format!("--exact needs n <= {EXACT_MAX_N}")));
        }
        exact_l_distribution(n)
    } else {
        if n > SAMPLE_MAX_N {
            return Err(usage(format!("--n must be at most {SAMPLE_MAX_N}")));
        }
        let samples = a.samples.unwrap_or(DEFAULT_SAMPLES);
        let seed = ctx.seed;
        let values: Vec<usize> =
            ctx.parallel(|| (0..samples).into_par_iter().map(|i| sample_trial(n, seed, i)).collect())?;
        LDistribution::from_values(n, Some(seed), values)
    };
    Ok(distribution_report(&dist))
}

fn single(path: &std::path::Path, bruteforce: bool) -> Result<Report, CliError> {
    let pi = load_perm(path)?;
    let s = shift_statistic(&pi);
    let mut j = json!({ "n": pi.len(), "length": s.length, "witness": s.witness });
    let mut text = format!("{}", s.length);
    if let Some(w) = &s.witness {
        text.push_str(&format!(
            "\ndelta {}\nC {}\nD {}",
            w.delta,
            one_based(&w.c_indices),
            one_based(&w.d_indices)
        ));
    }
    let mut mismatch = false;
    if bruteforce {
        if pi.len() > BRUTEFORCE_MAX_N {
            return Err(usage(format!("--bruteforce needs n <= {BRUTEFORCE_MAX_N}")));
        }
        let b = shift_statistic_bruteforce(&pi)?;
        mismatch = b != s.length;
        j["bruteforce"] = json!(b);
        text.push_str(&format!("\nbruteforce {b}"));
    }
    Ok(Report::new(j, text).violated(mismatch))
}

fn distribution_report(d: &LDistribution) -> Report {
    let rate = d.exceedance_rate();
    let mut j = serde_json::to_value(d).expect("serializes");
    j["exceedance_rate"] = json!(rate);
    let seed = d.seed.map_or("none (exhaustive)".to_string(), |s| s.to_string());
    let text = format!(
        "n {}\nsamples {}\nseed {seed}\nmax {}\nmean {}\nthreshold {}\nexceed_count {}\nexceedance_rate {rate}",
        d.n, d.samples, d.max, d.mean, d.threshold, d.exceed_count
    );
    let rows = d
        .histogram
        .iter()
        .enumerate()
        .map(|(v, c)| vec![v.to_string(), c.to_string()])
        .collect();
    Report::new(j, text).with_table(&["value", "count"], rows)
}
