//! Interval densities of random perfect bipartite matchings.
//!
//! For a matching on `0..2n` with parameters `L` (interval length) and
//! `cap(s) = c * s` (edge cap), two properties are checked:
//!
//! 1. every `I ⊆ 0..n`, `J ⊆ n..2n` with `|I|, |J| >= L` carry an edge;
//! 2. every disjoint `C, D ⊆ 0..2n` with `|C| <= L` and `|D| = s >= L`
//!    carry at most `cap(s)` edges.
//!
//! The default thresholds are `L = ceil(2 sqrt(n log n))` and
//! `c = 12 sqrt(log n / n)` with base-2 logarithms.
//!
//! Property 1 is monotone under shrinking intervals, so only `L x L` windows
//! are scanned. For property 2 each maximal `C` (a length-`L` window, clipped
//! at the ends) is paired with the `D` on each side: if `g(k)` is the
//! shortest span holding `k` partners of `C`, the pair fails exactly when
//! `k > cap(max(L, g(k)))` for some `k`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Interval;
use crate::lll::LogBase;
use crate::matching::{matching_from_permutation, permutation_from_matching, OrderedMatching, Permutation};
use crate::rng::substream;

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DensityThresholds {
    /// `L`.
    pub interval_len: usize,
    /// `c` in `cap(s) = c * s`.
    pub cap_coeff: f64,
}

impl DensityThresholds {
    /// `L = ceil(2 sqrt(n log n))`, `c = 12 sqrt(log n / n)`.
    pub fn standard(n: usize, base: LogBase) -> Self {
        let nf = n as f64;
        let lg = base.log(nf);
        DensityThresholds {
            interval_len: libm::ceil(2.0 * libm::sqrt(nf * lg)) as usize,
            cap_coeff: 12.0 * libm::sqrt(lg / nf),
        }
    }

    pub fn cap(&self, s: usize) -> f64 {
        self.cap_coeff * s as f64
    }
}

/// A pair of intervals and the number of matching edges between them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct IntervalPair {
    pub first: Interval,
    pub second: Interval,
    pub count: usize,
}

impl IntervalPair {
    /// Recounts the edges of `m` between the two intervals.
    pub fn recount(&self, m: &OrderedMatching) -> usize {
        m.edges_between(self.first, self.second)
    }
}

fn partners(m: &OrderedMatching) -> Vec<usize> {
    (0..m.n_vertices()).map(|v| m.partner(v).unwrap_or(usize::MAX)).collect()
}

/// Fewest edges between `I ⊆ 0..n` and `J ⊆ n..2n` with `|I| = |J| = l`.
///
/// `None` when `l > n`. Ties go to the lexicographically first `(I, J)`.
pub fn min_cross_edges(m: &OrderedMatching, l: usize) -> Result<Option<IntervalPair>> {
    let pi = permutation_from_matching(m)?;
    if l == 0 {
        return Err(Error::InvalidParameters("interval length must be positive".into()));
    }
    Ok(min_cross_edges_perm(&pi, l))
}

fn min_cross_edges_perm(pi: &Permutation, l: usize) -> Option<IntervalPair> {
    let n = pi.len();
    if l > n {
        return None;
    }
    let mut best: Option<IntervalPair> = None;
    // in_window[j]: image j is hit by the current I window.
    let mut in_window = vec![0u32; n];
    for i in 0..l {
        in_window[pi.get(i)] = 1;
    }
    for a in 0..=n - l {
        if a > 0 {
            in_window[pi.get(a - 1)] = 0;
            in_window[pi.get(a + l - 1)] = 1;
        }
        let mut sum: u32 = in_window[..l].iter().sum();
        for b in 0..=n - l {
            if b > 0 {
                sum = sum - in_window[b - 1] + in_window[b + l - 1];
            }
            if best.is_none_or(|p| (sum as usize) < p.count) {
                best = Some(IntervalPair {
                    first: Interval::new(a, a + l),
                    second: Interval::new(n + b, n + b + l),
                    count: sum as usize,
                });
            }
        }
    }
    best
}

/// Windows `C` of length `len_c` (clipped at the ends) with the region on
/// one side where `D` may live, and the sorted partners of `C` in it.
fn for_each_side(p: &[usize], len_c: usize, mut f: impl FnMut(Interval, Interval, &[usize])) {
    let total = p.len();
    let mut pts = Vec::with_capacity(len_c);
    for e in 1..=total {
        // C = [e - len_c, e), D to the right in [e, total).
        let c = Interval::new(e.saturating_sub(len_c), e);
        pts.clear();
        pts.extend((c.start..c.end).map(|v| p[v]).filter(|&w| w != usize::MAX && w >= e));
        pts.sort_unstable();
        f(c, Interval::new(e, total), &pts);
    }
    for e in 0..total {
        // C = [e, e + len_c), D to the left in [0, e).
        let c = Interval::new(e, (e + len_c).min(total));
        pts.clear();
        pts.extend((c.start..c.end).map(|v| p[v]).filter(|&w| w < e));
        pts.sort_unstable();
        f(c, Interval::new(0, e), &pts);
    }
}

/// Length-`len` interval inside `region` that starts at or before `lo` and
/// reaches as far right as possible; `len <= region.len()`.
fn place(region: Interval, lo: usize, len: usize) -> Interval {
    let start = lo.min(region.end - len).max(region.start);
    Interval::new(start, start + len)
}

/// Most edges between disjoint `C`, `D` with `|C| <= len_c`, `|D| = s`.
///
/// `first` is `C`, `second` is `D`. `None` when no such pair exists.
pub fn max_small_interval_edges(m: &OrderedMatching, len_c: usize, s: usize) -> Result<Option<IntervalPair>> {
    if len_c == 0 || s == 0 {
        return Err(Error::InvalidParameters("interval lengths must be positive".into()));
    }
    let p = partners(m);
    let mut best: Option<IntervalPair> = None;
    for_each_side(&p, len_c, |c, region, pts| {
        if region.len() < s {
            return;
        }
        let (mut count, mut lo) = (0, region.start);
        let mut i = 0;
        for j in 0..pts.len() {
            while pts[j] - pts[i] >= s {
                i += 1;
            }
            if j + 1 - i > count {
                count = j + 1 - i;
                lo = pts[i];
            }
        }
        if best.is_none_or(|b| count > b.count) {
            best = Some(IntervalPair {
                first: c,
                second: place(region, lo, s),
                count,
            });
        }
    });
    Ok(best)
}

/// Pair maximizing `count - cap(|D|)` for property 2.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CapWitness {
    pub pair: IntervalPair,
    pub cap: f64,
    pub excess: f64,
}

/// Property 2 with its worst pair. `None` when no pair qualifies.
///
/// Windows whose partner count cannot beat the running worst excess are
/// skipped: `k - cap(s) <= m - cap(L)`.
pub fn worst_cap_excess(m: &OrderedMatching, th: &DensityThresholds) -> Option<CapWitness> {
    let l = th.interval_len.max(1);
    let p = partners(m);
    let mut best: Option<CapWitness> = None;
    for_each_side(&p, l, |c, region, pts| {
        if region.len() < l {
            return;
        }
        let bound = pts.len() as f64 - th.cap(l);
        if best.is_some_and(|b| bound <= b.excess) {
            return;
        }
        let local = window_excess(pts, l, th, region.start);
        if best.is_none_or(|b| local.3 > b.excess) {
            best = Some(CapWitness {
                pair: IntervalPair {
                    first: c,
                    second: place(region, local.1, local.2),
                    count: local.0,
                },
                cap: th.cap(local.2),
                excess: local.3,
            });
        }
    });
    best
}

/// Best `(k, lo, len, excess)` for one window: `k` sorted points inside a
/// `D` of length `len >= l` starting at or before `lo`.
///
/// A pair of points `i <= j` with span `g` gives `k = j - i + 1` and excess
/// `k - cap(max(l, g))`. Pairs with `g <= l` are scanned by two pointers;
/// for `g > l` the excess splits as `(j - c pts[j]) - (i - c pts[i]) + 1 - c`,
/// maximized with a running prefix minimum.
fn window_excess(pts: &[usize], l: usize, th: &DensityThresholds, region_start: usize) -> (usize, usize, usize, f64) {
    let c = th.cap_coeff;
    let mut best = (0usize, region_start, l, -th.cap(l));
    let mut i = 0;
    for j in 0..pts.len() {
        while pts[j] - pts[i] + 1 > l {
            i += 1;
        }
        let excess = (j + 1 - i) as f64 - th.cap(l);
        if excess > best.3 {
            best = (j + 1 - i, pts[i], l, excess);
        }
    }
    let key = |i: usize| i as f64 - c * pts[i] as f64;
    let mut p = 0;
    let mut prefix: Option<usize> = None;
    for j in 0..pts.len() {
        while p < j && pts[j] - pts[p] + 1 > l {
            if prefix.is_none_or(|q| key(p) < key(q)) {
                prefix = Some(p);
            }
            p += 1;
        }
        if let Some(i) = prefix {
            let span = pts[j] - pts[i] + 1;
            let excess = (j + 1 - i) as f64 - th.cap(span);
            if excess > best.3 {
                best = (j + 1 - i, pts[i], span, excess);
            }
        }
    }
    best
}

/// Outcome of both properties on one matching.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SampleOutcome {
    pub sample_id: u64,
    pub prop1_ok: bool,
    pub prop2_ok: bool,
    /// `None` when property 1 is vacuous.
    pub min_cross: Option<IntervalPair>,
    /// `None` when property 2 is vacuous.
    pub worst_cap: Option<CapWitness>,
}

pub fn evaluate_matching(pi: &Permutation, th: &DensityThresholds, sample_id: u64) -> SampleOutcome {
    let m = matching_from_permutation(pi);
    let min_cross = min_cross_edges_perm(pi, th.interval_len.max(1));
    let worst_cap = worst_cap_excess(&m, th);
    SampleOutcome {
        sample_id,
        prop1_ok: min_cross.is_none_or(|p| p.count > 0),
        prop2_ok: worst_cap.is_none_or(|w| w.excess <= 0.0),
        min_cross,
        worst_cap,
    }
}

/// Trial `index` of the run seeded with `seed`.
pub fn density_trial(n: usize, seed: u64, index: u64, th: &DensityThresholds) -> SampleOutcome {
    let pi = Permutation::random(n, &mut substream(seed, index));
    evaluate_matching(&pi, th, index)
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DensityReport {
    pub n: usize,
    pub samples: u64,
    /// `None` in enumeration mode.
    pub seed: Option<u64>,
    pub thresholds: DensityThresholds,
    pub prop1_failures: u64,
    pub prop2_failures: u64,
    pub prop1_fail_rate: f64,
    pub prop2_fail_rate: f64,
    /// Sample with the fewest cross edges.
    pub worst_prop1: Option<SampleOutcome>,
    /// Sample with the largest cap excess.
    pub worst_prop2: Option<SampleOutcome>,
}

impl DensityReport {
    pub fn from_outcomes<'a>(
        n: usize,
        seed: Option<u64>,
        thresholds: DensityThresholds,
        outcomes: impl IntoIterator<Item = &'a SampleOutcome>,
    ) -> Self {
        let mut r = DensityReport {
            n,
            samples: 0,
            seed,
            thresholds,
            prop1_failures: 0,
            prop2_failures: 0,
            prop1_fail_rate: 0.0,
            prop2_fail_rate: 0.0,
            worst_prop1: None,
            worst_prop2: None,
        };
        for o in outcomes {
            r.samples += 1;
            r.prop1_failures += u64::from(!o.prop1_ok);
            r.prop2_failures += u64::from(!o.prop2_ok);
            let count = |s: &SampleOutcome| s.min_cross.map(|p| p.count);
            if o.min_cross.is_some() && r.worst_prop1.as_ref().is_none_or(|w| count(o) < count(w)) {
                r.worst_prop1 = Some(o.clone());
            }
            let excess = |s: &SampleOutcome| s.worst_cap.map(|w| w.excess);
            if o.worst_cap.is_some()
                && r.worst_prop2.as_ref().is_none_or(|w| excess(o) > excess(w))
            {
                r.worst_prop2 = Some(o.clone());
            }
        }
        if r.samples > 0 {
            r.prop1_fail_rate = r.prop1_failures as f64 / r.samples as f64;
            r.prop2_fail_rate = r.prop2_failures as f64 / r.samples as f64;
        }
        r
    }
}

/// Seeded Monte Carlo run over `samples` uniform matchings.
pub fn run_density_experiment(n: usize, samples: u64, seed: u64, th: &DensityThresholds) -> DensityReport {
    let outcomes: Vec<SampleOutcome> = (0..samples).map(|i| density_trial(n, seed, i, th)).collect();
    DensityReport::from_outcomes(n, Some(seed), *th, &outcomes)
}

/// Every matching of `S_n`, in lexicographic order of permutations.
pub fn enumerate_density(n: usize, th: &DensityThresholds) -> (DensityReport, Vec<SampleOutcome>) {
    let outcomes: Vec<SampleOutcome> = Permutation::all(n)
        .enumerate()
        .map(|(i, pi)| evaluate_matching(&pi, th, i as u64))
        .collect();
    (DensityReport::from_outcomes(n, None, *th, &outcomes), outcomes)
}
