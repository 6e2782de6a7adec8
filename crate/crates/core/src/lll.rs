//! Audit of the local-lemma conditions behind the random triangle-free
//! coloring, and the random coloring model itself.
//!
//! Parameters `(alpha, beta, gamma, delta)` govern a coloring of `K_{n^beta}`
//! whose edges are blue with probability `1 / (2 n^gamma)`. Three event
//! families compete: blue triangles (`P`), red copies of a forbidden family
//! (`Q`) and red ordered `K_{s,s}` (`R`). With weights
//! `x = 1/(4 n^{3 gamma})`, `y = e^{-2 n^beta lambda}` and
//! `z = e^{-21 n^{1-alpha} lambda^2}`, where `lambda = log n`, the audit
//! evaluates each local-lemma inequality in log-space and reports
//! `ln(weighted product) - ln(event probability bound)`, positive when the
//! condition holds.
//!
//! Every `exp` and `ln` below is natural. `lambda` carries the base of the
//! `log n` factors in the event sizes and edge counts, base 2 unless
//! [`LogBase::Natural`] is selected. The probabilities `(1-p)^m <= e^{-pm}`
//! and `x`, `|I_P| <= n^{3 beta}` are base-free. The `(1 - o(1))` factor is
//! kept as `exp(-y |I_Q| - z |I_R|)`.

use alloc::string::String;
use alloc::vec::Vec;

use num_rational::Ratio;
use rand::seq::index;
use rand::Rng;

use crate::coloring::{Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::rng::substream;

/// Exact parameter tuple for the inequality check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RationalParams {
    pub alpha: Ratio<i64>,
    pub beta: Ratio<i64>,
    pub gamma: Ratio<i64>,
    pub delta: Ratio<i64>,
}

impl RationalParams {
    pub fn new(alpha: (i64, i64), beta: (i64, i64), gamma: (i64, i64), delta: (i64, i64)) -> Self {
        let r = |(a, b): (i64, i64)| Ratio::new(a, b);
        RationalParams {
            alpha: r(alpha),
            beta: r(beta),
            gamma: r(gamma),
            delta: r(delta),
        }
    }

    /// The tuple used for the matching lower bound: `(3/4, 1/2, 1/4, 0)`.
    pub fn matching_tuple() -> Self {
        Self::new((3, 4), (1, 2), (1, 4), (0, 1))
    }

    /// The tuple used for the `k`-partite lower bound: `(2/3, 2/3, 1/3, 1/6)`.
    pub fn multipartite_tuple() -> Self {
        Self::new((2, 3), (2, 3), (1, 3), (1, 6))
    }

    pub fn to_f64(&self) -> [f64; 4] {
        let f = |r: Ratio<i64>| *r.numer() as f64 / *r.denom() as f64;
        [f(self.alpha), f(self.beta), f(self.gamma), f(self.delta)]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Inequality {
    /// `alpha, beta, gamma > 0` and `delta >= 0`.
    Positivity,
    /// `alpha + beta + gamma - delta <= 3/2`.
    SumAtMostThreeHalves,
    /// `beta <= 2 gamma`.
    BetaAtMostTwoGamma,
    /// `alpha + gamma <= 1`.
    AlphaPlusGammaAtMostOne,
}

impl Inequality {
    pub fn describe(self) -> &'static str {
        match self {
            Inequality::Positivity => "alpha, beta, gamma > 0 and delta >= 0",
            Inequality::SumAtMostThreeHalves => "alpha + beta + gamma - delta <= 3/2",
            Inequality::BetaAtMostTwoGamma => "beta <= 2 gamma",
            Inequality::AlphaPlusGammaAtMostOne => "alpha + gamma <= 1",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct InequalityCheck {
    pub ok: bool,
    pub violated: Vec<Inequality>,
}

/// Exact evaluation of the parameter constraints.
pub fn check_param_inequalities(p: &RationalParams) -> InequalityCheck {
    let zero = Ratio::from_integer(0);
    let mut violated = Vec::new();
    if p.alpha <= zero || p.beta <= zero || p.gamma <= zero || p.delta < zero {
        violated.push(Inequality::Positivity);
    }
    if p.alpha + p.beta + p.gamma - p.delta > Ratio::new(3, 2) {
        violated.push(Inequality::SumAtMostThreeHalves);
    }
    if p.beta > p.gamma * 2 {
        violated.push(Inequality::BetaAtMostTwoGamma);
    }
    if p.alpha + p.gamma > Ratio::from_integer(1) {
        violated.push(Inequality::AlphaPlusGammaAtMostOne);
    }
    InequalityCheck {
        ok: violated.is_empty(),
        violated,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum LogBase {
    #[default]
    Two,
    Natural,
}

impl LogBase {
    pub fn log(self, n: f64) -> f64 {
        match self {
            LogBase::Two => libm::log2(n),
            LogBase::Natural => libm::log(n),
        }
    }

    pub fn other(self) -> LogBase {
        match self {
            LogBase::Two => LogBase::Natural,
            LogBase::Natural => LogBase::Two,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct LllParams {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub delta: f64,
    pub n: u64,
}

impl LllParams {
    pub fn from_rational(p: &RationalParams, n: u64) -> Self {
        let [alpha, beta, gamma, delta] = p.to_f64();
        LllParams {
            alpha,
            beta,
            gamma,
            delta,
            n,
        }
    }

    fn validate(&self) -> Result<()> {
        let finite = [self.alpha, self.beta, self.gamma, self.delta]
            .iter()
            .all(|v| v.is_finite());
        if !finite || self.n < 2 {
            return Err(Error::InvalidParameters(
                "parameters must be finite and n at least 2".into(),
            ));
        }
        Ok(())
    }
}

/// Natural logs of the local-lemma weights.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct LllWeights {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// Natural logs of the event-family size bounds.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EventBudget {
    pub log_ip: f64,
    pub log_iq: f64,
    pub log_ir: f64,
}

fn lambda(p: &LllParams, base: LogBase) -> f64 {
    base.log(p.n as f64)
}

pub fn lll_weights(p: &LllParams, base: LogBase) -> LllWeights {
    let ln_n = libm::log(p.n as f64);
    let lam = lambda(p, base);
    let n = p.n as f64;
    LllWeights {
        x: -libm::log(4.0) - 3.0 * p.gamma * ln_n,
        y: -2.0 * libm::pow(n, p.beta) * lam,
        z: -21.0 * libm::pow(n, 1.0 - p.alpha) * lam * lam,
    }
}

pub fn event_budget(p: &LllParams, base: LogBase) -> EventBudget {
    let ln_n = libm::log(p.n as f64);
    let lam = lambda(p, base);
    let n = p.n as f64;
    EventBudget {
        log_ip: 3.0 * p.beta * ln_n,
        log_iq: libm::pow(n, p.beta) * lam,
        log_ir: 20.0 * libm::pow(n, 1.0 - p.alpha) * lam * lam,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Margins {
    pub p: f64,
    pub q: f64,
    pub r: f64,
}

impl Margins {
    pub fn all_positive(&self) -> bool {
        self.p > 0.0 && self.q > 0.0 && self.r > 0.0
    }

    fn get(&self, k: usize) -> f64 {
        [self.p, self.q, self.r][k]
    }
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct LllAudit {
    pub params: LllParams,
    pub base: LogBase,
    pub weights_log: LllWeights,
    pub budget_log: EventBudget,
    /// `y |I_Q| + z |I_R|`.
    pub o_term: f64,
    pub margins: Margins,
    /// Margins recomputed with the other logarithm base.
    pub margins_other_base: Margins,
    /// Conditions whose margin sign differs between the two bases.
    pub base_sensitive: Vec<String>,
}

fn finite(v: f64, term: &'static str) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::NumericInstability(term))
    }
}

fn margins(p: &LllParams, base: LogBase) -> Result<(Margins, f64)> {
    let n = p.n as f64;
    let lam = lambda(p, base);
    let w = lll_weights(p, base);
    let b = event_budget(p, base);
    let pw = |e: f64| libm::pow(n, e);
    let o = finite(libm::exp(w.y + b.log_iq), "y |I_Q|")?
        + finite(libm::exp(w.z + b.log_ir), "z |I_R|")?;
    // x e^{-3 x n^beta} against Pr[P] = 1/(8 n^{3 gamma}).
    let mp = libm::log(2.0) - 0.75 * pw(p.beta - 3.0 * p.gamma) - o;
    let (a, bt, g, d) = (p.alpha, p.beta, p.gamma, p.delta);
    let mq = lam
        * (20.0 * pw(1.5 - a - g + d) - 2.0 * pw(bt) - 10.0 * pw(1.5 - a + bt - 3.0 * g + d))
        - o;
    let mr = lam * lam * (50.0 * pw(2.0 - 2.0 * a - g) - 21.0 * pw(1.0 - a) - 25.0 * pw(2.0 - 2.0 * a + bt - 3.0 * g))
        - o;
    Ok((
        Margins {
            p: finite(mp, "condition P margin")?,
            q: finite(mq, "condition Q margin")?,
            r: finite(mr, "condition R margin")?,
        },
        o,
    ))
}

pub fn audit_lll_conditions(p: &LllParams, base: LogBase) -> Result<LllAudit> {
    p.validate()?;
    let weights_log = lll_weights(p, base);
    let budget_log = event_budget(p, base);
    for (v, term) in [
        (weights_log.x, "log x"),
        (weights_log.y, "log y"),
        (weights_log.z, "log z"),
        (budget_log.log_ip, "log |I_P|"),
        (budget_log.log_iq, "log |I_Q|"),
        (budget_log.log_ir, "log |I_R|"),
    ] {
        finite(v, term)?;
    }
    let (m, o_term) = margins(p, base)?;
    let (m2, _) = margins(p, base.other())?;
    let base_sensitive = ["P", "Q", "R"]
        .iter()
        .enumerate()
        .filter(|&(k, _)| (m.get(k) > 0.0) != (m2.get(k) > 0.0))
        .map(|(_, name)| String::from(*name))
        .collect();
    Ok(LllAudit {
        params: *p,
        base,
        weights_log,
        budget_log,
        o_term,
        margins: m,
        margins_other_base: m2,
        base_sensitive,
    })
}

/// Crossover of one condition over a grid of `n`.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ConditionCrossover {
    pub condition: String,
    /// First grid point from which the margin stays positive to the end.
    pub crossover_n: Option<u64>,
    /// Sign changes after the first positive grid point.
    pub sign_changes_after_first_positive: usize,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CrossoverScan {
    pub grid: Vec<u64>,
    pub conditions: Vec<ConditionCrossover>,
    /// Largest per-condition crossover; `None` if some condition never settles.
    pub crossover_n: Option<u64>,
}

/// `points` log-spaced integers from `lo` to `hi`, deduplicated.
pub fn log_grid(lo: u64, hi: u64, points: usize) -> Vec<u64> {
    let (a, b) = (libm::log(lo as f64), libm::log(hi as f64));
    let mut g: Vec<u64> = (0..points)
        .map(|i| {
            let t = if points <= 1 { 0.0 } else { i as f64 / (points - 1) as f64 };
            libm::round(libm::exp(a + t * (b - a))) as u64
        })
        .map(|v| v.clamp(lo, hi))
        .collect();
    g.dedup();
    g
}

/// Scans `n` over `[2, n_max]` on a log grid.
pub fn lll_crossover_scan(p: &RationalParams, base: LogBase, n_max: u64, points: usize) -> Result<CrossoverScan> {
    let grid = log_grid(2, n_max.max(2), points);
    let mut rows = Vec::with_capacity(grid.len());
    for &n in &grid {
        rows.push(margins(&LllParams::from_rational(p, n), base)?.0);
    }
    let conditions: Vec<ConditionCrossover> = ["P", "Q", "R"]
        .iter()
        .enumerate()
        .map(|(k, name)| {
            let signs: Vec<bool> = rows.iter().map(|m| m.get(k) > 0.0).collect();
            let settled_from = signs.iter().rposition(|&s| !s).map_or(0, |i| i + 1);
            let first_pos = signs.iter().position(|&s| s);
            let changes = first_pos.map_or(0, |f| signs[f..].windows(2).filter(|w| w[0] != w[1]).count());
            ConditionCrossover {
                condition: String::from(*name),
                crossover_n: grid.get(settled_from).copied(),
                sign_changes_after_first_positive: changes,
            }
        })
        .collect();
    let crossover_n = conditions
        .iter()
        .map(|c| c.crossover_n)
        .collect::<Option<Vec<_>>>()
        .and_then(|v| v.into_iter().max());
    Ok(CrossoverScan {
        grid,
        conditions,
        crossover_n,
    })
}

/// Counts of red ordered `K_{s,s}`: vertex sets `a_1 < ... < a_s < b_1 < ... < b_s`
/// with every `a_i b_j` red.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BipartiteCensus {
    pub s: usize,
    pub exact: bool,
    pub count: f64,
    /// Standard error of the estimate; zero when exact.
    pub std_error: f64,
    pub samples: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LllSample {
    pub coloring: EdgeColoring,
    pub blue_probability: f64,
    pub blue_edges: usize,
    pub blue_triangles: u64,
    pub red_bipartite: BipartiteCensus,
}

/// Largest `s` counted exactly by [`sample_lll_coloring`].
pub const EXACT_BIPARTITE_MAX_S: usize = 3;

/// Seeded random coloring of `K_v` with blue probability `1/(2 gamma_scale)`.
///
/// The coloring uses stream 0 of `seed`; the `K_{s,s}` estimator for
/// `s > 3` draws `estimator_samples` left sides from stream 1.
pub fn sample_lll_coloring(v: usize, gamma_scale: f64, seed: u64, s: usize, estimator_samples: u64) -> Result<LllSample> {
    if v < 2 || !(gamma_scale >= 1.0) || s == 0 {
        return Err(Error::InvalidParameters(
            "need v >= 2, gamma_scale >= 1 and s >= 1".into(),
        ));
    }
    let p = 1.0 / (2.0 * gamma_scale);
    let mut rng = substream(seed, 0);
    let mut chi = EdgeColoring::all(v, Color::Red);
    for a in 0..v {
        for b in a + 1..v {
            if rng.gen_bool(p) {
                chi.set(a, b, Color::Blue);
            }
        }
    }
    let adj = Adjacency::new(&chi);
    let blue_triangles = adj.blue_triangles();
    let red_bipartite = if s <= EXACT_BIPARTITE_MAX_S {
        BipartiteCensus {
            s,
            exact: true,
            count: adj.red_bipartite_exact(s) as f64,
            std_error: 0.0,
            samples: 0,
        }
    } else {
        adj.red_bipartite_estimate(s, estimator_samples, &mut substream(seed, 1))
    };
    Ok(LllSample {
        blue_edges: chi.blue_count(),
        coloring: chi,
        blue_probability: p,
        blue_triangles,
        red_bipartite,
    })
}

/// Number of blue triangles, by brute force over vertex triples.
pub fn count_blue_triangles(chi: &EdgeColoring) -> u64 {
    Adjacency::new(chi).blue_triangles()
}

/// Number of red ordered `K_{s,s}`, by exact enumeration of left sides.
pub fn count_red_bipartite(chi: &EdgeColoring, s: usize) -> u64 {
    Adjacency::new(chi).red_bipartite_exact(s)
}

/// Word-bitset adjacency of both color classes.
struct Adjacency {
    v: usize,
    words: usize,
    red: Vec<u64>,
    blue: Vec<u64>,
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

impl Adjacency {
    fn new(chi: &EdgeColoring) -> Self {
        let v = chi.n_vertices();
        let words = v.div_ceil(64).max(1);
        let mut red = alloc::vec![0u64; v * words];
        let mut blue = alloc::vec![0u64; v * words];
        for a in 0..v {
            for b in a + 1..v {
                let m = if chi.get(a, b) == Color::Blue { &mut blue } else { &mut red };
                m[a * words + b / 64] |= 1 << (b % 64);
                m[b * words + a / 64] |= 1 << (a % 64);
            }
        }
        Adjacency { v, words, red, blue }
    }

    fn row<'a>(&self, m: &'a [u64], a: usize) -> &'a [u64] {
        &m[a * self.words..(a + 1) * self.words]
    }

    fn blue_triangles(&self) -> u64 {
        let mut count = 0u64;
        for a in 0..self.v {
            for b in a + 1..self.v {
                if self.row(&self.blue, a)[b / 64] >> (b % 64) & 1 == 0 {
                    continue;
                }
                // Third vertex above b.
                for (w, (&x, &y)) in self.row(&self.blue, a).iter().zip(self.row(&self.blue, b)).enumerate() {
                    count += (x & y & above_mask(w, b)).count_ones() as u64;
                }
            }
        }
        count
    }

    /// Red common neighbors of `left` above its largest element.
    fn right_choices(&self, left: &[usize]) -> usize {
        let top = *left.last().unwrap();
        (0..self.words)
            .map(|w| {
                let common = left.iter().fold(above_mask(w, top), |acc, &a| acc & self.row(&self.red, a)[w]);
                common.count_ones() as usize
            })
            .sum()
    }

    fn red_bipartite_exact(&self, s: usize) -> u64 {
        let mut left = Vec::with_capacity(s);
        let mut total = 0u64;
        self.left_sides(0, s, &mut left, &mut total);
        total
    }

    fn left_sides(&self, from: usize, s: usize, left: &mut Vec<usize>, total: &mut u64) {
        if left.len() == s {
            *total += binomial(self.right_choices(left), s);
            return;
        }
        for a in from..self.v {
            // Room for the rest of the left side and all of the right side.
            if self.v - a < 2 * s - left.len() {
                break;
            }
            left.push(a);
            self.left_sides(a + 1, s, left, total);
            left.pop();
        }
    }

    fn red_bipartite_estimate(&self, s: usize, samples: u64, rng: &mut impl Rng) -> BipartiteCensus {
        let lefts = libm::exp(ln_binomial(self.v, s));
        let (mut sum, mut sum_sq) = (0.0f64, 0.0f64);
        for _ in 0..samples {
            let mut left = index::sample(rng, self.v, s).into_vec();
            left.sort_unstable();
            let c = libm::exp(ln_binomial(self.right_choices(&left), s));
            sum += c;
            sum_sq += c * c;
        }
        let k = samples.max(1) as f64;
        let mean = sum / k;
        let var = if samples > 1 { (sum_sq - k * mean * mean).max(0.0) / (k - 1.0) } else { 0.0 };
        BipartiteCensus {
            s,
            exact: false,
            count: lefts * mean,
            std_error: lefts * libm::sqrt(var / k),
            samples,
        }
    }
}

fn ln_binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return f64::NEG_INFINITY;
    }
    libm::lgamma(n as f64 + 1.0) - libm::lgamma(k as f64 + 1.0) - libm::lgamma((n - k) as f64 + 1.0)
}

/// Bits of word `w` whose global positions exceed `b`.
fn above_mask(w: usize, b: usize) -> u64 {
    let lo = w * 64;
    if b < lo {
        u64::MAX
    } else if b + 1 >= lo + 64 {
        0
    } else {
        u64::MAX << (b + 1 - lo)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paper_tuples_pass_and_unit_tuple_fails() {
        assert!(check_param_inequalities(&RationalParams::matching_tuple()).ok);
        assert!(check_param_inequalities(&RationalParams::multipartite_tuple()).ok);
        let c = check_param_inequalities(&RationalParams::new((1, 1), (1, 1), (1, 1), (0, 1)));
        assert_eq!(
            c.violated,
            [Inequality::SumAtMostThreeHalves, Inequality::AlphaPlusGammaAtMostOne]
        );
    }

    #[test]
    fn boundary_is_inclusive() {
        // alpha + beta + gamma - delta = 3/2 exactly and beta = 2 gamma.
        let p = RationalParams::new((1, 2), (2, 3), (1, 3), (0, 1));
        assert!(check_param_inequalities(&p).ok);
        let p = RationalParams::new((0, 1), (1, 2), (1, 4), (0, 1));
        assert_eq!(check_param_inequalities(&p).violated, [Inequality::Positivity]);
    }

    #[test]
    fn margins_positive_at_a_million() {
        for t in [RationalParams::matching_tuple(), RationalParams::multipartite_tuple()] {
            let a = audit_lll_conditions(&LllParams::from_rational(&t, 1_000_000), LogBase::Two).unwrap();
            assert!(a.margins.all_positive(), "{a:?}");
        }
    }

    #[test]
    fn small_n_is_reported_not_rejected() {
        let a = audit_lll_conditions(&LllParams::from_rational(&RationalParams::matching_tuple(), 2), LogBase::Two)
            .unwrap();
        assert!(a.margins.p < 0.0);
    }

    #[test]
    fn weights_match_closed_forms() {
        let p = LllParams::from_rational(&RationalParams::matching_tuple(), 65536);
        let w = lll_weights(&p, LogBase::Two);
        // n = 2^16: n^{3/4} = 2^12, n^{1/2} = 2^8, n^{1/4} = 2^4, log n = 16.
        assert!((w.x - libm::log(1.0 / (4.0 * 4096.0))).abs() < 1e-12);
        assert!((w.y + 2.0 * 256.0 * 16.0).abs() < 1e-9);
        assert!((w.z + 21.0 * 16.0 * 256.0).abs() < 1e-9);
    }

    #[test]
    fn grid_is_increasing() {
        let g = log_grid(2, 100_000_000, 200);
        assert_eq!(g[0], 2);
        assert_eq!(*g.last().unwrap(), 100_000_000);
        assert!(g.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn zero_blue_probability_limit() {
        let s = sample_lll_coloring(20, f64::INFINITY, 3, 2, 0).unwrap();
        assert_eq!(s.blue_edges, 0);
        assert_eq!(s.blue_triangles, 0);
        // All red: choose 4 vertices, split 2 + 2.
        assert_eq!(s.red_bipartite.count, binomial(20, 4) as f64);
    }

    #[test]
    fn estimator_on_all_red() {
        let s = sample_lll_coloring(12, f64::INFINITY, 3, 4, 500).unwrap();
        assert!(!s.red_bipartite.exact);
        let truth = binomial(12, 8) as f64;
        assert!((s.red_bipartite.count - truth).abs() <= 5.0 * s.red_bipartite.std_error + 1e-6 * truth);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(sample_lll_coloring(1, 2.0, 0, 1, 0).is_err());
        assert!(sample_lll_coloring(5, 0.5, 0, 1, 0).is_err());
        assert!(audit_lll_conditions(
            &LllParams {
                alpha: f64::NAN,
                beta: 0.5,
                gamma: 0.25,
                delta: 0.0,
                n: 10
            },
            LogBase::Two
        )
        .is_err());
    }

    #[test]
    fn above_masks() {
        assert_eq!(above_mask(0, 0), u64::MAX << 1);
        assert_eq!(above_mask(1, 10), u64::MAX);
        assert_eq!(above_mask(0, 63), 0);
        assert_eq!(above_mask(1, 64), u64::MAX << 1);
    }
}
