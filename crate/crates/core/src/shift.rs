//! The shift statistic `L(pi)`.
//!
//! For index sets `C = {c_1 < ... < c_k}` and `D = {d_1 < ... < d_k}`, `C` is
//! a shift of `D` when `pi(c_i) = pi(d_i) + delta` for all `i` and one fixed
//! `delta > 0`. `L(pi)` is the largest such `k`. The sets may overlap.
//!
//! For a fixed `delta` the admissible pairs are exactly
//! `(pi^-1(v + delta), pi^-1(v))`, so `L` restricted to that `delta` is a
//! longest chain increasing in both coordinates: walk the `d` coordinate in
//! increasing order and take a longest increasing subsequence of the `c`
//! coordinates. Total cost `O(n^2 log n)`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::matching::Permutation;
use crate::rng::substream;

/// Index sets realizing a shift.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ShiftWitness {
    pub delta: usize,
    pub c_indices: Vec<usize>,
    pub d_indices: Vec<usize>,
}

impl ShiftWitness {
    /// Checks the defining conditions against `pi`.
    pub fn is_valid_for(&self, pi: &Permutation) -> bool {
        let n = pi.len();
        self.delta > 0
            && self.c_indices.len() == self.d_indices.len()
            && self.c_indices.windows(2).all(|w| w[0] < w[1])
            && self.d_indices.windows(2).all(|w| w[0] < w[1])
            && self
                .c_indices
                .iter()
                .zip(&self.d_indices)
                .all(|(&c, &d)| c < n && d < n && pi.get(c) == pi.get(d) + self.delta)
    }

    pub fn len(&self) -> usize {
        self.c_indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c_indices.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ShiftStatistic {
    pub length: usize,
    /// `None` only when `length == 0`.
    pub witness: Option<ShiftWitness>,
}

/// `L(pi)` with a witness.
pub fn shift_statistic(pi: &Permutation) -> ShiftStatistic {
    let n = pi.len();
    let inv = pi.inverse();
    let mut best = ShiftStatistic {
        length: 0,
        witness: None,
    };
    let mut cs = Vec::with_capacity(n);
    let mut ds = Vec::with_capacity(n);
    for delta in 1..n {
        // At most n - delta pairs exist for this delta.
        if n - delta <= best.length {
            break;
        }
        cs.clear();
        ds.clear();
        for d in 0..n {
            let v = pi.get(d) + delta;
            if v < n {
                ds.push(d);
                cs.push(inv.get(v));
            }
        }
        let chain = longest_increasing(&cs);
        if chain.len() > best.length {
            best = ShiftStatistic {
                length: chain.len(),
                witness: Some(ShiftWitness {
                    delta,
                    c_indices: chain.iter().map(|&k| cs[k]).collect(),
                    d_indices: chain.iter().map(|&k| ds[k]).collect(),
                }),
            };
        }
    }
    best
}

/// Positions of a longest strictly increasing subsequence (patience sorting).
fn longest_increasing(seq: &[usize]) -> Vec<usize> {
    // tails[k]: position of the smallest last element of an increasing run of length k+1.
    let mut tails: Vec<usize> = Vec::new();
    let mut prev = vec![usize::MAX; seq.len()];
    for (i, &x) in seq.iter().enumerate() {
        let k = tails.partition_point(|&t| seq[t] < x);
        if k > 0 {
            prev[i] = tails[k - 1];
        }
        if k == tails.len() {
            tails.push(i);
        } else {
            tails[k] = i;
        }
    }
    let mut out = Vec::with_capacity(tails.len());
    let mut cur = tails.last().copied();
    while let Some(i) = cur {
        out.push(i);
        cur = (prev[i] != usize::MAX).then_some(prev[i]);
    }
    out.reverse();
    out
}

/// Largest permutation size accepted by [`shift_statistic_bruteforce`].
pub const BRUTEFORCE_MAX_N: usize = 10;

/// `L(pi)` by exhausting every `delta` and every index set `D`.
///
/// `D` determines `C` through `c_i = pi^-1(pi(d_i) + delta)`; the set pair
/// qualifies when those `c_i` come out strictly increasing.
pub fn shift_statistic_bruteforce(pi: &Permutation) -> Result<usize> {
    let n = pi.len();
    if n > BRUTEFORCE_MAX_N {
        return Err(Error::TooLarge {
            n,
            max: BRUTEFORCE_MAX_N,
        });
    }
    let inv = pi.inverse();
    let mut best = 0;
    for delta in 1..n {
        'subsets: for mask in 1u32..(1 << n) {
            let size = mask.count_ones() as usize;
            if size <= best {
                continue;
            }
            let mut last_c: Option<usize> = None;
            for d in (0..n).filter(|&d| mask >> d & 1 == 1) {
                let v = pi.get(d) + delta;
                if v >= n {
                    continue 'subsets;
                }
                let c = inv.get(v);
                if last_c.is_some_and(|l| l >= c) {
                    continue 'subsets;
                }
                last_c = Some(c);
            }
            best = size;
        }
    }
    Ok(best)
}

/// Empirical or exact distribution of `L` over permutations of `0..n`.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct LDistribution {
    pub n: usize,
    pub samples: u64,
    /// `None` for exhaustive enumeration.
    pub seed: Option<u64>,
    /// `histogram[k]` counts permutations with `L = k`.
    pub histogram: Vec<u64>,
    /// The concentration threshold `3 sqrt(n)`.
    pub threshold: f64,
    /// Number of permutations with `L > threshold`.
    pub exceed_count: u64,
    pub max: usize,
    pub mean: f64,
}

impl LDistribution {
    pub fn from_values(n: usize, seed: Option<u64>, values: impl IntoIterator<Item = usize>) -> Self {
        let threshold = concentration_threshold(n);
        let mut histogram = vec![0u64; n.max(1)];
        let mut samples = 0u64;
        let mut sum = 0u64;
        let mut exceed_count = 0u64;
        for l in values {
            if l >= histogram.len() {
                histogram.resize(l + 1, 0);
            }
            histogram[l] += 1;
            samples += 1;
            sum += l as u64;
            if l as f64 > threshold {
                exceed_count += 1;
            }
        }
        let max = histogram.iter().rposition(|&c| c > 0).unwrap_or(0);
        histogram.truncate(max + 1);
        LDistribution {
            n,
            samples,
            seed,
            histogram,
            threshold,
            exceed_count,
            max,
            mean: if samples == 0 {
                0.0
            } else {
                sum as f64 / samples as f64
            },
        }
    }

    pub fn exceedance_rate(&self) -> f64 {
        if self.samples == 0 {
            0.0
        } else {
            self.exceed_count as f64 / self.samples as f64
        }
    }
}

/// `3 sqrt(n)`.
pub fn concentration_threshold(n: usize) -> f64 {
    3.0 * libm::sqrt(n as f64)
}

/// `L` of the uniform permutation drawn for trial `index` under `seed`.
pub fn sample_trial(n: usize, seed: u64, index: u64) -> usize {
    let mut rng = substream(seed, index);
    shift_statistic(&Permutation::random(n, &mut rng)).length
}

/// Distribution of `L` over `samples` seeded uniform permutations.
pub fn sample_l_distribution(n: usize, samples: u64, seed: u64) -> LDistribution {
    LDistribution::from_values(n, Some(seed), (0..samples).map(|i| sample_trial(n, seed, i)))
}

/// Exact distribution of `L` over all of `S_n`.
pub fn exact_l_distribution(n: usize) -> LDistribution {
    LDistribution::from_values(n, None, Permutation::all(n).map(|p| shift_statistic(&p).length))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(one_based: &[usize]) -> Permutation {
        Permutation::from_one_based(one_based).unwrap()
    }

    #[test]
    fn identity_shift() {
        let s = shift_statistic(&Permutation::identity(5));
        assert_eq!(s.length, 4);
        let w = s.witness.unwrap();
        assert_eq!(w.delta, 1);
        assert_eq!(w.c_indices, [1, 2, 3, 4]);
        assert_eq!(w.d_indices, [0, 1, 2, 3]);
    }

    #[test]
    fn small_examples() {
        assert_eq!(shift_statistic(&perm(&[2, 1])).length, 1);
        let one = shift_statistic(&perm(&[1]));
        assert_eq!(one.length, 0);
        assert!(one.witness.is_none());
        assert_eq!(shift_statistic(&Permutation::identity(0)).length, 0);
    }

    #[test]
    fn bruteforce_examples() {
        assert_eq!(shift_statistic_bruteforce(&perm(&[3, 2, 1])), Ok(2));
        assert_eq!(shift_statistic_bruteforce(&perm(&[1, 2, 3])), Ok(2));
        assert_eq!(shift_statistic_bruteforce(&perm(&[1])), Ok(0));
        assert_eq!(
            shift_statistic_bruteforce(&Permutation::identity(11)),
            Err(Error::TooLarge { n: 11, max: 10 })
        );
    }

    #[test]
    fn lis_reconstruction() {
        assert_eq!(longest_increasing(&[3, 1, 4, 1, 5, 9, 2, 6]).len(), 4);
        let seq = [5, 2, 8, 6, 3, 6, 9, 7];
        let idx = longest_increasing(&seq);
        assert_eq!(idx.len(), 4);
        assert!(idx.windows(2).all(|w| w[0] < w[1] && seq[w[0]] < seq[w[1]]));
        assert!(longest_increasing(&[]).is_empty());
    }

    #[test]
    fn trivial_distribution() {
        let d = sample_l_distribution(1, 5, 99);
        assert_eq!(d.samples, 5);
        assert_eq!(d.histogram, [5]);
        assert_eq!(d.exceed_count, 0);
        assert_eq!(d.max, 0);
    }

    #[test]
    fn sampling_is_deterministic() {
        assert_eq!(sample_l_distribution(30, 20, 5), sample_l_distribution(30, 20, 5));
    }
}
