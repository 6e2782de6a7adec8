//! Explicit jumbled matchings and their interval-density properties.
//!
//! `grid_matching(t)` lives on `0..2t^2`. The left half is cut into blocks
//! `I_0..I_t` and the right half into `J_0..J_t`, all of length `t`. For
//! `a != b` the `b`-th vertex of `I_a` is matched to the `a`-th vertex of
//! `J_b`, so each pair `(I_a, J_b)`, `a != b`, carries exactly one edge and
//! the `2t` vertices at positions `a == b` stay isolated.
//!
//! `block_matching(k, t)` lives on `k(k-1)t^2` vertices split into `k`
//! classes of `(k-1)t^2`. Each class is cut into `(k-1)t` blocks of length
//! `t`; block `l` (counted from 1) of class `i` belongs to the superblock
//! facing the `(l mod (k-1))`-th smallest class other than `i`. The two
//! superblocks facing each other across classes `i < j` carry a copy of the
//! grid matching.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Interval, OrderedGraph};
use crate::matching::OrderedMatching;

/// Block layout of the grid matching.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GridLayout {
    pub t: usize,
    pub left_blocks: Vec<Interval>,
    pub right_blocks: Vec<Interval>,
}

/// The grid matching on `2t^2` vertices with its layout.
pub fn grid_matching(t: usize) -> Result<(OrderedMatching, GridLayout)> {
    if t == 0 {
        return Err(Error::InvalidParameters(format!("t must be positive, got {t}")));
    }
    let half = t * t;
    let mut edges = Vec::with_capacity(t * (t - 1));
    for a in 0..t {
        for b in 0..t {
            if a != b {
                edges.push((a * t + b, half + b * t + a));
            }
        }
    }
    edges.sort_unstable();
    let m = OrderedMatching::new(OrderedGraph::from_sorted_unchecked(2 * half, edges))?;
    let layout = GridLayout {
        t,
        left_blocks: (0..t).map(|a| Interval::new(a * t, (a + 1) * t)).collect(),
        right_blocks: (0..t)
            .map(|b| Interval::new(half + b * t, half + (b + 1) * t))
            .collect(),
    };
    Ok((m, layout))
}

/// Rectangle counts of matching edges between two disjoint vertex ranges.
///
/// Each edge with one end in `rows` and the other in `cols` is a point;
/// 2D prefix sums make every interval-pair count `O(1)`.
struct CrossCounter {
    rows: Interval,
    cols: Interval,
    prefix: Vec<u32>,
}

impl CrossCounter {
    fn new(m: &OrderedMatching, rows: Interval, cols: Interval) -> Self {
        let (h, w) = (rows.len(), cols.len());
        let mut prefix = vec![0u32; (h + 1) * (w + 1)];
        for r in 0..h {
            if let Some(p) = m.partner(rows.start + r).filter(|&p| cols.contains(p)) {
                prefix[(r + 1) * (w + 1) + (p - cols.start + 1)] = 1;
            }
        }
        for r in 1..=h {
            for c in 1..=w {
                let idx = r * (w + 1) + c;
                prefix[idx] += prefix[idx - 1] + prefix[idx - (w + 1)] - prefix[idx - (w + 1) - 1];
            }
        }
        CrossCounter { rows, cols, prefix }
    }

    /// Edges between `a ⊆ rows` and `b ⊆ cols` (absolute vertex ranges).
    fn count(&self, a: Interval, b: Interval) -> usize {
        let w = self.cols.len() + 1;
        let (r0, r1) = (a.start - self.rows.start, a.end - self.rows.start);
        let (c0, c1) = (b.start - self.cols.start, b.end - self.cols.start);
        (self.prefix[r1 * w + c1] + self.prefix[r0 * w + c0]
            - self.prefix[r0 * w + c1]
            - self.prefix[r1 * w + c0]) as usize
    }
}

/// All sub-intervals of `range` whose length lies in `min_len..=max_len`.
fn sub_intervals(range: Interval, min_len: usize, max_len: usize) -> impl Iterator<Item = Interval> {
    let max_len = max_len.min(range.len());
    (min_len.max(1)..=max_len).flat_map(move |len| {
        (range.start..=range.end - len).map(move |s| Interval::new(s, s + len))
    })
}

/// Outcome of an exhaustive interval-pair density check.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GridDensityCheck {
    pub t: usize,
    pub min_len: usize,
    pub holds: bool,
    /// First edgeless pair found, if any.
    pub offending: Option<(Interval, Interval)>,
    pub pairs_checked: u64,
}

/// Checks every pair of intervals `I` in the left half and `J` in the right
/// half of the grid matching, both of length at least `min_len`, for an
/// edge between them. With `min_len = 2t` this always holds; smaller
/// thresholds probe tightness.
pub fn verify_grid_density(t: usize, min_len: usize) -> Result<GridDensityCheck> {
    let (m, _) = grid_matching(t)?;
    let half = t * t;
    let left = Interval::new(0, half);
    let right = Interval::new(half, 2 * half);
    let counter = CrossCounter::new(&m, left, right);
    let mut pairs_checked = 0;
    for i in sub_intervals(left, min_len, half) {
        for j in sub_intervals(right, min_len, half) {
            pairs_checked += 1;
            if counter.count(i, j) == 0 {
                return Ok(GridDensityCheck {
                    t,
                    min_len,
                    holds: false,
                    offending: Some((i, j)),
                    pairs_checked,
                });
            }
        }
    }
    Ok(GridDensityCheck {
        t,
        min_len,
        holds: true,
        offending: None,
        pairs_checked,
    })
}

/// The superblock of class `class` facing class `partner`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Superblock {
    pub class: usize,
    pub partner: usize,
    /// Indices into the class's block list, increasing.
    pub blocks: Vec<usize>,
}

/// Classes, blocks and superblocks of the block matching.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BlockLayout {
    pub k: usize,
    pub t: usize,
    pub classes: Vec<Interval>,
    /// `blocks[i]` lists the blocks of class `i` left to right.
    pub blocks: Vec<Vec<Interval>>,
    /// `superblocks[i]` has one entry per other class, by increasing partner.
    pub superblocks: Vec<Vec<Superblock>>,
}

impl BlockLayout {
    pub fn n_vertices(&self) -> usize {
        self.k * (self.k - 1) * self.t * self.t
    }

    pub fn superblock(&self, class: usize, partner: usize) -> &Superblock {
        self.superblocks[class]
            .iter()
            .find(|s| s.partner == partner)
            .expect("no superblock faces a class from itself")
    }

    /// Vertices of a superblock in increasing order.
    pub fn superblock_vertices(&self, class: usize, partner: usize) -> Vec<usize> {
        self.superblock(class, partner)
            .blocks
            .iter()
            .flat_map(|&b| {
                let iv = self.blocks[class][b];
                iv.start..iv.end
            })
            .collect()
    }
}

/// The block matching for `k >= 3` classes and block size `t >= 1`.
pub fn block_matching(k: usize, t: usize) -> Result<(OrderedMatching, BlockLayout)> {
    if k < 3 || t == 0 {
        return Err(Error::InvalidParameters(format!(
            "block matching needs k >= 3 and t >= 1, got k = {k}, t = {t}"
        )));
    }
    let class_len = (k - 1) * t * t;
    let blocks_per_class = (k - 1) * t;
    let classes: Vec<Interval> = (0..k)
        .map(|i| Interval::new(i * class_len, (i + 1) * class_len))
        .collect();
    let blocks: Vec<Vec<Interval>> = classes
        .iter()
        .map(|c| {
            (0..blocks_per_class)
                .map(|b| Interval::new(c.start + b * t, c.start + (b + 1) * t))
                .collect()
        })
        .collect();
    let superblocks: Vec<Vec<Superblock>> = (0..k)
        .map(|i| {
            let others: Vec<usize> = (0..k).filter(|&o| o != i).collect();
            others
                .iter()
                .enumerate()
                .map(|(residue, &partner)| Superblock {
                    class: i,
                    partner,
                    // Block l = b + 1 is assigned by l mod (k - 1).
                    blocks: (0..blocks_per_class)
                        .filter(|b| (b + 1) % (k - 1) == residue)
                        .collect(),
                })
                .collect()
        })
        .collect();
    let layout = BlockLayout {
        k,
        t,
        classes,
        blocks,
        superblocks,
    };

    let mut edges = Vec::with_capacity(k * (k - 1) / 2 * t * (t - 1));
    for i in 0..k {
        for j in i + 1..k {
            let left = &layout.superblock(i, j).blocks;
            let right = &layout.superblock(j, i).blocks;
            for a in 0..t {
                for b in 0..t {
                    if a != b {
                        let u = layout.blocks[i][left[a]].start + b;
                        let v = layout.blocks[j][right[b]].start + a;
                        edges.push((u, v));
                    }
                }
            }
        }
    }
    edges.sort_unstable();
    let m = OrderedMatching::new(OrderedGraph::from_sorted_unchecked(
        layout.n_vertices(),
        edges,
    ))?;
    Ok((m, layout))
}

/// Outcome of the exhaustive cross-class density check on the block matching.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BlockDensityReport {
    pub k: usize,
    pub t: usize,
    /// The interval length `2kt` separating "large" from "small".
    pub threshold: usize,
    /// Every cross-class pair of intervals of length `>= 2kt` has an edge.
    pub part_a: bool,
    /// No cross-class interval of length `>= 2kt` exists, so part a is vacuous.
    pub part_a_vacuous: bool,
    pub part_a_offending: Option<(Interval, Interval)>,
    /// Every cross-class pair of intervals of length `<= 2kt` has at most
    /// `(2k+1)^2` edges.
    pub part_b: bool,
    pub part_b_bound: usize,
    pub max_small_pair_edges: usize,
    pub max_small_pair_witness: Option<(Interval, Interval)>,
}

/// Exhaustive check of both density properties of `block_matching(k, t)`
/// over all pairs of intervals lying in two different classes.
pub fn verify_block_density(k: usize, t: usize) -> Result<BlockDensityReport> {
    let (m, layout) = block_matching(k, t)?;
    let threshold = 2 * k * t;
    let class_len = layout.classes[0].len();
    let part_b_bound = (2 * k + 1) * (2 * k + 1);
    let mut report = BlockDensityReport {
        k,
        t,
        threshold,
        part_a: true,
        part_a_vacuous: threshold > class_len,
        part_a_offending: None,
        part_b: true,
        part_b_bound,
        max_small_pair_edges: 0,
        max_small_pair_witness: None,
    };
    for i in 0..k {
        for j in i + 1..k {
            let (pi, pj) = (layout.classes[i], layout.classes[j]);
            let counter = CrossCounter::new(&m, pi, pj);
            if report.part_a && !report.part_a_vacuous {
                'large: for a in sub_intervals(pi, threshold, class_len) {
                    for b in sub_intervals(pj, threshold, class_len) {
                        if counter.count(a, b) == 0 {
                            report.part_a = false;
                            report.part_a_offending = Some((a, b));
                            break 'large;
                        }
                    }
                }
            }
            for a in sub_intervals(pi, 1, threshold) {
                for b in sub_intervals(pj, 1, threshold) {
                    let c = counter.count(a, b);
                    if c > report.max_small_pair_edges {
                        report.max_small_pair_edges = c;
                        report.max_small_pair_witness = Some((a, b));
                    }
                }
            }
        }
    }
    report.part_b = report.max_small_pair_edges <= part_b_bound;
    Ok(report)
}

/// The subgraph induced on the two superblocks facing each other across
/// classes `i` and `j`, relabeled in order.
pub fn superblock_pair_subgraph(
    m: &OrderedMatching,
    layout: &BlockLayout,
    i: usize,
    j: usize,
) -> Result<OrderedGraph> {
    let (lo, hi) = (i.min(j), i.max(j));
    if lo == hi || hi >= layout.k {
        return Err(Error::InvalidParameters(format!(
            "no superblock pair for classes {i} and {j}"
        )));
    }
    let mut keep = layout.superblock_vertices(lo, hi);
    keep.extend(layout.superblock_vertices(hi, lo));
    m.graph().induced(&keep)
}
