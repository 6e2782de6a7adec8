//! Ordered graphs, interval partitions and order-preserving containment.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Half-open range `[start, end)` of consecutive vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Interval {
    pub start: usize,
    pub end: usize,
}

impl Interval {
    pub const fn new(start: usize, end: usize) -> Self {
        Interval { start, end }
    }

    pub const fn len(&self) -> usize {
        self.end - self.start
    }

    pub const fn is_empty(&self) -> bool {
        self.end <= self.start
    }

    pub const fn contains(&self, v: usize) -> bool {
        self.start <= v && v < self.end
    }

    pub const fn intersects(&self, other: &Interval) -> bool {
        self.start < other.end && other.start < self.end
    }
}

/// A graph on `0..n` whose vertex order is the natural one.
///
/// Edges are stored canonically as `(u, v)` with `u < v`, sorted
/// lexicographically. An adjacency bit matrix backs the containment
/// search and `has_edge`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    words: usize,
    adj: Vec<u64>,
}

impl OrderedGraph {
    /// Builds a graph, canonicalizing each edge to `u < v`.
    ///
    /// Self-loops, out-of-range endpoints and duplicate edges are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut canon: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            if a == b || a >= n || b >= n {
                return Err(Error::InvalidEdge {
                    u: a,
                    v: b,
                    n_vertices: n,
                });
            }
            canon.push((a.min(b), a.max(b)));
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge {
                u: w[0].0,
                v: w[0].1,
            });
        }
        Ok(Self::from_sorted_unchecked(n, canon))
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self::from_sorted_unchecked(n, Vec::new())
    }

    /// Complete ordered graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Self::from_sorted_unchecked(n, edges)
    }

    /// Ordered path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        Self::from_sorted_unchecked(n, (1..n).map(|v| (v - 1, v)).collect())
    }

    pub(crate) fn from_sorted_unchecked(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let words = n.div_ceil(64);
        let mut adj = vec![0u64; n * words];
        for &(u, v) in &edges {
            adj[u * words + v / 64] |= 1 << (v % 64);
            adj[v * words + u / 64] |= 1 << (u % 64);
        }
        OrderedGraph {
            n,
            edges,
            words,
            adj,
        }
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter::new(self.row(v))
    }

    /// Subgraph induced on the vertices of `keep` (taken in increasing
    /// order), relabeled to `0..keep.len()`.
    pub fn induced(&self, keep: &[usize]) -> Result<OrderedGraph> {
        if keep.windows(2).any(|w| w[0] >= w[1]) || keep.last().is_some_and(|&v| v >= self.n) {
            return Err(Error::InvalidEmbedding);
        }
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]))
            .collect();
        Ok(OrderedGraph::from_sorted_unchecked(keep.len(), edges))
    }
}

struct BitIter<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl<'a> BitIter<'a> {
    fn new(words: &'a [u64]) -> Self {
        BitIter {
            words,
            idx: 0,
            cur: words.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let b = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * 64 + b);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

/// A partition of `0..n` into nonempty consecutive intervals.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct IntervalPartition {
    n: usize,
    starts: Vec<usize>,
}

impl IntervalPartition {
    /// Partition from the start positions of its intervals. The first start
    /// must be 0 and the sequence strictly increasing below `n`.
    pub fn from_starts(n: usize, starts: Vec<usize>) -> Result<Self> {
        let ok = if n == 0 {
            starts.is_empty()
        } else {
            starts.first() == Some(&0)
                && starts.windows(2).all(|w| w[0] < w[1])
                && starts.last().is_some_and(|&s| s < n)
        };
        if ok {
            Ok(IntervalPartition { n, starts })
        } else {
            Err(Error::InvalidPartition)
        }
    }

    /// Partition from interval lengths, all positive.
    pub fn from_lengths(lengths: &[usize]) -> Result<Self> {
        if lengths.contains(&0) {
            return Err(Error::InvalidPartition);
        }
        let mut starts = Vec::with_capacity(lengths.len());
        let mut n = 0;
        for &len in lengths {
            starts.push(n);
            n += len;
        }
        Self::from_starts(n, starts)
    }

    /// Consecutive intervals of length `len` (the last one possibly shorter).
    pub fn uniform(n: usize, len: usize) -> Result<Self> {
        if len == 0 {
            return Err(Error::InvalidPartition);
        }
        Self::from_starts(n, (0..n).step_by(len).collect())
    }

    pub fn singletons(n: usize) -> Self {
        IntervalPartition {
            n,
            starts: (0..n).collect(),
        }
    }

    /// Number of vertices covered.
    pub fn n_vertices(&self) -> usize {
        self.n
    }

    /// Number of intervals.
    pub fn len(&self) -> usize {
        self.starts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.starts.is_empty()
    }

    pub fn interval(&self, k: usize) -> Interval {
        let end = self.starts.get(k + 1).copied().unwrap_or(self.n);
        Interval::new(self.starts[k], end)
    }

    pub fn intervals(&self) -> impl Iterator<Item = Interval> + '_ {
        (0..self.len()).map(|k| self.interval(k))
    }

    /// Index of the interval containing `v`.
    pub fn interval_of(&self, v: usize) -> Option<usize> {
        if v >= self.n {
            return None;
        }
        Some(self.starts.partition_point(|&s| s <= v) - 1)
    }
}

/// Minimum number of consecutive intervals with no edge inside any of them,
/// with a witness partition.
///
/// Greedy left-to-right sweep: the current interval grows until the next
/// vertex has a neighbor inside it, then a new interval starts. The empty
/// graph on zero vertices has value 0, any other edgeless graph value 1.
pub fn interval_chromatic_number(g: &OrderedGraph) -> (usize, IntervalPartition) {
    let n = g.n_vertices();
    // Largest left neighbor of each vertex.
    let mut max_left: Vec<Option<usize>> = vec![None; n];
    for &(u, v) in g.edges() {
        max_left[v] = Some(max_left[v].map_or(u, |m: usize| m.max(u)));
    }
    let mut starts = Vec::new();
    let mut current = 0;
    for v in 0..n {
        if v == 0 || max_left[v].is_some_and(|u| u >= current) {
            current = v;
            starts.push(v);
        }
    }
    let k = starts.len();
    (k, IntervalPartition { n, starts })
}

/// Order-preserving embedding of `pattern` into `host`, if one exists.
///
/// Returns `phi` with `phi[0] < phi[1] < ...` such that every pattern edge
/// `{a, b}` maps to a host edge `{phi[a], phi[b]}`. Depth-first backtracking
/// over pattern vertices in ascending order; candidate positions are
/// filtered by the host neighborhoods of already placed left neighbors and
/// by left/right degree bounds.
pub fn find_ordered_copy(host: &OrderedGraph, pattern: &OrderedGraph) -> Option<Vec<usize>> {
    let p = pattern.n_vertices();
    let h = host.n_vertices();
    if p == 0 {
        return Some(Vec::new());
    }
    if p > h || pattern.n_edges() > host.n_edges() {
        return None;
    }
    let mut left_nbrs: Vec<Vec<usize>> = vec![Vec::new(); p];
    let mut pat_left = vec![0usize; p];
    let mut pat_right = vec![0usize; p];
    for &(a, b) in pattern.edges() {
        left_nbrs[b].push(a);
        pat_right[a] += 1;
        pat_left[b] += 1;
    }
    let mut host_left = vec![0usize; h];
    let mut host_right = vec![0usize; h];
    for &(u, v) in host.edges() {
        host_right[u] += 1;
        host_left[v] += 1;
    }
    let search = ContainmentSearch {
        host,
        left_nbrs: &left_nbrs,
        pat_left: &pat_left,
        pat_right: &pat_right,
        host_left: &host_left,
        host_right: &host_right,
    };
    let mut phi = Vec::with_capacity(p);
    let mut scratch = vec![0u64; host.words];
    if search.extend(&mut phi, &mut scratch) {
        Some(phi)
    } else {
        None
    }
}

/// Whether `pattern` is an ordered subgraph of `host`.
pub fn contains_ordered_subgraph(host: &OrderedGraph, pattern: &OrderedGraph) -> bool {
    find_ordered_copy(host, pattern).is_some()
}

struct ContainmentSearch<'a> {
    host: &'a OrderedGraph,
    left_nbrs: &'a [Vec<usize>],
    pat_left: &'a [usize],
    pat_right: &'a [usize],
    host_left: &'a [usize],
    host_right: &'a [usize],
}

impl ContainmentSearch<'_> {
    fn extend(&self, phi: &mut Vec<usize>, scratch: &mut Vec<u64>) -> bool {
        let i = phi.len();
        let p = self.left_nbrs.len();
        if i == p {
            return true;
        }
        let lo = phi.last().map_or(0, |&x| x + 1);
        let hi = self.host.n_vertices() - (p - i - 1);
        if lo >= hi {
            return false;
        }
        let candidates: Vec<usize> = if self.left_nbrs[i].is_empty() {
            (lo..hi).collect()
        } else {
            scratch.fill(u64::MAX);
            for &a in &self.left_nbrs[i] {
                for (s, w) in scratch.iter_mut().zip(self.host.row(phi[a])) {
                    *s &= w;
                }
            }
            BitIter::new(scratch)
                .skip_while(|&x| x < lo)
                .take_while(|&x| x < hi)
                .collect()
        };
        for x in candidates {
            if self.host_left[x] < self.pat_left[i] || self.host_right[x] < self.pat_right[i] {
                continue;
            }
            phi.push(x);
            if self.extend(phi, scratch) {
                return true;
            }
            phi.pop();
        }
        false
    }
}

/// Interval quotient of an embedded ordered graph.
///
/// `embedding[v]` is the host position of vertex `v` of `g` in `0..n_host`,
/// where `n_host = partition.n_vertices()`. The result has one vertex per
/// interval and an edge `{i, j}`, `i != j`, whenever some edge of `g` runs
/// between interval `i` and interval `j`. Edges inside one interval vanish.
pub fn quotient_graph(
    g: &OrderedGraph,
    embedding: &[usize],
    partition: &IntervalPartition,
) -> Result<OrderedGraph> {
    if embedding.len() != g.n_vertices()
        || embedding.windows(2).any(|w| w[0] >= w[1])
        || embedding
            .last()
            .is_some_and(|&x| x >= partition.n_vertices())
    {
        return Err(Error::InvalidEmbedding);
    }
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .filter_map(|&(u, v)| {
            let a = partition.interval_of(embedding[u])?;
            let b = partition.interval_of(embedding[v])?;
            (a != b).then_some((a.min(b), a.max(b)))
        })
        .collect();
    edges.sort_unstable();
    edges.dedup();
    Ok(OrderedGraph::from_sorted_unchecked(partition.len(), edges))
}
