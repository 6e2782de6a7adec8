//! Ordered matchings and their correspondence with permutations.
//!
//! A perfect matching on `0..2n` whose edges all join the left half `0..n`
//! to the right half `n..2n` is the same thing as a permutation `pi` of
//! `0..n`: the edge at left vertex `i` ends at right vertex `n + pi(i)`.

use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::OrderedGraph;

/// A bijection of `0..n`, stored by its images.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(try_from = "Vec<usize>", into = "Vec<usize>"))]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || core::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPermutation);
            }
        }
        Ok(Permutation { images })
    }

    /// Permutation from one-based images, as written in the text formats.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let zero: Option<Vec<usize>> = images.iter().map(|&v| v.checked_sub(1)).collect();
        Self::new(zero.ok_or(Error::InvalidPermutation)?)
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Uniformly random permutation (Fisher-Yates).
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.shuffle(rng);
        Permutation { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn get(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn one_based(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&v| v + 1)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { images: inv }
    }

    /// Position `i -> n-1-i` and value `v -> n-1-v` reflected at once.
    pub fn reverse_complement(&self) -> Permutation {
        let n = self.len();
        Permutation {
            images: self.images.iter().rev().map(|&v| n - 1 - v).collect(),
        }
    }

    /// Advances to the lexicographically next permutation; returns `false`
    /// (leaving `self` untouched) when `self` is the last one.
    pub fn next_lexicographic(&mut self) -> bool {
        let a = &mut self.images;
        let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) else {
            return false;
        };
        let pivot = i - 1;
        let j = (i..a.len()).rev().find(|&j| a[j] > a[pivot]).unwrap();
        a.swap(pivot, j);
        a[i..].reverse();
        true
    }

    /// All permutations of `0..n` in lexicographic order.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations {
            next: Some(Permutation::identity(n)),
        }
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(images: Vec<usize>) -> Result<Self> {
        Permutation::new(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.images
    }
}

/// Iterator over `S_n` in lexicographic order.
pub struct AllPermutations {
    next: Option<Permutation>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if succ.next_lexicographic() {
            self.next = Some(succ);
        }
        Some(current)
    }
}

/// An ordered graph in which every vertex has degree at most one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedMatching {
    graph: OrderedGraph,
    partner: Vec<Option<usize>>,
}

impl OrderedMatching {
    pub fn new(graph: OrderedGraph) -> Result<Self> {
        let mut partner = vec![None; graph.n_vertices()];
        for &(u, v) in graph.edges() {
            for (x, y) in [(u, v), (v, u)] {
                if partner[x].replace(y).is_some() {
                    return Err(Error::NotMatching { vertex: x });
                }
            }
        }
        Ok(OrderedMatching { graph, partner })
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        Self::new(OrderedGraph::new(n, edges)?)
    }

    pub fn graph(&self) -> &OrderedGraph {
        &self.graph
    }

    pub fn into_graph(self) -> OrderedGraph {
        self.graph
    }

    pub fn n_vertices(&self) -> usize {
        self.graph.n_vertices()
    }

    pub fn n_edges(&self) -> usize {
        self.graph.n_edges()
    }

    pub fn partner(&self, v: usize) -> Option<usize> {
        self.partner[v]
    }

    /// Perfect matching between `0..n` and `n..2n`, where `n_vertices = 2n`.
    pub fn is_perfect_bipartite(&self) -> bool {
        let total = self.n_vertices();
        total.is_multiple_of(2)
            && self.partner.iter().enumerate().all(|(v, p)| match p {
                Some(p) => (v < total / 2) != (*p < total / 2),
                None => false,
            })
    }

    /// Number of matching edges with one endpoint in each of two disjoint
    /// vertex ranges.
    pub fn edges_between(&self, a: crate::graph::Interval, b: crate::graph::Interval) -> usize {
        (a.start..a.end)
            .filter(|&v| self.partner[v].is_some_and(|p| b.contains(p)))
            .count()
    }
}

/// Perfect bipartite matching on `0..2n` with edges `{i, n + pi(i)}`.
pub fn matching_from_permutation(pi: &Permutation) -> OrderedMatching {
    let n = pi.len();
    let edges = (0..n).map(|i| (i, n + pi.get(i))).collect();
    let graph = OrderedGraph::from_sorted_unchecked(2 * n, edges);
    let mut partner = vec![None; 2 * n];
    for i in 0..n {
        partner[i] = Some(n + pi.get(i));
        partner[n + pi.get(i)] = Some(i);
    }
    OrderedMatching { graph, partner }
}

/// The permutation `pi(i) = j - n` of a perfect bipartite matching on `0..2n`.
pub fn permutation_from_matching(m: &OrderedMatching) -> Result<Permutation> {
    if !m.is_perfect_bipartite() {
        return Err(Error::NotBipartiteMatching);
    }
    let n = m.n_vertices() / 2;
    let images = (0..n).map(|i| m.partner(i).unwrap() - n).collect();
    Ok(Permutation { images })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_based_edges(m: &OrderedMatching) -> Vec<(usize, usize)> {
        m.graph().edges().iter().map(|&(u, v)| (u + 1, v + 1)).collect()
    }

    #[test]
    fn matching_from_permutation_examples() {
        let m = matching_from_permutation(&Permutation::from_one_based(&[1, 2]).unwrap());
        assert_eq!(m.n_vertices(), 4);
        assert_eq!(one_based_edges(&m), [(1, 3), (2, 4)]);

        let m = matching_from_permutation(&Permutation::from_one_based(&[1, 3, 2]).unwrap());
        assert_eq!(one_based_edges(&m), [(1, 4), (2, 6), (3, 5)]);

        let m = matching_from_permutation(&Permutation::from_one_based(&[2, 1]).unwrap());
        assert_eq!(one_based_edges(&m), [(1, 4), (2, 3)]);
    }

    #[test]
    fn permutation_from_matching_examples() {
        let m = OrderedMatching::from_edges(4, [(0, 2), (1, 3)]).unwrap();
        assert_eq!(permutation_from_matching(&m).unwrap().images(), [0, 1]);

        let m = OrderedMatching::from_edges(6, [(0, 3), (1, 5), (2, 4)]).unwrap();
        let pi = permutation_from_matching(&m).unwrap();
        assert_eq!(pi.one_based().collect::<Vec<_>>(), [1, 3, 2]);

        // n = 1: the single edge crosses the halves [1] and [2].
        let m = OrderedMatching::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(permutation_from_matching(&m).unwrap().images(), [0]);
    }

    #[test]
    fn permutation_from_matching_rejects_non_bipartite() {
        let inside_left = OrderedMatching::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            permutation_from_matching(&inside_left),
            Err(Error::NotBipartiteMatching)
        );
        let unmatched = OrderedMatching::from_edges(4, [(0, 2)]).unwrap();
        assert_eq!(
            permutation_from_matching(&unmatched),
            Err(Error::NotBipartiteMatching)
        );
        let odd = OrderedMatching::from_edges(3, [(0, 2)]).unwrap();
        assert_eq!(
            permutation_from_matching(&odd),
            Err(Error::NotBipartiteMatching)
        );
    }

    #[test]
    fn matching_rejects_degree_two() {
        assert_eq!(
            OrderedMatching::from_edges(3, [(0, 1), (1, 2)]),
            Err(Error::NotMatching { vertex: 1 })
        );
    }

    #[test]
    fn permutation_validation() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![0, 2]).is_err());
        assert!(Permutation::from_one_based(&[0, 1]).is_err());
        assert_eq!(
            Permutation::from_one_based(&[3, 1, 2]).unwrap().inverse().images(),
            [1, 2, 0]
        );
    }

    #[test]
    fn lexicographic_enumeration() {
        let all: Vec<_> = Permutation::all(3).map(|p| p.images().to_vec()).collect();
        assert_eq!(
            all,
            [
                [0, 1, 2],
                [0, 2, 1],
                [1, 0, 2],
                [1, 2, 0],
                [2, 0, 1],
                [2, 1, 0]
            ]
        );
        assert_eq!(Permutation::all(0).count(), 1);
        assert_eq!(Permutation::all(5).count(), 120);
    }
}
