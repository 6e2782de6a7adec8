//! Red/blue colorings of the complete ordered graph, bit-packed by edge.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::OrderedGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn flip(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Color::Red => 'R',
            Color::Blue => 'B',
        }
    }

    pub fn from_char(c: char) -> Option<Color> {
        match c {
            'R' | 'r' => Some(Color::Red),
            'B' | 'b' => Some(Color::Blue),
            _ => None,
        }
    }
}

/// Index of edge `{u, v}`, `u < v`, among the `C(n, 2)` edges of `K_n`
/// listed lexicographically: `(0,1), (0,2), ..., (0,n-1), (1,2), ...`.
pub fn edge_index(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < v && v < n);
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

/// Inverse of [`edge_index`].
pub fn edge_at(n: usize, mut index: usize) -> (usize, usize) {
    for u in 0..n {
        let row = n - u - 1;
        if index < row {
            return (u, u + 1 + index);
        }
        index -= row;
    }
    panic!("edge index out of range");
}

/// A red/blue coloring of all edges of `K_n`; red is bit 0, blue bit 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    n: usize,
    bits: Vec<u64>,
}

impl EdgeColoring {
    pub fn all(n: usize, color: Color) -> Self {
        let m = n * n.saturating_sub(1) / 2;
        let fill = if color == Color::Blue { u64::MAX } else { 0 };
        let mut bits = vec![fill; m.div_ceil(64)];
        if let Some(last) = bits.last_mut() {
            if !m.is_multiple_of(64) {
                *last &= (1u64 << (m % 64)) - 1;
            }
        }
        EdgeColoring { n, bits }
    }

    /// Coloring from per-edge colors in lexicographic edge order.
    pub fn from_colors(n: usize, colors: &[Color]) -> Option<Self> {
        if colors.len() != n * n.saturating_sub(1) / 2 {
            return None;
        }
        let mut c = Self::all(n, Color::Red);
        for (i, &col) in colors.iter().enumerate() {
            if col == Color::Blue {
                c.bits[i / 64] |= 1 << (i % 64);
            }
        }
        Some(c)
    }

    /// Blue exactly on the edges of `blue`, red elsewhere.
    pub fn from_blue_graph(blue: &OrderedGraph) -> Self {
        let n = blue.n_vertices();
        let mut c = Self::all(n, Color::Red);
        for &(u, v) in blue.edges() {
            c.set(u, v, Color::Blue);
        }
        c
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn n_edges(&self) -> usize {
        self.n * self.n.saturating_sub(1) / 2
    }

    /// Color of `{u, v}` in either argument order.
    pub fn get(&self, u: usize, v: usize) -> Color {
        let (a, b) = (u.min(v), u.max(v));
        self.get_index(edge_index(self.n, a, b))
    }

    pub fn get_index(&self, i: usize) -> Color {
        if self.bits[i / 64] >> (i % 64) & 1 == 1 {
            Color::Blue
        } else {
            Color::Red
        }
    }

    pub fn set(&mut self, u: usize, v: usize, color: Color) {
        let (a, b) = (u.min(v), u.max(v));
        let i = edge_index(self.n, a, b);
        match color {
            Color::Blue => self.bits[i / 64] |= 1 << (i % 64),
            Color::Red => self.bits[i / 64] &= !(1 << (i % 64)),
        }
    }

    /// Colors in lexicographic edge order.
    pub fn colors(&self) -> impl Iterator<Item = Color> + '_ {
        (0..self.n_edges()).map(|i| self.get_index(i))
    }

    pub fn blue_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// The spanning subgraph formed by the edges of one color.
    pub fn color_class(&self, color: Color) -> OrderedGraph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.get(u, v) == color {
                    edges.push((u, v));
                }
            }
        }
        OrderedGraph::from_sorted_unchecked(self.n, edges)
    }

    /// Coloring induced on the vertices `0..m`.
    pub fn restrict(&self, m: usize) -> EdgeColoring {
        let mut c = Self::all(m, Color::Red);
        for u in 0..m {
            for v in u + 1..m {
                c.set(u, v, self.get(u, v));
            }
        }
        c
    }
}

/// The number of vertices whose complete graph has `m` edges, if any.
pub fn vertices_for_edge_count(m: usize) -> Option<usize> {
    let mut n = 0usize;
    while n * n.saturating_sub(1) / 2 < m {
        n += 1;
    }
    (n * n.saturating_sub(1) / 2 == m).then_some(n)
}
