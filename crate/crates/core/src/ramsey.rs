//! Exact ordered Ramsey numbers by exhaustive search.
//!
//! `arrows(N, G, H)` decides whether every red/blue coloring of `K_N`
//! contains a red ordered copy of `G` or a blue ordered copy of `H`. The
//! search is a depth-first walk over the edges, red branch first, in
//! vertex-incremental order `(0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...`
//! so that every prefix of the walk is a coloring of some `K_v` plus part of
//! the next vertex's edges. After each assignment a monitor looks for a new
//! monochromatic copy through the edge just colored; copies not using it
//! were ruled out earlier.
//!
//! Ordered complete graphs have no nontrivial automorphisms, so there is no
//! symmetry to quotient by.
//!
//! Host vertices are bit positions in `u64` masks, which caps `N` at 64.

use alloc::vec;
use alloc::vec::Vec;

use crate::coloring::{Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::OrderedGraph;

/// Largest `N` the search accepts.
pub const MAX_VERTICES: usize = 64;

/// Default cap on the number of search nodes (edge assignments tried).
pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrowingResult {
    pub n: usize,
    /// Every coloring of `K_n` has a red `G` or a blue `H`.
    pub arrows: bool,
    /// A coloring with neither, present exactly when `arrows` is false.
    pub certificate: Option<EdgeColoring>,
    pub nodes_explored: u64,
}

/// Monochromatic-copy detector for one pattern.
struct Monitor {
    p: usize,
    edges: Vec<(usize, usize)>,
    /// Pattern neighbors of each vertex, as a mask over pattern vertices.
    nbrs: Vec<u64>,
}

fn range_mask(lo: usize, hi: usize) -> u64 {
    if lo >= hi {
        return 0;
    }
    let upper = if hi >= 64 { u64::MAX } else { (1u64 << hi) - 1 };
    upper & !((1u64 << lo) - 1)
}

impl Monitor {
    fn new(pattern: &OrderedGraph) -> Self {
        let p = pattern.n_vertices();
        let mut nbrs = vec![0u64; p];
        for &(a, b) in pattern.edges() {
            nbrs[a] |= 1 << b;
            nbrs[b] |= 1 << a;
        }
        Monitor {
            p,
            edges: pattern.edges().to_vec(),
            nbrs,
        }
    }

    /// Whether the color class `masks` on `n` host vertices holds a copy of
    /// the pattern that maps some pattern edge onto host edge `{u, v}`.
    fn copy_through(&self, masks: &[u64], n: usize, u: usize, v: usize) -> bool {
        if self.p > n {
            return false;
        }
        let mut pos = [0usize; MAX_VERTICES];
        self.edges
            .iter()
            .any(|&(a, b)| self.place(0, &mut pos, masks, n, (a, u), (b, v)))
    }

    fn place(
        &self,
        i: usize,
        pos: &mut [usize; MAX_VERTICES],
        masks: &[u64],
        n: usize,
        (a, u): (usize, usize),
        (b, v): (usize, usize),
    ) -> bool {
        if i == self.p {
            return true;
        }
        let lo = if i == 0 { 0 } else { pos[i - 1] + 1 };
        let hi = n + 1 + i - self.p;
        let mut cand = range_mask(lo, hi);
        // Pinned vertices split the host order.
        if i < a {
            cand &= range_mask(0, u);
        } else if i > a && i < b {
            cand &= range_mask(u + 1, v);
        } else if i > b {
            cand &= range_mask(v + 1, n);
        } else {
            let target = if i == a { u } else { v };
            cand &= 1 << target;
        }
        let nb = self.nbrs[i];
        for j in 0..i {
            if nb >> j & 1 == 1 {
                cand &= masks[pos[j]];
            }
        }
        if a > i && nb >> a & 1 == 1 {
            cand &= masks[u];
        }
        if b > i && nb >> b & 1 == 1 {
            cand &= masks[v];
        }
        while cand != 0 {
            let x = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            pos[i] = x;
            if self.place(i + 1, pos, masks, n, (a, u), (b, v)) {
                return true;
            }
        }
        false
    }
}

/// Blue-side rule of a search.
enum BlueRule {
    /// Any blue pattern, checked by embedding.
    Pattern(Monitor),
    /// Blue triangles only: a bitset intersection per step, plus a cap of
    /// `red_pattern_order - 1` on blue degrees. A blue neighborhood without
    /// blue triangles is a red clique, and a red clique on as many vertices
    /// as the red pattern contains it.
    Triangle { max_blue_degree: usize },
}

struct Search {
    n: usize,
    order: Vec<(usize, usize)>,
    red: Monitor,
    blue: BlueRule,
    red_masks: Vec<u64>,
    blue_masks: Vec<u64>,
    nodes: u64,
    budget: u64,
}

enum Walk {
    Found,
    Exhausted,
    OutOfBudget,
}

impl Search {
    fn new(n: usize, red: &OrderedGraph, blue: BlueRule, budget: u64) -> Self {
        let mut order = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for v in 1..n {
            for u in 0..v {
                order.push((u, v));
            }
        }
        Search {
            n,
            order,
            red: Monitor::new(red),
            blue,
            red_masks: vec![0; n],
            blue_masks: vec![0; n],
            nodes: 0,
            budget,
        }
    }

    fn allowed(&self, color: Color, u: usize, v: usize) -> bool {
        match color {
            Color::Red => !self.red.copy_through(&self.red_masks, self.n, u, v),
            Color::Blue => match &self.blue {
                BlueRule::Pattern(m) => !m.copy_through(&self.blue_masks, self.n, u, v),
                BlueRule::Triangle { max_blue_degree } => {
                    self.blue_masks[u] & self.blue_masks[v] == 0
                        && self.blue_masks[u].count_ones() as usize <= *max_blue_degree
                        && self.blue_masks[v].count_ones() as usize <= *max_blue_degree
                }
            },
        }
    }

    fn masks_mut(&mut self, color: Color) -> &mut Vec<u64> {
        match color {
            Color::Red => &mut self.red_masks,
            Color::Blue => &mut self.blue_masks,
        }
    }

    fn walk(&mut self, k: usize) -> Walk {
        if k == self.order.len() {
            return Walk::Found;
        }
        let (u, v) = self.order[k];
        for color in [Color::Red, Color::Blue] {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Walk::OutOfBudget;
            }
            let masks = self.masks_mut(color);
            masks[u] |= 1 << v;
            masks[v] |= 1 << u;
            if self.allowed(color, u, v) {
                match self.walk(k + 1) {
                    Walk::Exhausted => {}
                    done => return done,
                }
            }
            let masks = self.masks_mut(color);
            masks[u] &= !(1 << v);
            masks[v] &= !(1 << u);
        }
        Walk::Exhausted
    }

    fn run(mut self) -> Result<ArrowingResult> {
        match self.walk(0) {
            Walk::OutOfBudget => Err(Error::BudgetExceeded {
                n: self.n,
                nodes_explored: self.nodes,
            }),
            Walk::Exhausted => Ok(ArrowingResult {
                n: self.n,
                arrows: true,
                certificate: None,
                nodes_explored: self.nodes,
            }),
            Walk::Found => {
                let mut chi = EdgeColoring::all(self.n, Color::Red);
                for (u, &mask) in self.blue_masks.iter().enumerate() {
                    for v in u + 1..self.n {
                        if mask >> v & 1 == 1 {
                            chi.set(u, v, Color::Blue);
                        }
                    }
                }
                Ok(ArrowingResult {
                    n: self.n,
                    arrows: false,
                    certificate: Some(chi),
                    nodes_explored: self.nodes,
                })
            }
        }
    }
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::TooLarge {
            n,
            max: MAX_VERTICES,
        });
    }
    Ok(())
}

/// Whether `K_n -> (red, blue)`.
///
/// A pattern with no edges is found in every coloring as soon as it fits,
/// so such patterns are decided without search.
pub fn arrows(n: usize, red: &OrderedGraph, blue: &OrderedGraph, budget: u64) -> Result<ArrowingResult> {
    check_size(n)?;
    if let Some(r) = trivial_verdict(n, red, blue) {
        return Ok(r);
    }
    Search::new(n, red, BlueRule::Pattern(Monitor::new(blue)), budget).run()
}

/// `arrows(n, red, K_3)` restricted to triangle-free blue graphs.
pub fn triangle_free_blue_search(n: usize, red: &OrderedGraph, budget: u64) -> Result<ArrowingResult> {
    check_size(n)?;
    let triangle = OrderedGraph::complete(3);
    if let Some(r) = trivial_verdict(n, red, &triangle) {
        return Ok(r);
    }
    let rule = BlueRule::Triangle {
        max_blue_degree: red.n_vertices().saturating_sub(1),
    };
    Search::new(n, red, rule, budget).run()
}

fn trivial_verdict(n: usize, red: &OrderedGraph, blue: &OrderedGraph) -> Option<ArrowingResult> {
    let edgeless_fits = |g: &OrderedGraph| g.n_edges() == 0 && g.n_vertices() <= n;
    if edgeless_fits(red) || edgeless_fits(blue) {
        return Some(ArrowingResult {
            n,
            arrows: true,
            certificate: None,
            nodes_explored: 0,
        });
    }
    // A pattern with more vertices than the host never appears.
    if red.n_vertices() > n && blue.n_vertices() > n {
        return Some(ArrowingResult {
            n,
            arrows: false,
            certificate: Some(EdgeColoring::all(n, Color::Red)),
            nodes_explored: 0,
        });
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RamseyValue {
    Exact(usize),
    /// No `N <= n_max` arrows.
    Unknown { n_max: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamseyOutcome {
    pub value: RamseyValue,
    /// One entry per `N` examined, in increasing order.
    pub steps: Vec<ArrowingResult>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RamseyOptions {
    pub n_max: usize,
    /// Node budget per value of `N`.
    pub budget: u64,
    /// Use the triangle-free specialization; requires `blue = K_3`.
    pub specialize_triangle: bool,
}

/// Smallest `N <= n_max` with `K_N -> (red, blue)`.
///
/// Arrowing is monotone in `N` (`K_N` is an initial segment of `K_{N+1}`),
/// so a good coloring of `K_N` also rules out every smaller `N`. The scan
/// starts at the largest lower bound certified so far: a certificate on
/// `N` vertices proves `r > N`.
pub fn ordered_ramsey(red: &OrderedGraph, blue: &OrderedGraph, opts: RamseyOptions) -> Result<RamseyOutcome> {
    if opts.specialize_triangle && *blue != OrderedGraph::complete(3) {
        return Err(Error::InvalidParameters(
            "the triangle specialization needs the blue pattern K_3".into(),
        ));
    }
    let mut steps = Vec::new();
    for n in 1..=opts.n_max {
        let step = if opts.specialize_triangle {
            triangle_free_blue_search(n, red, opts.budget)?
        } else {
            arrows(n, red, blue, opts.budget)?
        };
        let done = step.arrows;
        steps.push(step);
        if done {
            return Ok(RamseyOutcome {
                value: RamseyValue::Exact(n),
                steps,
            });
        }
    }
    Ok(RamseyOutcome {
        value: RamseyValue::Unknown { n_max: opts.n_max },
        steps,
    })
}
