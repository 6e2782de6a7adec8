//! Multi-thread scanning for red copies of a bipartite matching.
//!
//! A coloring of `K_{2N}` restricts to an `N x N` matrix `A` with
//! `A[i][j] = color({i, N + j})`. Thread `t` looks for red cells
//! `(pi(i) + t, j_i)` with `j_0 < j_1 < ... < j_{n-1}`, that is, a red copy
//! of the matching of `pi^-1` in rows `t..t+n`. For `i = 0..n` it scans
//! row `pi(i) + t` from the column after
//! the previous hit and stops at the first red cell. If a row runs out of
//! columns the thread fails; the blue cells it revealed form one segment per
//! scanned row.
//!
//! Threads are evaluated independently: each thread reads colors straight
//! from the matrix and keeps its own reveal set.

use alloc::vec;
use alloc::vec::Vec;

use crate::coloring::{Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::matching::{permutation_from_matching, OrderedMatching, Permutation};
use crate::shift::shift_statistic;

/// Square red/blue matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColorMatrix {
    n: usize,
    cells: Vec<Color>,
}

impl ColorMatrix {
    pub fn filled(n: usize, color: Color) -> Self {
        ColorMatrix {
            n,
            cells: vec![color; n * n],
        }
    }

    /// Matrix from `n * n` row-major cells.
    pub fn from_cells(n: usize, cells: Vec<Color>) -> Result<Self> {
        if cells.len() != n * n {
            return Err(Error::InvalidParameters(alloc::format!(
                "expected {} cells for a {n} x {n} matrix, got {}",
                n * n,
                cells.len()
            )));
        }
        Ok(ColorMatrix { n, cells })
    }

    /// Matrix whose cell `(i, j)` is bit `i * n + j` of `mask` (1 = blue).
    pub fn from_bits(n: usize, mask: u64) -> Self {
        assert!(n * n <= 64);
        let cells = (0..n * n)
            .map(|b| if mask >> b & 1 == 1 { Color::Blue } else { Color::Red })
            .collect();
        ColorMatrix { n, cells }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> Color {
        self.cells[row * self.n + col]
    }

    pub fn set(&mut self, row: usize, col: usize, color: Color) {
        self.cells[row * self.n + col] = color;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Color]> {
        self.cells.chunks(self.n.max(1)).take(self.n)
    }
}

/// `A[i][j] = color({i, N + j})` for a coloring of `K_{2N}`.
pub fn color_matrix_from_coloring(chi: &EdgeColoring) -> Result<ColorMatrix> {
    let total = chi.n_vertices();
    if !total.is_multiple_of(2) {
        return Err(Error::InvalidParameters(alloc::format!(
            "coloring must be on an even number of vertices, got {total}"
        )));
    }
    let n = total / 2;
    let mut cells = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            cells.push(chi.get(i, n + j));
        }
    }
    Ok(ColorMatrix { n, cells })
}

/// A maximal run of blue cells revealed by one thread in one row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Segment {
    pub thread: usize,
    pub row: usize,
    pub col_start: usize,
    /// Inclusive.
    pub col_end: usize,
}

impl Segment {
    pub fn len(&self) -> usize {
        self.col_end - self.col_start + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn intersects(&self, other: &Segment) -> bool {
        self.row == other.row && self.col_start <= other.col_end && other.col_start <= self.col_end
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "outcome", rename_all = "snake_case"))]
pub enum ThreadOutcome {
    /// Red cells `(rows[i], columns[i])`, `rows[i] = pi(i) + t`, with
    /// strictly increasing columns.
    Success {
        rows: Vec<usize>,
        columns: Vec<usize>,
        blue_revealed: usize,
    },
    Failure {
        segments: Vec<Segment>,
        blue_revealed: usize,
    },
}

impl ThreadOutcome {
    pub fn is_success(&self) -> bool {
        matches!(self, ThreadOutcome::Success { .. })
    }

    pub fn blue_revealed(&self) -> usize {
        match self {
            ThreadOutcome::Success { blue_revealed, .. }
            | ThreadOutcome::Failure { blue_revealed, .. } => *blue_revealed,
        }
    }

    pub fn segments(&self) -> Option<&[Segment]> {
        match self {
            ThreadOutcome::Failure { segments, .. } => Some(segments),
            ThreadOutcome::Success { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ScanTrace {
    pub dim: usize,
    pub permutation: Permutation,
    /// Indexed by offset `t`.
    pub threads: Vec<ThreadOutcome>,
}

impl ScanTrace {
    /// Offset of the first successful thread.
    pub fn first_success(&self) -> Option<usize> {
        self.threads.iter().position(ThreadOutcome::is_success)
    }
}

fn check_rows(a: &ColorMatrix, n: usize, last_offset: usize) -> Result<()> {
    let needed = n + last_offset;
    if needed > a.dim() {
        return Err(Error::RowOverflow {
            needed,
            available: a.dim(),
        });
    }
    Ok(())
}

/// Greedy scan of one thread at offset `t`.
pub fn scan_thread(a: &ColorMatrix, pi: &Permutation, t: usize) -> Result<ThreadOutcome> {
    check_rows(a, pi.len(), t)?;
    let dim = a.dim();
    let mut next_col = 0;
    let mut rows = Vec::with_capacity(pi.len());
    let mut columns = Vec::with_capacity(pi.len());
    let mut segments = Vec::new();
    let mut blue_revealed = 0;
    for i in 0..pi.len() {
        let row = pi.get(i) + t;
        let start = next_col;
        let hit = (start..dim).find(|&c| a.get(row, c) == Color::Red);
        let blue_end = hit.unwrap_or(dim);
        if blue_end > start {
            blue_revealed += blue_end - start;
            segments.push(Segment {
                thread: t,
                row,
                col_start: start,
                col_end: blue_end - 1,
            });
        }
        match hit {
            Some(c) => {
                rows.push(row);
                columns.push(c);
                next_col = c + 1;
            }
            None => {
                return Ok(ThreadOutcome::Failure {
                    segments,
                    blue_revealed,
                })
            }
        }
    }
    Ok(ThreadOutcome::Success {
        rows,
        columns,
        blue_revealed,
    })
}

/// Runs threads `0..threads` and records every outcome.
pub fn multi_thread_scan(a: &ColorMatrix, pi: &Permutation, threads: usize) -> Result<ScanTrace> {
    if threads == 0 {
        return Err(Error::InvalidParameters("at least one thread is required".into()));
    }
    check_rows(a, pi.len(), threads - 1)?;
    let outcomes = (0..threads)
        .map(|t| scan_thread(a, pi, t))
        .collect::<Result<Vec<_>>>()?;
    Ok(ScanTrace {
        dim: a.dim(),
        permutation: pi.clone(),
        threads: outcomes,
    })
}

/// Whether red cells `(pi(i) + t, j_i)` with `j_0 < j_1 < ...` exist, by
/// backtracking over every column choice (failed states are memoized).
pub fn red_copy_in_rows(a: &ColorMatrix, pi: &Permutation, t: usize) -> Result<bool> {
    check_rows(a, pi.len(), t)?;
    let dim = a.dim();
    let mut dead = vec![false; (pi.len() + 1) * (dim + 1)];
    fn go(
        a: &ColorMatrix,
        pi: &Permutation,
        t: usize,
        i: usize,
        min_col: usize,
        dead: &mut [bool],
    ) -> bool {
        if i == pi.len() {
            return true;
        }
        let key = i * (a.dim() + 1) + min_col;
        if dead[key] {
            return false;
        }
        for c in min_col..a.dim() {
            if a.get(pi.get(i) + t, c) == Color::Red && go(a, pi, t, i + 1, c + 1, dead) {
                return true;
            }
        }
        dead[key] = true;
        false
    }
    Ok(go(a, pi, t, 0, 0, &mut dead))
}

/// Number of segments of thread `t` that share a cell with some segment of
/// thread `other`.
pub fn cross_thread_intersections(trace: &ScanTrace, t: usize, other: usize) -> Result<usize> {
    let segs = |x: usize| -> Result<&[Segment]> {
        trace
            .threads
            .get(x)
            .ok_or(Error::InvalidThread(x))?
            .segments()
            .ok_or(Error::ThreadSucceeded(x))
    };
    if t == other {
        return Err(Error::InvalidParameters("threads must be distinct".into()));
    }
    let (mine, theirs) = (segs(t)?, segs(other)?);
    Ok(mine
        .iter()
        .filter(|s| theirs.iter().any(|o| s.intersects(o)))
        .count())
}

fn ceil_sqrt(x: u128) -> u128 {
    if x == 0 {
        return 0;
    }
    let mut r = libm::sqrt(x as f64) as u128;
    while r * r > x {
        r -= 1;
    }
    while r * r < x {
        r += 1;
    }
    r
}

/// `ceil(4n (sqrt(n l) + 1))`, the size above which every coloring of
/// `K_{2N}` has a blue triangle, a red `K_{2n}`, or a red copy of the
/// matching between the halves. Evaluated exactly in integers as
/// `4n + ceil(sqrt(16 n^3 l))`.
pub fn scan_bound(n: u64, ell: u64) -> u64 {
    let (n, ell) = (n as u128, ell as u128);
    (4 * n + ceil_sqrt(16 * n * n * n * ell)) as u64
}

/// The same bound with `l = 3 sqrt(n)` substituted, in floating point:
/// `4n (sqrt(3 n^{3/2}) + 1)`.
pub fn composed_random_bound(n: f64) -> f64 {
    4.0 * n * (libm::sqrt(3.0 * libm::pow(n, 1.5)) + 1.0)
}

/// `ceil(sqrt(n / l))`, at least 1.
pub fn default_thread_count(n: usize, ell: usize) -> usize {
    let ell = ell.max(1);
    let mut t = 1;
    while t * t * ell < n {
        t += 1;
    }
    t
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", rename_all = "snake_case"))]
pub enum ScanVerdict {
    BlueTriangle { vertices: [usize; 3] },
    /// A blue neighborhood of size `>= 2n` without blue edges.
    RedClique { center: usize, vertices: Vec<usize> },
    /// Matrix cells `(rows[i], columns[i])`, i.e. red edges
    /// `{rows[i], N + columns[i]}`.
    RedMatchingCopy {
        offset: usize,
        rows: Vec<usize>,
        columns: Vec<usize>,
    },
    /// None of the three outcomes was found.
    BoundViolatedCounterexample,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ScanCheck {
    pub verdict: ScanVerdict,
    pub n: usize,
    pub dim: usize,
    pub ell: usize,
    pub bound: u64,
    /// `L` of the matching's permutation.
    pub shift_statistic: usize,
    /// `L` of the permutation actually scanned (its inverse).
    pub scanned_shift_statistic: usize,
    pub threads: usize,
    /// `dim >= bound` and both shift statistics at most `ell`; otherwise
    /// the verdict is advisory.
    pub preconditions_met: bool,
}

fn find_blue_triangle(chi: &EdgeColoring) -> Option<[usize; 3]> {
    let blue = chi.color_class(Color::Blue);
    for &(u, v) in blue.edges() {
        if let Some(w) = blue.neighbors(u).find(|&w| w > v && blue.has_edge(v, w)) {
            return Some([u, v, w]);
        }
    }
    None
}

/// Searches a coloring of `K_{2N}` for a blue triangle, then a vertex whose
/// blue neighborhood holds `2n` vertices, then a red copy of `m` between
/// the halves (scanning threads first, every other offset as fallback).
///
/// Scanning rows `sigma(i) + t` with increasing columns finds copies of the
/// matching of `sigma^-1`, so the scan runs on the inverse of `m`'s
/// permutation. Row `r` of a reported copy is left vertex `r`; column `c`
/// is right vertex `dim + c`.
pub fn scan_certificate_check(
    chi: &EdgeColoring,
    m: &OrderedMatching,
    ell: usize,
) -> Result<ScanCheck> {
    let pi_m = permutation_from_matching(m)?;
    let pi = pi_m.inverse();
    let a = color_matrix_from_coloring(chi)?;
    let (n, dim) = (pi.len(), a.dim());
    let bound = scan_bound(n as u64, ell as u64);
    let l = shift_statistic(&pi_m).length;
    let l_scanned = shift_statistic(&pi).length;
    let threads = default_thread_count(n, ell).min((dim + 1).saturating_sub(n)).max(1);
    let mut check = ScanCheck {
        verdict: ScanVerdict::BoundViolatedCounterexample,
        n,
        dim,
        ell,
        bound,
        shift_statistic: l,
        scanned_shift_statistic: l_scanned,
        threads,
        preconditions_met: dim as u64 >= bound && l <= ell && l_scanned <= ell,
    };

    if let Some(vertices) = find_blue_triangle(chi) {
        check.verdict = ScanVerdict::BlueTriangle { vertices };
        return Ok(check);
    }
    for center in 0..chi.n_vertices() {
        let nbrs: Vec<usize> = (0..chi.n_vertices())
            .filter(|&w| w != center && chi.get(center, w) == Color::Blue)
            .take(2 * n)
            .collect();
        if nbrs.len() == 2 * n {
            check.verdict = ScanVerdict::RedClique {
                center,
                vertices: nbrs,
            };
            return Ok(check);
        }
    }
    if n > dim {
        return Ok(check);
    }
    let scanned = threads.min(dim - n + 1);
    for t in (0..scanned).chain(scanned..=dim - n) {
        if let ThreadOutcome::Success { rows, columns, .. } = scan_thread(&a, &pi, t)? {
            check.verdict = ScanVerdict::RedMatchingCopy {
                offset: t,
                rows,
                columns,
            };
            return Ok(check);
        }
    }
    Ok(check)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(one_based: &[usize]) -> Permutation {
        Permutation::from_one_based(one_based).unwrap()
    }

    #[test]
    fn matrix_from_coloring() {
        let m = color_matrix_from_coloring(&EdgeColoring::all(6, Color::Red)).unwrap();
        assert!(m.rows().flatten().all(|&c| c == Color::Red));
        let mut chi = EdgeColoring::all(4, Color::Red);
        chi.set(0, 2, Color::Blue);
        let m = color_matrix_from_coloring(&chi).unwrap();
        assert_eq!(m.get(0, 0), Color::Blue);
        assert_eq!(m.get(0, 1), Color::Red);
        assert_eq!(m.get(1, 0), Color::Red);
        assert_eq!(m.get(1, 1), Color::Red);
        assert!(color_matrix_from_coloring(&EdgeColoring::all(5, Color::Red)).is_err());
    }

    #[test]
    fn all_red_succeeds_leftmost() {
        let a = ColorMatrix::filled(5, Color::Red);
        let trace = multi_thread_scan(&a, &perm(&[3, 1, 2]), 1).unwrap();
        match &trace.threads[0] {
            ThreadOutcome::Success { columns, rows, .. } => {
                assert_eq!(columns, &[0, 1, 2]);
                assert_eq!(rows, &[2, 0, 1]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn all_blue_fails_on_first_row() {
        let a = ColorMatrix::filled(4, Color::Blue);
        let trace = multi_thread_scan(&a, &perm(&[2, 1]), 1).unwrap();
        let segs = trace.threads[0].segments().unwrap();
        assert_eq!(
            segs,
            &[Segment {
                thread: 0,
                row: 1,
                col_start: 0,
                col_end: 3
            }]
        );
        assert_eq!(trace.threads[0].blue_revealed(), 4);
    }

    #[test]
    fn hand_traced_instance() {
        // Red exactly at one-based (2,2) and (1,3).
        let mut a = ColorMatrix::filled(4, Color::Blue);
        a.set(1, 1, Color::Red);
        a.set(0, 2, Color::Red);
        let pi = perm(&[2, 1]);
        let trace = multi_thread_scan(&a, &pi, 1).unwrap();
        match &trace.threads[0] {
            ThreadOutcome::Success { columns, .. } => assert_eq!(columns, &[1, 2]),
            other => panic!("unexpected {other:?}"),
        }
        assert!(red_copy_in_rows(&a, &pi, 0).unwrap());
    }

    #[test]
    fn row_overflow() {
        let a = ColorMatrix::filled(3, Color::Red);
        assert_eq!(
            multi_thread_scan(&a, &perm(&[1, 2]), 3),
            Err(Error::RowOverflow {
                needed: 4,
                available: 3
            })
        );
        assert!(red_copy_in_rows(&a, &perm(&[1, 2]), 2).is_err());
        assert!(multi_thread_scan(&a, &perm(&[1, 2]), 0).is_err());
    }

    #[test]
    fn red_copy_examples() {
        let pi = perm(&[1, 3, 2]);
        let red = ColorMatrix::filled(5, Color::Red);
        let blue = ColorMatrix::filled(5, Color::Blue);
        for t in 0..=2 {
            assert!(red_copy_in_rows(&red, &pi, t).unwrap());
            assert!(!red_copy_in_rows(&blue, &pi, t).unwrap());
        }
    }

    #[test]
    fn intersections() {
        let a = ColorMatrix::filled(4, Color::Blue);
        let trace = multi_thread_scan(&a, &Permutation::identity(2), 2).unwrap();
        // Each thread aborts on its first row: rows 0 and 1, no overlap.
        assert_eq!(cross_thread_intersections(&trace, 1, 0), Ok(0));
        assert_eq!(cross_thread_intersections(&trace, 0, 5), Err(Error::InvalidThread(5)));

        let red = ColorMatrix::filled(4, Color::Red);
        let trace = multi_thread_scan(&red, &Permutation::identity(2), 2).unwrap();
        assert_eq!(cross_thread_intersections(&trace, 1, 0), Err(Error::ThreadSucceeded(1)));
    }

    #[test]
    fn bound_values() {
        assert_eq!(scan_bound(4, 2), 62);
        assert_eq!(scan_bound(1, 1), 8);
        assert_eq!(scan_bound(16, 12), 951);
        // Perfect squares stay exact.
        assert_eq!(scan_bound(4, 4), 16 * 5);
        assert_eq!(default_thread_count(16, 4), 2);
        assert_eq!(default_thread_count(17, 4), 3);
        assert_eq!(default_thread_count(2, 5), 1);
    }

    #[test]
    fn certificate_trivial_colorings() {
        let m = crate::matching::matching_from_permutation(&perm(&[2, 1]));
        let red = EdgeColoring::all(40, Color::Red);
        let check = scan_certificate_check(&red, &m, 1).unwrap();
        assert!(matches!(check.verdict, ScanVerdict::RedMatchingCopy { offset: 0, .. }));
        assert!(check.preconditions_met);

        let blue = EdgeColoring::all(6, Color::Blue);
        let check = scan_certificate_check(&blue, &m, 1).unwrap();
        assert_eq!(check.verdict, ScanVerdict::BlueTriangle { vertices: [0, 1, 2] });
        assert!(!check.preconditions_met);
    }
}
