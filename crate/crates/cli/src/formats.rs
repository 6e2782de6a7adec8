//! Text formats. All vertex and image numbers in files are one-based.
//!
//! * ordered graph (`.og`): a line `n m`, then `m` lines `u v`;
//! * permutation: the images `pi(1) ... pi(n)` separated by whitespace;
//! * color matrix: `n` lines of `n` characters `R`/`B`;
//! * edge coloring: `N`, then the `C(N,2)` characters `R`/`B` of the edges
//!   in lexicographic order `{1,2}, {1,3}, ..., {N-1,N}`.
//!
//! Blank lines and text after `#` are ignored. Whitespace between color
//! characters is ignored.

use std::fmt::Write as _;
use std::path::Path;

use num_rational::Ratio;
use ordram_core::scan::ColorMatrix;
use ordram_core::{Color, EdgeColoring, OrderedGraph, Permutation};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("{0}")]
    Invalid(String),
}

fn syntax(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        msg: msg.into(),
    }
}

pub fn read_file(path: &Path) -> Result<String, FormatError> {
    std::fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Content lines with their one-based line numbers, comments stripped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn parse_numbers(line: usize, s: &str) -> Result<Vec<usize>, FormatError> {
    s.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| syntax(line, format!("expected a non-negative integer, found {tok:?}")))
        })
        .collect()
}

pub fn parse_graph(text: &str) -> Result<OrderedGraph, FormatError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| FormatError::Invalid("empty graph file".into()))?;
    let nums = parse_numbers(hl, header)?;
    let [n, m] = nums[..] else {
        return Err(syntax(hl, "header must be \"n m\""));
    };
    let mut edges = Vec::with_capacity(m);
    for (ln, l) in lines.by_ref().take(m) {
        let nums = parse_numbers(ln, l)?;
        let [u, v] = nums[..] else {
            return Err(syntax(ln, "edge line must be \"u v\""));
        };
        if u == 0 || v == 0 || u > n || v > n {
            return Err(syntax(ln, format!("vertex out of range 1..={n}")));
        }
        edges.push((u - 1, v - 1));
    }
    if edges.len() != m {
        return Err(FormatError::Invalid(format!("header announces {m} edges, found {}", edges.len())));
    }
    if let Some((ln, _)) = lines.next() {
        return Err(syntax(ln, "unexpected content after the last edge"));
    }
    OrderedGraph::new(n, edges).map_err(|e| FormatError::Invalid(e.to_string()))
}

pub fn write_graph(g: &OrderedGraph) -> String {
    let mut s = format!("{} {}\n", g.n_vertices(), g.n_edges());
    for &(u, v) in g.edges() {
        let _ = writeln!(s, "{} {}", u + 1, v + 1);
    }
    s
}

pub fn parse_permutation(text: &str) -> Result<Permutation, FormatError> {
    let mut images = Vec::new();
    for (ln, l) in content_lines(text) {
        images.extend(parse_numbers(ln, l)?);
    }
    Permutation::from_one_based(&images)
        .map_err(|_| FormatError::Invalid("images must be exactly 1..=n in some order".into()))
}

pub fn write_permutation(pi: &Permutation) -> String {
    let words: Vec<String> = pi.one_based().map(|v| v.to_string()).collect();
    words.join(" ") + "\n"
}

fn color_of(line: usize, c: char) -> Result<Color, FormatError> {
    Color::from_char(c).ok_or_else(|| syntax(line, format!("expected R or B, found {c:?}")))
}

pub fn parse_matrix(text: &str) -> Result<ColorMatrix, FormatError> {
    let mut rows = Vec::new();
    for (ln, l) in content_lines(text) {
        let row = l
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| color_of(ln, c))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push((ln, row));
    }
    let n = rows.len();
    if let Some((ln, r)) = rows.iter().find(|(_, r)| r.len() != n) {
        return Err(syntax(*ln, format!("row has {} cells, expected {n}", r.len())));
    }
    ColorMatrix::from_cells(n, rows.into_iter().flat_map(|(_, r)| r).collect())
        .map_err(|e| FormatError::Invalid(e.to_string()))
}

pub fn write_matrix(a: &ColorMatrix) -> String {
    let mut s = String::new();
    for row in a.rows() {
        s.extend(row.iter().map(|c| c.as_char()));
        s.push('\n');
    }
    s
}

pub fn parse_coloring(text: &str) -> Result<EdgeColoring, FormatError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| FormatError::Invalid("empty coloring file".into()))?;
    let mut tokens = header.split_whitespace();
    let n: usize = tokens
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| syntax(hl, "first token must be the vertex count"))?;
    if n > 100_000 {
        return Err(syntax(hl, "vertex count too large"));
    }
    let mut colors = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for tok in tokens {
        for c in tok.chars() {
            colors.push(color_of(hl, c)?);
        }
    }
    for (ln, l) in lines {
        for c in l.chars().filter(|c| !c.is_whitespace()) {
            colors.push(color_of(ln, c)?);
        }
    }
    let expected = n * n.saturating_sub(1) / 2;
    EdgeColoring::from_colors(n, &colors)
        .ok_or_else(|| FormatError::Invalid(format!("expected {expected} edge colors, found {}", colors.len())))
}

pub fn write_coloring(chi: &EdgeColoring) -> String {
    let mut s = format!("{}\n", chi.n_vertices());
    s.extend(chi.colors().map(Color::as_char));
    s.push('\n');
    s
}

/// `a/b`, an integer, or a finite decimal such as `0.75`, parsed exactly.
pub fn parse_ratio(s: &str) -> Result<Ratio<i64>, FormatError> {
    let bad = || FormatError::Invalid(format!("not a rational number: {s:?}"));
    let s = s.trim();
    if let Some((a, b)) = s.split_once('/') {
        let a: i64 = a.trim().parse().map_err(|_| bad())?;
        let b: i64 = b.trim().parse().map_err(|_| bad())?;
        if b == 0 {
            return Err(bad());
        }
        return Ok(Ratio::new(a, b));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() || frac.len() > 15 {
        return Err(bad());
    }
    let digits = |t: &str| t.chars().all(|c| c.is_ascii_digit());
    if !digits(int) || !digits(frac) {
        return Err(bad());
    }
    let denom = 10i64.pow(frac.len() as u32);
    let int_v: i64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
    let frac_v: i64 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| bad())? };
    let num = int_v
        .checked_mul(denom)
        .and_then(|v| v.checked_add(frac_v))
        .ok_or_else(bad)?;
    Ok(Ratio::new(if neg { -num } else { num }, denom))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_round_trip() {
        let g = OrderedGraph::new(5, [(0, 4), (1, 2)]).unwrap();
        let text = write_graph(&g);
        assert_eq!(text, "5 2\n1 5\n2 3\n");
        assert_eq!(parse_graph(&text).unwrap(), g);
        assert_eq!(parse_graph("# comment\n3 1\n\n1 3 # edge\n").unwrap().n_edges(), 1);
    }

    #[test]
    fn graph_errors() {
        for bad in ["", "3", "3 1\n1 4\n", "3 2\n1 2\n", "3 1\n1 2\n2 3\n", "3 1\n1 1\n", "x y\n", "3 1\n1 2 3\n"] {
            assert!(parse_graph(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn permutation_round_trip() {
        let pi = parse_permutation("2 3 1\n").unwrap();
        assert_eq!(pi.images(), &[1, 2, 0]);
        assert_eq!(write_permutation(&pi), "2 3 1\n");
        assert!(parse_permutation("1 1").is_err());
        assert!(parse_permutation("0 1").is_err());
        assert!(parse_permutation("1 -2").is_err());
        assert_eq!(parse_permutation("").unwrap().len(), 0);
    }

    #[test]
    fn matrix_round_trip() {
        let a = parse_matrix("RB\nBR\n").unwrap();
        assert_eq!(a.get(0, 1), Color::Blue);
        assert_eq!(write_matrix(&a), "RB\nBR\n");
        assert!(parse_matrix("RB\nB\n").is_err());
        assert!(parse_matrix("RX\nBR\n").is_err());
    }

    #[test]
    fn coloring_round_trip() {
        let chi = parse_coloring("3\nRBR\n").unwrap();
        assert_eq!(chi.get(0, 2), Color::Blue);
        assert_eq!(write_coloring(&chi), "3\nRBR\n");
        assert_eq!(parse_coloring("3 R B\nR").unwrap(), chi);
        assert!(parse_coloring("3\nRB\n").is_err());
        assert!(parse_coloring("3\nRBRB\n").is_err());
        assert!(parse_coloring("three\n").is_err());
    }

    #[test]
    fn ratios() {
        assert_eq!(parse_ratio("3/4").unwrap(), Ratio::new(3, 4));
        assert_eq!(parse_ratio("0.75").unwrap(), Ratio::new(3, 4));
        assert_eq!(parse_ratio("1").unwrap(), Ratio::from_integer(1));
        assert_eq!(parse_ratio("-.5").unwrap(), Ratio::new(-1, 2));
        for bad in ["", ".", "1/0", "a", "1.2.3", "1e3"] {
            assert!(parse_ratio(bad).is_err(), "{bad:?}");
        }
    }
}
