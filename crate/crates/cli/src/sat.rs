//! Arrowing decided by a CDCL SAT solver.
//!
//! One variable per edge of `K_N` (true = blue). Every ordered copy of the
//! red pattern is a `p`-subset of `0..N`; it is forbidden by the clause
//! "some pattern edge is blue". Copies of the blue pattern get the clause
//! "some pattern edge is red". Satisfiable means a good coloring exists.
//!
//! Clause count is `C(N, p)` per pattern, so this is meant for small
//! patterns where the exhaustive DFS blows up. Certificates are re-checked
//! by order-preserving containment; unsatisfiable verdicts rely on the
//! solver.

use ordram_core::coloring::{edge_index, Color, EdgeColoring};
use ordram_core::graph::contains_ordered_subgraph;
use ordram_core::ramsey::{ArrowingResult, RamseyValue};
use ordram_core::{Error, OrderedGraph};
use varisat::{ExtendFormula, Lit, Solver, Var};

/// Largest clause count built before refusing.
pub const MAX_CLAUSES: u64 = 50_000_000;

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc.saturating_mul((n - i) as u64) / (i + 1) as u64)
}

fn add_pattern_clauses(solver: &mut Solver, n: usize, pattern: &OrderedGraph, blue_literal: bool) {
    let p = pattern.n_vertices();
    let mut pos: Vec<usize> = (0..p).collect();
    let mut clause = Vec::with_capacity(pattern.n_edges());
    loop {
        clause.clear();
        for &(a, b) in pattern.edges() {
            let var = Var::from_index(edge_index(n, pos[a], pos[b]));
            clause.push(Lit::from_var(var, blue_literal));
        }
        solver.add_clause(&clause);
        // Next p-subset in lexicographic order.
        let Some(i) = (0..p).rev().find(|&i| pos[i] < n - p + i) else {
            break;
        };
        pos[i] += 1;
        for j in i + 1..p {
            pos[j] = pos[j - 1] + 1;
        }
    }
}

fn good(chi: &EdgeColoring, red: &OrderedGraph, blue: &OrderedGraph) -> bool {
    !contains_ordered_subgraph(&chi.color_class(Color::Red), red)
        && !contains_ordered_subgraph(&chi.color_class(Color::Blue), blue)
}

/// Same contract as `ordram_core::ramsey::arrows`; `nodes_explored` is 0.
pub fn arrows_sat(n: usize, red: &OrderedGraph, blue: &OrderedGraph) -> Result<ArrowingResult, Error> {
    let fits = |g: &OrderedGraph| g.n_vertices() <= n;
    if (fits(red) && red.n_edges() == 0) || (fits(blue) && blue.n_edges() == 0) {
        return Ok(ArrowingResult {
            n,
            arrows: true,
            certificate: None,
            nodes_explored: 0,
        });
    }
    let clauses = binomial(n, red.n_vertices()).saturating_add(binomial(n, blue.n_vertices()));
    if clauses > MAX_CLAUSES {
        return Err(Error::InvalidParameters(format!(
            "SAT encoding would need {clauses} clauses (limit {MAX_CLAUSES})"
        )));
    }
    let mut solver = Solver::new();
    let m = n * n.saturating_sub(1) / 2;
    if m > 0 {
        // Mention every variable so the model covers all edges.
        let last = Var::from_index(m - 1);
        solver.add_clause(&[last.positive(), last.negative()]);
    }
    if fits(red) {
        add_pattern_clauses(&mut solver, n, red, true);
    }
    if fits(blue) {
        add_pattern_clauses(&mut solver, n, blue, false);
    }
    let sat = solver
        .solve()
        .map_err(|e| Error::InvalidParameters(format!("SAT solver failed: {e}")))?;
    if !sat {
        return Ok(ArrowingResult {
            n,
            arrows: true,
            certificate: None,
            nodes_explored: 0,
        });
    }
    let mut colors = vec![Color::Red; m];
    for lit in solver.model().unwrap_or_default() {
        if lit.index() < m && lit.is_positive() {
            colors[lit.index()] = Color::Blue;
        }
    }
    let chi = EdgeColoring::from_colors(n, &colors).expect("one color per edge");
    assert!(good(&chi, red, blue), "SAT model is not a good coloring");
    Ok(ArrowingResult {
        n,
        arrows: false,
        certificate: Some(chi),
        nodes_explored: 0,
    })
}

/// Smallest `N <= n_max` that arrows, with one step per `N` tried.
pub fn ordered_ramsey_sat(
    red: &OrderedGraph,
    blue: &OrderedGraph,
    n_max: usize,
) -> Result<(RamseyValue, Vec<ArrowingResult>), Error> {
    let mut steps = Vec::new();
    for n in 1..=n_max {
        let step = arrows_sat(n, red, blue)?;
        let done = step.arrows;
        steps.push(step);
        if done {
            return Ok((RamseyValue::Exact(n), steps));
        }
    }
    Ok((RamseyValue::Unknown { n_max }, steps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use ordram_core::ramsey::{ordered_ramsey, RamseyOptions, DEFAULT_BUDGET};

    #[test]
    fn sanity_values() {
        let e = OrderedGraph::complete(2);
        let k3 = OrderedGraph::complete(3);
        assert_eq!(ordered_ramsey_sat(&e, &e, 8).unwrap().0, RamseyValue::Exact(2));
        assert_eq!(ordered_ramsey_sat(&e, &k3, 8).unwrap().0, RamseyValue::Exact(3));
        assert_eq!(ordered_ramsey_sat(&k3, &k3, 8).unwrap().0, RamseyValue::Exact(6));
        assert_eq!(ordered_ramsey_sat(&k3, &k3, 5).unwrap().0, RamseyValue::Unknown { n_max: 5 });
    }

    #[test]
    fn agrees_with_search_on_small_matchings() {
        let k3 = OrderedGraph::complete(3);
        let opts = RamseyOptions {
            n_max: 10,
            budget: DEFAULT_BUDGET,
            specialize_triangle: true,
        };
        for edges in [vec![(0, 2), (1, 3)], vec![(0, 3), (1, 2)], vec![(0, 1), (2, 3)], vec![(1, 2)]] {
            let g = OrderedGraph::new(4, edges).unwrap();
            let dfs = ordered_ramsey(&g, &k3, opts).unwrap().value;
            assert_eq!(ordered_ramsey_sat(&g, &k3, 10).unwrap().0, dfs);
        }
    }

    #[test]
    fn subsets_enumerated() {
        assert_eq!(binomial(8, 3), 56);
        assert_eq!(binomial(3, 4), 0);
    }
}
