use ordram_core::coloring::Color;
use ordram_core::constructions::{
    block_matching, grid_matching, superblock_pair_subgraph, verify_block_density, verify_grid_density,
};
use ordram_core::density::IntervalPair;
use ordram_core::graph::{find_ordered_copy, interval_chromatic_number};
use ordram_core::matching::matching_from_permutation;
use ordram_core::scan::{scan_certificate_check, ScanVerdict};
use ordram_core::shift::ShiftWitness;
use ordram_core::{EdgeColoring, Interval, OrderedMatching};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use super::{load_bipartite_matching, load_coloring, load_graph, load_json, load_perm, one_based};
use crate::cli::VerifyCmd;
use crate::report::{usage, CliError, Report};

/// Construction checks are exhaustive over interval pairs; keep them bounded.
const MAX_T: usize = 64;

pub fn run(cmd: &VerifyCmd) -> Result<Report, CliError> {
    match cmd {
        VerifyCmd::Chi { graph } => {
            let g = load_graph(graph)?;
            let (chi, part) = interval_chromatic_number(&g);
            let ivs: Vec<Interval> = part.intervals().collect();
            let listed: Vec<String> = ivs.iter().map(|iv| format!("[{}, {}]", iv.start + 1, iv.end)).collect();
            let text = format!("{chi}\nintervals {}", listed.join(" "));
            Ok(Report::new(json!({ "chi": chi, "intervals": ivs }), text))
        }
        VerifyCmd::Contains { host, pattern } => {
            let (h, p) = (load_graph(host)?, load_graph(pattern)?);
            let found = find_ordered_copy(&h, &p);
            let text = match &found {
                Some(pos) => format!("yes\nembedding {}", one_based(pos)),
                None => "no".into(),
            };
            Ok(Report::new(json!({ "contained": found.is_some(), "embedding": found }), text))
        }
        VerifyCmd::MT { t, min_len } => {
            check_t(*t)?;
            let claimed = 2 * t;
            let min_len = min_len.unwrap_or(claimed);
            let r = verify_grid_density(*t, min_len)?;
            let probe = min_len < claimed;
            let mut text = format!(
                "m-t t={t} min_len={min_len}: {}{}",
                if r.holds { "holds" } else { "fails" },
                if probe { " (tightness probe)" } else { "" }
            );
            if let Some((i, j)) = r.offending {
                text.push_str(&format!("\nedgeless pair [{}, {}] x [{}, {}]", i.start + 1, i.end, j.start + 1, j.end));
            }
            let mut j = serde_json::to_value(&r).expect("serializes");
            j["tightness_probe"] = json!(probe);
            Ok(Report::new(j, text).violated(!r.holds && !probe))
        }
        VerifyCmd::MKt { k, t } => {
            check_t(*t)?;
            if *k > 8 {
                return Err(usage("--k must be at most 8"));
            }
            let density = verify_block_density(*k, *t)?;
            let (m, layout) = block_matching(*k, *t)?;
            let (grid, _) = grid_matching(*t)?;
            let mut iso = true;
            for i in 0..*k {
                for j in i + 1..*k {
                    iso &= superblock_pair_subgraph(&m, &layout, i, j)? == *grid.graph();
                }
            }
            let chi = interval_chromatic_number(m.graph()).0;
            let ok = density.part_a && density.part_b && iso && chi == *k;
            let text = format!(
                "m-kt k={k} t={t}\npart a (pairs of length >= {}): {}{}\npart b (at most {} edges): {} (max {})\nsuperblock pairs isomorphic to m-t: {iso}\ninterval chromatic number: {chi}",
                density.threshold,
                density.part_a,
                if density.part_a_vacuous { " (vacuous)" } else { "" },
                density.part_b_bound,
                density.part_b,
                density.max_small_pair_edges,
            );
            let mut j = serde_json::to_value(&density).expect("serializes");
            j["superblock_pairs_isomorphic"] = json!(iso);
            j["chi"] = json!(chi);
            j["holds"] = json!(ok);
            Ok(Report::new(j, text).violated(!ok))
        }
        VerifyCmd::Certificate { coloring, red, blue } => {
            let chi = load_coloring(coloring)?;
            let (red, blue) = (load_graph(red)?, load_graph(blue)?);
            let red_copy = find_ordered_copy(&chi.color_class(Color::Red), &red);
            let blue_copy = find_ordered_copy(&chi.color_class(Color::Blue), &blue);
            let good = red_copy.is_none() && blue_copy.is_none();
            let mut text = (if good { "good" } else { "not good" }).to_string();
            if let Some(c) = &red_copy {
                text.push_str(&format!("\nred copy at {}", one_based(c)));
            }
            if let Some(c) = &blue_copy {
                text.push_str(&format!("\nblue copy at {}", one_based(c)));
            }
            let j = json!({ "n_vertices": chi.n_vertices(), "good": good, "red_copy": red_copy, "blue_copy": blue_copy });
            Ok(Report::new(j, text).violated(!good))
        }
        VerifyCmd::ShiftWitness { perm, witness } => {
            let pi = load_perm(perm)?;
            let w: ShiftWitness = extract(&load_json(witness)?, &["witness"], "shift witness")?;
            let valid = w.is_valid_for(&pi);
            let text = format!("{} (delta {}, length {})", if valid { "valid" } else { "invalid" }, w.delta, w.len());
            let j = json!({ "valid": valid, "delta": w.delta, "length": w.len() });
            Ok(Report::new(j, text).violated(!valid))
        }
        VerifyCmd::IntervalPair { perm, witness } => {
            let pi = load_perm(perm)?;
            let m = matching_from_permutation(&pi);
            let v = load_json(witness)?;
            let first: Interval = extract(&v, &["first", "pair.first", "min_cross.first"], "interval")?;
            let second: Interval = extract(&v, &["second", "pair.second", "min_cross.second"], "interval")?;
            let claimed: Option<usize> = extract(&v, &["count", "pair.count", "min_cross.count"], "count").ok();
            for iv in [first, second] {
                if iv.start > iv.end || iv.end > m.n_vertices() {
                    return Err(usage(format!(
                        "interval [{}, {}) outside 0..{}",
                        iv.start,
                        iv.end,
                        m.n_vertices()
                    )));
                }
            }
            let count = IntervalPair { first, second, count: 0 }.recount(&m);
            let ok = claimed.is_none_or(|c| c == count);
            let text = match claimed {
                Some(c) if c != count => format!("mismatch: claimed {c}, recounted {count}"),
                _ => format!("{count} edges"),
            };
            Ok(Report::new(json!({ "count": count, "claimed": claimed, "matches": ok }), text).violated(!ok))
        }
        VerifyCmd::ScanVerdict { coloring, matching, verdict } => {
            let chi = load_coloring(coloring)?;
            let (m, _) = load_bipartite_matching(matching)?;
            let v: ScanVerdict = extract(&load_json(verdict)?, &["verdict"], "scan verdict")?;
            let (ok, why) = check_verdict(&chi, &m, &v)?;
            let text = format!("{}{}", if ok { "valid" } else { "invalid" }, why.map(|w| format!(": {w}")).unwrap_or_default());
            Ok(Report::new(json!({ "valid": ok }), text).violated(!ok))
        }
    }
}

fn check_t(t: usize) -> Result<(), CliError> {
    if t > MAX_T {
        return Err(usage(format!("--t must be at most {MAX_T}")));
    }
    Ok(())
}

/// Deserializes the value at the first dotted path that exists, falling back
/// to the whole document.
fn extract<T: DeserializeOwned>(v: &Value, paths: &[&str], what: &str) -> Result<T, CliError> {
    let found = paths
        .iter()
        .find_map(|p| p.split('.').try_fold(v, |cur, key| cur.get(key)))
        .unwrap_or(v);
    serde_json::from_value(found.clone()).map_err(|e| usage(format!("not a {what}: {e}")))
}

fn check_verdict(
    chi: &EdgeColoring,
    m: &OrderedMatching,
    v: &ScanVerdict,
) -> Result<(bool, Option<String>), CliError> {
    let total = chi.n_vertices();
    let n = m.n_vertices() / 2;
    let in_range = |xs: &[usize]| xs.iter().all(|&x| x < total);
    Ok(match v {
        ScanVerdict::BlueTriangle { vertices: [a, b, c] } => {
            let vs = [*a, *b, *c];
            if !in_range(&vs) || a == b || b == c || a == c {
                (false, Some("vertices out of range or repeated".into()))
            } else {
                let blue = chi.get(*a, *b) == Color::Blue && chi.get(*a, *c) == Color::Blue && chi.get(*b, *c) == Color::Blue;
                (blue, (!blue).then(|| "some edge is red".into()))
            }
        }
        ScanVerdict::RedClique { center, vertices } => {
            let mut sorted = vertices.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if *center >= total || !in_range(vertices) || sorted.len() != vertices.len() || vertices.contains(center) {
                (false, Some("vertices out of range or repeated".into()))
            } else if vertices.len() < 2 * n {
                (false, Some(format!("needs {} vertices", 2 * n)))
            } else if let Some(&w) = vertices.iter().find(|&&w| chi.get(*center, w) != Color::Blue) {
                (false, Some(format!("edge to {w} is not blue")))
            } else {
                let red = vertices
                    .iter()
                    .enumerate()
                    .all(|(i, &x)| vertices[i + 1..].iter().all(|&y| chi.get(x, y) == Color::Red));
                (red, (!red).then(|| "a clique edge is blue".into()))
            }
        }
        ScanVerdict::RedMatchingCopy { rows, columns, .. } => {
            if !total.is_multiple_of(2) {
                return Err(usage("the coloring must have an even number of vertices"));
            }
            let dim = total / 2;
            if rows.len() != n || columns.len() != n || rows.iter().chain(columns).any(|&x| x >= dim) {
                return Ok((false, Some("rows or columns out of range".into())));
            }
            // Left endpoints are rows, right endpoints dim + column.
            let mut left: Vec<usize> = rows.clone();
            let mut right: Vec<usize> = columns.iter().map(|c| dim + c).collect();
            left.sort_unstable();
            right.sort_unstable();
            left.dedup();
            right.dedup();
            if left.len() != n || right.len() != n {
                return Ok((false, Some("rows or columns repeat".into())));
            }
            let place: Vec<usize> = left.iter().chain(&right).copied().collect();
            let pairs: std::collections::BTreeSet<(usize, usize)> =
                rows.iter().zip(columns).map(|(&r, &c)| (r, dim + c)).collect();
            let copy = m
                .graph()
                .edges()
                .iter()
                .all(|&(a, b)| pairs.contains(&(place[a], place[b])) && chi.get(place[a], place[b]) == Color::Red);
            (copy, (!copy).then(|| "cells do not form a red copy of the matching".into()))
        }
        ScanVerdict::BoundViolatedCounterexample => {
            let again = scan_certificate_check(chi, m, n.max(1))?;
            let ok = again.verdict == ScanVerdict::BoundViolatedCounterexample;
            (ok, (!ok).then(|| "the coloring has one of the three outcomes".into()))
        }
    })
}
