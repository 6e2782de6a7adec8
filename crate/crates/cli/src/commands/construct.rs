use ordram_core::constructions::{block_matching, grid_matching, BlockLayout};
use ordram_core::matching::matching_from_permutation;
use ordram_core::rng::substream;
use ordram_core::{Interval, OrderedGraph, Permutation};
use serde_json::{json, Value};

use super::{edge_rows, graph_json, load_perm, write_file, Ctx};
use crate::cli::ConstructCmd;
use crate::formats::{write_graph, write_permutation};
use crate::report::{usage, CliError, Report};

/// Largest vertex count a construction may allocate.
const MAX_VERTICES: usize = 20_000_000;

pub fn run(cmd: &ConstructCmd, ctx: &Ctx) -> Result<Report, CliError> {
    match cmd {
        ConstructCmd::MT { t, layout_out } => {
            check_size(t.checked_mul(*t).and_then(|x| x.checked_mul(2)))?;
            let (m, layout) = grid_matching(*t)?;
            let layout = serde_json::to_value(&layout).expect("layout serializes");
            graph_report(m.graph(), json!({ "construction": "m-t", "t": t }), layout, layout_out.as_deref())
        }
        ConstructCmd::MKt { k, t, layout_out } => {
            check_size(
                k.checked_mul(k.saturating_sub(1))
                    .and_then(|x| x.checked_mul(*t))
                    .and_then(|x| x.checked_mul(*t)),
            )?;
            let (m, layout) = block_matching(*k, *t)?;
            graph_report(
                m.graph(),
                json!({ "construction": "m-kt", "k": k, "t": t }),
                block_layout_json(&layout),
                layout_out.as_deref(),
            )
        }
        ConstructCmd::FromPerm { perm } => {
            let pi = load_perm(perm)?;
            let m = matching_from_permutation(&pi);
            let head = json!({ "construction": "from-perm", "permutation": pi.images() });
            graph_report(m.graph(), head, Value::Null, None)
        }
        ConstructCmd::RandomPerm { n, index } => {
            check_size(Some(*n))?;
            let pi = Permutation::random(*n, &mut substream(ctx.seed, *index));
            let j = json!({ "n": n, "seed": ctx.seed, "index": index, "permutation": pi.images() });
            let rows = pi.images().iter().enumerate().map(|(i, v)| vec![i.to_string(), v.to_string()]).collect();
            Ok(Report::new(j, write_permutation(&pi)).with_table(&["i", "image"], rows))
        }
    }
}

fn check_size(vertices: Option<usize>) -> Result<(), CliError> {
    match vertices {
        Some(v) if v <= MAX_VERTICES => Ok(()),
        _ => Err(usage(format!("construction would exceed {MAX_VERTICES} vertices"))),
    }
}

fn graph_report(
    g: &OrderedGraph,
    head: Value,
    layout: Value,
    layout_out: Option<&std::path::Path>,
) -> Result<Report, CliError> {
    let mut j = graph_json(g);
    j["n_edges"] = json!(g.n_edges());
    if let Value::Object(h) = head {
        j.as_object_mut().expect("object").extend(h);
    }
    if !layout.is_null() {
        if let Some(p) = layout_out {
            let mut s = serde_json::to_string_pretty(&layout).expect("layout serializes");
            s.push('\n');
            write_file(p, &s)?;
        }
        j["layout"] = layout;
    }
    Ok(Report::new(j, write_graph(g)).with_table(&["u", "v"], edge_rows(g)))
}

/// The derived layout plus the vertex ranges of every superblock.
fn block_layout_json(layout: &BlockLayout) -> Value {
    let mut j = serde_json::to_value(layout).expect("layout serializes");
    let ranges: Vec<Value> = layout
        .superblocks
        .iter()
        .flatten()
        .map(|s| {
            let r: Vec<Interval> = s.blocks.iter().map(|&b| layout.blocks[s.class][b]).collect();
            json!({ "class": s.class, "partner": s.partner, "ranges": r })
        })
        .collect();
    j["superblock_ranges"] = Value::Array(ranges);
    j
}
