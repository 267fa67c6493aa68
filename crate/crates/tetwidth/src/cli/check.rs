use std::path::PathBuf;

use clap::Args;
use serde_json::json;
use tetwidth_core::width::{
    bienstock_check, replay, td_check, WidthError, DEFAULT_CARVING_LIMIT, DEFAULT_TREEWIDTH_LIMIT,
};

use super::{domain, read, read_graph, usage, with_path, CliError, Report};
use crate::formats::{read_certificate, read_td};

#[derive(Args, Debug)]
pub struct CheckArgs {
    /// Tree decomposition (`.td`) to validate against `--graph`.
    #[arg(long, requires = "graph", conflicts_with_all = ["certificate", "bienstock"])]
    pub td: Option<PathBuf>,
    #[arg(long)]
    pub graph: Option<PathBuf>,
    /// Certificate JSON to replay on `--before`, expecting `--after`.
    #[arg(long, requires_all = ["before", "after"], conflicts_with = "bienstock")]
    pub certificate: Option<PathBuf>,
    #[arg(long, requires = "certificate")]
    pub before: Option<PathBuf>,
    #[arg(long, requires = "certificate")]
    pub after: Option<PathBuf>,
    /// Compare exact carving-width and treewidth of `--graph` against the Bienstock bounds.
    #[arg(long, requires = "graph")]
    pub bienstock: bool,
    #[arg(long, default_value_t = DEFAULT_CARVING_LIMIT)]
    pub cw_limit: usize,
    #[arg(long, default_value_t = DEFAULT_TREEWIDTH_LIMIT)]
    pub tw_limit: usize,
}

pub fn run(args: &CheckArgs) -> Result<Report, CliError> {
    if let Some(td_path) = &args.td {
        let graph_path = args.graph.as_ref().expect("clap enforces --graph");
        let g = read_graph(graph_path)?;
        let (td, n) = read_td(&read(td_path)?).map_err(with_path(td_path))?;
        if n != g.node_count() {
            return Err(domain(format!("decomposition is for {n} nodes, graph has {}", g.node_count())));
        }
        td_check(&g, &td).map_err(|v| domain(format!("invalid decomposition: {v}")))?;
        return Ok(Report {
            json: json!({ "ok": true, "width": td.width(), "bags": td.bags.len() }),
            text: format!("valid decomposition: {} bags, width {}\n", td.bags.len(), td.width()),
        });
    }
    if let Some(cert_path) = &args.certificate {
        let cert = read_certificate(&read(cert_path)?).map_err(with_path(cert_path))?;
        let before = read_graph(args.before.as_ref().expect("clap enforces --before"))?;
        let after = read_graph(args.after.as_ref().expect("clap enforces --after"))?;
        let result = replay(&before, &cert, |_, _| ()).map_err(|e| match e {
            WidthError::InapplicableStep { step, edit } => {
                domain(format!("replay diverges at step {step}: {edit:?} cannot be applied"))
            }
            e => domain(e),
        })?;
        if result != after {
            return Err(domain(format!(
                "replay diverges after the last step ({}): result has {} nodes and {} arcs, expected {} nodes and {} arcs{}",
                cert.len(),
                result.node_count(),
                result.arc_count(),
                after.node_count(),
                after.arc_count(),
                first_difference(result.arcs(), after.arcs())
            )));
        }
        return Ok(Report {
            json: json!({ "ok": true, "steps": cert.len() }),
            text: format!("certificate replays: {} steps reproduce the expected graph\n", cert.len()),
        });
    }
    if args.bienstock {
        let g = read_graph(args.graph.as_ref().expect("clap enforces --graph"))?;
        let r = bienstock_check(&g, args.cw_limit, args.tw_limit).map_err(domain)?;
        let lower = match r.lower_holds {
            Some(true) => "holds",
            Some(false) => "FAILS",
            None => "skipped (no node has two distinct neighbours)",
        };
        let text = format!(
            "tw = {}, cw = {}, max distinct degree = {}\n(2/3)(tw+1) <= cw: {lower}\ncw <= d(tw+1): {}\n",
            r.treewidth,
            r.carving_width,
            r.max_degree,
            if r.upper_holds { "holds" } else { "FAILS" }
        );
        if !r.holds() {
            return Err(domain(format!("Bienstock bounds violated:\n{text}")));
        }
        return Ok(Report {
            json: json!({
                "ok": true,
                "treewidth": r.treewidth,
                "carvingWidth": r.carving_width,
                "maxDegree": r.max_degree,
                "lowerHolds": r.lower_holds,
                "upperHolds": r.upper_holds,
            }),
            text,
        });
    }
    Err(usage("check needs --td, --certificate or --bienstock"))
}

fn first_difference(got: &[(usize, usize)], want: &[(usize, usize)]) -> String {
    match got.iter().zip(want).position(|(a, b)| a != b) {
        Some(i) => format!("; first differing arc: {:?} vs {:?}", got[i], want[i]),
        None => String::new(),
    }
}
