use std::path::{Path, PathBuf};

use clap::Args;
use rayon::prelude::*;
use serde_json::{json, Value};
use tetwidth_core::width::{
    carving_width_exact, carving_width_upper, congestion, congestion_with, td_check, treewidth_exact,
    treewidth_lower, treewidth_upper, ArcCounting, DEFAULT_CARVING_LIMIT, DEFAULT_TREEWIDTH_LIMIT,
    MAX_CARVING_LIMIT, MAX_TREEWIDTH_LIMIT,
};
use tetwidth_core::MultiGraph;

use super::{domain, read_graph, usage, write, Cli, CliError, Mode, Param, Report};
use crate::formats::{write_embedding, write_td};

#[derive(Args, Debug)]
pub struct WidthArgs {
    #[arg(long, value_enum)]
    pub param: Param,
    #[arg(long, value_enum, default_value = "exact")]
    pub mode: Mode,
    /// Largest graph the exact solver accepts (defaults: 12 for cw, 20 for tw).
    #[arg(long)]
    pub limit: Option<usize>,
    /// Write the witness: embedding JSON for cw, `.td` for tw. Needs a single input.
    #[arg(long)]
    pub witness: Option<PathBuf>,
    /// Also report the witness's congestion when parallel arcs each count.
    #[arg(long)]
    pub count_multiplicity: bool,
    /// Graphs (`.gr`, `.dot`) or triangulations (`.json`).
    #[arg(required = true)]
    pub inputs: Vec<PathBuf>,
}

struct Outcome {
    json: Value,
    text: String,
    /// Witness file contents.
    witness: String,
}

fn limit(args: &WidthArgs) -> Result<usize, CliError> {
    let (default, max) = match args.param {
        Param::Cw => (DEFAULT_CARVING_LIMIT, MAX_CARVING_LIMIT),
        Param::Tw => (DEFAULT_TREEWIDTH_LIMIT, MAX_TREEWIDTH_LIMIT),
    };
    let limit = args.limit.unwrap_or(default);
    if limit > max {
        return Err(usage(format!("--limit {limit} exceeds the hard maximum of {max}")));
    }
    Ok(limit)
}

pub fn run(cli: &Cli, args: &WidthArgs) -> Result<Report, CliError> {
    if args.witness.is_some() && args.inputs.len() > 1 {
        return Err(usage("--witness needs exactly one input"));
    }
    let limit = limit(args)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build()
        .map_err(domain)?;
    let results: Vec<Result<Outcome, CliError>> =
        pool.install(|| args.inputs.par_iter().map(|p| one(p, args, limit)).collect());
    let mut json = Vec::new();
    let mut text = String::new();
    for r in results {
        let r = r?;
        if let Some(path) = &args.witness {
            write(path, &r.witness)?;
        }
        json.push(r.json);
        text += &r.text;
    }
    let json = if json.len() == 1 { json.pop().unwrap() } else { Value::Array(json) };
    Ok(Report { json, text })
}

fn one(path: &Path, args: &WidthArgs, limit: usize) -> Result<Outcome, CliError> {
    let g = read_graph(path)?;
    let name = path.display();
    let exact = args.mode == Mode::Exact;
    if exact && g.node_count() > limit {
        return Err(domain(format!(
            "{name}: {} nodes exceed the exact-solver limit of {limit}; raise --limit or use --mode heuristic",
            g.node_count()
        )));
    }
    let mut json = json!({
        "input": path,
        "nodes": g.node_count(),
        "arcs": g.arc_count(),
        "param": match args.param { Param::Cw => "cw", Param::Tw => "tw" },
        "mode": if exact { "exact" } else { "heuristic" },
    });
    let (text, witness) = match args.param {
        Param::Cw => carving(&g, exact, limit, args.count_multiplicity, &mut json)?,
        Param::Tw => tree(&g, exact, limit, &mut json)?,
    };
    Ok(Outcome {
        json,
        text: format!("{name}: {text}\n"),
        witness,
    })
}

fn carving(g: &MultiGraph, exact: bool, limit: usize, multiplicity: bool, json: &mut Value) -> Result<(String, String), CliError> {
    let (value, emb) = if exact {
        carving_width_exact(g, limit).map_err(domain)?
    } else {
        carving_width_upper(g)
    };
    // The witness must reproduce the reported value.
    let check = congestion(g, &emb).map_err(domain)?;
    if check != value {
        return Err(domain(format!("internal error: witness has congestion {check}, reported {value}")));
    }
    json["value"] = json!(value);
    json["witnessValid"] = json!(true);
    let mut text = if exact {
        format!("cw = {value} (exact)")
    } else {
        let lower = g.max_distinct_degree();
        json["lower"] = json!(lower);
        json["degreeConvention"] = json!("distinct neighbours");
        format!("cw <= {value}, cw >= {lower} (heuristic; degree counts distinct neighbours)")
    };
    if multiplicity {
        let m = congestion_with(g, &emb, ArcCounting::Multiplicity).map_err(domain)?;
        json["witnessCongestionWithMultiplicity"] = json!(m);
        text += &format!("; witness congestion counting parallel arcs = {m}");
    }
    Ok((text, write_embedding(&emb)))
}

fn tree(g: &MultiGraph, exact: bool, limit: usize, json: &mut Value) -> Result<(String, String), CliError> {
    let (value, td) = if exact {
        treewidth_exact(g, limit).map_err(domain)?
    } else {
        treewidth_upper(g)
    };
    td_check(g, &td).map_err(|v| domain(format!("internal error: witness decomposition invalid: {v}")))?;
    json["value"] = json!(value);
    json["witnessValid"] = json!(true);
    let text = if exact {
        format!("tw = {value} (exact)")
    } else {
        let lower = treewidth_lower(g);
        json["lower"] = json!(lower);
        format!("tw <= {value}, tw >= {lower} (heuristic)")
    };
    Ok((text, write_td(&td, g.node_count())))
}
