use std::path::PathBuf;

use clap::Args;
use serde_json::{json, Value};
use tetwidth_core::normal::{crush, one_vertex_pipeline, PipelineLimits};
use tetwidth_core::width::{carving_width_exact, carving_width_upper, DEFAULT_CARVING_LIMIT, MAX_CARVING_LIMIT};
use tetwidth_core::{MultiGraph, Triangulation};

use super::{domain, read, usage, with_path, write, CliError, Report};
use crate::formats::{read_coords, read_triangulation, write_certificate, write_triangulation};

#[derive(Args, Debug)]
pub struct CrushArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Normal coordinates to crush, one line `t0 t1 t2 t3 q0 q1 q2` per tetrahedron.
    #[arg(long, required_unless_present = "pipeline", conflicts_with = "pipeline")]
    pub surface: Option<PathBuf>,
    /// Crush spheres and discs until every piece has one vertex per boundary component.
    #[arg(long)]
    pub pipeline: bool,
    /// Crushed triangulation (pieces of the pipeline are written as one disjoint union).
    #[arg(short, long)]
    pub out: Option<PathBuf>,
    /// Certificate JSON for `--surface` runs.
    #[arg(long, conflicts_with = "pipeline")]
    pub certificate: Option<PathBuf>,
    /// Largest dual graph whose carving-width is computed exactly.
    #[arg(long, default_value_t = DEFAULT_CARVING_LIMIT)]
    pub limit: usize,
}

fn measure(g: &MultiGraph, limit: usize) -> Result<Value, CliError> {
    if g.node_count() <= limit {
        let (cw, _) = carving_width_exact(g, limit).map_err(domain)?;
        Ok(json!({ "congestion": cw, "method": "exact", "nodes": g.node_count() }))
    } else {
        let (cw, _) = carving_width_upper(g);
        Ok(json!({ "congestion": cw, "method": "heuristic upper bound", "nodes": g.node_count() }))
    }
}

fn describe(v: &Value) -> String {
    format!("{} ({}, {} nodes)", v["congestion"], v["method"].as_str().unwrap_or(""), v["nodes"])
}

pub fn run(args: &CrushArgs) -> Result<Report, CliError> {
    if args.limit > MAX_CARVING_LIMIT {
        return Err(usage(format!("--limit {} exceeds the hard maximum of {MAX_CARVING_LIMIT}", args.limit)));
    }
    let tri = read_triangulation(&read(&args.input)?).map_err(with_path(&args.input))?;
    let before = measure(&tri.dual_graph().map_err(domain)?, args.limit)?;
    let mut json = json!({ "ok": true, "before": before });
    let mut text = String::new();

    let result = match &args.surface {
        Some(path) => {
            let coords = read_coords(&read(path)?).map_err(with_path(path))?;
            let (crushed, cert) = crush(&tri, &coords).map_err(domain)?;
            json["certificateLength"] = json!(cert.len());
            text += &format!("crushed {} tetrahedra to {}\n", tri.tet_count(), crushed.tet_count());
            text += &format!("certificate: {} edits\n", cert.len());
            if let Some(cpath) = &args.certificate {
                write(cpath, &write_certificate(&cert))?;
            }
            crushed
        }
        None => {
            let outcome = one_vertex_pipeline(&tri, PipelineLimits::default()).map_err(domain)?;
            let mut union = Triangulation::new(0, tri.kind());
            let mut pieces = Vec::new();
            for p in &outcome.pieces {
                union.append(p);
                let boundary: Vec<usize> = p
                    .boundary_components()
                    .map_err(domain)?
                    .iter()
                    .map(|b| b.vertex_count)
                    .collect();
                let vertices = p.vertex_classes().count;
                text += &format!(
                    "piece: {} tetrahedra, {vertices} vertices, boundary vertex counts {boundary:?}\n",
                    p.tet_count()
                );
                pieces.push(json!({ "tets": p.tet_count(), "vertices": vertices, "boundaryVertexCounts": boundary }));
            }
            text += &format!("{} crushing steps{}\n", outcome.steps.len(), if outcome.capped { " (capped)" } else { "" });
            json["pieces"] = json!(pieces);
            json["steps"] = json!(outcome.steps.len());
            json["capped"] = json!(outcome.capped);
            union
        }
    };
    let after = measure(&result.dual_graph().map_err(domain)?, args.limit)?;
    text = format!("congestion before: {}\ncongestion after:  {}\n", describe(&before), describe(&after)) + &text;
    json["after"] = after;
    if let Some(path) = &args.out {
        write(path, &write_triangulation(&result))?;
    }
    Ok(Report { json, text })
}
