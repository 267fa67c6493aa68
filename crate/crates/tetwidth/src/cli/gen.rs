use std::path::PathBuf;

use clap::Subcommand;
use serde_json::json;
use tetwidth_core::gen::{
    crossing_count, dehn_fill, layered_solid_torus, subdivide_finite, td_blowup_checked, two_bridge,
    two_bridge_td, Slope,
};
use tetwidth_core::{Kind, Triangulation};

use super::{domain, read, with_path, write, Cli, CliError, OutputArgs, Report};
use crate::formats::{read_triangulation, write_dot, write_td, write_triangulation};
use crate::random::{random_triangulation, rng};

#[derive(Subcommand, Debug)]
pub enum GenCommand {
    /// Layered solid torus whose meridian meets the marking edges `|p|, |q|, |p+q|` times.
    Lst {
        #[arg(long, value_parser = parse_slope, allow_hyphen_values = true)]
        slope: (i64, i64),
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Ideal triangulation of a 2-bridge knot exterior from its continued fraction.
    Twobridge {
        #[arg(long, value_delimiter = ',', required = true)]
        coeffs: Vec<u64>,
        /// Subdivide into finite tetrahedra (28 per ideal one).
        #[arg(long)]
        finite: bool,
        /// Also write the path decomposition of width 3 (blown up with `--finite`).
        #[arg(long)]
        emit_td: Option<PathBuf>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Dehn filling of a two-triangle torus boundary component.
    Fill {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 0)]
        boundary: usize,
        #[arg(long, value_parser = parse_slope, allow_hyphen_values = true)]
        slope: (i64, i64),
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Random connected gluing (reproducible under `--seed`).
    Random {
        #[arg(long)]
        tets: usize,
        /// Number of faces left unglued (raised to match parity).
        #[arg(long, default_value_t = 0)]
        boundary_faces: usize,
        #[arg(long)]
        ideal: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
}

fn parse_slope(s: &str) -> Result<(i64, i64), String> {
    let (p, q) = s.split_once('/').ok_or_else(|| format!("expected p/q, got {s:?}"))?;
    let num = |x: &str| x.trim().parse::<i64>().map_err(|_| format!("{x:?} is not an integer"));
    Ok((num(p)?, num(q)?))
}

fn slope((p, q): (i64, i64)) -> Result<Slope, CliError> {
    Slope::new(p, q).map_err(domain)
}

pub fn run(cli: &Cli, cmd: &GenCommand) -> Result<Report, CliError> {
    let (tri, output, mut extra) = match cmd {
        GenCommand::Lst { slope: s, output } => {
            let (tri, _) = layered_solid_torus(slope(*s)?).map_err(domain)?;
            (tri, output, Vec::new())
        }
        GenCommand::Twobridge {
            coeffs,
            finite,
            emit_td,
            output,
        } => {
            let ideal = two_bridge(coeffs).map_err(domain)?;
            let td = match emit_td {
                Some(_) => Some(two_bridge_td(crossing_count(coeffs)).map_err(domain)?),
                None => None,
            };
            let (tri, td) = if *finite {
                let (fine, map) = subdivide_finite(&ideal).map_err(domain)?;
                let graph = fine.dual_graph().map_err(domain)?;
                let td = td.map(|td| td_blowup_checked(&graph, &td, &map)).transpose().map_err(domain)?;
                (fine, td)
            } else {
                (ideal, td)
            };
            let mut extra = Vec::new();
            if let (Some(path), Some(td)) = (emit_td, td) {
                write(path, &write_td(&td, tri.tet_count()))?;
                extra.push(Emitted::Td(path.clone(), td.width()));
            }
            (tri, output, extra)
        }
        GenCommand::Fill {
            input,
            boundary,
            slope: s,
            output,
        } => {
            let base = read_triangulation(&read(input)?).map_err(with_path(input))?;
            (dehn_fill(&base, *boundary, slope(*s)?).map_err(domain)?, output, Vec::new())
        }
        GenCommand::Random {
            tets,
            boundary_faces,
            ideal,
            output,
        } => {
            let kind = if *ideal { Kind::Ideal } else { Kind::Finite };
            let tri = random_triangulation(&mut rng(cli.seed), *tets, *boundary_faces, kind);
            (tri, output, Vec::new())
        }
    };
    if let Some(path) = &output.emit_dot {
        write(path, &write_dot(&tri.dual_graph().map_err(domain)?, "dual"))?;
        extra.push(Emitted::Dot(path.clone()));
    }
    finish(&tri, output, &extra)
}

enum Emitted {
    Td(PathBuf, usize),
    Dot(PathBuf),
}

fn finish(tri: &Triangulation, output: &OutputArgs, extra: &[Emitted]) -> Result<Report, CliError> {
    let file = write_triangulation(tri);
    let mut json = json!({
        "ok": true,
        "tets": tri.tet_count(),
        "boundaryFaces": tri.boundary_faces().len(),
    });
    let mut text = String::new();
    match &output.out {
        Some(path) => {
            write(path, &file)?;
            json["out"] = json!(path);
            text += &format!("wrote {} tetrahedra to {}\n", tri.tet_count(), path.display());
        }
        None => {
            json["triangulation"] = serde_json::from_str(&file).expect("writer emits JSON");
            text += &file;
        }
    }
    // With no --out, standard output carries the triangulation itself.
    for e in extra {
        match e {
            Emitted::Td(path, width) => {
                json["td"] = json!({ "path": path, "width": width });
                eprintln!("wrote decomposition of width {width} to {}", path.display());
            }
            Emitted::Dot(path) => {
                json["dot"] = json!(path);
                eprintln!("wrote dual graph to {}", path.display());
            }
        }
    }
    Ok(Report { json, text })
}
