use serde::{Deserialize, Serialize};
use tetwidth_core::normal::{CrushCertificate, Edit};

use super::FormatError;

#[derive(Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "camelCase", deny_unknown_fields)]
enum Op {
    Lift { u: usize, v: usize, w: usize },
    RemoveNode { v: usize },
    RemoveArc { u: usize, v: usize },
}

pub fn read_certificate(text: &str) -> Result<CrushCertificate, FormatError> {
    let ops: Vec<Op> = serde_json::from_str(text)?;
    let edits = ops
        .into_iter()
        .map(|op| match op {
            Op::Lift { u, v, w } => Edit::Lift { u, v, w },
            Op::RemoveNode { v } => Edit::RemoveNode { v },
            Op::RemoveArc { u, v } => Edit::RemoveArc { u, v },
        })
        .collect();
    Ok(CrushCertificate { edits })
}

/// One edit per line.
pub fn write_certificate(cert: &CrushCertificate) -> String {
    if cert.is_empty() {
        return "[]\n".into();
    }
    let lines: Vec<String> = cert
        .edits
        .iter()
        .map(|e| {
            let op = match *e {
                Edit::Lift { u, v, w } => Op::Lift { u, v, w },
                Edit::RemoveNode { v } => Op::RemoveNode { v },
                Edit::RemoveArc { u, v } => Op::RemoveArc { u, v },
            };
            format!("  {}", serde_json::to_string(&op).expect("plain integers serialise"))
        })
        .collect();
    format!("[\n{}\n]\n", lines.join(",\n"))
}
