use serde::{Deserialize, Serialize};
use tetwidth_core::tri::FaceGluing;
use tetwidth_core::{Kind, Perm4, Triangulation};

use super::FormatError;

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum KindName {
    Finite,
    Ideal,
}

type Row = (usize, usize, usize, usize, [usize; 4]);

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TriFile {
    tets: usize,
    kind: KindName,
    gluings: Vec<Row>,
}

/// Parses the gluing-table JSON (each face pair listed once) and validates
/// the result.
pub fn read_triangulation(text: &str) -> Result<Triangulation, FormatError> {
    let file: TriFile = serde_json::from_str(text)?;
    let kind = match file.kind {
        KindName::Finite => Kind::Finite,
        KindName::Ideal => Kind::Ideal,
    };
    let mut pairs = Vec::with_capacity(file.gluings.len());
    for (src_tet, src_face, dst_tet, dst_face, images) in file.gluings {
        let perm = Perm4::from_images(images).ok_or(FormatError::Permutation(images))?;
        pairs.push(FaceGluing {
            src_tet,
            src_face,
            dst_tet,
            dst_face,
            perm,
        });
    }
    let tri = Triangulation::from_pairs(file.tets, kind, &pairs);
    tri.check()?;
    Ok(tri)
}

/// One gluing per line.
pub fn write_triangulation(tri: &Triangulation) -> String {
    let kind = match tri.kind() {
        Kind::Finite => "finite",
        Kind::Ideal => "ideal",
    };
    let rows: Vec<String> = tri
        .gluing_pairs()
        .iter()
        .map(|g| {
            let images = g.perm.images().map(usize::from);
            let row: Row = (g.src_tet, g.src_face, g.dst_tet, g.dst_face, images);
            format!("    {}", serde_json::to_string(&row).expect("plain integers serialise"))
        })
        .collect();
    let body = if rows.is_empty() {
        "[]".to_string()
    } else {
        format!("[\n{}\n  ]", rows.join(",\n"))
    };
    format!("{{\n  \"tets\": {},\n  \"kind\": \"{kind}\",\n  \"gluings\": {body}\n}}\n", tri.tet_count())
}
