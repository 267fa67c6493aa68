use std::fmt::Write;

use tetwidth_core::normal::NormalCoords;

use super::{content_lines, parse_num, syntax, FormatError};

/// One line per tetrahedron: `t0 t1 t2 t3 q0 q1 q2`. Lines starting with
/// `#` are comments.
pub fn read_coords(text: &str) -> Result<NormalCoords, FormatError> {
    let mut v = Vec::new();
    for (line, l) in content_lines(text, "#") {
        let row: Vec<u64> = l.split_whitespace().map(|t| parse_num(line, t)).collect::<Result<_, _>>()?;
        if row.len() != 7 {
            return Err(syntax(line, format!("expected 7 coordinates, found {}", row.len())));
        }
        v.extend(row);
    }
    Ok(NormalCoords::from_vec(v))
}

pub fn write_coords(coords: &NormalCoords) -> String {
    let mut out = String::new();
    for row in coords.as_slice().chunks(7) {
        let cells: Vec<String> = row.iter().map(u64::to_string).collect();
        writeln!(out, "{}", cells.join(" ")).unwrap();
    }
    out
}
