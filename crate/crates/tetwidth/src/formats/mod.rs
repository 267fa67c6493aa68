//! Readers and writers for every file the command line tool touches.
//!
//! Writers produce text that the matching reader turns back into an equal
//! value.

mod certificate;
mod coords;
mod dot;
mod embedding;
mod metric;
mod pace;
mod triangulation;

pub use certificate::{read_certificate, write_certificate};
pub use coords::{read_coords, write_coords};
pub use dot::{read_dot, write_dot};
pub use embedding::{read_embedding, write_embedding};
pub use metric::{read_metric, write_metric};
pub use pace::{read_gr, read_td, write_gr, write_td};
pub use triangulation::{read_triangulation, write_triangulation};

use tetwidth_core::hypbounds::HypError;
use tetwidth_core::TriError;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("CSV: {0}")]
    Csv(#[from] csv::Error),
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("{0:?} is not a permutation of 0..4")]
    Permutation([usize; 4]),
    #[error(transparent)]
    Triangulation(#[from] TriError),
    #[error(transparent)]
    Metric(#[from] HypError),
    #[error("{0}")]
    Invalid(String),
}

pub(crate) fn syntax(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, msg: msg.into() }
}

/// Non-empty lines with their 1-based numbers, skipping lines that start
/// with `comment`.
pub(crate) fn content_lines<'a>(text: &'a str, comment: &'a str) -> impl Iterator<Item = (usize, &'a str)> + 'a {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(move |(_, l)| !l.is_empty() && !l.starts_with(comment))
}

pub(crate) fn parse_num<T: std::str::FromStr>(line: usize, tok: &str) -> Result<T, FormatError> {
    tok.parse().map_err(|_| syntax(line, format!("expected a number, found {tok:?}")))
}
