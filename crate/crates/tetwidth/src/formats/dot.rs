use std::fmt::Write;

use tetwidth_core::MultiGraph;

use super::{content_lines, parse_num, syntax, FormatError};

/// Graphviz text listing every node, then every arc copy (loops as `v -- v`).
pub fn write_dot(graph: &MultiGraph, name: &str) -> String {
    let mut out = format!("graph {name} {{\n");
    for v in 0..graph.node_count() {
        writeln!(out, "  {v};").unwrap();
    }
    for &(u, v) in graph.arcs() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Reads the subset of DOT produced by [`write_dot`]: node statements must
/// declare `0..n` in order.
pub fn read_dot(text: &str) -> Result<MultiGraph, FormatError> {
    let mut lines = content_lines(text, "//");
    match lines.next() {
        Some((_, l)) if l.starts_with("graph") && l.ends_with('{') => {}
        Some((line, _)) => return Err(syntax(line, "expected `graph <name> {`")),
        None => return Err(FormatError::Invalid("empty DOT file".into())),
    }
    let mut n = 0;
    let mut arcs = Vec::new();
    let mut closed = false;
    for (line, l) in lines {
        if closed {
            return Err(syntax(line, "text after the closing brace"));
        }
        if l == "}" {
            closed = true;
            continue;
        }
        let stmt = l.strip_suffix(';').ok_or_else(|| syntax(line, "missing `;`"))?;
        match stmt.split_once("--") {
            Some((a, b)) => {
                let (u, v): (usize, usize) = (parse_num(line, a.trim())?, parse_num(line, b.trim())?);
                if u >= n || v >= n {
                    return Err(syntax(line, "arc mentions an undeclared node"));
                }
                arcs.push((u, v));
            }
            None => {
                if parse_num::<usize>(line, stmt.trim())? != n {
                    return Err(syntax(line, format!("expected node {n}")));
                }
                n += 1;
            }
        }
    }
    if !closed {
        return Err(FormatError::Invalid("missing closing brace".into()));
    }
    Ok(MultiGraph::from_arcs(n, &arcs))
}
