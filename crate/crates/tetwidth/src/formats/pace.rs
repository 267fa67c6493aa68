//! PACE 2017 `.gr` graphs and `.td` tree decompositions (1-indexed).

use std::fmt::Write;

use tetwidth_core::width::TreeDecomposition;
use tetwidth_core::MultiGraph;

use super::{content_lines, parse_num, syntax, FormatError};

fn header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    tag: [&str; 2],
    fields: usize,
) -> Result<Vec<usize>, FormatError> {
    let (line, l) = lines
        .next()
        .ok_or_else(|| FormatError::Invalid(format!("missing `{} {}` header", tag[0], tag[1])))?;
    let toks: Vec<&str> = l.split_whitespace().collect();
    if toks.len() != 2 + fields || toks[..2] != tag {
        return Err(syntax(line, format!("expected `{} {}` followed by {fields} numbers", tag[0], tag[1])));
    }
    toks[2..].iter().map(|t| parse_num(line, t)).collect()
}

fn node(line: usize, tok: &str, n: usize, what: &str) -> Result<usize, FormatError> {
    let v: usize = parse_num(line, tok)?;
    if v == 0 || v > n {
        return Err(syntax(line, format!("{what} {v} outside 1..={n}")));
    }
    Ok(v - 1)
}

/// Parallel arcs are repeated lines; loops are `u u`.
pub fn read_gr(text: &str) -> Result<MultiGraph, FormatError> {
    let mut lines = content_lines(text, "c");
    let h = header(&mut lines, ["p", "tw"], 2)?;
    let (n, m) = (h[0], h[1]);
    let mut g = MultiGraph::new(n);
    for (line, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(syntax(line, "expected an arc `u v`"));
        }
        g.add_arc(node(line, toks[0], n, "node")?, node(line, toks[1], n, "node")?);
    }
    if g.arc_count() != m {
        return Err(FormatError::Invalid(format!("header announces {m} arcs, found {}", g.arc_count())));
    }
    Ok(g)
}

pub fn write_gr(graph: &MultiGraph) -> String {
    let mut out = format!("p tw {} {}\n", graph.node_count(), graph.arc_count());
    for &(u, v) in graph.arcs() {
        writeln!(out, "{} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// Returns the decomposition and the node count from the header.
pub fn read_td(text: &str) -> Result<(TreeDecomposition, usize), FormatError> {
    let mut lines = content_lines(text, "c");
    let h = header(&mut lines, ["s", "td"], 3)?;
    let (count, size, n) = (h[0], h[1], h[2]);
    let mut bags: Vec<Option<Vec<usize>>> = vec![None; count];
    let mut arcs = Vec::new();
    for (line, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.first() == Some(&"b") {
            let i = node(line, toks.get(1).ok_or_else(|| syntax(line, "bag line without index"))?, count, "bag")?;
            if bags[i].is_some() {
                return Err(syntax(line, format!("bag {} listed twice", i + 1)));
            }
            bags[i] = Some(toks[2..].iter().map(|t| node(line, t, n, "node")).collect::<Result<_, _>>()?);
        } else if toks.len() == 2 {
            arcs.push((node(line, toks[0], count, "bag")?, node(line, toks[1], count, "bag")?));
        } else {
            return Err(syntax(line, "expected `b i v...` or a tree arc `i j`"));
        }
    }
    let bags: Vec<Vec<usize>> = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| FormatError::Invalid(format!("bag {} is never listed", i + 1))))
        .collect::<Result<_, _>>()?;
    let td = TreeDecomposition::new(bags, arcs);
    let largest = td.bags.iter().map(Vec::len).max().unwrap_or(0);
    if largest != size {
        return Err(FormatError::Invalid(format!("header announces bag size {size}, largest bag has {largest}")));
    }
    Ok((td, n))
}

/// `n` is the node count of the decomposed graph.
pub fn write_td(td: &TreeDecomposition, n: usize) -> String {
    let largest = td.bags.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = format!("s td {} {largest} {n}\n", td.bags.len());
    for (i, bag) in td.bags.iter().enumerate() {
        write!(out, "b {}", i + 1).unwrap();
        for v in bag {
            write!(out, " {}", v + 1).unwrap();
        }
        out.push('\n');
    }
    for &(a, b) in &td.arcs {
        writeln!(out, "{} {}", a + 1, b + 1).unwrap();
    }
    out
}
