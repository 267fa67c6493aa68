//! Carving-width: exact subset dynamic programme and heuristics.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use super::embedding::{caterpillar, congestion, TreeBuilder, TreeEmbedding};
use super::WidthError;
use crate::graph::MultiGraph;

pub const DEFAULT_CARVING_LIMIT: usize = 12;
/// Hard cap: the tables hold `2^n` entries.
pub const MAX_CARVING_LIMIT: usize = 24;

/// Distinct crossing pairs for every subset of nodes.
fn cut_table(masks: &[u64]) -> Vec<u16> {
    let n = masks.len();
    let full = (1u64 << n) - 1;
    let mut cut = alloc::vec![0u16; 1 << n];
    for s in 1..=full {
        let low = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        // Moving `low` into `rest` adds its arcs leaving s and removes its
        // arcs into rest.
        let out = (masks[low] & !s & full).count_ones() as i32;
        let inside = (masks[low] & rest).count_ones() as i32;
        cut[s as usize] = (cut[rest as usize] as i32 + out - inside) as u16;
    }
    cut
}

/// Exact carving-width by dynamic programming over node subsets. Returns
/// the optimum together with an embedding attaining it.
pub fn carving_width_exact(graph: &MultiGraph, limit: usize) -> Result<(usize, TreeEmbedding), WidthError> {
    let n = graph.node_count();
    let limit = limit.min(MAX_CARVING_LIMIT);
    if n > limit {
        return Err(WidthError::SizeLimit { nodes: n, limit });
    }
    if n <= 2 {
        let order: Vec<usize> = (0..n).collect();
        let e = caterpillar(&order);
        return Ok((congestion(graph, &e)?, e));
    }
    let masks = graph.adjacency_masks();
    let cut = cut_table(&masks);
    let size = 1usize << n;
    let mut cost = alloc::vec![u16::MAX; size];
    let mut split = alloc::vec![0u32; size];
    // Subsets in increasing numeric order: every proper subset of s is
    // smaller than s.
    for s in 1..size {
        if s & (s - 1) == 0 {
            cost[s] = 0;
            continue;
        }
        let low = s & s.wrapping_neg();
        let rest = s ^ low;
        let mut best = u16::MAX;
        let mut arg = 0;
        // A ranges over subsets of s containing `low`, other than s itself.
        let mut sub = (rest.wrapping_sub(1)) & rest;
        loop {
            let a = sub | low;
            let b = s ^ a;
            let c = cut[a].max(cut[b]).max(cost[a]).max(cost[b]);
            if c < best {
                best = c;
                arg = a;
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        cost[s] = best;
        split[s] = arg as u32;
    }

    let full = size - 1;
    let mut b = TreeBuilder::new(n);
    fn build(b: &mut TreeBuilder, split: &[u32], s: usize) -> usize {
        if s & (s - 1) == 0 {
            return b.leaf(s.trailing_zeros() as usize);
        }
        let a = split[s] as usize;
        let x = build(b, split, a);
        let y = build(b, split, s ^ a);
        b.merge(x, y)
    }
    let a = split[full] as usize;
    let x = build(&mut b, &split, a);
    let y = build(&mut b, &split, full ^ a);
    b.arc(x, y);
    Ok((cost[full] as usize, b.finish()))
}

fn bfs_order(graph: &MultiGraph, nb: &[Vec<usize>], start: usize) -> Vec<usize> {
    let n = graph.node_count();
    let mut seen = alloc::vec![false; n];
    let mut order = Vec::with_capacity(n);
    for s in core::iter::once(start).chain(0..n) {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &y in &nb[x] {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    order
}

/// Recursive bisection: split by a breadth-first sweep, improve the split by
/// single-node moves, recurse on both halves.
fn bisection(graph: &MultiGraph, nb: &[Vec<usize>]) -> TreeEmbedding {
    let n = graph.node_count();
    let mut b = TreeBuilder::new(n);
    let all: Vec<usize> = (0..n).collect();
    fn cross(nb: &[Vec<usize>], side: &[u8], set: &[usize], which: u8) -> usize {
        set.iter()
            .filter(|&&v| side[v] == which)
            .map(|&v| nb[v].iter().filter(|&&w| side[w] != which).count())
            .sum()
    }
    fn rec(b: &mut TreeBuilder, nb: &[Vec<usize>], set: Vec<usize>, side: &mut Vec<u8>) -> usize {
        if set.len() == 1 {
            return b.leaf(set[0]);
        }
        // Sweep from the first node, restricted to `set`.
        for &v in &set {
            side[v] = 2;
        }
        let mut order = Vec::with_capacity(set.len());
        for &s in &set {
            if side[s] != 2 {
                continue;
            }
            side[s] = 3;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                order.push(x);
                for &y in &nb[x] {
                    if side[y] == 2 {
                        side[y] = 3;
                        queue.push_back(y);
                    }
                }
            }
        }
        let half = order.len() / 2;
        for (i, &v) in order.iter().enumerate() {
            side[v] = (i >= half) as u8;
        }
        // Greedy moves that lower the larger of the two boundary loads while
        // keeping both sides non-empty.
        let score = |side: &[u8]| {
            let a = cross(nb, side, &set, 0);
            let b = cross(nb, side, &set, 1);
            a.max(b)
        };
        let mut current = score(side);
        for _ in 0..set.len() {
            let mut improved = false;
            for &v in &set {
                let count0 = set.iter().filter(|&&w| side[w] == 0).count();
                if (side[v] == 0 && count0 == 1) || (side[v] == 1 && count0 == set.len() - 1) {
                    continue;
                }
                side[v] ^= 1;
                let s = score(side);
                if s < current {
                    current = s;
                    improved = true;
                } else {
                    side[v] ^= 1;
                }
            }
            if !improved {
                break;
            }
        }
        let (left, right): (Vec<usize>, Vec<usize>) = set.iter().partition(|&&v| side[v] == 0);
        let x = rec(b, nb, left, side);
        let y = rec(b, nb, right, side);
        b.merge(x, y)
    }
    if n <= 2 {
        return caterpillar(&all);
    }
    let mut side = alloc::vec![0u8; n];
    // Top split: build both halves, then join their roots directly.
    let root = rec(&mut b, nb, all, &mut side);
    let mut e = b.finish();
    // `root` has degree two; contract it into an arc.
    let arcs: Vec<(usize, usize)> = e.tree_arcs.iter().copied().filter(|&(a, _)| a == root).collect();
    let (x, y) = (arcs[0].1, arcs[1].1);
    e.tree_arcs.retain(|&(a, _)| a != root);
    e.tree_arcs.push((x, y));
    // Renumber to close the gap left by `root`.
    let fix = |t: usize| if t > root { t - 1 } else { t };
    e.tree_nodes -= 1;
    e.tree_arcs.iter_mut().for_each(|a| *a = (fix(a.0), fix(a.1)));
    e.leaf_of.iter_mut().for_each(|l| *l = fix(*l));
    e
}

/// Swaps pairs of leaf labels while that lowers (congestion, number of
/// arcs at congestion).
fn improve_by_swaps(graph: &MultiGraph, mut e: TreeEmbedding, max_rounds: usize) -> TreeEmbedding {
    let n = graph.node_count();
    let score = |e: &TreeEmbedding| {
        let loads = e.arc_loads(graph, Default::default()).unwrap_or_default();
        let m = loads.iter().copied().max().unwrap_or(0);
        (m, loads.iter().filter(|&&x| x == m).count())
    };
    let mut best = score(&e);
    for _ in 0..max_rounds {
        let mut improved = false;
        for u in 0..n {
            for v in u + 1..n {
                e.leaf_of.swap(u, v);
                let s = score(&e);
                if s < best {
                    best = s;
                    improved = true;
                } else {
                    e.leaf_of.swap(u, v);
                }
            }
        }
        if !improved {
            break;
        }
    }
    e
}

/// Upper bound on carving-width with a witness: the best of several
/// caterpillars along breadth-first orders and a recursive bisection,
/// followed by local leaf swaps on small graphs.
pub fn carving_width_upper(graph: &MultiGraph) -> (usize, TreeEmbedding) {
    let n = graph.node_count();
    let nb: Vec<Vec<usize>> = (0..n).map(|v| graph.neighbours(v)).collect();
    let mut candidates = Vec::new();
    let starts: Vec<usize> = if n <= 64 {
        (0..n).collect()
    } else {
        // a few spread-out starting points, including a minimum-degree node
        let min_deg = (0..n).min_by_key(|&v| nb[v].len()).unwrap_or(0);
        let mut s = alloc::vec![0, min_deg, n / 2, n - 1];
        s.dedup();
        s
    };
    for &s in &starts {
        candidates.push(caterpillar(&bfs_order(graph, &nb, s)));
    }
    if n == 0 {
        candidates.push(TreeEmbedding::default());
    }
    if n > 2 {
        candidates.push(bisection(graph, &nb));
    }
    let mut best: Option<(usize, TreeEmbedding)> = None;
    for e in candidates {
        let c = congestion(graph, &e).expect("heuristic embeddings are valid");
        if best.as_ref().map_or(true, |(b, _)| c < *b) {
            best = Some((c, e));
        }
    }
    let (mut value, mut emb) = best.expect("at least one candidate");
    if n > 3 && n <= 60 {
        let e = improve_by_swaps(graph, emb.clone(), 4);
        let c = congestion(graph, &e).expect("swaps keep the tree valid");
        if c < value {
            value = c;
            emb = e;
        }
    }
    (value, emb)
}
