//! Tree decompositions and treewidth.

use alloc::vec::Vec;
use core::fmt;

use alloc::collections::BTreeSet;
use hashbrown::HashMap;

use super::WidthError;
use crate::graph::MultiGraph;

pub const DEFAULT_TREEWIDTH_LIMIT: usize = 20;
pub const MAX_TREEWIDTH_LIMIT: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TreeDecomposition {
    /// Sorted bag contents.
    pub bags: Vec<Vec<usize>>,
    pub arcs: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    /// Largest bag size minus one (zero when every bag is empty).
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0).saturating_sub(1)
    }

    pub fn new(mut bags: Vec<Vec<usize>>, arcs: Vec<(usize, usize)>) -> Self {
        for b in &mut bags {
            b.sort_unstable();
            b.dedup();
        }
        Self { bags, arcs }
    }
}

/// Why a decomposition fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TdViolation {
    NotATree,
    NodeOutOfRange { node: usize },
    NodeMissing { node: usize },
    ArcUncovered { u: usize, v: usize },
    Disconnected { node: usize },
}

impl fmt::Display for TdViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TdViolation::NotATree => f.write_str("bags are not arranged in a tree"),
            TdViolation::NodeOutOfRange { node } => write!(f, "bag mentions node {node}, which the graph lacks"),
            TdViolation::NodeMissing { node } => write!(f, "node {node} is in no bag"),
            TdViolation::ArcUncovered { u, v } => write!(f, "no bag contains both ends of arc ({u}, {v})"),
            TdViolation::Disconnected { node } => write!(f, "bags containing node {node} are not connected"),
        }
    }
}

/// Checks the three decomposition axioms and that the bags form a tree.
pub fn td_check(graph: &MultiGraph, td: &TreeDecomposition) -> Result<(), TdViolation> {
    let n = graph.node_count();
    let k = td.bags.len();
    if k == 0 {
        return if n == 0 { Ok(()) } else { Err(TdViolation::NodeMissing { node: 0 }) };
    }
    if td.arcs.len() + 1 != k || td.arcs.iter().any(|&(a, b)| a >= k || b >= k) {
        return Err(TdViolation::NotATree);
    }
    let mut uf = crate::unionfind::UnionFind::new(k);
    for &(a, b) in &td.arcs {
        if !uf.union(a, b) {
            return Err(TdViolation::NotATree);
        }
    }
    let mut holders = alloc::vec![Vec::new(); n];
    for (i, bag) in td.bags.iter().enumerate() {
        for &v in bag {
            if v >= n {
                return Err(TdViolation::NodeOutOfRange { node: v });
            }
            holders[v].push(i);
        }
    }
    if let Some(node) = holders.iter().position(Vec::is_empty) {
        return Err(TdViolation::NodeMissing { node });
    }
    for (u, v) in graph.distinct_pairs() {
        let shared = holders[u].iter().any(|b| td.bags[*b].binary_search(&v).is_ok());
        if !shared {
            return Err(TdViolation::ArcUncovered { u, v });
        }
    }
    // The bags holding v induce a subtree iff they span |holders| - 1 arcs.
    let mut inside = alloc::vec![false; k];
    for (v, hs) in holders.iter().enumerate() {
        for &b in hs {
            inside[b] = true;
        }
        let arcs = td.arcs.iter().filter(|&&(a, b)| inside[a] && inside[b]).count();
        for &b in hs {
            inside[b] = false;
        }
        if arcs + 1 != hs.len() {
            return Err(TdViolation::Disconnected { node: v });
        }
    }
    Ok(())
}

pub fn td_validate(graph: &MultiGraph, td: &TreeDecomposition) -> bool {
    td_check(graph, td).is_ok()
}

/// Nodes outside `s ∪ {v}` reachable from `v` through `s` (the neighbours
/// of `v` once `s` has been eliminated).
fn q_set(masks: &[u64], s: u64, v: usize) -> u64 {
    let mut reached = 1u64 << v;
    let mut frontier = 1u64 << v;
    while frontier != 0 {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let x = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= masks[x];
        }
        next &= !reached;
        reached |= next;
        frontier = next & s;
    }
    reached & !s & !(1u64 << v)
}

/// Decomposition from an elimination order: the bag of `v` holds `v` and
/// its neighbours at elimination time.
pub fn decomposition_from_order(graph: &MultiGraph, order: &[usize]) -> TreeDecomposition {
    let n = graph.node_count();
    if n == 0 {
        return TreeDecomposition::new(alloc::vec![Vec::new()], Vec::new());
    }
    let masks = graph.neighbour_lists();
    let mut position = alloc::vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut eliminated = Bits::new(n);
    let mut bags = Vec::with_capacity(n);
    let mut arcs = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        let q = eliminated.reach(&masks, v);
        let mut bag = q.clone();
        bag.push(v);
        bags.push(bag);
        eliminated.set(v);
        if i + 1 < n {
            let parent = q.iter().map(|&w| position[w]).min().unwrap_or(n - 1);
            arcs.push((i, parent));
        }
    }
    TreeDecomposition::new(bags, arcs)
}

/// A plain bitset for graphs beyond 64 nodes.
#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(alloc::vec![0; n.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    /// Non-eliminated nodes reachable from `v` through eliminated ones.
    fn reach(&self, nb: &[Vec<usize>], v: usize) -> Vec<usize> {
        let mut seen = Bits::new(nb.len());
        seen.set(v);
        let mut stack = alloc::vec![v];
        let mut out = Vec::new();
        while let Some(x) = stack.pop() {
            for &y in &nb[x] {
                if seen.get(y) {
                    continue;
                }
                seen.set(y);
                if self.get(y) {
                    stack.push(y);
                } else {
                    out.push(y);
                }
            }
        }
        out
    }
}

/// Exact treewidth: searches elimination orders over node subsets, raising
/// the target width until some order stays within it. Loops and parallel
/// arcs do not matter.
pub fn treewidth_exact(graph: &MultiGraph, limit: usize) -> Result<(usize, TreeDecomposition), WidthError> {
    let n = graph.node_count();
    let limit = limit.min(MAX_TREEWIDTH_LIMIT);
    if n > limit {
        return Err(WidthError::SizeLimit { nodes: n, limit });
    }
    if n == 0 {
        return Ok((0, decomposition_from_order(graph, &[])));
    }
    let masks = graph.adjacency_masks();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let (upper, upper_order) = min_fill_order(graph);
    let lower = treewidth_lower(graph);
    for k in lower..upper {
        // parent[S] = (previous set, node eliminated last)
        let mut parent: HashMap<u64, (u64, u8)> = HashMap::new();
        let mut layer = alloc::vec![0u64];
        parent.insert(0, (0, u8::MAX));
        let mut found = false;
        'search: for _ in 0..n {
            let mut next = Vec::new();
            for &s in &layer {
                let mut free = full & !s;
                while free != 0 {
                    let v = free.trailing_zeros() as usize;
                    free &= free - 1;
                    let t = s | (1 << v);
                    if parent.contains_key(&t) {
                        continue;
                    }
                    if q_set(&masks, s, v).count_ones() as usize <= k {
                        parent.insert(t, (s, v as u8));
                        if t == full {
                            found = true;
                            break 'search;
                        }
                        next.push(t);
                    }
                }
            }
            layer = next;
        }
        if found {
            let mut order = Vec::with_capacity(n);
            let mut s = full;
            while s != 0 {
                let (prev, v) = parent[&s];
                order.push(v as usize);
                s = prev;
            }
            order.reverse();
            return Ok((k, decomposition_from_order(graph, &order)));
        }
    }
    Ok((upper, decomposition_from_order(graph, &upper_order)))
}

/// Greedy elimination picking the node whose elimination adds the fewest
/// fill arcs (ties: smaller degree, then smaller index).
fn min_fill_order(graph: &MultiGraph) -> (usize, Vec<usize>) {
    greedy_order(graph, |nb, v| {
        let list: Vec<usize> = nb[v].iter().copied().collect();
        let mut fill = 0;
        for (i, &a) in list.iter().enumerate() {
            for &b in &list[i + 1..] {
                if !nb[a].contains(&b) {
                    fill += 1;
                }
            }
        }
        (fill, list.len())
    })
}

fn min_degree_order(graph: &MultiGraph) -> (usize, Vec<usize>) {
    greedy_order(graph, |nb, v| (nb[v].len(), 0))
}

fn greedy_order(
    graph: &MultiGraph,
    key: impl Fn(&[BTreeSet<usize>], usize) -> (usize, usize),
) -> (usize, Vec<usize>) {
    let n = graph.node_count();
    let mut nb: Vec<BTreeSet<usize>> = (0..n).map(|v| graph.neighbours(v).into_iter().collect()).collect();
    let mut alive = alloc::vec![true; n];
    let mut order = Vec::with_capacity(n);
    let mut width = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| (key(&nb, v), v))
            .expect("a node remains");
        let list: Vec<usize> = nb[v].iter().copied().collect();
        width = width.max(list.len());
        for (i, &a) in list.iter().enumerate() {
            nb[a].remove(&v);
            for &b in &list[i + 1..] {
                nb[a].insert(b);
                nb[b].insert(a);
            }
        }
        nb[v].clear();
        alive[v] = false;
        order.push(v);
    }
    (width, order)
}

/// Upper bound from the better of min-fill and min-degree elimination,
/// with its decomposition.
pub fn treewidth_upper(graph: &MultiGraph) -> (usize, TreeDecomposition) {
    let (a, oa) = min_fill_order(graph);
    let (b, ob) = min_degree_order(graph);
    let order = if a <= b { oa } else { ob };
    (a.min(b), decomposition_from_order(graph, &order))
}

/// Lower bound: the larger of the degeneracy and the contraction
/// degeneracy (minimum degree under repeated contractions).
pub fn treewidth_lower(graph: &MultiGraph) -> usize {
    let n = graph.node_count();
    let base: Vec<BTreeSet<usize>> = (0..n).map(|v| graph.neighbours(v).into_iter().collect()).collect();

    let mut best = 0;
    for contract in [false, true] {
        let mut nb = base.clone();
        let mut alive = alloc::vec![true; n];
        for _ in 0..n {
            let Some(v) = (0..n).filter(|&v| alive[v]).min_by_key(|&v| (nb[v].len(), v)) else { break };
            best = best.max(nb[v].len());
            let list: Vec<usize> = nb[v].iter().copied().collect();
            alive[v] = false;
            nb[v].clear();
            for &a in &list {
                nb[a].remove(&v);
            }
            if contract {
                // Merge v into the neighbour sharing the fewest neighbours.
                if let Some(&w) = list
                    .iter()
                    .min_by_key(|&&w| (list.iter().filter(|&&x| nb[w].contains(&x)).count(), w))
                {
                    for &a in &list {
                        if a != w {
                            nb[w].insert(a);
                            nb[a].insert(w);
                        }
                    }
                }
            }
        }
    }
    best
}

/// Decomposition of the graph obtained by joining graph 2 (nodes shifted by
/// `n1`) to graph 1 with arcs `(hub, b)`: `hub` joins every bag of `td2`.
pub fn join_decompositions(
    td1: &TreeDecomposition,
    n1: usize,
    td2: &TreeDecomposition,
    hub: usize,
    arcs: &[(usize, usize)],
) -> Result<TreeDecomposition, WidthError> {
    if let Some(&(a, _)) = arcs.iter().find(|&&(a, _)| a != hub) {
        return Err(WidthError::NotIncidentToHub { hub, found: a });
    }
    let host = td1
        .bags
        .iter()
        .position(|b| b.binary_search(&hub).is_ok())
        .ok_or(WidthError::NodeOutOfRange)?;
    let k1 = td1.bags.len();
    let mut bags = td1.bags.clone();
    let mut tree = td1.arcs.clone();
    for b in &td2.bags {
        let mut bag: Vec<usize> = b.iter().map(|&v| v + n1).collect();
        bag.push(hub);
        bags.push(bag);
    }
    tree.extend(td2.arcs.iter().map(|&(a, b)| (a + k1, b + k1)));
    if !td2.bags.is_empty() {
        tree.push((host, k1));
    }
    Ok(TreeDecomposition::new(bags, tree))
}
