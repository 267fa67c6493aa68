//! Brute-force oracles, written independently of the solvers they check.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use tetwidth::core::width::{TreeDecomposition, TreeEmbedding};
use tetwidth::core::MultiGraph;

/// Distinct unordered pairs of adjacent, distinct nodes.
fn pairs(g: &MultiGraph) -> Vec<(usize, usize)> {
    let set: BTreeSet<(usize, usize)> = g.arcs().iter().copied().filter(|(u, v)| u != v).collect();
    set.into_iter().collect()
}

/// Congestion: for each tree arc, cut the tree there and count node pairs
/// split by the cut.
pub fn congestion(g: &MultiGraph, emb: &TreeEmbedding) -> usize {
    let k = emb.tree_nodes;
    let pairs = pairs(g);
    let mut worst = 0;
    for (skip, _) in emb.tree_arcs.iter().enumerate() {
        let mut adj = vec![Vec::new(); k];
        for (i, &(a, b)) in emb.tree_arcs.iter().enumerate() {
            if i != skip {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        let start = emb.tree_arcs[skip].0;
        let mut side = vec![false; k];
        side[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if !side[y] {
                    side[y] = true;
                    queue.push_back(y);
                }
            }
        }
        let load = pairs.iter().filter(|&&(u, v)| side[emb.leaf_of[u]] != side[emb.leaf_of[v]]).count();
        worst = worst.max(load);
    }
    worst
}

/// Carving-width by dynamic programming over leaf sets of rooted subtrees:
/// `h(S) = max(cut(S), min over splits S = B + C of max(h(B), h(C)))`.
pub fn carving_width(g: &MultiGraph) -> usize {
    let n = g.node_count();
    if n <= 1 {
        return 0;
    }
    assert!(n <= 20, "oracle is exponential");
    let pairs = pairs(g);
    let full = (1usize << n) - 1;
    let cut: Vec<usize> = (0..=full)
        .map(|s| pairs.iter().filter(|&&(u, v)| (s >> u & 1) != (s >> v & 1)).count())
        .collect();
    // `inner[S]`: best maximum load over arcs strictly inside a subtree on S.
    let mut inner = vec![usize::MAX; full + 1];
    for s in 1..=full {
        if s.count_ones() == 1 {
            inner[s] = 0;
            continue;
        }
        let low = s & s.wrapping_neg();
        let rest = s ^ low;
        let mut best = usize::MAX;
        // Sub-masks of `rest`, each joined with the lowest element.
        let mut sub = rest;
        loop {
            let b = sub | low;
            if b != s {
                let c = s ^ b;
                let cost = cut[b].max(inner[b]).max(cut[c]).max(inner[c]);
                best = best.min(cost);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        inner[s] = best;
    }
    inner[full]
}

/// Treewidth via `TW(S) = min_v max(TW(S - v), |Q(S - v, v)|)`, where
/// `Q(S, v)` is the set of nodes outside `S + v` reachable from `v` through
/// `S`.
pub fn treewidth(g: &MultiGraph) -> usize {
    let n = g.node_count();
    if n == 0 {
        return 0;
    }
    assert!(n <= 20, "oracle is exponential");
    let mut adj = vec![0usize; n];
    for &(u, v) in g.arcs() {
        if u != v {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
    }
    let q = |s: usize, v: usize| -> usize {
        let mut seen = 1usize << v;
        let mut stack = vec![v];
        let mut out = 0usize;
        while let Some(x) = stack.pop() {
            let mut nb = adj[x] & !seen;
            while nb != 0 {
                let y = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                seen |= 1 << y;
                if s >> y & 1 == 1 {
                    stack.push(y);
                } else {
                    out |= 1 << y;
                }
            }
        }
        out.count_ones() as usize
    };
    let full = (1usize << n) - 1;
    // tw[S] stored as value + 1 so that the empty set is 0 (= -1 + 1).
    let mut tw = vec![usize::MAX; full + 1];
    tw[0] = 0;
    for s in 1..=full {
        let mut best = usize::MAX;
        let mut bits = s;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let without = s ^ (1 << v);
            best = best.min(tw[without].max(q(without, v) + 1));
        }
        tw[s] = best;
    }
    tw[full] - 1
}

/// The tree-decomposition axioms, checked from scratch.
pub fn td_valid(g: &MultiGraph, td: &TreeDecomposition) -> bool {
    let k = td.bags.len();
    let n = g.node_count();
    if k == 0 {
        return n == 0;
    }
    if td.arcs.len() != k - 1 || td.arcs.iter().any(|&(a, b)| a >= k || b >= k) {
        return false;
    }
    let connected = |members: &[usize]| -> bool {
        let inside: BTreeSet<usize> = members.iter().copied().collect();
        let Some(&start) = members.first() else { return false };
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for &(a, b) in &td.arcs {
                for (p, q) in [(a, b), (b, a)] {
                    if p == x && inside.contains(&q) && seen.insert(q) {
                        stack.push(q);
                    }
                }
            }
        }
        seen.len() == inside.len()
    };
    if !connected(&(0..k).collect::<Vec<_>>()) {
        return false;
    }
    if td.bags.iter().flatten().any(|&v| v >= n) {
        return false;
    }
    for v in 0..n {
        let holding: Vec<usize> = (0..k).filter(|&i| td.bags[i].contains(&v)).collect();
        if !connected(&holding) {
            return false;
        }
    }
    g.arcs().iter().all(|&(u, v)| td.bags.iter().any(|b| b.contains(&u) && b.contains(&v)))
}

/// Graph isomorphism by backtracking (multiplicities respected).
pub fn isomorphic(a: &MultiGraph, b: &MultiGraph) -> bool {
    let n = a.node_count();
    if n != b.node_count() || a.arc_count() != b.arc_count() {
        return false;
    }
    let mut da: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    let (fa, fb) = (da.clone(), db.clone());
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    fn extend(a: &MultiGraph, b: &MultiGraph, fa: &[usize], fb: &[usize], map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let v = map.len();
        if v == a.node_count() {
            return true;
        }
        for w in 0..b.node_count() {
            if used[w] || fa[v] != fb[w] {
                continue;
            }
            let fits = (0..v).all(|u| a.multiplicity(u, v) == b.multiplicity(map[u], w))
                && a.multiplicity(v, v) == b.multiplicity(w, w);
            if fits {
                map.push(w);
                used[w] = true;
                if extend(a, b, fa, fb, map, used) {
                    return true;
                }
                map.pop();
                used[w] = false;
            }
        }
        false
    }
    extend(a, b, &fa, &fb, &mut Vec::new(), &mut vec![false; n])
}

/// `v3 = 3 L(pi/3)` with `L(x) = -int_0^x log|2 sin t| dt`. The integrand
/// is split as `log 2t + log(sin t / t)`; the first part integrates in
/// closed form, the second is smooth and handled by Simpson's rule.
pub fn regular_ideal_volume() -> f64 {
    let x = std::f64::consts::PI / 3.0;
    let smooth = |t: f64| if t == 0.0 { 0.0 } else { (t.sin() / t).ln() };
    let steps = 20_000;
    let h = x / steps as f64;
    let mut sum = smooth(0.0) + smooth(x);
    for i in 1..steps {
        sum += smooth(i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
    }
    let integral = x * (2.0 * x).ln() - x + sum * h / 3.0;
    -3.0 * integral
}
