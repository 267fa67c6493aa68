use alloc::vec::Vec;

use super::WidthError;
use crate::graph::MultiGraph;

/// A carving decomposition: an unrooted tree whose internal nodes have
/// degree three, with graph node `v` placed on leaf `leaf_of[v]`.
///
/// Graphs with at most two nodes use the obvious degenerate trees: no tree
/// nodes, a single node, or a single arc between two leaves.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TreeEmbedding {
    pub tree_nodes: usize,
    pub tree_arcs: Vec<(usize, usize)>,
    pub leaf_of: Vec<usize>,
}

/// How congestion counts parallel arcs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ArcCounting {
    /// Each adjacent pair of distinct nodes counts once.
    #[default]
    Distinct,
    /// Every arc copy counts.
    Multiplicity,
}

impl TreeEmbedding {
    pub fn leaf_count(&self) -> usize {
        self.leaf_of.len()
    }

    fn neighbours(&self) -> Vec<Vec<usize>> {
        let mut nb = alloc::vec![Vec::new(); self.tree_nodes];
        for &(a, b) in &self.tree_arcs {
            nb[a].push(b);
            nb[b].push(a);
        }
        nb
    }

    /// Checks the shape of the tree and that leaves are labelled bijectively.
    pub fn validate(&self, graph_nodes: usize) -> Result<(), WidthError> {
        let bad = |why: &'static str| Err(WidthError::BadEmbedding(why));
        if self.leaf_of.len() != graph_nodes {
            return Err(WidthError::LeafMismatch {
                leaves: self.leaf_of.len(),
                nodes: graph_nodes,
            });
        }
        let m = self.tree_nodes;
        if graph_nodes == 0 {
            return if m == 0 { Ok(()) } else { bad("empty graph needs an empty tree") };
        }
        if self.tree_arcs.len() + 1 != m {
            return bad("tree must have one arc fewer than nodes");
        }
        if self.tree_arcs.iter().any(|&(a, b)| a >= m || b >= m || a == b) {
            return bad("tree arc endpoint out of range");
        }
        let mut uf = crate::unionfind::UnionFind::new(m);
        for &(a, b) in &self.tree_arcs {
            if !uf.union(a, b) {
                return bad("tree contains a cycle");
            }
        }
        let nb = self.neighbours();
        let mut is_leaf_label = alloc::vec![false; m];
        for &l in &self.leaf_of {
            if l >= m || is_leaf_label[l] {
                return bad("leaf labelling is not injective");
            }
            is_leaf_label[l] = true;
        }
        for (x, adj) in nb.iter().enumerate() {
            let want_leaf = adj.len() <= 1;
            if want_leaf != is_leaf_label[x] {
                return bad("leaves and graph nodes are not in bijection");
            }
            if !want_leaf && adj.len() != 3 {
                return bad("internal tree node without degree three");
            }
        }
        Ok(())
    }

    /// Number of adjacent pairs separated by each tree arc, in the order of
    /// `tree_arcs`.
    pub fn arc_loads(&self, graph: &MultiGraph, counting: ArcCounting) -> Result<Vec<usize>, WidthError> {
        self.validate(graph.node_count())?;
        if self.tree_arcs.is_empty() {
            return Ok(Vec::new());
        }
        // Root at node 0; a pair loads every arc on the path between its
        // leaves, i.e. +1 at both leaves and -2 at their meeting point.
        let m = self.tree_nodes;
        let nb = self.neighbours();
        let mut parent = alloc::vec![usize::MAX; m];
        let mut depth = alloc::vec![0usize; m];
        let mut order = alloc::vec![0];
        parent[0] = 0;
        let mut i = 0;
        while i < order.len() {
            let x = order[i];
            i += 1;
            for &y in &nb[x] {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    depth[y] = depth[x] + 1;
                    order.push(y);
                }
            }
        }
        let meet = |mut a: usize, mut b: usize| {
            while depth[a] > depth[b] {
                a = parent[a];
            }
            while depth[b] > depth[a] {
                b = parent[b];
            }
            while a != b {
                a = parent[a];
                b = parent[b];
            }
            a
        };
        let mut delta = alloc::vec![0i64; m];
        let pairs: Vec<(usize, usize)> = match counting {
            ArcCounting::Distinct => graph.distinct_pairs(),
            ArcCounting::Multiplicity => graph.arcs().iter().copied().filter(|&(a, b)| a != b).collect(),
        };
        for (u, v) in pairs {
            let (a, b) = (self.leaf_of[u], self.leaf_of[v]);
            delta[a] += 1;
            delta[b] += 1;
            delta[meet(a, b)] -= 2;
        }
        for &x in order.iter().rev() {
            if x != 0 {
                delta[parent[x]] += delta[x];
            }
        }
        Ok(self
            .tree_arcs
            .iter()
            .map(|&(a, b)| {
                let child = if parent[a] == b && a != 0 { a } else { b };
                delta[child] as usize
            })
            .collect())
    }
}

/// Maximum number of distinct adjacent pairs separated by one tree arc.
pub fn congestion(graph: &MultiGraph, embedding: &TreeEmbedding) -> Result<usize, WidthError> {
    congestion_with(graph, embedding, ArcCounting::Distinct)
}

pub fn congestion_with(graph: &MultiGraph, embedding: &TreeEmbedding, counting: ArcCounting) -> Result<usize, WidthError> {
    Ok(embedding.arc_loads(graph, counting)?.into_iter().max().unwrap_or(0))
}

/// Builds an embedding from a rooted binary merge structure: `children[x]`
/// lists the two subtrees merged at internal node `x`.
pub(crate) struct TreeBuilder {
    pub emb: TreeEmbedding,
}

impl TreeBuilder {
    pub fn new(graph_nodes: usize) -> Self {
        Self {
            emb: TreeEmbedding {
                tree_nodes: 0,
                tree_arcs: Vec::new(),
                leaf_of: alloc::vec![usize::MAX; graph_nodes],
            },
        }
    }

    pub fn leaf(&mut self, v: usize) -> usize {
        let x = self.node();
        self.emb.leaf_of[v] = x;
        x
    }

    pub fn node(&mut self) -> usize {
        self.emb.tree_nodes += 1;
        self.emb.tree_nodes - 1
    }

    pub fn arc(&mut self, a: usize, b: usize) {
        self.emb.tree_arcs.push((a, b));
    }

    /// Internal node joining two subtrees.
    pub fn merge(&mut self, a: usize, b: usize) -> usize {
        let x = self.node();
        self.arc(x, a);
        self.arc(x, b);
        x
    }

    pub fn finish(self) -> TreeEmbedding {
        self.emb
    }
}

/// A caterpillar: leaves hang off a path in the given order, so the arcs of
/// the spine separate prefixes of `order` from the rest.
pub fn caterpillar(order: &[usize]) -> TreeEmbedding {
    let n = order.len();
    let mut b = TreeBuilder::new(n);
    match n {
        0 => {}
        1 => {
            b.leaf(order[0]);
        }
        _ => {
            let first = b.leaf(order[0]);
            let second = b.leaf(order[1]);
            if n == 2 {
                b.arc(first, second);
            } else {
                let mut spine = b.merge(first, second);
                for &v in &order[2..n - 1] {
                    let l = b.leaf(v);
                    spine = b.merge(spine, l);
                }
                let last = b.leaf(order[n - 1]);
                b.arc(spine, last);
            }
        }
    }
    b.finish()
}

/// Removes the leaves of graph nodes outside `subset` and smooths the tree.
/// Graph node `subset[i]` becomes node `i` of the result.
pub fn restrict_embedding(embedding: &TreeEmbedding, subset: &[usize]) -> Result<TreeEmbedding, WidthError> {
    if subset.is_empty() {
        return Err(WidthError::EmptySubset);
    }
    let m = embedding.tree_nodes;
    let mut adj: Vec<Vec<usize>> = embedding.neighbours();
    let mut label = alloc::vec![usize::MAX; m];
    for (i, &v) in subset.iter().enumerate() {
        label[embedding.leaf_of[v]] = i;
    }
    let mut alive = alloc::vec![true; m];
    let detach = |adj: &mut Vec<Vec<usize>>, x: usize| {
        for y in core::mem::take(&mut adj[x]) {
            adj[y].retain(|&z| z != x);
        }
    };
    // Prune unlabelled leaves until none are left.
    let mut stack: Vec<usize> = (0..m).filter(|&x| adj[x].len() <= 1 && label[x] == usize::MAX).collect();
    while let Some(x) = stack.pop() {
        if !alive[x] {
            continue;
        }
        alive[x] = false;
        let nbs = adj[x].clone();
        detach(&mut adj, x);
        for y in nbs {
            if alive[y] && adj[y].len() <= 1 && label[y] == usize::MAX {
                stack.push(y);
            }
        }
    }
    // Smooth unlabelled degree-2 nodes.
    for x in 0..m {
        if alive[x] && label[x] == usize::MAX && adj[x].len() == 2 {
            let (a, b) = (adj[x][0], adj[x][1]);
            detach(&mut adj, x);
            alive[x] = false;
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    let mut index = alloc::vec![usize::MAX; m];
    let mut count = 0;
    for x in 0..m {
        if alive[x] {
            index[x] = count;
            count += 1;
        }
    }
    let mut arcs = Vec::new();
    for x in 0..m {
        for &y in &adj[x] {
            if alive[x] && x < y {
                arcs.push((index[x], index[y]));
            }
        }
    }
    let leaf_of = subset.iter().map(|&v| index[embedding.leaf_of[v]]).collect();
    Ok(TreeEmbedding {
        tree_nodes: count,
        tree_arcs: arcs,
        leaf_of,
    })
}

/// Disjoint union of two graphs plus connecting arcs `(a, b)` with `a` a
/// node of `g1` and `b` a node of `g2`; nodes of `g2` are shifted by
/// `g1.node_count()`.
pub fn join_graphs(g1: &MultiGraph, g2: &MultiGraph, connecting: &[(usize, usize)]) -> MultiGraph {
    let n1 = g1.node_count();
    let mut g = MultiGraph::new(n1 + g2.node_count());
    for &(a, b) in g1.arcs() {
        g.add_arc(a, b);
    }
    for &(a, b) in g2.arcs() {
        g.add_arc(a + n1, b + n1);
    }
    for &(a, b) in connecting {
        g.add_arc(a, b + n1);
    }
    g
}

/// Embedding of [`join_graphs`]: the leaf arcs at the endpoints of the first
/// connecting arc are subdivided and the two new nodes bridged.
pub fn join_embeddings(
    e1: &TreeEmbedding,
    e2: &TreeEmbedding,
    connecting: &[(usize, usize)],
) -> Result<TreeEmbedding, WidthError> {
    let &(u, v) = connecting.first().ok_or(WidthError::NoConnectingArcs)?;
    if u >= e1.leaf_count() || v >= e2.leaf_count() {
        return Err(WidthError::NodeOutOfRange);
    }
    let offset = e1.tree_nodes;
    let mut out = TreeEmbedding {
        tree_nodes: e1.tree_nodes + e2.tree_nodes,
        tree_arcs: e1.tree_arcs.clone(),
        leaf_of: e1.leaf_of.clone(),
    };
    out.tree_arcs.extend(e2.tree_arcs.iter().map(|&(a, b)| (a + offset, b + offset)));
    out.leaf_of.extend(e2.leaf_of.iter().map(|&l| l + offset));

    let attach = |out: &mut TreeEmbedding, leaf: usize| -> usize {
        match out.tree_arcs.iter().position(|&(a, b)| a == leaf || b == leaf) {
            None => leaf,
            Some(i) => {
                let (a, b) = out.tree_arcs[i];
                let other = if a == leaf { b } else { a };
                let s = out.tree_nodes;
                out.tree_nodes += 1;
                out.tree_arcs[i] = (leaf, s);
                out.tree_arcs.push((s, other));
                s
            }
        }
    };
    let s1 = attach(&mut out, e1.leaf_of[u]);
    let s2 = attach(&mut out, e2.leaf_of[v] + offset);
    out.tree_arcs.push((s1, s2));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> MultiGraph {
        let arcs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        MultiGraph::from_arcs(n, &arcs)
    }

    #[test]
    fn two_nodes_any_multiplicity() {
        let g = MultiGraph::from_arcs(2, &[(0, 1), (0, 1), (0, 1)]);
        let e = caterpillar(&[0, 1]);
        assert_eq!(congestion(&g, &e).unwrap(), 1);
        assert_eq!(congestion_with(&g, &e, ArcCounting::Multiplicity).unwrap(), 3);
    }

    #[test]
    fn loops_do_not_count() {
        let g = MultiGraph::from_arcs(3, &[(0, 0), (1, 1), (2, 2)]);
        assert_eq!(congestion(&g, &caterpillar(&[0, 1, 2])).unwrap(), 0);
    }

    #[test]
    fn validation_catches_mismatch() {
        let e = caterpillar(&[0, 1, 2]);
        assert!(e.validate(3).is_ok());
        assert!(matches!(congestion(&path(4), &e), Err(WidthError::LeafMismatch { .. })));
        let mut broken = e.clone();
        broken.leaf_of[0] = broken.leaf_of[1];
        assert!(broken.validate(3).is_err());
    }

    #[test]
    fn caterpillar_loads_follow_prefix_cuts() {
        let g = path(6);
        let e = caterpillar(&[0, 1, 2, 3, 4, 5]);
        assert_eq!(congestion(&g, &e).unwrap(), 2);
        let e = caterpillar(&[0, 2, 4, 1, 3, 5]);
        assert!(congestion(&g, &e).unwrap() > 2);
    }

    #[test]
    fn restriction_shrinks() {
        let e = caterpillar(&[0, 1, 2]);
        let r = restrict_embedding(&e, &[0, 2]).unwrap();
        assert_eq!((r.tree_nodes, r.tree_arcs.len()), (2, 1));
        r.validate(2).unwrap();
        let one = restrict_embedding(&e, &[1]).unwrap();
        assert_eq!(one.tree_nodes, 1);
        one.validate(1).unwrap();
        assert!(matches!(restrict_embedding(&e, &[]), Err(WidthError::EmptySubset)));
    }

    #[test]
    fn joining_single_nodes() {
        let e = caterpillar(&[0]);
        let j = join_embeddings(&e, &e, &[(0, 0)]).unwrap();
        let g = join_graphs(&MultiGraph::new(1), &MultiGraph::new(1), &[(0, 0)]);
        assert_eq!(congestion(&g, &j).unwrap(), 1);
    }
}
