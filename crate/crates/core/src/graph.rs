//! Multigraphs with loops, and port graphs that remember arc slots.

use alloc::vec::Vec;

/// An undirected multigraph on nodes `0..n`. Arcs are stored normalised
/// (`u <= v`) and sorted, so equal graphs compare equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MultiGraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl MultiGraph {
    pub fn new(n: usize) -> Self {
        Self { n, arcs: Vec::new() }
    }

    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Self {
        let mut g = Self::new(n);
        for &(u, v) in arcs {
            g.add_arc(u, v);
        }
        g
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn add_node(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    pub fn add_arc(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "arc ({u}, {v}) out of range");
        let a = if u <= v { (u, v) } else { (v, u) };
        let at = self.arcs.partition_point(|&x| x <= a);
        self.arcs.insert(at, a);
    }

    /// Removes one copy of the arc; `false` when there is none.
    pub fn remove_arc(&mut self, u: usize, v: usize) -> bool {
        let a = if u <= v { (u, v) } else { (v, u) };
        match self.arcs.binary_search(&a) {
            Ok(i) => {
                self.arcs.remove(i);
                true
            }
            Err(_) => false,
        }
    }

    /// Removes every copy of the arc; returns how many there were.
    pub fn remove_all_arcs(&mut self, u: usize, v: usize) -> usize {
        let a = if u <= v { (u, v) } else { (v, u) };
        let before = self.arcs.len();
        self.arcs.retain(|&x| x != a);
        before - self.arcs.len()
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        let a = if u <= v { (u, v) } else { (v, u) };
        self.arcs.iter().filter(|&&x| x == a).count()
    }

    /// Degree counting loops twice.
    pub fn degree(&self, v: usize) -> usize {
        self.arcs
            .iter()
            .map(|&(a, b)| (a == v) as usize + (b == v) as usize)
            .sum()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Distinct neighbours other than `v` itself, increasing.
    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .arcs
            .iter()
            .filter_map(|&(a, b)| match (a == v, b == v) {
                (true, false) => Some(b),
                (false, true) => Some(a),
                _ => None,
            })
            .collect();
        out.dedup();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Distinct-neighbour lists for every node.
    pub fn neighbour_lists(&self) -> Vec<Vec<usize>> {
        let mut nb = alloc::vec![Vec::new(); self.n];
        for &(a, b) in &self.arcs {
            if a != b {
                nb[a].push(b);
                nb[b].push(a);
            }
        }
        for l in &mut nb {
            l.sort_unstable();
            l.dedup();
        }
        nb
    }

    pub fn max_distinct_degree(&self) -> usize {
        (0..self.n).map(|v| self.neighbours(v).len()).max().unwrap_or(0)
    }

    /// Unordered pairs `u < v` joined by at least one arc.
    pub fn distinct_pairs(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<_> = self.arcs.iter().copied().filter(|&(a, b)| a != b).collect();
        out.dedup();
        out
    }

    /// Neighbour bitmasks ignoring loops and multiplicity (`n <= 64`).
    pub fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64);
        let mut m = alloc::vec![0u64; self.n];
        for &(a, b) in &self.arcs {
            if a != b {
                m[a] |= 1 << b;
                m[b] |= 1 << a;
            }
        }
        m
    }

    /// Deletes node `v` and its arcs; higher nodes shift down by one.
    pub fn remove_node(&mut self, v: usize) {
        assert!(v < self.n);
        self.arcs.retain(|&(a, b)| a != v && b != v);
        let shift = |x: usize| if x > v { x - 1 } else { x };
        for a in &mut self.arcs {
            *a = (shift(a.0), shift(a.1));
        }
        self.n -= 1;
    }

    /// Subgraph induced on `nodes` (given in the order they are relabelled).
    pub fn induced(&self, nodes: &[usize]) -> MultiGraph {
        let mut local = alloc::vec![usize::MAX; self.n];
        for (i, &v) in nodes.iter().enumerate() {
            local[v] = i;
        }
        let mut g = MultiGraph::new(nodes.len());
        for &(a, b) in &self.arcs {
            if local[a] != usize::MAX && local[b] != usize::MAX {
                g.add_arc(local[a], local[b]);
            }
        }
        g
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut uf = crate::unionfind::UnionFind::new(self.n);
        let mut parts = self.n;
        for &(a, b) in &self.arcs {
            if uf.union(a, b) {
                parts -= 1;
            }
        }
        parts == 1
    }
}

/// A graph with at most four numbered slots per node. Dual graphs are port
/// graphs: node = tetrahedron, slot = face.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PortGraph {
    ports: Vec<[Option<(usize, usize)>; 4]>,
}

impl PortGraph {
    pub fn new(n: usize) -> Self {
        Self {
            ports: alloc::vec![[None; 4]; n],
        }
    }

    pub fn node_count(&self) -> usize {
        self.ports.len()
    }

    pub fn connect(&mut self, a: (usize, usize), b: (usize, usize)) {
        assert!(a != b, "a slot cannot be joined to itself");
        assert!(self.ports[a.0][a.1].is_none() && self.ports[b.0][b.1].is_none());
        self.ports[a.0][a.1] = Some(b);
        self.ports[b.0][b.1] = Some(a);
    }

    pub fn disconnect(&mut self, a: (usize, usize)) -> Option<(usize, usize)> {
        let b = self.ports[a.0][a.1].take()?;
        self.ports[b.0][b.1] = None;
        Some(b)
    }

    #[inline]
    pub fn mate(&self, node: usize, slot: usize) -> Option<(usize, usize)> {
        self.ports[node][slot]
    }

    pub fn to_multigraph(&self) -> MultiGraph {
        let mut g = MultiGraph::new(self.node_count());
        for (v, slots) in self.ports.iter().enumerate() {
            for (s, m) in slots.iter().enumerate() {
                if let Some((w, t)) = *m {
                    if (v, s) < (w, t) {
                        g.add_arc(v, w);
                    }
                }
            }
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arcs_stay_normalised() {
        let mut g = MultiGraph::new(3);
        g.add_arc(2, 0);
        g.add_arc(1, 1);
        g.add_arc(0, 2);
        assert_eq!(g.arcs(), [(0, 2), (0, 2), (1, 1)]);
        assert_eq!(g.multiplicity(2, 0), 2);
        assert_eq!(g.degree(1), 2);
        assert_eq!(g.neighbours(1), Vec::<usize>::new());
        assert_eq!(g.distinct_pairs(), [(0, 2)]);
        assert!(g.remove_arc(0, 2));
        assert_eq!(g.multiplicity(0, 2), 1);
        assert!(!g.is_connected());
    }

    #[test]
    fn remove_node_compacts() {
        let mut g = MultiGraph::from_arcs(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        g.remove_node(1);
        assert_eq!(g.node_count(), 3);
        assert_eq!(g.arcs(), [(0, 2), (1, 2)]);
    }

    #[test]
    fn port_graph_round_trip() {
        let mut p = PortGraph::new(2);
        p.connect((0, 1), (1, 3));
        p.connect((0, 2), (0, 3));
        let g = p.to_multigraph();
        assert_eq!(g.arcs(), [(0, 0), (0, 1)]);
        assert_eq!(p.disconnect((1, 3)), Some((0, 1)));
        assert_eq!(p.mate(0, 1), None);
    }
}
