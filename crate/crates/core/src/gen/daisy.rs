use alloc::vec::Vec;

use super::GenError;
use crate::graph::MultiGraph;
use crate::width::TreeEmbedding;

/// Dual graph shape of an `n`-tetrahedron layered solid torus: a loop at
/// node 0 and a double arc between consecutive nodes.
pub fn daisy_chain(n: usize) -> MultiGraph {
    let mut g = MultiGraph::new(n);
    if n > 0 {
        g.add_arc(0, 0);
    }
    for i in 1..n {
        g.add_arc(i - 1, i);
        g.add_arc(i - 1, i);
    }
    g
}

/// Congestion-2 embedding of the `n`-node daisy chain. Start from the star
/// with leaves `b0, b1, b2`; to add `b(k+1)`, hang two new leaves off the
/// leaf carrying `bk` and give them `bk` and `b(k+1)`. The leaves stay in
/// cyclic order, and graph node `i` sits on `bi`.
pub fn daisy_embedding(n: usize) -> Result<TreeEmbedding, GenError> {
    if n < 3 {
        return Err(GenError::DaisyTooSmall(n));
    }
    let mut tree_arcs: Vec<(usize, usize)> = alloc::vec![(0, 1), (0, 2), (0, 3)];
    let mut leaf_of: Vec<usize> = alloc::vec![1, 2, 3];
    let mut tree_nodes = 4;
    for k in 3..n {
        let old = leaf_of[k - 1];
        let (a, b) = (tree_nodes, tree_nodes + 1);
        tree_nodes += 2;
        tree_arcs.push((old, a));
        tree_arcs.push((old, b));
        leaf_of[k - 1] = a;
        leaf_of.push(b);
    }
    Ok(TreeEmbedding {
        tree_nodes,
        tree_arcs,
        leaf_of,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::width::congestion;

    #[test]
    fn small_daisies() {
        assert!(daisy_embedding(2).is_err());
        let e = daisy_embedding(3).unwrap();
        assert_eq!((e.tree_nodes, e.tree_arcs.len()), (4, 3));
        for n in 3..12 {
            let e = daisy_embedding(n).unwrap();
            e.validate(n).unwrap();
            assert_eq!(congestion(&daisy_chain(n), &e).unwrap(), 2);
        }
    }
}
