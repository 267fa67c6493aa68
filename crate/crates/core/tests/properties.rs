use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tetwidth_core::normal::{crush, crush_dual, enumerate_vertex_surfaces, NormalError};
use tetwidth_core::width::{
    carving_width_exact, lift, lift_once, treewidth_exact, treewidth_lower, treewidth_upper, TreeEmbedding,
};
use tetwidth_core::{Kind, MultiGraph, Perm4, Triangulation};

fn random_tri(seed: u64, tets: usize, free: usize) -> Triangulation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut faces: Vec<(usize, usize)> = (0..tets).flat_map(|t| (0..4).map(move |f| (t, f))).collect();
    faces.shuffle(&mut rng);
    let keep = free.min(faces.len()) & !1;
    let mut tri = Triangulation::new(tets, Kind::Finite);
    for pair in faces[keep..].chunks(2) {
        let ((s, f), (t, g)) = (pair[0], pair[1]);
        let perms: Vec<Perm4> = Perm4::all().filter(|p| p.apply(f) == g).collect();
        tri.glue(s, f, t, perms[rng.gen_range(0..perms.len())]).unwrap();
    }
    tri
}

fn random_graph(seed: u64, n: usize, arcs: usize) -> MultiGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = MultiGraph::new(n);
    for _ in 0..arcs {
        g.add_arc(rng.gen_range(0..n), rng.gen_range(0..n));
    }
    g
}

fn sorted_degrees(g: &MultiGraph) -> Vec<usize> {
    let mut d: Vec<usize> = (0..g.node_count()).map(|v| g.degree(v)).collect();
    d.sort_unstable();
    d
}

/// All unrooted binary trees on leaves `0..n`, built by inserting each new
/// leaf into every arc of the smaller trees.
fn all_trees(n: usize) -> Vec<TreeEmbedding> {
    if n <= 1 {
        return vec![TreeEmbedding { tree_nodes: n, tree_arcs: vec![], leaf_of: (0..n).collect() }];
    }
    let mut trees = vec![TreeEmbedding { tree_nodes: 2, tree_arcs: vec![(0, 1)], leaf_of: vec![0, 1] }];
    for leaf in 2..n {
        let mut next = Vec::new();
        for t in &trees {
            for i in 0..t.tree_arcs.len() {
                let mut u = t.clone();
                let (a, b) = u.tree_arcs.swap_remove(i);
                let (mid, new) = (u.tree_nodes, u.tree_nodes + 1);
                u.tree_nodes += 2;
                u.tree_arcs.extend([(a, mid), (mid, b), (mid, new)]);
                u.leaf_of.push(new);
                debug_assert_eq!(u.leaf_of.len(), leaf + 1);
                next.push(u);
            }
        }
        trees = next;
    }
    trees
}

/// Carving-width by trying every tree; loads count distinct pairs.
fn brute_carving_width(g: &MultiGraph) -> usize {
    let pairs: BTreeSet<(usize, usize)> = g.arcs().iter().copied().filter(|(u, v)| u != v).collect();
    all_trees(g.node_count())
        .iter()
        .map(|t| {
            t.tree_arcs
                .iter()
                .enumerate()
                .map(|(skip, _)| {
                    // Flood one side of the removed arc.
                    let mut side = vec![false; t.tree_nodes];
                    let mut stack = vec![t.tree_arcs[skip].0];
                    side[stack[0]] = true;
                    while let Some(x) = stack.pop() {
                        for (i, &(a, b)) in t.tree_arcs.iter().enumerate() {
                            let y = if a == x { b } else if b == x { a } else { continue };
                            if i != skip && !side[y] {
                                side[y] = true;
                                stack.push(y);
                            }
                        }
                    }
                    pairs.iter().filter(|&&(u, v)| side[t.leaf_of[u]] != side[t.leaf_of[v]]).count()
                })
                .max()
                .unwrap_or(0)
        })
        .min()
        .unwrap()
}

#[test]
fn tree_enumeration_counts() {
    // (2n - 5)!! unrooted binary trees on n >= 3 labelled leaves.
    assert_eq!(all_trees(3).len(), 1);
    assert_eq!(all_trees(4).len(), 3);
    assert_eq!(all_trees(5).len(), 15);
    assert_eq!(all_trees(6).len(), 105);
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn relabelling_preserves_invariants(seed in any::<u64>(), tets in 1usize..9, free in 0usize..5) {
        let tri = random_tri(seed, tets, free);
        let mut order: Vec<usize> = (0..tets).collect();
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed ^ 1));
        let other = tri.relabel(&order);
        prop_assert!(other.validate().is_valid());
        prop_assert_eq!(sorted_degrees(&tri.dual_graph().unwrap()), sorted_degrees(&other.dual_graph().unwrap()));
        let sorted = |mut v: Vec<usize>| { v.sort_unstable(); v };
        prop_assert_eq!(sorted(tri.edge_classes().sizes()), sorted(other.edge_classes().sizes()));
        prop_assert_eq!(tri.vertex_classes().count, other.vertex_classes().count);
        prop_assert_eq!(tri.boundary_faces().len(), other.boundary_faces().len());
    }

    #[test]
    fn dual_degrees_sum_to_glued_faces(seed in any::<u64>(), tets in 1usize..12, free in 0usize..8) {
        let tri = random_tri(seed, tets, free);
        let g = tri.dual_graph().unwrap();
        let total: usize = (0..tets).map(|v| g.degree(v)).sum();
        prop_assert_eq!(total, 4 * tets - tri.boundary_faces().len());
        prop_assert_eq!(total, 2 * g.arc_count());
        prop_assert_eq!(tri.edge_classes().sizes().iter().sum::<usize>(), 6 * tets);
    }

    #[test]
    fn crush_commutes_with_the_dual_graph(seed in any::<u64>(), tets in 1usize..6, free in 0usize..3) {
        let tri = random_tri(seed, tets, free);
        for s in enumerate_vertex_surfaces(&tri, 10).unwrap() {
            let quads: Vec<Option<u8>> = (0..tets).map(|t| s.quad_in(t).map(|q| q as u8)).collect();
            let dual = crush_dual(&tri.dual_ports().unwrap(), &quads);
            match crush(&tri, &s) {
                Ok((crushed, cert)) => {
                    let (g, cert2) = dual.unwrap();
                    prop_assert_eq!(crushed.dual_graph().unwrap(), g);
                    prop_assert_eq!(cert, cert2);
                }
                Err(NormalError::DegenerateFlattening { .. }) => prop_assert!(dual.is_err()),
                Err(e) => prop_assert!(false, "{}", e),
            }
        }
    }

    #[test]
    fn carving_dp_matches_brute_force(seed in any::<u64>(), n in 1usize..7, arcs in 0usize..14) {
        let g = random_graph(seed, n, arcs);
        let (cw, emb) = carving_width_exact(&g, 12).unwrap();
        prop_assert_eq!(cw, brute_carving_width(&g));
        prop_assert_eq!(tetwidth_core::width::congestion(&g, &emb).unwrap(), cw);
    }

    #[test]
    fn lifting_never_raises_carving_width(seed in any::<u64>(), n in 3usize..9, arcs in 2usize..16) {
        let g = random_graph(seed, n, arcs);
        let (cw, _) = carving_width_exact(&g, 12).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 2);
        for _ in 0..8 {
            let (u, v, w) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            // Removing every copy of u-v and v-w is monotone; a single-copy
            // lift is too once neither pair stays adjacent.
            let simple = g.multiplicity(u, v) == 1 && g.multiplicity(v, w) == 1;
            let once = lift_once(&g, u, v, w).ok().filter(|_| simple);
            for lifted in lift(&g, u, v, w).ok().into_iter().chain(once) {
                let (after, _) = carving_width_exact(&lifted, 12).unwrap();
                prop_assert!(after <= cw, "lift {}-{}-{}: {} -> {}", u, v, w, cw, after);
            }
            let mut smaller = g.clone();
            smaller.remove_node(v);
            prop_assert!(carving_width_exact(&smaller, 12).unwrap().0 <= cw);
        }
    }

    #[test]
    fn treewidth_bounds_sandwich_the_exact_value(seed in any::<u64>(), n in 1usize..13, arcs in 0usize..30) {
        let g = random_graph(seed, n, arcs);
        let (tw, _) = treewidth_exact(&g, 20).unwrap();
        let (upper, td) = treewidth_upper(&g);
        prop_assert!(treewidth_lower(&g) <= tw && tw <= upper);
        prop_assert_eq!(td.width(), upper);
    }
}

#[test]
fn single_copy_lift_can_raise_distinct_pair_width() {
    // A path 0-1=2-3 with 1-2 doubled. Lifting one copy along 0-1-2 leaves
    // 1-2 adjacent and creates 0-2: a star at 2. Removing every copy keeps
    // the width. This is why certificates are checked end to end.
    let g = MultiGraph::from_arcs(4, &[(0, 1), (1, 2), (1, 2), (2, 3)]);
    let cw = |h: &MultiGraph| carving_width_exact(h, 12).unwrap().0;
    assert_eq!(cw(&g), 2);
    assert_eq!(cw(&lift_once(&g, 0, 1, 2).unwrap()), 3);
    assert_eq!(cw(&lift(&g, 0, 1, 2).unwrap()), 2);
}
