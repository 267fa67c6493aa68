//! Seeded fixtures: random gluings, multigraphs and metrics. The same seed
//! always yields the same value.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tetwidth_core::hypbounds::FiniteMetric;
use tetwidth_core::{Kind, MultiGraph, Perm4, Triangulation};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn perm_between<R: Rng>(rng: &mut R, face: usize, other: usize) -> Perm4 {
    let fits: Vec<Perm4> = Perm4::all().filter(|p| p.apply(face) == other).collect();
    *fits.choose(rng).expect("six permutations send one face to another")
}

/// A connected gluing of `tets` tetrahedra with `boundary_faces` faces left
/// free, rounded up to an even number and capped at `2 tets + 2`.
pub fn random_triangulation<R: Rng>(rng: &mut R, tets: usize, boundary_faces: usize, kind: Kind) -> Triangulation {
    let mut tri = Triangulation::new(tets, kind);
    if tets == 0 {
        return tri;
    }
    let mut free: Vec<(usize, usize)> = (0..4).map(|f| (0, f)).collect();
    for t in 1..tets {
        // Attach the new tetrahedron to the part built so far.
        let i = rng.gen_range(0..free.len());
        let (s, f) = free.swap_remove(i);
        let g = rng.gen_range(0..4);
        tri.glue(s, f, t, perm_between(rng, f, g)).expect("both faces are free");
        free.extend((0..4).filter(|&x| x != g).map(|x| (t, x)));
    }
    // A connected gluing always leaves an even number of free faces.
    let keep = (boundary_faces + boundary_faces % 2).min(free.len());
    free.shuffle(rng);
    let glued = free.split_off(keep);
    for pair in glued.chunks(2) {
        let [(s, f), (t, g)] = [pair[0], pair[1]];
        tri.glue(s, f, t, perm_between(rng, f, g)).expect("both faces are free");
    }
    tri
}

/// A multigraph on `1..=max_nodes` nodes, loops and parallel arcs allowed,
/// with every degree at most `max_degree` (a loop adds two).
pub fn random_multigraph<R: Rng>(rng: &mut R, max_nodes: usize, max_degree: usize) -> MultiGraph {
    let n = rng.gen_range(1..=max_nodes.max(1));
    let mut g = MultiGraph::new(n);
    let attempts = rng.gen_range(0..=n * max_degree);
    for _ in 0..attempts {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let extra = if u == v { 2 } else { 1 };
        if g.degree(u) + extra <= max_degree && g.degree(v) + extra <= max_degree {
            g.add_arc(u, v);
        }
    }
    g
}

/// A metric on `n` points: Euclidean in a random dimension 1..=4, or the
/// shortest-path metric of a random weighted complete graph.
pub fn random_metric<R: Rng>(rng: &mut R, n: usize) -> FiniteMetric {
    let mut d = vec![vec![0.0; n]; n];
    if rng.gen_bool(0.5) {
        let dim = rng.gen_range(1..=4);
        let pts: Vec<Vec<f64>> = (0..n).map(|_| (0..dim).map(|_| rng.gen_range(0.0..10.0)).collect()).collect();
        for i in 0..n {
            for j in 0..n {
                d[i][j] = pts[i].iter().zip(&pts[j]).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt();
            }
        }
    } else {
        for i in 0..n {
            for j in i + 1..n {
                let w = rng.gen_range(0.1..5.0);
                d[i][j] = w;
                d[j][i] = w;
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if d[i][k] + d[k][j] < d[i][j] {
                        d[i][j] = d[i][k] + d[k][j];
                    }
                }
            }
        }
    }
    FiniteMetric::new(d).expect("metrics built from distances are valid")
}
