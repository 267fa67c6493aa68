//! Independent homology oracle for closed gluings (every face glued).
//!
//! The dual 2-complex has a vertex per tetrahedron, an edge per glued face
//! pair and a 2-cell per edge class; it carries H1 of the manifold (ideal
//! vertices truncated). H1 is read off from the Smith normal form of the
//! relation matrix after collapsing a spanning tree.

#![allow(dead_code)]

use tetwidth_core::tri::{pair_without, Triangulation};
use tetwidth_core::unionfind::UnionFind;

/// For each edge class, the signed sequence of face pairs crossed while
/// walking once around it. Pair `i` is `gluing_pairs()[i]`.
fn edge_cycles(tri: &Triangulation) -> Vec<Vec<(usize, i64)>> {
    let pairs = tri.gluing_pairs();
    let n = tri.tet_count();
    let mut slot = vec![[(usize::MAX, 0i64); 4]; n];
    for (i, g) in pairs.iter().enumerate() {
        slot[g.src_tet][g.src_face] = (i, 1);
        slot[g.dst_tet][g.dst_face] = (i, -1);
    }
    let mut seen = vec![[false; 6]; n];
    let edges = tetwidth_core::tri::EDGES;
    let mut out = Vec::new();
    for t0 in 0..n {
        for (e0, &(a0, b0)) in edges.iter().enumerate() {
            if seen[t0][e0] {
                continue;
            }
            let f0 = pair_without(a0, b0)[0];
            let (mut t, mut a, mut b, mut f) = (t0, a0, b0, f0);
            let mut cycle = Vec::new();
            loop {
                seen[t][tetwidth_core::tri::edge_index(a, b)] = true;
                let g = tri.adjacent(t, f).expect("closed gluing");
                cycle.push(slot[t][f]);
                let (t2, a2, b2) = (g.tet, g.perm.apply(a), g.perm.apply(b));
                let f2 = 6 - a2 - b2 - g.face;
                (t, a, b, f) = (t2, a2, b2, f2);
                if (t, a, b, f) == (t0, a0, b0, f0) {
                    break;
                }
                assert!(cycle.len() <= 8 * n, "edge walk did not close");
            }
            out.push(cycle);
        }
    }
    out
}

/// Pairs in a spanning forest of the dual graph.
fn tree_pairs(tri: &Triangulation) -> Vec<bool> {
    let pairs = tri.gluing_pairs();
    let mut uf = UnionFind::new(tri.tet_count());
    pairs.iter().map(|g| uf.union(g.src_tet, g.dst_tet)).collect()
}

/// Invariant factors (all, including 1s and 0s for free parts are not
/// returned): returns (rank of free part, torsion coefficients > 1).
fn smith(mut m: Vec<Vec<i128>>, cols: usize) -> (usize, Vec<u64>) {
    let rows = m.len();
    let mut diag = Vec::new();
    let (mut r0, mut c0) = (0, 0);
    while r0 < rows && c0 < cols {
        // Pivot: smallest non-zero absolute value in the remaining block.
        let mut best: Option<(usize, usize)> = None;
        for i in r0..rows {
            for j in c0..cols {
                if m[i][j] != 0 && best.map_or(true, |(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(r0, pi);
        for row in m.iter_mut() {
            row.swap(c0, pj);
        }
        loop {
            let p = m[r0][c0];
            let mut changed = false;
            for i in r0 + 1..rows {
                let q = m[i][c0] / p;
                if q != 0 {
                    for j in c0..cols {
                        m[i][j] -= q * m[r0][j];
                    }
                }
                if m[i][c0] != 0 {
                    changed = true;
                }
            }
            for j in c0 + 1..cols {
                let q = m[r0][j] / p;
                if q != 0 {
                    for i in r0..rows {
                        m[i][j] -= q * m[i][c0];
                    }
                }
                if m[r0][j] != 0 {
                    changed = true;
                }
            }
            if !changed {
                // Divisibility of the rest of the block.
                let bad = (r0 + 1..rows).flat_map(|i| (c0 + 1..cols).map(move |j| (i, j))).find(|&(i, j)| m[i][j] % p != 0);
                match bad {
                    None => break,
                    Some((i, _)) => {
                        for j in c0..cols {
                            m[r0][j] += m[i][j];
                        }
                        continue;
                    }
                }
            }
            // Move the smallest entry of row r0 / column c0 to the pivot.
            let mut best = (r0, c0);
            for i in r0..rows {
                if m[i][c0] != 0 && m[i][c0].abs() < m[best.0][best.1].abs() {
                    best = (i, c0);
                }
            }
            for j in c0..cols {
                if m[r0][j] != 0 && m[r0][j].abs() < m[best.0][best.1].abs() {
                    best = (r0, j);
                }
            }
            m.swap(r0, best.0);
            for row in m.iter_mut() {
                row.swap(c0, best.1);
            }
        }
        diag.push(m[r0][c0].unsigned_abs() as u64);
        r0 += 1;
        c0 += 1;
    }
    let rank = cols - diag.len();
    (rank, diag.into_iter().filter(|&d| d > 1).collect())
}

/// First homology as (Betti number, torsion coefficients).
pub fn h1(tri: &Triangulation) -> (usize, Vec<u64>) {
    assert!(tri.is_closed(), "oracle needs every face glued");
    let tree = tree_pairs(tri);
    let gens: Vec<usize> = (0..tree.len()).filter(|&i| !tree[i]).collect();
    let col = |i: usize| gens.iter().position(|&g| g == i);
    let rows: Vec<Vec<i128>> = edge_cycles(tri)
        .into_iter()
        .map(|cyc| {
            let mut r = vec![0i128; gens.len()];
            for (i, s) in cyc {
                if let Some(c) = col(i) {
                    r[c] += s as i128;
                }
            }
            r
        })
        .collect();
    smith(rows, gens.len())
}

/// The double cover for the unique non-zero class in H^1(M; Z/2), or `None`
/// when that group is not Z/2.
pub fn double_cover(tri: &Triangulation) -> Option<Triangulation> {
    let pairs = tri.gluing_pairs();
    let tree = tree_pairs(tri);
    let gens: Vec<usize> = (0..tree.len()).filter(|&i| !tree[i]).collect();
    let m = gens.len();
    // Relations mod 2, Gaussian elimination to find the null space.
    let mut rows: Vec<Vec<u8>> = edge_cycles(tri)
        .into_iter()
        .map(|cyc| {
            let mut r = vec![0u8; m];
            for (i, _) in cyc {
                if let Some(c) = gens.iter().position(|&g| g == i) {
                    r[c] ^= 1;
                }
            }
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] == 1) else { continue };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && rows[i][c] == 1 {
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(pivot_row) {
                    *x ^= y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..m).filter(|c| !pivots.contains(c)).collect();
    if free.len() != 1 {
        return None;
    }
    let mut phi = vec![0u8; m];
    phi[free[0]] = 1;
    for (k, &c) in pivots.iter().enumerate() {
        phi[c] = rows[k][free[0]];
    }
    let n = tri.tet_count();
    let mut cover = Triangulation::new(2 * n, tri.kind());
    for (i, g) in pairs.iter().enumerate() {
        let shift = gens.iter().position(|&x| x == i).map_or(0, |c| phi[c] as usize);
        for s in 0..2 {
            let to = g.dst_tet + n * (s ^ shift);
            cover.glue(g.src_tet + n * s, g.src_face, to, g.perm).unwrap();
        }
    }
    Some(cover)
}
