//! Finite subdivision of an ideal triangulation.
//!
//! Each ideal tetrahedron is truncated (four link triangles, four hexagons),
//! each hexagon is coned from its centre and the whole polyhedron from a
//! centre point: 4 + 24 = 28 finite tetrahedra. Points are named
//! symbolically, so gluings follow from matching point names.

use alloc::vec::Vec;

use super::GenError;
use crate::graph::MultiGraph;
use crate::perm::Perm4;
use crate::tri::{face_vertices, Kind, Triangulation};
use crate::width::{td_check, TreeDecomposition};

pub const SUBDIVISION_FACTOR: usize = 28;

/// Point names inside one ideal tetrahedron.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Pt {
    Centre,
    /// Centre of the hexagon on face `f`.
    Hex(usize),
    /// Truncation point on edge `vw` next to vertex `v`.
    Near(usize, usize),
}

impl Pt {
    /// Image under a face gluing (only for points on that face).
    fn map(self, p: Perm4, face: usize, other: usize) -> Pt {
        match self {
            Pt::Hex(f) => {
                debug_assert_eq!(f, face);
                Pt::Hex(other)
            }
            Pt::Near(v, w) => Pt::Near(p.apply(v), p.apply(w)),
            Pt::Centre => unreachable!("the centre is not on a face"),
        }
    }
}

/// The hexagon on face `f` in cyclic order.
fn hexagon(f: usize) -> [Pt; 6] {
    let [a, b, c] = face_vertices(f);
    [
        Pt::Near(a, b),
        Pt::Near(b, a),
        Pt::Near(b, c),
        Pt::Near(c, b),
        Pt::Near(c, a),
        Pt::Near(a, c),
    ]
}

/// The 28 child tetrahedra of one ideal tetrahedron, as point quadruples.
/// Vertex 0 is always the centre, so face 0 is the face on the boundary of
/// the truncated polyhedron.
fn children() -> Vec<[Pt; 4]> {
    let mut out = Vec::with_capacity(SUBDIVISION_FACTOR);
    for v in 0..4 {
        let [a, b, c] = face_vertices(v);
        out.push([Pt::Centre, Pt::Near(v, a), Pt::Near(v, b), Pt::Near(v, c)]);
    }
    for f in 0..4 {
        let h = hexagon(f);
        for i in 0..6 {
            out.push([Pt::Centre, Pt::Hex(f), h[i], h[(i + 1) % 6]]);
        }
    }
    out
}

/// Finite triangulation refining an ideal one. Returns the triangulation and,
/// for each ideal tetrahedron, its 28 children (`28 t .. 28 t + 27`).
pub fn subdivide_finite(tri: &Triangulation) -> Result<(Triangulation, Vec<Vec<usize>>), GenError> {
    if tri.kind() != Kind::Ideal {
        return Err(GenError::NotIdeal);
    }
    tri.check()?;
    for class in 0..tri.vertex_classes().count {
        let link = tri.vertex_link(class)?;
        let torus = link.component_count == 1 && link.closed && link.orientable && link.euler_characteristic == 0;
        if !torus {
            return Err(GenError::LinkNotTorus { class });
        }
    }

    let kids = children();
    let n = tri.tet_count();
    let mut out = Triangulation::new(SUBDIVISION_FACTOR * n, Kind::Finite);
    let child = |t: usize, k: usize| SUBDIVISION_FACTOR * t + k;
    // Vertex map between two children given a point map.
    let perm = |from: &[Pt; 4], to: &[Pt; 4], f: &dyn Fn(Pt) -> Pt, free: (usize, usize)| {
        let mut image = [0usize; 4];
        for (i, &p) in from.iter().enumerate() {
            image[i] = if i == free.0 {
                free.1
            } else {
                to.iter().position(|&x| x == f(p)).expect("point is shared")
            };
        }
        Perm4::from_images(image).expect("bijective")
    };

    for t in 0..n {
        // Interior faces (those through the centre) pair up inside the
        // polyhedron.
        for (k, q) in kids.iter().enumerate() {
            for face in 1..4 {
                if out.adjacent(child(t, k), face).is_some() {
                    continue;
                }
                let pts = face_points(q, face);
                let (k2, f2) = holder(&kids, pts, Some(k));
                let p = perm(q, &kids[k2], &|x| x, (face, f2));
                out.glue(child(t, k), face, child(t, k2), p)?;
            }
        }
        // Hexagon triangles glue across the ideal face gluings.
        for f in 0..4 {
            let Some(g) = tri.adjacent(t, f) else { continue };
            if (g.tet, g.face) < (t, f) {
                continue;
            }
            for i in 0..6 {
                let k = 4 + 6 * f + i;
                let q = &kids[k];
                let image = face_points(q, 0).map(|x| x.map(g.perm, f, g.face));
                let (k2, f2) = holder(&kids, image, None);
                debug_assert_eq!(f2, 0);
                let p = perm(q, &kids[k2], &|x| x.map(g.perm, f, g.face), (0, f2));
                out.glue(child(t, k), 0, child(g.tet, k2), p)?;
            }
        }
    }
    let map = (0..n).map(|t| (0..SUBDIVISION_FACTOR).map(|k| child(t, k)).collect()).collect();
    Ok((out, map))
}

/// The child (other than `skip`) having the face with points `pts`, and
/// that face's number.
fn holder(kids: &[[Pt; 4]], pts: [Pt; 3], skip: Option<usize>) -> (usize, usize) {
    kids.iter()
        .enumerate()
        .filter(|&(k, _)| Some(k) != skip)
        .find(|(_, q)| pts.iter().all(|p| q.contains(p)))
        .map(|(k, q)| (k, (0..4).find(|&i| !pts.contains(&q[i])).unwrap()))
        .expect("every interior face is shared by two children")
}

fn face_points(q: &[Pt; 4], face: usize) -> [Pt; 3] {
    let [a, b, c] = face_vertices(face);
    [q[a], q[b], q[c]]
}

/// Replaces every node in every bag by its images under `map`.
pub fn td_blowup(td: &TreeDecomposition, map: &[Vec<usize>]) -> Result<TreeDecomposition, GenError> {
    let mut bags = Vec::with_capacity(td.bags.len());
    for bag in &td.bags {
        let mut out = Vec::new();
        for &v in bag {
            out.extend_from_slice(map.get(v).ok_or(GenError::NodeMapIncomplete { node: v })?);
        }
        bags.push(out);
    }
    Ok(TreeDecomposition::new(bags, td.arcs.clone()))
}

/// [`td_blowup`], then checks the result against `graph`.
pub fn td_blowup_checked(
    graph: &MultiGraph,
    td: &TreeDecomposition,
    map: &[Vec<usize>],
) -> Result<TreeDecomposition, GenError> {
    let out = td_blowup(td, map)?;
    td_check(graph, &out).map_err(GenError::BlowupInvalid)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn child_faces_pair_up() {
        let kids = children();
        assert_eq!(kids.len(), SUBDIVISION_FACTOR);
        // Every face through the centre is shared by exactly two children.
        for q in &kids {
            for face in 1..4 {
                let pts = face_points(q, face);
                let holders = kids.iter().filter(|q2| pts.iter().all(|p| q2.contains(p))).count();
                assert_eq!(holders, 2);
            }
        }
    }

    #[test]
    fn identity_blowup() {
        let td = TreeDecomposition::new(alloc::vec![alloc::vec![0, 1], alloc::vec![1, 2]], alloc::vec![(0, 1)]);
        let id: Vec<Vec<usize>> = (0..3).map(|v| alloc::vec![v]).collect();
        assert_eq!(td_blowup(&td, &id).unwrap(), td);
        assert_eq!(td_blowup(&td, &id[..2]), Err(GenError::NodeMapIncomplete { node: 2 }));
    }
}
