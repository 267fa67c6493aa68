//! Normal surfaces in standard coordinates.
//!
//! Coordinates are tetrahedron-major, seven per tetrahedron: four triangle
//! counts (one per corner) followed by three quad counts. Quad type `q`
//! separates the vertex pair `{0, q + 1}` from the other two vertices:
//!
//! | type | separates      |
//! |------|----------------|
//! | 0    | `{0,1} | {2,3}` |
//! | 1    | `{0,2} | {1,3}` |
//! | 2    | `{0,3} | {1,2}` |
//!
//! A quad of type `q` crosses face `f` in an arc that cuts off the vertex
//! paired with `f`. The same table decides which faces a crushed tetrahedron
//! identifies (see [`purse_partner`]).

mod crush;
mod enumerate;

pub use crush::{crush, crush_dual, one_vertex_pipeline, PipelineLimits, PipelineOutcome, PipelineStep};
pub use enumerate::{enumerate_vertex_surfaces, DEFAULT_ENUMERATION_LIMIT, MAX_ENUMERATION_LIMIT};

use alloc::vec::Vec;
use core::fmt;

use crate::complex::{PolygonComplex, SurfaceSummary};
use crate::tri::{face_vertices, Triangulation, TriError, EDGES};

/// Quad type separating `{a, b}` from the other two vertices.
pub fn quad_type(a: usize, b: usize) -> usize {
    debug_assert!(a != b && a < 4 && b < 4);
    let partner_of_zero = match (a, b) {
        (0, x) | (x, 0) => x,
        // {a, b} avoids 0, so its complement contains 0 and the partner of
        // 0 is whichever vertex is left over.
        _ => 6 - a - b,
    };
    partner_of_zero - 1
}

/// The face paired with `face` when a tetrahedron carrying quads of type `q`
/// is flattened.
pub fn purse_partner(q: usize, face: usize) -> usize {
    let p = q + 1;
    match face {
        0 => p,
        f if f == p => 0,
        f => 6 - p - f,
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct NormalCoords(Vec<u64>);

impl NormalCoords {
    pub fn zero(tets: usize) -> Self {
        Self(alloc::vec![0; 7 * tets])
    }

    pub fn from_vec(v: Vec<u64>) -> Self {
        Self(v)
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u64> {
        self.0
    }

    /// Number of tetrahedra covered, or `None` when the length is not a
    /// multiple of seven.
    pub fn tet_count(&self) -> Option<usize> {
        (self.0.len() % 7 == 0).then_some(self.0.len() / 7)
    }

    pub fn tri(&self, tet: usize, corner: usize) -> u64 {
        self.0[7 * tet + corner]
    }

    pub fn quad(&self, tet: usize, q: usize) -> u64 {
        self.0[7 * tet + 4 + q]
    }

    pub fn set_tri(&mut self, tet: usize, corner: usize, value: u64) {
        self.0[7 * tet + corner] = value;
    }

    pub fn set_quad(&mut self, tet: usize, q: usize, value: u64) {
        self.0[7 * tet + 4 + q] = value;
    }

    /// The quad type present in `tet`, if exactly one is.
    pub fn quad_in(&self, tet: usize) -> Option<usize> {
        let mut found = None;
        for q in 0..3 {
            if self.quad(tet, q) > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(q);
            }
        }
        found
    }

    /// Number of normal arcs on face `face` of `tet` cutting off `corner`.
    pub fn arcs(&self, tet: usize, face: usize, corner: usize) -> u64 {
        self.tri(tet, corner) + self.quad(tet, quad_type(corner, face))
    }

    pub fn scaled(&self, k: u64) -> Self {
        Self(self.0.iter().map(|x| x * k).collect())
    }
}

impl fmt::Debug for NormalCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("NormalCoords[")?;
        for (t, chunk) in self.0.chunks(7).enumerate() {
            if t > 0 {
                f.write_str(" | ")?;
            }
            for (i, x) in chunk.iter().enumerate() {
                if i == 4 {
                    f.write_str(" ;")?;
                }
                write!(f, " {x}")?;
            }
        }
        f.write_str(" ]")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum NormalError {
    #[error(transparent)]
    Triangulation(#[from] TriError),
    #[error("coordinate vector has length {found}, expected {expected}")]
    Dimension { expected: usize, found: usize },
    #[error("coordinates violate the matching equations")]
    Matching,
    #[error("tetrahedron {tet} carries more than one quad type")]
    QuadConstraint { tet: usize },
    #[error("{tets} tetrahedra exceeds the enumeration limit of {limit}")]
    LimitExceeded { tets: usize, limit: usize },
    #[error("degenerate flattening: face chain from tetrahedron {tet} face {face} returns to its start")]
    DegenerateFlattening { tet: usize, face: usize },
    #[error("quad information lists {found} nodes but the graph has {expected}")]
    QuadInfoLength { expected: usize, found: usize },
    #[error("node {node} has {slots} arc slots; at most 4 are allowed")]
    TooManySlots { node: usize, slots: usize },
    #[error("iteration cap of {cap} reached")]
    IterationCap { cap: usize },
}

fn check_dimension(tri: &Triangulation, coords: &NormalCoords) -> Result<(), NormalError> {
    let expected = 7 * tri.tet_count();
    if coords.0.len() != expected {
        return Err(NormalError::Dimension {
            expected,
            found: coords.0.len(),
        });
    }
    Ok(())
}

/// Checks the matching equations: across every internal face, each of the
/// three arc types is equally numerous on both sides.
pub fn matching_ok(tri: &Triangulation, coords: &NormalCoords) -> Result<bool, NormalError> {
    check_dimension(tri, coords)?;
    for g in tri.gluing_pairs() {
        for v in face_vertices(g.src_face) {
            let here = coords.arcs(g.src_tet, g.src_face, v);
            let there = coords.arcs(g.dst_tet, g.dst_face, g.perm.apply(v));
            if here != there {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// At most one quad type per tetrahedron.
pub fn quad_constraint_ok(coords: &NormalCoords) -> bool {
    coords
        .0
        .chunks(7)
        .all(|c| c[4..].iter().filter(|&&x| x > 0).count() <= 1)
}

pub fn is_trivial(coords: &NormalCoords) -> bool {
    coords.0.chunks(7).all(|c| c[4..].iter().all(|&x| x == 0))
}

pub fn vertex_link_coords(tri: &Triangulation, class: usize) -> Result<NormalCoords, NormalError> {
    let classes = tri.vertex_classes();
    if class >= classes.count {
        return Err(TriError::ClassOutOfRange {
            class,
            count: classes.count,
        }
        .into());
    }
    let mut c = NormalCoords::zero(tri.tet_count());
    for (t, v) in classes.members(class) {
        c.set_tri(t, v, 1);
    }
    Ok(c)
}

/// Number of intersections of the surface with each edge class.
pub fn edge_weights(tri: &Triangulation, coords: &NormalCoords) -> Result<Vec<u64>, NormalError> {
    check_dimension(tri, coords)?;
    let classes = tri.edge_classes();
    let mut out = alloc::vec![u64::MAX; classes.count];
    for t in 0..tri.tet_count() {
        for (e, &(i, j)) in EDGES.iter().enumerate() {
            let c = classes.class_of(t, e);
            if out[c] == u64::MAX {
                let skip = quad_type(i, j);
                let quads: u64 = (0..3).filter(|&q| q != skip).map(|q| coords.quad(t, q)).sum();
                out[c] = coords.tri(t, i) + coords.tri(t, j) + quads;
            }
        }
    }
    Ok(out)
}

/// Polygon corners of normal discs are labelled by the tetrahedron edge
/// they sit on.
fn triangle_corners(v: usize) -> [(usize, usize); 3] {
    face_vertices(v).map(|w| (v, w))
}

fn quad_corners(q: usize) -> [(usize, usize); 4] {
    let (a, b) = (0, q + 1);
    let [c, d] = crate::tri::pair_without(a, b);
    [(a, c), (a, d), (b, d), (b, c)]
}

enum DiscCorners {
    Tri([(usize, usize); 3]),
    Quad([(usize, usize); 4]),
}

impl DiscCorners {
    fn index(&self, x: usize, y: usize) -> usize {
        let corners: &[(usize, usize)] = match self {
            DiscCorners::Tri(c) => c,
            DiscCorners::Quad(c) => c,
        };
        corners
            .iter()
            .position(|&(a, b)| (a, b) == (x, y) || (a, b) == (y, x))
            .expect("edge is not a corner of this disc")
    }
}

/// Builds every normal disc and glues them along shared normal arcs.
pub fn disc_complex(tri: &Triangulation, coords: &NormalCoords) -> Result<PolygonComplex, NormalError> {
    check_dimension(tri, coords)?;
    tri.check()?;
    if !quad_constraint_ok(coords) {
        let tet = coords
            .0
            .chunks(7)
            .position(|c| c[4..].iter().filter(|&&x| x > 0).count() > 1)
            .unwrap();
        return Err(NormalError::QuadConstraint { tet });
    }
    if !matching_ok(tri, coords)? {
        return Err(NormalError::Matching);
    }

    let n = tri.tet_count();
    let mut complex = PolygonComplex::new();
    // first[t][k] = polygon id of copy 0 of disc type k (0..4 tri, 4..7 quad)
    let mut first = alloc::vec![[0usize; 7]; n];
    for (t, row) in first.iter_mut().enumerate() {
        for (k, slot) in row.iter_mut().enumerate() {
            *slot = complex.polygon_count();
            let sides = if k < 4 { 3 } else { 4 };
            for _ in 0..coords.0[7 * t + k] {
                complex.add_polygon(sides);
            }
        }
    }

    // The j-th arc (counting outward from `corner`) on face `face` of
    // `tet`: the polygon it belongs to, and that polygon's corner list.
    let arc_disc = |tet: usize, face: usize, corner: usize, j: u64| -> (usize, DiscCorners) {
        let tris = coords.tri(tet, corner);
        if j < tris {
            return (first[tet][corner] + j as usize, DiscCorners::Tri(triangle_corners(corner)));
        }
        let q = quad_type(corner, face);
        let k = j - tris;
        // Quad copies are numbered from the {0, q+1} side.
        let copy = if corner == 0 || corner == q + 1 {
            k
        } else {
            coords.quad(tet, q) - 1 - k
        };
        (first[tet][4 + q] + copy as usize, DiscCorners::Quad(quad_corners(q)))
    };

    for g in tri.gluing_pairs() {
        for v in face_vertices(g.src_face) {
            let [x, y] = crate::tri::pair_without(v, g.src_face);
            let (v2, x2, y2) = (g.perm.apply(v), g.perm.apply(x), g.perm.apply(y));
            for j in 0..coords.arcs(g.src_tet, g.src_face, v) {
                let (p, cp) = arc_disc(g.src_tet, g.src_face, v, j);
                let (q, cq) = arc_disc(g.dst_tet, g.dst_face, v2, j);
                // The arc runs between the disc corners on edges vx and vy.
                complex.glue(
                    p,
                    (cp.index(v, x), cp.index(v, y)),
                    q,
                    (cq.index(v2, x2), cq.index(v2, y2)),
                );
            }
        }
    }
    Ok(complex)
}

/// Reconstructs the surface from its discs and summarises its topology.
pub fn build_surface(tri: &Triangulation, coords: &NormalCoords) -> Result<SurfaceSummary, NormalError> {
    Ok(disc_complex(tri, coords)?.summary())
}

/// Per-component summaries of the reconstructed surface.
pub fn surface_components(
    tri: &Triangulation,
    coords: &NormalCoords,
) -> Result<Vec<crate::complex::ComponentSummary>, NormalError> {
    Ok(disc_complex(tri, coords)?.components())
}

/// A crushing step, recorded against the original dual graph's node ids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Edit {
    /// Replace one arc `u–v` and one arc `v–w` by an arc `u–w`.
    Lift { u: usize, v: usize, w: usize },
    /// Delete node `v` together with every arc still meeting it.
    RemoveNode { v: usize },
    /// Delete one arc `u–v`.
    RemoveArc { u: usize, v: usize },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CrushCertificate {
    pub edits: Vec<Edit>,
}

impl CrushCertificate {
    pub fn is_empty(&self) -> bool {
        self.edits.is_empty()
    }

    pub fn len(&self) -> usize {
        self.edits.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Perm4;
    use crate::tri::Kind;

    pub(crate) fn two_tet_sphere() -> Triangulation {
        let mut t = Triangulation::new(2, Kind::Finite);
        for f in 0..4 {
            t.glue(0, f, 1, Perm4::IDENTITY).unwrap();
        }
        t
    }

    #[test]
    fn quad_tables_agree() {
        for q in 0..3 {
            assert_eq!(quad_type(0, q + 1), q);
            let [c, d] = crate::tri::pair_without(0, q + 1);
            assert_eq!(quad_type(c, d), q);
            for f in 0..4 {
                let p = purse_partner(q, f);
                assert_ne!(p, f);
                assert_eq!(purse_partner(q, p), f);
            }
            // Each corner of a quad lies on an edge the quad separates.
            for (a, b) in quad_corners(q) {
                assert_ne!(quad_type(a, b), q);
            }
        }
        // the arc on face f cutting off v belongs to the quad pairing v with f
        assert_eq!(quad_type(2, 3), 0);
        assert_eq!(quad_type(1, 3), 1);
        assert_eq!(quad_type(1, 2), 2);
    }

    #[test]
    fn predicates() {
        let t = two_tet_sphere();
        let zero = NormalCoords::zero(2);
        assert!(matching_ok(&t, &zero).unwrap());
        assert!(quad_constraint_ok(&zero) && is_trivial(&zero));
        let mut one = zero.clone();
        one.set_tri(0, 0, 1);
        assert!(!matching_ok(&t, &one).unwrap());
        let mut two = NormalCoords::zero(1);
        two.set_quad(0, 0, 1);
        two.set_quad(0, 1, 1);
        assert!(!quad_constraint_ok(&two));
        let mut five = NormalCoords::zero(1);
        five.set_quad(0, 2, 5);
        assert!(quad_constraint_ok(&five) && !is_trivial(&five));
        assert!(matches!(
            matching_ok(&t, &five),
            Err(NormalError::Dimension { expected: 14, found: 7 })
        ));
    }

    #[test]
    fn links_are_normal_spheres() {
        let t = two_tet_sphere();
        for c in 0..4 {
            let link = vertex_link_coords(&t, c).unwrap();
            assert!(matching_ok(&t, &link).unwrap());
            let s = build_surface(&t, &link).unwrap();
            assert_eq!((s.component_count, s.euler_characteristic, s.closed), (1, 2, true));
            let s2 = build_surface(&t, &link.scaled(2)).unwrap();
            assert_eq!((s2.component_count, s2.euler_characteristic), (2, 4));
        }
        assert_eq!(build_surface(&t, &NormalCoords::zero(2)).unwrap().component_count, 0);
    }

    #[test]
    fn single_tetrahedron_discs() {
        let t = Triangulation::new(1, Kind::Finite);
        for q in 0..3 {
            let mut c = NormalCoords::zero(1);
            c.set_quad(0, q, 3);
            let s = surface_components(&t, &c).unwrap();
            assert_eq!(s.len(), 3);
            assert!(s.iter().all(|x| x.euler_characteristic == 1 && x.boundary_sides == 4));
        }
    }

    #[test]
    fn quad_surface_through_glued_faces() {
        // Two tetrahedra glued along all four faces by the identity form a
        // 3-sphere; a quad of the same type in both is an equatorial sphere.
        let t = two_tet_sphere();
        for q in 0..3 {
            let mut c = NormalCoords::zero(2);
            c.set_quad(0, q, 1);
            c.set_quad(1, q, 1);
            assert!(matching_ok(&t, &c).unwrap());
            let s = build_surface(&t, &c).unwrap();
            assert_eq!((s.component_count, s.euler_characteristic, s.closed), (1, 2, true));
            assert!(s.orientable);
            let w = edge_weights(&t, &c).unwrap();
            assert_eq!(w.iter().filter(|&&x| x == 1).count(), 4);
        }
    }
}
