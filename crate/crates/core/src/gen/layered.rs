//! Layered solid tori and Dehn filling.
//!
//! A layered solid torus starts from one tetrahedron with two faces folded
//! together; its boundary is a one-vertex torus made of two triangles and
//! three edges. Layering a tetrahedron across a boundary edge replaces that
//! edge by the opposite diagonal. If the meridian disc meets the boundary
//! edges `x, y, z` times with `x = |y - z|`, layering across the `x` edge
//! gives a new edge met `y + z` times, so a target triple `(s, m, s + m)` is
//! reached by running the Euclidean algorithm backwards to `(1, 2, 3)`.

use alloc::vec::Vec;

use super::GenError;
use crate::perm::Perm4;
use crate::tri::{face_vertices, BoundarySide, Kind, TriError, Triangulation};

/// A slope `p/q` on a marked one-vertex torus. It meets the marking edges
/// `e1, e2, e3` in `|p|`, `|q|` and `|p + q|` points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Slope {
    pub p: i64,
    pub q: i64,
}

impl Slope {
    pub fn new(p: i64, q: i64) -> Result<Self, GenError> {
        if gcd(p.unsigned_abs(), q.unsigned_abs()) != 1 {
            return Err(GenError::NotCoprime { p, q });
        }
        Ok(Self { p, q })
    }

    pub fn weights(&self) -> [u64; 3] {
        [self.p.unsigned_abs(), self.q.unsigned_abs(), (self.p + self.q).unsigned_abs()]
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The two boundary faces of a one-vertex torus boundary component and its
/// three edges, each named by a side of the first face.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundaryMarking {
    pub faces: [(usize, usize); 2],
    pub edges: [BoundarySide; 3],
}

impl BoundaryMarking {
    /// Canonical marking of boundary component `index`: faces in increasing
    /// order; `e_i` is the side of the first face opposite its `i`-th vertex.
    pub fn canonical(tri: &Triangulation, index: usize) -> Result<Self, GenError> {
        let comps = tri.boundary_components()?;
        let comp = comps.get(index).ok_or(GenError::BoundaryComponent {
            index,
            count: comps.len(),
        })?;
        if comp.triangle_count != 2 || comp.euler_characteristic != 0 || !comp.orientable || comp.vertex_count != 1 {
            return Err(GenError::NotOneVertexTorus { index });
        }
        let (t, f) = comp.faces[0];
        let [a, b, c] = face_vertices(f);
        let side = |x, y| BoundarySide { tet: t, face: f, a: x, b: y };
        Ok(Self {
            faces: [comp.faces[0], comp.faces[1]],
            edges: [side(b, c), side(a, c), side(a, b)],
        })
    }

    /// Which marking edge a side of either face lies on.
    fn edge_of(&self, tri: &Triangulation, side: BoundarySide) -> usize {
        let same = |s: BoundarySide, e: BoundarySide| {
            (s.tet, s.face) == (e.tet, e.face) && ((s.a, s.b) == (e.a, e.b) || (s.a, s.b) == (e.b, e.a))
        };
        for (i, &e) in self.edges.iter().enumerate() {
            if same(side, e) || same(side, tri.boundary_neighbour(e)) {
                return i;
            }
        }
        panic!("side does not belong to this marking");
    }

    /// For boundary face `k`, the vertex opposite each marking edge.
    fn corners(&self, tri: &Triangulation, k: usize) -> [usize; 3] {
        let (t, f) = self.faces[k];
        let mut out = [usize::MAX; 3];
        for v in face_vertices(f) {
            let [x, y] = crate::tri::pair_without(v, f);
            let e = self.edge_of(tri, BoundarySide { tet: t, face: f, a: x, b: y });
            out[e] = v;
        }
        out
    }
}

/// Layers a new tetrahedron across the boundary edge containing `side`.
/// The new tetrahedron's faces 3 and 2 cover the two boundary faces at that
/// edge (vertices 0, 1 on the edge); its faces 0 and 1 are the new boundary
/// and edge 23 the new boundary edge.
pub fn layer_on_edge(tri: &mut Triangulation, side: BoundarySide) -> Result<usize, GenError> {
    let other = tri.boundary_neighbour(side);
    if (other.tet, other.face) == (side.tet, side.face) {
        return Err(GenError::SelfAdjacentEdge);
    }
    Ok(layer_between(tri, side, other)?)
}

/// Layering onto two given sides, `a`/`b` of `other` matching those of
/// `side`.
pub(super) fn layer_between(tri: &mut Triangulation, side: BoundarySide, other: BoundarySide) -> Result<usize, TriError> {
    let opp1 = 6 - side.face - side.a - side.b;
    let opp2 = 6 - other.face - other.a - other.b;
    let n = tri.add_tets(1);
    let p1 = Perm4::from_images([side.a, side.b, opp1, side.face]).expect("distinct");
    let p2 = Perm4::from_images([other.a, other.b, other.face, opp2]).expect("distinct");
    tri.glue(n, 3, side.tet, p1)?;
    tri.glue(n, 2, other.tet, p2)?;
    Ok(n)
}

/// Boundary edge weights of the meridian disc of the one-tetrahedron
/// layered solid torus (`face 0 -> face 1` by `0 -> 1 -> 2 -> 3 -> 0`):
/// edge 01 three times, edges 02 / 13 twice, edges 03 / 12 once.
const BASE_WEIGHTS: [(usize, usize, u64); 3] = [(0, 1, 3), (0, 2, 2), (0, 3, 1)];

fn base_lst() -> Triangulation {
    let mut t = Triangulation::new(1, Kind::Finite);
    t.glue(0, 0, 0, Perm4::new([1, 2, 3, 0]).unwrap())
        .expect("base fold is a valid gluing");
    t
}

/// Layered solid torus carrying meridian weights on its boundary edges.
struct Lst {
    tri: Triangulation,
    /// (tet, vertex a, vertex b, weight) for edges touching the boundary.
    weights: Vec<(usize, usize, usize, u64)>,
}

impl Lst {
    fn weight_of(&self, tet: usize, a: usize, b: usize) -> u64 {
        let classes = self.tri.edge_classes();
        let c = classes.class_of(tet, crate::tri::edge_index(a, b));
        self.weights
            .iter()
            .find(|&&(t, x, y, _)| classes.class_of(t, crate::tri::edge_index(x, y)) == c)
            .map(|w| w.3)
            .expect("boundary edge has a weight")
    }

    fn boundary_sides(&self) -> Vec<(BoundarySide, u64)> {
        let (t, f) = self.tri.boundary_faces()[0];
        let [a, b, c] = face_vertices(f);
        [(a, b), (a, c), (b, c)]
            .into_iter()
            .map(|(x, y)| (BoundarySide { tet: t, face: f, a: x, b: y }, self.weight_of(t, x, y)))
            .collect()
    }

    /// Layers across the edge of weight `from`, whose new weight is `to`.
    fn flip(&mut self, from: u64, to: u64) -> Result<(), GenError> {
        let (side, _) = self
            .boundary_sides()
            .into_iter()
            .find(|&(_, w)| w == from)
            .expect("edge with the requested weight");
        let n = layer_on_edge(&mut self.tri, side)?;
        self.weights.push((n, 2, 3, to));
        Ok(())
    }
}

/// A layered solid torus whose meridian meets the returned marking edges
/// `e1, e2, e3` in `|p|`, `|q|`, `|p + q|` points.
pub fn layered_solid_torus(slope: Slope) -> Result<(Triangulation, BoundaryMarking), GenError> {
    let target = slope.weights();
    let mut sorted = target;
    sorted.sort_unstable();

    let mut lst = Lst {
        tri: base_lst(),
        weights: BASE_WEIGHTS.iter().map(|&(a, b, w)| (0, a, b, w)).collect(),
    };
    match sorted {
        [1, 2, 3] => {}
        [1, 1, 2] => lst.flip(3, 1)?,
        [0, 1, 1] => {
            lst.flip(3, 1)?;
            lst.flip(2, 0)?;
        }
        [s, m, l] => {
            // Walk back from the target to (1, 2, 3), then replay forwards.
            let mut chain = alloc::vec![[s, m, l]];
            let mut cur = [s, m, l];
            while cur != [1, 2, 3] {
                let [a, b, c] = cur;
                if c != a + b || a == 0 {
                    return Err(GenError::UnreachableSlope { p: slope.p, q: slope.q });
                }
                cur = [b - a, a, b];
                cur.sort_unstable();
                chain.push(cur);
            }
            chain.reverse();
            for w in chain.windows(2) {
                let (old, new) = (w[0], w[1]);
                let removed = *old.iter().find(|x| !new.contains(x)).unwrap_or(&old[0]);
                let added = new[2];
                lst.flip(removed, added)?;
            }
        }
    }

    // Name the boundary edges so that e_i carries target weight i.
    let (t, f) = lst.tri.boundary_faces()[0];
    let second = lst.tri.boundary_faces()[1];
    let mut sides = lst.boundary_sides();
    let mut edges = [sides[0].0; 3];
    for (i, &w) in target.iter().enumerate() {
        let k = sides.iter().position(|&(_, x)| x == w).expect("weights match");
        edges[i] = sides.remove(k).0;
    }
    let marking = BoundaryMarking {
        faces: [(t, f), second],
        edges,
    };
    Ok((lst.tri, marking))
}

/// Glues a layered solid torus to boundary component `component` of `tri`
/// so that `slope` (read against the canonical marking) bounds a disc.
pub fn dehn_fill(tri: &Triangulation, component: usize, slope: Slope) -> Result<Triangulation, GenError> {
    let marking = BoundaryMarking::canonical(tri, component)?;
    dehn_fill_marked(tri, &marking, slope)
}

/// Dehn filling against an explicit marking of a one-vertex torus boundary.
pub fn dehn_fill_marked(tri: &Triangulation, marking: &BoundaryMarking, slope: Slope) -> Result<Triangulation, GenError> {
    let (lst, lst_marking) = layered_solid_torus(slope)?;
    let mut out = tri.clone();
    let offset = out.append(&lst);
    for k in 0..2 {
        let here = marking.corners(tri, k);
        let there = lst_marking.corners(&lst, k);
        let (t, f) = marking.faces[k];
        let (lt, lf) = lst_marking.faces[k];
        let mut image = [0usize; 4];
        image[f] = lf;
        for e in 0..3 {
            image[here[e]] = there[e];
        }
        let perm = Perm4::from_images(image).expect("corners are distinct");
        out.glue(t, f, lt + offset, perm)?;
    }
    Ok(out)
}
