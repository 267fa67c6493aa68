//! Layered ideal triangulations of 2-bridge knot exteriors.
//!
//! The exterior minus its two end tangles is a product of the 4-punctured
//! sphere with an interval. It is built as a stack of tetrahedron pairs, each
//! pair layered across the two edges of one slope of the current pillowcase
//! triangulation. The innermost pillowcase is closed by folding its
//! triangles in pairs across the two edges of one slope (a hinge fold), and
//! the outermost is closed the same way. Pair `k` is tetrahedra `2k`, `2k+1`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::GenError;
use crate::perm::Perm4;
use crate::tri::{edge_index, face_vertices, BoundarySide, Kind, Triangulation};
use crate::width::TreeDecomposition;

/// Slope along which the innermost pillowcase is folded, in the coordinates
/// of the first pair (its covered edges have slope 1, its new edges -1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Fold {
    Horizontal,
    Vertical,
}

/// Which of the two non-newest pillowcase slopes a step uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LayerMove {
    Oldest,
    Middle,
}

/// The full recipe: the inner fold, one move per pair after the first, and
/// the outer fold.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoBridgeMoves {
    pub inner: Fold,
    pub layers: Vec<LayerMove>,
    pub outer: LayerMove,
}

/// `(numerator, denominator)` of `a1 + 1/(a2 + 1/(... + 1/an))`.
pub fn two_bridge_fraction(coeffs: &[u64]) -> (u64, u64) {
    let (mut p, mut q) = (1u64, 0u64);
    for &a in coeffs.iter().rev() {
        (p, q) = (a * p + q, p);
    }
    (p, q)
}

pub fn crossing_count(coeffs: &[u64]) -> u64 {
    coeffs.iter().sum()
}

fn check_coefficients(coeffs: &[u64]) -> Result<u64, GenError> {
    let (first, last) = match (coeffs.first(), coeffs.last()) {
        (Some(&f), Some(&l)) => (f, l),
        _ => return Err(GenError::BadCoefficients),
    };
    // A single twist region is a (2, p) torus knot, which this layering
    // does not reach.
    if coeffs.len() < 2 || coeffs.contains(&0) || first < 2 || last < 2 {
        return Err(GenError::BadCoefficients);
    }
    let c = crossing_count(coeffs);
    if c < 4 {
        return Err(GenError::TooFewCrossings { crossings: c, needed: 4 });
    }
    let (p, q) = two_bridge_fraction(coeffs);
    if p % 2 == 0 {
        return Err(GenError::NotAKnot { p, q });
    }
    Ok(c)
}

/// The recipe for a twist-region vector: letters of the crossings between
/// the two end tangles alternate in runs `a1 - 1, a2, ..., a(n-1), an - 1`;
/// a repeated letter flips the middle-aged slope, a change of letter the
/// oldest.
fn moves_for(coeffs: &[u64]) -> TwoBridgeMoves {
    let mut word = Vec::new();
    let last = coeffs.len() - 1;
    for (i, &a) in coeffs.iter().enumerate() {
        let run = a - (i == 0) as u64 - (i == last) as u64;
        word.extend(core::iter::repeat(i % 2).take(run as usize));
    }
    let step = |x: usize, y: usize| if word[x] == word[y] { LayerMove::Middle } else { LayerMove::Oldest };
    let pairs = word.len() - 1;
    TwoBridgeMoves {
        inner: Fold::Horizontal,
        layers: (1..pairs).map(|k| step(k - 1, k)).collect(),
        outer: step(pairs - 1, pairs),
    }
}

/// Ideal triangulation of the exterior of the 2-bridge knot whose diagram has
/// twist regions of `coeffs[i]` crossings: `2 (C - 3)` tetrahedra for `C`
/// crossings. Coefficient lists whose fraction has even numerator describe
/// links and are rejected.
pub fn two_bridge(coeffs: &[u64]) -> Result<Triangulation, GenError> {
    check_coefficients(coeffs)?;
    Ok(two_bridge_with(&moves_for(coeffs)))
}

/// The current outermost pillowcase. Its side pairings are tracked
/// explicitly: the inner fold identifies edges shared by the inner and
/// outer pillowcases of the first pair, so walking around edges of the
/// partial triangulation does not recover them.
struct Pillowcase {
    tri: Triangulation,
    faces: Vec<(usize, usize)>,
    /// Directed side -> matching side of the neighbouring triangle.
    next: BTreeMap<BoundarySide, BoundarySide>,
    /// Slope age of each side, keyed by `(tet, local edge)`.
    age: BTreeMap<(usize, usize), u32>,
    next_age: u32,
}

fn flip(s: BoundarySide) -> BoundarySide {
    BoundarySide { a: s.b, b: s.a, ..s }
}

impl Pillowcase {
    fn link(&mut self, s: BoundarySide, t: BoundarySide) {
        self.next.insert(s, t);
        self.next.insert(t, s);
        self.next.insert(flip(s), flip(t));
        self.next.insert(flip(t), flip(s));
    }

    fn neighbour(&self, s: BoundarySide) -> BoundarySide {
        self.next[&s]
    }

    fn side_age(&self, s: BoundarySide) -> u32 {
        self.age[&(s.tet, edge_index(s.a, s.b))]
    }

    fn sides(&self) -> Vec<BoundarySide> {
        let mut out = Vec::new();
        for &(t, f) in &self.faces {
            let [a, b, c] = face_vertices(f);
            for (x, y) in [(a, b), (a, c), (b, c)] {
                out.push(BoundarySide { tet: t, face: f, a: x, b: y });
            }
        }
        out
    }

    /// One side on each of the two edges of slope age `age`.
    fn edges_of_age(&self, age: u32) -> [BoundarySide; 2] {
        let sides: Vec<_> = self.sides().into_iter().filter(|&s| self.side_age(s) == age).collect();
        let first = sides[0];
        let nb = self.neighbour(first);
        let second = *sides
            .iter()
            .find(|s| (s.tet, s.face) != (first.tet, first.face) && (s.tet, s.face) != (nb.tet, nb.face))
            .expect("a pillowcase has two edges of each slope");
        [first, second]
    }

    /// Current slope ages, oldest first.
    fn ages(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.sides().into_iter().map(|s| self.side_age(s)).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    fn pick(&self, m: LayerMove) -> u32 {
        let a = self.ages();
        debug_assert_eq!(a.len(), 3);
        match m {
            LayerMove::Oldest => a[0],
            LayerMove::Middle => a[1],
        }
    }

    fn layer(&mut self, m: LayerMove) {
        let target = self.pick(m);
        let new_age = self.next_age;
        self.next_age += 1;
        for side in self.edges_of_age(target) {
            let other = self.neighbour(side);
            let opp1 = 6 - side.face - side.a - side.b;
            let opp2 = 6 - other.face - other.a - other.b;
            let at = |s: BoundarySide, x, y| BoundarySide { a: x, b: y, ..s };
            // New side (tet-local vertices) <- the old side it replaces.
            let inherited = [
                (1, 0, 2, at(side, side.a, opp1)),
                (0, 1, 2, at(side, side.b, opp1)),
                (1, 0, 3, at(other, other.a, opp2)),
                (0, 1, 3, at(other, other.b, opp2)),
            ];
            let n = super::layered::layer_between(&mut self.tri, side, other).expect("pillowcase faces are free");
            for (f, x, y, old) in inherited {
                let new = BoundarySide { tet: n, face: f, a: x, b: y };
                let across = self.neighbour(old);
                self.link(new, across);
                let a = self.side_age(old);
                self.age.insert((n, edge_index(x, y)), a);
            }
            self.link(
                BoundarySide { tet: n, face: 0, a: 2, b: 3 },
                BoundarySide { tet: n, face: 1, a: 2, b: 3 },
            );
            self.age.insert((n, edge_index(2, 3)), new_age);
            self.faces.retain(|&x| x != (side.tet, side.face) && x != (other.tet, other.face));
            self.faces.extend([(n, 0), (n, 1)]);
        }
    }

    /// Hinge-folds the two triangles at each edge of slope age `age`.
    fn fold(&mut self, age: u32) {
        let hinges = self.edges_of_age(age).map(|s| (s, self.neighbour(s)));
        for (side, other) in hinges {
            let mut image = [0usize; 4];
            image[side.a] = other.a;
            image[side.b] = other.b;
            image[6 - side.face - side.a - side.b] = 6 - other.face - other.a - other.b;
            image[side.face] = other.face;
            let perm = Perm4::from_images(image).expect("distinct");
            self.tri.glue(side.tet, side.face, other.tet, perm).expect("faces are free");
        }
        self.faces.clear();
    }
}

/// Builds the exterior from an explicit recipe. The result has
/// `2 (moves.layers.len() + 1)` tetrahedra; whether it is a knot exterior
/// depends on the recipe.
pub fn two_bridge_with(moves: &TwoBridgeMoves) -> Triangulation {
    // First pair: vertex labels are the punctures P0..P3 of a pillowcase
    // square P0 P1 P2 P3. Tetrahedron 0 covers the front diagonal P0P2,
    // tetrahedron 1 the back diagonal P1P3. Every pair of punctures spans
    // exactly one edge of the inner and one of the outer pillowcase, so
    // sides match up by their puncture labels.
    let label: [[usize; 4]; 2] = [[0, 2, 1, 3], [1, 3, 0, 2]];
    let mut tri = Triangulation::new(2, Kind::Ideal);
    // (face of tet 0, face of tet 1, hinge punctures)
    let folds: [(usize, usize, [usize; 2]); 2] = match moves.inner {
        Fold::Horizontal => [(3, 3, [0, 1]), (2, 2, [2, 3])],
        Fold::Vertical => [(3, 2, [1, 2]), (2, 3, [0, 3])],
    };
    for (f, g, hinge) in folds {
        let mut image = [0usize; 4];
        image[f] = g;
        for v in face_vertices(f) {
            image[v] = if hinge.contains(&label[0][v]) {
                (0..4).find(|&w| label[1][w] == label[0][v]).unwrap()
            } else {
                face_vertices(g).into_iter().find(|&w| !hinge.contains(&label[1][w])).unwrap()
            };
        }
        tri.glue(0, f, 1, Perm4::from_images(image).expect("distinct"))
            .expect("inner faces are free");
    }
    // Outer slopes of the first pair: 02 / 13 horizontal, 03 / 12 vertical,
    // 23 new. The inner fold slope counts as the middle-aged one.
    let (h, v) = match moves.inner {
        Fold::Horizontal => (1, 0),
        Fold::Vertical => (0, 1),
    };
    let mut pc = Pillowcase {
        tri,
        faces: alloc::vec![(0, 0), (0, 1), (1, 0), (1, 1)],
        next: BTreeMap::new(),
        age: BTreeMap::new(),
        next_age: 3,
    };
    for t in 0..2 {
        for (e, a) in [((0, 2), h), ((1, 3), h), ((0, 3), v), ((1, 2), v), ((2, 3), 2)] {
            pc.age.insert((t, edge_index(e.0, e.1)), a);
        }
    }
    for s in pc.sides() {
        let (la, lb) = (label[s.tet][s.a], label[s.tet][s.b]);
        let t = pc
            .sides()
            .into_iter()
            .filter(|o| (o.tet, o.face) != (s.tet, s.face))
            .flat_map(|o| [o, flip(o)])
            .find(|o| label[o.tet][o.a] == la && label[o.tet][o.b] == lb)
            .expect("each puncture pair spans one outer edge");
        pc.link(s, t);
    }
    for &m in &moves.layers {
        pc.layer(m);
    }
    let outer = pc.pick(moves.outer);
    pc.fold(outer);
    pc.tri
}

/// The path decomposition of the dual graph of a `C`-crossing exterior:
/// `C - 4` bags `{2k, 2k+1, 2k+2, 2k+3}` in a path, width 3.
pub fn two_bridge_td(crossings: u64) -> Result<TreeDecomposition, GenError> {
    if crossings < 6 {
        return Err(GenError::TooFewCrossings { crossings, needed: 6 });
    }
    let pairs = (crossings - 3) as usize;
    let bags = (0..pairs - 1)
        .map(|k| alloc::vec![2 * k, 2 * k + 1, 2 * k + 2, 2 * k + 3])
        .collect::<Vec<_>>();
    let arcs = (1..bags.len()).map(|k| (k - 1, k)).collect();
    Ok(TreeDecomposition::new(bags, arcs))
}
