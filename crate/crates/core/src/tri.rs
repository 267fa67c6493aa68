//! Generalised, ideal and bounded triangulations.
//!
//! A triangulation is a set of abstract tetrahedra with vertices `0..4`,
//! together with a gluing table that identifies faces in pairs through
//! vertex permutations. Face `f` of a tetrahedron is the face opposite vertex
//! `f`. Both directions of every gluing are stored, so following a gluing is
//! a table lookup.

use alloc::vec::Vec;
use core::fmt;

use crate::complex::{ComponentSummary, PolygonComplex, SurfaceSummary};
use crate::graph::{MultiGraph, PortGraph};
use crate::perm::Perm4;
use crate::unionfind::UnionFind;

/// The six edges of a tetrahedron, as vertex pairs, in a fixed order.
pub const EDGES: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Index into [`EDGES`] of the edge joining vertices `a != b`.
pub fn edge_index(a: usize, b: usize) -> usize {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    match (a, b) {
        (0, 1) => 0,
        (0, 2) => 1,
        (0, 3) => 2,
        (1, 2) => 3,
        (1, 3) => 4,
        (2, 3) => 5,
        _ => panic!("no edge between vertices {a} and {b}"),
    }
}

/// Vertices of face `f` in increasing order.
pub fn face_vertices(f: usize) -> [usize; 3] {
    match f {
        0 => [1, 2, 3],
        1 => [0, 2, 3],
        2 => [0, 1, 3],
        3 => [0, 1, 2],
        _ => panic!("face index {f} out of range"),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Kind {
    #[default]
    Finite,
    Ideal,
}

/// One directed entry of the gluing table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FaceGluing {
    pub src_tet: usize,
    pub src_face: usize,
    pub dst_tet: usize,
    pub dst_face: usize,
    pub perm: Perm4,
}

impl FaceGluing {
    pub fn inverse(&self) -> FaceGluing {
        FaceGluing {
            src_tet: self.dst_tet,
            src_face: self.dst_face,
            dst_tet: self.src_tet,
            dst_face: self.src_face,
            perm: self.perm.inverse(),
        }
    }
}

/// Where a face is glued: the adjacent tetrahedron, its face, and the
/// vertex map from this tetrahedron into it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Gluing {
    pub tet: usize,
    pub face: usize,
    pub perm: Perm4,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Issue {
    OutOfRange(FaceGluing),
    DuplicateEntry { tet: usize, face: usize },
    FaceMismatch(FaceGluing),
    FaceGluedToItself { tet: usize, face: usize },
    NonInvolutive(FaceGluing),
}

impl fmt::Display for Issue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Issue::OutOfRange(g) => write!(
                f,
                "index out of range in gluing ({}, {}) -> ({}, {})",
                g.src_tet, g.src_face, g.dst_tet, g.dst_face
            ),
            Issue::DuplicateEntry { tet, face } => {
                write!(f, "face ({tet}, {face}) has more than one gluing entry")
            }
            Issue::FaceMismatch(g) => write!(
                f,
                "permutation {} does not send face {} of tet {} onto face {} of tet {}",
                g.perm, g.src_face, g.src_tet, g.dst_face, g.dst_tet
            ),
            Issue::FaceGluedToItself { tet, face } => {
                write!(f, "face ({tet}, {face}) is glued to itself")
            }
            Issue::NonInvolutive(g) => write!(
                f,
                "non-involutive gluing: ({}, {}) -> ({}, {}) has no matching inverse entry",
                g.src_tet, g.src_face, g.dst_tet, g.dst_face
            ),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub issues: Vec<Issue>,
    pub boundary_faces: usize,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum TriError {
    #[error("invalid triangulation: {0}")]
    Invalid(Issue),
    #[error("vertex class {class} out of range ({count} classes)")]
    ClassOutOfRange { class: usize, count: usize },
    #[error("boundary component {index} out of range ({count} components)")]
    ComponentOutOfRange { index: usize, count: usize },
    #[error("face ({tet}, {face}) is already glued")]
    AlreadyGlued { tet: usize, face: usize },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Triangulation {
    kind: Kind,
    adj: Vec<[Option<Gluing>; 4]>,
    stray: Vec<FaceGluing>,
}

/// A partition of per-tetrahedron items (corners or edges) into classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classes {
    /// Items per tetrahedron (4 for vertices, 6 for edges).
    pub stride: usize,
    /// Class label of item `tet * stride + local`.
    pub label: Vec<usize>,
    pub count: usize,
}

impl Classes {
    pub fn class_of(&self, tet: usize, local: usize) -> usize {
        self.label[tet * self.stride + local]
    }

    pub fn members(&self, class: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        let stride = self.stride;
        self.label
            .iter()
            .enumerate()
            .filter(move |(_, &l)| l == class)
            .map(move |(i, _)| (i / stride, i % stride))
    }

    /// Number of items in each class (edge degree, for edge classes).
    pub fn sizes(&self) -> Vec<usize> {
        let mut sizes = alloc::vec![0; self.count];
        for &l in &self.label {
            sizes[l] += 1;
        }
        sizes
    }
}

/// Summary of one boundary component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundarySummary {
    /// Boundary faces `(tet, face)` of this component, sorted.
    pub faces: Vec<(usize, usize)>,
    pub triangle_count: usize,
    /// Vertices of the induced cell structure on the boundary surface.
    pub vertex_count: usize,
    pub edge_count: usize,
    pub euler_characteristic: i64,
    pub orientable: bool,
    /// Reported for orientable components only.
    pub genus: Option<i64>,
}

/// A side of a boundary triangle, named by the tetrahedron vertices at its
/// ends. The boundary face is `(tet, face)`; `a`, `b` are vertices of `tet`
/// different from `face`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoundarySide {
    pub tet: usize,
    pub face: usize,
    pub a: usize,
    pub b: usize,
}

impl Triangulation {
    pub fn new(tets: usize, kind: Kind) -> Self {
        Self {
            kind,
            adj: alloc::vec![[None; 4]; tets],
            stray: Vec::new(),
        }
    }

    /// Builds a table from directed entries exactly as given, without
    /// synthesising inverses. Use [`Triangulation::validate`] to check it.
    pub fn from_directed(tets: usize, kind: Kind, entries: &[FaceGluing]) -> Self {
        let mut tri = Self::new(tets, kind);
        for &e in entries {
            if e.src_tet >= tets || e.src_face > 3 || e.dst_tet >= tets || e.dst_face > 3 {
                tri.stray.push(e);
                continue;
            }
            let slot = &mut tri.adj[e.src_tet][e.src_face];
            if slot.is_some() {
                tri.stray.push(e);
                continue;
            }
            *slot = Some(Gluing {
                tet: e.dst_tet,
                face: e.dst_face,
                perm: e.perm,
            });
        }
        tri
    }

    /// Builds a table from gluings listed once per pair; inverse entries are
    /// synthesised.
    pub fn from_pairs(tets: usize, kind: Kind, pairs: &[FaceGluing]) -> Self {
        let mut entries = Vec::with_capacity(pairs.len() * 2);
        for p in pairs {
            entries.push(*p);
            if (p.src_tet, p.src_face) != (p.dst_tet, p.dst_face) {
                entries.push(p.inverse());
            }
        }
        Self::from_directed(tets, kind, &entries)
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn set_kind(&mut self, kind: Kind) {
        self.kind = kind;
    }

    pub fn tet_count(&self) -> usize {
        self.adj.len()
    }

    pub fn add_tets(&mut self, count: usize) -> usize {
        let first = self.adj.len();
        self.adj.resize(first + count, [None; 4]);
        first
    }

    /// Glues face `face` of `tet` to face `perm[face]` of `other`, recording
    /// both directions.
    pub fn glue(&mut self, tet: usize, face: usize, other: usize, perm: Perm4) -> Result<(), TriError> {
        let other_face = perm.apply(face);
        if self.adj[tet][face].is_some() {
            return Err(TriError::AlreadyGlued { tet, face });
        }
        if self.adj[other][other_face].is_some() {
            return Err(TriError::AlreadyGlued {
                tet: other,
                face: other_face,
            });
        }
        if (tet, face) == (other, other_face) {
            return Err(TriError::Invalid(Issue::FaceGluedToItself { tet, face }));
        }
        self.adj[tet][face] = Some(Gluing {
            tet: other,
            face: other_face,
            perm,
        });
        self.adj[other][other_face] = Some(Gluing {
            tet,
            face,
            perm: perm.inverse(),
        });
        Ok(())
    }

    pub fn unglue(&mut self, tet: usize, face: usize) {
        if let Some(g) = self.adj[tet][face].take() {
            self.adj[g.tet][g.face] = None;
        }
    }

    #[inline]
    pub fn adjacent(&self, tet: usize, face: usize) -> Option<Gluing> {
        self.adj[tet][face]
    }

    /// Every directed entry of the table, in (tet, face) order.
    pub fn directed_entries(&self) -> Vec<FaceGluing> {
        let mut out = Vec::new();
        for (t, faces) in self.adj.iter().enumerate() {
            for (f, g) in faces.iter().enumerate() {
                if let Some(g) = g {
                    out.push(FaceGluing {
                        src_tet: t,
                        src_face: f,
                        dst_tet: g.tet,
                        dst_face: g.face,
                        perm: g.perm,
                    });
                }
            }
        }
        out.extend_from_slice(&self.stray);
        out
    }

    /// Each glued face pair once, from the lexicographically smaller side.
    pub fn gluing_pairs(&self) -> Vec<FaceGluing> {
        let mut out = Vec::new();
        for (t, faces) in self.adj.iter().enumerate() {
            for (f, g) in faces.iter().enumerate() {
                if let Some(g) = g {
                    if (t, f) <= (g.tet, g.face) {
                        out.push(FaceGluing {
                            src_tet: t,
                            src_face: f,
                            dst_tet: g.tet,
                            dst_face: g.face,
                            perm: g.perm,
                        });
                    }
                }
            }
        }
        out
    }

    pub fn boundary_faces(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (t, faces) in self.adj.iter().enumerate() {
            for (f, g) in faces.iter().enumerate() {
                if g.is_none() {
                    out.push((t, f));
                }
            }
        }
        out
    }

    pub fn is_closed(&self) -> bool {
        self.adj.iter().all(|faces| faces.iter().all(Option::is_some))
    }

    pub fn validate(&self) -> ValidationReport {
        let n = self.tet_count();
        let mut issues = Vec::new();
        for e in &self.stray {
            if e.src_tet >= n || e.src_face > 3 || e.dst_tet >= n || e.dst_face > 3 {
                issues.push(Issue::OutOfRange(*e));
            } else {
                issues.push(Issue::DuplicateEntry {
                    tet: e.src_tet,
                    face: e.src_face,
                });
            }
        }
        let mut boundary_faces = 0;
        for (t, faces) in self.adj.iter().enumerate() {
            for (f, g) in faces.iter().enumerate() {
                let Some(g) = g else {
                    boundary_faces += 1;
                    continue;
                };
                let entry = FaceGluing {
                    src_tet: t,
                    src_face: f,
                    dst_tet: g.tet,
                    dst_face: g.face,
                    perm: g.perm,
                };
                if g.perm.apply(f) != g.face {
                    issues.push(Issue::FaceMismatch(entry));
                    continue;
                }
                if (g.tet, g.face) == (t, f) {
                    issues.push(Issue::FaceGluedToItself { tet: t, face: f });
                    continue;
                }
                match self.adj[g.tet][g.face] {
                    Some(back) if back.tet == t && back.face == f && back.perm == g.perm.inverse() => {}
                    _ => issues.push(Issue::NonInvolutive(entry)),
                }
            }
        }
        ValidationReport {
            issues,
            boundary_faces,
        }
    }

    pub fn check(&self) -> Result<(), TriError> {
        match self.validate().issues.into_iter().next() {
            None => Ok(()),
            Some(issue) => Err(TriError::Invalid(issue)),
        }
    }

    pub fn dual_graph(&self) -> Result<MultiGraph, TriError> {
        self.check()?;
        let mut g = MultiGraph::new(self.tet_count());
        for p in self.gluing_pairs() {
            g.add_arc(p.src_tet, p.dst_tet);
        }
        Ok(g)
    }

    /// Dual graph that remembers which face each arc leaves through.
    pub fn dual_ports(&self) -> Result<PortGraph, TriError> {
        self.check()?;
        let mut ports = PortGraph::new(self.tet_count());
        for p in self.gluing_pairs() {
            ports.connect((p.src_tet, p.src_face), (p.dst_tet, p.dst_face));
        }
        Ok(ports)
    }

    /// Vertex classes: corners `(tet, vertex)` identified by the gluings.
    pub fn vertex_classes(&self) -> Classes {
        let n = self.tet_count();
        let mut uf = UnionFind::new(4 * n);
        for (t, faces) in self.adj.iter().enumerate() {
            for (f, g) in faces.iter().enumerate() {
                let Some(g) = g else { continue };
                for v in face_vertices(f) {
                    uf.union(4 * t + v, 4 * g.tet + g.perm.apply(v));
                }
            }
        }
        let (label, count) = uf.canonical_labels();
        Classes {
            stride: 4,
            label,
            count,
        }
    }

    /// Edge classes: edges `(tet, EDGES index)` identified by the gluings.
    pub fn edge_classes(&self) -> Classes {
        let n = self.tet_count();
        let mut uf = UnionFind::new(6 * n);
        for (t, faces) in self.adj.iter().enumerate() {
            for (f, g) in faces.iter().enumerate() {
                let Some(g) = g else { continue };
                let [a, b, c] = face_vertices(f);
                for (x, y) in [(a, b), (a, c), (b, c)] {
                    let other = edge_index(g.perm.apply(x), g.perm.apply(y));
                    uf.union(6 * t + edge_index(x, y), 6 * g.tet + other);
                }
            }
        }
        let (label, count) = uf.canonical_labels();
        Classes {
            stride: 6,
            label,
            count,
        }
    }

    /// Follows the edge `(a, b)` of boundary face `(tet, face)` through the
    /// interior until it surfaces on a boundary face again. The returned side
    /// lists the endpoints in corresponding order (`a` first).
    pub fn boundary_neighbour(&self, side: BoundarySide) -> BoundarySide {
        let BoundarySide {
            mut tet,
            mut face,
            mut a,
            mut b,
        } = side;
        // A walk around an edge visits each (tet, face) at most twice.
        for _ in 0..=8 * self.tet_count() + 4 {
            let other = 6 - face - a - b;
            match self.adj[tet][other] {
                None => {
                    return BoundarySide {
                        tet,
                        face: other,
                        a,
                        b,
                    }
                }
                Some(g) => {
                    tet = g.tet;
                    face = g.face;
                    a = g.perm.apply(a);
                    b = g.perm.apply(b);
                }
            }
        }
        panic!("edge walk did not terminate; triangulation is not valid");
    }

    /// Boundary triangles as a polygon complex. Polygon `i` is
    /// `faces[i]`; its corners are the face's vertices in increasing order.
    fn boundary_complex(&self) -> (Vec<(usize, usize)>, PolygonComplex) {
        let faces = self.boundary_faces();
        let mut index = alloc::vec![[usize::MAX; 4]; self.tet_count()];
        let mut complex = PolygonComplex::new();
        for (i, &(t, f)) in faces.iter().enumerate() {
            index[t][f] = i;
            complex.add_polygon(3);
        }
        let corner = |f: usize, v: usize| face_vertices(f).iter().position(|&x| x == v).unwrap();
        for (i, &(t, f)) in faces.iter().enumerate() {
            let [x, y, z] = face_vertices(f);
            for (a, b) in [(x, y), (y, z), (x, z)] {
                let side = BoundarySide { tet: t, face: f, a, b };
                let nb = self.boundary_neighbour(side);
                let j = index[nb.tet][nb.face];
                let here = (i, edge_index(a, b));
                let there = (j, edge_index(nb.a, nb.b));
                if here >= there {
                    continue;
                }
                complex.glue(
                    i,
                    (corner(f, a), corner(f, b)),
                    j,
                    (corner(nb.face, nb.a), corner(nb.face, nb.b)),
                );
            }
        }
        (faces, complex)
    }

    pub fn boundary_components(&self) -> Result<Vec<BoundarySummary>, TriError> {
        self.check()?;
        let (faces, complex) = self.boundary_complex();
        let comps = complex.components();
        let members = complex.component_members();
        Ok(comps
            .iter()
            .zip(members)
            .map(|(c, m): (&ComponentSummary, Vec<usize>)| {
                let mut fs: Vec<_> = m.iter().map(|&i| faces[i]).collect();
                fs.sort_unstable();
                BoundarySummary {
                    faces: fs,
                    triangle_count: c.polygon_count,
                    vertex_count: c.vertex_count,
                    edge_count: c.edge_count,
                    euler_characteristic: c.euler_characteristic,
                    orientable: c.orientable,
                    genus: c.genus(),
                }
            })
            .collect())
    }

    /// The link of a vertex class, assembled from corner triangles.
    pub fn vertex_link(&self, class: usize) -> Result<SurfaceSummary, TriError> {
        Ok(crate::complex::summarize(&self.vertex_link_components(class)?))
    }

    pub fn vertex_link_components(&self, class: usize) -> Result<Vec<ComponentSummary>, TriError> {
        self.check()?;
        let classes = self.vertex_classes();
        if class >= classes.count {
            return Err(TriError::ClassOutOfRange {
                class,
                count: classes.count,
            });
        }
        let n = self.tet_count();
        let mut index = alloc::vec![usize::MAX; 4 * n];
        let mut complex = PolygonComplex::new();
        for (t, v) in classes.members(class) {
            index[4 * t + v] = complex.add_polygon(3);
        }
        // Corner j of the link triangle at (t, v) is the j-th vertex != v.
        let others = |v: usize| face_vertices(v);
        let corner = |v: usize, w: usize| others(v).iter().position(|&x| x == w).unwrap();
        for (t, v) in classes.members(class) {
            for f in 0..4 {
                if f == v {
                    continue;
                }
                let Some(g) = self.adj[t][f] else { continue };
                let (t2, v2, f2) = (g.tet, g.perm.apply(v), g.face);
                if (t, v, f) >= (t2, v2, f2) {
                    continue;
                }
                let [w1, w2] = pair_without(v, f);
                complex.glue(
                    index[4 * t + v],
                    (corner(v, w1), corner(v, w2)),
                    index[4 * t2 + v2],
                    (corner(v2, g.perm.apply(w1)), corner(v2, g.perm.apply(w2))),
                );
            }
        }
        Ok(complex.components())
    }

    /// Classes of vertices whose link is not a sphere or a disc.
    pub fn ideal_vertices(&self) -> Result<Vec<usize>, TriError> {
        let classes = self.vertex_classes();
        let mut out = Vec::new();
        for c in 0..classes.count {
            let link = self.vertex_link(c)?;
            let regular = link.component_count == 1
                && ((link.closed && link.euler_characteristic == 2)
                    || (!link.closed && link.euler_characteristic == 1));
            if !regular {
                out.push(c);
            }
        }
        Ok(out)
    }

    /// Splits into connected pieces. Each piece comes with the original
    /// index of every tetrahedron it contains, in increasing order.
    pub fn connected_components(&self) -> Vec<(Triangulation, Vec<usize>)> {
        let n = self.tet_count();
        let mut uf = UnionFind::new(n);
        for (t, faces) in self.adj.iter().enumerate() {
            for g in faces.iter().flatten() {
                uf.union(t, g.tet);
            }
        }
        let (labels, count) = uf.canonical_labels();
        let mut members = alloc::vec![Vec::new(); count];
        for (t, &l) in labels.iter().enumerate() {
            members[l].push(t);
        }
        members
            .into_iter()
            .map(|tets| {
                let mut local = alloc::vec![usize::MAX; n];
                for (i, &t) in tets.iter().enumerate() {
                    local[t] = i;
                }
                let mut piece = Triangulation::new(tets.len(), self.kind);
                for (i, &t) in tets.iter().enumerate() {
                    for f in 0..4 {
                        if let Some(g) = self.adj[t][f] {
                            piece.adj[i][f] = Some(Gluing {
                                tet: local[g.tet],
                                face: g.face,
                                perm: g.perm,
                            });
                        }
                    }
                }
                (piece, tets)
            })
            .collect()
    }

    /// Copies `other` into this triangulation; returns the index offset of
    /// the copied tetrahedra.
    pub fn append(&mut self, other: &Triangulation) -> usize {
        let offset = self.tet_count();
        for faces in &other.adj {
            self.adj.push(faces.map(|g| {
                g.map(|g| Gluing {
                    tet: g.tet + offset,
                    ..g
                })
            }));
        }
        offset
    }

    /// Reorders tetrahedra: tetrahedron `t` becomes `order[t]`.
    pub fn relabel(&self, order: &[usize]) -> Triangulation {
        let mut out = Triangulation::new(self.tet_count(), self.kind);
        for (t, faces) in self.adj.iter().enumerate() {
            out.adj[order[t]] = faces.map(|g| {
                g.map(|g| Gluing {
                    tet: order[g.tet],
                    ..g
                })
            });
        }
        out
    }

    /// `true` when the triangulation has no superfluous vertices: exactly one
    /// vertex when closed and finite, only ideal vertices when ideal, and
    /// otherwise every vertex on the boundary with exactly one vertex per
    /// boundary component.
    pub fn is_one_vertex(&self) -> Result<bool, TriError> {
        self.check()?;
        if self.tet_count() == 0 {
            return Ok(true);
        }
        let classes = self.vertex_classes();
        let boundary = self.boundary_components()?;
        if boundary.is_empty() {
            return Ok(match self.kind {
                Kind::Finite => classes.count == 1,
                Kind::Ideal => self.ideal_vertices()?.len() == classes.count,
            });
        }
        let mut owner = alloc::vec![usize::MAX; classes.count];
        for (i, comp) in boundary.iter().enumerate() {
            let mut seen = Vec::new();
            for &(t, f) in &comp.faces {
                for v in face_vertices(f) {
                    let c = classes.class_of(t, v);
                    if owner[c] != usize::MAX && owner[c] != i {
                        return Ok(false);
                    }
                    owner[c] = i;
                    if !seen.contains(&c) {
                        seen.push(c);
                    }
                }
            }
            if seen.len() != 1 {
                return Ok(false);
            }
        }
        Ok(owner.iter().all(|&o| o != usize::MAX))
    }
}

/// The two vertices of a tetrahedron other than `x` and `y`, increasing.
pub fn pair_without(x: usize, y: usize) -> [usize; 2] {
    let mut out = [0; 2];
    let mut k = 0;
    for v in 0..4 {
        if v != x && v != y {
            out[k] = v;
            k += 1;
        }
    }
    out
}
