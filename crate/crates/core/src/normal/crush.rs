//! Crushing a triangulation along a normal surface.
//!
//! Cutting along the surface and collapsing each copy to a point leaves the
//! quad-free tetrahedra intact. Every tetrahedron carrying quads of type `q`
//! is destroyed, and its faces are identified in the two pairs given by
//! [`purse_partner`]; a face pair is identified by the transposition of the
//! two face indices, which fixes the edge they share. Surviving faces are
//! re-glued by following these identifications until another surviving face
//! or the boundary is reached.

use alloc::vec::Vec;

use super::{matching_ok, purse_partner, quad_constraint_ok, CrushCertificate, Edit, NormalCoords, NormalError};
use crate::graph::{MultiGraph, PortGraph};
use crate::perm::Perm4;
use crate::tri::Triangulation;

/// Crushes `tri` along the surface `coords`. Surviving tetrahedra keep their
/// relative order. The certificate records the corresponding edits of the
/// dual graph, in terms of the original node ids.
pub fn crush(tri: &Triangulation, coords: &NormalCoords) -> Result<(Triangulation, CrushCertificate), NormalError> {
    tri.check()?;
    if !matching_ok(tri, coords)? {
        return Err(NormalError::Matching);
    }
    if !quad_constraint_ok(coords) {
        let tet = (0..tri.tet_count()).find(|&t| (0..3).filter(|&q| coords.quad(t, q) > 0).count() > 1);
        return Err(NormalError::QuadConstraint { tet: tet.unwrap_or(0) });
    }

    let n = tri.tet_count();
    let quads: Vec<Option<usize>> = (0..n).map(|t| coords.quad_in(t)).collect();
    let mut new_index = alloc::vec![usize::MAX; n];
    let mut survivors = 0;
    for t in 0..n {
        if quads[t].is_none() {
            new_index[t] = survivors;
            survivors += 1;
        }
    }

    let mut out = Triangulation::new(survivors, tri.kind());
    for t in (0..n).filter(|&t| quads[t].is_none()) {
        for f in 0..4 {
            let Some((t2, f2, perm)) = follow_chain(tri, &quads, t, f)? else { continue };
            if (t, f) < (t2, f2) {
                out.glue(new_index[t], f, new_index[t2], perm)
                    .expect("chains pair faces consistently");
            }
        }
    }

    let info: Vec<Option<u8>> = quads.iter().map(|q| q.map(|q| q as u8)).collect();
    let (_, cert) = crush_ports(tri.dual_ports()?, &info);
    Ok((out, cert))
}

/// Leaves surviving face `(t, f)` and walks through destroyed tetrahedra.
/// Returns the surviving face reached and the composite vertex map, or
/// `None` when the chain ends on the boundary.
fn follow_chain(
    tri: &Triangulation,
    quads: &[Option<usize>],
    t: usize,
    f: usize,
) -> Result<Option<(usize, usize, Perm4)>, NormalError> {
    let mut perm = Perm4::IDENTITY;
    let (mut tet, mut face) = (t, f);
    // Each step consumes a distinct (tet, face) slot; see the module notes.
    for _ in 0..=4 * tri.tet_count() {
        let Some(g) = tri.adjacent(tet, face) else {
            return Ok(None);
        };
        perm = g.perm * perm;
        (tet, face) = (g.tet, g.face);
        let Some(q) = quads[tet] else {
            return Ok(Some((tet, face, perm)));
        };
        if (tet, face) == (t, f) {
            return Err(NormalError::DegenerateFlattening { tet: t, face: f });
        }
        let partner = purse_partner(q, face);
        perm = Perm4::transposition(face, partner) * perm;
        face = partner;
    }
    Err(NormalError::DegenerateFlattening { tet: t, face: f })
}

/// Crushing at the level of the dual graph. Node `v` with `quad_info[v] =
/// Some(q)` is removed, and the arcs through its purse pairs are joined by
/// liftings. Slots of `graph` are the tetrahedron faces.
///
/// Returns the crushed graph (removed nodes deleted, survivors renumbered in
/// increasing order) and the certificate.
pub fn crush_dual(graph: &PortGraph, quad_info: &[Option<u8>]) -> Result<(MultiGraph, CrushCertificate), NormalError> {
    if quad_info.len() != graph.node_count() {
        return Err(NormalError::QuadInfoLength {
            expected: graph.node_count(),
            found: quad_info.len(),
        });
    }
    Ok(crush_ports(graph.clone(), quad_info))
}

fn crush_ports(mut ports: PortGraph, quad_info: &[Option<u8>]) -> (MultiGraph, CrushCertificate) {
    let mut edits = Vec::new();
    for (x, q) in quad_info.iter().enumerate() {
        let Some(q) = *q else { continue };
        let q = q as usize;
        let (a, b) = (0, q + 1);
        let [c, d] = crate::tri::pair_without(a, b);
        let cross = |s: usize| matches!(ports.mate(x, s), Some((y, t)) if y == x && t != purse_partner(q, s));
        if cross(a) || cross(b) {
            // A loop joins the two purses. With one such loop the remaining
            // ends form a single through-path; with two, nothing survives.
            let (s, t) = if cross(a) { (a, ports.mate(x, a).unwrap().1) } else { (b, ports.mate(x, b).unwrap().1) };
            let (s_end, t_end) = (purse_partner(q, s), purse_partner(q, t));
            if !cross(s_end) {
                join(&mut ports, &mut edits, x, s_end, t_end);
            }
        } else {
            join(&mut ports, &mut edits, x, a, b);
            join(&mut ports, &mut edits, x, c, d);
        }
        for s in 0..4 {
            ports.disconnect((x, s));
        }
        edits.push(Edit::RemoveNode { v: x });
    }

    let mut graph = ports.to_multigraph();
    for x in (0..quad_info.len()).rev() {
        if quad_info[x].is_some() {
            graph.remove_node(x);
        }
    }
    (graph, CrushCertificate { edits })
}

/// Joins the far ends of slots `s` and `t` of node `x` by a lifting, when
/// both lead to other nodes. A slot glued to its purse partner encloses
/// nothing and is dropped with the node.
fn join(ports: &mut PortGraph, edits: &mut Vec<Edit>, x: usize, s: usize, t: usize) {
    let (Some(ms), Some(mt)) = (ports.mate(x, s), ports.mate(x, t)) else { return };
    if ms.0 == x || mt.0 == x {
        return;
    }
    ports.disconnect((x, s));
    ports.disconnect((x, t));
    ports.connect(ms, mt);
    edits.push(Edit::Lift {
        u: ms.0,
        v: x,
        w: mt.0,
    });
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PipelineLimits {
    pub max_tets: usize,
    pub max_iterations: usize,
}

impl Default for PipelineLimits {
    fn default() -> Self {
        Self {
            max_tets: super::DEFAULT_ENUMERATION_LIMIT,
            max_iterations: 64,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineStep {
    pub surface: NormalCoords,
    pub tets_before: usize,
    pub tets_after: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineOutcome {
    pub pieces: Vec<Triangulation>,
    pub steps: Vec<PipelineStep>,
    /// Set when the iteration cap stopped the run; `pieces` then holds the
    /// partial result, including pieces that were not finished.
    pub capped: bool,
}

/// Crushes non-trivial normal spheres (or discs, when there is boundary)
/// until every piece has one vertex per boundary component, or no such
/// surface is left among the vertex surfaces.
pub fn one_vertex_pipeline(tri: &Triangulation, limits: PipelineLimits) -> Result<PipelineOutcome, NormalError> {
    tri.check()?;
    let mut todo = alloc::vec![tri.clone()];
    let mut pieces = Vec::new();
    let mut steps = Vec::new();
    while let Some(current) = todo.pop() {
        if current.is_one_vertex()? {
            pieces.push(current);
            continue;
        }
        if steps.len() >= limits.max_iterations {
            pieces.push(current);
            pieces.extend(todo.drain(..).rev());
            return Ok(PipelineOutcome {
                pieces,
                steps,
                capped: true,
            });
        }
        let Some(surface) = pick_surface(&current, limits.max_tets)? else {
            pieces.push(current);
            continue;
        };
        let (crushed, _) = crush(&current, &surface)?;
        steps.push(PipelineStep {
            surface,
            tets_before: current.tet_count(),
            tets_after: crushed.tet_count(),
        });
        let parts: Vec<_> = crushed
            .connected_components()
            .into_iter()
            .map(|(p, _)| p)
            .filter(|p| p.tet_count() > 0)
            .collect();
        // Keep pieces in their original order when popping.
        todo.extend(parts.into_iter().rev());
    }
    Ok(PipelineOutcome {
        pieces,
        steps,
        capped: false,
    })
}

/// Lexicographically smallest non-trivial connected vertex surface that is a
/// sphere, or a disc when `tri` has boundary.
fn pick_surface(tri: &Triangulation, limit: usize) -> Result<Option<NormalCoords>, NormalError> {
    let bounded = !tri.is_closed();
    for s in super::enumerate_vertex_surfaces(tri, limit)? {
        if super::is_trivial(&s) {
            continue;
        }
        let comps = super::surface_components(tri, &s)?;
        let [c] = comps.as_slice() else { continue };
        let sphere = c.closed() && c.euler_characteristic == 2;
        let disc = bounded && !c.closed() && c.euler_characteristic == 1;
        if sphere || disc {
            return Ok(Some(s));
        }
    }
    Ok(None)
}
