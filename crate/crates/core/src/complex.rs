//! Polygon complexes: polygons glued side to side.
//!
//! Boundary surfaces, vertex links and reconstructed normal surfaces are all
//! built as polygon complexes, and their Euler characteristic, boundary and
//! orientability are read off here.

use alloc::vec::Vec;

use crate::unionfind::UnionFind;

/// Topological summary of a (possibly disconnected) surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SurfaceSummary {
    pub component_count: usize,
    pub euler_characteristic: i64,
    pub closed: bool,
    pub orientable: bool,
}

/// Summary of one connected component.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComponentSummary {
    pub polygon_count: usize,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub boundary_sides: usize,
    pub euler_characteristic: i64,
    pub orientable: bool,
}

impl ComponentSummary {
    pub fn closed(&self) -> bool {
        self.boundary_sides == 0
    }

    /// Genus of a closed orientable component.
    pub fn genus(&self) -> Option<i64> {
        (self.closed() && self.orientable).then(|| (2 - self.euler_characteristic) / 2)
    }
}

#[derive(Clone, Copy, Debug)]
struct SideLink {
    polygon: usize,
    side: usize,
    /// `true` when corner `i` of this side meets corner `i` of the other
    /// side (orientations of the two polygons disagree).
    same_direction: bool,
}

/// Polygons with cyclically labelled corners. Side `i` of a polygon runs from
/// corner `i` to corner `i + 1`.
#[derive(Clone, Debug, Default)]
pub struct PolygonComplex {
    offsets: Vec<usize>,
    links: Vec<Option<SideLink>>,
}

impl PolygonComplex {
    pub fn new() -> Self {
        Self {
            offsets: alloc::vec![0],
            links: Vec::new(),
        }
    }

    pub fn add_polygon(&mut self, corners: usize) -> usize {
        assert!(corners >= 2);
        let id = self.polygon_count();
        let end = self.offsets[id] + corners;
        self.offsets.push(end);
        self.links.resize(end, None);
        id
    }

    pub fn polygon_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn corners(&self, polygon: usize) -> usize {
        self.offsets[polygon + 1] - self.offsets[polygon]
    }

    /// Index of the side joining corners `a` and `b` of `polygon`, plus
    /// whether the side runs from `a` to `b`.
    fn side_between(&self, polygon: usize, a: usize, b: usize) -> (usize, bool) {
        let k = self.corners(polygon);
        if (a + 1) % k == b {
            (a, true)
        } else if (b + 1) % k == a {
            (b, false)
        } else {
            panic!("corners {a} and {b} of polygon {polygon} are not adjacent");
        }
    }

    /// Glues the side of `p` between corners `(a, b)` to the side of `q`
    /// between corners `(c, d)`, with `a` meeting `c` and `b` meeting `d`.
    pub fn glue(&mut self, p: usize, (a, b): (usize, usize), q: usize, (c, d): (usize, usize)) {
        let (sp, forward_p) = self.side_between(p, a, b);
        let (sq, forward_q) = self.side_between(q, c, d);
        let same_direction = forward_p == forward_q;
        let ip = self.offsets[p] + sp;
        let iq = self.offsets[q] + sq;
        assert!(self.links[ip].is_none() && self.links[iq].is_none(), "side glued twice");
        assert!(ip != iq, "side glued to itself");
        self.links[ip] = Some(SideLink {
            polygon: q,
            side: sq,
            same_direction,
        });
        self.links[iq] = Some(SideLink {
            polygon: p,
            side: sp,
            same_direction,
        });
    }

    pub fn components(&self) -> Vec<ComponentSummary> {
        let n = self.polygon_count();
        let total_corners = self.links.len();
        let mut polys = UnionFind::new(n);
        let mut corners = UnionFind::new(total_corners);
        for p in 0..n {
            let k = self.corners(p);
            for s in 0..k {
                let Some(link) = self.links[self.offsets[p] + s] else { continue };
                polys.union(p, link.polygon);
                let kq = self.corners(link.polygon);
                let (p0, p1) = (s, (s + 1) % k);
                let (q0, q1) = (link.side, (link.side + 1) % kq);
                let (m0, m1) = if link.same_direction { (q0, q1) } else { (q1, q0) };
                corners.union(self.offsets[p] + p0, self.offsets[link.polygon] + m0);
                corners.union(self.offsets[p] + p1, self.offsets[link.polygon] + m1);
            }
        }
        let (poly_label, count) = polys.canonical_labels();
        let mut out = alloc::vec![
            ComponentSummary {
                polygon_count: 0,
                vertex_count: 0,
                edge_count: 0,
                boundary_sides: 0,
                euler_characteristic: 0,
                orientable: true,
            };
            count
        ];
        let mut corner_seen = alloc::vec![false; total_corners];
        let mut matched_sides = alloc::vec![0usize; count];
        for p in 0..n {
            let c = poly_label[p];
            out[c].polygon_count += 1;
            for i in self.offsets[p]..self.offsets[p + 1] {
                let r = corners.find(i);
                if !corner_seen[r] {
                    corner_seen[r] = true;
                    out[c].vertex_count += 1;
                }
                match self.links[i] {
                    Some(_) => matched_sides[c] += 1,
                    None => out[c].boundary_sides += 1,
                }
            }
        }
        for (c, summary) in out.iter_mut().enumerate() {
            summary.edge_count = matched_sides[c] / 2 + summary.boundary_sides;
            summary.euler_characteristic = summary.vertex_count as i64
                - summary.edge_count as i64
                + summary.polygon_count as i64;
        }

        // Orientation propagation: sign[p] flips across sides glued with the
        // same direction.
        let mut sign = alloc::vec![0i8; n];
        let mut stack = Vec::new();
        for start in 0..n {
            if sign[start] != 0 {
                continue;
            }
            sign[start] = 1;
            stack.push(start);
            while let Some(p) = stack.pop() {
                for i in self.offsets[p]..self.offsets[p + 1] {
                    let Some(link) = self.links[i] else { continue };
                    let want = if link.same_direction { -sign[p] } else { sign[p] };
                    if sign[link.polygon] == 0 {
                        sign[link.polygon] = want;
                        stack.push(link.polygon);
                    } else if sign[link.polygon] != want {
                        out[poly_label[p]].orientable = false;
                    }
                }
            }
        }
        out
    }

    pub fn summary(&self) -> SurfaceSummary {
        summarize(&self.components())
    }

    /// Polygon ids grouped by connected component (component order matches
    /// [`PolygonComplex::components`]).
    pub fn component_members(&self) -> Vec<Vec<usize>> {
        let n = self.polygon_count();
        let mut uf = UnionFind::new(n);
        for p in 0..n {
            for i in self.offsets[p]..self.offsets[p + 1] {
                if let Some(link) = self.links[i] {
                    uf.union(p, link.polygon);
                }
            }
        }
        let (labels, count) = uf.canonical_labels();
        let mut groups = alloc::vec![Vec::new(); count];
        for (p, &l) in labels.iter().enumerate() {
            groups[l].push(p);
        }
        groups
    }
}

pub fn summarize(components: &[ComponentSummary]) -> SurfaceSummary {
    SurfaceSummary {
        component_count: components.len(),
        euler_characteristic: components.iter().map(|c| c.euler_characteristic).sum(),
        closed: components.iter().all(|c| c.closed()),
        orientable: components.iter().all(|c| c.orientable),
    }
}
