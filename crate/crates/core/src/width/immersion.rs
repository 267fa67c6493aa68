//! Liftings, certificate replay and the carving-width/treewidth sandwich.

use alloc::vec::Vec;

use super::{carving_width_exact, treewidth_exact, WidthError};
use crate::graph::MultiGraph;
use crate::normal::{CrushCertificate, Edit};

fn check_lift(graph: &MultiGraph, u: usize, v: usize, w: usize) -> Result<(), WidthError> {
    let n = graph.node_count();
    if u >= n || v >= n || w >= n {
        return Err(WidthError::NodeOutOfRange);
    }
    if u == v || v == w {
        return Err(WidthError::MissingArc { u, v });
    }
    Ok(())
}

/// Removes every arc `u–v` and `v–w` and adds one arc `u–w`.
pub fn lift(graph: &MultiGraph, u: usize, v: usize, w: usize) -> Result<MultiGraph, WidthError> {
    check_lift(graph, u, v, w)?;
    if graph.multiplicity(u, v) == 0 {
        return Err(WidthError::MissingArc { u, v });
    }
    if graph.multiplicity(v, w) == 0 {
        return Err(WidthError::MissingArc { u: v, v: w });
    }
    let mut g = graph.clone();
    g.remove_all_arcs(u, v);
    g.remove_all_arcs(v, w);
    g.add_arc(u, w);
    Ok(g)
}

/// Replaces a single copy of `u–v` and a single copy of `v–w` by `u–w`:
/// the arc-level lifting used when replaying crushes.
pub fn lift_once(graph: &MultiGraph, u: usize, v: usize, w: usize) -> Result<MultiGraph, WidthError> {
    check_lift(graph, u, v, w)?;
    let mut g = graph.clone();
    if !g.remove_arc(u, v) {
        return Err(WidthError::MissingArc { u, v });
    }
    if !g.remove_arc(v, w) {
        return Err(WidthError::MissingArc { u: v, v: w });
    }
    g.add_arc(u, w);
    Ok(g)
}

/// Replays a certificate. Edits name nodes of the original graph; removed
/// nodes are compacted away, survivors keep their relative order.
pub fn apply_certificate(graph: &MultiGraph, cert: &CrushCertificate) -> Result<MultiGraph, WidthError> {
    replay(graph, cert, |_, _| ())
}

/// Like [`apply_certificate`], calling `observe(step, graph)` on every
/// intermediate graph (after each edit).
pub fn replay(
    graph: &MultiGraph,
    cert: &CrushCertificate,
    mut observe: impl FnMut(usize, &MultiGraph),
) -> Result<MultiGraph, WidthError> {
    let mut g = graph.clone();
    let mut current: Vec<Option<usize>> = (0..graph.node_count()).map(Some).collect();
    for (step, edit) in cert.edits.iter().enumerate() {
        let fail = || WidthError::InapplicableStep { step, edit: *edit };
        let id = |v: usize| current.get(v).copied().flatten().ok_or_else(fail);
        match *edit {
            Edit::Lift { u, v, w } => {
                g = lift_once(&g, id(u)?, id(v)?, id(w)?).map_err(|_| fail())?;
            }
            Edit::RemoveArc { u, v } => {
                let (a, b) = (id(u)?, id(v)?);
                if !g.remove_arc(a, b) {
                    return Err(fail());
                }
            }
            Edit::RemoveNode { v } => {
                let x = id(v)?;
                g.remove_node(x);
                current[v] = None;
                for c in current.iter_mut().flatten() {
                    if *c > x {
                        *c -= 1;
                    }
                }
            }
        }
        observe(step, &g);
    }
    Ok(g)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BienstockReport {
    pub treewidth: usize,
    pub carving_width: usize,
    /// Maximum number of distinct neighbours of a node.
    pub max_degree: usize,
    /// `(2/3)(tw + 1) <= cw`; `None` when skipped.
    pub lower_holds: Option<bool>,
    /// `cw <= d (tw + 1)`.
    pub upper_holds: bool,
}

impl BienstockReport {
    pub fn holds(&self) -> bool {
        self.upper_holds && self.lower_holds != Some(false)
    }
}

/// Compares exact carving-width and treewidth against
/// `(2/3)(tw + 1) <= cw <= d (tw + 1)`.
///
/// Degrees count distinct neighbours. The lower inequality is only asserted
/// when some node has at least two distinct neighbours: a graph whose arcs
/// form a matching has `tw = cw = 1`, where it fails.
pub fn bienstock_check(graph: &MultiGraph, cw_limit: usize, tw_limit: usize) -> Result<BienstockReport, WidthError> {
    let (cw, _) = carving_width_exact(graph, cw_limit)?;
    let (tw, _) = treewidth_exact(graph, tw_limit)?;
    let d = graph.max_distinct_degree();
    let lower_holds = (d >= 2).then_some(2 * (tw + 1) <= 3 * cw);
    Ok(BienstockReport {
        treewidth: tw,
        carving_width: cw,
        max_degree: d,
        lower_holds,
        upper_holds: cw <= d * (tw + 1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lift_path() {
        let g = MultiGraph::from_arcs(3, &[(0, 1), (1, 2)]);
        let h = lift(&g, 0, 1, 2).unwrap();
        assert_eq!(h.arcs(), [(0, 2)]);
        assert!(matches!(lift(&h, 0, 1, 2), Err(WidthError::MissingArc { .. })));
    }

    #[test]
    fn lift_removes_every_copy() {
        let g = MultiGraph::from_arcs(3, &[(0, 1), (0, 1), (1, 2)]);
        assert_eq!(lift(&g, 0, 1, 2).unwrap().arcs(), [(0, 2)]);
        assert_eq!(lift_once(&g, 0, 1, 2).unwrap().arcs(), [(0, 1), (0, 2)]);
    }

    #[test]
    fn replay_tracks_ids() {
        let g = MultiGraph::from_arcs(4, &[(0, 1), (1, 2), (2, 3)]);
        let cert = CrushCertificate {
            edits: alloc::vec![
                Edit::Lift { u: 0, v: 1, w: 2 },
                Edit::RemoveNode { v: 1 },
                Edit::RemoveArc { u: 2, v: 3 },
            ],
        };
        let h = apply_certificate(&g, &cert).unwrap();
        assert_eq!(h.node_count(), 3);
        assert_eq!(h.arcs(), [(0, 1)]);
        let bad = CrushCertificate {
            edits: alloc::vec![Edit::RemoveNode { v: 1 }, Edit::RemoveNode { v: 1 }],
        };
        assert!(matches!(
            apply_certificate(&g, &bad),
            Err(WidthError::InapplicableStep { step: 1, .. })
        ));
        assert_eq!(apply_certificate(&g, &CrushCertificate::default()).unwrap(), g);
    }

    #[test]
    fn sandwich_on_small_graphs() {
        let single = bienstock_check(&MultiGraph::new(1), 12, 20).unwrap();
        assert_eq!((single.treewidth, single.carving_width, single.lower_holds), (0, 0, None));
        let matching = MultiGraph::from_arcs(4, &[(0, 1), (2, 3)]);
        let r = bienstock_check(&matching, 12, 20).unwrap();
        assert_eq!((r.treewidth, r.carving_width, r.lower_holds), (1, 1, None));
        assert!(r.holds());
    }
}
