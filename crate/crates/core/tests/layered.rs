mod common;

use tetwidth_core::gen::{daisy_chain, dehn_fill, dehn_fill_marked, layered_solid_torus, BoundaryMarking, Slope};
use tetwidth_core::normal::{build_surface, edge_weights, enumerate_vertex_surfaces, is_trivial};
use tetwidth_core::tri::edge_index;
use tetwidth_core::width::carving_width_exact;
use tetwidth_core::Triangulation;

/// Edge weights of every non-trivial normal disc among the vertex surfaces,
/// read on the marking edges.
fn meridian_weights(t: &Triangulation, m: &BoundaryMarking) -> Vec<[u64; 3]> {
    let classes = t.edge_classes();
    let mut out = Vec::new();
    for s in enumerate_vertex_surfaces(t, 15).unwrap() {
        if is_trivial(&s) {
            continue;
        }
        let sum = build_surface(t, &s).unwrap();
        if sum.component_count != 1 || sum.closed || sum.euler_characteristic != 1 {
            continue;
        }
        let w = edge_weights(t, &s).unwrap();
        out.push(m.edges.map(|e| w[classes.class_of(e.tet, edge_index(e.a, e.b))]));
    }
    out
}

#[test]
fn meridian_meets_the_marking_as_requested() {
    for (p, q) in [(1, 2), (2, 1), (-3, 1), (1, 1), (0, 1), (1, 0), (3, 4), (-5, 3), (7, 2), (5, 8), (-4, 7)] {
        let slope = Slope::new(p, q).unwrap();
        let (t, m) = layered_solid_torus(slope).unwrap();
        let discs = meridian_weights(&t, &m);
        assert!(!discs.is_empty(), "{p}/{q}: no meridian disc");
        assert!(discs.iter().all(|&w| w == slope.weights()), "{p}/{q}: {discs:?}");
    }
}

#[test]
fn dual_graph_is_a_daisy_chain() {
    for (p, q, n) in [(1, 2, 1), (1, 1, 2), (0, 1, 3), (3, 5, 3), (5, 8, 4), (8, 13, 5), (13, 21, 6)] {
        let (t, _) = layered_solid_torus(Slope::new(p, q).unwrap()).unwrap();
        assert_eq!(t.tet_count(), n);
        let g = t.dual_graph().unwrap();
        assert_eq!(g, daisy_chain(n));
        let b = t.boundary_components().unwrap();
        assert_eq!((b.len(), b[0].triangle_count, b[0].euler_characteristic), (1, 2, 0));
        let cw = carving_width_exact(&g, 12).unwrap().0;
        assert_eq!(cw, if n == 2 { 1 } else if n == 1 { 0 } else { 2 });
    }
}

#[test]
fn filling_a_solid_torus() {
    let (t, _) = layered_solid_torus(Slope::new(2, 3).unwrap()).unwrap();
    for (p, q) in [(1, 0), (0, 1), (1, 1), (3, -2)] {
        let closed = dehn_fill(&t, 0, Slope::new(p, q).unwrap()).unwrap();
        assert!(closed.is_closed() && closed.validate().is_valid());
        for c in 0..closed.vertex_classes().count {
            let link = closed.vertex_link(c).unwrap();
            assert!(link.closed && link.euler_characteristic == 2, "{p}/{q}");
        }
    }
}

#[test]
fn lens_spaces_have_cyclic_homology() {
    // Two solid tori glued along their boundaries: H1 = Z / |m1 . m2|.
    let (t, m) = layered_solid_torus(Slope::new(2, 3).unwrap()).unwrap();
    for (p, q) in [(2, 3), (1, 0), (0, 1), (1, 1), (3, -2), (5, 7), (-7, 4)] {
        let closed = dehn_fill_marked(&t, &m, Slope::new(p, q).unwrap()).unwrap();
        let det = (2 * q - 3 * p).unsigned_abs();
        let expected = match det {
            0 => (1, vec![]),
            1 => (0, vec![]),
            d => (0, vec![d]),
        };
        assert_eq!(common::h1(&closed), expected, "{p}/{q}");
    }
}
