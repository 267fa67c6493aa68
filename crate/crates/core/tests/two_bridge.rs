mod common;

use tetwidth_core::gen::{
    crossing_count, subdivide_finite, td_blowup_checked, two_bridge, two_bridge_fraction, two_bridge_td,
    SUBDIVISION_FACTOR,
};
use tetwidth_core::width::td_check;

/// Every admissible coefficient list with at most `max_c` crossings.
fn knots(max_c: u64) -> Vec<Vec<u64>> {
    fn extend(prefix: &mut Vec<u64>, left: u64, out: &mut Vec<Vec<u64>>) {
        if prefix.len() >= 2 && *prefix.last().unwrap() >= 2 && prefix[0] >= 2 {
            out.push(prefix.clone());
        }
        for a in 1..=left {
            prefix.push(a);
            extend(prefix, left - a, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), max_c, &mut out);
    out.retain(|c| two_bridge_fraction(c).0 % 2 == 1);
    out
}

#[test]
fn exteriors_have_the_right_homology() {
    let all = knots(11);
    assert!(all.len() > 100);
    for coeffs in all {
        let (p, _) = two_bridge_fraction(&coeffs);
        let c = crossing_count(&coeffs) as usize;
        let t = two_bridge(&coeffs).unwrap();
        assert_eq!(t.tet_count(), 2 * (c - 3), "{coeffs:?}");
        assert!(t.validate().is_valid() && t.is_closed());
        assert_eq!(t.vertex_classes().count, 1, "{coeffs:?}");
        let link = t.vertex_link(0).unwrap();
        assert!(link.closed && link.orientable && link.euler_characteristic == 0, "{coeffs:?}");
        assert_eq!(t.edge_classes().count, t.tet_count());
        assert_eq!(common::h1(&t), (1, vec![]), "{coeffs:?}");
        let cover = common::double_cover(&t).expect("H^1(M; Z/2) = Z/2");
        let torsion = if p == 1 { vec![] } else { vec![p] };
        assert_eq!(common::h1(&cover), (1, torsion), "{coeffs:?}");
    }
}

#[test]
fn dual_graph_is_a_ladder_of_pairs() {
    for coeffs in knots(9) {
        let t = two_bridge(&coeffs).unwrap();
        let g = t.dual_graph().unwrap();
        let n = g.node_count();
        assert!((0..n).all(|v| g.degree(v) == 4));
        let pairs = n / 2;
        for k in 0..pairs.saturating_sub(1) {
            for (a, b) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
                assert_eq!(g.multiplicity(2 * k + a, 2 * k + 2 + b), 1, "{coeffs:?}");
            }
        }
        // Only consecutive pairs and the two folded ends are joined.
        for &(u, v) in g.arcs() {
            assert!(v / 2 <= u / 2 + 1, "{coeffs:?}: arc {u}-{v}");
        }
        let ends = if n == 2 { 4 } else { 2 };
        assert_eq!(g.multiplicity(0, 1), ends);
        assert_eq!(g.multiplicity(n - 2, n - 1), ends);
    }
}

#[test]
fn path_decomposition_and_blowup() {
    assert!(two_bridge_td(5).is_err());
    for coeffs in knots(9) {
        let c = crossing_count(&coeffs);
        if c < 6 {
            continue;
        }
        let t = two_bridge(&coeffs).unwrap();
        let td = two_bridge_td(c).unwrap();
        assert_eq!(td.bags.len() as u64, c - 4);
        assert_eq!(td.width(), 3);
        td_check(&t.dual_graph().unwrap(), &td).unwrap();
    }
    let t = two_bridge(&[3, 1, 2]).unwrap();
    let (fine, map) = subdivide_finite(&t).unwrap();
    assert_eq!(fine.tet_count(), SUBDIVISION_FACTOR * t.tet_count());
    assert!(fine.validate().is_valid());
    let cusps = fine.boundary_components().unwrap();
    assert_eq!(cusps.len(), 1);
    assert_eq!((cusps[0].euler_characteristic, cusps[0].orientable), (0, true));
    let blown = td_blowup_checked(&fine.dual_graph().unwrap(), &two_bridge_td(6).unwrap(), &map).unwrap();
    assert_eq!(blown.width(), 111);
}
