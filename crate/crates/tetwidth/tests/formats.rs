use proptest::prelude::*;
use tetwidth::core::gen::{daisy_embedding, layered_solid_torus, two_bridge, two_bridge_td, Slope};
use tetwidth::core::normal::{crush, enumerate_vertex_surfaces, NormalCoords};
use tetwidth::core::width::{carving_width_upper, treewidth_upper};
use tetwidth::core::{Kind, MultiGraph};
use tetwidth::formats::*;
use tetwidth::random::{random_metric, random_multigraph, random_triangulation, rng};

#[test]
fn triangulations_round_trip() {
    let mut fixtures = vec![two_bridge(&[2, 2, 2, 2]).unwrap(), layered_solid_torus(Slope::new(3, 5).unwrap()).unwrap().0];
    let mut r = rng(1);
    for t in 0..20 {
        fixtures.push(random_triangulation(&mut r, 1 + t % 7, t % 5, if t % 2 == 0 { Kind::Ideal } else { Kind::Finite }));
    }
    for tri in fixtures {
        assert_eq!(read_triangulation(&write_triangulation(&tri)).unwrap(), tri);
    }
}

#[test]
fn triangulation_reader_rejects_bad_tables() {
    let twice = r#"{"tets":1,"kind":"finite","gluings":[[0,0,0,1,[1,0,2,3]],[0,1,0,0,[1,0,2,3]]]}"#;
    assert!(read_triangulation(twice).is_err());
    let perm = r#"{"tets":1,"kind":"finite","gluings":[[0,0,0,1,[1,1,2,3]]]}"#;
    assert!(matches!(read_triangulation(perm), Err(FormatError::Permutation(_))));
    let mismatch = r#"{"tets":1,"kind":"finite","gluings":[[0,0,0,1,[2,0,1,3]]]}"#;
    assert!(read_triangulation(mismatch).is_err());
    let kind = r#"{"tets":1,"kind":"closed","gluings":[]}"#;
    assert!(read_triangulation(kind).is_err());
    let extra = r#"{"tets":1,"kind":"finite","gluings":[],"name":"x"}"#;
    assert!(read_triangulation(extra).is_err());
}

#[test]
fn graphs_round_trip_through_pace_and_dot() {
    let mut r = rng(2);
    for _ in 0..50 {
        let g = random_multigraph(&mut r, 12, 5);
        assert_eq!(read_gr(&write_gr(&g)).unwrap(), g);
        assert_eq!(read_dot(&write_dot(&g, "g")).unwrap(), g);
    }
    let loops = MultiGraph::from_arcs(2, &[(0, 0), (0, 1), (0, 1)]);
    assert_eq!(write_gr(&loops), "p tw 2 3\n1 1\n1 2\n1 2\n");
}

#[test]
fn pace_reader_errors() {
    assert!(read_gr("p tw 2 1\n1 3\n").is_err());
    assert!(read_gr("p tw 2 2\n1 2\n").is_err());
    assert!(read_gr("1 2\n").is_err());
    assert!(read_gr("c comment\np tw 2 1\n1 2\n").is_ok());
    assert!(read_td("s td 1 2 2\nb 1 1\n").is_err());
    assert!(read_td("s td 2 1 2\nb 1 1\n").is_err());
}

#[test]
fn decompositions_and_embeddings_round_trip() {
    let td = two_bridge_td(10).unwrap();
    assert_eq!(read_td(&write_td(&td, 14)).unwrap(), (td, 14));
    let mut r = rng(3);
    for _ in 0..30 {
        let g = random_multigraph(&mut r, 12, 4);
        let (_, td) = treewidth_upper(&g);
        assert_eq!(read_td(&write_td(&td, g.node_count())).unwrap(), (td, g.node_count()));
        let (_, emb) = carving_width_upper(&g);
        assert_eq!(read_embedding(&write_embedding(&emb)).unwrap(), emb);
    }
    let emb = daisy_embedding(15).unwrap();
    assert_eq!(read_embedding(&write_embedding(&emb)).unwrap(), emb);
}

#[test]
fn coords_and_certificates_round_trip() {
    let tri = two_bridge(&[2, 2, 2, 2]).unwrap();
    for s in enumerate_vertex_surfaces(&tri, 10).unwrap() {
        assert_eq!(read_coords(&write_coords(&s)).unwrap(), s);
        let (_, cert) = crush(&tri, &s).unwrap();
        assert_eq!(read_certificate(&write_certificate(&cert)).unwrap(), cert);
    }
    assert!(read_coords("1 2 3\n").is_err());
    assert_eq!(read_coords("# none\n").unwrap(), NormalCoords::from_vec(vec![]));
    let cert = read_certificate(r#"[{"op":"lift","u":0,"v":1,"w":2},{"op":"removeArc","u":1,"v":2},{"op":"removeNode","v":1}]"#);
    assert_eq!(cert.unwrap().len(), 3);
    assert!(read_certificate(r#"[{"op":"flip","v":1}]"#).is_err());
}

#[test]
fn metrics_round_trip() {
    let mut r = rng(4);
    for n in [1, 2, 7, 40] {
        let m = random_metric(&mut r, n);
        assert_eq!(read_metric(&write_metric(&m)).unwrap(), m);
    }
    assert!(read_metric("0,1\n2,0\n").is_err());
    assert!(read_metric("0,1\n1\n").is_err());
}

proptest! {
    #[test]
    fn random_fixtures_are_reproducible(seed in any::<u64>(), tets in 1usize..12, free in 0usize..6) {
        let a = random_triangulation(&mut rng(seed), tets, free, Kind::Finite);
        let b = random_triangulation(&mut rng(seed), tets, free, Kind::Finite);
        prop_assert!(a.validate().is_valid());
        prop_assert_eq!(a.connected_components().len(), 1);
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(random_multigraph(&mut rng(seed), 10, 4), random_multigraph(&mut rng(seed), 10, 4));
    }

    #[test]
    fn random_graphs_respect_the_degree_cap(seed in any::<u64>()) {
        let g = random_multigraph(&mut rng(seed), 10, 4);
        prop_assert!(g.node_count() <= 10 && g.max_degree() <= 4);
    }
}
