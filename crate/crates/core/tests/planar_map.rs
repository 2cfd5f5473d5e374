use std::sync::OnceLock;

use proptest::prelude::*;
use schnyder_kit::planar_map::fixtures::*;
use schnyder_kit::planar_map::generate::for_each_rooted_angulation;
use schnyder_kit::planar_map::PlaneMap;
use schnyder_kit::Error;

#[test]
fn tetrahedron_has_four_faces() {
    let m = tetrahedron();
    assert_eq!(m.face_count(), 4);
    assert_eq!(m.vertex_count() + m.face_count(), m.edge_count() + 2);
}

#[test]
fn four_cycle_has_two_faces() {
    let m = PlaneMap::from_neighbors(&[vec![1, 3], vec![2, 0], vec![3, 1], vec![0, 2]], (0, 1)).unwrap();
    assert_eq!(m.face_count(), 2);
    assert_eq!(cycle(4).face_count(), 2);
}

#[test]
fn torus_like_rotation_is_rejected() {
    // Theta graph with both rotations in the same cyclic order: one face.
    let edges = [(0, 1), (0, 1), (0, 1)];
    let bad = PlaneMap::from_edges(&edges, &[vec![0, 1, 2], vec![0, 1, 2]], 0);
    assert_eq!(bad, Err(Error::EulerViolation { v: 2, e: 3, f: 1 }));
    let good = PlaneMap::from_edges(&edges, &[vec![0, 1, 2], vec![0, 2, 1]], 0).unwrap();
    assert_eq!(good.face_count(), 3);
}

#[test]
fn malformed_inputs() {
    let disconnected = PlaneMap::from_edges(&[(0, 1), (2, 3)], &[vec![0], vec![0], vec![1], vec![1]], 0);
    assert_eq!(disconnected, Err(Error::Disconnected));
    let twin_broken = PlaneMap::from_darts(vec![0, 1], vec![1, 1], vec![0, 1], 0, None);
    assert!(matches!(twin_broken, Err(Error::MalformedRotation(_))));
    let loop_map = PlaneMap::from_darts(vec![0, 0], vec![1, 0], vec![1, 0], 0, None);
    assert!(matches!(loop_map, Err(Error::MalformedRotation(_))));
}

#[test]
fn cube_dual_is_octahedron() {
    let q = cube().dual();
    assert_eq!(q.vertex_count(), 6);
    assert!((0..6).all(|v| q.degree(v) == 4));
    assert!(q.is_isomorphic(&octahedron()));
    assert_eq!(q.root_vertex(), Some(cube().outer_face()));
}

#[test]
fn tetrahedron_is_self_dual() {
    assert!(tetrahedron().dual().is_isomorphic(&tetrahedron()));
}

#[test]
fn dodecahedron_dual_is_icosahedral() {
    let i = dodecahedron().dual();
    assert_eq!(i.vertex_count(), 12);
    assert!((0..12).all(|v| i.degree(v) == 5));
    assert!(i.as_regular(5, 0).is_ok());
}

#[test]
fn double_dual_is_the_original() {
    for m in [tetrahedron(), cube(), octahedron(), dodecahedron(), k23(), hex_rings(), quad_double_edge()] {
        let dd = m.dual().dual();
        assert!(m.is_isomorphic(&dd));
        assert!(m.is_rooted_isomorphic(&dd.with_outer_dart(m.twin(m.outer_dart()))));
    }
}

#[test]
fn girths() {
    assert_eq!(tetrahedron().girth(), Ok(3));
    assert_eq!(cube().girth(), Ok(4));
    assert_eq!(dodecahedron().girth(), Ok(5));
    assert_eq!(quad_double_edge().girth(), Ok(2));
    assert_eq!(hex_rings().girth(), Ok(6));
    let path = PlaneMap::from_neighbors(&[vec![1], vec![0, 2], vec![1]], (0, 1)).unwrap();
    assert_eq!(path.girth(), Err(Error::Acyclic));
}

#[test]
fn shortest_cycle_is_a_closed_simple_walk() {
    for m in [tetrahedron(), cube(), dodecahedron(), quad_double_edge(), tri_double_edge()] {
        let c = m.shortest_cycle().unwrap();
        let mut seen = std::collections::HashSet::new();
        for (i, &d) in c.iter().enumerate() {
            assert_eq!(m.head(d), m.origin(c[(i + 1) % c.len()]));
            assert!(seen.insert(m.origin(d)));
        }
    }
}

#[test]
fn mincut() {
    assert!(octahedron().mincut_at_least(4));
    assert!(!octahedron().mincut_at_least(5));
    assert!(!cubic_two_cut().mincut_at_least(3));
    assert!(tetrahedron().mincut_at_least(3));
    assert!(!quartic_two_cut().mincut_at_least(4));
}

#[test]
fn angulation_views() {
    assert_eq!(tetrahedron().as_angulation(3).unwrap().external.len(), 3);
    assert_eq!(cube().as_angulation(4).unwrap().external.len(), 4);
    assert!(matches!(cube().as_angulation(3), Err(Error::NotDAngulation { .. })));
    assert_eq!(quad_double_edge().as_angulation(4), Err(Error::ExternalVerticesNotDistinct));
}

#[test]
fn regular_views() {
    let o = octahedron().as_regular(4, 0).unwrap();
    assert_eq!(o.root_edges.len(), 4);
    for i in 0..4 {
        assert_eq!(o.map.prev_cw(o.root_edges[i]), o.root_edges[(i + 1) % 4]);
    }
    let mut faces = o.root_faces.clone();
    faces.sort();
    faces.dedup();
    assert_eq!(faces.len(), 4);
    assert!(matches!(cube().as_regular(4, 0), Err(Error::NotDRegular { degree: 3, .. })));
    assert!(icosahedron().as_regular(5, 3).is_ok());
}

#[test]
fn primal_puts_root_faces_outside() {
    for rv in [octahedron().as_regular(4, 2).unwrap(), icosahedron().as_regular(5, 7).unwrap()] {
        let g = rv.primal().unwrap();
        assert_eq!(g.external, rv.root_faces);
        assert_eq!(g.map.outer_face(), g.map.face(rv.root_edges[0]));
        // Dualizing again gives back the same darts around the same corners.
        let back = g.map.dual();
        for x in 0..back.dart_count() {
            assert_eq!(back.next_cw(x), rv.map.next_cw(x));
            assert_eq!(back.twin(x), rv.map.twin(x));
        }
        assert_eq!(back.origin(rv.root_edges[0]), back.root_vertex().unwrap());
    }
}

#[test]
fn json_round_trip_is_exact() {
    for m in [tetrahedron(), dodecahedron(), octahedron().dual()] {
        let text = m.to_json();
        let back = PlaneMap::from_json(&text).unwrap();
        assert_eq!(back, m);
        assert_eq!(back.to_json(), text);
    }
}

fn small_maps() -> &'static Vec<PlaneMap> {
    static MAPS: OnceLock<Vec<PlaneMap>> = OnceLock::new();
    MAPS.get_or_init(|| {
        let mut out = Vec::new();
        for (d, faces) in [(3, 2), (3, 4), (3, 6), (4, 2), (4, 3), (4, 4), (4, 5), (5, 2), (5, 4), (6, 2), (6, 3)] {
            for_each_rooted_angulation(d, faces, &mut |m| {
                out.push(m);
                true
            });
        }
        out
    })
}

proptest! {
    #[test]
    fn map_invariants(i in 0usize..100_000) {
        let maps = small_maps();
        let m = &maps[i % maps.len()];
        for d in 0..m.dart_count() {
            prop_assert_eq!(m.twin(m.twin(d)), d);
            prop_assert_eq!(m.prev_cw(m.next_cw(d)), d);
        }
        let face_sum: usize = (0..m.face_count()).map(|f| m.face_degree(f)).sum();
        let vertex_sum: usize = (0..m.vertex_count()).map(|v| m.degree(v)).sum();
        prop_assert_eq!(face_sum, 2 * m.edge_count());
        prop_assert_eq!(vertex_sum, 2 * m.edge_count());
        prop_assert_eq!(m.vertex_count() + m.face_count(), m.edge_count() + 2);
        let dual = m.dual();
        for f in 0..m.face_count() {
            prop_assert_eq!(dual.degree(f), m.face_degree(f));
        }
        prop_assert!(m.is_isomorphic(&dual.dual()));
    }

    #[test]
    fn angulation_edge_relation(i in 0usize..100_000) {
        let maps = small_maps();
        let m = &maps[i % maps.len()];
        let d = m.face_degree(0);
        prop_assert_eq!(d * m.face_count(), 2 * m.edge_count());
        if m.girth() == Ok(d) && m.vertex_count() > d {
            // (e - d) / (v - d) = d / (d - 2)
            prop_assert_eq!((m.edge_count() - d) * (d - 2), (m.vertex_count() - d) * d);
        }
    }
}
