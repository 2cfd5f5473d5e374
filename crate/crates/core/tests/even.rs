mod common;

use proptest::prelude::*;
use schnyder_kit::duality::*;
use schnyder_kit::even::*;
use schnyder_kit::orientation::*;
use schnyder_kit::planar_map::fixtures::*;
use schnyder_kit::planar_map::{AngulationView, PlaneMap};
use schnyder_kit::schnyder::*;
use schnyder_kit::Error;

fn even_corpus() -> Vec<AngulationView> {
    common::small_corpus(16).into_iter().filter(|a| a.d % 2 == 0).collect()
}

/// Every labelling, tagged with whether its orientation has only even values.
fn tagged_labellings(ang: &AngulationView) -> Vec<(bool, CornerLabelling)> {
    lattice_enumerate(ang, DEFAULT_LATTICE_CAP)
        .unwrap()
        .iter()
        .map(|o| (o.is_even(), psi_inverse(ang, o).unwrap()))
        .collect()
}

fn even_labelling(ang: &AngulationView) -> CornerLabelling {
    psi_inverse(ang, &compute_p_p1_orientation(ang).unwrap().doubled()).unwrap()
}

#[test]
fn cube_doubled_labelling_is_even() {
    let ang = cube().as_angulation(4).unwrap();
    let l = even_labelling(&ang);
    assert_eq!(is_even_labelling(&ang, &l), Ok(true));
    let s = phi(&ang, &l).unwrap();
    assert_eq!(is_even_schnyder(&ang, &s), Ok(true));
}

#[test]
fn odd_d_is_rejected() {
    let ang = tetrahedron().as_angulation(3).unwrap();
    let l = psi_inverse(&ang, &compute_dd2_orientation(&ang).unwrap()).unwrap();
    assert_eq!(is_even_labelling(&ang, &l), Err(Error::OddD(3)));
    let s = phi(&ang, &l).unwrap();
    assert!(matches!(lambda(&ang, &s), Err(Error::NotEven(_))));
}

#[test]
fn even_color_at_black_vertex_is_not_even() {
    let ang = cube().as_angulation(4).unwrap();
    let mut l = even_labelling(&ang);
    let black = black_vertices(&ang).unwrap();
    let x = (0..ang.map.dart_count()).find(|&x| black[ang.map.origin(x)]).unwrap();
    l.corner_colors[x] = 2;
    assert_eq!(is_even_labelling(&ang, &l), Ok(false));
}

#[test]
fn parity_characterizations_agree() {
    for ang in even_corpus() {
        let pair = DualPair::from_angulation(&ang).unwrap();
        for (even, l) in tagged_labellings(&ang) {
            let s = phi(&ang, &l).unwrap();
            let r = chi(&pair, &s).unwrap();
            assert_eq!(is_even_labelling(&ang, &l), Ok(even));
            assert_eq!(is_even_schnyder(&ang, &s), Ok(even));
            assert_eq!(is_even_regular(&pair.dual, &r), Ok(even));
        }
    }
}

#[test]
fn lambda_round_trips_on_corpus() {
    for ang in even_corpus() {
        let pair = DualPair::from_angulation(&ang).unwrap();
        let black_face = black_faces(&pair.dual).unwrap();
        let h = &pair.dual.map;
        for (even, l) in tagged_labellings(&ang) {
            let s = phi(&ang, &l).unwrap();
            let r = chi(&pair, &s).unwrap();
            if !even {
                assert!(matches!(lambda(&ang, &s), Err(Error::NotEven(_))));
                assert!(matches!(lambda_star(&pair.dual, &r), Err(Error::NotEven(_))));
                continue;
            }
            let rs = lambda(&ang, &s).unwrap();
            assert_eq!(validate_reduced_schnyder(&ang, &rs), vec![]);
            assert_eq!(lambda_inverse(&ang, &rs).unwrap(), s);
            let rr = lambda_star(&pair.dual, &r).unwrap();
            assert_eq!(validate_reduced_regular(&pair.dual, &rr), vec![]);
            assert_eq!(lambda_star_inverse(&pair.dual, &rr).unwrap(), r);
            // Even colors have a black face on the right, odd ones a white one.
            for x in 0..h.dart_count() {
                for c in colors_of(r.colors[x]) {
                    assert_eq!(black_face[h.corner_face(x)], c % 2 == 0, "arc {x} color {c}");
                }
            }
        }
    }
}

#[test]
fn cube_reduced_pair_gives_two_trees() {
    let ang = cube().as_angulation(4).unwrap();
    let m = &ang.map;
    let rs = lambda(&ang, &phi(&ang, &even_labelling(&ang)).unwrap()).unwrap();
    let u = &ang.external;
    let edge = |a: usize, b: usize| m.darts_around(a).into_iter().find(|&x| m.head(x) == b).unwrap();
    let extra = [[edge(u[3], u[0]), edge(u[0], u[1])], [edge(u[1], u[2]), edge(u[2], u[3])]];
    let mut used = vec![0; m.edge_count()];
    for (k, added) in extra.iter().enumerate() {
        let mut edges: Vec<usize> =
            (0..m.dart_count()).filter(|&x| rs.colors[x] & bit(k as u32 + 1) != 0).map(|x| m.edge_id(x)).collect();
        edges.extend(added.iter().map(|&x| m.edge_id(x)));
        // A tree on all vertices but one: u_3 for the first, u_1 for the second.
        let missing = if k == 0 { u[2] } else { u[0] };
        assert_eq!(edges.len(), m.vertex_count() - 2);
        let mut comp: Vec<usize> = (0..m.vertex_count()).collect();
        fn find(c: &mut Vec<usize>, v: usize) -> usize {
            if c[v] != v {
                let r = find(c, c[v]);
                c[v] = r;
            }
            c[v]
        }
        for &e in &edges {
            used[e] += 1;
            let x = m.edge_darts()[e];
            let (a, b) = (find(&mut comp, m.origin(x)), find(&mut comp, m.head(x)));
            assert_ne!(a, b, "cycle in tree {}", k + 1);
            comp[a] = b;
        }
        let root = find(&mut comp, if missing == u[0] { u[1] } else { u[0] });
        for v in 0..m.vertex_count() {
            if v != missing {
                assert_eq!(find(&mut comp, v), root);
            }
        }
    }
    assert!(used.iter().all(|&c| c == 1));
}

#[test]
fn octahedron_pipeline() {
    for root in 0..6 {
        let rv = octahedron().as_regular(4, root).unwrap();
        let (_, r) = compute_even_regular_decomposition(&rv).unwrap();
        assert_eq!(validate_regular_decomposition(&rv, &r), vec![]);
        assert_eq!(is_even_regular(&rv, &r), Ok(true));
        let m = &rv.map;
        for (k, &e) in rv.root_edges.iter().enumerate() {
            assert_eq!(r.colors[m.twin(e)], bit(k as u32 + 1));
        }
        // T_2* and T_4* cover each non-root edge exactly once.
        for &x in m.edge_darts() {
            if rv.is_root_dart(x) {
                continue;
            }
            let even = [x, m.twin(x)].iter().filter(|&&y| r.colors[y] & (bit(2) | bit(4)) != 0).count();
            assert_eq!(even, 1);
        }
        // The reduced trees partition the edges except e_1* and e_3*.
        let rr = lambda_star(&rv, &r).unwrap();
        for &x in m.edge_darts() {
            let n = (rr.colors[x] | rr.colors[m.twin(x)]).count_ones();
            let odd_root = x == rv.root_edges[0] || x == m.twin(rv.root_edges[0]) || x == rv.root_edges[2] || x == m.twin(rv.root_edges[2]);
            assert_eq!(n, if odd_root { 0 } else { 1 });
        }
    }
}

#[test]
fn two_cut_is_rejected() {
    let rv = quartic_two_cut().as_regular(4, 0).unwrap();
    assert!(matches!(compute_even_regular_decomposition(&rv), Err(Error::MincutTooSmall(4))));
}

#[test]
fn reduced_validators_catch_damage() {
    let ang = cube().as_angulation(4).unwrap();
    let mut rs = lambda(&ang, &phi(&ang, &even_labelling(&ang)).unwrap()).unwrap();
    let x = (0..rs.colors.len()).find(|&x| rs.colors[x] != 0).unwrap();
    rs.colors[x] = 0;
    assert!(!validate_reduced_schnyder(&ang, &rs).is_empty());
    assert!(matches!(lambda_inverse(&ang, &rs), Err(Error::InvalidDecomposition(_))));

    let rv = octahedron().as_regular(4, 0).unwrap();
    let (_, r) = compute_even_regular_decomposition(&rv).unwrap();
    let mut rr = lambda_star(&rv, &r).unwrap();
    let x = (0..rr.colors.len()).find(|&x| rr.colors[x] != 0 && !rv.is_root_dart(x)).unwrap();
    let t = rv.map.twin(x);
    rr.colors.swap(x, t);
    assert!(validate_reduced_regular(&rv, &rr).iter().any(|v| v.axiom == "i'"));
    assert!(matches!(lambda_star_inverse(&rv, &rr), Err(Error::InvalidDecomposition(_))));
}

#[test]
fn reduced_json_round_trips() {
    let ang = cube().as_angulation(4).unwrap();
    let rs = lambda(&ang, &phi(&ang, &even_labelling(&ang)).unwrap()).unwrap();
    let text = rs.to_json();
    assert!(text.contains("\"reduced\":true"));
    assert_eq!(ReducedSchnyderDecomposition::from_json(&text).unwrap(), rs);
    let rv = octahedron().as_regular(4, 0).unwrap();
    let rr = lambda_star(&rv, &compute_even_regular_decomposition(&rv).unwrap().1).unwrap();
    assert_eq!(ReducedRegularDecomposition::from_json(&rr.to_json()).unwrap(), rr);
    assert!(ReducedRegularDecomposition::from_json(&text).is_err());
}

fn quartic_corpus() -> Vec<PlaneMap> {
    even_corpus().into_iter().filter(|a| a.d == 4).map(|a| a.map.dual()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn pipeline_on_dual_quadrangulations(i in 0usize..1000, root in 0usize..100) {
        let maps = quartic_corpus();
        let m = &maps[i % maps.len()];
        let rv = m.as_regular(4, root % m.vertex_count()).unwrap();
        let (pair, r) = compute_even_regular_decomposition(&rv).unwrap();
        prop_assert!(validate_regular_decomposition(&rv, &r).is_empty());
        let s = chi_inverse(&pair, &r).unwrap();
        prop_assert_eq!(is_even_schnyder(&pair.primal, &s), Ok(true));
        let rr = lambda_star(&rv, &r).unwrap();
        prop_assert_eq!(lambda_star_inverse(&rv, &rr).unwrap(), r);
    }
}
