mod common;

use std::collections::BTreeSet;
use std::sync::OnceLock;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use schnyder_kit::drawing::*;
use schnyder_kit::duality::*;
use schnyder_kit::even::*;
use schnyder_kit::planar_map::fixtures::*;
use schnyder_kit::planar_map::generate::angulation_classes;
use schnyder_kit::planar_map::{PlaneMap, RegularView};
use schnyder_kit::schnyder::bit;
use schnyder_kit::Error;

/// Duals of simple quadrangulations: fixtures plus every class up to 8 faces.
fn quartic_maps() -> &'static [PlaneMap] {
    static MAPS: OnceLock<Vec<PlaneMap>> = OnceLock::new();
    MAPS.get_or_init(|| {
        let mut maps = vec![cube().dual(), k23().dual(), cycle(4).dual()];
        for faces in 3..=8 {
            maps.extend(angulation_classes(4, faces, true).iter().map(|q| q.dual()));
        }
        maps
    })
}

fn rooted(maps: &[PlaneMap]) -> Vec<RegularView> {
    maps.iter().flat_map(|m| (0..m.vertex_count()).map(|v| m.as_regular(4, v).unwrap())).collect()
}

fn instance(rv: &RegularView) -> (DualPair, RegularDecomposition) {
    compute_even_regular_decomposition(rv).unwrap()
}

fn octahedron_views() -> Vec<RegularView> {
    (0..6).map(|v| octahedron().as_regular(4, v).unwrap()).collect()
}

fn is_permutation(values: impl Iterator<Item = i64>, len: usize) -> bool {
    let mut v: Vec<i64> = values.collect();
    v.sort();
    v == (0..len as i64).collect::<Vec<_>>()
}

fn non_root(rv: &RegularView) -> impl Iterator<Item = usize> + '_ {
    (0..rv.map.vertex_count()).filter(move |&v| v != rv.root)
}

#[test]
fn octahedron_placement_is_a_permutation() {
    for rv in octahedron_views() {
        let (_, r) = instance(&rv);
        let coords = place_by_face_counting(&rv, &r).unwrap();
        assert!(is_permutation(non_root(&rv).map(|v| coords[v].unwrap().0), 5));
        assert!(is_permutation(non_root(&rv).map(|v| coords[v].unwrap().1), 5));
        assert_eq!(place_by_equatorial_lines(&rv, &r).unwrap(), coords);
    }
}

#[test]
fn octahedron_drawing() {
    for rv in octahedron_views() {
        let (_, r) = instance(&rv);
        let gd = draw(&rv, &r).unwrap();
        assert_eq!(gd.bends.iter().flatten().count(), 8);
        assert!(check_planarity(&gd).is_planar());
        let full = add_root(&gd).unwrap();
        assert_eq!(full.bend_count(), 16);
        assert_eq!(full.coords[rv.root], Some((-1, -1)));
        assert!(check_planarity(&full).is_planar());
    }
}

#[test]
fn boundary_vertices_sit_on_their_sides() {
    for rv in rooted(quartic_maps()) {
        let (_, r) = instance(&rv);
        let gd = draw(&rv, &r).unwrap();
        let top = rv.map.vertex_count() as i64 - 2;
        let p = |k: usize| gd.point(rv.root_neighbor(k));
        assert_eq!(p(0).1, 0);
        assert_eq!(p(1).0, 0);
        assert_eq!(p(2).1, top);
        assert_eq!(p(3).0, top);
    }
}

#[test]
fn placements_agree_and_regions_nest() {
    for rv in rooted(quartic_maps()) {
        let (_, r) = instance(&rv);
        let counted = place_by_face_counting(&rv, &r).unwrap();
        assert_eq!(place_by_equatorial_lines(&rv, &r).unwrap(), counted);
        let n = rv.map.vertex_count();
        assert!(is_permutation(non_root(&rv).map(|v| counted[v].unwrap().0), n - 1));
        assert!(is_permutation(non_root(&rv).map(|v| counted[v].unwrap().1), n - 1));
        for i in 1..=4 {
            let regions: Vec<(usize, Vec<bool>)> =
                non_root(&rv).map(|v| (v, region_faces(&rv, &r, v, i).unwrap())).collect();
            for (u, ru) in &regions {
                for (v, rv_) in &regions {
                    if u >= v {
                        continue;
                    }
                    let sub = ru.iter().zip(rv_).all(|(&a, &b)| !a || b);
                    let sup = ru.iter().zip(rv_).all(|(&a, &b)| a || !b);
                    assert!(sub != sup, "regions of {u} and {v} for color {i} are not strictly nested");
                }
            }
        }
    }
}

#[test]
fn equatorial_lines_keep_colors_on_their_sides() {
    for rv in rooted(quartic_maps()) {
        let (_, r) = instance(&rv);
        let m = &rv.map;
        let n = m.vertex_count();
        for i in 1..=4u32 {
            let line = equatorial_line(&rv, &r, i).unwrap();
            assert_eq!(line.len(), (n - 1) + (n - 2));
            let j = (i + 1) % 4 + 1;
            let color_of = |x: usize| {
                let c = r.colors[x] | r.colors[m.twin(x)];
                if c & bit(i) != 0 {
                    i
                } else {
                    j
                }
            };
            // At each inner vertex of the line, the darts clockwise from the
            // outgoing face to the incoming face lie on the right.
            for k in (2..line.len().saturating_sub(2)).step_by(2) {
                let (LineItem::Face(f_in), LineItem::Vertex(v), LineItem::Face(f_out)) = (line[k - 1], line[k], line[k + 1])
                else {
                    panic!("line items do not alternate");
                };
                let darts = m.darts_around(v);
                let at = |f: usize| darts.iter().position(|&x| m.corner_face(x) == f).unwrap();
                let (a, b) = (at(f_out), at(f_in));
                let mut s = (a + 1) % darts.len();
                loop {
                    assert_eq!(color_of(darts[s]), i, "vertex {v} on line {i}");
                    if s == b {
                        break;
                    }
                    s = (s + 1) % darts.len();
                }
                let mut s = (b + 1) % darts.len();
                loop {
                    assert_eq!(color_of(darts[s]), j, "vertex {v} on line {i}");
                    if s == a {
                        break;
                    }
                    s = (s + 1) % darts.len();
                }
            }
        }
    }
}

/// Unit direction of a segment, in the color convention 1 down, 2 left, 3 up, 4 right.
fn direction(from: Point, to: Point) -> u32 {
    match ((to.0 - from.0).signum(), (to.1 - from.1).signum()) {
        (0, -1) => 1,
        (-1, 0) => 2,
        (0, 1) => 3,
        (1, 0) => 4,
        _ => 0,
    }
}

#[test]
fn orthogonal_drawings_on_corpus() {
    for rv in rooted(quartic_maps()) {
        let (_, r) = instance(&rv);
        let m = &rv.map;
        let gd = draw(&rv, &r).unwrap();
        assert_eq!(check_planarity(&gd), PlanarityReport::default());
        for e in 0..m.edge_count() {
            let x = m.edge_darts()[e];
            assert_eq!(gd.bends[e].is_some(), !rv.is_root_dart(x));
            // Each arc leaves its vertex in the direction of its color.
            if let Some(b) = gd.bends[e] {
                for y in [x, m.twin(x)] {
                    assert_eq!(bit(direction(gd.point(m.origin(y)), b)), r.colors[y]);
                }
            }
        }
        // The rotation at each vertex is clockwise down, left, up, right.
        for v in non_root(&rv) {
            let dirs: Vec<u32> = m
                .darts_around(v)
                .into_iter()
                .map(|x| r.colors[x].trailing_zeros() + 1)
                .collect();
            let start = dirs.iter().position(|&c| c == 1).unwrap();
            assert_eq!((0..4).map(|k| dirs[(start + k) % 4]).collect::<Vec<_>>(), vec![1, 2, 3, 4]);
        }
        let n = m.vertex_count() as i64;
        let full = add_root(&gd).unwrap();
        assert!(check_planarity(&full).is_planar());
        assert_eq!(full.bend_count() as i64, 2 * n + 4);
        let pts: Vec<Point> = full
            .coords
            .iter()
            .flatten()
            .chain(full.bends.iter().flatten())
            .chain(full.root.as_ref().unwrap().routes.iter().flatten())
            .copied()
            .collect();
        let span = |f: fn(&Point) -> i64| pts.iter().map(f).max().unwrap() - pts.iter().map(f).min().unwrap();
        assert_eq!((span(|p| p.0), span(|p| p.1)), (n + 1, n + 1));
        // Root edges arrive at v* from the right, above, left and below.
        let routes = &full.root.as_ref().unwrap().routes;
        let arrivals: Vec<u32> = routes.iter().map(|p| direction(p[p.len() - 1], p[p.len() - 2])).collect();
        assert_eq!(arrivals, vec![4, 3, 2, 1]);
    }
}

#[test]
fn face_patterns_and_markers() {
    for rv in rooted(quartic_maps()) {
        let (_, r) = instance(&rv);
        let gd = draw(&rv, &r).unwrap();
        let fc = classify_faces(&gd, &r).unwrap();
        assert_eq!(fc.faces.len(), rv.map.vertex_count() - 2);
        for f in &fc.faces {
            assert_eq!(gd.point(f.x_plus).0, f.x + 1);
            assert_eq!(gd.point(f.y_plus).1, f.y + 1);
            // Black faces: a-edge right then down, b-edge left then up.
            let bend = |(u, v): (usize, usize)| {
                let e = rv.map.darts_around(u).into_iter().find(|&x| rv.map.head(x) == v).unwrap();
                gd.bends[rv.map.edge_id(e)].unwrap()
            };
            let legs = |(u, v): (usize, usize)| {
                let b = bend((u, v));
                (direction(gd.point(u), b), direction(b, gd.point(v)))
            };
            if rv.map.face_degree(f.face) > 2 {
                if f.black {
                    assert_eq!(legs(f.a), (4, 1));
                    assert_eq!(legs(f.b), (2, 3));
                } else {
                    assert_eq!(legs(f.a), (3, 4));
                    assert_eq!(legs(f.b), (1, 2));
                }
            }
            if rv.map.face_degree(f.face) == 2 {
                assert_eq!(f.class, FaceClass::NonReducible);
            }
        }
    }
}

/// Checked through the dual quadrangulation: a face is partly
/// reducible iff its vertex has degree 2 in both completed reduced trees,
/// fully reducible iff both degrees are at least 2 otherwise.
#[test]
fn classification_matches_dual_tree_degrees() {
    for rv in rooted(quartic_maps()) {
        let (pair, r) = instance(&rv);
        let q = &pair.primal;
        let s = chi_inverse(&pair, &r).unwrap();
        let rs = lambda(q, &s).unwrap();
        let qm = &q.map;
        let u = &q.external;
        let mut deg = [vec![0usize; qm.vertex_count()], vec![0usize; qm.vertex_count()]];
        for x in 0..qm.dart_count() {
            for k in 0..2 {
                if rs.colors[x] & bit(k as u32 + 1) != 0 {
                    deg[k][qm.origin(x)] += 1;
                    deg[k][qm.head(x)] += 1;
                }
            }
        }
        for (k, hub) in [(0, u[0]), (1, u[2])] {
            deg[k][hub] += 2;
            deg[k][u[1]] += 1;
            deg[k][u[3]] += 1;
        }
        let gd = draw(&rv, &r).unwrap();
        for f in classify_faces(&gd, &r).unwrap().faces {
            let (d1, d2) = (deg[0][f.face], deg[1][f.face]);
            let expected = if (d1, d2) == (2, 2) {
                FaceClass::PartlyReducible
            } else if d1 >= 2 && d2 >= 2 {
                FaceClass::FullyReducible
            } else {
                FaceClass::NonReducible
            };
            assert_eq!(f.class, expected, "face {} with tree degrees ({d1}, {d2})", f.face);
        }
    }
}

#[test]
fn each_edge_is_special_once_with_an_empty_rectangle() {
    for rv in rooted(quartic_maps()) {
        let (_, r) = instance(&rv);
        let m = &rv.map;
        let gd = draw(&rv, &r).unwrap();
        let fc = classify_faces(&gd, &r).unwrap();
        let mut special = vec![0; m.edge_count()];
        for f in &fc.faces {
            for (u, v) in [f.a, f.b] {
                let darts: Vec<usize> = m.face_darts(f.face).into_iter().filter(|&x| {
                    let (a, b) = (m.origin(x), m.head(x));
                    (a, b) == (u, v) || (a, b) == (v, u)
                }).collect();
                // In a face of degree 2 both edges join u and v; each is
                // special once there.
                assert!(!darts.is_empty());
                special[m.edge_id(darts[0])] += 1;
            }
        }
        for (e, &x) in m.edge_darts().iter().enumerate() {
            if rv.is_root_dart(x) {
                continue;
            }
            let (u, v) = (m.origin(x), m.head(x));
            let (pu, pv) = (gd.point(u), gd.point(v));
            let (lo, hi) = ((pu.0.min(pv.0), pu.1.min(pv.1)), (pu.0.max(pv.0), pu.1.max(pv.1)));
            for w in non_root(&rv) {
                let p = gd.point(w);
                let inside = lo.0 <= p.0 && p.0 <= hi.0 && lo.1 <= p.1 && p.1 <= hi.1;
                assert!(!inside || w == u || w == v, "vertex {w} in the rectangle of edge {e}");
            }
            let parallel = m.darts_around(u).into_iter().filter(|&y| m.head(y) == v).count();
            if parallel == 1 {
                assert_eq!(special[e], 1, "edge {e}");
            }
        }
    }
}

#[test]
fn straight_line_drawings_are_planar() {
    for rv in rooted(quartic_maps()) {
        let (_, r) = instance(&rv);
        let gd = draw(&rv, &r).unwrap();
        let sl = straight_line_drawing(&gd);
        assert_eq!(check_straight_planarity(&sl), PlanarityReport::default());
    }
}

#[test]
fn parallel_edges_collapse_to_one_segment() {
    let rv = k23().dual().as_regular(4, 0).unwrap();
    let (_, r) = instance(&rv);
    let gd = draw(&rv, &r).unwrap();
    let sl = straight_line_drawing(&gd);
    let inner = rv.map.edge_darts().iter().filter(|&&x| !rv.is_root_dart(x)).count();
    assert!(sl.segments.len() < inner);
    let unique: BTreeSet<_> = sl.segments.iter().collect();
    assert_eq!(unique.len(), sl.segments.len());
}

#[test]
fn reductions_stay_planar() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for rv in rooted(quartic_maps()) {
        let (_, r) = instance(&rv);
        let gd = draw(&rv, &r).unwrap();
        let fc = classify_faces(&gd, &r).unwrap();
        let balanced = balanced_reduction_choice(&fc);
        let partly = fc.count(FaceClass::PartlyReducible);
        let full = fc.count(FaceClass::FullyReducible);
        assert!(balanced.balanced);
        let mut choices = vec![balanced];
        choices.extend((0..3).map(|_| random_reduction_choice(&fc, &mut rng)));
        for rc in choices {
            assert!(rc.x.len() + rc.y.len() <= 2 * full + partly);
            let reduced = apply_reduction(&gd, &rc).unwrap();
            assert!(check_planarity(&reduced).is_planar(), "{rc:?}");
            assert!(check_straight_planarity(&straight_line_drawing(&reduced)).is_planar());
            assert_eq!(reduced.bends.iter().flatten().count(), gd.bends.iter().flatten().count());
            let side = rv.map.vertex_count() as i64 - 1;
            let xs: BTreeSet<i64> = non_root(&rv).map(|v| reduced.point(v).0).collect();
            let ys: BTreeSet<i64> = non_root(&rv).map(|v| reduced.point(v).1).collect();
            assert_eq!(xs, (0..side - rc.x.len() as i64).collect());
            assert_eq!(ys, (0..side - rc.y.len() as i64).collect());
            // Face patterns survive the deletion of rows and columns.
            classify_faces(&reduced, &r).unwrap();
            assert!(check_planarity(&add_root(&reduced).unwrap()).is_planar());
        }
    }
}

#[test]
fn balanced_split() {
    let face = |x: i64, class| FaceInfo {
        face: x as usize,
        black: true,
        class,
        a: (0, 1),
        b: (2, 3),
        x_minus: 0,
        x_plus: 2,
        y_minus: 1,
        y_plus: 3,
        x,
        y: 10 + x,
    };
    let none = FaceClassification { faces: vec![face(0, FaceClass::FullyReducible), face(1, FaceClass::NonReducible)] };
    let rc = balanced_reduction_choice(&none);
    assert_eq!((rc.x, rc.y), (vec![0], vec![10]));
    let three = FaceClassification {
        faces: vec![face(5, FaceClass::PartlyReducible), face(1, FaceClass::PartlyReducible), face(3, FaceClass::PartlyReducible)],
    };
    let rc = balanced_reduction_choice(&three);
    assert_eq!((rc.x, rc.y), (vec![1, 5], vec![13]));
}

#[test]
fn planarity_oracle_reports_crossings() {
    let rv = octahedron().as_regular(4, 0).unwrap();
    let (_, r) = instance(&rv);
    let gd = draw(&rv, &r).unwrap();
    let mut bad = gd.clone();
    let v = non_root(&rv).next().unwrap();
    let w = non_root(&rv).nth(1).unwrap();
    bad.coords.swap(v, w);
    bad.bends = orthogonal_bends_ignoring_rays(&bad);
    assert!(!check_planarity(&bad).is_planar());
    // Moving a vertex onto another one is always caught.
    let mut stacked = gd.clone();
    stacked.coords[v] = stacked.coords[w];
    let report = check_planarity(&stacked);
    assert!(report.crossings.contains(&(Element::Vertex(v.min(w)), Element::Vertex(v.max(w)))));
}

/// Bends placed at (x(u), y(v)) regardless of colors, so edges still share
/// endpoints at their vertices.
fn orthogonal_bends_ignoring_rays(gd: &GridDrawing) -> Vec<Option<Point>> {
    let m = &gd.host.map;
    m.edge_darts()
        .iter()
        .enumerate()
        .map(|(e, &x)| gd.bends[e].map(|_| (gd.point(m.origin(x)).0, gd.point(m.head(x)).1)))
        .collect()
}

#[test]
fn json_round_trips() {
    let rv = octahedron().as_regular(4, 2).unwrap();
    let (_, r) = instance(&rv);
    let gd = draw(&rv, &r).unwrap();
    let fc = classify_faces(&gd, &r).unwrap();
    let full = add_root(&apply_reduction(&gd, &balanced_reduction_choice(&fc)).unwrap()).unwrap();
    for d in [gd, full] {
        let text = d.to_json();
        assert_eq!(GridDrawing::from_json(&rv, &text).unwrap(), d);
    }
    let other = cube().dual().as_regular(4, 0).unwrap();
    assert!(matches!(GridDrawing::from_json(&other, "{\"n\": 3}"), Err(Error::Format(_))));
}

#[test]
fn degenerate_four_cycle_dual() {
    let rv = cycle(4).dual().as_regular(4, 0).unwrap();
    let (_, r) = instance(&rv);
    let gd = draw(&rv, &r).unwrap();
    assert_eq!(gd.coords[1 - rv.root], Some((0, 0)));
    assert!(gd.bends.iter().all(|b| b.is_none()));
    let full = add_root(&gd).unwrap();
    assert!(check_planarity(&full).is_planar());
    assert!(emit_svg(&full, SvgStyle::default()).contains("<circle"));
}

#[test]
fn octahedron_svg_matches_golden_file() {
    let rv = octahedron().as_regular(4, 0).unwrap();
    let (_, r) = instance(&rv);
    let full = add_root(&draw(&rv, &r).unwrap()).unwrap();
    let svg = emit_svg(&full, SvgStyle { grid: true, straight: false });
    let golden = include_str!("golden/octahedron.svg");
    assert_eq!(svg, golden);
    assert_eq!(svg.matches("<path").count(), 12);
    assert_eq!(svg.matches("<circle").count(), 6);
}

#[test]
fn equatorial_placement_scales() {
    let rv = common::capped_cylinder(60).as_regular(4, 0).unwrap();
    let (_, r) = instance(&rv);
    let t = Instant::now();
    let coords = place_by_equatorial_lines(&rv, &r).unwrap();
    let elapsed = t.elapsed();
    let n = rv.map.vertex_count();
    assert!(is_permutation(non_root(&rv).map(|v| coords[v].unwrap().0), n - 1));
    assert_eq!(place_by_face_counting(&rv, &r).unwrap(), coords);
    assert!(elapsed.as_secs_f64() < 1.0, "{elapsed:?}");
}

#[test]
fn random_quadrangulation_duals_draw_without_crossings() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for faces in [6, 7, 20, 80] {
        let q = common::random_quadrangulation(faces, &mut rng);
        assert_eq!(q.face_count(), faces);
        assert_eq!(q.girth().unwrap(), 4);
        let rv = q.dual().as_regular(4, faces / 2).unwrap();
        let (_, r) = instance(&rv);
        let gd = draw(&rv, &r).unwrap();
        assert!(check_planarity(&gd).is_planar());
        assert_eq!(place_by_equatorial_lines(&rv, &r).unwrap(), place_by_face_counting(&rv, &r).unwrap());
    }
}
