//! Small hand-made maps used by tests, examples and the CLI.
//!
//! Most are given by straight-line coordinates (y pointing up); the rotation
//! at each vertex is read off by sorting neighbours clockwise by angle.

use super::{Dart, PlaneMap, Vertex};

/// Map from a straight-line drawing. `outer` is a dart `(u, v)` with the
/// outer face on its left, i.e. a hull edge walked clockwise.
pub fn from_coords(points: &[(f64, f64)], edges: &[(Vertex, Vertex)], outer: (Vertex, Vertex)) -> PlaneMap {
    let mut rotations: Vec<Vec<usize>> = vec![Vec::new(); points.len()];
    for (e, &(a, b)) in edges.iter().enumerate() {
        rotations[a].push(e);
        rotations[b].push(e);
    }
    for (v, rot) in rotations.iter_mut().enumerate() {
        let angle = |e: &usize| {
            let (a, b) = edges[*e];
            let w = if a == v { b } else { a };
            let (dx, dy) = (points[w].0 - points[v].0, points[w].1 - points[v].1);
            dy.atan2(dx)
        };
        rot.sort_by(|x, y| angle(y).partial_cmp(&angle(x)).unwrap());
    }
    let e = edges
        .iter()
        .position(|&(a, b)| (a, b) == outer || (b, a) == outer)
        .expect("outer edge present");
    let dart: Dart = if edges[e].0 == outer.0 { 2 * e } else { 2 * e + 1 };
    PlaneMap::from_edges(edges, &rotations, dart).expect("fixture is a valid map")
}

pub fn tetrahedron() -> PlaneMap {
    let pts = [(0.0, 0.0), (10.0, 0.0), (5.0, 10.0), (5.0, 4.0)];
    let edges = [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)];
    from_coords(&pts, &edges, (0, 2))
}

/// The d-cycle: two faces of degree d.
pub fn cycle(d: usize) -> PlaneMap {
    let pts: Vec<(f64, f64)> = (0..d)
        .map(|i| {
            let t = std::f64::consts::TAU * i as f64 / d as f64;
            (t.cos(), t.sin())
        })
        .collect();
    let edges: Vec<(usize, usize)> = (0..d).map(|i| (i, (i + 1) % d)).collect();
    from_coords(&pts, &edges, (1, 0))
}

pub fn cube() -> PlaneMap {
    let pts = [
        (0.0, 0.0),
        (10.0, 0.0),
        (10.0, 10.0),
        (0.0, 10.0),
        (3.0, 3.0),
        (7.0, 3.0),
        (7.0, 7.0),
        (3.0, 7.0),
    ];
    let mut edges = Vec::new();
    for i in 0..4 {
        edges.push((i, (i + 1) % 4));
        edges.push((4 + i, 4 + (i + 1) % 4));
        edges.push((i, i + 4));
    }
    from_coords(&pts, &edges, (0, 3))
}

pub fn octahedron() -> PlaneMap {
    let pts = [(0.0, 0.0), (12.0, 0.0), (6.0, 12.0), (6.0, 3.0), (8.0, 6.0), (4.0, 6.0)];
    let edges = [
        (0, 1),
        (1, 2),
        (2, 0),
        (3, 4),
        (4, 5),
        (5, 3),
        (3, 0),
        (3, 1),
        (4, 1),
        (4, 2),
        (5, 2),
        (5, 0),
    ];
    from_coords(&pts, &edges, (0, 2))
}

fn polar(r: f64, deg: f64) -> (f64, f64) {
    let t = deg.to_radians();
    (r * t.cos(), r * t.sin())
}

pub fn dodecahedron() -> PlaneMap {
    // Outer pentagon p, ring q/r alternating, inner pentagon s.
    let mut pts = Vec::new();
    for i in 0..5 {
        pts.push(polar(10.0, 90.0 + 72.0 * i as f64));
    }
    for i in 0..5 {
        pts.push(polar(6.0, 90.0 + 72.0 * i as f64));
        pts.push(polar(5.0, 126.0 + 72.0 * i as f64));
    }
    for i in 0..5 {
        pts.push(polar(2.0, 126.0 + 72.0 * i as f64));
    }
    let (p, q, r, s) = (|i: usize| i % 5, |i: usize| 5 + 2 * (i % 5), |i: usize| 6 + 2 * (i % 5), |i: usize| 15 + i % 5);
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((p(i), p(i + 1)));
        edges.push((p(i), q(i)));
        edges.push((q(i), r(i)));
        edges.push((r(i), q(i + 1)));
        edges.push((r(i), s(i)));
        edges.push((s(i), s(i + 1)));
    }
    // Points go counterclockwise, so p(1) -> p(0) walks the hull clockwise.
    from_coords(&pts, &edges, (p(1), p(0)))
}

pub fn icosahedron() -> PlaneMap {
    let dual = dodecahedron().dual();
    dual.with_root_vertex(None)
}

/// Triangle with one vertex stacked inside, then a second one stacked in
/// the inner face touching `u_1` and `u_3`.
pub fn stacked_two() -> PlaneMap {
    let pts = [(0.0, 0.0), (12.0, 0.0), (6.0, 12.0), (6.0, 4.0), (6.0, 1.5)];
    let edges = [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3), (4, 0), (4, 1), (4, 3)];
    from_coords(&pts, &edges, (0, 2))
}

/// Triangle with three stacked vertices, each in a different face of the
/// first one.
pub fn stacked_three_spread() -> PlaneMap {
    let pts = [(0.0, 0.0), (12.0, 0.0), (6.0, 12.0), (6.0, 4.0), (6.0, 1.5), (8.5, 5.5), (3.5, 5.5)];
    let edges = [
        (0, 1),
        (1, 2),
        (2, 0),
        (0, 3),
        (1, 3),
        (2, 3),
        (4, 0),
        (4, 1),
        (4, 3),
        (5, 1),
        (5, 2),
        (5, 3),
        (6, 2),
        (6, 0),
        (6, 3),
    ];
    from_coords(&pts, &edges, (0, 2))
}

/// Two poles joined through three middle vertices: the quadrangulation
/// with three faces.
pub fn k23() -> PlaneMap {
    let pts = [(0.0, 10.0), (0.0, -10.0), (-5.0, 0.0), (0.0, 0.0), (5.0, 0.0)];
    let edges = [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)];
    from_coords(&pts, &edges, (2, 0))
}

/// Outer hexagon and inner hexagon linked by three spokes: a hexangulation
/// of girth 6.
pub fn hex_rings() -> PlaneMap {
    let mut pts = Vec::new();
    for i in 0..6 {
        pts.push(polar(10.0, 60.0 * i as f64));
    }
    for i in 0..6 {
        pts.push(polar(5.0, 60.0 * i as f64));
    }
    let mut edges = Vec::new();
    for i in 0..6 {
        edges.push((i, (i + 1) % 6));
        edges.push((6 + i, 6 + (i + 1) % 6));
    }
    for i in [0, 2, 4] {
        edges.push((i, 6 + i));
    }
    from_coords(&pts, &edges, (1, 0))
}

/// Quadrangulation of girth 2: a doubled edge `a b` with a pendant vertex
/// on each side.
pub fn quad_double_edge() -> PlaneMap {
    // a = 0, b = 1, x = 2 inside the lens, y = 3 outside.
    let edges = [(0, 1), (0, 1), (0, 2), (1, 3)];
    let rotations = vec![vec![0, 2, 1], vec![0, 3, 1], vec![2], vec![3]];
    PlaneMap::from_edges(&edges, &rotations, 6).expect("valid fixture")
}

/// Triangulation of girth 2: a doubled edge with one apex inside the lens
/// and one outside.
pub fn tri_double_edge() -> PlaneMap {
    // a = 0 left, b = 1 right, x = 2 inside, y = 3 far above.
    // Edge 0 bulges up, edge 1 bulges down; x sits on the axis, y above.
    let edges = [(0, 1), (0, 1), (0, 2), (1, 2), (0, 3), (1, 3)];
    let rotations = vec![vec![4, 0, 2, 1], vec![5, 1, 3, 0], vec![2, 3], vec![5, 4]];
    PlaneMap::from_edges(&edges, &rotations, 2 * 4).expect("valid fixture")
}

/// Two copies of K4 minus an edge, joined by two edges: cubic with a
/// 2-edge cut.
pub fn cubic_two_cut() -> PlaneMap {
    let pts = [
        (-6.0, 5.0),
        (-3.0, 5.0),
        (0.0, 8.0),
        (0.0, 2.0),
        (10.0, 5.0),
        (7.0, 5.0),
        (4.0, 8.0),
        (4.0, 2.0),
    ];
    let edges = [
        (0, 1),
        (0, 2),
        (0, 3),
        (1, 2),
        (1, 3),
        (4, 5),
        (4, 6),
        (4, 7),
        (5, 6),
        (5, 7),
        (2, 6),
        (3, 7),
    ];
    from_coords(&pts, &edges, (0, 2))
}

/// Two octahedra, each missing one outer edge, joined by two edges:
/// 4-regular with a 2-edge cut.
pub fn quartic_two_cut() -> PlaneMap {
    let pts = [
        (0.0, 0.0),
        (12.0, 0.0),
        (6.0, 12.0),
        (6.0, 3.0),
        (8.0, 6.0),
        (4.0, 6.0),
        (0.0, -4.0),
        (12.0, -4.0),
        (6.0, -16.0),
        (6.0, -7.0),
        (8.0, -10.0),
        (4.0, -10.0),
    ];
    let mut edges = Vec::new();
    for o in [0, 6] {
        edges.extend_from_slice(&[
            (o + 1, o + 2),
            (o + 2, o),
            (o + 3, o + 4),
            (o + 4, o + 5),
            (o + 5, o + 3),
            (o + 3, o),
            (o + 3, o + 1),
            (o + 4, o + 1),
            (o + 4, o + 2),
            (o + 5, o + 2),
            (o + 5, o),
        ]);
    }
    edges.push((0, 6));
    edges.push((1, 7));
    from_coords(&pts, &edges, (0, 2))
}
