//! Grid drawings of rooted 4-regular plane graphs of mincut 4 from an even
//! regular decomposition `T_1*..T_4*`.
//!
//! Rays: color 1 points down (-y), 2 left (-x), 3 up (+y), 4 right (+x).
//! Before reduction every non-root vertex sits on its own row and column of
//! the grid `{0..n-2}^2`, where `n` counts the root too.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::duality::RegularDecomposition;
use crate::error::{Error, Result};
use crate::even::black_faces;
use crate::planar_map::{Dart, Face, RegularView, Vertex};
use crate::schnyder::{add, bit};

pub type Point = (i64, i64);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootRouting {
    pub pos: Point,
    /// Polyline from `v_i*` to the root for each root edge `e_i*`.
    pub routes: Vec<Vec<Point>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ReductionChoice {
    #[serde(rename = "X")]
    pub x: Vec<i64>,
    #[serde(rename = "Y")]
    pub y: Vec<i64>,
    #[serde(default)]
    pub balanced: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridDrawing {
    pub host: RegularView,
    /// Per vertex; `None` for the root until `add_root`.
    pub coords: Vec<Option<Point>>,
    /// Per edge id; `None` for root edges.
    pub bends: Vec<Option<Point>>,
    pub root: Option<RootRouting>,
    pub reduction: Option<ReductionChoice>,
}

#[derive(Serialize, Deserialize)]
struct DrawingFile {
    n: usize,
    coords: BTreeMap<usize, [i64; 2]>,
    bends: BTreeMap<usize, [i64; 2]>,
    root: Option<RootRouting>,
    reduction: Option<ReductionChoice>,
}

impl GridDrawing {
    /// Number of vertices of the host, root included.
    pub fn n(&self) -> usize {
        self.host.map.vertex_count()
    }

    pub fn to_json(&self) -> String {
        let root = self.host.root;
        let file = DrawingFile {
            n: self.n(),
            coords: self
                .coords
                .iter()
                .enumerate()
                .filter(|&(v, _)| v != root)
                .filter_map(|(v, p)| p.map(|(x, y)| (v, [x, y])))
                .collect(),
            bends: self.bends.iter().enumerate().filter_map(|(e, p)| p.map(|(x, y)| (e, [x, y]))).collect(),
            root: self.root.clone(),
            reduction: self.reduction.clone(),
        };
        serde_json::to_string_pretty(&file).expect("drawing serializes")
    }

    pub fn from_json(host: &RegularView, text: &str) -> Result<Self> {
        let file: DrawingFile = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        let m = &host.map;
        if file.n != m.vertex_count()
            || file.coords.keys().any(|&v| v >= m.vertex_count())
            || file.bends.keys().any(|&e| e >= m.edge_count())
        {
            return Err(Error::Format("drawing does not fit the host map".into()));
        }
        let mut coords = vec![None; m.vertex_count()];
        for (&v, &[x, y]) in &file.coords {
            coords[v] = Some((x, y));
        }
        if let Some(r) = &file.root {
            coords[host.root] = Some(r.pos);
        }
        let mut bends = vec![None; m.edge_count()];
        for (&e, &[x, y]) in &file.bends {
            bends[e] = Some((x, y));
        }
        Ok(GridDrawing { host: host.clone(), coords, bends, root: file.root, reduction: file.reduction })
    }

    pub fn point(&self, v: Vertex) -> Point {
        self.coords[v].expect("vertex is placed")
    }

    /// Total bends, root routes included.
    pub fn bend_count(&self) -> usize {
        let inner = self.bends.iter().flatten().count();
        let root = self.root.as_ref().map_or(0, |r| r.routes.iter().map(|p| p.len() - 2).sum());
        inner + root
    }
}

/// The single color of a dart leaving a non-root vertex.
fn color(r: &RegularDecomposition, x: Dart) -> u32 {
    r.colors[x].trailing_zeros() + 1
}

fn parent(rv: &RegularView, r: &RegularDecomposition, v: Vertex, i: u32) -> Result<Dart> {
    rv.map
        .darts_around(v)
        .into_iter()
        .find(|&x| r.colors[x] & bit(i) != 0)
        .ok_or_else(|| Error::InvalidDecomposition(format!("vertex {v} has no color {i} arc")))
}

/// Darts of the color-`i` path from `v` to the root.
fn path_darts(rv: &RegularView, r: &RegularDecomposition, v: Vertex, i: u32) -> Result<Vec<Dart>> {
    let mut out = Vec::new();
    let mut at = v;
    while at != rv.root {
        let x = parent(rv, r, at, i)?;
        out.push(x);
        at = rv.map.head(x);
        if out.len() > rv.map.vertex_count() {
            return Err(Error::InvalidDecomposition(format!("color {i} path from {v} cycles")));
        }
    }
    Ok(out)
}

fn check_input(rv: &RegularView, r: &RegularDecomposition) -> Result<()> {
    if rv.d != 4 || r.d != 4 || r.colors.len() != rv.map.dart_count() {
        return Err(Error::InvalidDecomposition("drawing needs a 4-regular host and a matching decomposition".into()));
    }
    let m = &rv.map;
    for x in 0..m.dart_count() {
        let ok = if m.origin(x) == rv.root { r.colors[x] == 0 } else { r.colors[x].count_ones() == 1 };
        if !ok {
            return Err(Error::InvalidDecomposition(format!("dart {x} is not colored by exactly one tree")));
        }
    }
    Ok(())
}

/// Faces of `R_{i,i+2}(v)`: the side of the cycle `P_i(v) + P_{i+2}(v)`
/// holding the root edge `e_{i+1}*`.
pub fn region_faces(rv: &RegularView, r: &RegularDecomposition, v: Vertex, i: u32) -> Result<Vec<bool>> {
    let m = &rv.map;
    let j = add(i, 2, 4);
    let p = path_darts(rv, r, v, i)?;
    let q = path_darts(rv, r, v, j)?;
    let on_p: BTreeSet<Vertex> = p.iter().map(|&x| m.head(x)).collect();
    if q.iter().map(|&x| m.head(x)).any(|w| w != rv.root && on_p.contains(&w)) {
        return Err(Error::InvalidDecomposition(format!("paths of colors {i} and {j} from {v} meet before the root")));
    }
    let mut wall = vec![false; m.edge_count()];
    for &x in p.iter().chain(&q) {
        wall[m.edge_id(x)] = true;
    }
    let start = m.face(rv.root_edges[i as usize % 4]);
    let mut inside = vec![false; m.face_count()];
    inside[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(f) = queue.pop_front() {
        for x in m.face_darts(f) {
            let g = m.face(m.twin(x));
            if !wall[m.edge_id(x)] && !inside[g] {
                inside[g] = true;
                queue.push_back(g);
            }
        }
    }
    Ok(inside)
}

fn non_root_faces(rv: &RegularView) -> Vec<bool> {
    let mut out = vec![true; rv.map.face_count()];
    for x in rv.map.darts_around(rv.root) {
        out[rv.map.face(x)] = false;
        out[rv.map.corner_face(x)] = false;
    }
    out
}

/// `x(v)` counts non-root faces of `R_{1,3}(v)`, `y(v)` those of `R_{4,2}(v)`.
pub fn place_by_face_counting(rv: &RegularView, r: &RegularDecomposition) -> Result<Vec<Option<Point>>> {
    check_input(rv, r)?;
    let m = &rv.map;
    let counted = non_root_faces(rv);
    let count = |inside: Vec<bool>| inside.iter().zip(&counted).filter(|&(&a, &b)| a && b).count() as i64;
    let mut coords = vec![None; m.vertex_count()];
    for v in 0..m.vertex_count() {
        if v != rv.root {
            coords[v] = Some((count(region_faces(rv, r, v, 1)?), count(region_faces(rv, r, v, 4)?)));
        }
    }
    Ok(coords)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineItem {
    Vertex(Vertex),
    Face(Face),
}

/// The equatorial line `L_i` from `v_{i+1}*` to `v_{i+3}*`. At each vertex
/// it joins the two corners lying between an edge of color `i` and one of
/// color `i + 2`.
pub fn equatorial_line(rv: &RegularView, r: &RegularDecomposition, i: u32) -> Result<Vec<LineItem>> {
    check_input(rv, r)?;
    let m = &rv.map;
    let j = add(i, 2, 4);
    let tag = |x: Dart| {
        let c = r.colors[x] | r.colors[m.twin(x)];
        if c & bit(i) != 0 {
            Some(i)
        } else if c & bit(j) != 0 {
            Some(j)
        } else {
            None
        }
    };
    let counted = non_root_faces(rv);
    let mut at_vertex = vec![Vec::new(); m.vertex_count()];
    let mut at_face = vec![Vec::new(); m.face_count()];
    for v in 0..m.vertex_count() {
        if v == rv.root {
            continue;
        }
        for x in m.darts_around(v) {
            let f = m.corner_face(x);
            let (a, b) = (tag(x), tag(m.next_cw(x)));
            if counted[f] && a.is_some() && b.is_some() && a != b {
                at_vertex[v].push(f);
                at_face[f].push(v);
            }
        }
    }
    let bad = |what: String| Error::InvalidDecomposition(format!("equatorial line {i}: {what}"));
    if let Some(f) = (0..m.face_count()).find(|&f| counted[f] && at_face[f].len() != 2) {
        return Err(bad(format!("face {f} has {} bicolored corners", at_face[f].len())));
    }
    let start = m.head(rv.root_edges[i as usize % 4]);
    let end = m.head(rv.root_edges[(i as usize + 2) % 4]);
    let mut line = vec![LineItem::Vertex(start)];
    let mut seen_v = vec![false; m.vertex_count()];
    let mut seen_f = vec![false; m.face_count()];
    seen_v[start] = true;
    let mut cur = start;
    loop {
        let next: Vec<Face> = at_vertex[cur].iter().copied().filter(|&f| !seen_f[f]).collect();
        let Some(&f) = next.first() else { break };
        if next.len() > 1 {
            return Err(bad(format!("vertex {cur} continues into two faces")));
        }
        seen_f[f] = true;
        line.push(LineItem::Face(f));
        let w = if at_face[f][0] == cur { at_face[f][1] } else { at_face[f][0] };
        if seen_v[w] {
            return Err(bad(format!("vertex {w} is visited twice")));
        }
        seen_v[w] = true;
        line.push(LineItem::Vertex(w));
        cur = w;
    }
    let faces = counted.iter().filter(|&&c| c).count();
    if cur != end || line.len() != (m.vertex_count() - 1) + faces {
        return Err(bad(format!("stops at {cur} after {} items", line.len())));
    }
    Ok(line)
}

/// Coordinates as ranks along `L_1` (x) and `L_4` (y).
pub fn place_by_equatorial_lines(rv: &RegularView, r: &RegularDecomposition) -> Result<Vec<Option<Point>>> {
    let m = &rv.map;
    let mut coords: Vec<Option<Point>> = vec![None; m.vertex_count()];
    let mut ranks = [vec![0i64; m.vertex_count()], vec![0i64; m.vertex_count()]];
    for (k, i) in [1, 4].into_iter().enumerate() {
        let vertices = equatorial_line(rv, r, i)?.into_iter().filter_map(|it| match it {
            LineItem::Vertex(v) => Some(v),
            LineItem::Face(_) => None,
        });
        for (rank, v) in vertices.enumerate() {
            ranks[k][v] = rank as i64;
        }
    }
    for v in 0..m.vertex_count() {
        if v != rv.root {
            coords[v] = Some((ranks[0][v], ranks[1][v]));
        }
    }
    Ok(coords)
}

/// One bend per non-root edge, where the rays of its two arcs meet.
pub fn orthogonal_drawing(rv: &RegularView, r: &RegularDecomposition, coords: &[Option<Point>]) -> Result<GridDrawing> {
    check_input(rv, r)?;
    let m = &rv.map;
    let mut bends = vec![None; m.edge_count()];
    for (e, &x) in m.edge_darts().iter().enumerate() {
        if rv.is_root_dart(x) {
            continue;
        }
        let t = m.twin(x);
        let (u, v) = (m.origin(x), m.origin(t));
        let (pu, pv) = (coords[u].expect("placed"), coords[v].expect("placed"));
        let bend = bend_point(pu, color(r, x), pv, color(r, t))
            .ok_or_else(|| Error::InternalInvariantViolation(format!("rays of edge {e} do not meet")))?;
        bends[e] = Some(bend);
    }
    Ok(GridDrawing { host: rv.clone(), coords: coords.to_vec(), bends, root: None, reduction: None })
}

fn ray_reaches(from: Point, c: u32, to: Point) -> bool {
    match c {
        1 => to.0 == from.0 && to.1 < from.1,
        2 => to.1 == from.1 && to.0 < from.0,
        3 => to.0 == from.0 && to.1 > from.1,
        4 => to.1 == from.1 && to.0 > from.0,
        _ => false,
    }
}

fn bend_point(pu: Point, cu: u32, pv: Point, cv: u32) -> Option<Point> {
    let bend = if cu % 2 == 1 { (pu.0, pv.1) } else { (pv.0, pu.1) };
    (cu % 2 != cv % 2 && ray_reaches(pu, cu, bend) && ray_reaches(pv, cv, bend)).then_some(bend)
}

/// Full placement and orthogonal drawing, via equatorial lines.
pub fn draw(rv: &RegularView, r: &RegularDecomposition) -> Result<GridDrawing> {
    let coords = place_by_equatorial_lines(rv, r)?;
    orthogonal_drawing(rv, r, &coords)
}

/// Places the root at `(-1, -1)` below and left of the grid and routes its
/// edges around it: `e_1*` and `e_2*` with one bend, `e_3*` and `e_4*` with
/// three.
pub fn add_root(gd: &GridDrawing) -> Result<GridDrawing> {
    let rv = &gd.host;
    let m = &rv.map;
    let placed: Vec<Point> = (0..m.vertex_count()).filter(|&v| v != rv.root).map(|v| gd.point(v)).collect();
    let top = placed.iter().map(|p| p.1).max().unwrap_or(0) + 1;
    let right = placed.iter().map(|p| p.0).max().unwrap_or(0) + 1;
    let star = (-1, -1);
    let at = |k: usize| gd.point(rv.root_neighbor(k));
    let (p1, p2, p3, p4) = (at(0), at(1), at(2), at(3));
    let routes = vec![
        vec![p1, (p1.0, -1), star],
        vec![p2, (-1, p2.1), star],
        vec![p3, (p3.0, top), (-2, top), (-2, -1), star],
        vec![p4, (right, p4.1), (right, -2), (-1, -2), star],
    ];
    let mut out = gd.clone();
    out.coords[rv.root] = Some(star);
    out.root = Some(RootRouting { pos: star, routes });
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FaceClass {
    NonReducible,
    PartlyReducible,
    FullyReducible,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceInfo {
    pub face: Face,
    pub black: bool,
    pub class: FaceClass,
    /// Special edges `{a, a'}` and `{b, b'}`.
    pub a: (Vertex, Vertex),
    pub b: (Vertex, Vertex),
    pub x_minus: Vertex,
    pub x_plus: Vertex,
    pub y_minus: Vertex,
    pub y_plus: Vertex,
    pub x: i64,
    pub y: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceClassification {
    pub faces: Vec<FaceInfo>,
}

impl FaceClassification {
    pub fn count(&self, class: FaceClass) -> usize {
        self.faces.iter().filter(|f| f.class == class).count()
    }
}

/// Finds the special edges and markers of every non-root face from the arc
/// colors along its boundary, and classifies it.
pub fn classify_faces(gd: &GridDrawing, r: &RegularDecomposition) -> Result<FaceClassification> {
    let rv = &gd.host;
    check_input(rv, r)?;
    let m = &rv.map;
    let black = black_faces(rv)?;
    let counted = non_root_faces(rv);
    let mut faces = Vec::new();
    for f in 0..m.face_count() {
        if !counted[f] {
            continue;
        }
        // Arcs with f on their right, in clockwise order around f.
        let start = m.twin(m.face_dart(f));
        let mut arcs = vec![start];
        let mut x = m.prev_cw(m.twin(start));
        while x != start {
            arcs.push(x);
            x = m.prev_cw(m.twin(x));
        }
        let pairs: Vec<(u32, u32)> = arcs.iter().map(|&x| (color(r, x), color(r, m.twin(x)))).collect();
        let (sa, seq1, sb, seq2) = if black[f] { ((4, 3), (2, 3), (2, 1), (4, 1)) } else { ((3, 2), (1, 2), (1, 4), (3, 4)) };
        let bad = || Error::InternalInvariantViolation(format!("face {f} does not show the expected bend pattern"));
        let ia = pairs.iter().position(|&p| p == sa).ok_or_else(bad)?;
        // Rotate so the a-edge comes first, then check the cyclic pattern.
        let k = pairs.len();
        let rot: Vec<(u32, u32)> = (0..k).map(|s| pairs[(ia + s) % k]).collect();
        let ib = rot.iter().position(|&p| p == sb).ok_or_else(bad)?;
        let ok = rot[1..ib].iter().all(|&p| p == seq1) && rot[ib + 1..].iter().all(|&p| p == seq2);
        if !ok {
            return Err(bad());
        }
        let xa = arcs[ia];
        let xb = arcs[(ia + ib) % k];
        let a = (m.origin(xa), m.head(xa));
        let b = (m.origin(xb), m.head(xb));
        let (x_minus, x_plus, y_minus, y_plus) = if black[f] { (a.0, b.0, a.1, b.1) } else { (b.1, a.1, a.0, b.0) };
        let distinct: BTreeSet<Vertex> = [x_minus, x_plus, y_minus, y_plus].into_iter().collect();
        let class = if distinct.len() < 4 {
            FaceClass::NonReducible
        } else if k == 4 {
            FaceClass::PartlyReducible
        } else {
            FaceClass::FullyReducible
        };
        let (x, y) = (gd.point(x_minus).0, gd.point(y_minus).1);
        if gd.reduction.is_none() && (gd.point(x_plus).0 != x + 1 || gd.point(y_plus).1 != y + 1) {
            return Err(Error::InternalInvariantViolation(format!("markers of face {f} are not on consecutive lines")));
        }
        faces.push(FaceInfo { face: f, black: black[f], class, a, b, x_minus, x_plus, y_minus, y_plus, x, y });
    }
    Ok(FaceClassification { faces })
}

/// Fully reducible faces in both sets; partly reducible ones sorted by
/// `x(f)` alternate, even positions to X and odd ones to Y.
pub fn balanced_reduction_choice(fc: &FaceClassification) -> ReductionChoice {
    let mut partly: Vec<&FaceInfo> = fc.faces.iter().filter(|f| f.class == FaceClass::PartlyReducible).collect();
    partly.sort_by_key(|f| f.x);
    let mut x = BTreeSet::new();
    let mut y = BTreeSet::new();
    for f in fc.faces.iter().filter(|f| f.class == FaceClass::FullyReducible) {
        x.insert(f.x);
        y.insert(f.y);
    }
    for (k, f) in partly.iter().enumerate() {
        if k % 2 == 0 {
            x.insert(f.x);
        } else {
            y.insert(f.y);
        }
    }
    ReductionChoice { x: x.into_iter().collect(), y: y.into_iter().collect(), balanced: true }
}

/// A reduction choice splitting the partly reducible faces at random.
pub fn random_reduction_choice(fc: &FaceClassification, rng: &mut impl Rng) -> ReductionChoice {
    let mut x = BTreeSet::new();
    let mut y = BTreeSet::new();
    let mut in_x = 0i64;
    let mut partly = 0i64;
    for f in &fc.faces {
        match f.class {
            FaceClass::FullyReducible => {
                x.insert(f.x);
                y.insert(f.y);
            }
            FaceClass::PartlyReducible => {
                partly += 1;
                if rng.gen_bool(0.5) {
                    in_x += 1;
                    x.insert(f.x);
                } else {
                    y.insert(f.y);
                }
            }
            FaceClass::NonReducible => {}
        }
    }
    let balanced = (2 * in_x - partly).abs() <= 1;
    ReductionChoice { x: x.into_iter().collect(), y: y.into_iter().collect(), balanced }
}

/// Deletes the columns in X and rows in Y: a coordinate `c` becomes
/// `c - |{0..c-1} & X|`. Bends move with the vertex coordinates they share.
pub fn apply_reduction(gd: &GridDrawing, rc: &ReductionChoice) -> Result<GridDrawing> {
    if gd.reduction.is_some() {
        return Err(Error::Format("drawing is already reduced".into()));
    }
    let shift = |set: &[i64], c: i64| c - set.iter().filter(|&&s| s < c).count() as i64;
    let map = |p: Point| (shift(&rc.x, p.0), shift(&rc.y, p.1));
    let rv = &gd.host;
    let mut out = gd.clone();
    for v in 0..out.coords.len() {
        if v != rv.root {
            out.coords[v] = gd.coords[v].map(map);
        }
    }
    out.bends = gd.bends.iter().map(|b| b.map(map)).collect();
    out.reduction = Some(rc.clone());
    if gd.root.is_some() {
        out.coords[rv.root] = None;
        out.root = None;
        let mut rooted = add_root(&out)?;
        rooted.reduction = Some(rc.clone());
        return Ok(rooted);
    }
    Ok(out)
}

/// Straight-line drawing of the graph with each face of degree 2 emptied,
/// root removed: one segment per adjacent pair of non-root vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StraightLineDrawing {
    pub coords: Vec<Option<Point>>,
    pub segments: Vec<(Vertex, Vertex)>,
}

pub fn straight_line_drawing(gd: &GridDrawing) -> StraightLineDrawing {
    let rv = &gd.host;
    let m = &rv.map;
    let mut pairs = BTreeSet::new();
    for &x in m.edge_darts() {
        if !rv.is_root_dart(x) {
            let (u, v) = (m.origin(x), m.head(x));
            pairs.insert((u.min(v), u.max(v)));
        }
    }
    let mut coords = gd.coords.clone();
    coords[rv.root] = None;
    StraightLineDrawing { coords, segments: pairs.into_iter().collect() }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Element {
    Vertex(Vertex),
    Edge(usize),
    RootEdge(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PlanarityReport {
    pub crossings: Vec<(Element, Element)>,
}

impl PlanarityReport {
    pub fn is_planar(&self) -> bool {
        self.crossings.is_empty()
    }
}

struct Piece {
    owner: Element,
    ends: [Vertex; 2],
    a: Point,
    b: Point,
}

fn sub(p: Point, q: Point) -> (i128, i128) {
    ((p.0 - q.0) as i128, (p.1 - q.1) as i128)
}

fn cross(a: (i128, i128), b: (i128, i128)) -> i128 {
    a.0 * b.1 - a.1 * b.0
}

enum Meet {
    None,
    /// `(x, y)` scaled by a positive denominator.
    Point(i128, i128, i128),
    Overlap,
}

fn meet(p1: Point, p2: Point, q1: Point, q2: Point) -> Meet {
    let r = sub(p2, p1);
    let s = sub(q2, q1);
    let w = sub(q1, p1);
    let den = cross(r, s);
    if den != 0 {
        let (mut t, mut u, mut d) = (cross(w, s), cross(w, r), den);
        if d < 0 {
            t = -t;
            u = -u;
            d = -d;
        }
        if t < 0 || t > d || u < 0 || u > d {
            return Meet::None;
        }
        return Meet::Point(p1.0 as i128 * d + r.0 * t, p1.1 as i128 * d + r.1 * t, d);
    }
    // Parallel: only collinear pieces can meet.
    let dir = if r != (0, 0) { r } else { s };
    if dir == (0, 0) {
        return if p1 == q1 { Meet::Point(p1.0 as i128, p1.1 as i128, 1) } else { Meet::None };
    }
    if cross(dir, w) != 0 || cross(dir, sub(q2, p1)) != 0 && cross(dir, sub(p2, q1)) != 0 {
        return Meet::None;
    }
    let key = |p: Point| (p.0 as i128 - p1.0 as i128) * dir.0 + (p.1 as i128 - p1.1 as i128) * dir.1;
    let (a0, a1) = (key(p1).min(key(p2)), key(p1).max(key(p2)));
    let (b0, b1) = (key(q1).min(key(q2)), key(q1).max(key(q2)));
    let (lo, hi) = (a0.max(b0), a1.min(b1));
    if lo > hi {
        Meet::None
    } else if lo == hi {
        let p = [p1, p2, q1, q2].into_iter().find(|&p| key(p) == lo).expect("endpoint at the meeting point");
        Meet::Point(p.0 as i128, p.1 as i128, 1)
    } else {
        Meet::Overlap
    }
}

fn check_pieces(pieces: &[Piece], coords: &[Option<Point>]) -> PlanarityReport {
    let mut crossings = BTreeSet::new();
    for (i, p) in pieces.iter().enumerate() {
        for q in &pieces[i + 1..] {
            if p.owner == q.owner {
                continue;
            }
            let allowed = |x: i128, y: i128, d: i128| {
                p.ends.iter().any(|&w| {
                    q.ends.contains(&w) && coords[w].is_some_and(|c| c.0 as i128 * d == x && c.1 as i128 * d == y)
                })
            };
            let bad = match meet(p.a, p.b, q.a, q.b) {
                Meet::None => false,
                Meet::Point(x, y, d) => !allowed(x, y, d),
                Meet::Overlap => true,
            };
            if bad {
                crossings.insert((p.owner.min(q.owner), p.owner.max(q.owner)));
            }
        }
    }
    PlanarityReport { crossings: crossings.into_iter().collect() }
}

fn vertex_pieces(coords: &[Option<Point>]) -> Vec<Piece> {
    coords
        .iter()
        .enumerate()
        .filter_map(|(v, c)| c.map(|p| Piece { owner: Element::Vertex(v), ends: [v, v], a: p, b: p }))
        .collect()
}

/// Exact test that no two edge pieces meet except at a common end vertex
/// and no edge passes through another vertex.
pub fn check_planarity(gd: &GridDrawing) -> PlanarityReport {
    let rv = &gd.host;
    let m = &rv.map;
    let mut pieces = vertex_pieces(&gd.coords);
    for (e, &x) in m.edge_darts().iter().enumerate() {
        let Some(bend) = gd.bends[e] else { continue };
        let (u, v) = (m.origin(x), m.head(x));
        for p in [gd.point(u), gd.point(v)] {
            pieces.push(Piece { owner: Element::Edge(e), ends: [u, v], a: p, b: bend });
        }
    }
    if let Some(root) = &gd.root {
        for (k, route) in root.routes.iter().enumerate() {
            let ends = [rv.root_neighbor(k), rv.root];
            for w in route.windows(2) {
                pieces.push(Piece { owner: Element::RootEdge(k), ends, a: w[0], b: w[1] });
            }
        }
    }
    check_pieces(&pieces, &gd.coords)
}

pub fn check_straight_planarity(sl: &StraightLineDrawing) -> PlanarityReport {
    let mut pieces = vertex_pieces(&sl.coords);
    for (k, &(u, v)) in sl.segments.iter().enumerate() {
        let (a, b) = (sl.coords[u].expect("placed"), sl.coords[v].expect("placed"));
        pieces.push(Piece { owner: Element::Edge(k), ends: [u, v], a, b });
    }
    check_pieces(&pieces, &sl.coords)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SvgStyle {
    pub grid: bool,
    pub straight: bool,
}

const SCALE: i64 = 40;
const MARGIN: i64 = 30;
const TREE2: &str = "#1f77b4";
const TREE4: &str = "#d62728";
const ROOT_EDGE: &str = "#7f7f7f";

/// SVG picture of the drawing; edges are stroked by their even tree, read
/// off the direction of their horizontal arc.
pub fn emit_svg(gd: &GridDrawing, style: SvgStyle) -> String {
    let rv = &gd.host;
    let m = &rv.map;
    let mut pts: Vec<Point> = gd.coords.iter().flatten().copied().collect();
    pts.extend(gd.bends.iter().flatten().copied());
    if let Some(root) = &gd.root {
        pts.extend(root.routes.iter().flatten().copied());
    }
    let (x0, x1) = (pts.iter().map(|p| p.0).min().unwrap_or(0), pts.iter().map(|p| p.0).max().unwrap_or(0));
    let (y0, y1) = (pts.iter().map(|p| p.1).min().unwrap_or(0), pts.iter().map(|p| p.1).max().unwrap_or(0));
    let sx = |x: i64| MARGIN + (x - x0) * SCALE;
    let sy = |y: i64| MARGIN + (y1 - y) * SCALE;
    let (w, h) = (2 * MARGIN + (x1 - x0) * SCALE, 2 * MARGIN + (y1 - y0) * SCALE);
    let mut s = String::new();
    let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#);
    if style.grid {
        let _ = writeln!(s, r##"<g stroke="#dddddd" stroke-width="1">"##);
        for x in x0..=x1 {
            let _ = writeln!(s, r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, sx(x), sy(y0), sx(x), sy(y1));
        }
        for y in y0..=y1 {
            let _ = writeln!(s, r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, sx(x0), sy(y), sx(x1), sy(y));
        }
        let _ = writeln!(s, "</g>");
    }
    let _ = writeln!(s, r#"<g fill="none" stroke-width="2">"#);
    let poly = |points: &[Point]| {
        points
            .iter()
            .enumerate()
            .map(|(k, p)| format!("{}{} {}", if k == 0 { "M" } else { " L" }, sx(p.0), sy(p.1)))
            .collect::<String>()
    };
    if style.straight {
        for (k, &(u, v)) in straight_line_drawing(gd).segments.iter().enumerate() {
            let _ = writeln!(s, r##"<path id="s{k}" stroke="#333333" d="{}"/>"##, poly(&[gd.point(u), gd.point(v)]));
        }
    } else {
        for (e, &x) in m.edge_darts().iter().enumerate() {
            let Some(bend) = gd.bends[e] else { continue };
            let (pu, pv) = (gd.point(m.origin(x)), gd.point(m.head(x)));
            // The horizontal arc leaves the endpoint sharing the bend's row.
            let from = if pu.1 == bend.1 { pu } else { pv };
            let stroke = if bend.0 < from.0 { TREE2 } else { TREE4 };
            let _ = writeln!(s, r#"<path id="e{e}" stroke="{stroke}" d="{}"/>"#, poly(&[pu, bend, pv]));
        }
    }
    if let Some(root) = &gd.root {
        for (k, route) in root.routes.iter().enumerate() {
            let _ = writeln!(s, r#"<path id="r{}" stroke="{ROOT_EDGE}" stroke-dasharray="6 4" d="{}"/>"#, k + 1, poly(route));
        }
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, r#"<g fill="black">"#);
    for (v, c) in gd.coords.iter().enumerate() {
        if let Some(p) = c {
            let _ = writeln!(s, r#"<circle id="v{v}" cx="{}" cy="{}" r="5"/>"#, sx(p.0), sy(p.1));
        }
    }
    let _ = writeln!(s, "</g>\n</svg>");
    s
}
