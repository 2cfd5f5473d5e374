//! Even structures for d = 2p: parity tests, the reductions `lambda` and
//! `lambda_star` keeping only even colors, and the pipeline producing an
//! even regular decomposition of a 4-regular graph.
//!
//! Vertices of the angulation are colored black and white with `u_1` black;
//! faces of the dual inherit the color of the primal vertex they contain.

use serde::{Deserialize, Serialize};

use crate::duality::{chi, validate_regular_decomposition, DualPair, RegularDecomposition};
use crate::error::{Error, Result};
use crate::orientation::compute_p_p1_orientation;
use crate::planar_map::{AngulationView, Dart, PlaneMap, RegularView, Vertex};
use crate::schnyder::{
    add, bit, colors_of, phi, psi_inverse, summarize, validate_schnyder, ColorSet, CornerLabelling, Host,
    SchnyderDecomposition, Violation,
};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReducedSchnyderDecomposition {
    pub p: usize,
    /// Bit `i - 1` marks membership in `F_i'`.
    pub colors: Vec<ColorSet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReducedRegularDecomposition {
    pub p: usize,
    pub colors: Vec<ColorSet>,
}

#[derive(Serialize, Deserialize)]
struct ReducedFile {
    host: Host,
    reduced: bool,
    d: usize,
    dart_colors: Vec<Vec<u32>>,
}

fn reduced_to_json(host: Host, p: usize, colors: &[ColorSet]) -> String {
    let file = ReducedFile { host, reduced: true, d: 2 * p, dart_colors: colors.iter().map(|&s| colors_of(s)).collect() };
    serde_json::to_string(&file).expect("decomposition serializes")
}

fn reduced_from_json(text: &str, host: Host) -> Result<(usize, Vec<ColorSet>)> {
    let file: ReducedFile = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    if file.host != host || !file.reduced || file.d % 2 != 0 || file.d > 128 {
        return Err(Error::Format("not a reduced decomposition for this host".into()));
    }
    let p = file.d / 2;
    if file.dart_colors.iter().flatten().any(|&c| c == 0 || c as usize > p) {
        return Err(Error::Format("color out of range".into()));
    }
    Ok((p, file.dart_colors.iter().map(|cs| cs.iter().fold(0, |s, &c| s | bit(c))).collect()))
}

impl ReducedSchnyderDecomposition {
    pub fn to_json(&self) -> String {
        reduced_to_json(Host::Primal, self.p, &self.colors)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let (p, colors) = reduced_from_json(text, Host::Primal)?;
        Ok(ReducedSchnyderDecomposition { p, colors })
    }
}

impl ReducedRegularDecomposition {
    pub fn to_json(&self) -> String {
        reduced_to_json(Host::Dual, self.p, &self.colors)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let (p, colors) = reduced_from_json(text, Host::Dual)?;
        Ok(ReducedRegularDecomposition { p, colors })
    }
}

/// Black/white vertex coloring of the angulation with `u_1` black.
pub fn black_vertices(ang: &AngulationView) -> Result<Vec<bool>> {
    if ang.d % 2 != 0 {
        return Err(Error::OddD(ang.d));
    }
    ang.map
        .bipartition(ang.external[0])
        .ok_or_else(|| Error::NotEven("angulation is not bipartite".into()))
}

/// Black/white face coloring of `G*` with the root face `f_1*` black.
pub fn black_faces(rv: &RegularView) -> Result<Vec<bool>> {
    if rv.d % 2 != 0 {
        return Err(Error::OddD(rv.d));
    }
    rv.map
        .dual()
        .bipartition(rv.root_faces[0])
        .ok_or_else(|| Error::NotEven("faces are not 2-colorable".into()))
}

/// Corners at black vertices have odd colors, at white vertices even.
pub fn is_even_labelling(ang: &AngulationView, l: &CornerLabelling) -> Result<bool> {
    let black = black_vertices(ang)?;
    Ok((0..ang.map.dart_count()).all(|x| (l.corner_colors[x] % 2 == 1) == black[ang.map.origin(x)]))
}

/// The two missing colors of every internal edge differ in parity.
pub fn is_even_schnyder(ang: &AngulationView, s: &SchnyderDecomposition) -> Result<bool> {
    if ang.d % 2 != 0 {
        return Err(Error::OddD(ang.d));
    }
    let all: ColorSet = (1 << ang.d) - 1;
    Ok(ang.internal_edges().iter().all(|&x| {
        let missing = colors_of(all & !(s.colors[x] | s.colors[ang.map.twin(x)]));
        missing.len() == 2 && missing[0] % 2 != missing[1] % 2
    }))
}

/// The two colors of every non-root edge differ in parity.
pub fn is_even_regular(rv: &RegularView, r: &RegularDecomposition) -> Result<bool> {
    if rv.d % 2 != 0 {
        return Err(Error::OddD(rv.d));
    }
    let m = &rv.map;
    Ok(m.edge_darts().iter().filter(|&&x| !rv.is_root_dart(x)).all(|&x| {
        let (a, b) = (r.colors[x], r.colors[m.twin(x)]);
        a.count_ones() == 1 && b.count_ones() == 1 && (a.trailing_zeros() % 2) != (b.trailing_zeros() % 2)
    }))
}

/// Outgoing darts at `v` carrying color `i`.
fn outs(m: &PlaneMap, colors: &[ColorSet], v: Vertex, i: u32) -> Vec<Dart> {
    m.darts_around(v).into_iter().filter(|&x| colors[x] & bit(i) != 0).collect()
}

/// Parent edges `e_1..e_p` around `v` occur clockwise (consecutive colors
/// may share a dart). Returns the clockwise position of each `e_i`.
fn parent_positions(m: &PlaneMap, colors: &[ColorSet], v: Vertex, p: usize) -> std::result::Result<Vec<usize>, String> {
    let darts = m.darts_around(v);
    let mut pos = vec![0; p + 1];
    for i in 1..=p as u32 {
        let o: Vec<usize> = (0..darts.len()).filter(|&j| colors[darts[j]] & bit(i) != 0).collect();
        if o.len() != 1 {
            return Err(format!("vertex {v} has {} outgoing color {i} arcs", o.len()));
        }
        pos[i as usize] = o[0];
    }
    // Start at a color whose predecessor sits on another dart; walking
    // clockwise from there, positions never decrease within one turn.
    let deg = darts.len();
    let start = (1..=p).find(|&i| pos[i] != pos[add(i as u32, -1, p) as usize]).unwrap_or(1);
    let mut last = 0;
    for k in 1..p {
        let i = add(start as u32, k as i64, p) as usize;
        let off = (pos[i] + deg - pos[start]) % deg;
        if off < last {
            return Err(format!("parent edges around {v} are not in clockwise order"));
        }
        last = off;
    }
    Ok(pos)
}

/// Strictly clockwise-between test on positions around a vertex of degree
/// `deg`; equal endpoints cover the whole turn.
fn strictly_between(from: usize, to: usize, at: usize, deg: usize) -> bool {
    let span = if from == to { deg } else { (to + deg - from) % deg };
    let off = (at + deg - from) % deg;
    off > 0 && off < span
}

/// Checks the axioms of reduced Schnyder decompositions.
pub fn validate_reduced_schnyder(ang: &AngulationView, rs: &ReducedSchnyderDecomposition) -> Vec<Violation> {
    let (m, d) = (&ang.map, ang.d);
    let p = d / 2;
    if d % 2 != 0 || rs.p != p || rs.colors.len() != m.dart_count() {
        return vec![Violation { axiom: "size", detail: format!("reduced decomposition for p = {} on a {d}-angulation", rs.p) }];
    }
    let black = match black_vertices(ang) {
        Ok(b) => b,
        Err(e) => return vec![Violation { axiom: "size", detail: e.to_string() }],
    };
    let mut out = Vec::new();
    let all: ColorSet = (1 << p) - 1;
    for x in 0..m.dart_count() {
        if rs.colors[x] & !all != 0 || (!ang.is_internal_dart(x) && rs.colors[x] != 0) {
            out.push(Violation { axiom: "i'", detail: format!("dart {x} carries a color it cannot have") });
        }
    }
    for &x in &ang.internal_edges() {
        let (a, b) = (rs.colors[x], rs.colors[m.twin(x)]);
        if a & b != 0 || (a | b).count_ones() as usize != p - 1 {
            out.push(Violation { axiom: "i'", detail: format!("edge of dart {x} is in {} forests", (a | b).count_ones()) });
        }
    }
    let ext = m.external_vertices();
    for i in 1..=p as u32 {
        for v in 0..m.vertex_count() {
            let n = outs(m, &rs.colors, v, i).len();
            if (ext[v] && n != 0) || (!ext[v] && n != 1) {
                out.push(Violation { axiom: "ii'", detail: format!("vertex {v} has {n} outgoing color {i} arcs") });
            }
        }
        for excluded in [2 * i as usize, 2 * i as usize % d + 1] {
            let u = ang.external[excluded - 1];
            if m.darts_around(u).into_iter().any(|x| rs.colors[m.twin(x)] & bit(i) != 0) {
                out.push(Violation { axiom: "ii'", detail: format!("u_{excluded} is incident to forest {i}") });
            }
        }
        if !out.is_empty() {
            continue;
        }
        for v in ang.internal_vertices() {
            let mut at = v;
            let mut steps = 0;
            while !ext[at] && steps <= m.vertex_count() {
                at = m.head(outs(m, &rs.colors, at, i)[0]);
                steps += 1;
            }
            if !ext[at] {
                out.push(Violation { axiom: "ii'", detail: format!("forest {i} has a cycle reached from {v}") });
                break;
            }
        }
    }
    if !out.is_empty() {
        return out;
    }
    for v in ang.internal_vertices() {
        let pos = match parent_positions(m, &rs.colors, v, p) {
            Ok(pos) => pos,
            Err(detail) => {
                out.push(Violation { axiom: "iii'", detail });
                continue;
            }
        };
        let darts = m.darts_around(v);
        for (j, &x) in darts.iter().enumerate() {
            for i in colors_of(rs.colors[m.twin(x)]) {
                let next = add(i, 1, p) as usize;
                let prev = add(i, -1, p) as usize;
                let (from, to) = if black[v] { (pos[next], pos[i as usize]) } else { (pos[i as usize], pos[prev]) };
                if !strictly_between(from, to, j, darts.len()) {
                    out.push(Violation { axiom: "iii'", detail: format!("incoming color {i} at vertex {v} is misplaced") });
                }
            }
        }
    }
    out
}

/// Keeps the even forests: `F_i' = F_{2i}`.
pub fn lambda(ang: &AngulationView, s: &SchnyderDecomposition) -> Result<ReducedSchnyderDecomposition> {
    if ang.d % 2 != 0 {
        return Err(Error::NotEven(format!("d = {} is odd", ang.d)));
    }
    let violations = validate_schnyder(ang, s);
    if !violations.is_empty() {
        return Err(Error::InvalidDecomposition(summarize(&violations)));
    }
    if !is_even_schnyder(ang, s)? {
        return Err(Error::NotEven("an internal edge misses two colors of equal parity".into()));
    }
    Ok(ReducedSchnyderDecomposition { p: ang.d / 2, colors: s.colors.iter().map(|&c| even_part(c)).collect() })
}

/// Colors `2, 4, ..., 2p` of a set, renumbered `1..p`.
fn even_part(c: ColorSet) -> ColorSet {
    colors_of(c).into_iter().filter(|c| c % 2 == 0).fold(0, |s, c| s | bit(c / 2))
}

/// Restores odd forests: at a black vertex color `2i - 1`, at a white one
/// color `2i + 1`, joins the color-`2i` parent arc.
pub fn lambda_inverse(ang: &AngulationView, rs: &ReducedSchnyderDecomposition) -> Result<SchnyderDecomposition> {
    let violations = validate_reduced_schnyder(ang, rs);
    if !violations.is_empty() {
        return Err(Error::InvalidDecomposition(summarize(&violations)));
    }
    let (m, d) = (&ang.map, ang.d);
    let black = black_vertices(ang)?;
    let mut colors: Vec<ColorSet> =
        rs.colors.iter().map(|&c| colors_of(c).into_iter().fold(0, |s, i| s | bit(2 * i))).collect();
    for v in ang.internal_vertices() {
        for i in 1..=rs.p as u32 {
            let x = outs(m, &rs.colors, v, i)[0];
            let odd = if black[v] { 2 * i - 1 } else { add(2 * i, 1, d) };
            colors[x] |= bit(odd);
        }
    }
    let s = SchnyderDecomposition { d, colors };
    let violations = validate_schnyder(ang, &s);
    if !violations.is_empty() {
        return Err(Error::InvalidDecomposition(summarize(&violations)));
    }
    Ok(s)
}

/// Checks the axioms of reduced regular decompositions.
pub fn validate_reduced_regular(rv: &RegularView, rr: &ReducedRegularDecomposition) -> Vec<Violation> {
    let (m, d) = (&rv.map, rv.d);
    let p = d / 2;
    if d % 2 != 0 || rr.p != p || rr.colors.len() != m.dart_count() {
        return vec![Violation { axiom: "size", detail: format!("reduced decomposition for p = {} on a {d}-regular map", rr.p) }];
    }
    let black = match black_faces(rv) {
        Ok(b) => b,
        Err(e) => return vec![Violation { axiom: "size", detail: e.to_string() }],
    };
    let mut out = Vec::new();
    let all: ColorSet = (1 << p) - 1;
    for x in 0..m.dart_count() {
        let c = rr.colors[x];
        if c & !all != 0 || c.count_ones() > 1 || (m.origin(x) == rv.root && c != 0) {
            out.push(Violation { axiom: "tree", detail: format!("dart {x} carries colors it cannot have") });
        }
        // The face on the right of x is corner_face(x).
        if c != 0 && !black[m.corner_face(x)] {
            out.push(Violation { axiom: "i'", detail: format!("arc {x} has a white face on its right") });
        }
    }
    for &x in m.edge_darts() {
        if !rv.is_root_dart(x) && (rr.colors[x] != 0) == (rr.colors[m.twin(x)] != 0) {
            out.push(Violation { axiom: "partition", detail: format!("edge of dart {x} is not in exactly one tree") });
        }
    }
    for (k, &e) in rv.root_edges.iter().enumerate() {
        let want = if k % 2 == 1 { bit(k as u32 / 2 + 1) } else { 0 };
        if rr.colors[m.twin(e)] != want {
            out.push(Violation { axiom: "ii'", detail: format!("root edge e_{} is miscolored", k + 1) });
        }
    }
    if !out.is_empty() {
        return out;
    }
    for v in 0..m.vertex_count() {
        if v == rv.root {
            continue;
        }
        if let Err(detail) = parent_positions(m, &rr.colors, v, p) {
            out.push(Violation { axiom: "iii'", detail });
        }
    }
    if !out.is_empty() {
        return out;
    }
    for i in 1..=p as u32 {
        for v in 0..m.vertex_count() {
            let mut at = v;
            let mut steps = 0;
            while at != rv.root && steps <= m.vertex_count() {
                at = m.head(outs(m, &rr.colors, at, i)[0]);
                steps += 1;
            }
            if at != rv.root {
                out.push(Violation { axiom: "tree", detail: format!("tree {i} has a cycle reached from {v}") });
                break;
            }
        }
    }
    out
}

/// Keeps the even trees: `T_i'* = T_{2i}*`.
pub fn lambda_star(rv: &RegularView, r: &RegularDecomposition) -> Result<ReducedRegularDecomposition> {
    if rv.d % 2 != 0 {
        return Err(Error::NotEven(format!("d = {} is odd", rv.d)));
    }
    let violations = validate_regular_decomposition(rv, r);
    if !violations.is_empty() {
        return Err(Error::InvalidDecomposition(summarize(&violations)));
    }
    if !is_even_regular(rv, r)? {
        return Err(Error::NotEven("a non-root edge has two colors of equal parity".into()));
    }
    Ok(ReducedRegularDecomposition { p: rv.d / 2, colors: r.colors.iter().map(|&c| even_part(c)).collect() })
}

/// Restores odd trees: around each non-root vertex, color `2i - 1` goes to
/// the arc clockwise before the outgoing color-`2i` arc.
pub fn lambda_star_inverse(rv: &RegularView, rr: &ReducedRegularDecomposition) -> Result<RegularDecomposition> {
    let violations = validate_reduced_regular(rv, rr);
    if !violations.is_empty() {
        return Err(Error::InvalidDecomposition(summarize(&violations)));
    }
    let m = &rv.map;
    let mut colors: Vec<ColorSet> =
        rr.colors.iter().map(|&c| colors_of(c).into_iter().fold(0, |s, i| s | bit(2 * i))).collect();
    for v in 0..m.vertex_count() {
        if v == rv.root {
            continue;
        }
        for i in 1..=rr.p as u32 {
            let x = outs(m, &rr.colors, v, i)[0];
            colors[m.prev_cw(x)] |= bit(2 * i - 1);
        }
    }
    let r = RegularDecomposition { d: rv.d, colors };
    let violations = validate_regular_decomposition(rv, &r);
    if !violations.is_empty() {
        return Err(Error::InvalidDecomposition(summarize(&violations)));
    }
    Ok(r)
}

/// Even regular decomposition of a rooted 2p-regular map of mincut 2p: a
/// p/(p-1)-orientation of the dual angulation, doubled, sent through
/// `psi_inverse`, `phi` and `chi`.
pub fn compute_even_regular_decomposition(rv: &RegularView) -> Result<(DualPair, RegularDecomposition)> {
    if rv.d % 2 != 0 {
        return Err(Error::OddD(rv.d));
    }
    if !rv.map.mincut_at_least(rv.d) {
        return Err(Error::MincutTooSmall(rv.d));
    }
    let pair = DualPair::from_regular(rv)?;
    let o = compute_p_p1_orientation(&pair.primal)?.doubled();
    let l = psi_inverse(&pair.primal, &o)?;
    let s = phi(&pair.primal, &l)?;
    let r = chi(&pair, &s)?;
    if !is_even_regular(rv, &r)? {
        return Err(Error::InternalInvariantViolation("pipeline output is not even".into()));
    }
    Ok((pair, r))
}
