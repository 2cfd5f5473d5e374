//! Clockwise labellings and Schnyder decompositions of d-angulations.
//!
//! Colors live in `1..=d` and are compared modulo d. A labelling stores one
//! color per corner (corner `x` is the one clockwise after dart `x`). A
//! decomposition stores a color set per dart as a bit mask, bit `i - 1`
//! standing for color `i`.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orientation::{Cycle, FracOrientation};
use crate::planar_map::{AngulationView, Dart, PlaneMap, Vertex};

pub type ColorSet = u64;

/// `a + b` in `1..=d`, modulo d.
pub fn add(a: u32, b: i64, d: usize) -> u32 {
    ((a as i64 - 1 + b).rem_euclid(d as i64) + 1) as u32
}

/// `(b - a) mod d` in `0..d`.
pub fn jump(a: u32, b: u32, d: usize) -> u32 {
    ((b as i64 - a as i64).rem_euclid(d as i64)) as u32
}

/// The cyclic interval `{from, from + 1, ..., to - 1}` (empty when equal).
pub fn interval(from: u32, to: u32, d: usize) -> ColorSet {
    let mut set = 0;
    let mut c = from;
    while c != to {
        set |= bit(c);
        c = add(c, 1, d);
    }
    set
}

pub fn bit(c: u32) -> ColorSet {
    1 << (c - 1)
}

pub fn colors_of(set: ColorSet) -> Vec<u32> {
    (1..=64).filter(|&c| set & bit(c) != 0).collect()
}

/// One failed axiom, with where it failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub axiom: &'static str,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) {}", self.axiom, self.detail)
    }
}

pub fn summarize(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CornerLabelling {
    pub corner_colors: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SchnyderDecomposition {
    pub d: usize,
    pub colors: Vec<ColorSet>,
}

/// Which side of the duality a labelling or decomposition file lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Host {
    #[default]
    Primal,
    Dual,
}

#[derive(Serialize, Deserialize)]
struct DecompositionFile {
    #[serde(default)]
    host: Host,
    d: usize,
    dart_colors: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct LabellingFile {
    #[serde(default)]
    host: Host,
    corner_colors: Vec<u32>,
}

fn check_host(found: Host, want: Host) -> Result<()> {
    if found != want {
        return Err(Error::Format(format!("file is for the {found:?} host, expected {want:?}")));
    }
    Ok(())
}

pub(crate) fn colors_to_json(host: Host, d: usize, colors: &[ColorSet]) -> String {
    let file = DecompositionFile { host, d, dart_colors: colors.iter().map(|&s| colors_of(s)).collect() };
    serde_json::to_string(&file).expect("decomposition serializes")
}

pub(crate) fn colors_from_json(text: &str, host: Host) -> Result<(usize, Vec<ColorSet>)> {
    let file: DecompositionFile = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    check_host(file.host, host)?;
    if file.d > 64 || file.dart_colors.iter().flatten().any(|&c| c == 0 || c as usize > file.d) {
        return Err(Error::Format("color out of range".into()));
    }
    let colors = file.dart_colors.iter().map(|cs| cs.iter().fold(0, |s, &c| s | bit(c))).collect();
    Ok((file.d, colors))
}

pub(crate) fn labels_to_json(host: Host, corner_colors: &[u32]) -> String {
    serde_json::to_string(&LabellingFile { host, corner_colors: corner_colors.to_vec() }).expect("labelling serializes")
}

pub(crate) fn labels_from_json(text: &str, host: Host) -> Result<Vec<u32>> {
    let file: LabellingFile = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    check_host(file.host, host)?;
    Ok(file.corner_colors)
}

impl SchnyderDecomposition {
    pub fn to_json(&self) -> String {
        colors_to_json(Host::Primal, self.d, &self.colors)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let (d, colors) = colors_from_json(text, Host::Primal)?;
        Ok(SchnyderDecomposition { d, colors })
    }
}

impl CornerLabelling {
    pub fn to_json(&self) -> String {
        labels_to_json(Host::Primal, &self.corner_colors)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(CornerLabelling { corner_colors: labels_from_json(text, Host::Primal)? })
    }
}

/// Corner clockwise after `x` in the inner face containing corner `x`.
pub fn face_cw_next(map: &PlaneMap, x: Dart) -> Dart {
    map.prev_cw(map.twin(x))
}

/// Checks the three labelling axioms, reporting every violation.
pub fn validate_labelling(ang: &AngulationView, l: &CornerLabelling) -> Vec<Violation> {
    let (m, d) = (&ang.map, ang.d);
    let mut out = Vec::new();
    if l.corner_colors.len() != m.dart_count() {
        out.push(Violation { axiom: "size", detail: format!("{} colors for {} corners", l.corner_colors.len(), m.dart_count()) });
        return out;
    }
    for (x, &c) in l.corner_colors.iter().enumerate() {
        if c == 0 || c as usize > d {
            out.push(Violation { axiom: "range", detail: format!("corner {x} has color {c}") });
        }
    }
    if !out.is_empty() {
        return out;
    }
    let col = |x: Dart| l.corner_colors[x];
    let outer = m.outer_face();
    for x in 0..m.dart_count() {
        if m.corner_face(x) == outer {
            continue;
        }
        let y = face_cw_next(m, x);
        if col(y) != add(col(x), 1, d) {
            out.push(Violation {
                axiom: "i",
                detail: format!("face {}: corner {y} follows corner {x} with color {} after {}", m.corner_face(x), col(y), col(x)),
            });
        }
    }
    for (i, &u) in ang.external.iter().enumerate() {
        for x in m.darts_around(u) {
            if col(x) as usize != i + 1 {
                out.push(Violation { axiom: "ii", detail: format!("corner {x} at u_{} has color {}", i + 1, col(x)) });
            }
        }
    }
    for v in ang.internal_vertices() {
        let darts = m.darts_around(v);
        let descents = (0..darts.len())
            .filter(|&j| col(darts[j]) > col(darts[(j + 1) % darts.len()]))
            .count();
        if descents != 1 {
            out.push(Violation { axiom: "iii", detail: format!("vertex {v} has {descents} clockwise descents") });
        }
    }
    out
}

/// Clockwise jumps: `Omega(x) = col(corner after x) - col(corner before x)`.
pub fn psi(ang: &AngulationView, l: &CornerLabelling) -> Result<FracOrientation> {
    let violations = validate_labelling(ang, l);
    if !violations.is_empty() {
        return Err(Error::InvalidLabelling(summarize(&violations)));
    }
    Ok(psi_unchecked(ang, l))
}

pub(crate) fn psi_unchecked(ang: &AngulationView, l: &CornerLabelling) -> FracOrientation {
    let m = &ang.map;
    let values = (0..m.dart_count())
        .map(|x| {
            if ang.is_internal_dart(x) {
                jump(l.corner_colors[m.prev_cw(x)], l.corner_colors[x], ang.d) as i32
            } else {
                -1
            }
        })
        .collect();
    FracOrientation { k: ang.d as i32 - 2, values }
}

/// Rebuilds the labelling of a d/(d-2) orientation: color 1 at a corner of
/// `u_1`, +1 clockwise inside faces and +Omega clockwise around vertices.
pub fn psi_inverse(ang: &AngulationView, o: &FracOrientation) -> Result<CornerLabelling> {
    let (m, d) = (&ang.map, ang.d);
    let n = m.dart_count();
    let omega = |x: Dart| o.values[x].max(0) as i64;
    let outer = m.outer_face();
    let mut col = vec![0u32; n];
    let seed = m.outer_dart();
    col[seed] = 1;
    let mut queue = VecDeque::from([seed]);
    let visit = |x: Dart, c: u32, col: &mut Vec<u32>, queue: &mut VecDeque<Dart>| -> Result<()> {
        if col[x] == 0 {
            col[x] = c;
            queue.push_back(x);
        } else if col[x] != c {
            return Err(Error::PropagationConflict(x));
        }
        Ok(())
    };
    while let Some(x) = queue.pop_front() {
        let c = col[x];
        let y = m.next_cw(x);
        visit(y, add(c, omega(y), d), &mut col, &mut queue)?;
        let p = m.prev_cw(x);
        visit(p, add(c, -omega(x), d), &mut col, &mut queue)?;
        if m.corner_face(x) != outer {
            visit(face_cw_next(m, x), add(c, 1, d), &mut col, &mut queue)?;
            // The corner whose clockwise successor in the face is x.
            visit(m.twin(m.next_cw(x)), add(c, -1, d), &mut col, &mut queue)?;
        }
    }
    if let Some(x) = col.iter().position(|&c| c == 0) {
        return Err(Error::PropagationConflict(x));
    }
    // Every rule is checked once more on the finished coloring.
    for x in 0..n {
        if col[m.next_cw(x)] != add(col[x], omega(m.next_cw(x)), d) {
            return Err(Error::PropagationConflict(m.next_cw(x)));
        }
        if m.corner_face(x) != outer && col[face_cw_next(m, x)] != add(col[x], 1, d) {
            return Err(Error::PropagationConflict(face_cw_next(m, x)));
        }
    }
    let l = CornerLabelling { corner_colors: col };
    let violations = validate_labelling(ang, &l);
    if !violations.is_empty() {
        return Err(Error::InvalidLabelling(summarize(&violations)));
    }
    Ok(l)
}

/// Internal dart with corner colors `i` before and `j` after gets
/// `{i, ..., j - 1}`.
pub fn phi(ang: &AngulationView, l: &CornerLabelling) -> Result<SchnyderDecomposition> {
    let violations = validate_labelling(ang, l);
    if !violations.is_empty() {
        return Err(Error::InvalidLabelling(summarize(&violations)));
    }
    let m = &ang.map;
    let colors = (0..m.dart_count())
        .map(|x| {
            if ang.is_internal_dart(x) {
                interval(l.corner_colors[m.prev_cw(x)], l.corner_colors[x], ang.d)
            } else {
                0
            }
        })
        .collect();
    Ok(SchnyderDecomposition { d: ang.d, colors })
}

/// Color deletion: `Omega(x) = |colors(x)|`.
pub fn gamma(ang: &AngulationView, s: &SchnyderDecomposition) -> FracOrientation {
    let values = (0..ang.map.dart_count())
        .map(|x| if ang.is_internal_dart(x) { s.colors[x].count_ones() as i32 } else { -1 })
        .collect();
    FracOrientation { k: ang.d as i32 - 2, values }
}

pub fn phi_inverse(ang: &AngulationView, s: &SchnyderDecomposition) -> Result<CornerLabelling> {
    let violations = validate_schnyder(ang, s);
    if !violations.is_empty() {
        return Err(Error::InvalidDecomposition(summarize(&violations)));
    }
    let l = psi_inverse(ang, &gamma(ang, s)).map_err(|e| Error::InvalidDecomposition(e.to_string()))?;
    if &phi(ang, &l)? != s {
        return Err(Error::InvalidDecomposition("colors do not come from a clockwise labelling".into()));
    }
    Ok(l)
}

/// Outgoing color-`i` dart at `v`, if exactly one.
fn out_dart(m: &PlaneMap, s: &SchnyderDecomposition, v: Vertex, i: u32) -> Option<Dart> {
    let mut found = m.darts_around(v).into_iter().filter(|&x| s.colors[x] & bit(i) != 0);
    let first = found.next()?;
    found.next().is_none().then_some(first)
}

/// Color-`i` path from `v` to an external vertex.
pub fn forest_path_to_root(ang: &AngulationView, s: &SchnyderDecomposition, i: u32, v: Vertex) -> Result<Vec<Vertex>> {
    let m = &ang.map;
    let ext = m.external_vertices();
    let mut path = vec![v];
    let mut at = v;
    while !ext[at] {
        let x = out_dart(m, s, at, i)
            .ok_or_else(|| Error::InvalidDecomposition(format!("vertex {at} lacks a unique color {i} arc")))?;
        at = m.head(x);
        if path.len() > m.vertex_count() {
            return Err(Error::InvalidDecomposition(format!("color {i} has a cycle through {at}")));
        }
        path.push(at);
    }
    Ok(path)
}

/// Checks the Schnyder axioms, reporting every violation.
pub fn validate_schnyder(ang: &AngulationView, s: &SchnyderDecomposition) -> Vec<Violation> {
    let (m, d) = (&ang.map, ang.d);
    let mut out = Vec::new();
    if s.d != d || s.colors.len() != m.dart_count() {
        out.push(Violation { axiom: "size", detail: format!("decomposition for d = {} with {} darts", s.d, s.colors.len()) });
        return out;
    }
    let all: ColorSet = if d == 64 { !0 } else { (1 << d) - 1 };
    for x in 0..m.dart_count() {
        if s.colors[x] & !all != 0 {
            out.push(Violation { axiom: "range", detail: format!("dart {x} has a color above {d}") });
        }
        if !ang.is_internal_dart(x) && s.colors[x] != 0 {
            out.push(Violation { axiom: "i", detail: format!("external dart {x} carries colors") });
        }
    }
    for &x in &ang.internal_edges() {
        let (a, b) = (s.colors[x], s.colors[m.twin(x)]);
        if a & b != 0 || (a | b).count_ones() as usize != d - 2 {
            out.push(Violation {
                axiom: "i",
                detail: format!("edge of dart {x} carries {:?} and {:?}", colors_of(a), colors_of(b)),
            });
            continue;
        }
        // Missing colors {i, j}: one dart has i+1..j-1, the other j+1..i-1.
        let missing = colors_of(all & !(a | b));
        let (i, j) = (missing[0], missing[1]);
        let lo = interval(add(i, 1, d), j, d);
        let hi = interval(add(j, 1, d), i, d);
        if !((a == lo && b == hi) || (a == hi && b == lo)) {
            out.push(Violation { axiom: "i", detail: format!("edge of dart {x}: colors are not split by its missing colors") });
        }
    }
    let ext = m.external_vertices();
    for i in 1..=d as u32 {
        for v in 0..m.vertex_count() {
            let outs = m.darts_around(v).into_iter().filter(|&x| s.colors[x] & bit(i) != 0).count();
            if ext[v] && outs != 0 {
                out.push(Violation { axiom: "ii", detail: format!("external vertex {v} has an outgoing color {i} arc") });
            }
            if !ext[v] && outs != 1 {
                out.push(Violation { axiom: "ii", detail: format!("vertex {v} has {outs} outgoing color {i} arcs") });
            }
        }
        for excluded in [i as usize, i as usize % d + 1] {
            let u = ang.external[excluded - 1];
            if m.darts_around(u).into_iter().any(|x| s.colors[m.twin(x)] & bit(i) != 0) {
                out.push(Violation { axiom: "ii", detail: format!("u_{excluded} is incident to color {i}") });
            }
        }
        for v in ang.internal_vertices() {
            if let Err(e) = forest_path_to_root(ang, s, i, v) {
                out.push(Violation { axiom: "ii", detail: format!("color {i} from vertex {v}: {e}") });
            }
        }
    }
    if out.iter().any(|o| o.axiom == "ii" || o.axiom == "i") {
        return out;
    }
    for v in ang.internal_vertices() {
        out.extend(check_rotation(m, s, v, d));
    }
    out
}

// Outgoing colors clockwise 1..d around v, and incoming color i strictly
// between e_{i+1} and e_{i-1}.
fn check_rotation(m: &PlaneMap, s: &SchnyderDecomposition, v: Vertex, d: usize) -> Vec<Violation> {
    let darts = m.darts_around(v);
    let deg = darts.len();
    let mut seq = Vec::new();
    let mut pos = vec![usize::MAX; d + 1];
    for (p, &x) in darts.iter().enumerate() {
        let set = s.colors[x];
        if set == 0 {
            continue;
        }
        // The set is a cyclic interval; list it from its first color.
        let cs = colors_of(set);
        let start = cs.iter().copied().find(|&c| set & bit(add(c, -1, d)) == 0);
        let Some(start) = start else {
            return vec![Violation { axiom: "iii", detail: format!("dart {x} carries every color") }];
        };
        let mut c = start;
        for _ in 0..cs.len() {
            if set & bit(c) == 0 {
                return vec![Violation { axiom: "iii", detail: format!("dart {x} colors are not an interval") }];
            }
            seq.push(c);
            pos[c as usize] = p;
            c = add(c, 1, d);
        }
    }
    let mut out = Vec::new();
    for j in 0..seq.len() {
        if seq[(j + 1) % seq.len()] != add(seq[j], 1, d) {
            out.push(Violation { axiom: "iii", detail: format!("outgoing colors around {v} are not clockwise") });
            return out;
        }
    }
    for (p, &x) in darts.iter().enumerate() {
        for i in colors_of(s.colors[m.twin(x)]) {
            let a = pos[add(i, 1, d) as usize];
            let b = pos[add(i, -1, d) as usize];
            let span = if a == b { deg } else { (b + deg - a) % deg };
            let off = (p + deg - a) % deg;
            if !(off > 0 && off < span) {
                out.push(Violation {
                    axiom: "iii",
                    detail: format!("incoming color {i} at {v} is not between e_{} and e_{}", add(i, 1, d), add(i, -1, d)),
                });
            }
        }
    }
    out
}

/// Adds 1 to the colors of the corners inside the counterclockwise cycle
/// `c`; each counterclockwise arc must separate two different colors.
pub fn labelling_push(ang: &AngulationView, l: &CornerLabelling, c: &Cycle) -> Result<CornerLabelling> {
    let m = &ang.map;
    for &x in &c.darts {
        if !ang.is_internal_dart(x) || l.corner_colors[m.prev_cw(x)] == l.corner_colors[x] {
            return Err(Error::NotAdmissible(format!("arc {x} separates corners of equal color")));
        }
    }
    let corner_colors = (0..m.dart_count())
        .map(|x| {
            let col = l.corner_colors[x];
            if c.inside[m.corner_face(x)] {
                add(col, 1, ang.d)
            } else {
                col
            }
        })
        .collect();
    Ok(CornerLabelling { corner_colors })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modular_helpers() {
        assert_eq!(add(4, 1, 4), 1);
        assert_eq!(add(1, -1, 4), 4);
        assert_eq!(jump(3, 1, 4), 2);
        assert_eq!(colors_of(interval(3, 2, 4)), vec![1, 3, 4]);
        assert_eq!(interval(2, 2, 4), 0);
    }
}
