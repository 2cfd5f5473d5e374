//! Regular labellings and regular decompositions of a vertex-rooted
//! d-regular plane graph `G*`, and the bijections `xi` and `chi`.
//!
//! Primal and dual are kept as a [`DualPair`] sharing dart ids: dart `x` of
//! the angulation `G` crosses dart `x` of `G*`. The primal corner `x` faces
//! the dual corner `next_cw_G(x)`.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::planar_map::{AngulationView, Dart, RegularView, Vertex};
use crate::schnyder::{
    add, bit, colors_from_json, colors_to_json, face_cw_next, labels_from_json, labels_to_json, summarize,
    validate_labelling, validate_schnyder, ColorSet, CornerLabelling, Host, SchnyderDecomposition, Violation,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualPair {
    pub primal: AngulationView,
    pub dual: RegularView,
}

impl DualPair {
    /// `G* = dual(G)` rooted at the outer face of `G`.
    pub fn from_angulation(ang: &AngulationView) -> Result<Self> {
        let m = &ang.map;
        let dual = m.dual().as_regular(ang.d, m.outer_face())?;
        Ok(DualPair { primal: ang.clone(), dual })
    }

    pub fn from_regular(rv: &RegularView) -> Result<Self> {
        Ok(DualPair { primal: rv.primal()?, dual: rv.clone() })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RegularLabelling {
    pub corner_colors: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RegularDecomposition {
    pub d: usize,
    pub colors: Vec<ColorSet>,
}

impl RegularLabelling {
    pub fn to_json(&self) -> String {
        labels_to_json(Host::Dual, &self.corner_colors)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(RegularLabelling { corner_colors: labels_from_json(text, Host::Dual)? })
    }
}

impl RegularDecomposition {
    pub fn to_json(&self) -> String {
        colors_to_json(Host::Dual, self.d, &self.colors)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let (d, colors) = colors_from_json(text, Host::Dual)?;
        Ok(RegularDecomposition { d, colors })
    }
}

fn check_size(rv: &RegularView, len: usize, max: u32, colors: impl Iterator<Item = u32>) -> Vec<Violation> {
    if len != rv.map.dart_count() {
        return vec![Violation { axiom: "size", detail: format!("{len} entries for {} darts", rv.map.dart_count()) }];
    }
    colors
        .enumerate()
        .filter(|&(_, c)| c == 0 || c > max)
        .map(|(x, c)| Violation { axiom: "range", detail: format!("entry {x} has color {c}") })
        .collect()
}

/// Corners of each face, in clockwise order around the face.
fn face_corners(rv: &RegularView) -> Vec<Vec<Dart>> {
    let m = &rv.map;
    let mut out = vec![Vec::new(); m.face_count()];
    for f in 0..m.face_count() {
        // Corner x lies in corner_face(x) = face(twin x).
        let start = m.twin(m.face_dart(f));
        let mut x = start;
        loop {
            out[f].push(x);
            x = face_cw_next(m, x);
            if x == start {
                break;
            }
        }
    }
    out
}

fn check_vertex_order(rv: &RegularView, col: &[u32], axiom: &'static str) -> Vec<Violation> {
    let (m, d) = (&rv.map, rv.d);
    let mut out = Vec::new();
    for v in 0..m.vertex_count() {
        let step = if v == rv.root { -1 } else { 1 };
        for x in m.darts_around(v) {
            if col[m.next_cw(x)] != add(col[x], step, d) {
                let dir = if v == rv.root { "counterclockwise" } else { "clockwise" };
                out.push(Violation { axiom, detail: format!("colors around vertex {v} are not in {dir} order") });
                break;
            }
        }
    }
    out
}

/// Checks the three regular labelling axioms.
pub fn validate_regular_labelling(rv: &RegularView, l: &RegularLabelling) -> Vec<Violation> {
    let mut out = check_size(rv, l.corner_colors.len(), rv.d as u32, l.corner_colors.iter().copied());
    if !out.is_empty() {
        return out;
    }
    let col = &l.corner_colors;
    out.extend(check_vertex_order(rv, col, "i"));
    for (f, corners) in face_corners(rv).iter().enumerate() {
        match rv.root_face_index(f) {
            Some(i) => {
                if let Some(&x) = corners.iter().find(|&&x| col[x] as usize != i) {
                    out.push(Violation { axiom: "ii", detail: format!("corner {x} of root face f_{i} has color {}", col[x]) });
                }
            }
            None => {
                let k = corners.len();
                let descents = (0..k).filter(|&j| col[corners[j]] > col[corners[(j + 1) % k]]).count();
                if descents != 1 {
                    out.push(Violation { axiom: "iii", detail: format!("face {f} has {descents} clockwise descents") });
                }
            }
        }
    }
    out
}

/// The sufficient conditions (i')-(iv') for a corner coloring to be a
/// regular labelling.
pub fn validate_claim(rv: &RegularView, l: &RegularLabelling) -> Vec<Violation> {
    let (m, d) = (&rv.map, rv.d);
    let mut out = check_size(rv, l.corner_colors.len(), d as u32, l.corner_colors.iter().copied());
    if !out.is_empty() {
        return out;
    }
    let col = &l.corner_colors;
    out.extend(check_vertex_order(rv, col, "i'"));
    for &x in m.edge_darts() {
        if rv.is_root_dart(x) {
            continue;
        }
        let t = m.twin(x);
        if col[m.prev_cw(x)] == col[m.prev_cw(t)] {
            out.push(Violation { axiom: "ii'", detail: format!("both corners preceding the edge of dart {x} have color {}", col[m.prev_cw(x)]) });
        }
    }
    for (k, &e) in rv.root_edges.iter().enumerate() {
        let i = k as u32 + 1;
        let t = m.twin(e);
        let ok = col[m.prev_cw(e)] == add(i, 1, d)
            && col[e] == i
            && col[m.prev_cw(t)] == i
            && col[t] == add(i, 1, d);
        if !ok {
            out.push(Violation { axiom: "iii'", detail: format!("corners around root edge e_{i} are miscolored") });
        }
    }
    for (f, corners) in face_corners(rv).iter().enumerate() {
        if rv.root_face_index(f).is_none() && corners.iter().all(|&x| col[x] == col[corners[0]]) {
            out.push(Violation { axiom: "iv'", detail: format!("face {f} is monochromatic") });
        }
    }
    out
}

/// Parent arc of color `i` at `v`, if exactly one.
fn out_arc(rv: &RegularView, r: &RegularDecomposition, v: Vertex, i: u32) -> Option<Dart> {
    let mut found = rv.map.darts_around(v).into_iter().filter(|&x| r.colors[x] & bit(i) != 0);
    let first = found.next()?;
    found.next().is_none().then_some(first)
}

/// Color-`i` path from `v` to the root vertex.
pub fn regular_path_to_root(rv: &RegularView, r: &RegularDecomposition, i: u32, v: Vertex) -> Result<Vec<Vertex>> {
    let m = &rv.map;
    let mut path = vec![v];
    let mut at = v;
    while at != rv.root {
        let x = out_arc(rv, r, at, i)
            .ok_or_else(|| Error::InvalidDecomposition(format!("vertex {at} lacks a unique color {i} arc")))?;
        at = m.head(x);
        if path.len() > m.vertex_count() {
            return Err(Error::InvalidDecomposition(format!("color {i} has a cycle through {at}")));
        }
        path.push(at);
    }
    Ok(path)
}

/// Checks the regular decomposition axioms, including that each color is a
/// spanning tree oriented toward the root.
pub fn validate_regular_decomposition(rv: &RegularView, r: &RegularDecomposition) -> Vec<Violation> {
    let (m, d) = (&rv.map, rv.d);
    if r.d != d || r.colors.len() != m.dart_count() {
        return vec![Violation { axiom: "size", detail: format!("decomposition for d = {} with {} darts", r.d, r.colors.len()) }];
    }
    let mut out = Vec::new();
    let all: ColorSet = if d == 64 { !0 } else { (1 << d) - 1 };
    for x in 0..m.dart_count() {
        let c = r.colors[x];
        if c & !all != 0 {
            out.push(Violation { axiom: "range", detail: format!("dart {x} has a color above {d}") });
        } else if m.origin(x) == rv.root && c != 0 {
            out.push(Violation { axiom: "tree", detail: format!("dart {x} leaves the root vertex") });
        } else if m.origin(x) != rv.root && c.count_ones() != 1 {
            out.push(Violation { axiom: "i", detail: format!("dart {x} carries {} colors", c.count_ones()) });
        }
    }
    if !out.is_empty() {
        return out;
    }
    for &x in m.edge_darts() {
        if !rv.is_root_dart(x) && r.colors[x] == r.colors[m.twin(x)] {
            out.push(Violation { axiom: "i", detail: format!("both arcs of the edge of dart {x} have the same color") });
        }
    }
    for (k, &e) in rv.root_edges.iter().enumerate() {
        if r.colors[m.twin(e)] != bit(k as u32 + 1) {
            out.push(Violation { axiom: "ii", detail: format!("root edge e_{} is not only in tree {}", k + 1, k + 1) });
        }
    }
    for v in 0..m.vertex_count() {
        if v == rv.root {
            continue;
        }
        for x in m.darts_around(v) {
            let (a, b) = (r.colors[x].trailing_zeros() + 1, r.colors[m.next_cw(x)].trailing_zeros() + 1);
            if b != add(a, 1, d) {
                out.push(Violation { axiom: "iii", detail: format!("outgoing colors around {v} are not clockwise") });
                break;
            }
        }
    }
    if !out.is_empty() {
        return out;
    }
    for i in 1..=d as u32 {
        for v in 0..m.vertex_count() {
            if let Err(e) = regular_path_to_root(rv, r, i, v) {
                out.push(Violation { axiom: "tree", detail: e.to_string() });
                break;
            }
        }
    }
    out
}

/// Transfers a clockwise labelling of `G` to the facing corners of `G*`.
pub fn dual_labelling(pair: &DualPair, l: &CornerLabelling) -> Result<RegularLabelling> {
    let violations = validate_labelling(&pair.primal, l);
    if !violations.is_empty() {
        return Err(Error::InvalidLabelling(summarize(&violations)));
    }
    let g = &pair.primal.map;
    let mut corner_colors = vec![0; g.dart_count()];
    for x in 0..g.dart_count() {
        corner_colors[g.next_cw(x)] = l.corner_colors[x];
    }
    let out = RegularLabelling { corner_colors };
    let violations = validate_regular_labelling(&pair.dual, &out);
    if !violations.is_empty() {
        return Err(Error::InternalInvariantViolation(format!("dual labelling: {}", summarize(&violations))));
    }
    Ok(out)
}

pub fn primal_labelling(pair: &DualPair, l: &RegularLabelling) -> Result<CornerLabelling> {
    let violations = validate_regular_labelling(&pair.dual, l);
    if !violations.is_empty() {
        return Err(Error::InvalidLabelling(summarize(&violations)));
    }
    let g = &pair.primal.map;
    let corner_colors = (0..g.dart_count()).map(|x| l.corner_colors[g.next_cw(x)]).collect();
    let out = CornerLabelling { corner_colors };
    let violations = validate_labelling(&pair.primal, &out);
    if !violations.is_empty() {
        return Err(Error::InternalInvariantViolation(format!("primal labelling: {}", summarize(&violations))));
    }
    Ok(out)
}

/// Each arc `(u, e)` with `u` not the root gets the color of the corner
/// clockwise before it.
pub fn xi(rv: &RegularView, l: &RegularLabelling) -> Result<RegularDecomposition> {
    let violations = validate_regular_labelling(rv, l);
    if !violations.is_empty() {
        return Err(Error::InvalidLabelling(summarize(&violations)));
    }
    let m = &rv.map;
    let colors = (0..m.dart_count())
        .map(|x| if m.origin(x) == rv.root { 0 } else { bit(l.corner_colors[m.prev_cw(x)]) })
        .collect();
    Ok(RegularDecomposition { d: rv.d, colors })
}

pub fn xi_inverse(rv: &RegularView, r: &RegularDecomposition) -> Result<RegularLabelling> {
    let violations = validate_regular_decomposition(rv, r);
    if !violations.is_empty() {
        return Err(Error::InvalidDecomposition(summarize(&violations)));
    }
    let l = xi_inverse_unchecked(rv, r);
    let mut violations = validate_claim(rv, &l);
    violations.extend(validate_regular_labelling(rv, &l));
    if !violations.is_empty() {
        return Err(Error::InvalidDecomposition(summarize(&violations)));
    }
    Ok(l)
}

/// The corner coloring read off a decomposition, before any validation.
pub fn xi_inverse_unchecked(rv: &RegularView, r: &RegularDecomposition) -> RegularLabelling {
    let m = &rv.map;
    let mut corner_colors = vec![0; m.dart_count()];
    for x in 0..m.dart_count() {
        if m.origin(x) == rv.root {
            corner_colors[x] = rv.root_face_index(m.corner_face(x)).unwrap_or(0) as u32;
        } else if r.colors[x] != 0 {
            corner_colors[m.prev_cw(x)] = r.colors[x].trailing_zeros() + 1;
        }
    }
    RegularLabelling { corner_colors }
}

/// `T_i*` is the complemented dual of `T_i = F_i` plus the external edges
/// other than `{u_i, u_{i+1}}`, oriented toward the root.
pub fn chi(pair: &DualPair, s: &SchnyderDecomposition) -> Result<RegularDecomposition> {
    let violations = validate_schnyder(&pair.primal, s);
    if !violations.is_empty() {
        return Err(Error::InvalidDecomposition(summarize(&violations)));
    }
    let (ang, rv) = (&pair.primal, &pair.dual);
    let (g, h) = (&ang.map, &rv.map);
    let d = ang.d;
    let mut colors = vec![0; h.dart_count()];
    for i in 1..=d as u32 {
        let mut in_tree = vec![false; g.dart_count()];
        for x in 0..g.dart_count() {
            let external = g.is_external_dart(x) && x != ang.outer[i as usize - 1] && g.twin(x) != ang.outer[i as usize - 1];
            if s.colors[x] & bit(i) != 0 || s.colors[g.twin(x)] & bit(i) != 0 || external {
                in_tree[x] = true;
            }
        }
        let mut seen = vec![false; h.vertex_count()];
        seen[rv.root] = true;
        let mut queue = VecDeque::from([rv.root]);
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for y in h.darts_around(v) {
                let w = h.head(y);
                if in_tree[y] || seen[w] {
                    continue;
                }
                seen[w] = true;
                reached += 1;
                colors[h.twin(y)] |= bit(i);
                queue.push_back(w);
            }
        }
        if reached != h.vertex_count() {
            return Err(Error::InternalInvariantViolation(format!("complemented dual of tree {i} does not span")));
        }
    }
    let r = RegularDecomposition { d, colors };
    let violations = validate_regular_decomposition(rv, &r);
    if !violations.is_empty() {
        return Err(Error::InternalInvariantViolation(format!("chi: {}", summarize(&violations))));
    }
    Ok(r)
}

pub fn chi_inverse(pair: &DualPair, r: &RegularDecomposition) -> Result<SchnyderDecomposition> {
    let violations = validate_regular_decomposition(&pair.dual, r);
    if !violations.is_empty() {
        return Err(Error::InvalidDecomposition(summarize(&violations)));
    }
    let (ang, h) = (&pair.primal, &pair.dual.map);
    let g = &ang.map;
    let d = ang.d;
    let ext = g.external_vertices();
    let mut colors = vec![0; g.dart_count()];
    for i in 1..=d as u32 {
        // F_i: primal edges whose dual is outside T_i*, minus external edges.
        let in_forest = |x: Dart| {
            !g.is_external_dart(x) && (r.colors[x] | r.colors[h.twin(x)]) & bit(i) == 0
        };
        let mut seen = ext.clone();
        let mut queue: VecDeque<Vertex> = ang.external.iter().copied().collect();
        while let Some(v) = queue.pop_front() {
            for y in g.darts_around(v) {
                let w = g.head(y);
                if !in_forest(y) || seen[w] {
                    continue;
                }
                seen[w] = true;
                colors[g.twin(y)] |= bit(i);
                queue.push_back(w);
            }
        }
        if let Some(v) = seen.iter().position(|&b| !b) {
            return Err(Error::InvalidDecomposition(format!("vertex {v} is cut off from the external face in forest {i}")));
        }
    }
    let s = SchnyderDecomposition { d, colors };
    let violations = validate_schnyder(ang, &s);
    if !violations.is_empty() {
        return Err(Error::InvalidDecomposition(summarize(&violations)));
    }
    Ok(s)
}
