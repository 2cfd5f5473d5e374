//! Fractional orientations with prescribed outdegrees.
//!
//! An orientation stores one integer per dart: the value of the arc leaving
//! the dart's origin along its edge, with the two values of an oriented edge
//! summing to `k`. Darts of edges outside the oriented set hold `-1`.
//! Orientations are found with a max-flow; the lattice of d/(d-2)
//! orientations is explored by pushing circuits of length d.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::planar_map::{AngulationView, Dart, PlaneMap, Vertex};

pub const DEFAULT_LATTICE_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FracOrientation {
    pub k: i32,
    pub values: Vec<i32>,
}

/// Why no orientation exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Infeasible {
    /// A connected vertex set whose edges need more than it can give:
    /// `alpha_sum < k * inner_edges`.
    Subset { vertices: Vec<Vertex>, alpha_sum: usize, inner_edges: usize, k: usize },
    /// The total prescribed outdegree differs from `k` times the edge count.
    SumMismatch { alpha_sum: usize, required: usize },
}

impl fmt::Display for Infeasible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Infeasible::Subset { vertices, alpha_sum, inner_edges, k } => write!(
                f,
                "vertices {vertices:?} have total outdegree {alpha_sum} < {k} * {inner_edges}"
            ),
            Infeasible::SumMismatch { alpha_sum, required } => {
                write!(f, "total outdegree {alpha_sum} differs from {required}")
            }
        }
    }
}

impl FracOrientation {
    pub fn value(&self, d: Dart) -> Option<i32> {
        let v = self.values[d];
        (v >= 0).then_some(v)
    }

    pub fn outdegree(&self, map: &PlaneMap, v: Vertex) -> i32 {
        map.darts_around(v).into_iter().map(|d| self.values[d].max(0)).sum()
    }

    pub fn is_even(&self) -> bool {
        self.values.iter().all(|&v| v < 0 || v % 2 == 0)
    }

    /// All values (and `k`) multiplied by two.
    pub fn doubled(&self) -> FracOrientation {
        FracOrientation {
            k: 2 * self.k,
            values: self.values.iter().map(|&v| if v < 0 { v } else { 2 * v }).collect(),
        }
    }

    /// Checks edge sums and outdegrees; `alpha` is indexed by vertex.
    pub fn check(&self, map: &PlaneMap, oriented: &[bool], alpha: &[usize]) -> std::result::Result<(), String> {
        if self.values.len() != map.dart_count() {
            return Err(format!("{} values for {} darts", self.values.len(), map.dart_count()));
        }
        for d in 0..map.dart_count() {
            let (a, b) = (self.values[d], self.values[map.twin(d)]);
            if oriented[map.edge_id(d)] {
                if a < 0 || b < 0 || a + b != self.k {
                    return Err(format!("edge of dart {d} carries {a} + {b} != {}", self.k));
                }
            } else if a != -1 {
                return Err(format!("dart {d} is not oriented but carries {a}"));
            }
        }
        for v in 0..map.vertex_count() {
            let out = self.outdegree(map, v);
            if out != alpha[v] as i32 {
                return Err(format!("vertex {v} has outdegree {out}, expected {}", alpha[v]));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("orientation serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
    }
}

/// Outdegrees and oriented edges of a d/(d-2) or p/(p-1) orientation:
/// internal edges, `alpha` on internal vertices and 0 outside.
pub fn angulation_spec(ang: &AngulationView, alpha: usize) -> (Vec<bool>, Vec<usize>) {
    let m = &ang.map;
    let oriented = m.edge_darts().iter().map(|&d| ang.is_internal_dart(d)).collect();
    let ext = m.external_vertices();
    let alphas = (0..m.vertex_count()).map(|v| if ext[v] { 0 } else { alpha }).collect();
    (oriented, alphas)
}

pub fn check_dd2(ang: &AngulationView, o: &FracOrientation) -> std::result::Result<(), String> {
    if o.k != ang.d as i32 - 2 {
        return Err(format!("k = {} but d - 2 = {}", o.k, ang.d - 2));
    }
    let (oriented, alpha) = angulation_spec(ang, ang.d);
    o.check(&ang.map, &oriented, &alpha)
}

struct Flow {
    head: Vec<usize>,
    cap: Vec<i64>,
    adj: Vec<Vec<usize>>,
}

impl Flow {
    fn new(n: usize) -> Self {
        Flow { head: Vec::new(), cap: Vec::new(), adj: vec![Vec::new(); n] }
    }

    fn arc(&mut self, a: usize, b: usize, c: i64) -> usize {
        let id = self.head.len();
        self.head.push(b);
        self.cap.push(c);
        self.adj[a].push(id);
        self.head.push(a);
        self.cap.push(0);
        self.adj[b].push(id + 1);
        id
    }

    // Edmonds-Karp: shortest augmenting paths in the residual graph.
    fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut total = 0;
        loop {
            let mut via = vec![usize::MAX; self.adj.len()];
            let mut queue = VecDeque::from([s]);
            let mut found = false;
            'bfs: while let Some(u) = queue.pop_front() {
                for &a in &self.adj[u] {
                    let w = self.head[a];
                    if self.cap[a] > 0 && w != s && via[w] == usize::MAX {
                        via[w] = a;
                        if w == t {
                            found = true;
                            break 'bfs;
                        }
                        queue.push_back(w);
                    }
                }
            }
            if !found {
                return total;
            }
            let mut push = i64::MAX;
            let mut w = t;
            while w != s {
                let a = via[w];
                push = push.min(self.cap[a]);
                w = self.head[a ^ 1];
            }
            let mut w = t;
            while w != s {
                let a = via[w];
                self.cap[a] -= push;
                self.cap[a ^ 1] += push;
                w = self.head[a ^ 1];
            }
            total += push;
        }
    }

    fn reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &a in &self.adj[u] {
                let w = self.head[a];
                if self.cap[a] > 0 && !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen
    }
}

/// Orientation of the edges flagged in `oriented` (indexed by edge id) in
/// which every vertex `v` has outdegree `alpha[v]`, each edge carrying `k`.
pub fn compute_alpha_k_orientation(
    map: &PlaneMap,
    oriented: &[bool],
    alpha: &[usize],
    k: usize,
) -> Result<FracOrientation> {
    let nv = map.vertex_count();
    let edges: Vec<Dart> = map.edge_darts().iter().copied().filter(|&d| oriented[map.edge_id(d)]).collect();
    let alpha_sum: usize = alpha.iter().sum();
    if alpha_sum != k * edges.len() {
        return Err(Error::NoSolution(Infeasible::SumMismatch { alpha_sum, required: k * edges.len() }));
    }
    let (s, t) = (nv + edges.len(), nv + edges.len() + 1);
    let mut flow = Flow::new(nv + edges.len() + 2);
    for (v, &a) in alpha.iter().enumerate() {
        if a > 0 {
            flow.arc(s, v, a as i64);
        }
    }
    let mut dart_arc = vec![usize::MAX; map.dart_count()];
    for (i, &d) in edges.iter().enumerate() {
        for x in [d, map.twin(d)] {
            dart_arc[x] = flow.arc(map.origin(x), nv + i, k as i64);
        }
        flow.arc(nv + i, t, k as i64);
    }
    let total = flow.max_flow(s, t);
    if total < alpha_sum as i64 {
        let reach = flow.reachable(s);
        let inside: Vec<bool> = (0..nv).map(|v| !reach[v]).collect();
        return Err(Error::NoSolution(violating_component(map, &edges, &inside, alpha, k)));
    }
    let mut values = vec![-1; map.dart_count()];
    for &d in &edges {
        for x in [d, map.twin(d)] {
            values[x] = flow.cap[dart_arc[x] ^ 1] as i32;
        }
    }
    Ok(FracOrientation { k: k as i32, values })
}

// The unreachable side of a min cut violates the subset condition; one of
// its components (joined by oriented edges) does too.
fn violating_component(map: &PlaneMap, edges: &[Dart], inside: &[bool], alpha: &[usize], k: usize) -> Infeasible {
    let nv = map.vertex_count();
    let mut comp = vec![usize::MAX; nv];
    let mut adj = vec![Vec::new(); nv];
    for &d in edges {
        let (a, b) = (map.origin(d), map.head(d));
        if inside[a] && inside[b] {
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    let mut best = None;
    for s in 0..nv {
        if !inside[s] || comp[s] != usize::MAX {
            continue;
        }
        comp[s] = s;
        let mut members = vec![s];
        let mut i = 0;
        while i < members.len() {
            let u = members[i];
            i += 1;
            for &w in &adj[u] {
                if comp[w] == usize::MAX {
                    comp[w] = s;
                    members.push(w);
                }
            }
        }
        let alpha_sum: usize = members.iter().map(|&v| alpha[v]).sum();
        let inner_edges = edges.iter().filter(|&&d| comp[map.origin(d)] == s && comp[map.head(d)] == s).count();
        if alpha_sum < k * inner_edges && best.is_none() {
            members.sort_unstable();
            best = Some(Infeasible::Subset { vertices: members, alpha_sum, inner_edges, k });
        }
    }
    best.expect("min cut yields a violating component")
}

fn girth_guard(ang: &AngulationView) -> Result<()> {
    let cycle = ang.map.shortest_cycle()?;
    if cycle.len() < ang.d {
        return Err(Error::GirthTooSmall { girth: cycle.len(), d: ang.d, cycle });
    }
    Ok(())
}

/// The flow for a d/(d-2) orientation, without the girth pre-check.
pub fn dd2_by_flow(ang: &AngulationView) -> Result<FracOrientation> {
    let (oriented, alpha) = angulation_spec(ang, ang.d);
    compute_alpha_k_orientation(&ang.map, &oriented, &alpha, ang.d - 2)
}

/// A d/(d-2) orientation: `k = d - 2`, outdegree d at internal vertices.
pub fn compute_dd2_orientation(ang: &AngulationView) -> Result<FracOrientation> {
    girth_guard(ang)?;
    dd2_by_flow(ang)
}

/// A p/(p-1) orientation of a 2p-angulation.
pub fn compute_p_p1_orientation(ang: &AngulationView) -> Result<FracOrientation> {
    if ang.d % 2 == 1 {
        return Err(Error::OddD(ang.d));
    }
    girth_guard(ang)?;
    let p = ang.d / 2;
    let (oriented, alpha) = angulation_spec(ang, p);
    compute_alpha_k_orientation(&ang.map, &oriented, &alpha, p - 1)
}

/// A simple cycle of internal edges, stored counterclockwise (its inside on
/// the left of its darts).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    pub darts: Vec<Dart>,
    /// Per face: strictly inside the cycle.
    pub inside: Vec<bool>,
}

impl Cycle {
    /// Orients a closed walk counterclockwise and computes its inside.
    pub fn new(map: &PlaneMap, walk: &[Dart]) -> Result<Cycle> {
        for (i, &d) in walk.iter().enumerate() {
            if map.head(d) != map.origin(walk[(i + 1) % walk.len()]) {
                return Err(Error::NotACircuit("darts do not form a closed walk".into()));
            }
        }
        let mut on_cycle = vec![false; map.edge_count()];
        for &d in walk {
            on_cycle[map.edge_id(d)] = true;
        }
        let left = flood(map, &on_cycle, walk.iter().map(|&d| map.face(d)));
        if left[map.outer_face()] {
            let rev: Vec<Dart> = walk.iter().rev().map(|&d| map.twin(d)).collect();
            let inside = flood(map, &on_cycle, rev.iter().map(|&d| map.face(d)));
            if inside[map.outer_face()] {
                return Err(Error::NotACircuit("walk does not separate the sphere".into()));
            }
            return Ok(Cycle { darts: rev, inside });
        }
        Ok(Cycle { darts: walk.to_vec(), inside: left })
    }

    pub fn reversed(&self) -> Vec<Dart> {
        self.darts.iter().rev().copied().collect()
    }
}

// Faces reachable from `seeds` without crossing a flagged edge.
fn flood(map: &PlaneMap, blocked: &[bool], seeds: impl Iterator<Item = usize>) -> Vec<bool> {
    let mut seen = vec![false; map.face_count()];
    let mut stack: Vec<usize> = Vec::new();
    for f in seeds {
        if !seen[f] {
            seen[f] = true;
            stack.push(f);
        }
    }
    while let Some(f) = stack.pop() {
        for d in map.face_darts(f) {
            if blocked[map.edge_id(d)] {
                continue;
            }
            let g = map.face(map.twin(d));
            if !seen[g] {
                seen[g] = true;
                stack.push(g);
            }
        }
    }
    seen
}

/// Pushes a counterclockwise circuit: its darts lose 1, their twins gain 1.
pub fn push_cycle(map: &PlaneMap, o: &FracOrientation, c: &Cycle) -> Result<FracOrientation> {
    if !is_ccw_circuit(o, c) {
        return Err(Error::NotACircuit("a counterclockwise arc has value 0 or is not oriented".into()));
    }
    let mut values = o.values.clone();
    for &d in &c.darts {
        values[d] -= 1;
        values[map.twin(d)] += 1;
    }
    Ok(FracOrientation { k: o.k, values })
}

/// Inverse of [`push_cycle`]: pushes the clockwise circuit `c` reversed.
pub fn push_cycle_back(map: &PlaneMap, o: &FracOrientation, c: &Cycle) -> Result<FracOrientation> {
    if !is_cw_circuit(map, o, c) {
        return Err(Error::NotACircuit("a clockwise arc has value 0 or is not oriented".into()));
    }
    let mut values = o.values.clone();
    for &d in &c.darts {
        values[d] += 1;
        values[map.twin(d)] -= 1;
    }
    Ok(FracOrientation { k: o.k, values })
}

pub fn is_ccw_circuit(o: &FracOrientation, c: &Cycle) -> bool {
    c.darts.iter().all(|&d| o.values[d] > 0)
}

pub fn is_cw_circuit(map: &PlaneMap, o: &FracOrientation, c: &Cycle) -> bool {
    c.darts.iter().all(|&d| o.values[map.twin(d)] > 0)
}

/// Every simple cycle of length `d` made of internal edges between internal
/// vertices (a circuit through an external vertex would need an arc of
/// positive value leaving it), oriented counterclockwise.
pub fn candidate_cycles(ang: &AngulationView) -> Vec<Cycle> {
    let m = &ang.map;
    let ext = m.external_vertices();
    let usable = |x: Dart| ang.is_internal_dart(x) && !ext[m.origin(x)] && !ext[m.head(x)];
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut path: Vec<Dart> = Vec::new();
    let mut on_path = vec![false; m.vertex_count()];
    for s in 0..m.vertex_count() {
        if ext[s] {
            continue;
        }
        on_path[s] = true;
        extend(m, ang.d, s, s, &usable, &mut path, &mut on_path, &mut seen, &mut out);
        on_path[s] = false;
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn extend(
    m: &PlaneMap,
    d: usize,
    start: Vertex,
    at: Vertex,
    usable: &dyn Fn(Dart) -> bool,
    path: &mut Vec<Dart>,
    on_path: &mut [bool],
    seen: &mut HashSet<Vec<usize>>,
    out: &mut Vec<Cycle>,
) {
    for x in m.darts_around(at) {
        if !usable(x) {
            continue;
        }
        let w = m.head(x);
        // Only cycles whose smallest vertex is the start are explored.
        if w < start {
            continue;
        }
        if w == start && path.len() + 1 == d {
            path.push(x);
            let mut key: Vec<usize> = path.iter().map(|&y| m.edge_id(y)).collect();
            key.sort_unstable();
            if seen.insert(key) {
                if let Ok(c) = Cycle::new(m, path) {
                    out.push(c);
                }
            }
            path.pop();
        } else if w != start && !on_path[w] && path.len() + 1 < d {
            on_path[w] = true;
            path.push(x);
            extend(m, d, start, w, usable, path, on_path, seen, out);
            path.pop();
            on_path[w] = false;
        }
    }
}

/// Counterclockwise circuits of length d of `o`.
pub fn find_ccw_d_circuits(ang: &AngulationView, o: &FracOrientation) -> Vec<Cycle> {
    candidate_cycles(ang).into_iter().filter(|c| is_ccw_circuit(o, c)).collect()
}

/// Cached cycle candidates of one host, for repeated lattice walks.
pub struct Lattice<'a> {
    pub ang: &'a AngulationView,
    pub cycles: Vec<Cycle>,
}

impl<'a> Lattice<'a> {
    pub fn new(ang: &'a AngulationView) -> Self {
        Lattice { ang, cycles: candidate_cycles(ang) }
    }

    /// Pushes counterclockwise circuits until none is left.
    pub fn minimum(&self, start: &FracOrientation) -> FracOrientation {
        let mut o = start.clone();
        while let Some(c) = self.cycles.iter().find(|c| is_ccw_circuit(&o, c)) {
            o = push_cycle(&self.ang.map, &o, c).expect("circuit checked");
        }
        o
    }

    /// All elements above `min`, by pushing clockwise circuits breadth first.
    pub fn enumerate_from(&self, min: &FracOrientation, cap: usize) -> Result<Vec<FracOrientation>> {
        let mut seen = HashSet::from([min.values.clone()]);
        let mut out = vec![min.clone()];
        let mut i = 0;
        while i < out.len() {
            let o = out[i].clone();
            i += 1;
            for c in &self.cycles {
                if let Ok(up) = push_cycle_back(&self.ang.map, &o, c) {
                    if seen.insert(up.values.clone()) {
                        if out.len() >= cap {
                            return Err(Error::ExplosionGuard(cap));
                        }
                        out.push(up);
                    }
                }
            }
        }
        Ok(out)
    }
}

/// The minimum of the lattice of d/(d-2) orientations.
pub fn minimal_orientation(ang: &AngulationView) -> Result<FracOrientation> {
    let start = compute_dd2_orientation(ang)?;
    Ok(Lattice::new(ang).minimum(&start))
}

/// Every d/(d-2) orientation of `ang`, minimum first.
pub fn lattice_enumerate(ang: &AngulationView, cap: usize) -> Result<Vec<FracOrientation>> {
    let lat = Lattice::new(ang);
    let min = lat.minimum(&compute_dd2_orientation(ang)?);
    lat.enumerate_from(&min, cap)
}

/// Every p/(p-1) orientation of a 2p-angulation, minimum first.
pub fn p_p1_lattice_enumerate(ang: &AngulationView, cap: usize) -> Result<Vec<FracOrientation>> {
    let lat = Lattice::new(ang);
    let min = lat.minimum(&compute_p_p1_orientation(ang)?);
    lat.enumerate_from(&min, cap)
}
