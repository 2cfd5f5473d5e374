//! Dart-based plane maps.
//!
//! A map is three arrays over darts: `origin`, `twin` and `next_cw` (the
//! next dart clockwise around the origin). Faces are the orbits of
//! `phi(d) = next_cw(twin(d))`; the face of `d` is the face on its left, so
//! inner faces are walked counterclockwise and the outer face clockwise.
//!
//! The corner `d` sits at `origin(d)`, between `d` and `next_cw(d)`, and lies
//! in `face(twin(d))`.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Dart = usize;
pub type Vertex = usize;
pub type Face = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneMap {
    origin: Vec<Vertex>,
    twin: Vec<Dart>,
    next_cw: Vec<Dart>,
    prev_cw: Vec<Dart>,
    face: Vec<Face>,
    vertex_dart: Vec<Dart>,
    face_dart: Vec<Dart>,
    edge_id: Vec<usize>,
    edge_dart: Vec<Dart>,
    outer_dart: Dart,
    root_vertex: Option<Vertex>,
}

/// JSON form of a map. Dart ids are array indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapFile {
    pub darts: Vec<DartRecord>,
    pub outer_dart: usize,
    pub root_vertex: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DartRecord {
    pub twin: usize,
    pub next_cw: usize,
    pub origin: usize,
}

impl PlaneMap {
    /// Builds a map from raw dart arrays. Loops are rejected.
    pub fn from_darts(
        origin: Vec<Vertex>,
        twin: Vec<Dart>,
        next_cw: Vec<Dart>,
        outer_dart: Dart,
        root_vertex: Option<Vertex>,
    ) -> Result<Self> {
        Self::assemble(origin, twin, next_cw, outer_dart, root_vertex, false)
    }

    /// Builds a map from per-vertex clockwise dart lists and a twin table.
    pub fn build_map(rotations: &[Vec<Dart>], twin: &[Dart], outer_dart: Dart) -> Result<Self> {
        let n = twin.len();
        let mut origin = vec![usize::MAX; n];
        let mut next_cw = vec![usize::MAX; n];
        for (v, rot) in rotations.iter().enumerate() {
            if rot.is_empty() {
                return Err(Error::MalformedRotation(format!("vertex {v} has no darts")));
            }
            for (i, &d) in rot.iter().enumerate() {
                if d >= n || origin[d] != usize::MAX {
                    return Err(Error::MalformedRotation(format!(
                        "dart {d} listed twice or out of range"
                    )));
                }
                origin[d] = v;
                next_cw[d] = rot[(i + 1) % rot.len()];
            }
        }
        if let Some(d) = origin.iter().position(|&o| o == usize::MAX) {
            return Err(Error::MalformedRotation(format!("dart {d} is not in any rotation")));
        }
        Self::from_darts(origin, twin.to_vec(), next_cw, outer_dart, None)
    }

    /// Builds a map from an edge list and, per vertex, the clockwise list of
    /// incident edge ids. Edge `e = (u, v)` owns darts `2e` (from `u`) and
    /// `2e + 1` (from `v`). `outer` names the dart whose left face is outer.
    pub fn from_edges(edges: &[(Vertex, Vertex)], rotations: &[Vec<usize>], outer: Dart) -> Result<Self> {
        let mut twin = Vec::with_capacity(2 * edges.len());
        for e in 0..edges.len() {
            twin.push(2 * e + 1);
            twin.push(2 * e);
        }
        let mut rot_darts = Vec::with_capacity(rotations.len());
        for (v, rot) in rotations.iter().enumerate() {
            let mut darts = Vec::with_capacity(rot.len());
            for &e in rot {
                let (a, b) = *edges
                    .get(e)
                    .ok_or_else(|| Error::MalformedRotation(format!("edge {e} out of range")))?;
                if a == v {
                    darts.push(2 * e);
                } else if b == v {
                    darts.push(2 * e + 1);
                } else {
                    return Err(Error::MalformedRotation(format!("edge {e} is not incident to {v}")));
                }
            }
            rot_darts.push(darts);
        }
        Self::build_map(&rot_darts, &twin, outer)
    }

    /// Builds a simple map from clockwise neighbour lists. The outer face is
    /// the face on the left of the dart `outer.0 -> outer.1`.
    pub fn from_neighbors(adj: &[Vec<Vertex>], outer: (Vertex, Vertex)) -> Result<Self> {
        let mut edges = Vec::new();
        let mut index = HashMap::new();
        for (u, nbrs) in adj.iter().enumerate() {
            for &v in nbrs {
                if u < v && !index.contains_key(&(u, v)) {
                    index.insert((u, v), edges.len());
                    edges.push((u, v));
                }
            }
        }
        let rotations: Vec<Vec<usize>> = adj
            .iter()
            .enumerate()
            .map(|(u, nbrs)| nbrs.iter().map(|&v| index[&(u.min(v), u.max(v))]).collect())
            .collect();
        let (a, b) = outer;
        let e = *index
            .get(&(a.min(b), a.max(b)))
            .ok_or_else(|| Error::MalformedRotation(format!("{a}-{b} is not an edge")))?;
        let dart = if edges[e].0 == a { 2 * e } else { 2 * e + 1 };
        Self::from_edges(&edges, &rotations, dart)
    }

    pub(crate) fn assemble(
        origin: Vec<Vertex>,
        twin: Vec<Dart>,
        next_cw: Vec<Dart>,
        outer_dart: Dart,
        root_vertex: Option<Vertex>,
        allow_loops: bool,
    ) -> Result<Self> {
        let n = twin.len();
        if n == 0 || origin.len() != n || next_cw.len() != n {
            return Err(Error::MalformedRotation("dart arrays are empty or of unequal length".into()));
        }
        if outer_dart >= n {
            return Err(Error::MalformedRotation(format!("outer dart {outer_dart} out of range")));
        }
        for d in 0..n {
            let t = twin[d];
            if t >= n || t == d || twin[t] != d {
                return Err(Error::MalformedRotation(format!("twin of dart {d} is not an involution")));
            }
            if !allow_loops && origin[d] == origin[t] {
                return Err(Error::MalformedRotation(format!("dart {d} is a loop")));
            }
        }
        let mut prev_cw = vec![usize::MAX; n];
        for d in 0..n {
            let s = next_cw[d];
            if s >= n || prev_cw[s] != usize::MAX {
                return Err(Error::MalformedRotation("next_cw is not a permutation".into()));
            }
            prev_cw[s] = d;
        }
        let vertex_count = origin.iter().copied().max().map_or(0, |m| m + 1);
        let mut vertex_dart = vec![usize::MAX; vertex_count];
        for d in 0..n {
            if origin[next_cw[d]] != origin[d] {
                return Err(Error::MalformedRotation(format!(
                    "next_cw of dart {d} leaves its origin"
                )));
            }
            if vertex_dart[origin[d]] == usize::MAX {
                vertex_dart[origin[d]] = d;
            }
        }
        if let Some(v) = vertex_dart.iter().position(|&d| d == usize::MAX) {
            return Err(Error::MalformedRotation(format!("vertex {v} has no darts")));
        }
        // Each vertex must be a single rotation orbit.
        let mut count = vec![0usize; vertex_count];
        for d in 0..n {
            count[origin[d]] += 1;
        }
        for v in 0..vertex_count {
            let start = vertex_dart[v];
            let (mut d, mut len) = (start, 0);
            loop {
                len += 1;
                d = next_cw[d];
                if d == start {
                    break;
                }
            }
            if len != count[v] {
                return Err(Error::MalformedRotation(format!("vertex {v} has several rotation cycles")));
            }
        }
        if root_vertex.is_some_and(|r| r >= vertex_count) {
            return Err(Error::MalformedRotation("root vertex out of range".into()));
        }
        let mut face = vec![usize::MAX; n];
        let mut face_dart = Vec::new();
        for d in 0..n {
            if face[d] != usize::MAX {
                continue;
            }
            let f = face_dart.len();
            face_dart.push(d);
            let mut x = d;
            while face[x] == usize::MAX {
                face[x] = f;
                x = next_cw[twin[x]];
            }
        }
        let mut edge_id = vec![0; n];
        let mut edge_dart = Vec::new();
        for d in 0..n {
            if d < twin[d] {
                edge_id[d] = edge_dart.len();
                edge_id[twin[d]] = edge_dart.len();
                edge_dart.push(d);
            }
        }
        let m = PlaneMap {
            origin,
            twin,
            next_cw,
            prev_cw,
            face,
            vertex_dart,
            face_dart,
            edge_id,
            edge_dart,
            outer_dart,
            root_vertex,
        };
        let mut seen = vec![false; vertex_count];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for d in m.darts_around(v) {
                let w = m.head(d);
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        if reached != vertex_count {
            return Err(Error::Disconnected);
        }
        let (v, e, f) = (m.vertex_count(), m.edge_count(), m.face_count());
        if v + f != e + 2 {
            return Err(Error::EulerViolation { v, e, f });
        }
        Ok(m)
    }

    pub fn from_file(file: &MapFile) -> Result<Self> {
        let origin = file.darts.iter().map(|d| d.origin).collect();
        let twin = file.darts.iter().map(|d| d.twin).collect();
        let next_cw = file.darts.iter().map(|d| d.next_cw).collect();
        Self::from_darts(origin, twin, next_cw, file.outer_dart, file.root_vertex)
    }

    pub fn to_file(&self) -> MapFile {
        MapFile {
            darts: (0..self.dart_count())
                .map(|d| DartRecord { twin: self.twin[d], next_cw: self.next_cw[d], origin: self.origin[d] })
                .collect(),
            outer_dart: self.outer_dart,
            root_vertex: self.root_vertex,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: MapFile = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        Self::from_file(&file)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("map serializes")
    }

    pub fn dart_count(&self) -> usize {
        self.twin.len()
    }
    pub fn vertex_count(&self) -> usize {
        self.vertex_dart.len()
    }
    pub fn edge_count(&self) -> usize {
        self.edge_dart.len()
    }
    pub fn face_count(&self) -> usize {
        self.face_dart.len()
    }
    pub fn origin(&self, d: Dart) -> Vertex {
        self.origin[d]
    }
    pub fn head(&self, d: Dart) -> Vertex {
        self.origin[self.twin[d]]
    }
    pub fn twin(&self, d: Dart) -> Dart {
        self.twin[d]
    }
    pub fn next_cw(&self, d: Dart) -> Dart {
        self.next_cw[d]
    }
    pub fn prev_cw(&self, d: Dart) -> Dart {
        self.prev_cw[d]
    }
    /// Next dart along the face on the left of `d`.
    pub fn phi(&self, d: Dart) -> Dart {
        self.next_cw[self.twin[d]]
    }
    pub fn phi_inv(&self, d: Dart) -> Dart {
        self.twin[self.prev_cw[d]]
    }
    /// Face on the left of `d`.
    pub fn face(&self, d: Dart) -> Face {
        self.face[d]
    }
    /// Face containing the corner `d`.
    pub fn corner_face(&self, d: Dart) -> Face {
        self.face[self.twin[d]]
    }
    pub fn edge_id(&self, d: Dart) -> usize {
        self.edge_id[d]
    }
    /// Canonical dart (the smaller id) of each edge, indexed by edge id.
    pub fn edge_darts(&self) -> &[Dart] {
        &self.edge_dart
    }
    pub fn outer_dart(&self) -> Dart {
        self.outer_dart
    }
    pub fn outer_face(&self) -> Face {
        self.face[self.outer_dart]
    }
    pub fn root_vertex(&self) -> Option<Vertex> {
        self.root_vertex
    }
    pub fn vertex_dart(&self, v: Vertex) -> Dart {
        self.vertex_dart[v]
    }
    pub fn face_dart(&self, f: Face) -> Dart {
        self.face_dart[f]
    }

    /// Darts out of `v` in clockwise order.
    pub fn darts_around(&self, v: Vertex) -> Vec<Dart> {
        self.orbit(self.vertex_dart[v], |d| self.next_cw[d])
    }

    /// Darts out of `origin(d)`, clockwise, starting at `d`.
    pub fn darts_around_from(&self, d: Dart) -> Vec<Dart> {
        self.orbit(d, |x| self.next_cw[x])
    }

    /// Darts having `f` on their left, in `phi` order.
    pub fn face_darts(&self, f: Face) -> Vec<Dart> {
        self.orbit(self.face_dart[f], |d| self.phi(d))
    }

    pub fn face_darts_from(&self, d: Dart) -> Vec<Dart> {
        self.orbit(d, |x| self.phi(x))
    }

    fn orbit(&self, start: Dart, step: impl Fn(Dart) -> Dart) -> Vec<Dart> {
        let mut out = vec![start];
        let mut d = step(start);
        while d != start {
            out.push(d);
            d = step(d);
        }
        out
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.darts_around(v).len()
    }

    pub fn face_degree(&self, f: Face) -> usize {
        self.face_darts(f).len()
    }

    /// True when the edge of `d` borders the outer face.
    pub fn is_external_dart(&self, d: Dart) -> bool {
        let o = self.outer_face();
        self.face[d] == o || self.face[self.twin[d]] == o
    }

    /// Per-vertex flag: incident to the outer face.
    pub fn external_vertices(&self) -> Vec<bool> {
        let mut ext = vec![false; self.vertex_count()];
        for d in self.face_darts(self.outer_face()) {
            ext[self.origin[d]] = true;
        }
        ext
    }

    /// Same map with another designated outer dart.
    pub fn with_outer_dart(&self, d: Dart) -> PlaneMap {
        let mut m = self.clone();
        m.outer_dart = d;
        m
    }

    pub fn with_root_vertex(&self, r: Option<Vertex>) -> PlaneMap {
        let mut m = self.clone();
        m.root_vertex = r;
        m
    }

    /// Dual map on the same dart ids: dart `d` of the dual crosses the edge
    /// of `d` from its left face to its right face. The dual is rooted at the
    /// vertex of the outer face and keeps `outer_dart`.
    pub fn dual(&self) -> PlaneMap {
        let n = self.dart_count();
        let origin = self.face.clone();
        let twin = self.twin.clone();
        let next_cw = (0..n).map(|d| self.twin[self.prev_cw[d]]).collect();
        let root = self.outer_face();
        PlaneMap::assemble(origin, twin, next_cw, self.outer_dart, Some(root), true)
            .expect("dual of a valid map is valid")
    }

    /// Black/white 2-colouring with `anchor` black, if the map is bipartite.
    pub fn bipartition(&self, anchor: Vertex) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.vertex_count()];
        color[anchor] = Some(true);
        let mut queue = VecDeque::from([anchor]);
        while let Some(v) = queue.pop_front() {
            let c = color[v].unwrap();
            for d in self.darts_around(v) {
                let w = self.head(d);
                match color[w] {
                    None => {
                        color[w] = Some(!c);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == c => return None,
                    _ => {}
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap()).collect())
    }

    /// Length of a shortest cycle.
    pub fn girth(&self) -> Result<usize> {
        self.shortest_cycle().map(|c| c.len())
    }

    /// Darts of a shortest cycle, as a closed walk.
    pub fn shortest_cycle(&self) -> Result<Vec<Dart>> {
        let nv = self.vertex_count();
        let mut best: Option<Vec<Dart>> = None;
        for d in 0..self.dart_count() {
            if self.origin[d] == self.head(d) {
                return Ok(vec![d]);
            }
        }
        for s in 0..nv {
            let mut dist = vec![usize::MAX; nv];
            let mut parent = vec![usize::MAX; nv];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                if best.as_ref().is_some_and(|b| 2 * dist[u] + 1 >= b.len() + 1) {
                    break;
                }
                for d in self.darts_around(u) {
                    if parent[u] != usize::MAX && d == self.twin[parent[u]] {
                        continue;
                    }
                    let w = self.head(d);
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = d;
                        queue.push_back(w);
                    } else {
                        let len = dist[u] + dist[w] + 1;
                        if best.as_ref().is_none_or(|b| len < b.len()) {
                            best = Some(self.close_cycle(s, &parent, d));
                        }
                    }
                }
            }
        }
        best.ok_or(Error::Acyclic)
    }

    // Cycle made of the tree paths to both ends of `d` plus `d` itself.
    fn close_cycle(&self, s: Vertex, parent: &[Dart], d: Dart) -> Vec<Dart> {
        let path_to = |mut v: Vertex| {
            let mut p = Vec::new();
            while v != s {
                p.push(parent[v]);
                v = self.origin[parent[v]];
            }
            p.reverse();
            p
        };
        let pu = path_to(self.origin[d]);
        let pw = path_to(self.head(d));
        let common = pu.iter().zip(&pw).take_while(|(a, b)| a == b).count();
        let mut cycle: Vec<Dart> = pu[common..].to_vec();
        cycle.push(d);
        cycle.extend(pw[common..].iter().rev().map(|&x| self.twin[x]));
        cycle
    }

    /// Every edge cut has at least `d` edges.
    pub fn mincut_at_least(&self, d: usize) -> bool {
        match self.dual().girth() {
            Ok(g) => g >= d,
            // The dual is a tree only when it has a single vertex.
            Err(_) => false,
        }
    }

    /// Rooted canonical code: darts relabelled in BFS order from `root`,
    /// then the `(twin, next_cw)` pairs listed in that order.
    pub fn canonical_code(&self, root: Dart) -> Vec<usize> {
        let n = self.dart_count();
        let mut label = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        label[root] = 0;
        order.push(root);
        let mut i = 0;
        while i < order.len() {
            let d = order[i];
            i += 1;
            for x in [self.twin[d], self.next_cw[d]] {
                if label[x] == usize::MAX {
                    label[x] = order.len();
                    order.push(x);
                }
            }
        }
        let mut code = Vec::with_capacity(2 * n);
        for &d in &order {
            code.push(label[self.twin[d]]);
            code.push(label[self.next_cw[d]]);
        }
        code
    }

    /// Orientation-preserving isomorphism sending outer dart to outer dart.
    pub fn is_rooted_isomorphic(&self, other: &PlaneMap) -> bool {
        self.dart_count() == other.dart_count()
            && self.canonical_code(self.outer_dart) == other.canonical_code(other.outer_dart)
    }

    /// Orientation-preserving isomorphism, ignoring roots.
    pub fn is_isomorphic(&self, other: &PlaneMap) -> bool {
        if self.dart_count() != other.dart_count() {
            return false;
        }
        let code = self.canonical_code(self.outer_dart);
        (0..other.dart_count()).any(|r| other.canonical_code(r) == code)
    }

    /// Lexicographically least code over all roots.
    pub fn unrooted_code(&self) -> Vec<usize> {
        (0..self.dart_count()).map(|r| self.canonical_code(r)).min().unwrap()
    }

    pub fn as_angulation(&self, d: usize) -> Result<AngulationView> {
        let view = self.as_angulation_relaxed(d)?;
        if !view.external_distinct() {
            return Err(Error::ExternalVerticesNotDistinct);
        }
        Ok(view)
    }

    /// Like [`as_angulation`](Self::as_angulation) but allows repeated
    /// vertices on the outer face.
    pub fn as_angulation_relaxed(&self, d: usize) -> Result<AngulationView> {
        if d < 2 {
            return Err(Error::NotDAngulation { face: 0, degree: 0, d });
        }
        for f in 0..self.face_count() {
            let degree = self.face_degree(f);
            if degree != d {
                return Err(Error::NotDAngulation { face: f, degree, d });
            }
        }
        let outer = self.face_darts_from(self.outer_dart);
        let external = outer.iter().map(|&x| self.origin[x]).collect();
        Ok(AngulationView { map: self.clone(), d, external, outer })
    }

    pub fn as_regular(&self, d: usize, root: Vertex) -> Result<RegularView> {
        if root >= self.vertex_count() {
            return Err(Error::Format(format!("root {root} out of range")));
        }
        for v in 0..self.vertex_count() {
            let degree = self.degree(v);
            if degree != d {
                return Err(Error::NotDRegular { vertex: v, degree, d });
            }
        }
        let od = self.outer_dart;
        let e1 = if self.origin[od] == root {
            od
        } else if self.head(od) == root {
            self.twin[od]
        } else {
            self.vertex_dart[root]
        };
        let mut root_edges = vec![e1];
        for _ in 1..d {
            let last = *root_edges.last().unwrap();
            root_edges.push(self.prev_cw[last]);
        }
        let root_faces = root_edges.iter().map(|&e| self.corner_face(e)).collect();
        let map = self.with_root_vertex(Some(root));
        Ok(RegularView { map, d, root, root_edges, root_faces })
    }
}

/// A d-angulation with its outer vertices `u_1..u_d` in clockwise order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AngulationView {
    pub map: PlaneMap,
    pub d: usize,
    /// `external[i]` is `u_{i+1}`.
    pub external: Vec<Vertex>,
    /// `outer[i]` is the outer-face dart from `u_{i+1}` to `u_{i+2}`.
    pub outer: Vec<Dart>,
}

impl AngulationView {
    pub fn external_distinct(&self) -> bool {
        let mut seen = self.external.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len() == self.external.len()
    }

    /// 1-based index `i` with `u_i = v`, if `v` is external.
    pub fn external_index(&self, v: Vertex) -> Option<usize> {
        self.external.iter().position(|&u| u == v).map(|i| i + 1)
    }

    pub fn is_internal_dart(&self, d: Dart) -> bool {
        !self.map.is_external_dart(d)
    }

    /// Canonical darts of the internal edges.
    pub fn internal_edges(&self) -> Vec<Dart> {
        self.map.edge_darts().iter().copied().filter(|&d| self.is_internal_dart(d)).collect()
    }

    pub fn internal_vertices(&self) -> Vec<Vertex> {
        let ext = self.map.external_vertices();
        (0..self.map.vertex_count()).filter(|&v| !ext[v]).collect()
    }
}

/// A d-regular map rooted at `root`, with root edges `e_1*..e_d*` in
/// counterclockwise order and root faces `f_1*..f_d*`; the corner `e_i*`
/// lies in `f_i*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularView {
    pub map: PlaneMap,
    pub d: usize,
    pub root: Vertex,
    pub root_edges: Vec<Dart>,
    pub root_faces: Vec<Face>,
}

impl RegularView {
    /// Head of `e_i*` (0-based index).
    pub fn root_neighbor(&self, i: usize) -> Vertex {
        self.map.head(self.root_edges[i])
    }

    /// 1-based index of the root face `f`, if it is one.
    pub fn root_face_index(&self, f: Face) -> Option<usize> {
        self.root_faces.iter().position(|&g| g == f).map(|i| i + 1)
    }

    pub fn is_root_dart(&self, d: Dart) -> bool {
        self.map.origin(d) == self.root || self.map.head(d) == self.root
    }

    /// The angulation `G` whose dual is this map, sharing dart ids: dart `x`
    /// of `G` crosses dart `x` here, `G`'s vertices are the faces of this map
    /// and its external vertices `u_i` are the root faces `f_i*`.
    pub fn primal(&self) -> Result<AngulationView> {
        let m = &self.map;
        let n = m.dart_count();
        let origin = (0..n).map(|x| m.corner_face(x)).collect();
        let twin = (0..n).map(|x| m.twin(x)).collect();
        let mut next_cw = vec![0; n];
        for x in 0..n {
            next_cw[m.twin(m.next_cw(x))] = x;
        }
        let g = PlaneMap::assemble(origin, twin, next_cw, self.root_edges[0], None, false)?;
        g.as_angulation(self.d)
    }
}

pub mod fixtures;
pub mod generate;
