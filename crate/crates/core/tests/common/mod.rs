//! Test corpus and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::VecDeque;
use std::sync::OnceLock;

use rand::Rng;

use schnyder_kit::planar_map::fixtures::*;
use schnyder_kit::planar_map::generate::angulation_classes;
use schnyder_kit::planar_map::{AngulationView, PlaneMap};

/// Girth-d angulations: fixtures plus every isomorphism class up to a
/// small face count.
pub fn corpus() -> Vec<AngulationView> {
    static CORPUS: OnceLock<Vec<AngulationView>> = OnceLock::new();
    CORPUS.get_or_init(build_corpus).clone()
}

fn build_corpus() -> Vec<AngulationView> {
    let mut maps: Vec<(usize, PlaneMap)> = vec![
        (3, tetrahedron()),
        (3, stacked_two()),
        (3, stacked_three_spread()),
        (3, octahedron()),
        (4, cube()),
        (4, k23()),
        (5, dodecahedron()),
        (6, hex_rings()),
    ];
    for d in 3..=6 {
        maps.push((d, cycle(d)));
    }
    for (d, max_faces) in [(3, 8), (4, 7), (5, 4), (6, 3)] {
        for faces in 3..=max_faces {
            for m in angulation_classes(d, faces, true) {
                maps.push((d, m));
            }
        }
    }
    maps.into_iter().map(|(d, m)| m.as_angulation(d).expect("corpus map is a girth-d angulation")).collect()
}

/// Corpus members with at most `max_edges` internal edges.
pub fn small_corpus(max_edges: usize) -> Vec<AngulationView> {
    corpus().into_iter().filter(|a| a.internal_edges().len() <= max_edges).collect()
}

/// Every assignment of values in `0..=k` to the oriented edges giving
/// outdegree `alpha`, found by backtracking over edges.
pub fn brute_orientations(map: &PlaneMap, oriented: &[bool], alpha: &[usize], k: i32) -> Vec<Vec<i32>> {
    let edges: Vec<usize> = map.edge_darts().iter().copied().filter(|&d| oriented[map.edge_id(d)]).collect();
    let mut remaining = vec![0usize; map.vertex_count()];
    for &d in &edges {
        remaining[map.origin(d)] += 1;
        remaining[map.head(d)] += 1;
    }
    let mut values = vec![-1; map.dart_count()];
    let mut out_sum = vec![0i32; map.vertex_count()];
    let mut found = Vec::new();
    fn go(
        i: usize,
        map: &PlaneMap,
        edges: &[usize],
        alpha: &[usize],
        k: i32,
        values: &mut Vec<i32>,
        out_sum: &mut Vec<i32>,
        remaining: &mut Vec<usize>,
        found: &mut Vec<Vec<i32>>,
    ) {
        if i == edges.len() {
            if (0..alpha.len()).all(|v| out_sum[v] == alpha[v] as i32) {
                found.push(values.clone());
            }
            return;
        }
        let d = edges[i];
        let (a, b) = (map.origin(d), map.head(d));
        remaining[a] -= 1;
        remaining[b] -= 1;
        for x in 0..=k {
            out_sum[a] += x;
            out_sum[b] += k - x;
            let ok = |v: usize| {
                let left = alpha[v] as i32 - out_sum[v];
                left >= 0 && left <= k * remaining[v] as i32
            };
            if ok(a) && ok(b) {
                values[d] = x;
                values[map.twin(d)] = k - x;
                go(i + 1, map, edges, alpha, k, values, out_sum, remaining, found);
            }
            out_sum[a] -= x;
            out_sum[b] -= k - x;
        }
        values[d] = -1;
        values[map.twin(d)] = -1;
        remaining[a] += 1;
        remaining[b] += 1;
    }
    go(0, map, &edges, alpha, k, &mut values, &mut out_sum, &mut remaining, &mut found);
    found
}

/// Face potential of the circulation `y - x`, zero on the outer face:
/// `(y - x)(d) = p(face left of d) - p(face right of d)`.
pub fn face_potential(map: &PlaneMap, x: &[i32], y: &[i32]) -> Vec<i64> {
    let delta = |d: usize| if x[d] < 0 { 0 } else { (y[d] - x[d]) as i64 };
    let mut p = vec![i64::MIN; map.face_count()];
    let outer = map.outer_face();
    p[outer] = 0;
    let mut queue = VecDeque::from([outer]);
    while let Some(f) = queue.pop_front() {
        for d in map.face_darts(f) {
            let g = map.face(map.twin(d));
            let want = p[f] - delta(d);
            if p[g] == i64::MIN {
                p[g] = want;
                queue.push_back(g);
            } else {
                assert_eq!(p[g], want, "difference is not a circulation");
            }
        }
    }
    p
}

/// `x <= y` in the lattice order: the potential of `y - x` is nonnegative.
pub fn below(map: &PlaneMap, x: &[i32], y: &[i32]) -> bool {
    face_potential(map, x, y).iter().all(|&p| p >= 0)
}

/// `k` nested 4-cycles joined radially, with a vertex inside the first and
/// one outside the last: 4-regular of mincut 4.
pub fn capped_cylinder(k: usize) -> PlaneMap {
    let ring = |i: usize, j: usize| 1 + 4 * i + j % 4;
    let top = 4 * k + 1;
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); 4 * k + 2];
    adj[0] = (0..4).rev().map(|j| ring(0, j)).collect();
    adj[top] = (0..4).map(|j| ring(k - 1, j)).collect();
    for i in 0..k {
        for j in 0..4 {
            let inward = if i == 0 { 0 } else { ring(i - 1, j) };
            let outward = if i + 1 == k { top } else { ring(i + 1, j) };
            adj[ring(i, j)] = vec![outward, ring(i, j + 3), inward, ring(i, j + 1)];
        }
    }
    PlaneMap::from_neighbors(&adj, (0, ring(0, 0))).unwrap()
}

/// Random simple quadrangulation with `faces` faces, grown from the cube by
/// splitting a random face along a random diagonal with a new vertex of
/// degree 2. Bipartite and simple, so its dual is 4-regular of mincut 4.
pub fn random_quadrangulation(faces: usize, rng: &mut impl Rng) -> PlaneMap {
    let cube = cube();
    let mut rot: Vec<Vec<usize>> =
        (0..cube.vertex_count()).map(|v| cube.darts_around(v).into_iter().map(|x| cube.head(x)).collect()).collect();
    // Faces as vertex cycles along phi: after u -> v comes v -> (cw successor of u at v).
    let mut quads: Vec<[usize; 4]> = (0..cube.face_count())
        .map(|f| {
            let o: Vec<usize> = cube.face_darts(f).into_iter().map(|x| cube.origin(x)).collect();
            [o[0], o[1], o[2], o[3]]
        })
        .collect();
    let insert_after = |list: &mut Vec<usize>, after: usize, v: usize| {
        let i = list.iter().position(|&w| w == after).expect("neighbor present");
        list.insert(i + 1, v);
    };
    while quads.len() < faces {
        let k = rng.gen_range(0..quads.len());
        let s = rng.gen_range(0..2);
        let q = quads[k];
        let [a, b, c, d] = [q[s], q[s + 1], q[s + 2], q[(s + 3) % 4]];
        let v = rot.len();
        insert_after(&mut rot[c], b, v);
        insert_after(&mut rot[a], d, v);
        rot.push(vec![c, a]);
        quads[k] = [a, b, c, v];
        quads.push([c, d, a, v]);
    }
    PlaneMap::from_neighbors(&rot, (quads[0][0], quads[0][1])).unwrap()
}
