//! Pairs (simple quadrangulation `Q` with `n` faces, even Schnyder
//! decomposition) encoded as degree-sequence triples, uniform sampling by
//! rejection, exhaustive enumeration and the grid-size experiment.
//!
//! With reduced forests `F_1', F_2'`, `T_1' = F_1' + {u_1u_2, u_1u_4}` is a
//! plane tree on every vertex but `u_3`, rooted at the outer corner of
//! `u_1`, and `T_2' = F_2' + {u_3u_2, u_3u_4}` one on every vertex but
//! `u_1`. Walking clockwise around `T_1'` from its root corner, every
//! non-root black vertex carries its `T_2'` edges in the first corner it
//! shows (incoming edges, then the outgoing one) and every white vertex in
//! the last (outgoing edge, then incoming ones). A white outgoing edge ends
//! at a later black corner or at `u_3`; a black outgoing edge at an earlier
//! white corner. Planarity then forces the matching, which makes the
//! closure in [`decode`] a stack sweep.

use std::fmt::Write as _;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::drawing::{balanced_reduction_choice, classify_faces, draw, FaceClass};
use crate::duality::{chi, DualPair};
use crate::error::{DecodeStage, Error, Result};
use crate::even::{black_vertices, lambda, lambda_inverse, ReducedSchnyderDecomposition};
use crate::orientation::p_p1_lattice_enumerate;
use crate::planar_map::generate::for_each_rooted_angulation;
use crate::planar_map::{AngulationView, Dart, PlaneMap, Vertex};
use crate::schnyder::{bit, phi, psi_inverse, SchnyderDecomposition};

pub const DEFAULT_MAX_ATTEMPTS: u64 = 1_000_000;
/// Largest face count `enumerate_pairs` accepts.
pub const ENUMERATION_FACE_CAP: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EncodingTriple {
    pub alpha: Vec<u32>,
    pub beta: Vec<u32>,
    pub gamma: Vec<u32>,
}

impl EncodingTriple {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("triple serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
    }
}

/// A simple quadrangulation with an even Schnyder decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenPair {
    pub quad: AngulationView,
    pub schnyder: SchnyderDecomposition,
}

impl EvenPair {
    pub fn faces(&self) -> usize {
        self.quad.map.face_count()
    }

    pub fn reduced(&self) -> Result<ReducedSchnyderDecomposition> {
        lambda(&self.quad, &self.schnyder)
    }

    /// Rooted relabelling invariant: darts numbered in breadth-first order
    /// from the outer dart, each listed with its twin, clockwise successor
    /// and colors.
    pub fn code(&self) -> Vec<u64> {
        let m = &self.quad.map;
        let mut label = vec![usize::MAX; m.dart_count()];
        let mut order = vec![m.outer_dart()];
        label[m.outer_dart()] = 0;
        let mut k = 0;
        while k < order.len() {
            let x = order[k];
            for y in [m.twin(x), m.next_cw(x)] {
                if label[y] == usize::MAX {
                    label[y] = order.len();
                    order.push(y);
                }
            }
            k += 1;
        }
        order
            .iter()
            .flat_map(|&x| [label[m.twin(x)] as u64, label[m.next_cw(x)] as u64, self.schnyder.colors[x]])
            .collect()
    }
}

/// Parent darts in `T_1'` and `T_2'`.
struct Trees {
    parent: [Vec<Option<Dart>>; 2],
}

fn trees(ang: &AngulationView, rs: &ReducedSchnyderDecomposition) -> Trees {
    let m = &ang.map;
    let (u, o) = (&ang.external, &ang.outer);
    let mut parent = [vec![None; m.vertex_count()], vec![None; m.vertex_count()]];
    for x in 0..m.dart_count() {
        for k in 0..2 {
            if rs.colors[x] & bit(k as u32 + 1) != 0 {
                parent[k][m.origin(x)] = Some(x);
            }
        }
    }
    parent[0][u[1]] = Some(m.twin(o[0]));
    parent[0][u[3]] = Some(o[3]);
    parent[1][u[1]] = Some(o[1]);
    parent[1][u[3]] = Some(m.twin(o[2]));
    Trees { parent }
}

fn check_quad(ang: &AngulationView) -> Result<()> {
    if ang.d != 4 {
        return Err(Error::Format(format!("expected a quadrangulation, got d = {}", ang.d)));
    }
    if ang.map.face_count() < 3 {
        return Err(Error::Format("the quadrangulation has no internal vertex".into()));
    }
    Ok(())
}

/// The triple `(alpha, beta, gamma)`: `T_1'`-degrees of black vertices and
/// of white vertices, and `T_2'`-degrees of white vertices, in clockwise
/// discovery order around `T_1'`.
pub fn encode(ang: &AngulationView, s: &SchnyderDecomposition) -> Result<EncodingTriple> {
    check_quad(ang)?;
    let rs = lambda(ang, s)?;
    let m = &ang.map;
    let black = black_vertices(ang)?;
    let t = trees(ang, &rs);
    let in_t1 = |x: Dart| t.parent[0][m.origin(x)] == Some(x) || t.parent[0][m.head(x)] == Some(m.twin(x));
    let degree = |k: usize, v: Vertex| {
        m.darts_around(v)
            .into_iter()
            .filter(|&x| t.parent[k][m.origin(x)] == Some(x) || t.parent[k][m.head(x)] == Some(m.twin(x)))
            .count() as u32
    };
    let mut seen = vec![false; m.vertex_count()];
    let mut order = vec![ang.external[0]];
    seen[ang.external[0]] = true;
    let first = ang.outer[0];
    let mut y = first;
    loop {
        let v = m.head(y);
        if !seen[v] {
            seen[v] = true;
            order.push(v);
        }
        let mut x = m.next_cw(m.twin(y));
        while !in_t1(x) {
            x = m.next_cw(x);
        }
        y = x;
        if y == first {
            break;
        }
    }
    let mut triple = EncodingTriple { alpha: Vec::new(), beta: Vec::new(), gamma: Vec::new() };
    for &v in &order {
        if black[v] {
            triple.alpha.push(degree(0, v));
        } else {
            triple.beta.push(degree(0, v));
            triple.gamma.push(degree(1, v));
        }
    }
    Ok(triple)
}

fn invalid(stage: DecodeStage) -> Error {
    Error::Invalid(stage)
}

struct Node {
    black: bool,
    /// Position in `alpha` or `beta`.
    index: usize,
    children: Vec<usize>,
}

/// Rebuilds the plane tree `T_1'` in preorder: the root has `alpha_1`
/// children, every other vertex one fewer than its degree.
fn rebuild_tree(t: &EncodingTriple) -> Result<Vec<Node>> {
    let bad = || invalid(DecodeStage::TreeReconstructionFailed);
    let n: u32 = t.alpha.iter().sum();
    let sums_ok = t.beta.iter().sum::<u32>() == n && t.gamma.iter().sum::<u32>() == n;
    let ones = t.alpha.iter().chain(&t.beta).chain(&t.gamma).all(|&a| a >= 1);
    if !sums_ok || !ones || t.beta.len() != t.gamma.len() || t.alpha.len() + t.beta.len() != n as usize + 1 {
        return Err(bad());
    }
    let mut nodes = vec![Node { black: true, index: 0, children: Vec::new() }];
    let (mut next_black, mut next_white) = (1, 0);
    let mut stack = vec![(0usize, t.alpha[0])];
    while let Some(top) = stack.last_mut() {
        if top.1 == 0 {
            stack.pop();
            continue;
        }
        top.1 -= 1;
        let parent = top.0;
        let black = !nodes[parent].black;
        let (index, degree) = if black {
            let i = next_black;
            next_black += 1;
            (i, *t.alpha.get(i).ok_or_else(bad)?)
        } else {
            let i = next_white;
            next_white += 1;
            (i, *t.beta.get(i).ok_or_else(bad)?)
        };
        let id = nodes.len();
        nodes.push(Node { black, index, children: Vec::new() });
        nodes[parent].children.push(id);
        stack.push((id, degree - 1));
    }
    if next_black != t.alpha.len() || next_white != t.beta.len() {
        return Err(bad());
    }
    Ok(nodes)
}

enum Open {
    WhiteOut(usize),
    WhiteIn(usize, usize),
}

/// Inverse of [`encode`]. Rejects any triple whose closure is not a simple
/// quadrangulation with a valid even Schnyder decomposition.
pub fn decode(t: &EncodingTriple) -> Result<EvenPair> {
    let nodes = rebuild_tree(t)?;
    let closure = || invalid(DecodeStage::ClosureFailed);
    let root_children = &nodes[0].children;
    if root_children.len() < 2 {
        return Err(closure());
    }
    let u3 = nodes.len();
    let vertex_count = u3 + 1;
    // Darts 2e and 2e + 1 form edge e; the even one leaves the child.
    let mut twin = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut new_edge = |child: usize, parent: usize| {
        let e = edges.len();
        edges.push((child, parent));
        twin.push(2 * e + 1);
        twin.push(2 * e);
        e
    };
    let mut up1 = vec![usize::MAX; nodes.len()];
    for (v, node) in nodes.iter().enumerate() {
        for &c in &node.children {
            up1[c] = new_edge(c, v);
        }
    }
    // T_2' edges from the stack sweep, in preorder with exits.
    let mut up2 = vec![usize::MAX; vertex_count];
    let mut ins: Vec<Vec<usize>> = (0..nodes.len()).map(|v| vec![usize::MAX; in_slots(t, &nodes[v])]).collect();
    let mut black_ins: Vec<Vec<usize>> = vec![Vec::new(); vertex_count];
    let mut stack: Vec<Open> = Vec::new();
    enum Step {
        Enter(usize),
        Leave(usize),
    }
    let mut walk = vec![Step::Enter(0)];
    while let Some(step) = walk.pop() {
        match step {
            Step::Enter(v) => {
                if v != 0 && nodes[v].black {
                    while let Some(&Open::WhiteOut(w)) = stack.last() {
                        stack.pop();
                        let e = new_edge(w, v);
                        up2[w] = e;
                        black_ins[v].push(e);
                    }
                    let Some(Open::WhiteIn(w, slot)) = stack.pop() else { return Err(closure()) };
                    let e = new_edge(v, w);
                    up2[v] = e;
                    ins[w][slot] = e;
                }
                walk.push(Step::Leave(v));
                for &c in nodes[v].children.iter().rev() {
                    walk.push(Step::Enter(c));
                }
            }
            Step::Leave(v) => {
                if !nodes[v].black {
                    stack.push(Open::WhiteOut(v));
                    for slot in 0..ins[v].len() {
                        stack.push(Open::WhiteIn(v, slot));
                    }
                }
            }
        }
    }
    // What is left must be white outgoing edges to u_3, latest first
    // clockwise around u_3.
    let mut around_u3 = Vec::new();
    while let Some(open) = stack.pop() {
        let Open::WhiteOut(w) = open else { return Err(closure()) };
        let e = new_edge(w, u3);
        up2[w] = e;
        around_u3.push(2 * e + 1);
    }
    let mut rotations: Vec<Vec<Dart>> = vec![Vec::new(); vertex_count];
    for (v, node) in nodes.iter().enumerate() {
        let rot = &mut rotations[v];
        let down: Vec<Dart> = node.children.iter().map(|&c| 2 * up1[c] + 1).collect();
        if v == 0 {
            rot.extend(down);
            continue;
        }
        rot.push(2 * up1[v]);
        if node.black {
            rot.extend(black_ins[v].iter().map(|&e| 2 * e + 1));
            rot.push(2 * up2[v]);
            rot.extend(down);
        } else {
            rot.extend(down);
            rot.push(2 * up2[v]);
            rot.extend(ins[v].iter().map(|&e| 2 * e + 1));
        }
    }
    rotations[u3] = around_u3;
    let outer = 2 * up1[root_children[0]] + 1;
    let validation = || invalid(DecodeStage::ValidationFailed);
    let map = PlaneMap::build_map(&rotations, &twin, outer).map_err(|_| validation())?;
    let u2 = root_children[0];
    let u4 = *root_children.last().expect("two children");
    let ang = map.as_angulation(4).map_err(|_| validation())?;
    if ang.external != [0, u2, u3, u4] || map.girth().map_or(true, |g| g < 4) {
        return Err(validation());
    }
    let internal = |v: usize| v != 0 && v != u2 && v != u3 && v != u4;
    let mut colors = vec![0; map.dart_count()];
    for v in (0..nodes.len()).filter(|&v| internal(v)) {
        colors[2 * up1[v]] |= bit(1);
        colors[2 * up2[v]] |= bit(2);
    }
    let rs = ReducedSchnyderDecomposition { p: 2, colors };
    let schnyder = lambda_inverse(&ang, &rs).map_err(|_| validation())?;
    Ok(EvenPair { quad: ang, schnyder })
}

/// `gamma - 1` incoming `T_2'` slots at white vertices, none at black ones
/// (those are discovered by the sweep).
fn in_slots(t: &EncodingTriple, node: &Node) -> usize {
    if node.black {
        0
    } else {
        t.gamma[node.index] as usize - 1
    }
}

/// `P(k) = 2^-k`, truncated at 65 (probability `2^-64`).
fn geometric(rng: &mut impl RngCore) -> u32 {
    1 + rng.next_u64().trailing_ones()
}

/// Independent 2-geometric values: `alpha` stops once its sum reaches `n`,
/// after `r` terms, then `beta` and `gamma` get `n - r + 1` terms each.
pub fn sample_geometric_triple(n: usize, rng: &mut impl RngCore) -> EncodingTriple {
    let mut alpha = Vec::new();
    let mut sum = 0;
    while sum < n as u32 {
        let a = geometric(rng);
        sum += a;
        alpha.push(a);
    }
    let len = n - alpha.len() + 1;
    let beta = (0..len).map(|_| geometric(rng)).collect();
    let gamma = (0..len).map(|_| geometric(rng)).collect();
    EncodingTriple { alpha, beta, gamma }
}

/// Fills `out` with `len` geometric values summing to `n`, or gives up as
/// soon as that is impossible. Abandoned draws belong to a rejected triple,
/// so skipping them leaves the accepted law unchanged.
fn draw_exact(n: u32, len: usize, rng: &mut impl RngCore, out: &mut Vec<u32>) -> bool {
    out.clear();
    let mut sum = 0;
    for k in 0..len {
        let v = geometric(rng);
        sum += v;
        // The remaining terms are at least 1 each.
        if sum + (len - k - 1) as u32 > n {
            return false;
        }
        out.push(v);
    }
    sum == n
}

#[derive(Debug, Clone)]
pub struct Sample {
    pub pair: EvenPair,
    pub triple: EncodingTriple,
    pub attempts: u64,
}

/// Draws geometric triples until one decodes. Each valid triple has
/// probability `8^-n`, so the accepted pair is uniform. Triples whose sums
/// cannot match are screened out before decoding.
pub fn rejection_sample(n: usize, rng: &mut impl RngCore, max_attempts: u64) -> Result<Sample> {
    if n < 3 {
        return Err(Error::Format(format!("n = {n} leaves no internal vertex")));
    }
    let mut t = EncodingTriple { alpha: Vec::with_capacity(n), beta: Vec::with_capacity(n), gamma: Vec::with_capacity(n) };
    for attempts in 1..=max_attempts {
        t.alpha.clear();
        let mut sum = 0;
        while sum < n as u32 {
            let a = geometric(rng);
            sum += a;
            t.alpha.push(a);
        }
        if sum != n as u32 {
            continue;
        }
        let len = n - t.alpha.len() + 1;
        if !draw_exact(n as u32, len, rng, &mut t.beta) || !draw_exact(n as u32, len, rng, &mut t.gamma) {
            continue;
        }
        if let Ok(pair) = decode(&t) {
            return Ok(Sample { pair, triple: t, attempts });
        }
    }
    Err(Error::RejectionLimitExceeded(max_attempts))
}

/// Partly and fully reducible counts over the white vertices of a triple.
pub fn part_full_counts(t: &EncodingTriple) -> (usize, usize) {
    count_classes(t.beta.iter().zip(&t.gamma).map(|(&b, &g)| (b, g)))
}

fn count_classes(degrees: impl Iterator<Item = (u32, u32)>) -> (usize, usize) {
    let (mut part, mut full) = (0, 0);
    for (d1, d2) in degrees {
        if (d1, d2) == (2, 2) {
            part += 1;
        } else if d1 >= 2 && d2 >= 2 {
            full += 1;
        }
    }
    (part, full)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct PartFull {
    pub white_part: usize,
    pub white_full: usize,
    pub black_part: usize,
    pub black_full: usize,
}

impl PartFull {
    pub fn part(&self) -> usize {
        self.white_part + self.black_part
    }

    pub fn full(&self) -> usize {
        self.white_full + self.black_full
    }
}

/// Tree degrees `(d_1, d_2)` of every internal vertex, classified, split by
/// vertex color.
pub fn part_full_of_pair(pair: &EvenPair) -> Result<PartFull> {
    let ang = &pair.quad;
    let m = &ang.map;
    let t = trees(ang, &pair.reduced()?);
    let black = black_vertices(ang)?;
    let mut deg = [vec![0u32; m.vertex_count()], vec![0u32; m.vertex_count()]];
    for k in 0..2 {
        for v in 0..m.vertex_count() {
            if let Some(x) = t.parent[k][v] {
                deg[k][v] += 1;
                deg[k][m.head(x)] += 1;
            }
        }
    }
    let internal = ang.internal_vertices();
    let of = |b: bool| count_classes(internal.iter().filter(|&&v| black[v] == b).map(|&v| (deg[0][v], deg[1][v])));
    let ((white_part, white_full), (black_part, black_full)) = (of(false), of(true));
    Ok(PartFull { white_part, white_full, black_part, black_full })
}

/// Every pair with `n` faces: rooted simple quadrangulations, each with all
/// its even Schnyder decompositions.
pub fn enumerate_pairs(n: usize, cap: usize) -> Result<Vec<EvenPair>> {
    if n > ENUMERATION_FACE_CAP {
        return Err(Error::CapExceeded(format!("{n} faces is above the limit of {ENUMERATION_FACE_CAP}")));
    }
    if n < 3 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut failure = None;
    for_each_rooted_angulation(4, n, &mut |m| {
        let Ok(ang) = m.as_angulation(4) else { return true };
        if m.girth().map_or(true, |g| g < 4) {
            return true;
        }
        let step = p_p1_lattice_enumerate(&ang, cap).and_then(|os| {
            os.iter()
                .map(|o| {
                    let l = psi_inverse(&ang, &o.doubled())?;
                    Ok(EvenPair { quad: ang.clone(), schnyder: phi(&ang, &l)? })
                })
                .collect::<Result<Vec<_>>>()
        });
        match step {
            Ok(pairs) if out.len() + pairs.len() <= cap => {
                out.extend(pairs);
                true
            }
            Ok(_) => {
                failure = Some(Error::CapExceeded(format!("more than {cap} pairs")));
                false
            }
            Err(e) => {
                failure = Some(e);
                false
            }
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// Drawing-side measurements of one pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DrawingCounts {
    pub part: usize,
    pub full: usize,
    pub width: usize,
    pub height: usize,
}

/// Draws the dual of a pair and reads the face classes and the grid size
/// after the balanced reduction.
pub fn drawing_counts(pair: &EvenPair) -> Result<DrawingCounts> {
    let dual = DualPair::from_angulation(&pair.quad)?;
    let r = chi(&dual, &pair.schnyder)?;
    let gd = draw(&dual.dual, &r)?;
    let fc = classify_faces(&gd, &r)?;
    let rc = balanced_reduction_choice(&fc);
    let side = dual.dual.map.vertex_count() - 1;
    Ok(DrawingCounts {
        part: fc.count(FaceClass::PartlyReducible),
        full: fc.count(FaceClass::FullyReducible),
        width: side - rc.x.len(),
        height: side - rc.y.len(),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub mean: f64,
    pub sd: f64,
    /// Half-width of a normal 95% interval for the mean.
    pub ci95: f64,
}

impl Summary {
    pub fn of(values: &[f64]) -> Summary {
        let k = values.len() as f64;
        if values.is_empty() {
            return Summary { mean: f64::NAN, sd: f64::NAN, ci95: f64::NAN };
        }
        let mean = values.iter().sum::<f64>() / k;
        let var = if values.len() > 1 { values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (k - 1.0) } else { 0.0 };
        let sd = var.sqrt();
        Summary { mean, sd, ci95: 1.96 * sd / k.sqrt() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampleStats {
    pub n: usize,
    pub samples: usize,
    pub accepted: usize,
    pub attempts: u64,
    pub attempt_counts: Vec<u64>,
    pub part_counts: Vec<usize>,
    pub full_counts: Vec<usize>,
    pub reduced_width: Vec<usize>,
    pub reduced_height: Vec<usize>,
    /// Ratios to `n`; the side is the larger of width and height.
    pub part_ratio: Summary,
    pub full_ratio: Summary,
    pub width_ratio: Summary,
    pub height_ratio: Summary,
    pub side_ratio: Summary,
}

impl SampleStats {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("stats serialize")
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("sample,attempts,part,full,reduced_width,reduced_height\n");
        for i in 0..self.accepted {
            let _ = writeln!(
                s,
                "{i},{},{},{},{},{}",
                self.attempt_counts[i], self.part_counts[i], self.full_counts[i], self.reduced_width[i], self.reduced_height[i]
            );
        }
        s
    }
}

/// Random stream for sample `i` of a run seeded with `seed`.
pub fn sample_rng(seed: u64, i: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(i);
    rng
}

struct Measured {
    attempts: u64,
    counts: DrawingCounts,
}

fn measure(n: usize, seed: u64, i: usize, max_attempts: u64) -> Result<Measured> {
    let sample = rejection_sample(n, &mut sample_rng(seed, i as u64), max_attempts)?;
    Ok(Measured { attempts: sample.attempts, counts: drawing_counts(&sample.pair)? })
}

/// Samples `sample_count` pairs with `n` faces and records part, full and
/// the reduced grid size of each; a sample whose budget runs out is an error.
/// Sample `i` uses stream `i` of `seed` whatever `jobs` is.
pub fn concentration_experiment(n: usize, sample_count: usize, seed: u64, max_attempts: u64, jobs: usize) -> Result<SampleStats> {
    let jobs = jobs.clamp(1, sample_count.max(1));
    let mut results: Vec<Option<Result<Measured>>> = (0..sample_count).map(|_| None).collect();
    std::thread::scope(|scope| {
        for (j, chunk) in results.chunks_mut(sample_count.div_ceil(jobs).max(1)).enumerate() {
            let start = j * sample_count.div_ceil(jobs).max(1);
            scope.spawn(move || {
                for (k, slot) in chunk.iter_mut().enumerate() {
                    *slot = Some(measure(n, seed, start + k, max_attempts));
                }
            });
        }
    });
    let mut stats = SampleStats {
        n,
        samples: sample_count,
        accepted: 0,
        attempts: 0,
        attempt_counts: Vec::new(),
        part_counts: Vec::new(),
        full_counts: Vec::new(),
        reduced_width: Vec::new(),
        reduced_height: Vec::new(),
        part_ratio: Summary::of(&[]),
        full_ratio: Summary::of(&[]),
        width_ratio: Summary::of(&[]),
        height_ratio: Summary::of(&[]),
        side_ratio: Summary::of(&[]),
    };
    for m in results {
        let m = m.expect("every slot is filled")?;
        stats.accepted += 1;
        stats.attempts += m.attempts;
        stats.attempt_counts.push(m.attempts);
        stats.part_counts.push(m.counts.part);
        stats.full_counts.push(m.counts.full);
        stats.reduced_width.push(m.counts.width);
        stats.reduced_height.push(m.counts.height);
    }
    let ratio = |v: &[usize]| Summary::of(&v.iter().map(|&a| a as f64 / n as f64).collect::<Vec<_>>());
    stats.part_ratio = ratio(&stats.part_counts);
    stats.full_ratio = ratio(&stats.full_counts);
    stats.width_ratio = ratio(&stats.reduced_width);
    stats.height_ratio = ratio(&stats.reduced_height);
    let sides: Vec<usize> = stats.reduced_width.iter().zip(&stats.reduced_height).map(|(&w, &h)| w.max(h)).collect();
    stats.side_ratio = ratio(&sides);
    Ok(stats)
}
