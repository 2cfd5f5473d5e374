//! Exhaustive generation of rooted d-angulations by peeling.
//!
//! Faces are d-gons whose darts are numbered `f*d .. f*d + d - 1` in face
//! order; face 0 is the outer face and dart 0 the outer dart. The explored
//! region is grown from face 0: the first dart of the last open hole is
//! either glued to a fresh d-gon or to another dart of the same hole (which
//! splits the hole in two). Gluing only within a hole keeps the surface a
//! sphere, and since every step is forced once the map is known, each
//! rooted map comes out exactly once.

use std::collections::HashSet;

use super::PlaneMap;

const FREE: usize = usize::MAX;

/// Calls `visit` on every rooted loopless d-angulation with exactly `faces`
/// faces. Stops early, returning false, as soon as `visit` returns false.
pub fn for_each_rooted_angulation(d: usize, faces: usize, visit: &mut dyn FnMut(PlaneMap) -> bool) -> bool {
    assert!(d >= 2 && faces >= 1);
    let mut twin = vec![FREE; d * faces];
    let hole: Vec<usize> = (0..d).collect();
    peel(d, faces, &mut twin, 1, vec![hole], visit)
}

fn peel(
    d: usize,
    target: usize,
    twin: &mut Vec<usize>,
    faces: usize,
    mut holes: Vec<Vec<usize>>,
    visit: &mut dyn FnMut(PlaneMap) -> bool,
) -> bool {
    while holes.last().is_some_and(|h| h.is_empty()) {
        holes.pop();
    }
    let Some(hole) = holes.pop() else {
        if faces == target {
            if let Some(m) = assemble(d, twin) {
                return visit(m);
            }
        }
        return true;
    };
    // Parity: gluings remove two darts, new faces add d - 2.
    if (d % 2 == 0 || faces == target) && hole.len() % 2 == 1 {
        return true;
    }
    let x = hole[0];
    if faces < target {
        let base = faces * d;
        twin[x] = base;
        twin[base] = x;
        let mut next = holes.clone();
        let mut h: Vec<usize> = (base + 1..base + d).collect();
        h.extend_from_slice(&hole[1..]);
        next.push(h);
        let go = peel(d, target, twin, faces + 1, next, visit);
        twin[x] = FREE;
        twin[base] = FREE;
        if !go {
            return false;
        }
    }
    for k in 1..hole.len() {
        let y = hole[k];
        twin[x] = y;
        twin[y] = x;
        let mut next = holes.clone();
        next.push(hole[k + 1..].to_vec());
        next.push(hole[1..k].to_vec());
        let go = peel(d, target, twin, faces, next, visit);
        twin[x] = FREE;
        twin[y] = FREE;
        if !go {
            return false;
        }
    }
    true
}

fn assemble(d: usize, twin: &[usize]) -> Option<PlaneMap> {
    let n = twin.len();
    let phi = |x: usize| x - x % d + (x % d + 1) % d;
    let next_cw: Vec<usize> = (0..n).map(|y| phi(twin[y])).collect();
    let mut origin = vec![FREE; n];
    let mut v = 0;
    for s in 0..n {
        if origin[s] != FREE {
            continue;
        }
        let mut x = s;
        while origin[x] == FREE {
            origin[x] = v;
            x = next_cw[x];
        }
        v += 1;
    }
    PlaneMap::from_darts(origin, twin.to_vec(), next_cw, 0, None).ok()
}

/// Isomorphism classes (orientation preserving, roots ignored) of loopless
/// d-angulations with `faces` faces, optionally restricted to girth `d`.
pub fn angulation_classes(d: usize, faces: usize, girth_d_only: bool) -> Vec<PlaneMap> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for_each_rooted_angulation(d, faces, &mut |m| {
        if girth_d_only && m.girth().map_or(true, |g| g < d) {
            return true;
        }
        if seen.insert(m.unrooted_code()) {
            out.push(m);
        }
        true
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(d: usize, faces: usize) -> usize {
        let mut n = 0;
        for_each_rooted_angulation(d, faces, &mut |_| {
            n += 1;
            true
        });
        n
    }

    #[test]
    fn rooted_quadrangulations_match_rooted_maps() {
        // Quadrangulations with n faces are in bijection with maps with n
        // edges: 2, 9, 54, 378, 2916.
        let counts: Vec<usize> = (1..=5).map(|n| count(4, n)).collect();
        assert_eq!(counts, vec![2, 9, 54, 378, 2916]);
    }

    #[test]
    fn rooted_loopless_triangulations() {
        // 2^(n+1) (3n)! / (n! (2n+2)!) with 2n faces.
        let counts: Vec<usize> = [2, 4, 6, 8, 10].iter().map(|&n| count(3, n)).collect();
        assert_eq!(counts, vec![1, 4, 24, 176, 1456]);
    }

    #[test]
    fn simple_quadrangulations_match_nonseparable_maps() {
        // Rooted nonseparable maps with n edges: 1, 2, 6, 22, 91.
        let mut counts = Vec::new();
        for n in 2..=6 {
            let mut c = 0;
            for_each_rooted_angulation(4, n, &mut |m| {
                if m.girth().is_ok_and(|g| g == 4) {
                    c += 1;
                }
                true
            });
            counts.push(c);
        }
        assert_eq!(counts, vec![1, 2, 6, 22, 91]);
    }

    #[test]
    fn classes_are_pairwise_non_isomorphic() {
        let classes = angulation_classes(4, 5, false);
        for (i, a) in classes.iter().enumerate() {
            for b in &classes[i + 1..] {
                assert!(!a.is_isomorphic(b));
            }
        }
        assert!(!classes.is_empty());
    }
}
