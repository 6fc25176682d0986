//! The Steiner system S(3,6,22) from the projective plane PG(2,4).
//!
//! Points are the 21 points of PG(2,4) (indices 0..21, lexicographic) plus a
//! point at infinity (index 21). Blocks are the 21 lines extended by infinity
//! followed by the 56 hyperovals in one orbit of SL(3,4): the orbit of the
//! lexicographically least hyperoval.

use std::collections::{BTreeSet, VecDeque};

use crate::exactmath::Elem;
use crate::geometry::ProjectiveSpace;

pub const STEINER_POINTS: usize = 22;
pub const INFINITY: usize = 21;

/// Every hyperoval (6 points, no three collinear) of PG(2,4), sorted.
pub fn hyperovals(plane: &ProjectiveSpace) -> Vec<Vec<usize>> {
    let n = plane.len();
    let mut collinear = vec![vec![vec![false; n]; n]; n];
    for l in plane.lines() {
        for &a in &l {
            for &b in &l {
                for &c in &l {
                    collinear[a][b][c] = true;
                }
            }
        }
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(6);
    fn extend(
        start: usize,
        n: usize,
        cur: &mut Vec<usize>,
        col: &[Vec<Vec<bool>>],
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == 6 {
            out.push(cur.clone());
            return;
        }
        for p in start..n {
            let ok = (0..cur.len()).all(|i| (i + 1..cur.len()).all(|j| !col[cur[i]][cur[j]][p]));
            if ok {
                cur.push(p);
                extend(p + 1, n, cur, col, out);
                cur.pop();
            }
        }
    }
    extend(0, n, &mut cur, &collinear, &mut out);
    out
}

/// Point permutations of PG(2,4) induced by the elementary transvections
/// I + a E_ij, which generate SL(3,4).
pub fn sl3_4_generators(plane: &ProjectiveSpace) -> Vec<Vec<usize>> {
    let mut gens = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i == j {
                continue;
            }
            for a in 1..4 as Elem {
                let mut m = vec![0 as Elem; 9];
                for d in 0..3 {
                    m[d * 3 + d] = 1;
                }
                m[i * 3 + j] = a;
                gens.push(plane.induced_permutation(&m));
            }
        }
    }
    gens
}

/// Orbit of a point set under the group generated by `gens`, sorted.
pub fn set_orbit(seed: &[usize], gens: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut seen = BTreeSet::from([seed.to_vec()]);
    let mut queue = VecDeque::from([seed.to_vec()]);
    while let Some(cur) = queue.pop_front() {
        for g in gens {
            let mut img: Vec<usize> = cur.iter().map(|&x| g[x]).collect();
            img.sort_unstable();
            if seen.insert(img.clone()) {
                queue.push_back(img);
            }
        }
    }
    seen.into_iter().collect()
}

/// The hyperoval orbit used for S(3,6,22) and the Gewirtz graph (56 sets).
pub fn hyperoval_orbit() -> Vec<Vec<usize>> {
    let plane = ProjectiveSpace::new(2, 4).expect("GF(4)");
    let all = hyperovals(&plane);
    set_orbit(&all[0], &sl3_4_generators(&plane))
}

/// The 77 blocks of S(3,6,22): extended lines first, then hyperovals.
pub fn steiner_3_6_22() -> Vec<Vec<usize>> {
    let plane = ProjectiveSpace::new(2, 4).expect("GF(4)");
    let mut blocks: Vec<Vec<usize>> = plane
        .lines()
        .into_iter()
        .map(|mut l| {
            l.push(INFINITY);
            l
        })
        .collect();
    blocks.extend(hyperoval_orbit());
    blocks
}

/// True when every 3-subset of the points lies in exactly one block.
pub fn is_steiner_3_system(points: usize, blocks: &[Vec<usize>]) -> bool {
    let idx = |a: usize, b: usize, c: usize| (a * points + b) * points + c;
    let mut cover = vec![0u8; points * points * points];
    for b in blocks {
        for (i, &x) in b.iter().enumerate() {
            for (j, &y) in b.iter().enumerate().skip(i + 1) {
                for &z in &b[j + 1..] {
                    let mut t = [x, y, z];
                    t.sort_unstable();
                    cover[idx(t[0], t[1], t[2])] += 1;
                }
            }
        }
    }
    (0..points).all(|a| {
        (a + 1..points).all(|b| (b + 1..points).all(|c| cover[idx(a, b, c)] == 1))
    })
}
