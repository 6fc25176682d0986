use std::sync::atomic::{AtomicU64, Ordering};

use super::projective::{normalize, ProjectivePoint, ProjectiveSpace};
use crate::error::{Error, Result};
use crate::exactmath::{gf_solve, FiniteField};

/// A set of points of PG(n,q), no three collinear.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cap {
    n: usize,
    q: u32,
    points: Vec<ProjectivePoint>,
}

impl Cap {
    /// Normalizes the points and checks every triple exhaustively.
    pub fn new(n: usize, q: u32, points: Vec<ProjectivePoint>) -> Result<Self> {
        let field = FiniteField::new(q)?;
        let mut pts = Vec::with_capacity(points.len());
        for p in points {
            if p.coords.len() != n + 1 {
                return Err(Error::Dimension(format!("cap point {:?} is not in PG({n},{q})", p.coords)));
            }
            let c = normalize(&field, &p.coords)
                .ok_or_else(|| Error::Precondition("zero vector is not a point".into()))?;
            pts.push(ProjectivePoint { coords: c });
        }
        let mut sorted = pts.clone();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Precondition("repeated cap point".into()));
        }
        for a in 0..pts.len() {
            for b in a + 1..pts.len() {
                for c in b + 1..pts.len() {
                    let rows = [pts[a].coords.clone(), pts[b].coords.clone(), pts[c].coords.clone()];
                    if gf_solve(&field, &rows)?.rank() < 3 {
                        return Err(Error::Precondition(format!("cap points {a}, {b}, {c} are collinear")));
                    }
                }
            }
        }
        Ok(Cap { n, q, points: pts })
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn points(&self) -> &[ProjectivePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Pairs (w1, w2), w1 > w2, for which a k-set of PG(n,q) with exactly these
/// two hyperplane intersection sizes passes the standard counts:
/// N1 + N2 = #hyperplanes, sum N w = k #hyperplanes-per-point and
/// sum N w (w-1) = k(k-1) #hyperplanes-per-line.
pub fn two_intersection_candidates(n: usize, q: u32, k: usize) -> Vec<(usize, usize)> {
    let q = q as i64;
    let theta = |d: u32| (q.pow(d + 1) - 1) / (q - 1);
    let n32 = n as u32;
    let hyper = theta(n32);
    let through_point = theta(n32 - 1);
    let through_line = if n >= 2 { theta(n32 - 2) } else { 0 };
    let k = k as i64;
    let s1 = k * through_point;
    let s2 = k * (k - 1) * through_line;
    let mut out = Vec::new();
    for w1 in 1..=k {
        for w2 in 0..w1 {
            // N1 (w1 - w2) = s1 - hyper w2
            let num = s1 - hyper * w2;
            if num <= 0 || num % (w1 - w2) != 0 {
                continue;
            }
            let n1 = num / (w1 - w2);
            let n2 = hyper - n1;
            if n2 <= 0 {
                continue;
            }
            if n1 * w1 * (w1 - 1) + n2 * w2 * (w2 - 1) == s2 {
                out.push((w1 as usize, w2 as usize));
            }
        }
    }
    out
}

struct CapSearch<'a> {
    space: &'a ProjectiveSpace,
    k: usize,
    blocked: Vec<u32>,
    chosen: Vec<usize>,
    /// hyperplanes through each point, when hyperplane pruning is on
    hyper_of: Option<Vec<Vec<u32>>>,
    hyper_count: Vec<u32>,
    max_meet: u32,
    allowed_final: Vec<(usize, usize)>,
    nodes: &'a AtomicU64,
    budget: u64,
    accept: &'a dyn Fn(&[usize]) -> bool,
}

impl CapSearch<'_> {
    fn push(&mut self, c: usize) -> bool {
        let mut ok = true;
        for &x in &self.chosen {
            for p in self.space.line_through(x, c) {
                self.blocked[p] += 1;
            }
        }
        if let Some(h) = &self.hyper_of {
            for &hp in &h[c] {
                self.hyper_count[hp as usize] += 1;
                if self.hyper_count[hp as usize] > self.max_meet {
                    ok = false;
                }
            }
        }
        self.chosen.push(c);
        ok
    }

    fn pop(&mut self) {
        let c = self.chosen.pop().unwrap();
        for &x in &self.chosen {
            for p in self.space.line_through(x, c) {
                self.blocked[p] -= 1;
            }
        }
        if let Some(h) = &self.hyper_of {
            for &hp in &h[c] {
                self.hyper_count[hp as usize] -= 1;
            }
        }
    }

    fn final_ok(&self) -> bool {
        if self.hyper_of.is_none() {
            return true;
        }
        self.allowed_final.iter().any(|&(w1, w2)| {
            self.hyper_count.iter().all(|&c| c as usize == w1 || c as usize == w2)
        })
    }

    fn dfs(&mut self, start: usize) -> Result<bool> {
        if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.budget {
            return Err(Error::BudgetExhausted(self.budget));
        }
        if self.chosen.len() == self.k {
            return Ok(self.final_ok() && (self.accept)(&self.chosen));
        }
        let need = self.k - self.chosen.len();
        for c in start..self.space.len() {
            if self.space.len() - c < need {
                break;
            }
            if self.blocked[c] > 0 {
                continue;
            }
            let ok = self.push(c);
            if ok && self.dfs(c + 1)? {
                return Ok(true);
            }
            self.pop();
        }
        Ok(false)
    }
}

/// First k-cap of PG(n,q) in lexicographic branch order. With `require_srg`
/// the cap must have a strongly regular linear representation: hyperplane
/// intersection sizes are kept within the two-intersection candidates and
/// the final cap is checked on its actual graph.
pub fn cap_search(n: usize, q: u32, k: usize, require_srg: bool, budget: Option<u64>) -> Result<Cap> {
    let space = ProjectiveSpace::new(n, q)?;
    let nodes = AtomicU64::new(0);
    let (hyper_of, max_meet, allowed_final) = if require_srg {
        let allowed = two_intersection_candidates(n, q, k);
        if allowed.is_empty() {
            return Err(Error::Exhausted);
        }
        let f = space.field();
        // hyperplanes are indexed by the points of the dual space
        let mut hyper_of = vec![Vec::new(); space.len()];
        for h in 0..space.len() {
            for p in 0..space.len() {
                if f.dot(space.coords(h), space.coords(p)) == 0 {
                    hyper_of[p].push(h as u32);
                }
            }
        }
        let max = allowed.iter().map(|&(w1, _)| w1).max().unwrap() as u32;
        (Some(hyper_of), max, allowed)
    } else {
        (None, u32::MAX, Vec::new())
    };
    let accept = |pts: &[usize]| -> bool {
        if !require_srg {
            return true;
        }
        let cap = Cap { n, q, points: pts.iter().map(|&i| space.points()[i].clone()).collect() };
        super::linrep::linear_representation(&cap).srg.is_some()
    };
    let mut search = CapSearch {
        space: &space,
        k,
        blocked: vec![0; space.len()],
        chosen: Vec::new(),
        hyper_count: vec![0; if hyper_of.is_some() { space.len() } else { 0 }],
        hyper_of,
        max_meet,
        allowed_final,
        nodes: &nodes,
        budget: budget.unwrap_or(u64::MAX),
        accept: &accept,
    };
    if search.dfs(0)? {
        let pts = search.chosen.iter().map(|&i| space.points()[i].clone()).collect();
        Cap::new(n, q, pts)
    } else {
        Err(Error::Exhausted)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(c: &[u8]) -> ProjectivePoint {
        ProjectivePoint { coords: c.to_vec() }
    }

    #[test]
    fn four_arc_of_fano_plane() {
        let cap = cap_search(2, 2, 4, false, None).unwrap();
        let mut got: Vec<Vec<u8>> = cap.points().iter().map(|p| p.coords.clone()).collect();
        got.sort();
        assert_eq!(got, vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0], vec![1, 1, 1]]);
        assert!(cap_search(2, 2, 5, false, None).is_err());
    }

    #[test]
    fn collinear_triples_are_rejected() {
        let r = Cap::new(2, 2, vec![pt(&[1, 0, 0]), pt(&[0, 1, 0]), pt(&[1, 1, 0])]);
        assert!(matches!(r, Err(Error::Precondition(_))));
        assert!(Cap::new(2, 3, vec![pt(&[2, 0, 0]), pt(&[0, 1, 0])]).is_ok());
    }

    #[test]
    fn coxeter_counts_admit_two_and_five() {
        assert!(two_intersection_candidates(4, 3, 11).contains(&(5, 2)));
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(cap_search(4, 3, 12, false, Some(5)), Err(Error::BudgetExhausted(5))));
    }
}
