use super::incidence::IncidenceGeometry;
use crate::error::{Error, Result};
use crate::graphcore::VertexSet;

const UND: u8 = 0;
const IN: u8 = 1;
const OUT: u8 = 2;

struct Search<'a> {
    geo: &'a IncidenceGeometry,
    want_in: usize,
    want_out: usize,
    status: Vec<u8>,
    in_count: Vec<usize>,
    out_count: Vec<usize>,
    trail: Vec<usize>,
}

impl Search<'_> {
    /// Assign and propagate line saturation; false on conflict. Every
    /// assignment is pushed on the trail so it can be undone.
    fn assign(&mut self, p: usize, val: u8) -> bool {
        let mut stack = vec![(p, val)];
        while let Some((x, v)) = stack.pop() {
            match self.status[x] {
                UND => {}
                s if s == v => continue,
                _ => return false,
            }
            self.status[x] = v;
            self.trail.push(x);
            let mut ok = true;
            for &l in self.geo.lines_on(x) {
                let (c, cap, other) = if v == IN {
                    self.in_count[l] += 1;
                    (self.in_count[l], self.want_in, OUT)
                } else {
                    self.out_count[l] += 1;
                    (self.out_count[l], self.want_out, IN)
                };
                if c > cap {
                    ok = false;
                } else if c == cap {
                    for &y in self.geo.line(l) {
                        if self.status[y] == UND {
                            stack.push((y, other));
                        }
                    }
                }
            }
            if !ok {
                return false;
            }
        }
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let x = self.trail.pop().unwrap();
            let v = self.status[x];
            for &l in self.geo.lines_on(x) {
                if v == IN {
                    self.in_count[l] -= 1;
                } else {
                    self.out_count[l] -= 1;
                }
            }
            self.status[x] = UND;
        }
    }

    /// Least undecided point on the line with fewest undecided points.
    fn branch_point(&self) -> Option<usize> {
        let s1 = self.geo.s() + 1;
        let mut best: Option<(usize, usize)> = None;
        for l in 0..self.geo.lines().len() {
            let und = s1 - self.in_count[l] - self.out_count[l];
            if und > 0 && best.is_none_or(|(b, _)| und < b) {
                best = Some((und, l));
                if und == 1 {
                    break;
                }
            }
        }
        let (_, l) = best?;
        self.geo.line(l).iter().copied().find(|&x| self.status[x] == UND)
    }

    fn dfs(&mut self) -> bool {
        let Some(p) = self.branch_point() else {
            return true;
        };
        for val in [IN, OUT] {
            let mark = self.trail.len();
            if self.assign(p, val) && self.dfs() {
                return true;
            }
            self.undo_to(mark);
        }
        false
    }
}

/// First hemisystem in the deterministic search order.
pub fn find_hemisystem(geo: &IncidenceGeometry) -> Result<VertexSet> {
    find_hemisystem_with(geo, &[], &[])
}

/// First hemisystem containing `forced_in` and avoiding `forced_out`.
pub fn find_hemisystem_with(geo: &IncidenceGeometry, forced_in: &[usize], forced_out: &[usize]) -> Result<VertexSet> {
    let (s, t) = geo.order();
    if !geo.is_gq() || t != s * s || s % 2 == 0 {
        return Err(Error::Precondition(format!("hemisystems need a GQ of order (s, s^2) with s odd, got ({s},{t})")));
    }
    let m = s.div_ceil(2);
    let nl = geo.lines().len();
    let mut search = Search {
        geo,
        want_in: m,
        want_out: s + 1 - m,
        status: vec![UND; geo.point_count()],
        in_count: vec![0; nl],
        out_count: vec![0; nl],
        trail: Vec::new(),
    };
    let fixed = forced_in.iter().map(|&p| (p, IN)).chain(forced_out.iter().map(|&p| (p, OUT)));
    for (p, v) in fixed {
        if p >= geo.point_count() || !search.assign(p, v) {
            return Err(Error::Exhausted);
        }
    }
    if !search.dfs() {
        return Err(Error::Exhausted);
    }
    let set = geo.vertex_set((0..geo.point_count()).filter(|&p| search.status[p] == IN));
    debug_assert!(super::is_hemisystem(geo, &set));
    Ok(set)
}
