use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;

use super::certificate::{feasible_params, FeasibleRow, IntrigueCertificate, Sign, Verifier};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graphcore::{orbits, Graph, Permutation, VertexSet};

/// Controls for [`enumerate`].
#[derive(Clone, Debug)]
pub struct EnumerateOptions {
    /// Only parameter rows with N at most this size are searched.
    pub size_cap: Option<usize>,
    /// Stop at the first set in canonical branch order.
    pub first_only: bool,
    /// Report one representative per orbit of this group.
    pub group: Option<Vec<Permutation>>,
    /// Maximum number of search nodes over all rows and workers.
    pub budget: Option<u64>,
    /// Worker threads; 1 runs on the calling thread.
    pub threads: usize,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions { size_cap: None, first_only: false, group: None, budget: None, threads: 1 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Found {
    pub set: VertexSet,
    pub certificate: IntrigueCertificate,
    /// Orbit length when a group was supplied.
    pub orbit_size: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct Enumeration {
    pub rows: Vec<FeasibleRow>,
    pub found: Vec<Found>,
    /// False when the node budget ran out before the search finished.
    pub exhaustive: bool,
    pub nodes: u64,
}

const UND: u8 = 0;
const IN: u8 = 1;
const OUT: u8 = 2;

struct Ctx<'a> {
    adj: &'a [Vec<u32>],
    h1: u32,
    h2: u32,
    target: u32,
    nodes: &'a AtomicU64,
    budget: u64,
    abort: &'a AtomicBool,
}

#[derive(Clone)]
struct State {
    status: Vec<u8>,
    din: Vec<u32>,
    dund: Vec<u32>,
    n_in: u32,
    n_und: u32,
}

impl State {
    fn root(adj: &[Vec<u32>]) -> Self {
        State {
            status: vec![UND; adj.len()],
            din: vec![0; adj.len()],
            dund: adj.iter().map(|a| a.len() as u32).collect(),
            n_in: 0,
            n_und: adj.len() as u32,
        }
    }

    fn set(&mut self, ctx: &Ctx<'_>, v: usize, val: u8, queue: &mut Vec<usize>) {
        debug_assert_eq!(self.status[v], UND);
        self.status[v] = val;
        self.n_und -= 1;
        if val == IN {
            self.n_in += 1;
        }
        queue.push(v);
        for &w in &ctx.adj[v] {
            let w = w as usize;
            self.dund[w] -= 1;
            if val == IN {
                self.din[w] += 1;
            }
            queue.push(w);
        }
    }

    fn fill(&mut self, ctx: &Ctx<'_>, x: usize, val: u8, queue: &mut Vec<usize>) {
        for &w in &ctx.adj[x] {
            if self.status[w as usize] == UND {
                self.set(ctx, w as usize, val, queue);
            }
        }
    }

    /// Applies the equitable-partition constraints until a fixpoint.
    /// Returns false on contradiction.
    fn propagate(&mut self, ctx: &Ctx<'_>, queue: &mut Vec<usize>) -> bool {
        loop {
            while let Some(x) = queue.pop() {
                let (d, u) = (self.din[x], self.dund[x]);
                match self.status[x] {
                    UND => {
                        let in_ok = d <= ctx.h1 && d + u >= ctx.h1;
                        let out_ok = d <= ctx.h2 && d + u >= ctx.h2;
                        match (in_ok, out_ok) {
                            (false, false) => return false,
                            (true, false) => self.set(ctx, x, IN, queue),
                            (false, true) => self.set(ctx, x, OUT, queue),
                            (true, true) => {}
                        }
                    }
                    s => {
                        let h = if s == IN { ctx.h1 } else { ctx.h2 };
                        if d > h || d + u < h {
                            return false;
                        }
                        if u > 0 && d == h {
                            self.fill(ctx, x, OUT, queue);
                        } else if u > 0 && d + u == h {
                            self.fill(ctx, x, IN, queue);
                        }
                    }
                }
            }
            if self.n_in > ctx.target || self.n_in + self.n_und < ctx.target {
                return false;
            }
            if self.n_und == 0 {
                return true;
            }
            let val = if self.n_in == ctx.target {
                OUT
            } else if self.n_in + self.n_und == ctx.target {
                IN
            } else {
                return true;
            };
            for v in 0..self.status.len() {
                if self.status[v] == UND {
                    self.set(ctx, v, val, queue);
                }
            }
        }
    }

    fn assign(&mut self, ctx: &Ctx<'_>, v: usize, val: u8) -> bool {
        let mut queue = Vec::new();
        self.set(ctx, v, val, &mut queue);
        self.propagate(ctx, &mut queue)
    }

    /// Next branching vertex: least undecided neighbour of the inside vertex
    /// with the fewest undecided neighbours among those still short of h1,
    /// else the least undecided vertex.
    fn branch_vertex(&self, ctx: &Ctx<'_>) -> Option<usize> {
        let deficient = (0..self.status.len())
            .filter(|&x| self.status[x] == IN && self.din[x] < ctx.h1 && self.dund[x] > 0)
            .min_by_key(|&x| (self.dund[x], x));
        if let Some(x) = deficient {
            return ctx.adj[x].iter().map(|&w| w as usize).find(|&w| self.status[w] == UND);
        }
        self.status.iter().position(|&s| s == UND)
    }

    fn members(&self) -> Vec<usize> {
        (0..self.status.len()).filter(|&v| self.status[v] == IN).collect()
    }
}

fn tick(ctx: &Ctx<'_>) -> bool {
    if ctx.abort.load(Ordering::Relaxed) {
        return false;
    }
    if ctx.nodes.fetch_add(1, Ordering::Relaxed) + 1 > ctx.budget {
        ctx.abort.store(true, Ordering::Relaxed);
        return false;
    }
    true
}

fn dfs(ctx: &Ctx<'_>, state: State, first_only: bool, out: &mut Vec<Vec<usize>>) {
    if !tick(ctx) {
        return;
    }
    let Some(v) = state.branch_vertex(ctx) else {
        out.push(state.members());
        return;
    };
    for val in [IN, OUT] {
        let mut child = state.clone();
        if child.assign(ctx, v, val) {
            dfs(ctx, child, first_only, out);
            if first_only && !out.is_empty() {
                return;
            }
        }
    }
}

/// Splits the search tree into independent subtrees in canonical order.
fn frontier(ctx: &Ctx<'_>, root: State, want: usize) -> Vec<State> {
    let mut layer = vec![root];
    for _ in 0..16 {
        if layer.len() >= want {
            break;
        }
        let mut next = Vec::with_capacity(layer.len() * 2);
        let mut grew = false;
        for st in layer {
            match st.branch_vertex(ctx) {
                None => next.push(st),
                Some(v) => {
                    grew = true;
                    for val in [IN, OUT] {
                        let mut child = st.clone();
                        if child.assign(ctx, v, val) {
                            next.push(child);
                        }
                    }
                }
            }
        }
        layer = next;
        if !grew {
            break;
        }
    }
    layer
}

fn search_row(
    adj: &[Vec<u32>],
    row: &FeasibleRow,
    opts: &EnumerateOptions,
    nodes: &AtomicU64,
    abort: &AtomicBool,
) -> Vec<Vec<usize>> {
    let ctx = Ctx {
        adj,
        h1: row.h1 as u32,
        h2: row.h2 as u32,
        target: row.size as u32,
        nodes,
        budget: opts.budget.unwrap_or(u64::MAX),
        abort,
    };
    let mut root = State::root(adj);
    let mut queue: Vec<usize> = (0..adj.len()).collect();
    if !root.propagate(&ctx, &mut queue) {
        return Vec::new();
    }
    let threads = opts.threads.max(1);
    if threads == 1 {
        let mut out = Vec::new();
        dfs(&ctx, root, opts.first_only, &mut out);
        return out;
    }
    let tasks = frontier(&ctx, root, threads * 8);
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().expect("thread pool");
    let per_task: Vec<Vec<Vec<usize>>> = pool.install(|| {
        tasks
            .into_par_iter()
            .map(|st| {
                let mut out = Vec::new();
                dfs(&ctx, st, opts.first_only, &mut out);
                out
            })
            .collect()
    });
    if opts.first_only {
        per_task.into_iter().find(|v| !v.is_empty()).unwrap_or_default()
    } else {
        per_task.into_iter().flatten().collect()
    }
}

/// All vertex sets of `g` that are intriguing of the requested sign (both
/// when `sign` is `None`) for some feasible row within the size cap, in
/// lexicographic order.
pub fn enumerate(g: &Graph, sign: Option<Sign>, opts: &EnumerateOptions) -> Result<Enumeration> {
    let verifier = Verifier::new(g)?;
    let rows: Vec<FeasibleRow> = feasible_params(verifier.params())?
        .into_iter()
        .filter(|r| sign.is_none_or(|s| s == r.sign))
        .filter(|r| opts.size_cap.is_none_or(|c| r.size <= c))
        .collect();
    if let Some(gens) = &opts.group {
        crate::graphcore::check_generators(g, gens)?;
    }
    let adj: Vec<Vec<u32>> =
        (0..g.n()).map(|v| g.neighbors(v).iter().map(|w| w as u32).collect()).collect();
    let nodes = AtomicU64::new(0);
    let abort = AtomicBool::new(false);
    let mut found = Vec::new();
    for row in &rows {
        for members in search_row(&adj, row, opts, &nodes, &abort) {
            let set = g.vertex_set(members);
            let cert = verifier.verify(&set)?.ok_or_else(|| {
                Error::InvariantViolation(format!("search returned a non-intriguing set {:?}", set.indices()))
            })?;
            if (cert.h1, cert.h2) != (row.h1, row.h2) {
                return Err(Error::InvariantViolation("search certificate mismatch".into()));
            }
            found.push(Found { set, certificate: cert, orbit_size: None });
        }
        if opts.first_only && !found.is_empty() {
            break;
        }
    }
    let exhaustive = !abort.load(Ordering::Relaxed);
    if let Some(gens) = &opts.group {
        let sets: Vec<VertexSet> = found.iter().map(|f| f.set.clone()).collect();
        let mut reps = Vec::new();
        for orbit in orbits(g, &sets, gens)? {
            let certificate = verifier.verify(&orbit.representative)?.ok_or_else(|| {
                Error::InvariantViolation("orbit representative is not intriguing".into())
            })?;
            reps.push(Found { set: orbit.representative, certificate, orbit_size: Some(orbit.size) });
        }
        found = reps;
    }
    if !opts.first_only {
        found.sort_by(|a, b| a.set.cmp(&b.set));
    }
    Ok(Enumeration { rows, found, exhaustive, nodes: nodes.load(Ordering::Relaxed) })
}

/// Every subset of `g` of size at most `max_size` with constant inside and
/// outside degrees, by direct enumeration. Used as an oracle for small graphs.
pub fn brute_force_regular_sets(g: &Graph, max_size: usize) -> Vec<VertexSet> {
    let n = g.n();
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    fn rec(g: &Graph, start: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<VertexSet>) {
        if !cur.is_empty() && cur.len() < g.n() {
            let bits = BitSet::from_indices(g.n(), cur.iter().copied());
            let degs = |v: usize| g.neighbors(v).intersection_len(&bits);
            let inside: Vec<usize> = cur.iter().map(|&v| degs(v)).collect();
            let outside: Vec<usize> = (0..g.n()).filter(|v| !bits.contains(*v)).map(degs).collect();
            if inside.windows(2).all(|w| w[0] == w[1]) && outside.windows(2).all(|w| w[0] == w[1]) {
                out.push(g.vertex_set(cur.iter().copied()));
            }
        }
        if cur.len() == max {
            return;
        }
        for v in start..g.n() {
            cur.push(v);
            rec(g, v + 1, max, cur, out);
            cur.pop();
        }
    }
    rec(g, 0, max_size.min(n), &mut cur, &mut out);
    out.sort();
    out
}
