use super::graph::{Graph, VertexSet};
use crate::error::{Error, Result};

/// Number of neighbours inside a vertex set, split by membership.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityProfile {
    /// (vertex, |N(vertex) ∩ S|) for vertices in S, in vertex order.
    pub inside: Vec<(usize, usize)>,
    /// The same for vertices outside S.
    pub outside: Vec<(usize, usize)>,
}

fn constant(v: &[(usize, usize)]) -> Option<usize> {
    let first = v.first()?.1;
    v.iter().all(|&(_, d)| d == first).then_some(first)
}

impl RegularityProfile {
    pub fn constant_inside(&self) -> Option<usize> {
        constant(&self.inside)
    }

    pub fn constant_outside(&self) -> Option<usize> {
        constant(&self.outside)
    }

    /// (h1, h2) when both degree multisets are constant.
    pub fn constants(&self) -> Option<(usize, usize)> {
        Some((self.constant_inside()?, self.constant_outside()?))
    }

    pub fn inside_degree_sum(&self) -> usize {
        self.inside.iter().map(|&(_, d)| d).sum()
    }
}

pub fn regularity_profile(g: &Graph, s: &VertexSet) -> Result<RegularityProfile> {
    s.check_width(g)?;
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    if s.len() == g.n() {
        return Err(Error::FullSet);
    }
    let mut inside = Vec::with_capacity(s.len());
    let mut outside = Vec::with_capacity(g.n() - s.len());
    for v in 0..g.n() {
        let d = g.neighbors(v).intersection_len(s.bits());
        if s.contains(v) {
            inside.push((v, d));
        } else {
            outside.push((v, d));
        }
    }
    Ok(RegularityProfile { inside, outside })
}
