use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graphcore::{Graph, VertexSet};

/// Which axiom system a geometry claims.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeometryKind {
    /// Generalised quadrangle: exactly one point of a line is collinear with
    /// an outside point.
    Gq,
    /// Partial quadrangle: at most one, and non-collinear points have `mu`
    /// common neighbours.
    Pq { mu: usize },
    /// No axioms beyond line sizes and point degrees.
    Raw,
}

/// A finite point-line geometry. Points are `0..point_count`; each line is a
/// sorted list of point indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceGeometry {
    name: String,
    point_count: usize,
    lines: Vec<Vec<usize>>,
    s: usize,
    t: usize,
    kind: GeometryKind,
    lines_on: Vec<Vec<usize>>,
    collinear: Vec<BitSet>,
}

impl IncidenceGeometry {
    /// Assemble and verify a geometry of order (s, t).
    pub fn new(
        name: impl Into<String>,
        point_count: usize,
        lines: Vec<Vec<usize>>,
        s: usize,
        t: usize,
        kind: GeometryKind,
    ) -> Result<Self> {
        let geo = Self::new_unchecked(name, point_count, lines, s, t, kind)?;
        geo.verify()?;
        Ok(geo)
    }

    /// Assemble without checking the axioms (line sizes and ranges are still
    /// checked so the incidence tables are well formed).
    pub fn new_unchecked(
        name: impl Into<String>,
        point_count: usize,
        mut lines: Vec<Vec<usize>>,
        s: usize,
        t: usize,
        kind: GeometryKind,
    ) -> Result<Self> {
        let mut lines_on = vec![Vec::new(); point_count];
        let mut collinear = vec![BitSet::new(point_count); point_count];
        for (li, l) in lines.iter_mut().enumerate() {
            l.sort_unstable();
            if l.windows(2).any(|w| w[0] == w[1]) || l.iter().any(|&p| p >= point_count) {
                return Err(Error::Precondition(format!("line {li} has repeated or out-of-range points")));
            }
            for &p in l.iter() {
                lines_on[p].push(li);
                for &x in l.iter() {
                    if x != p {
                        collinear[p].insert(x);
                    }
                }
            }
        }
        Ok(IncidenceGeometry { name: name.into(), point_count, lines, s, t, kind, lines_on, collinear })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn point_count(&self) -> usize {
        self.point_count
    }

    pub fn lines(&self) -> &[Vec<usize>] {
        &self.lines
    }

    pub fn line(&self, i: usize) -> &[usize] {
        &self.lines[i]
    }

    pub fn order(&self) -> (usize, usize) {
        (self.s, self.t)
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn kind(&self) -> GeometryKind {
        self.kind
    }

    /// Common-neighbour count of non-collinear points (t+1 for a GQ).
    pub fn mu(&self) -> Option<usize> {
        match self.kind {
            GeometryKind::Gq => Some(self.t + 1),
            GeometryKind::Pq { mu } => Some(mu),
            GeometryKind::Raw => None,
        }
    }

    pub fn lines_on(&self, p: usize) -> &[usize] {
        &self.lines_on[p]
    }

    /// Points collinear with `p`, excluding `p`.
    pub fn neighbours(&self, p: usize) -> &BitSet {
        &self.collinear[p]
    }

    pub fn collinear(&self, a: usize, b: usize) -> bool {
        self.collinear[a].contains(b)
    }

    /// P⊥: the points collinear with `p`, including `p`.
    pub fn perp(&self, p: usize) -> BitSet {
        let mut s = self.collinear[p].clone();
        s.insert(p);
        s
    }

    pub fn line_through(&self, a: usize, b: usize) -> Option<usize> {
        self.lines_on[a].iter().copied().find(|&l| self.lines[l].binary_search(&b).is_ok())
    }

    pub fn vertex_set(&self, points: impl IntoIterator<Item = usize>) -> VertexSet {
        VertexSet::from_bits(BitSet::from_indices(self.point_count, points), self.name.clone())
    }

    pub fn is_gq(&self) -> bool {
        self.kind == GeometryKind::Gq
    }

    /// Check line sizes, point degrees and the axioms of `kind`.
    pub fn verify(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Precondition(format!("{}: {msg}", self.name)));
        if let Some((i, l)) = self.lines.iter().enumerate().find(|(_, l)| l.len() != self.s + 1) {
            return fail(format!("line {i} has {} points, expected {}", l.len(), self.s + 1));
        }
        if let Some(p) = (0..self.point_count).find(|&p| self.lines_on[p].len() != self.t + 1) {
            return fail(format!("point {p} is on {} lines, expected {}", self.lines_on[p].len(), self.t + 1));
        }
        // two points on at most one line: each point sees s(t+1) distinct others
        if let Some(p) = (0..self.point_count).find(|&p| self.collinear[p].len() != self.s * (self.t + 1)) {
            return fail(format!("point {p} shares more than one line with some point"));
        }
        if self.kind == GeometryKind::Raw {
            return Ok(());
        }
        for p in 0..self.point_count {
            for (li, l) in self.lines.iter().enumerate() {
                if l.binary_search(&p).is_ok() {
                    continue;
                }
                let c = l.iter().filter(|&&x| self.collinear[p].contains(x)).count();
                let ok = match self.kind {
                    GeometryKind::Gq => c == 1,
                    _ => c <= 1,
                };
                if !ok {
                    return fail(format!("point {p} is collinear with {c} points of line {li}"));
                }
            }
        }
        if let GeometryKind::Pq { mu } = self.kind {
            for a in 0..self.point_count {
                for b in a + 1..self.point_count {
                    if !self.collinear[a].contains(b) {
                        let c = self.collinear[a].intersection_len(&self.collinear[b]);
                        if c != mu {
                            return fail(format!("points {a},{b} have {c} common neighbours, expected {mu}"));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// |points| = s(t+1)(mu+st)/mu + 1, when mu is defined.
    pub fn expected_point_count(&self) -> Option<usize> {
        let mu = self.mu()?;
        let (s, t) = (self.s, self.t);
        Some(s * (t + 1) * (mu + s * t) / mu + 1)
    }
}

/// Point graph: distinct points adjacent when collinear.
pub fn collinearity_graph(geo: &IncidenceGeometry) -> Graph {
    Graph::from_fn(geo.point_count(), geo.name(), |a, b| geo.collinear(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcore::srg_params;

    #[test]
    fn single_line_is_a_triangle() {
        let geo = IncidenceGeometry::new("line", 3, vec![vec![0, 1, 2]], 2, 0, GeometryKind::Gq).unwrap();
        let g = collinearity_graph(&geo);
        assert_eq!(g.edge_count(), 3);
        assert!(!g.is_triangle_free());
    }

    #[test]
    fn grid_3x3_is_gq_2_1() {
        // rows and columns of a 3x3 grid
        let mut lines = Vec::new();
        for i in 0..3 {
            lines.push((0..3).map(|j| 3 * i + j).collect());
            lines.push((0..3).map(|j| 3 * j + i).collect());
        }
        let geo = IncidenceGeometry::new("grid", 9, lines, 2, 1, GeometryKind::Gq).unwrap();
        assert_eq!(geo.expected_point_count(), Some(9));
        let p = srg_params(&collinearity_graph(&geo)).unwrap();
        assert_eq!((p.v, p.k, p.lambda, p.mu), (9, 4, 1, 2));
    }

    #[test]
    fn wrong_order_is_rejected() {
        let r = IncidenceGeometry::new("line", 3, vec![vec![0, 1, 2]], 2, 1, GeometryKind::Gq);
        assert!(matches!(r, Err(Error::Precondition(_))));
    }

    #[test]
    fn fano_plane_is_not_a_gq() {
        let lines = vec![
            vec![0, 1, 2],
            vec![0, 3, 4],
            vec![0, 5, 6],
            vec![1, 3, 5],
            vec![1, 4, 6],
            vec![2, 3, 6],
            vec![2, 4, 5],
        ];
        let r = IncidenceGeometry::new("fano", 7, lines.clone(), 2, 2, GeometryKind::Gq);
        assert!(r.is_err());
        IncidenceGeometry::new("fano", 7, lines, 2, 2, GeometryKind::Raw).unwrap();
    }
}
