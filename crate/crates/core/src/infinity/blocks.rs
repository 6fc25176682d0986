use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::exactmath::RationalMatrix;
use crate::geometry::IncidenceGeometry;

/// The adjacency matrix of a GQ's point graph split as
/// A = [[B, C], [C^T, D]] with the deleted points last.
#[derive(Clone, Debug)]
pub struct BlockDecomposition {
    /// Ambient point indices in block order: kept points ascending, then the
    /// deleted points ascending, then `last` if given.
    pub order: Vec<usize>,
    /// Number of kept points (the size of B).
    pub kept: usize,
    pub b: RationalMatrix,
    pub c: RationalMatrix,
    pub d: RationalMatrix,
    /// Selection matrix: ambient rows (in ambient index order) by kept
    /// columns, one 1 per column.
    pub selection: RationalMatrix,
}

impl BlockDecomposition {
    /// `infinity` is the deleted set; `last`, when given, must lie in it and
    /// is placed at the very end.
    pub fn new(geo: &IncidenceGeometry, infinity: &BitSet, last: Option<usize>) -> Result<Self> {
        let n = geo.point_count();
        if infinity.width() != n {
            return Err(Error::Dimension("infinity set width differs from point count".into()));
        }
        if let Some(p) = last {
            if !infinity.contains(p) {
                return Err(Error::Precondition(format!("point {p} is not in the deleted set")));
            }
        }
        let mut order: Vec<usize> = (0..n).filter(|&x| !infinity.contains(x)).collect();
        let kept = order.len();
        order.extend((0..n).filter(|&x| infinity.contains(x) && Some(x) != last));
        order.extend(last);
        let adj = |i: usize, j: usize| i64::from(geo.collinear(order[i], order[j]));
        let m = n - kept;
        let b = RationalMatrix::from_integer_fn(kept, kept, adj);
        let c = RationalMatrix::from_integer_fn(kept, m, |i, j| adj(i, kept + j));
        let d = RationalMatrix::from_integer_fn(m, m, |i, j| adj(kept + i, kept + j));
        let selection = RationalMatrix::from_integer_fn(n, kept, |i, j| i64::from(order[j] == i));
        Ok(BlockDecomposition { order, kept, b, c, d, selection })
    }

    /// Decomposition with ∞ = P⊥ and P last.
    pub fn at_perp(geo: &IncidenceGeometry, p: usize) -> Result<Self> {
        Self::new(geo, &geo.perp(p), Some(p))
    }

    pub fn deleted(&self) -> usize {
        self.order.len() - self.kept
    }

    /// Checks that the blocks reassemble the permuted adjacency matrix, that
    /// S^T A S = B and S^T S = I.
    pub fn check(&self, geo: &IncidenceGeometry) -> Result<()> {
        let n = self.order.len();
        let k = self.kept;
        let a = RationalMatrix::from_integer_fn(n, n, |i, j| i64::from(geo.collinear(i, j)));
        let assembled_ok = (0..n).all(|i| {
            (0..n).all(|j| {
                let want = a.get(self.order[i], self.order[j]);
                let got = match (i < k, j < k) {
                    (true, true) => self.b.get(i, j),
                    (true, false) => self.c.get(i, j - k),
                    (false, true) => self.c.get(j, i - k),
                    (false, false) => self.d.get(i - k, j - k),
                };
                want == got
            })
        });
        if !assembled_ok {
            return Err(Error::InvariantViolation("blocks do not reassemble A".into()));
        }
        let st = self.selection.transpose();
        if st.mul(&a)?.mul(&self.selection)? != self.b {
            return Err(Error::InvariantViolation("S^T A S differs from B".into()));
        }
        if st.mul(&self.selection)? != RationalMatrix::identity(k) {
            return Err(Error::InvariantViolation("S^T S differs from I".into()));
        }
        Ok(())
    }
}
