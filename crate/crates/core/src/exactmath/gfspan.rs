//! Row reduction over GF(q): ranks, spans and membership.

use super::field::{Elem, FiniteField};
use crate::error::{Error, Result};

/// A subspace of GF(q)^n held as a reduced row echelon basis. The basis is
/// canonical, so two spans are equal iff their bases are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Span {
    len: usize,
    basis: Vec<Vec<Elem>>,
    pivots: Vec<usize>,
}

impl Span {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn vector_len(&self) -> usize {
        self.len
    }

    pub fn basis(&self) -> &[Vec<Elem>] {
        &self.basis
    }

    /// Reduce `v` against the basis; zero residue means membership.
    fn residue(&self, field: &FiniteField, v: &[Elem]) -> Vec<Elem> {
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let c = r[p];
            if c != 0 {
                for (x, &y) in r.iter_mut().zip(row) {
                    *x = field.sub(*x, field.mul(c, y));
                }
            }
        }
        r
    }

    pub fn contains(&self, field: &FiniteField, v: &[Elem]) -> bool {
        v.len() == self.len && self.residue(field, v).iter().all(|&x| x == 0)
    }

    /// Span of this subspace together with `v`.
    pub fn extended(&self, field: &FiniteField, v: &[Elem]) -> Span {
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        gf_solve(field, &rows).expect("equal lengths")
    }
}

/// Row-reduce `rows` to a canonical basis of their span.
pub fn gf_solve(field: &FiniteField, rows: &[Vec<Elem>]) -> Result<Span> {
    let len = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != len) {
        return Err(Error::Dimension("vectors of unequal length".into()));
    }
    let mut m: Vec<Vec<Elem>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..len {
        let Some(pr) = (rank..m.len()).find(|&r| m[r][col] != 0) else { continue };
        m.swap(rank, pr);
        let inv = field.inv(m[rank][col]).expect("nonzero pivot");
        for x in m[rank].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let c = row[col];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = field.sub(*x, field.mul(c, y));
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    m.truncate(rank);
    Ok(Span { len, basis: m, pivots })
}
