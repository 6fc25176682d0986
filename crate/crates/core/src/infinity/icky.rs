use super::blocks::BlockDecomposition;
use crate::error::{Error, Result};
use crate::exactmath::{Rational, RationalMatrix};
use crate::geometry::{collinearity_graph, IncidenceGeometry};
use crate::graphcore::VertexSet;
use crate::intrigue::{verify, Sign};

/// Which identities were checked for one choice of P.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IckyReport {
    pub p: usize,
    pub s: usize,
    /// The closed form of (D - λI)^-1.
    pub inverse_closed_form: bool,
    /// C (D - λI)^-1 1 = 1.
    pub row_sums: bool,
    /// C C^T = (s+1)J - sB + (s^2-s)I.
    pub cct_structure: bool,
    /// Number of negative sets for which both identities of (c) were checked.
    pub sets_checked: usize,
}

fn fail(msg: String) -> Error {
    Error::InvariantViolation(msg)
}

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| Rational::from(x)).collect()
}

/// (D - λI)^-1 with λ = -s^2 - 1, for blocks at P⊥ with P last.
pub fn perp_resolvent(bd: &BlockDecomposition, s: i64) -> Result<RationalMatrix> {
    let m = bd.deleted();
    let lambda = -s * s - 1;
    let shifted = bd.d.sub(&RationalMatrix::from_integer_fn(m, m, |i, j| if i == j { lambda } else { 0 }))?;
    shifted.inverse()
}

/// The right-hand side of the closed form, divided by s^3(s^2+1)(s+1).
pub fn resolvent_closed_form(bd: &BlockDecomposition, s: i64) -> RationalMatrix {
    let m = bd.deleted();
    let last = m - 1;
    let d = |i: usize, j: usize| bd.d.get(i, j).to_i64().expect("0/1 entry");
    let scale = s.pow(3) * (s * s + 1) * (s + 1);
    RationalMatrix::from_fn(m, m, |i, j| {
        let id = i64::from(i == j);
        let mm = i64::from(i == last && j != last) + i64::from(j == last && i != last);
        let e = i64::from(i == last && j == last);
        let v = (s.pow(4) + s.pow(3) + s - 1) * id + 1 - (s * s + 1) * d(i, j) - s * mm + s * (s * s + s - 1) * e;
        Rational::new(v, scale)
    })
}

/// Checks (a), (b), the structure of C C^T and, for every given negative
/// intriguing set of G minus P⊥ (indices of that PQ), the two identities of (c).
pub fn icky_identities(geo: &IncidenceGeometry, p: usize, negative_sets: &[VertexSet]) -> Result<IckyReport> {
    let (s, t) = geo.order();
    if !geo.is_gq() || t != s * s {
        return Err(Error::Precondition("need a GQ of order (s, s^2)".into()));
    }
    let si = s as i64;
    let bd = BlockDecomposition::at_perp(geo, p)?;
    let inv = perp_resolvent(&bd, si)?;
    if inv != resolvent_closed_form(&bd, si) {
        return Err(fail(format!("closed form of (D - λI)^-1 fails at P = {p}")));
    }
    let k = bd.kept;
    let m = bd.deleted();
    let ones_pq = ints(&vec![1; k]);
    let c_inv = bd.c.mul(&inv)?;
    if c_inv.mul_vec(&ints(&vec![1; m]))? != ones_pq {
        return Err(fail(format!("C (D - λI)^-1 1 ≠ 1 at P = {p}")));
    }
    let ct = bd.c.transpose();
    let cct = bd.c.mul(&ct)?;
    let expected = RationalMatrix::from_integer_fn(k, k, |i, j| {
        (si + 1) - si * bd.b.get(i, j).to_i64().unwrap() + (si * si - si) * i64::from(i == j)
    });
    if cct != expected {
        return Err(fail(format!("C C^T ≠ (s+1)J - sB + (s^2-s)I at P = {p}")));
    }
    let pq = collinearity_graph(&crate::geometry::minus_perp(geo, p)?.geometry);
    let c_inv_ct = c_inv.mul(&ct)?;
    for set in negative_sets {
        let cert = verify(&pq, set)?
            .filter(|c| c.sign == Sign::Negative)
            .ok_or_else(|| Error::Precondition("set is not negative intriguing in G minus P⊥".into()))?;
        // block order of the PQ equals its own index order
        let chi: Vec<i64> = (0..k).map(|i| i64::from(set.contains(i))).collect();
        let size = set.len() as i64;
        let want1: Vec<i64> = chi.iter().map(|&x| si.pow(3) * x + si * size).collect();
        if cct.mul_vec(&ints(&chi))? != ints(&want1) {
            return Err(fail(format!("C C^T χ ≠ s^3 χ + s|I| 1 at P = {p}")));
        }
        let want2: Vec<i64> = chi.iter().map(|&x| si * x + cert.h2 as i64).collect();
        if c_inv_ct.mul_vec(&ints(&chi))? != ints(&want2) {
            return Err(fail(format!("C (D - λI)^-1 C^T χ ≠ s χ + h2' 1 at P = {p}")));
        }
    }
    Ok(IckyReport {
        p,
        s,
        inverse_closed_form: true,
        row_sums: true,
        cct_structure: true,
        sets_checked: negative_sets.len(),
    })
}
