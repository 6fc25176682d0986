use std::collections::BTreeMap;

use super::certificate::{IntrigueCertificate, Sign, Verifier};
use crate::error::{Error, Result};
use crate::graphcore::VertexSet;

/// A set built from others together with the certificate predicted by the
/// counting argument; the prediction has been re-verified on the graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derived {
    pub set: VertexSet,
    pub certificate: IntrigueCertificate,
}

fn certified(v: &Verifier<'_>, s: &VertexSet, what: &str) -> Result<IntrigueCertificate> {
    v.verify(s)?
        .ok_or_else(|| Error::Precondition(format!("{what} is not intriguing")))
}

fn confirm(v: &Verifier<'_>, set: VertexSet, h1: usize, h2: usize) -> Result<Derived> {
    let predicted = IntrigueCertificate::new(v.params(), h1, h2, set.len())
        .map_err(|e| Error::InvariantViolation(format!("predicted certificate invalid: {e}")))?;
    let actual = v.verify(&set)?;
    if actual != Some(predicted) {
        return Err(Error::InvariantViolation(format!(
            "predicted {predicted}, measured {actual:?}"
        )));
    }
    Ok(Derived { set, certificate: predicted })
}

/// B minus A for nested sets of one sign: (b1 - a2, b2 - a2).
pub fn difference(v: &Verifier<'_>, a: &VertexSet, b: &VertexSet) -> Result<Derived> {
    if !a.bits().is_subset(b.bits()) || a == b {
        return Err(Error::Precondition("difference needs A strictly inside B".into()));
    }
    let (ca, cb) = (certified(v, a, "A")?, certified(v, b, "B")?);
    if ca.sign != cb.sign {
        return Err(Error::Precondition("sets have different signs".into()));
    }
    confirm(v, b.difference(a), cb.h1 - ca.h2, cb.h2 - ca.h2)
}

/// A union B for disjoint sets of one sign: (a1 + b2, a2 + b2).
pub fn union(v: &Verifier<'_>, a: &VertexSet, b: &VertexSet) -> Result<Derived> {
    if !a.bits().is_disjoint(b.bits()) {
        return Err(Error::Precondition("union needs disjoint sets".into()));
    }
    let (ca, cb) = (certified(v, a, "A")?, certified(v, b, "B")?);
    if ca.sign != cb.sign {
        return Err(Error::Precondition("sets have different signs".into()));
    }
    confirm(v, a.union(b), ca.h1 + cb.h2, ca.h2 + cb.h2)
}

/// Complement of I: (k - h2, k - h1), same sign.
pub fn complement(v: &Verifier<'_>, a: &VertexSet) -> Result<Derived> {
    let ca = certified(v, a, "set")?;
    let k = v.params().k as usize;
    confirm(v, a.complement(), k - ca.h2, k - ca.h1)
}

/// Checks |I+ ∩ I-| v = |I+| |I-| for sets of opposite sign and returns the
/// intersection size.
pub fn intersection_check(v: &Verifier<'_>, plus: &VertexSet, minus: &VertexSet) -> Result<usize> {
    let (cp, cm) = (certified(v, plus, "first set")?, certified(v, minus, "second set")?);
    if cp.sign == cm.sign {
        return Err(Error::Precondition("intersection check needs opposite signs".into()));
    }
    let meet = plus.intersection_len(minus);
    if meet * v.graph().n() != plus.len() * minus.len() {
        return Err(Error::InvariantViolation(format!(
            "|I+ ∩ I-| = {meet} but |I+||I-|/v = {}/{}",
            plus.len() * minus.len(),
            v.graph().n()
        )));
    }
    Ok(meet)
}

/// Runs the intersection check over every pair of `plus` x `minus`,
/// certifying each set once. Returns intersection size -> number of pairs.
pub fn intersection_table(
    v: &Verifier<'_>,
    plus: &[VertexSet],
    minus: &[VertexSet],
) -> Result<BTreeMap<usize, usize>> {
    let signs = |sets: &[VertexSet], what: &str| -> Result<Option<Sign>> {
        let mut sign = None;
        for s in sets {
            let c = certified(v, s, what)?;
            if sign.is_some_and(|x| x != c.sign) {
                return Err(Error::Precondition(format!("{what} sets have mixed signs")));
            }
            sign = Some(c.sign);
        }
        Ok(sign)
    };
    if let (Some(a), Some(b)) = (signs(plus, "first")?, signs(minus, "second")?) {
        if a == b {
            return Err(Error::Precondition("intersection check needs opposite signs".into()));
        }
    }
    let n = v.graph().n();
    let mut table = BTreeMap::new();
    for a in plus {
        for b in minus {
            let meet = a.intersection_len(b);
            if meet * n != a.len() * b.len() {
                return Err(Error::InvariantViolation(format!(
                    "|I+ ∩ I-| = {meet} but |I+||I-|/v = {}/{n}",
                    a.len() * b.len()
                )));
            }
            *table.entry(meet).or_insert(0) += 1;
        }
    }
    Ok(table)
}
