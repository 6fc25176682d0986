use super::blocks::BlockDecomposition;
use super::icky::perp_resolvent;
use crate::error::{Error, Result};
use crate::exactmath::Rational;
use crate::geometry::{collinearity_graph, is_hemisystem, IncidenceGeometry, SubGeometry};
use crate::graphcore::VertexSet;
use crate::intrigue::{verify, Sign};

/// The points added inside P⊥ and the resulting hemisystem (ambient indices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Completion {
    pub added: VertexSet,
    pub hemisystem: VertexSet,
}

/// Completes a negative intriguing set I of G minus P⊥ of size
/// s^2(s^2 ± 1)/2 to a hemisystem of G through
/// v = (D - λI)^-1 (-C^T χ_I + h2 1) with h2 = (s^2+1)(s+1)/2.
pub fn complete_to_hemisystem(
    geo: &IncidenceGeometry,
    p: usize,
    mp: &SubGeometry,
    set: &VertexSet,
) -> Result<Completion> {
    let (s, t) = geo.order();
    if !geo.is_gq() || t != s * s || s % 2 == 0 {
        return Err(Error::Precondition("need a GQ of order (s, s^2) with s odd".into()));
    }
    let sizes = [s * s * (s * s - 1) / 2, s * s * (s * s + 1) / 2];
    if !sizes.contains(&set.len()) {
        return Err(Error::Precondition(format!("size {} is neither {} nor {}", set.len(), sizes[0], sizes[1])));
    }
    let cert = verify(&collinearity_graph(&mp.geometry), set)?;
    if cert.map(|c| c.sign) != Some(Sign::Negative) {
        return Err(Error::Precondition("set is not negative intriguing in G minus P⊥".into()));
    }
    let bd = BlockDecomposition::at_perp(geo, p)?;
    if bd.order[..bd.kept] != mp.vertex_map[..] {
        return Err(Error::Precondition("minus-perp geometry does not match P".into()));
    }
    let si = s as i64;
    let h2 = (si * si + 1) * (si + 1) / 2;
    let inv = perp_resolvent(&bd, si)?;
    let chi: Vec<Rational> = (0..bd.kept).map(|i| Rational::from(i64::from(set.contains(i)))).collect();
    let ct_chi = bd.c.transpose().mul_vec(&chi)?;
    let rhs: Vec<Rational> = ct_chi.iter().map(|x| Rational::from(h2) - x.clone()).collect();
    let v = inv.mul_vec(&rhs)?;
    let mut added = Vec::new();
    for (j, x) in v.iter().enumerate() {
        if *x == Rational::one() {
            added.push(bd.order[bd.kept + j]);
        } else if !x.is_zero() {
            return Err(Error::InvariantViolation(format!("completion vector has entry {x}")));
        }
    }
    let added = geo.vertex_set(added);
    let hemisystem = mp.lift(set, geo).union(&added);
    if !is_hemisystem(geo, &hemisystem) {
        return Err(Error::InvariantViolation("completed set is not a hemisystem".into()));
    }
    Ok(Completion { added, hemisystem })
}
