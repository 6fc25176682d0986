use super::graph::Graph;
use super::srg::{srg_params, SrgParams};
use crate::error::Result;
use crate::exactmath::{Rational, RationalMatrix};

/// The minimal idempotents of the Bose-Mesner algebra of an SRG.
/// `e1` projects onto the e+ eigenspace, `e2` onto the e- eigenspace.
#[derive(Clone, Debug)]
pub struct Idempotents {
    pub params: SrgParams,
    pub e0: RationalMatrix,
    pub e1: RationalMatrix,
    pub e2: RationalMatrix,
}

/// E0 = J/n, E1 = (A - e-I - ((k-e-)/n)J)/(e+ - e-),
/// E2 = (A - e+I - ((k-e+)/n)J)/(e- - e+).
pub fn minimal_idempotents(g: &Graph) -> Result<Idempotents> {
    let params = srg_params(g)?;
    let (ep, em) = params.eigenvalues()?;
    let n = g.n() as i64;
    let k = params.k;
    let build = |this: i64, other: i64| {
        RationalMatrix::from_fn(g.n(), g.n(), |i, j| {
            let a = i64::from(g.adjacent(i, j));
            let id = i64::from(i == j);
            // (n a - n other id - (k - other)) / (n (this - other))
            Rational::new(n * a - n * other * id - (k - other), n * (this - other))
        })
    };
    Ok(Idempotents {
        params,
        e0: RationalMatrix::ones(g.n(), g.n()).scale(&Rational::new(1, n)),
        e1: build(ep, em),
        e2: build(em, ep),
    })
}
