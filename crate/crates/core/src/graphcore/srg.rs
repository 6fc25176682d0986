use super::graph::Graph;
use crate::error::{Error, Result};

/// Parameters (v, k, lambda, mu) of a strongly regular graph together with
/// its restricted eigenvalues when they are integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SrgParams {
    pub v: i64,
    pub k: i64,
    pub lambda: i64,
    pub mu: i64,
    /// (lambda - mu)^2 + 4 (k - mu)
    pub disc: i64,
    eigen: Option<(i64, i64)>,
}

fn isqrt(n: i64) -> Option<i64> {
    if n < 0 {
        return None;
    }
    let r = (n as f64).sqrt().round() as i64;
    (r - 1..=r + 1).find(|&x| x >= 0 && x * x == n)
}

impl SrgParams {
    /// Parameters from the four integers; eigenvalues solve
    /// x^2 = k + lambda x + mu (-1 - x).
    pub fn new(v: i64, k: i64, lambda: i64, mu: i64) -> Self {
        let disc = (lambda - mu).pow(2) + 4 * (k - mu);
        let eigen = isqrt(disc).and_then(|r| {
            let (p, m) = (lambda - mu + r, lambda - mu - r);
            (p % 2 == 0 && m % 2 == 0).then_some((p / 2, m / 2))
        });
        SrgParams { v, k, lambda, mu, disc, eigen }
    }

    pub fn is_rational(&self) -> bool {
        self.eigen.is_some()
    }

    /// (e+, e-) with e+ >= 0 > e-.
    pub fn eigenvalues(&self) -> Result<(i64, i64)> {
        self.eigen.ok_or(Error::IrrationalEigenvalues)
    }

    pub fn e_plus(&self) -> Result<i64> {
        Ok(self.eigenvalues()?.0)
    }

    pub fn e_minus(&self) -> Result<i64> {
        Ok(self.eigenvalues()?.1)
    }

    /// Multiplicities (f, g) of e+ and e- from trace conditions.
    pub fn multiplicities(&self) -> Result<(i64, i64)> {
        let (ep, em) = self.eigenvalues()?;
        let f_num = -self.k - (self.v - 1) * em;
        let f = f_num / (ep - em);
        if f_num % (ep - em) != 0 {
            return Err(Error::InvariantViolation(format!("non-integral multiplicity for {self}")));
        }
        Ok((f, self.v - 1 - f))
    }

    pub fn feasibility_identity_holds(&self) -> bool {
        self.k * (self.k - self.lambda - 1) == (self.v - self.k - 1) * self.mu
    }
}

impl std::fmt::Display for SrgParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SRG({},{},{},{})", self.v, self.k, self.lambda, self.mu)
    }
}

/// Extract (v, k, lambda, mu) from a graph, or report a witness that it is
/// not strongly regular.
pub fn srg_params(g: &Graph) -> Result<SrgParams> {
    let n = g.n();
    if n == 0 {
        return Err(Error::Precondition("empty graph".into()));
    }
    let k = g.degree(0);
    if let Some(v) = (0..n).find(|&v| g.degree(v) != k) {
        return Err(Error::NotRegular { vertex: v, degree: g.degree(v), expected: k });
    }
    if k == 0 || k == n - 1 {
        return Err(Error::Precondition("edgeless and complete graphs are excluded".into()));
    }
    let mut lambda = None;
    let mut mu = None;
    for u in 0..n {
        for v in u + 1..n {
            let c = g.neighbors(u).intersection_len(g.neighbors(v));
            let slot = if g.adjacent(u, v) { &mut lambda } else { &mut mu };
            match *slot {
                None => *slot = Some(c),
                Some(x) if x != c => return Err(Error::NotStronglyRegular(u, v)),
                _ => {}
            }
        }
    }
    let p = SrgParams::new(n as i64, k as i64, lambda.unwrap() as i64, mu.unwrap() as i64);
    if !p.feasibility_identity_holds() {
        return Err(Error::InvariantViolation(format!("{p} violates k(k-l-1)=(v-k-1)mu")));
    }
    Ok(p)
}
