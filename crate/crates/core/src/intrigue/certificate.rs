use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graphcore::{regularity_profile, srg_params, Graph, SrgParams, VertexSet};

/// Positive sets have h1 - h2 = e+, negative sets h1 - h2 = e-.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn eigenvalue(self, p: &SrgParams) -> Result<i64> {
        match self {
            Sign::Positive => p.e_plus(),
            Sign::Negative => p.e_minus(),
        }
    }

    pub fn opposite(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn short(self) -> &'static str {
        match self {
            Sign::Positive => "pos",
            Sign::Negative => "neg",
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "positive",
            Sign::Negative => "negative",
        })
    }
}

impl FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "pos" | "positive" | "+" => Ok(Sign::Positive),
            "neg" | "negative" | "-" => Ok(Sign::Negative),
            other => Err(Error::Precondition(format!("unknown sign {other:?}"))),
        }
    }
}

/// A verified intersection-number witness for a vertex set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntrigueCertificate {
    pub sign: Sign,
    pub h1: usize,
    pub h2: usize,
    pub size: usize,
}

impl IntrigueCertificate {
    /// Check h1 - h2 is a restricted eigenvalue, the ranges, and the size
    /// formula |I| = h2 v / (k - h1 + h2).
    pub fn new(p: &SrgParams, h1: usize, h2: usize, size: usize) -> Result<Self> {
        let (ep, em) = p.eigenvalues()?;
        let diff = h1 as i64 - h2 as i64;
        let sign = if diff == ep {
            Sign::Positive
        } else if diff == em {
            Sign::Negative
        } else {
            return Err(Error::Precondition(format!("h1-h2 = {diff} is not an eigenvalue of {p}")));
        };
        if h1 as i64 > p.k || h2 == 0 || h2 as i64 > p.k {
            return Err(Error::Precondition(format!("({h1},{h2}) out of range for {p}")));
        }
        if (h2 as i64) * p.v != (size as i64) * (p.k - diff) {
            return Err(Error::Precondition(format!(
                "size {size} contradicts h2 v / (k - h1 + h2) for ({h1},{h2}) in {p}"
            )));
        }
        Ok(IntrigueCertificate { sign, h1, h2, size })
    }

    pub fn eigenvalue(&self) -> i64 {
        self.h1 as i64 - self.h2 as i64
    }
}

impl fmt::Display for IntrigueCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({},{}) size {}", self.sign, self.h1, self.h2, self.size)
    }
}

/// One admissible parameter row: sign, h1, h2 and the forced size N.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FeasibleRow {
    pub sign: Sign,
    pub h1: usize,
    pub h2: usize,
    pub size: usize,
}

/// Every (h1, h2) with h1 - h2 in {e+, e-}, 0 <= h1 <= k, 1 <= h2 <= k and
/// N = h2 v / (k - h1 + h2) an integer in [1, v-1]. Sorted by sign then h2.
pub fn feasible_params(p: &SrgParams) -> Result<Vec<FeasibleRow>> {
    let mut rows = Vec::new();
    for sign in [Sign::Positive, Sign::Negative] {
        let e = sign.eigenvalue(p)?;
        for h2 in 1..=p.k {
            let h1 = h2 + e;
            if h1 < 0 || h1 > p.k {
                continue;
            }
            let num = h2 * p.v;
            if num % (p.k - e) != 0 {
                continue;
            }
            let n = num / (p.k - e);
            if (1..p.v).contains(&n) {
                rows.push(FeasibleRow { sign, h1: h1 as usize, h2: h2 as usize, size: n as usize });
            }
        }
    }
    Ok(rows)
}

/// Caches the parameters of a host graph so that many sets can be checked.
#[derive(Clone, Debug)]
pub struct Verifier<'g> {
    graph: &'g Graph,
    params: SrgParams,
}

impl<'g> Verifier<'g> {
    pub fn new(graph: &'g Graph) -> Result<Self> {
        let params = srg_params(graph)?;
        params.eigenvalues()?;
        Ok(Verifier { graph, params })
    }

    pub fn params(&self) -> &SrgParams {
        &self.params
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    /// Certificate when both degree multisets are constant. The answer is
    /// cross-checked against annihilation by the opposite idempotent.
    pub fn verify(&self, s: &VertexSet) -> Result<Option<IntrigueCertificate>> {
        let prof = regularity_profile(self.graph, s)?;
        let by_degrees = match prof.constants() {
            Some((h1, h2)) => Some(IntrigueCertificate::new(&self.params, h1, h2, s.len()).map_err(|e| {
                Error::InvariantViolation(format!("regular partition without eigenvalue: {e}"))
            })?),
            None => None,
        };
        let annihilated = [Sign::Positive, Sign::Negative]
            .into_iter()
            .find(|&sign| self.annihilated_by_opposite(s, sign));
        if by_degrees.map(|c| c.sign) != annihilated {
            return Err(Error::InvariantViolation(format!(
                "degree test {:?} disagrees with idempotent test {:?}",
                by_degrees.map(|c| c.sign),
                annihilated
            )));
        }
        Ok(by_degrees)
    }

    /// True when the idempotent of the eigenvalue opposite to `sign`
    /// annihilates the characteristic vector of `s`. With e the eigenvalue of
    /// `sign`, n times that idempotent applied to chi is proportional to
    /// n (A chi - e chi) - (k - e)|S| 1.
    pub fn annihilated_by_opposite(&self, s: &VertexSet, sign: Sign) -> bool {
        let e = sign.eigenvalue(&self.params).expect("rational");
        let n = self.graph.n() as i64;
        let size = s.len() as i64;
        (0..self.graph.n()).all(|x| {
            let ax = self.graph.neighbors(x).intersection_len(s.bits()) as i64;
            let chi = i64::from(s.contains(x));
            n * (ax - e * chi) == (self.params.k - e) * size
        })
    }
}

/// Certificate for `s` in `g`, or `None` when `s` is not intriguing.
pub fn verify(g: &Graph, s: &VertexSet) -> Result<Option<IntrigueCertificate>> {
    Verifier::new(g)?.verify(s)
}
