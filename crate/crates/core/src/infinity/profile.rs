use std::fmt;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::geometry::{collinearity_graph, IncidenceGeometry, SubGeometry};
use crate::graphcore::VertexSet;
use crate::intrigue::{verify, IntrigueCertificate};

/// Whether |y⊥ ∩ I ∩ ∞| is constant over a class of points y.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Constancy {
    Constant(usize),
    /// The class is empty.
    Vacuous,
    /// Two points of the class with different counts: (point, count) twice.
    NonConstant((usize, usize), (usize, usize)),
}

impl Constancy {
    fn of(values: impl Iterator<Item = (usize, usize)>) -> Self {
        let mut first: Option<(usize, usize)> = None;
        for (y, c) in values {
            match first {
                None => first = Some((y, c)),
                Some((y0, c0)) if c0 != c => return Constancy::NonConstant((y0, c0), (y, c)),
                _ => {}
            }
        }
        first.map_or(Constancy::Vacuous, |(_, c)| Constancy::Constant(c))
    }

    pub fn value(&self) -> Option<usize> {
        match *self {
            Constancy::Constant(c) => Some(c),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        !matches!(self, Constancy::NonConstant(..))
    }
}

impl fmt::Display for Constancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Constancy::Constant(c) => write!(f, "{c}"),
            Constancy::Vacuous => f.write_str("vacuous"),
            Constancy::NonConstant((y0, c0), (y1, c1)) => write!(f, "nonconstant({y0}:{c0},{y1}:{c1})"),
        }
    }
}

/// The (a1, a2) profile of a set I at infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InfinityAnalysis {
    /// Over y in I minus ∞.
    pub a1: Constancy,
    /// Over y outside I and ∞.
    pub a2: Constancy,
    /// |I ∩ ∞|.
    pub meet: usize,
    /// |I minus ∞|.
    pub outside: usize,
}

impl InfinityAnalysis {
    pub fn is_constant(&self) -> bool {
        self.a1.is_constant() && self.a2.is_constant()
    }

    /// (a1, a2) when both classes are non-empty and constant.
    pub fn constants(&self) -> Option<(usize, usize)> {
        Some((self.a1.value()?, self.a2.value()?))
    }
}

/// Measures |y⊥ ∩ I ∩ ∞| for every y off ∞.
pub fn infinity_profile(geo: &IncidenceGeometry, infinity: &BitSet, set: &VertexSet) -> Result<InfinityAnalysis> {
    let n = geo.point_count();
    if infinity.width() != n || set.width() != n {
        return Err(Error::Dimension("set widths differ from the point count".into()));
    }
    let at_inf = set.bits().intersection(infinity);
    let count = |y: usize| (y, geo.neighbours(y).intersection_len(&at_inf));
    let off: Vec<usize> = (0..n).filter(|&y| !infinity.contains(y)).collect();
    Ok(InfinityAnalysis {
        a1: Constancy::of(off.iter().copied().filter(|&y| set.contains(y)).map(count)),
        a2: Constancy::of(off.iter().copied().filter(|&y| !set.contains(y)).map(count)),
        meet: at_inf.len(),
        outside: off.iter().filter(|&&y| set.contains(y)).count(),
    })
}

/// Both sides of the at-infinity equivalence for one set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtInfinityVerdict {
    pub ambient: IntrigueCertificate,
    pub profile: InfinityAnalysis,
    /// Certificate of I minus ∞ in the derived geometry, if intriguing there.
    pub restricted: Option<IntrigueCertificate>,
    /// The restriction is empty or everything, so neither side is defined.
    pub degenerate: bool,
}

/// Checks that I minus ∞ is intriguing in `sub` exactly when I is intriguing
/// at infinity, and that then h1' = h1 - a1 and h2' = h2 - a2.
pub fn check_atinfinity(geo: &IncidenceGeometry, sub: &SubGeometry, set: &VertexSet) -> Result<AtInfinityVerdict> {
    let ambient = verify(&collinearity_graph(geo), set)?
        .ok_or_else(|| Error::Precondition("set is not intriguing in the ambient geometry".into()))?;
    let mut infinity = BitSet::full(geo.point_count());
    for &p in &sub.vertex_map {
        infinity.remove(p);
    }
    let profile = infinity_profile(geo, &infinity, set)?;
    let restricted_set = sub.restrict(set);
    if restricted_set.is_empty() || restricted_set.len() == sub.geometry.point_count() {
        return Ok(AtInfinityVerdict { ambient, profile, restricted: None, degenerate: true });
    }
    let restricted = verify(&collinearity_graph(&sub.geometry), &restricted_set)?;
    match (restricted, profile.constants()) {
        (Some(c), Some((a1, a2))) => {
            if c.h1 + a1 != ambient.h1 || c.h2 + a2 != ambient.h2 {
                return Err(Error::InvariantViolation(format!(
                    "restricted ({},{}) but ambient ({},{}) minus ({a1},{a2})",
                    c.h1, c.h2, ambient.h1, ambient.h2
                )));
            }
        }
        (None, None) => {}
        (r, _) => {
            return Err(Error::InvariantViolation(format!(
                "restriction intriguing: {}, profile constant: {}",
                r.is_some(),
                profile.is_constant()
            )))
        }
    }
    Ok(AtInfinityVerdict { ambient, profile, restricted, degenerate: false })
}
