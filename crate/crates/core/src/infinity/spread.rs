use super::profile::{infinity_profile, InfinityAnalysis};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::{collinearity_graph, is_hemisystem, restrict_to_set, IncidenceGeometry};
use crate::graphcore::VertexSet;
use crate::intrigue::{verify, IntrigueCertificate};

/// Outcome for the point set of a partial spread against a hemisystem H.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpreadVerdict {
    pub lines: usize,
    pub profile: InfinityAnalysis,
    /// Certificate of I minus H in the PQ on the complement of H.
    pub restricted: Option<IntrigueCertificate>,
    /// ((c - s^2 + s)/2 - 1, c/2).
    pub predicted: (i64, i64),
    /// Points off I ∪ H seeing exactly c/2 covered points inside H.
    pub half_outside: bool,
    /// The same count for points of H not in I (reported only).
    pub half_in_h: bool,
    /// I minus H is empty or all of the complement of H.
    pub degenerate: bool,
}

pub fn partial_spread_infinity(geo: &IncidenceGeometry, h: &VertexSet, lines: &[usize]) -> Result<SpreadVerdict> {
    let c = lines.len();
    if c % 2 == 1 {
        return Err(Error::Precondition(format!("partial spread has an odd number {c} of lines")));
    }
    if !is_hemisystem(geo, h) {
        return Err(Error::Precondition("H is not a hemisystem".into()));
    }
    let mut covered = vec![false; geo.point_count()];
    for &l in lines {
        for &x in geo.line(l) {
            if std::mem::replace(&mut covered[x], true) {
                return Err(Error::Precondition(format!("lines of the spread meet in point {x}")));
            }
        }
    }
    let set = geo.vertex_set((0..geo.point_count()).filter(|&x| covered[x]));
    let profile = infinity_profile(geo, h.bits(), &set)?;
    let s = geo.s() as i64;
    let ci = c as i64;
    let predicted = ((ci - s * s + s) / 2 - 1, ci / 2);
    let outside_h = h.complement();
    let sub = restrict_to_set(geo, &outside_h)?;
    let rset = sub.restrict(&set);
    let degenerate = rset.is_empty() || rset.len() == sub.geometry.point_count();
    let restricted = if degenerate {
        None
    } else {
        verify(&collinearity_graph(&sub.geometry), &rset)?
    };
    let in_h_seen = |y: usize| geo.neighbours(y).iter().filter(|&x| covered[x] && h.contains(x)).count();
    let half_outside = (0..geo.point_count()).filter(|&y| !covered[y] && !h.contains(y)).all(|y| 2 * in_h_seen(y) == c);
    let half_in_h = (0..geo.point_count()).filter(|&y| !covered[y] && h.contains(y)).all(|y| 2 * in_h_seen(y) == c);
    if profile.is_constant() && !degenerate {
        let got = restricted.map(|r| (r.h1 as i64, r.h2 as i64));
        if got != Some(predicted) || !half_outside {
            return Err(Error::InvariantViolation(format!(
                "intriguing at infinity but restricted certificate {got:?} differs from {predicted:?}"
            )));
        }
    }
    Ok(SpreadVerdict { lines: c, profile, restricted, predicted, half_outside, half_in_h, degenerate })
}

/// Tally of a seeded scan over random partial spreads.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SpreadScan {
    pub tried: usize,
    pub degenerate: usize,
    /// Spreads whose profile is constant and whose restriction is intriguing.
    pub passing: Vec<(Vec<usize>, SpreadVerdict)>,
}

/// Builds `tries` random maximal partial spreads (greedy over a shuffled
/// line order) and checks every even prefix of at least `min_lines` lines.
pub fn scan_partial_spreads(
    geo: &IncidenceGeometry,
    h: &VertexSet,
    seed: u64,
    tries: usize,
    min_lines: usize,
) -> Result<SpreadScan> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..geo.lines().len()).collect();
    let mut scan = SpreadScan::default();
    for _ in 0..tries {
        order.shuffle(&mut rng);
        let mut used = vec![false; geo.point_count()];
        let mut spread = Vec::new();
        for &l in &order {
            if geo.line(l).iter().all(|&x| !used[x]) {
                geo.line(l).iter().for_each(|&x| used[x] = true);
                spread.push(l);
            }
        }
        for c in (min_lines.max(2)..=spread.len()).filter(|c| c % 2 == 0) {
            let v = partial_spread_infinity(geo, h, &spread[..c])?;
            scan.tried += 1;
            scan.degenerate += usize::from(v.degenerate);
            if v.restricted.is_some() {
                scan.passing.push((spread[..c].to_vec(), v));
            }
        }
    }
    Ok(scan)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{elliptic_gq, find_hemisystem};

    fn greedy_spread(geo: &IncidenceGeometry) -> Vec<usize> {
        let mut used = vec![false; geo.point_count()];
        let mut out = Vec::new();
        for (l, pts) in geo.lines().iter().enumerate() {
            if pts.iter().all(|&x| !used[x]) {
                pts.iter().for_each(|&x| used[x] = true);
                out.push(l);
            }
        }
        out
    }

    #[test]
    fn odd_and_overlapping_inputs_are_refused() {
        let geo = elliptic_gq(3).unwrap().into_geometry();
        let h = find_hemisystem(&geo).unwrap();
        let spread = greedy_spread(&geo);
        assert!(partial_spread_infinity(&geo, &h, &spread[..3]).is_err());
        let a = geo.lines_on(0)[0];
        let b = geo.lines_on(0)[1];
        assert!(partial_spread_infinity(&geo, &h, &[a, b]).is_err());
    }

    #[test]
    fn skew_pairs_report_their_prediction() {
        let geo = elliptic_gq(3).unwrap().into_geometry();
        let h = find_hemisystem(&geo).unwrap();
        let spread = greedy_spread(&geo);
        let v = partial_spread_infinity(&geo, &h, &spread[..2]).unwrap();
        assert_eq!(v.predicted, (-3, 1));
        assert!(!v.profile.is_constant());
        assert!(v.restricted.is_none());
    }

    #[test]
    fn seeded_scan_is_reproducible() {
        let geo = elliptic_gq(3).unwrap().into_geometry();
        let h = find_hemisystem(&geo).unwrap();
        let a = scan_partial_spreads(&geo, &h, 7, 3, 8).unwrap();
        let b = scan_partial_spreads(&geo, &h, 7, 3, 8).unwrap();
        assert_eq!(a, b);
        assert!(a.tried > 0);
    }
}
