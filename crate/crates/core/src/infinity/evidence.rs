use std::fmt;

use super::complete::complete_to_hemisystem;
use super::predict::{predict_infinity_params, Scenario, SetKind};
use super::profile::{check_atinfinity, Constancy};
use crate::error::{Error, Result};
use crate::geometry::{
    classify_point_set, collinearity_graph, cone, is_hemisystem, minus_perp, restrict_to_set, IncidenceGeometry,
    SubGeometry,
};
use crate::graphcore::VertexSet;
use crate::intrigue::{verify, IntrigueCertificate, Sign};

/// A report made of `key=value` records with a fixed field order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Evidence {
    pub title: String,
    pub records: Vec<Vec<(&'static str, String)>>,
}

impl Evidence {
    fn new(title: impl Into<String>) -> Self {
        Evidence { title: title.into(), records: Vec::new() }
    }

    pub fn field<'a>(&'a self, record: usize, key: &str) -> Option<&'a str> {
        self.records.get(record)?.iter().find(|(k, _)| *k == key).map(|(_, v)| v.as_str())
    }

    /// Records whose `key` equals `value`.
    pub fn count(&self, key: &str, value: &str) -> usize {
        (0..self.records.len()).filter(|&r| self.field(r, key) == Some(value)).count()
    }
}

impl fmt::Display for Evidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# {}", self.title)?;
        for r in &self.records {
            let line: Vec<String> = r.iter().map(|(k, v)| format!("{k}={v}")).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

fn cert_field(c: Option<IntrigueCertificate>) -> String {
    c.map_or("none".into(), |c| format!("{}:{},{}", c.sign.short(), c.h1, c.h2))
}

/// How a negative intriguing set of G minus P⊥ arises.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NegativeSetClass {
    /// Disjoint union of the cones of these ambient points of P⊥.
    ConeUnion(Vec<usize>),
    /// H minus P⊥ for a hemisystem H of G.
    HemisystemDerived(VertexSet),
    Other,
}

impl NegativeSetClass {
    pub fn tag(&self) -> &'static str {
        match self {
            NegativeSetClass::ConeUnion(_) => "cone-union",
            NegativeSetClass::HemisystemDerived(_) => "hemisystem",
            NegativeSetClass::Other => "other",
        }
    }
}

fn exact_cover(target: &VertexSet, pieces: &[(usize, VertexSet)]) -> Option<Vec<usize>> {
    fn go(rest: &VertexSet, pieces: &[(usize, VertexSet)], chosen: &mut Vec<usize>) -> bool {
        let Some(x) = rest.indices().first().copied() else {
            return true;
        };
        for (z, piece) in pieces {
            if piece.contains(x) && piece.bits().is_subset(rest.bits()) {
                chosen.push(*z);
                if go(&rest.difference(piece), pieces, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let mut chosen = Vec::new();
    go(target, pieces, &mut chosen).then(|| {
        chosen.sort_unstable();
        chosen
    })
}

/// Sorts a negative set of G minus P⊥ (indices of `mp`) into the two known
/// families or `Other`.
pub fn classify_negative_set(
    geo: &IncidenceGeometry,
    p: usize,
    mp: &SubGeometry,
    set: &VertexSet,
) -> Result<NegativeSetClass> {
    let cones: Vec<(usize, VertexSet)> = geo
        .neighbours(p)
        .iter()
        .map(|z| cone(geo, mp, p, z).map(|c| (z, c)))
        .collect::<Result<_>>()?;
    let inside: Vec<(usize, VertexSet)> =
        cones.into_iter().filter(|(_, c)| c.bits().is_subset(set.bits())).collect();
    if let Some(zs) = exact_cover(set, &inside) {
        return Ok(NegativeSetClass::ConeUnion(zs));
    }
    let s = geo.s();
    if s % 2 == 1 && [s * s * (s * s - 1) / 2, s * s * (s * s + 1) / 2].contains(&set.len()) {
        let done = complete_to_hemisystem(geo, p, mp, set)?;
        return Ok(NegativeSetClass::HemisystemDerived(done.hemisystem));
    }
    Ok(NegativeSetClass::Other)
}

/// One record per negative set of G minus P⊥: size, certificate and class.
pub fn negint_minusperp_evidence(geo: &IncidenceGeometry, p: usize, sets: &[VertexSet]) -> Result<Evidence> {
    let mp = minus_perp(geo, p)?;
    let pq = collinearity_graph(&mp.geometry);
    let mut ev = Evidence::new(format!("negative sets of {} minus P-perp, P={p}", geo.name()));
    for (i, set) in sets.iter().enumerate() {
        let cert = verify(&pq, set)?;
        let class = if cert.map(|c| c.sign) == Some(Sign::Negative) {
            classify_negative_set(geo, p, &mp, set)?
        } else {
            NegativeSetClass::Other
        };
        let detail = match &class {
            NegativeSetClass::ConeUnion(zs) => zs.iter().map(|z| z.to_string()).collect::<Vec<_>>().join(","),
            _ => "-".into(),
        };
        ev.records.push(vec![
            ("set", i.to_string()),
            ("size", set.len().to_string()),
            ("certificate", cert_field(cert)),
            ("class", class.tag().into()),
            ("cones", detail),
        ]);
    }
    Ok(ev)
}

/// For each other hemisystem I: is I minus H negative intriguing in G minus H?
pub fn hemi_negint2_evidence(geo: &IncidenceGeometry, h: &VertexSet, others: &[VertexSet]) -> Result<Evidence> {
    if !is_hemisystem(geo, h) {
        return Err(Error::Precondition("H is not a hemisystem".into()));
    }
    let sub = restrict_to_set(geo, &h.complement())?;
    let mut ev = Evidence::new(format!("hemisystem differences in {} minus H", geo.name()));
    for (i, other) in others.iter().enumerate() {
        if !is_hemisystem(geo, other) {
            return Err(Error::Precondition(format!("set {i} is not a hemisystem")));
        }
        let v = check_atinfinity(geo, &sub, other)?;
        let holds = v.degenerate || v.restricted.map(|c| c.sign) == Some(Sign::Negative);
        ev.records.push(vec![
            ("set", i.to_string()),
            ("meet", other.intersection_len(h).to_string()),
            ("outside", v.profile.outside.to_string()),
            ("a1", v.profile.a1.to_string()),
            ("a2", v.profile.a2.to_string()),
            ("restricted", cert_field(v.restricted)),
            ("degenerate", v.degenerate.to_string()),
            ("holds", holds.to_string()),
        ]);
    }
    Ok(ev)
}

/// Profile of a hemisystem at every P⊥, compared with the minus-perp table.
pub fn nice_hemi_evidence(geo: &IncidenceGeometry, h: &VertexSet) -> Result<Evidence> {
    if !is_hemisystem(geo, h) {
        return Err(Error::Precondition("H is not a hemisystem".into()));
    }
    let s = geo.s() as i64;
    let m = (s + 1) / 2;
    let mut ev = Evidence::new(format!("hemisystem at every perp of {}", geo.name()));
    for p in 0..geo.point_count() {
        let mp = minus_perp(geo, p)?;
        let v = check_atinfinity(geo, &mp, h)?;
        let pred = predict_infinity_params(SetKind::MOvoid(m), s, Scenario::MinusPerp { p_in_set: h.contains(p) })?;
        let meet_ok = pred.count == Some(v.profile.meet as i64);
        let table = match v.profile.constants() {
            Some((a1, a2)) => pred.a1 == Some(a1 as i64) && pred.a2 == Some(a2 as i64) && meet_ok,
            None => meet_ok,
        };
        if !table {
            return Err(Error::InvariantViolation(format!("minus-perp table disagrees at P={p}")));
        }
        ev.records.push(vec![
            ("p", p.to_string()),
            ("in_h", h.contains(p).to_string()),
            ("a1", v.profile.a1.to_string()),
            ("a2", v.profile.a2.to_string()),
            ("meet", v.profile.meet.to_string()),
            ("restricted", cert_field(v.restricted)),
        ]);
    }
    Ok(ev)
}

/// An m-ovoid whose minus-perp restriction is intriguing must be a
/// hemisystem. Returns the restricted certificate, if any.
pub fn negative_filter(geo: &IncidenceGeometry, set: &VertexSet, p: usize) -> Result<Option<IntrigueCertificate>> {
    let s = geo.s();
    let Some(m) = classify_point_set(geo, set)?.m(s) else {
        return Err(Error::Precondition("set is not an m-ovoid".into()));
    };
    let mp = minus_perp(geo, p)?;
    let v = check_atinfinity(geo, &mp, set)?;
    if v.restricted.is_some() && 2 * m != s + 1 {
        return Err(Error::InvariantViolation(format!("{m}-ovoid restricts to an intriguing set at P={p}")));
    }
    Ok(v.restricted)
}

impl Constancy {
    /// Short name of the outcome for reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Constancy::Constant(_) => "constant",
            Constancy::Vacuous => "vacuous",
            Constancy::NonConstant(..) => "nonconstant",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{elliptic_gq, find_hemisystem, find_hemisystem_with};
    use crate::intrigue::{enumerate, EnumerateOptions};

    #[test]
    fn every_negative_set_at_q2_is_a_cone() {
        let geo = elliptic_gq(2).unwrap().into_geometry();
        let mp = minus_perp(&geo, 0).unwrap();
        let pq = collinearity_graph(&mp.geometry);
        let found = enumerate(&pq, Some(Sign::Negative), &EnumerateOptions::default()).unwrap();
        let sets: Vec<VertexSet> = found.found.into_iter().map(|f| f.set).collect();
        assert_eq!(sets.len(), 10);
        let ev = negint_minusperp_evidence(&geo, 0, &sets).unwrap();
        assert_eq!(ev.count("class", "cone-union"), 10);
    }

    #[test]
    fn hemisystem_restrictions_classify_as_hemisystems() {
        let geo = elliptic_gq(3).unwrap().into_geometry();
        let h = find_hemisystem(&geo).unwrap();
        let mp = minus_perp(&geo, 0).unwrap();
        let class = classify_negative_set(&geo, 0, &mp, &mp.restrict(&h)).unwrap();
        assert_eq!(class, NegativeSetClass::HemisystemDerived(h));
    }

    #[test]
    fn second_hemisystem_difference() {
        let geo = elliptic_gq(3).unwrap().into_geometry();
        let h = find_hemisystem(&geo).unwrap();
        let out = h.indices()[0];
        let other = find_hemisystem_with(&geo, &[], &[out]).unwrap();
        assert_ne!(other, h);
        let ev = hemi_negint2_evidence(&geo, &h, &[other, h.complement()]).unwrap();
        assert_eq!(ev.records.len(), 2);
        assert_eq!(ev.field(1, "degenerate"), Some("true"));
        let text = ev.to_string();
        assert!(text.starts_with("# hemisystem differences"));
    }

    #[test]
    fn hemisystem_passes_the_filter() {
        let geo = elliptic_gq(3).unwrap().into_geometry();
        let h = find_hemisystem(&geo).unwrap();
        assert!(negative_filter(&geo, &h, 0).unwrap().is_some());
        let line = geo.vertex_set(geo.line(0).to_vec());
        assert!(negative_filter(&geo, &line, 0).is_err());
    }
}
