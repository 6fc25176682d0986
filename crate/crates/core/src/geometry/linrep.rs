use std::collections::BTreeSet;

use super::cap::Cap;
use super::incidence::{GeometryKind, IncidenceGeometry};
use super::projective::{decode, encode, ProjectiveSpace};
use crate::error::{Error, Result};
use crate::exactmath::{gf_solve, Elem, FiniteField, Span};
use crate::graphcore::{srg_params, Graph, SrgParams, VertexSet};

/// The linear representation of a cap K of PG(n,q): affine points of
/// PG(n+1,q), joined when their direction lies in K.
#[derive(Clone, Debug)]
pub struct LinearRepresentation {
    pub cap: Cap,
    pub field: FiniteField,
    pub graph: Graph,
    /// A PQ(q-1, |K|-1, mu) when the graph is strongly regular and the PQ
    /// axioms hold; otherwise the raw line structure.
    pub geometry: IncidenceGeometry,
    pub srg: Option<SrgParams>,
}

impl LinearRepresentation {
    /// Affine dimension n+1.
    pub fn affine_dim(&self) -> usize {
        self.cap.dimension() + 1
    }

    pub fn point_count(&self) -> usize {
        self.graph.n()
    }

    /// Coordinates of affine point `i` in GF(q)^(n+1).
    pub fn affine_coords(&self, i: usize) -> Vec<Elem> {
        decode(self.cap.q(), self.affine_dim(), i)
    }

    /// Homogeneous coordinates (0, c) of the cap points in PG(n+1,q).
    pub fn cap_at_infinity(&self) -> Vec<Vec<Elem>> {
        self.cap.points().iter().map(|p| std::iter::once(0).chain(p.coords.iter().copied()).collect()).collect()
    }

    fn cap_meet(&self, span: &Span) -> usize {
        self.cap_at_infinity().iter().filter(|c| span.contains(&self.field, c)).count()
    }

    fn affine_in(&self, span: &Span) -> VertexSet {
        self.graph.vertex_set((0..self.point_count()).filter(|&i| {
            let mut v = vec![1];
            v.extend(self.affine_coords(i));
            span.contains(&self.field, &v)
        }))
    }
}

pub fn linear_representation(cap: &Cap) -> LinearRepresentation {
    let q = cap.q();
    let field = FiniteField::new(q).expect("cap field is supported");
    let d = cap.dimension() + 1;
    let size = (q as usize).pow(d as u32);
    let mut direction = vec![false; size];
    for p in cap.points() {
        for a in field.elements().skip(1) {
            let v: Vec<Elem> = p.coords.iter().map(|&x| field.mul(a, x)).collect();
            direction[encode(q, &v)] = true;
        }
    }
    let coords: Vec<Vec<Elem>> = (0..size).map(|i| decode(q, d, i)).collect();
    let graph = Graph::from_fn(size, format!("linrep_{}cap_pg{}_{}", cap.len(), cap.dimension(), q), |i, j| {
        let diff: Vec<Elem> = coords[i].iter().zip(&coords[j]).map(|(&a, &b)| field.sub(a, b)).collect();
        direction[encode(q, &diff)]
    });
    let mut lines = BTreeSet::new();
    for x in &coords {
        for p in cap.points() {
            let mut l: Vec<usize> = field
                .elements()
                .map(|t| {
                    let v: Vec<Elem> = x.iter().zip(&p.coords).map(|(&a, &c)| field.add(a, field.mul(t, c))).collect();
                    encode(q, &v)
                })
                .collect();
            l.sort_unstable();
            lines.insert(l);
        }
    }
    let lines: Vec<Vec<usize>> = lines.into_iter().collect();
    let srg = srg_params(&graph).ok();
    let (s, t) = (q as usize - 1, cap.len().saturating_sub(1));
    let name = graph.label().to_string();
    let geometry = srg
        .and_then(|p| {
            IncidenceGeometry::new(name.clone(), size, lines.clone(), s, t, GeometryKind::Pq { mu: p.mu as usize }).ok()
        })
        .unwrap_or_else(|| {
            IncidenceGeometry::new_unchecked(name, size, lines, s, t, GeometryKind::Raw).expect("well-formed lines")
        });
    LinearRepresentation { cap: cap.clone(), field, graph, geometry, srg }
}

/// Affine points of a subspace together with the certificate predicted by
/// the counting lemmas.
#[derive(Clone, Debug)]
pub struct SubspaceSet {
    pub set: VertexSet,
    /// |subspace ∩ K|.
    pub cap_meet: usize,
    /// (h1, h2) predicted.
    pub predicted: (usize, usize),
}

fn span_of(rep: &LinearRepresentation, basis: &[Vec<Elem>], rank: usize, what: &str) -> Result<Span> {
    let len = rep.affine_dim() + 1;
    if basis.iter().any(|r| r.len() != len) {
        return Err(Error::Dimension(format!("{what} basis vectors must have length {len}")));
    }
    let span = gf_solve(&rep.field, basis)?;
    if span.rank() != rank {
        return Err(Error::Precondition(format!("{what} basis has rank {}, expected {rank}", span.rank())));
    }
    Ok(span)
}

fn is_at_infinity(span: &Span) -> bool {
    span.basis().iter().all(|r| r[0] == 0)
}

/// Affine points of a hyperplane π ≠ π∞, with parameters
/// ((q-1)|π∩K|, |K∖π|).
pub fn hyperplane_affine_set(rep: &LinearRepresentation, basis: &[Vec<Elem>]) -> Result<SubspaceSet> {
    let span = span_of(rep, basis, rep.affine_dim(), "hyperplane")?;
    if is_at_infinity(&span) {
        return Err(Error::Precondition("the hyperplane at infinity has no affine points".into()));
    }
    let meet = rep.cap_meet(&span);
    let q = rep.cap.q() as usize;
    Ok(SubspaceSet { set: rep.affine_in(&span), cap_meet: meet, predicted: ((q - 1) * meet, rep.cap.len() - meet) })
}

/// The hyperplanes of PG(n+1,q) containing a codimension-2 subspace.
pub fn hyperplanes_through(rep: &LinearRepresentation, span: &Span) -> Vec<Span> {
    let space = ProjectiveSpace::new(rep.affine_dim(), rep.cap.q()).expect("supported field");
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for w in space.points() {
        if span.contains(&rep.field, &w.coords) {
            continue;
        }
        let h = span.extended(&rep.field, &w.coords);
        if seen.insert(h.basis().to_vec()) {
            out.push(h);
        }
    }
    out
}

/// Affine points of a secundum S, with parameters
/// ((q-1)|S∩K|, |π∩K| - |S∩K|), after checking that every hyperplane π on S
/// meets K in the same number of points.
pub fn secundum_affine_set(rep: &LinearRepresentation, basis: &[Vec<Elem>]) -> Result<SubspaceSet> {
    let span = span_of(rep, basis, rep.affine_dim() - 1, "secundum")?;
    if is_at_infinity(&span) {
        return Err(Error::Precondition("the secundum lies at infinity".into()));
    }
    let hyper = hyperplanes_through(rep, &span);
    let meets: Vec<usize> = hyper.iter().map(|h| rep.cap_meet(h)).collect();
    if let Some(i) = meets.iter().position(|&m| m != meets[0]) {
        return Err(Error::Precondition(format!(
            "hyperplanes {:?} and {:?} on the secundum meet the cap in {} and {} points",
            hyper[0].basis(),
            hyper[i].basis(),
            meets[0],
            meets[i]
        )));
    }
    let meet = rep.cap_meet(&span);
    let q = rep.cap.q() as usize;
    Ok(SubspaceSet { set: rep.affine_in(&span), cap_meet: meet, predicted: ((q - 1) * meet, meets[0] - meet) })
}

/// Basis of the hyperplane a·x = 0 of PG(n+1,q).
pub fn hyperplane_from_equation(field: &FiniteField, a: &[Elem]) -> Result<Vec<Vec<Elem>>> {
    let j = a.iter().position(|&x| x != 0).ok_or_else(|| Error::Precondition("zero equation".into()))?;
    let inv = field.inv(a[j]).expect("nonzero");
    Ok((0..a.len())
        .filter(|&i| i != j)
        .map(|i| {
            let mut v = vec![0; a.len()];
            v[i] = 1;
            v[j] = field.neg(field.mul(a[i], inv));
            v
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::ProjectivePoint;
    use crate::intrigue::verify;

    fn coxeter_cap() -> Cap {
        let rows: [[Elem; 5]; 11] = [
            [0, 0, 0, 0, 1],
            [0, 0, 0, 1, 0],
            [0, 0, 1, 0, 0],
            [0, 1, 0, 0, 0],
            [0, 1, 1, 1, 1],
            [1, 0, 0, 0, 0],
            [1, 0, 1, 1, 2],
            [1, 1, 0, 2, 1],
            [1, 1, 2, 0, 2],
            [1, 2, 1, 2, 0],
            [1, 2, 2, 1, 1],
        ];
        Cap::new(4, 3, rows.iter().map(|r| ProjectivePoint { coords: r.to_vec() }).collect()).unwrap()
    }

    #[test]
    fn hyperoval_gives_the_grid_graph() {
        let pts = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]];
        let cap = Cap::new(2, 2, pts.iter().map(|r| ProjectivePoint { coords: r.to_vec() }).collect()).unwrap();
        let rep = linear_representation(&cap);
        assert_eq!(rep.srg, Some(SrgParams::new(8, 4, 0, 4)));
        assert_eq!(rep.geometry.lines().len(), 16);
    }

    #[test]
    fn coxeter_representation_and_subspaces() {
        let rep = linear_representation(&coxeter_cap());
        assert_eq!(rep.srg, Some(SrgParams::new(243, 22, 1, 2)));
        assert!(rep.geometry.kind() == GeometryKind::Pq { mu: 2 });
        let mut seen = BTreeSet::new();
        for a in [[0, 1, 0, 0, 0, 0], [0, 0, 0, 0, 0, 1], [0, 1, 1, 1, 1, 0], [1, 1, 0, 0, 0, 0], [0, 1, 2, 0, 1, 1]] {
            let basis = hyperplane_from_equation(&rep.field, &a).unwrap();
            let h = hyperplane_affine_set(&rep, &basis).unwrap();
            assert_eq!(h.set.len(), 81);
            let cert = verify(&rep.graph, &h.set).unwrap().unwrap();
            assert_eq!((cert.h1, cert.h2), h.predicted);
            seen.insert(h.predicted);
        }
        assert_eq!(seen, BTreeSet::from([(4, 9), (10, 6)]));
    }

    #[test]
    fn qualifying_secundum() {
        let rep = linear_representation(&coxeter_cap());
        let inf = rep.cap_at_infinity();
        let mut found = 0;
        for i in 0..inf.len() {
            for j in i + 1..inf.len() {
                for k in j + 1..inf.len() {
                    let basis = vec![vec![1, 0, 0, 0, 0, 0], inf[i].clone(), inf[j].clone(), inf[k].clone()];
                    if let Ok(s) = secundum_affine_set(&rep, &basis) {
                        assert_eq!(s.set.len(), 27);
                        let cert = verify(&rep.graph, &s.set).unwrap().unwrap();
                        assert_eq!((cert.h1, cert.h2), s.predicted);
                        assert_eq!(s.predicted, (6, 2));
                        found += 1;
                    }
                }
            }
        }
        assert!(found > 0);
    }

    #[test]
    fn bad_subspaces_are_refused() {
        let rep = linear_representation(&coxeter_cap());
        let at_inf = hyperplane_from_equation(&rep.field, &[1, 0, 0, 0, 0, 0]).unwrap();
        assert!(hyperplane_affine_set(&rep, &at_inf).is_err());
        assert!(hyperplane_affine_set(&rep, &at_inf[..3]).is_err());
    }
}
