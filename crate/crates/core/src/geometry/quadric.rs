use super::incidence::{GeometryKind, IncidenceGeometry};
use super::projective::ProjectiveSpace;
use crate::error::{Error, Result};
use crate::exactmath::{gf_solve, Elem, FiniteField};

/// Q(x) = sum over i <= j of c_ij x_i x_j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticForm {
    dim: usize,
    coeffs: Vec<Elem>,
}

impl QuadraticForm {
    /// From (i, j, c) triples with i <= j.
    pub fn new(dim: usize, terms: &[(usize, usize, Elem)]) -> Result<Self> {
        let mut coeffs = vec![0; dim * dim];
        for &(i, j, c) in terms {
            if i > j || j >= dim {
                return Err(Error::Dimension(format!("term ({i},{j}) outside upper triangle of {dim}")));
            }
            coeffs[i * dim + j] = c;
        }
        Ok(QuadraticForm { dim, coeffs })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeff(&self, i: usize, j: usize) -> Elem {
        self.coeffs[i * self.dim + j]
    }

    pub fn eval(&self, f: &FiniteField, x: &[Elem]) -> Elem {
        let mut acc = 0;
        for i in 0..self.dim {
            if x[i] == 0 {
                continue;
            }
            for j in i..self.dim {
                let c = self.coeffs[i * self.dim + j];
                if c != 0 && x[j] != 0 {
                    acc = f.add(acc, f.mul(c, f.mul(x[i], x[j])));
                }
            }
        }
        acc
    }

    /// B(x, y) = Q(x + y) - Q(x) - Q(y).
    pub fn polar(&self, f: &FiniteField, x: &[Elem], y: &[Elem]) -> Elem {
        let s: Vec<Elem> = x.iter().zip(y).map(|(&a, &b)| f.add(a, b)).collect();
        f.sub(f.sub(self.eval(f, &s), self.eval(f, x)), self.eval(f, y))
    }

    /// x0 x1 + x2 x3 + x4^2 + x4 x5 + c x5^2 with c the least element making
    /// the binary part irreducible.
    pub fn elliptic(f: &FiniteField) -> Self {
        let c = f
            .elements()
            .find(|&c| f.elements().all(|t| f.add(f.add(f.mul(t, t), t), c) != 0))
            .expect("an irreducible x^2 + x + c exists over every finite field");
        Self::new(6, &[(0, 1, 1), (2, 3, 1), (4, 4, 1), (4, 5, 1), (5, 5, c)]).expect("valid")
    }

    /// x0 x1 + x2 x3 + x4^2.
    pub fn parabolic() -> Self {
        Self::new(5, &[(0, 1, 1), (2, 3, 1), (4, 4, 1)]).expect("valid")
    }
}

/// Which classical quadric a [`ClassicalGq`] models.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuadricKind {
    /// Q-(5,q), a GQ of order (q, q^2).
    Elliptic,
    /// Q(4,q), a GQ of order (q, q).
    Parabolic,
}

/// A classical GQ with the coordinates of its points. Geometry point `i` is
/// the i-th singular point of the ambient space in lexicographic order.
#[derive(Clone, Debug)]
pub struct ClassicalGq {
    kind: QuadricKind,
    space: ProjectiveSpace,
    form: QuadraticForm,
    points: Vec<usize>,
    local: Vec<Option<usize>>,
    geometry: IncidenceGeometry,
}

impl ClassicalGq {
    fn build(kind: QuadricKind, q: u32) -> Result<Self> {
        if !(2..=5).contains(&q) {
            return Err(Error::UnsupportedField(q));
        }
        let (n, name) = match kind {
            QuadricKind::Elliptic => (5, format!("q_minus_5_{q}")),
            QuadricKind::Parabolic => (4, format!("q_4_{q}")),
        };
        let space = ProjectiveSpace::new(n, q)?;
        let form = match kind {
            QuadricKind::Elliptic => QuadraticForm::elliptic(space.field()),
            QuadricKind::Parabolic => QuadraticForm::parabolic(),
        };
        let f = space.field();
        let points: Vec<usize> = (0..space.len()).filter(|&i| form.eval(f, space.coords(i)) == 0).collect();
        let mut local = vec![None; space.len()];
        for (k, &p) in points.iter().enumerate() {
            local[p] = Some(k);
        }
        let mut lines = Vec::new();
        for (ia, &a) in points.iter().enumerate() {
            for &b in &points[ia + 1..] {
                let l = space.line_through(a, b);
                if l[0] != a || l[1] != b {
                    continue;
                }
                if l.iter().all(|&x| local[x].is_some()) {
                    lines.push(l.iter().map(|&x| local[x].unwrap()).collect::<Vec<_>>());
                }
            }
        }
        lines.sort();
        let s = q as usize;
        let t = match kind {
            QuadricKind::Elliptic => s * s,
            QuadricKind::Parabolic => s,
        };
        let geometry = IncidenceGeometry::new(name, points.len(), lines, s, t, GeometryKind::Gq)?;
        Ok(ClassicalGq { kind, space, form, points, local, geometry })
    }

    pub fn kind(&self) -> QuadricKind {
        self.kind
    }

    pub fn geometry(&self) -> &IncidenceGeometry {
        &self.geometry
    }

    pub fn into_geometry(self) -> IncidenceGeometry {
        self.geometry
    }

    pub fn space(&self) -> &ProjectiveSpace {
        &self.space
    }

    pub fn form(&self) -> &QuadraticForm {
        &self.form
    }

    pub fn field(&self) -> &FiniteField {
        self.space.field()
    }

    /// Homogeneous coordinates of geometry point `i`.
    pub fn coords(&self, i: usize) -> &[Elem] {
        self.space.coords(self.points[i])
    }

    /// Geometry index of the point with coordinates `v`, if singular.
    pub fn index_of(&self, v: &[Elem]) -> Option<usize> {
        self.local[self.space.index_of(v)?]
    }

    /// Geometry points lying in the span of `rows`, sorted.
    pub fn section(&self, rows: &[Vec<Elem>]) -> Result<Vec<usize>> {
        let span = gf_solve(self.field(), rows)?;
        Ok((0..self.points.len()).filter(|&i| span.contains(self.field(), self.coords(i))).collect())
    }

    /// The section by the hyperplane x5 = 0 of Q-(5,q): a Q(4,q).
    pub fn parabolic_section(&self) -> Result<Vec<usize>> {
        self.coordinate_section(5)
    }

    /// The section by x4 = x5 = 0 of Q-(5,q) (or x4 = 0 of Q(4,q)): a Q+(3,q).
    pub fn hyperbolic_section(&self) -> Result<Vec<usize>> {
        self.coordinate_section(4)
    }

    fn coordinate_section(&self, keep: usize) -> Result<Vec<usize>> {
        let d = self.form.dim();
        if keep >= d {
            return Err(Error::Precondition(format!("no {keep}-coordinate section in dimension {d}")));
        }
        let rows: Vec<Vec<Elem>> = (0..keep)
            .map(|i| (0..d).map(|j| Elem::from(i == j)).collect())
            .collect();
        self.section(&rows)
    }
}

/// Q-(5,q): the GQ of order (q, q^2) on the zeros of the fixed elliptic form.
pub fn elliptic_gq(q: u32) -> Result<ClassicalGq> {
    ClassicalGq::build(QuadricKind::Elliptic, q)
}

/// Q(4,q): the GQ of order (q, q) on the zeros of x0 x1 + x2 x3 + x4^2.
pub fn parabolic_gq(q: u32) -> Result<ClassicalGq> {
    ClassicalGq::build(QuadricKind::Parabolic, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::collinearity_graph;
    use crate::graphcore::srg_params;

    fn gq_params(s: i64, t: i64) -> (i64, i64, i64, i64) {
        ((s + 1) * (s * t + 1), s * (t + 1), s - 1, t + 1)
    }

    #[test]
    fn elliptic_q3() {
        let gq = elliptic_gq(3).unwrap();
        let geo = gq.geometry();
        assert_eq!((geo.point_count(), geo.lines().len()), (112, 280));
        let p = srg_params(&collinearity_graph(geo)).unwrap();
        assert_eq!((p.v, p.k, p.lambda, p.mu), gq_params(3, 9));
        assert_eq!(p.eigenvalues().unwrap(), (2, -10));
    }

    #[test]
    fn small_models() {
        let gq = elliptic_gq(2).unwrap();
        assert_eq!(gq.geometry().order(), (2, 4));
        assert_eq!(gq.geometry().point_count(), 27);
        let gq = parabolic_gq(3).unwrap();
        assert_eq!(gq.geometry().point_count(), 40);
        assert_eq!(gq.geometry().order(), (3, 3));
    }

    #[test]
    fn elliptic_form_constant() {
        let f3 = FiniteField::new(3).unwrap();
        assert_eq!(QuadraticForm::elliptic(&f3).coeff(5, 5), 2);
        let f2 = FiniteField::new(2).unwrap();
        assert_eq!(QuadraticForm::elliptic(&f2).coeff(5, 5), 1);
    }

    #[test]
    fn sections_of_elliptic_q3() {
        let gq = elliptic_gq(3).unwrap();
        assert_eq!(gq.parabolic_section().unwrap().len(), 40);
        assert_eq!(gq.hyperbolic_section().unwrap().len(), 16);
    }

    #[test]
    fn unsupported_order() {
        assert!(matches!(elliptic_gq(7), Err(Error::UnsupportedField(7))));
    }

    #[test]
    fn point_count_identity_for_gqs() {
        for q in [2, 3] {
            let geo = elliptic_gq(q).unwrap().into_geometry();
            assert_eq!(geo.expected_point_count(), Some(geo.point_count()));
        }
    }
}
