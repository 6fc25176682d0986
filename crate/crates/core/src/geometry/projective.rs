use crate::exactmath::{Elem, FiniteField};
use crate::error::Result;

/// A point of PG(n, q): a nonzero homogeneous vector whose first nonzero
/// coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint {
    pub coords: Vec<Elem>,
}

/// Scale `v` so its first nonzero coordinate is 1. `None` for the zero vector.
pub fn normalize(field: &FiniteField, v: &[Elem]) -> Option<Vec<Elem>> {
    let lead = *v.iter().find(|&&x| x != 0)?;
    let inv = field.inv(lead)?;
    Some(v.iter().map(|&x| field.mul(x, inv)).collect())
}

/// Base-q integer code of a vector (first coordinate most significant).
pub fn encode(q: u32, v: &[Elem]) -> usize {
    v.iter().fold(0usize, |acc, &x| acc * q as usize + x as usize)
}

pub fn decode(q: u32, len: usize, mut code: usize) -> Vec<Elem> {
    let mut v = vec![0; len];
    for x in v.iter_mut().rev() {
        *x = (code % q as usize) as Elem;
        code /= q as usize;
    }
    v
}

/// The points of PG(n, q), sorted lexicographically by coordinates, with
/// constant-time lookup from any nonzero vector to its point index.
#[derive(Clone, Debug)]
pub struct ProjectiveSpace {
    n: usize,
    field: FiniteField,
    points: Vec<ProjectivePoint>,
    lookup: Vec<u32>,
}

impl ProjectiveSpace {
    pub fn new(n: usize, q: u32) -> Result<Self> {
        let field = FiniteField::new(q)?;
        let total = (q as usize).pow(n as u32 + 1);
        let mut points = Vec::new();
        let mut lookup = vec![u32::MAX; total];
        for code in 1..total {
            let v = decode(q, n + 1, code);
            if v.iter().find(|&&x| x != 0) == Some(&1) {
                lookup[code] = points.len() as u32;
                points.push(ProjectivePoint { coords: v });
            }
        }
        for code in 1..total {
            if lookup[code] == u32::MAX {
                let v = decode(q, n + 1, code);
                let nv = normalize(&field, &v).expect("nonzero");
                lookup[code] = lookup[encode(q, &nv)];
            }
        }
        Ok(ProjectiveSpace { n, field, points, lookup })
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn q(&self) -> u32 {
        self.field.order()
    }

    pub fn points(&self) -> &[ProjectivePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn coords(&self, i: usize) -> &[Elem] {
        &self.points[i].coords
    }

    /// Index of the point spanned by `v`, or `None` for the zero vector.
    pub fn index_of(&self, v: &[Elem]) -> Option<usize> {
        let code = encode(self.q(), v);
        (code != 0).then(|| self.lookup[code] as usize)
    }

    /// Sorted indices of the q+1 points on the line through points `a != b`.
    pub fn line_through(&self, a: usize, b: usize) -> Vec<usize> {
        let f = &self.field;
        let (pa, pb) = (self.coords(a), self.coords(b));
        let mut line: Vec<usize> = vec![a];
        for t in f.elements() {
            let v: Vec<Elem> = pa.iter().zip(pb).map(|(&x, &y)| f.add(f.mul(t, x), y)).collect();
            line.push(self.index_of(&v).expect("distinct points"));
        }
        line.sort_unstable();
        line.dedup();
        line
    }

    /// All lines of the space as sorted point lists, sorted.
    pub fn lines(&self) -> Vec<Vec<usize>> {
        let mut seen = std::collections::BTreeSet::new();
        for a in 0..self.len() {
            for b in a + 1..self.len() {
                let l = self.line_through(a, b);
                if l[0] == a && l[1] == b {
                    seen.insert(l);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Permutation of the points induced by a linear map `x -> M x`
    /// (`m` row-major, `(n+1) x (n+1)`, assumed invertible).
    pub fn induced_permutation(&self, m: &[Elem]) -> Vec<usize> {
        let d = self.n + 1;
        let f = &self.field;
        (0..self.len())
            .map(|i| {
                let x = self.coords(i);
                let y: Vec<Elem> = (0..d).map(|r| f.dot(&m[r * d..(r + 1) * d], x)).collect();
                self.index_of(&y).expect("invertible map")
            })
            .collect()
    }
}

/// All points of PG(n, q) in lexicographic order.
pub fn pg_points(n: usize, q: u32) -> Result<Vec<ProjectivePoint>> {
    Ok(ProjectiveSpace::new(n, q)?.points)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_counts() {
        assert_eq!(pg_points(2, 2).unwrap().len(), 7);
        assert_eq!(pg_points(4, 3).unwrap().len(), 121);
        assert_eq!(pg_points(5, 4).unwrap().len(), 1365);
        assert_eq!(pg_points(2, 4).unwrap().len(), 21);
    }

    #[test]
    fn sorted_and_normalized() {
        let pts = pg_points(3, 3).unwrap();
        assert!(pts.windows(2).all(|w| w[0] < w[1]));
        assert!(pts.iter().all(|p| p.coords.iter().find(|&&x| x != 0) == Some(&1)));
    }

    #[test]
    fn lines_of_fano_plane() {
        let s = ProjectiveSpace::new(2, 2).unwrap();
        let lines = s.lines();
        assert_eq!(lines.len(), 7);
        assert!(lines.iter().all(|l| l.len() == 3));
    }

    #[test]
    fn lookup_accepts_scalar_multiples() {
        let s = ProjectiveSpace::new(2, 3).unwrap();
        let i = s.index_of(&[0, 1, 2]).unwrap();
        assert_eq!(s.index_of(&[0, 2, 1]), Some(i));
        assert_eq!(s.index_of(&[0, 0, 0]), None);
    }
}
