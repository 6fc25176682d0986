use super::incidence::{GeometryKind, IncidenceGeometry};
use super::quadric::{ClassicalGq, QuadricKind};
use crate::error::{Error, Result};
use crate::exactmath::gf_solve;
use crate::graphcore::VertexSet;

/// A geometry carved out of an ambient one, with the index maps between them.
#[derive(Clone, Debug)]
pub struct SubGeometry {
    pub geometry: IncidenceGeometry,
    /// New index to ambient index.
    pub vertex_map: Vec<usize>,
    /// Ambient index to new index.
    pub inverse: Vec<Option<usize>>,
}

impl SubGeometry {
    fn assemble(
        ambient: &IncidenceGeometry,
        keep: &[usize],
        name: String,
        s: usize,
        t: usize,
        mu: usize,
        min_line: usize,
    ) -> Result<Self> {
        let mut inverse = vec![None; ambient.point_count()];
        for (k, &p) in keep.iter().enumerate() {
            inverse[p] = Some(k);
        }
        let lines: Vec<Vec<usize>> = ambient
            .lines()
            .iter()
            .map(|l| l.iter().filter_map(|&x| inverse[x]).collect::<Vec<_>>())
            .filter(|l: &Vec<usize>| l.len() >= min_line)
            .collect();
        let geometry = IncidenceGeometry::new(name, keep.len(), lines, s, t, GeometryKind::Pq { mu })?;
        Ok(SubGeometry { geometry, vertex_map: keep.to_vec(), inverse })
    }

    /// Map an ambient point set into this geometry, dropping absent points.
    pub fn restrict(&self, ambient: &VertexSet) -> VertexSet {
        self.geometry.vertex_set(ambient.indices().into_iter().filter_map(|p| self.inverse[p]))
    }

    /// Map a set of this geometry back to ambient indices.
    pub fn lift(&self, set: &VertexSet, ambient: &IncidenceGeometry) -> VertexSet {
        ambient.vertex_set(set.indices().into_iter().map(|p| self.vertex_map[p]))
    }
}

fn require_gq_s_s2(geo: &IncidenceGeometry) -> Result<()> {
    let (s, t) = geo.order();
    if !geo.is_gq() || t != s * s {
        return Err(Error::Precondition(format!(
            "{} is not a GQ of order (s, s^2): order ({s},{t})",
            geo.name()
        )));
    }
    Ok(())
}

/// The GQ with P⊥ removed: a PQ(s-1, s^2, s(s-1)) on s^4 points.
pub fn minus_perp(geo: &IncidenceGeometry, p: usize) -> Result<SubGeometry> {
    require_gq_s_s2(geo)?;
    if p >= geo.point_count() {
        return Err(Error::Precondition(format!("point {p} out of range")));
    }
    let s = geo.s();
    let perp = geo.perp(p);
    let keep: Vec<usize> = (0..geo.point_count()).filter(|&x| !perp.contains(x)).collect();
    let name = format!("{}_minus_perp_{p}", geo.name());
    SubGeometry::assemble(geo, &keep, name, s - 1, s * s, s * (s - 1), 2)
}

/// A line of `geo` meeting `h` in other than (s+1)/2 points, if any.
pub fn hemisystem_witness(geo: &IncidenceGeometry, h: &VertexSet) -> Option<usize> {
    let m = (geo.s() + 1) / 2;
    (0..geo.lines().len()).find(|&l| geo.line(l).iter().filter(|&&x| h.contains(x)).count() != m)
}

pub fn is_hemisystem(geo: &IncidenceGeometry, h: &VertexSet) -> bool {
    geo.s() % 2 == 1 && hemisystem_witness(geo, h).is_none()
}

/// The PQ((s-1)/2, s^2, (s-1)^2/2) induced on a hemisystem.
pub fn restrict_to_set(geo: &IncidenceGeometry, h: &VertexSet) -> Result<SubGeometry> {
    require_gq_s_s2(geo)?;
    let s = geo.s();
    if s % 2 == 0 {
        return Err(Error::Precondition("hemisystems need odd s".into()));
    }
    if let Some(l) = hemisystem_witness(geo, h) {
        return Err(Error::Precondition(format!("not a hemisystem: line {l} {:?}", geo.line(l))));
    }
    let name = format!("{}_hemisystem", geo.name());
    SubGeometry::assemble(geo, &h.indices(), name, (s - 1) / 2, s * s, (s - 1) * (s - 1) / 2, 1)
}

/// Z⊥ minus P⊥ for Z ≠ P collinear with P, as a set of the minus-perp PQ.
pub fn cone(geo: &IncidenceGeometry, mp: &SubGeometry, p: usize, z: usize) -> Result<VertexSet> {
    if z == p || !geo.collinear(p, z) {
        return Err(Error::Precondition(format!("point {z} is not in P⊥ minus P for P = {p}")));
    }
    let zp = geo.perp(z);
    let set = geo.vertex_set(zp.iter());
    Ok(mp.restrict(&set))
}

/// The hyperbolic section through two lines on P and a point X off P⊥,
/// before and after removing P⊥.
#[derive(Clone, Debug)]
pub struct Grid {
    pub ambient: VertexSet,
    pub set: VertexSet,
}

/// Points of Q-(5,q) in the 3-space spanned by lines l1, l2 through P and a
/// point X not collinear with P, minus P⊥.
pub fn grid(gq: &ClassicalGq, mp: &SubGeometry, p: usize, l1: usize, l2: usize, x: usize) -> Result<Grid> {
    let geo = gq.geometry();
    if gq.kind() != QuadricKind::Elliptic {
        return Err(Error::Precondition("grids are taken in Q-(5,q)".into()));
    }
    let (a, b) = (geo.line(l1), geo.line(l2));
    if l1 == l2 || !a.contains(&p) || !b.contains(&p) {
        return Err(Error::Precondition("need two distinct lines through P".into()));
    }
    if x == p || geo.collinear(p, x) {
        return Err(Error::Precondition(format!("point {x} lies in P⊥")));
    }
    let other = |l: &[usize]| *l.iter().find(|&&y| y != p).unwrap();
    let rows: Vec<_> = [p, other(a), other(b), x].iter().map(|&i| gq.coords(i).to_vec()).collect();
    let span = gf_solve(gq.field(), &rows)?;
    let q = geo.s();
    let pts = gq.section(span.basis())?;
    let hyperbolic = span.rank() == 4 && pts.len() == (q + 1) * (q + 1) && {
        // every point of a Q+(3,q) lies on exactly two section lines
        let inside = geo.vertex_set(pts.iter().copied());
        pts.iter().all(|&y| {
            geo.lines_on(y).iter().filter(|&&l| geo.line(l).iter().all(|&z| inside.contains(z))).count() == 2
        })
    };
    if !hyperbolic {
        return Err(Error::Precondition(format!("3-space section has {} points and is not hyperbolic", pts.len())));
    }
    let ambient = geo.vertex_set(pts);
    let set = mp.restrict(&ambient);
    Ok(Grid { ambient, set })
}

/// What kind of special point set a set of a GQ is.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointSetTag {
    /// Every line meets the set in m points.
    MOvoid(usize),
    /// An m-ovoid with m = (s+1)/2 in a GQ of order (s, s^2).
    Hemisystem,
    /// A positive intriguing set with h1 = i+s-1, h2 = i.
    ITight(usize),
    None,
}

impl PointSetTag {
    /// The constant m for m-ovoids and hemisystems.
    pub fn m(&self, s: usize) -> Option<usize> {
        match *self {
            PointSetTag::MOvoid(m) => Some(m),
            PointSetTag::Hemisystem => Some(s.div_ceil(2)),
            _ => None,
        }
    }
}

pub fn classify_point_set(geo: &IncidenceGeometry, set: &VertexSet) -> Result<PointSetTag> {
    if set.is_empty() || set.len() == geo.point_count() {
        return Ok(PointSetTag::None);
    }
    let meets: Vec<usize> = geo
        .lines()
        .iter()
        .map(|l| l.iter().filter(|&&x| set.contains(x)).count())
        .collect();
    if let Some(&m) = meets.first() {
        if meets.iter().all(|&c| c == m) && m > 0 {
            let hemi = geo.is_gq() && geo.t() == geo.s() * geo.s() && geo.s() % 2 == 1 && 2 * m == geo.s() + 1;
            return Ok(if hemi { PointSetTag::Hemisystem } else { PointSetTag::MOvoid(m) });
        }
    }
    if !geo.is_gq() {
        return Ok(PointSetTag::None);
    }
    let g = super::collinearity_graph(geo);
    match crate::intrigue::verify(&g, set)? {
        Some(c) if c.h1 + 1 == c.h2 + geo.s() => Ok(PointSetTag::ITight(c.h2)),
        _ => Ok(PointSetTag::None),
    }
}
