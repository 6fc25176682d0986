//! Deterministic constructions of the seven known triangle-free strongly
//! regular graphs, plus the Steiner system S(3,6,22) behind the last three.

mod steiner;

pub use steiner::{
    hyperoval_orbit, hyperovals, is_steiner_3_system, set_orbit, sl3_4_generators, steiner_3_6_22,
    INFINITY as STEINER_INFINITY, STEINER_POINTS,
};

use crate::error::{Error, Result};
use crate::graphcore::{Graph, Permutation, SrgParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NamedGraphId {
    Pentagon,
    Petersen,
    Clebsch,
    HoffmanSingleton,
    Gewirtz,
    M22,
    HigmanSims,
}

impl NamedGraphId {
    pub const ALL: [NamedGraphId; 7] = [
        NamedGraphId::Pentagon,
        NamedGraphId::Petersen,
        NamedGraphId::Clebsch,
        NamedGraphId::HoffmanSingleton,
        NamedGraphId::Gewirtz,
        NamedGraphId::M22,
        NamedGraphId::HigmanSims,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedGraphId::Pentagon => "pentagon",
            NamedGraphId::Petersen => "petersen",
            NamedGraphId::Clebsch => "clebsch",
            NamedGraphId::HoffmanSingleton => "hoffman_singleton",
            NamedGraphId::Gewirtz => "gewirtz",
            NamedGraphId::M22 => "m22",
            NamedGraphId::HigmanSims => "higman_sims",
        }
    }

    pub fn expected_params(self) -> SrgParams {
        let (v, k, l, m) = match self {
            NamedGraphId::Pentagon => (5, 2, 0, 1),
            NamedGraphId::Petersen => (10, 3, 0, 1),
            NamedGraphId::Clebsch => (16, 5, 0, 2),
            NamedGraphId::HoffmanSingleton => (50, 7, 0, 1),
            NamedGraphId::Gewirtz => (56, 10, 0, 2),
            NamedGraphId::M22 => (77, 16, 0, 4),
            NamedGraphId::HigmanSims => (100, 22, 0, 6),
        };
        SrgParams::new(v, k, l, m)
    }
}

impl std::str::FromStr for NamedGraphId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.to_ascii_lowercase().replace('-', "_");
        NamedGraphId::ALL
            .into_iter()
            .find(|id| id.name() == norm)
            .ok_or_else(|| Error::Precondition(format!("unknown graph name '{s}'")))
    }
}

impl std::fmt::Display for NamedGraphId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

pub fn build_named(id: NamedGraphId) -> Graph {
    match id {
        NamedGraphId::Pentagon => pentagon(),
        NamedGraphId::Petersen => petersen(),
        NamedGraphId::Clebsch => clebsch(),
        NamedGraphId::HoffmanSingleton => hoffman_singleton(),
        NamedGraphId::Gewirtz => gewirtz(),
        NamedGraphId::M22 => m22(),
        NamedGraphId::HigmanSims => higman_sims(),
    }
}

pub fn pentagon() -> Graph {
    Graph::from_fn(5, "pentagon", |i, j| j - i == 1 || j - i == 4)
}

/// The 2-subsets of {1..5} in lexicographic order.
pub fn pairs_of_five() -> Vec<(u8, u8)> {
    (1..=5u8).flat_map(|a| (a + 1..=5).map(move |b| (a, b))).collect()
}

fn disjoint(a: (u8, u8), b: (u8, u8)) -> bool {
    a.0 != b.0 && a.0 != b.1 && a.1 != b.0 && a.1 != b.1
}

/// Kneser graph K(5,2): 2-subsets of {1..5}, adjacent when disjoint.
pub fn petersen() -> Graph {
    let p = pairs_of_five();
    Graph::from_fn(10, "petersen", |i, j| disjoint(p[i], p[j]))
}

/// Generators of Sym(5) acting on the Petersen vertices: (1 2) and (1 2 3 4 5).
pub fn petersen_automorphisms() -> Vec<Permutation> {
    let p = pairs_of_five();
    let act = |sigma: &dyn Fn(u8) -> u8| {
        let image = p
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (sigma(a), sigma(b));
                let key = (x.min(y), x.max(y));
                p.iter().position(|&e| e == key).unwrap()
            })
            .collect();
        Permutation::new(image).unwrap()
    };
    vec![
        act(&|x| match x {
            1 => 2,
            2 => 1,
            o => o,
        }),
        act(&|x| x % 5 + 1),
    ]
}

/// Vertex labels of the Clebsch graph: "inf", "1".."5", "12".."45".
pub fn clebsch_labels() -> Vec<String> {
    let mut labels = vec!["inf".to_string()];
    labels.extend((1..=5).map(|i| i.to_string()));
    labels.extend(pairs_of_five().into_iter().map(|(a, b)| format!("{a}{b}")));
    labels
}

/// Vertex ∞ adjacent to the coclique {1..5}; i adjacent to the pairs
/// containing i; pairs adjacent when disjoint.
pub fn clebsch() -> Graph {
    let p = pairs_of_five();
    Graph::from_fn(16, "clebsch", |i, j| match (i, j) {
        (0, 1..=5) => true,
        (0, _) => false,
        (1..=5, 1..=5) => false,
        (1..=5, _) => {
            let (a, b) = p[j - 6];
            a as usize == i || b as usize == i
        }
        _ => disjoint(p[i - 6], p[j - 6]),
    })
}

/// Robertson's pentagon/pentagram construction. Vertices 5h+j are pentagon
/// P_h, vertices 25+5i+j are pentagram Q_i; j of P_h ~ (hi+j) of Q_i.
pub fn hoffman_singleton() -> Graph {
    Graph::from_fn(50, "hoffman_singleton", |x, y| {
        let (x, y) = (x.min(y), x.max(y));
        let (hx, jx) = ((x % 25) / 5, x % 5);
        let (hy, jy) = ((y % 25) / 5, y % 5);
        let d = (jy + 5 - jx) % 5;
        match (x < 25, y < 25) {
            (true, true) => hx == hy && (d == 1 || d == 4),
            (false, false) => hx == hy && (d == 2 || d == 3),
            (true, false) => jy == (hx * hy + jx) % 5,
            (false, true) => unreachable!(),
        }
    })
}

/// The 56 hyperovals of one SL(3,4)-orbit in PG(2,4), adjacent when disjoint.
pub fn gewirtz() -> Graph {
    let ovals = hyperoval_orbit();
    Graph::from_fn(ovals.len(), "gewirtz", |i, j| ovals[i].iter().all(|x| !ovals[j].contains(x)))
}

/// The 77 blocks of S(3,6,22), adjacent when disjoint.
pub fn m22() -> Graph {
    let blocks = steiner_3_6_22();
    Graph::from_fn(blocks.len(), "m22", |i, j| blocks[i].iter().all(|x| !blocks[j].contains(x)))
}

/// Vertex 0 is ∞, vertices 1..=22 the Steiner points, 23..100 the blocks.
pub fn higman_sims() -> Graph {
    let blocks = steiner_3_6_22();
    Graph::from_fn(100, "higman_sims", |i, j| match (i, j) {
        (0, 1..=22) => true,
        (0, _) | (1..=22, 1..=22) => false,
        (1..=22, _) => blocks[j - 23].contains(&(i - 1)),
        _ => blocks[i - 23].iter().all(|x| !blocks[j - 23].contains(x)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcore::{check_generators, srg_params};

    #[test]
    fn every_named_graph_has_its_parameters() {
        for id in NamedGraphId::ALL {
            let g = build_named(id);
            let p = srg_params(&g).unwrap();
            assert_eq!(p, id.expected_params(), "{id}");
            assert!(g.is_triangle_free(), "{id}");
        }
    }

    #[test]
    fn names_round_trip() {
        for id in NamedGraphId::ALL {
            assert_eq!(id.name().parse::<NamedGraphId>().unwrap(), id);
        }
        assert!("dodecahedron".parse::<NamedGraphId>().is_err());
    }

    #[test]
    fn m22_blocks_through_a_point_form_a_coclique() {
        let blocks = steiner_3_6_22();
        let g = m22();
        let through: Vec<usize> = (0..77).filter(|&b| blocks[b].contains(&0)).collect();
        assert_eq!(through.len(), 21);
        for &a in &through {
            for &b in &through {
                assert!(!g.adjacent(a, b));
            }
        }
    }

    #[test]
    fn petersen_generators_are_automorphisms() {
        check_generators(&petersen(), &petersen_automorphisms()).unwrap();
    }

    #[test]
    fn clebsch_labels_match_construction() {
        let l = clebsch_labels();
        assert_eq!(l.len(), 16);
        assert_eq!(l[0], "inf");
        assert_eq!(l[6], "12");
        assert_eq!(l[15], "45");
        let g = clebsch();
        assert!(g.adjacent(1, 6) && g.adjacent(1, 9) && !g.adjacent(1, 10));
    }
}
