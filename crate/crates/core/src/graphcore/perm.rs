use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::graph::{Graph, VertexSet};
use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// A permutation of {0..n-1}, stored as its image array.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &x in &image {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(format!("{x} repeated or out of range")));
            }
        }
        Ok(Permutation { image })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { image: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// `self` then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation { image: self.image.iter().map(|&x| other.image[x]).collect() }
    }

    pub fn apply_set(&self, s: &BitSet) -> BitSet {
        BitSet::from_indices(s.width(), s.iter().map(|v| self.image[v]))
    }

    /// The first edge whose image is a non-edge, if any.
    pub fn violated_edge(&self, g: &Graph) -> Option<(usize, usize)> {
        if self.len() != g.n() {
            return Some((0, 0));
        }
        g.edges().find(|&(u, v)| !g.adjacent(self.image[u], self.image[v]))
    }
}

/// Relabel `g` by `p`: vertex `v` becomes `p(v)`. Errors unless `p` is an
/// automorphism, so the result always equals `g`.
pub fn apply_perm(g: &Graph, p: &Permutation) -> Result<Graph> {
    check_generators(g, std::slice::from_ref(p))?;
    let inv = {
        let mut inv = vec![0; p.len()];
        for (i, &x) in p.image().iter().enumerate() {
            inv[x] = i;
        }
        inv
    };
    Ok(Graph::from_fn(g.n(), g.label(), |i, j| g.adjacent(inv[i], inv[j])))
}

pub fn check_generators(g: &Graph, gens: &[Permutation]) -> Result<()> {
    for (index, p) in gens.iter().enumerate() {
        if p.len() != g.n() {
            return Err(Error::InvalidPermutation(format!(
                "generator {index} acts on {} points, graph has {}",
                p.len(),
                g.n()
            )));
        }
        if let Some((u, v)) = p.violated_edge(g) {
            return Err(Error::NotAutomorphism { index, u, v });
        }
    }
    Ok(())
}

/// One orbit of vertex sets: its lexicographically least member and size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetOrbit {
    pub representative: VertexSet,
    pub size: usize,
}

/// Partition `sets` into orbits under the group generated by `gens`, by
/// breadth-first closure. Orbits are reported in order of representative.
pub fn orbits(g: &Graph, sets: &[VertexSet], gens: &[Permutation]) -> Result<Vec<SetOrbit>> {
    check_generators(g, gens)?;
    let mut rep_of: BTreeMap<BitSet, BitSet> = BTreeMap::new();
    let mut out: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for s in sets {
        s.check_width(g)?;
        if rep_of.contains_key(s.bits()) {
            continue;
        }
        let mut orbit: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut members = vec![s.bits().clone()];
        orbit.insert(s.bits().to_vec());
        let mut queue = VecDeque::from([s.bits().clone()]);
        while let Some(cur) = queue.pop_front() {
            for p in gens {
                let img = p.apply_set(&cur);
                if orbit.insert(img.to_vec()) {
                    members.push(img.clone());
                    queue.push_back(img);
                }
            }
        }
        let rep_key = orbit.iter().next().unwrap().clone();
        let rep = BitSet::from_indices(g.n(), rep_key.iter().copied());
        for m in members {
            rep_of.insert(m, rep.clone());
        }
        out.insert(rep_key, orbit.len());
    }
    Ok(out
        .into_iter()
        .map(|(k, size)| SetOrbit { representative: VertexSet::new(g, k), size })
        .collect())
}

/// Lexicographically least image of `s` under the group generated by `gens`.
pub fn canonical_representative(g: &Graph, s: &VertexSet, gens: &[Permutation]) -> Result<VertexSet> {
    Ok(orbits(g, std::slice::from_ref(s), gens)?.remove(0).representative)
}
