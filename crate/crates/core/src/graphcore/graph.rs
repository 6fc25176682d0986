use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::exactmath::RationalMatrix;

/// Simple undirected graph with bitset adjacency. Vertex order is the
/// construction order and is preserved by every file format.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<BitSet>,
    label: String,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph({}, n={}, edges={})", self.label, self.n(), self.edge_count())
    }
}

impl Graph {
    /// Build from a symmetric adjacency predicate; only pairs `i < j` are queried.
    pub fn from_fn(n: usize, label: impl Into<String>, adjacent: impl Fn(usize, usize) -> bool) -> Self {
        let mut adj = vec![BitSet::new(n); n];
        for i in 0..n {
            for j in i + 1..n {
                if adjacent(i, j) {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
            }
        }
        Graph { adj, label: label.into() }
    }

    pub fn from_edges(
        n: usize,
        label: impl Into<String>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut adj = vec![BitSet::new(n); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Precondition(format!("edge ({u}, {v}) out of range for n={n}")));
            }
            if u == v {
                return Err(Error::Precondition(format!("loop at vertex {u}")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { adj, label: label.into() })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BitSet::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(u, v)| self.adj[u].is_disjoint(&self.adj[v]))
    }

    pub fn adjacency_matrix(&self) -> RationalMatrix {
        RationalMatrix::from_integer_fn(self.n(), self.n(), |i, j| i64::from(self.adjacent(i, j)))
    }

    /// Induced subgraph on `vertices`, in the given order.
    pub fn induced(&self, vertices: &[usize], label: impl Into<String>) -> Graph {
        Graph::from_fn(vertices.len(), label, |i, j| self.adjacent(vertices[i], vertices[j]))
    }

    pub fn vertex_set(&self, vertices: impl IntoIterator<Item = usize>) -> VertexSet {
        VertexSet::new(self, vertices)
    }
}

/// A subset of the vertices of one particular graph. Equality and ordering
/// look only at the members.
#[derive(Clone)]
pub struct VertexSet {
    bits: BitSet,
    graph_label: String,
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.bits)
    }
}

impl VertexSet {
    pub fn new(g: &Graph, vertices: impl IntoIterator<Item = usize>) -> Self {
        VertexSet { bits: BitSet::from_indices(g.n(), vertices), graph_label: g.label().to_string() }
    }

    pub fn from_bits(bits: BitSet, graph_label: impl Into<String>) -> Self {
        VertexSet { bits, graph_label: graph_label.into() }
    }

    pub fn bits(&self) -> &BitSet {
        &self.bits
    }

    pub fn graph_label(&self) -> &str {
        &self.graph_label
    }

    pub fn width(&self) -> usize {
        self.bits.width()
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits.contains(v)
    }

    pub fn indices(&self) -> Vec<usize> {
        self.bits.to_vec()
    }

    pub fn complement(&self) -> VertexSet {
        VertexSet { bits: self.bits.complement(), graph_label: self.graph_label.clone() }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet { bits: self.bits.union(&other.bits), graph_label: self.graph_label.clone() }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet { bits: self.bits.difference(&other.bits), graph_label: self.graph_label.clone() }
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.bits.intersection_len(&other.bits)
    }

    pub(crate) fn check_width(&self, g: &Graph) -> Result<()> {
        if self.width() != g.n() {
            return Err(Error::Dimension(format!(
                "vertex set of width {} used with a graph on {} vertices",
                self.width(),
                g.n()
            )));
        }
        Ok(())
    }
}

impl PartialEq for VertexSet {
    fn eq(&self, other: &Self) -> bool {
        self.bits == other.bits
    }
}

impl Eq for VertexSet {}

impl std::hash::Hash for VertexSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.bits.hash(state);
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order on sorted index lists.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.bits.iter().cmp(other.bits.iter())
    }
}
