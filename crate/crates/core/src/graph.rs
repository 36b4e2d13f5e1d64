//! Finite simple graphs on `{1..n}` with bitmask adjacency.

use std::fmt;

use num_bigint::BigInt;

use crate::error::GraphError;
use crate::qpoly::IntPoly;

/// Largest supported vertex count; adjacency rows are single `u64` masks.
pub const MAX_VERTICES: usize = 64;

/// A set of vertices, bit `v - 1` standing for vertex `v`.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << (v - 1))
    }

    /// All of `1..=n`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=64).contains(&v) && self.0 >> (v - 1) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << (v - 1);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Smallest vertex, `None` when empty.
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Vertices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(v + 1)
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    edges: Vec<(usize, usize)>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n = {}, edges = {:?})", self.n, self.edges)
    }
}

impl Graph {
    /// Validates an edge list on vertices `1..=n`. Each pair may be given in
    /// either order but must not repeat.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices {
                n,
                limit: MAX_VERTICES,
            });
        }
        let mut adj = vec![0u64; n];
        let mut list = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            for v in [a, b] {
                if v == 0 || v > n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(GraphError::LoopEdge(a));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if adj[u - 1] >> (v - 1) & 1 == 1 {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            adj[u - 1] |= 1 << (v - 1);
            adj[v - 1] |= 1 << (u - 1);
            list.push((u, v));
        }
        list.sort_unstable();
        Ok(Graph { n, adj, edges: list })
    }

    pub fn empty(n: usize) -> Graph {
        Graph::new(n, &[]).expect("edgeless graph is valid")
    }

    pub fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (1..=n)
            .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
            .collect();
        Graph::new(n, &edges).expect("complete graph is valid")
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|u| (u, u + 1)).collect();
        Graph::new(n, &edges).expect("path is valid")
    }

    /// The graph whose edge set is given by bit `k` of `code`, with edges
    /// ordered `(1,2), (1,3), ..., (1,n), (2,3), ...`.
    pub fn from_edge_code(n: usize, code: u64) -> Graph {
        let edges: Vec<_> = (1..=n)
            .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
            .enumerate()
            .filter(|(k, _)| code >> k & 1 == 1)
            .map(|(_, e)| e)
            .collect();
        Graph::new(n, &edges).expect("edge code yields a simple graph")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v - 1])
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u >= 1 && u <= self.n && self.neighbors(u).contains(v)
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v - 1] & s.0 == 0)
    }

    /// `self` followed by `other` with its vertices shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Graph::new(self.n + other.n, &edges)
    }

    /// Relabels vertex `v` as `perm[v - 1]`; `perm` must be a permutation of `1..=n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        assert_eq!(perm.len(), self.n, "permutation length");
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u - 1], perm[v - 1]))
            .collect();
        Graph::new(self.n, &edges)
    }

    /// Size-`i` independent sets in lexicographic order.
    pub fn independent_sets(&self, i: usize) -> Vec<VertexSet> {
        let mut out = Vec::new();
        self.for_each_independent_set(i, |s| out.push(s));
        out
    }

    /// Visits size-`i` independent sets in lexicographic order by branching on
    /// the smallest remaining candidate (take it first, then skip it).
    pub fn for_each_independent_set(&self, i: usize, mut visit: impl FnMut(VertexSet)) {
        fn rec(adj: &[u64], chosen: u64, cands: u64, need: usize, visit: &mut dyn FnMut(VertexSet)) {
            if need == 0 {
                visit(VertexSet(chosen));
                return;
            }
            if (cands.count_ones() as usize) < need {
                return;
            }
            let v = cands.trailing_zeros() as usize;
            let bit = 1u64 << v;
            rec(adj, chosen | bit, cands & !bit & !adj[v], need - 1, visit);
            rec(adj, chosen, cands & !bit, need, visit);
        }
        rec(&self.adj, 0, VertexSet::full(self.n).0, i, &mut visit);
    }

    /// `c_0, ..., c_alpha`, `c_i` the number of size-`i` independent sets.
    pub fn independence_counts(&self) -> Vec<u64> {
        fn rec(adj: &[u64], size: usize, cands: u64, counts: &mut Vec<u64>) {
            if counts.len() <= size {
                counts.resize(size + 1, 0);
            }
            counts[size] += 1;
            let mut rest = cands;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                let bit = 1u64 << v;
                rest &= !bit;
                rec(adj, size + 1, rest & !adj[v], counts);
            }
        }
        let mut counts = Vec::new();
        rec(&self.adj, 0, VertexSet::full(self.n).0, &mut counts);
        counts
    }

    /// Independence number.
    pub fn alpha(&self) -> usize {
        self.independence_counts().len() - 1
    }

    /// `I(G, x) = sum_i c_i x^i`.
    pub fn independence_polynomial(&self) -> IntPoly {
        IntPoly::new(self.independence_counts().into_iter().map(BigInt::from).collect())
    }

    /// The subgraph induced on `s`, relabeled to `1..=|s|` in increasing
    /// order, and the map from new labels back to old (`map[new - 1] = old`).
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        if let Some(bad) = s.iter().find(|&v| v > self.n) {
            return Err(GraphError::VertexOutOfRange {
                vertex: bad,
                n: self.n,
            });
        }
        let map = s.to_vec();
        let mut new_label = vec![0usize; self.n + 1];
        for (k, &v) in map.iter().enumerate() {
            new_label[v] = k + 1;
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(u, v)| s.contains(u) && s.contains(v))
            .map(|&(u, v)| (new_label[u], new_label[v]))
            .collect();
        Ok((Graph::new(map.len(), &edges)?, map))
    }

    /// Connected components ordered by their smallest vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// Components of the induced subgraph `G[s]` in original labels, ordered
    /// by smallest vertex.
    pub fn components_within(&self, s: VertexSet) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut left = s.0;
        while left != 0 {
            let comp = self.component_bits(left.trailing_zeros() as usize, left);
            out.push(VertexSet(comp));
            left &= !comp;
        }
        out
    }

    /// Bitmask of the component of vertex index `start` (0-based) inside `within`.
    #[inline]
    pub(crate) fn component_bits(&self, start: usize, within: u64) -> u64 {
        let mut comp = 1u64 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.adj[v] & within & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        comp
    }
}
