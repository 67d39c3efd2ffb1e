//! Compact exact representation of simple graphs on at most 62 vertices.
//!
//! Adjacency is stored as one `u64` bitset per vertex, so every structural
//! operation (complement, union, join, induced subgraph, neighborhoods,
//! clique detection) is a handful of word operations. Graph values are
//! immutable: all mutation-style operations return new values.

mod canon;
mod format;

pub use canon::{canonical_form, canonical_graph};
pub use format::{graph6_decode, graph6_encode, parse_edge_list, render_edge_list, FormatError};

use num_bigint::BigInt;
use thiserror::Error;

/// Largest supported graph order. A vertex set fits one machine word with
/// room for sentinels.
pub const MAX_ORDER: usize = 62;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order must be between 1 and {MAX_ORDER}, got {0}")]
    OrderOutOfRange(usize),
    #[error("combined order {0} exceeds the maximum of {MAX_ORDER}")]
    OrderOverflow(usize),
    #[error("vertex {0} out of range for order {1}")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {0}-{1} already present")]
    DuplicateEdge(usize, usize),
    #[error("edge {0}-{1} not present")]
    MissingEdge(usize, usize),
    #[error("vertex {0} is not isolated")]
    NotIsolated(usize),
}

/// A set of vertices of a graph of order at most 62, as a bitset.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The full vertex set `{0, …, n-1}`.
    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= MAX_ORDER);
        if n == 0 {
            VertexSet(0)
        } else {
            VertexSet(u64::MAX >> (64 - n))
        }
    }

    pub fn singleton(v: usize) -> VertexSet {
        VertexSet(1 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn insert(self, v: usize) -> VertexSet {
        VertexSet(self.0 | 1 << v)
    }

    pub fn remove(self, v: usize) -> VertexSet {
        VertexSet(self.0 & !(1 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    /// Iterates members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s = s.insert(v);
        }
        s
    }
}

/// A simple graph of order at most 62.
///
/// The order-0 graph is a distinguished marker value produced only by
/// operations like `induced_subgraph(G, ∅)`; its independence polynomial is
/// the constant 1. It cannot be built through [`Graph::empty`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n ≤ 62` vertices (the order-0 marker for n = 0).
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::OrderOutOfRange(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        Ok(Graph::empty(n)?.complement())
    }

    /// The distinguished order-0 marker.
    pub fn order_zero() -> Graph {
        Graph { n: 0, adj: vec![] }
    }

    /// Builds a graph from an explicit edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g = g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        let total: u32 = self.adj.iter().map(|a| a.count_ones()).sum();
        debug_assert!(total.is_multiple_of(2));
        (total / 2) as usize
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange(v, self.n))
        } else {
            Ok(())
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Open neighborhood `N(v)`.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Closed neighborhood `N[v]`, which contains `v` itself.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | 1 << v)
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u, v));
        }
        let mut g = self.clone();
        g.adj[u] |= 1 << v;
        g.adj[v] |= 1 << u;
        g.debug_validate();
        Ok(g)
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if !self.has_edge(u, v) {
            return Err(GraphError::MissingEdge(u, v));
        }
        let mut g = self.clone();
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        g.debug_validate();
        Ok(g)
    }

    /// Edge present iff absent in `self`; an involution.
    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n).0;
        let adj = (0..self.n)
            .map(|v| !self.adj[v] & full & !(1 << v))
            .collect();
        let g = Graph { n: self.n, adj };
        g.debug_validate();
        g
    }

    /// Block-diagonal union of two graphs on disjoint vertex sets; vertices
    /// of `other` are shifted up by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_ORDER {
            return Err(GraphError::OrderOverflow(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|a| a << self.n));
        let g = Graph { n, adj };
        g.debug_validate();
        Ok(g)
    }

    /// Disjoint union plus all edges between the two parts.
    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        let mut g = self.disjoint_union(other)?;
        let left = VertexSet::full(self.n).0;
        let right = VertexSet::full(g.n).0 & !left;
        for v in 0..self.n {
            g.adj[v] |= right;
        }
        for v in self.n..g.n {
            g.adj[v] |= left;
        }
        g.debug_validate();
        Ok(g)
    }

    /// Subgraph induced by `set`, with vertices compacted in increasing
    /// order. The empty set yields the order-0 marker.
    pub fn induced_subgraph(&self, set: VertexSet) -> Result<Graph, GraphError> {
        if !set.is_subset_of(self.vertices()) {
            let bad = set.difference(self.vertices()).min().unwrap();
            return Err(GraphError::VertexOutOfRange(bad, self.n));
        }
        if set.is_empty() {
            return Ok(Graph::order_zero());
        }
        let verts: Vec<usize> = set.iter().collect();
        let n = verts.len();
        let mut adj = vec![0u64; n];
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate() {
                if self.adj[u] >> v & 1 == 1 {
                    adj[i] |= 1 << j;
                }
            }
        }
        let g = Graph { n, adj };
        g.debug_validate();
        Ok(g)
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        self.induced_subgraph(self.vertices().remove(v))
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut remaining = self.vertices();
        let mut out = Vec::new();
        while let Some(start) = remaining.min() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next = next.union(self.neighbors(v));
                }
                frontier = next.difference(comp);
                comp = comp.union(frontier);
            }
            remaining = remaining.difference(comp);
            out.push(comp);
        }
        out
    }

    /// True iff `G[S]` has a complete subgraph of order `k` (`k ≥ 1`).
    pub fn contains_k_clique(&self, set: VertexSet, k: usize) -> bool {
        debug_assert!(k >= 1);
        fn exists(adj: &[u64], cand: u64, need: usize) -> bool {
            if need == 0 {
                return true;
            }
            if (cand.count_ones() as usize) < need {
                return false;
            }
            let mut rest = cand;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if exists(adj, rest & adj[v], need - 1) {
                    return true;
                }
            }
            false
        }
        exists(&self.adj, set.intersection(self.vertices()).0, k)
    }

    /// All cliques of exactly `k` vertices, as bitsets (k ≥ 1).
    pub fn cliques_of_size(&self, k: usize) -> Vec<VertexSet> {
        let mut out = Vec::new();
        fn rec(adj: &[u64], cand: u64, current: u64, left: usize, out: &mut Vec<VertexSet>) {
            if left == 0 {
                out.push(VertexSet(current));
                return;
            }
            if (cand.count_ones() as usize) < left {
                return;
            }
            let mut rest = cand;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                rec(adj, rest & adj[v], current | 1 << v, left - 1, out);
            }
        }
        if k >= 1 {
            rec(&self.adj, self.vertices().0, 0, k, &mut out);
        }
        out
    }

    /// Exact clique counts by size: index `t` is the number of `K_t`
    /// subgraphs, `t = 0..=n`, with `counts[0] = 1`.
    pub fn clique_counts(&self) -> Vec<BigInt> {
        let mut counts = vec![0u128; self.n + 1];
        counts[0] = 1;
        fn rec(adj: &[u64], cand: u64, size: usize, counts: &mut [u128]) {
            let mut rest = cand;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                counts[size + 1] += 1;
                rec(adj, rest & adj[v], size + 1, counts);
            }
        }
        rec(&self.adj, self.vertices().0, 0, &mut counts);
        counts.into_iter().map(BigInt::from).collect()
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            let mut higher = self.adj[u] & !VertexSet::full(u + 1).0;
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                higher &= higher - 1;
                out.push((u, v));
            }
        }
        out
    }

    /// Relabels vertices: vertex `v` becomes `label[v]`. `label` must be a
    /// permutation of `0..n`.
    pub fn relabel(&self, label: &[usize]) -> Graph {
        debug_assert_eq!(label.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            let mut bits = self.adj[u];
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                adj[label[u]] |= 1 << label[v];
            }
        }
        let g = Graph { n: self.n, adj };
        g.debug_validate();
        g
    }

    fn debug_validate(&self) {
        #[cfg(debug_assertions)]
        {
            let full = VertexSet::full(self.n).0;
            for v in 0..self.n {
                assert_eq!(self.adj[v] & !full, 0, "out-of-range bits at vertex {v}");
                assert_eq!(self.adj[v] >> v & 1, 0, "self-loop at vertex {v}");
                let mut bits = self.adj[v];
                while bits != 0 {
                    let u = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    assert_eq!(self.adj[u] >> v & 1, 1, "asymmetric edge {v}-{u}");
                }
            }
        }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn empty_graph_bounds() {
        assert_eq!(Graph::empty(3).unwrap().size(), 0);
        assert_eq!(Graph::empty(1).unwrap().order(), 1);
        assert_eq!(Graph::empty(0).unwrap(), Graph::order_zero());
        assert_eq!(
            Graph::empty(63).unwrap_err(),
            GraphError::OrderOutOfRange(63)
        );
        // complement of the empty graph on 4 vertices is K_4
        assert_eq!(Graph::empty(4).unwrap().complement().size(), 6);
    }

    #[test]
    fn add_delete_edges() {
        let k2 = Graph::empty(2).unwrap().add_edge(0, 1).unwrap();
        assert_eq!(k2, Graph::complete(2).unwrap());
        let p3 = Graph::complete(3).unwrap().delete_edge(0, 1).unwrap();
        assert_eq!(p3.size(), 2);
        // add then delete the same edge is the identity
        let g = path3();
        assert_eq!(g.add_edge(0, 2).unwrap().delete_edge(0, 2).unwrap(), g);
        // distinct error cases
        assert_eq!(g.add_edge(1, 1).unwrap_err(), GraphError::SelfLoop(1));
        assert_eq!(
            g.add_edge(0, 1).unwrap_err(),
            GraphError::DuplicateEdge(0, 1)
        );
        assert_eq!(
            g.delete_edge(0, 2).unwrap_err(),
            GraphError::MissingEdge(0, 2)
        );
        assert_eq!(
            g.add_edge(0, 5).unwrap_err(),
            GraphError::VertexOutOfRange(5, 3)
        );
    }

    #[test]
    fn complement_examples() {
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(k5.complement().size(), 0);
        // complement of K_{3,2} is K_3 ∪ K_2
        let k32 = Graph::empty(3)
            .unwrap()
            .join(&Graph::empty(2).unwrap())
            .unwrap();
        let expect = Graph::complete(3)
            .unwrap()
            .disjoint_union(&Graph::complete(2).unwrap())
            .unwrap();
        assert_eq!(canonical_form(&k32.complement()), canonical_form(&expect));
        let p3 = path3();
        assert_eq!(p3.complement().complement(), p3);
        assert_eq!(p3.size() + p3.complement().size(), 3);
    }

    #[test]
    fn union_and_join() {
        let k5 = Graph::complete(2)
            .unwrap()
            .join(&Graph::complete(3).unwrap())
            .unwrap();
        assert_eq!(k5, Graph::complete(5).unwrap());
        // Theorem 6 witness core at k=3: K_4 ∪ K_3 has n=7, m=9
        let h = Graph::complete(4)
            .unwrap()
            .disjoint_union(&Graph::complete(3).unwrap())
            .unwrap();
        assert_eq!((h.order(), h.size()), (7, 9));
        // m(join(G,H)) = m(G)+m(H)+n_G*n_H
        let g = path3();
        let j = g.join(&h).unwrap();
        assert_eq!(j.size(), g.size() + h.size() + g.order() * h.order());
        let too_big = Graph::empty(40).unwrap();
        assert_eq!(
            too_big.disjoint_union(&too_big).unwrap_err(),
            GraphError::OrderOverflow(80)
        );
    }

    #[test]
    fn induced_and_neighborhoods() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(k3.closed_neighborhood(0), VertexSet::full(3));
        let p3 = path3();
        let sub = p3.induced_subgraph([0, 2].into_iter().collect()).unwrap();
        assert_eq!((sub.order(), sub.size()), (2, 0));
        let kn = Graph::complete(6).unwrap();
        assert_eq!(kn.delete_vertex(3).unwrap(), Graph::complete(5).unwrap());
        assert_eq!(p3.induced_subgraph(VertexSet::EMPTY).unwrap().order(), 0);
    }

    #[test]
    fn k_clique_detection() {
        let k3 = Graph::complete(3).unwrap();
        assert!(k3.contains_k_clique(k3.vertices(), 3));
        let k4e = Graph::complete(4).unwrap().delete_edge(0, 1).unwrap();
        assert!(!k4e.contains_k_clique(k4e.vertices(), 4));
        assert!(k4e.contains_k_clique(k4e.vertices(), 3));
        // Theorem 6 witness (k=3): isolated vertices + endpoints of e + one
        // more K_5 vertex form a triangle-free 5-set in (K_5 - e) ∪ 2K_1
        let g = Graph::complete(5)
            .unwrap()
            .delete_edge(0, 1)
            .unwrap()
            .disjoint_union(&Graph::empty(2).unwrap())
            .unwrap();
        let set: VertexSet = [0, 1, 2, 5, 6].into_iter().collect();
        assert!(!g.contains_k_clique(set, 3));
    }

    #[test]
    fn clique_count_examples() {
        let k4 = Graph::complete(4).unwrap();
        let counts: Vec<u32> = k4
            .clique_counts()
            .iter()
            .map(|c| c.try_into().unwrap())
            .collect();
        assert_eq!(counts, vec![1, 4, 6, 4, 1]);
        // K_5 - e has C(5,3) - 3 = 7 triangles; confirm by brute force too
        let k5e = Graph::complete(5).unwrap().delete_edge(0, 1).unwrap();
        assert_eq!(k5e.clique_counts()[3], BigInt::from(7));
        let mut brute = 0;
        for a in 0..5 {
            for b in a + 1..5 {
                for c in b + 1..5 {
                    if k5e.has_edge(a, b) && k5e.has_edge(a, c) && k5e.has_edge(b, c) {
                        brute += 1;
                    }
                }
            }
        }
        assert_eq!(brute, 7);
        assert_eq!(k5e.cliques_of_size(3).len(), 7);
    }

    #[test]
    fn components_split() {
        let g = path3()
            .disjoint_union(&Graph::complete(2).unwrap())
            .unwrap();
        let comps = g.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0], VertexSet::full(3));
    }

    #[test]
    fn edges_roundtrip() {
        let g = Graph::from_edges(5, &[(0, 3), (1, 2), (2, 4)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 3), (1, 2), (2, 4)]);
        assert_eq!(Graph::from_edges(5, &g.edges()).unwrap(), g);
    }
}
