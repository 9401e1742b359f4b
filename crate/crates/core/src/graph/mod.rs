//! Simple graphs, multigraphs and the structural primitives used by every
//! other module: contraction, dissolution, connectivity, cuts, isomorphism
//! and canonical forms.
//!
//! Vertex sets are machine-word bitsets, so a [`Graph`] holds at most
//! [`MAX_VERTICES`] vertices. Exceeding the cap is reported as
//! [`Error::Resource`].

mod cuts;
mod iso;
mod multigraph;

pub use iso::{canonical_form, canonical_labeling, is_isomorphic, orbit_representatives, CanonicalForm};
pub use cuts::CutPair;
pub use multigraph::Multigraph;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// Vertex cap of [`Graph`]; vertex sets are single `u128` words.
pub const MAX_VERTICES: usize = 128;

/// A set of vertex ids below [`MAX_VERTICES`].
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexSet(pub u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// `{0, .., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        if n >= 128 {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        VertexSet(1u128 << v)
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 128 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u128 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u128 << v);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    #[inline]
    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
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

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

/// Iterator over the members of a [`VertexSet`] in increasing order.
pub struct VertexIter(u128);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// A simple undirected graph on vertices `0..n`.
///
/// No loops, no parallel edges, symmetric adjacency. Values are immutable
/// through the public API except for the builder-style [`Graph::add_edge`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Resource(format!(
                "{n} vertices exceeds the cap of {MAX_VERTICES}"
            )));
        }
        Ok(Graph { adj: vec![VertexSet::EMPTY; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds `{u, v}`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.vertex_count();
        if u >= n || v >= n {
            return Err(invalid(format!("edge {{{u},{v}}} out of range for {n} vertices")));
        }
        if u == v {
            return Err(invalid(format!("loop at {u} in a simple graph")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub(crate) fn remove_edge_unchecked(&mut self, u: usize, v: usize) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    /// Copy of the graph without the edge `{u, v}`.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(invalid(format!("{{{u},{v}}} is not an edge")));
        }
        let mut g = self.clone();
        g.remove_edge_unchecked(u, v);
        Ok(g)
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|s| s.len()).max().unwrap_or(0)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adj[u].contains(v)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.vertex_count() {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// Union of the neighbourhoods of `set`, minus `set` itself.
    pub fn neighborhood(&self, set: VertexSet) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for v in set {
            out = out.union(self.adj[v]);
        }
        out.difference(set)
    }

    /// Vertices reachable from `start` inside `within` (`start` must lie in `within`).
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.adj[v]);
            }
            frontier = next.intersection(within).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    /// Whether `set` induces a connected subgraph (the empty set does not).
    pub fn is_connected_set(&self, set: VertexSet) -> bool {
        match set.first() {
            None => false,
            Some(s) => self.reach(s, set) == set,
        }
    }

    /// Subgraph induced by `set`; the returned map sends new ids to old ids.
    pub fn induced(&self, set: VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = set.to_vec();
        let mut new_of = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in old.iter().enumerate() {
            new_of[v] = i;
        }
        let adj = old
            .iter()
            .map(|&v| self.adj[v].intersection(set).iter().map(|w| new_of[w]).collect())
            .collect();
        (Graph { adj }, old)
    }

    /// Quotient by a labelling `labels[v] ∈ 0..k`: one vertex per label, an
    /// edge wherever some edge of `self` joins two different classes.
    pub fn quotient(&self, labels: &[usize], k: usize) -> Result<Graph> {
        if labels.len() != self.vertex_count() {
            return Err(invalid("labelling length differs from vertex count"));
        }
        let mut q = Graph::empty(k)?;
        for (u, v) in self.edges() {
            let (a, b) = (labels[u], labels[v]);
            if a >= k || b >= k {
                return Err(invalid(format!("label out of range 0..{k}")));
            }
            if a != b {
                q.adj[a].insert(b);
                q.adj[b].insert(a);
            }
        }
        Ok(q)
    }

    /// `G/e` for `e = {u, v}`, returned with the old→new vertex map.
    ///
    /// The merged vertex takes the id `min(u, v)`; ids above `max(u, v)` shift
    /// down by one so the result stays contiguous.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<(Graph, Vec<usize>)> {
        if !self.has_edge(u, v) {
            return Err(invalid(format!("{{{u},{v}}} is not an edge")));
        }
        let (keep, gone) = (u.min(v), u.max(v));
        let map: Vec<usize> = (0..self.vertex_count())
            .map(|x| match x.cmp(&gone) {
                std::cmp::Ordering::Less => x,
                std::cmp::Ordering::Equal => keep,
                std::cmp::Ordering::Greater => x - 1,
            })
            .collect();
        let g = self.quotient(&map, self.vertex_count() - 1)?;
        Ok((g, map))
    }

    /// Dissolution of a degree-2 vertex: contraction of its edge to the
    /// smaller-id neighbour.
    pub fn dissolve_vertex(&self, v: usize) -> Result<(Graph, Vec<usize>)> {
        if v >= self.vertex_count() || self.degree(v) != 2 {
            return Err(invalid(format!("vertex {v} does not have degree 2")));
        }
        let w = self.adj[v].first().expect("degree 2");
        self.contract_edge(v, w)
    }

    /// Copy with vertex `v` renamed to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![VertexSet::EMPTY; self.vertex_count()];
        for (u, nb) in self.adj.iter().enumerate() {
            adj[perm[u]] = nb.iter().map(|w| perm[w]).collect();
        }
        Graph { adj }
    }

    /// Disjoint union, `other` shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let off = self.vertex_count();
        let mut g = Graph::empty(off + other.vertex_count())?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.add_edge(u + off, v + off)?;
        }
        Ok(g)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.vertex_count()).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.adj[v].intersection(set).is_empty())
    }

    /// Graphviz rendering.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph G {\n");
        for v in 0..self.vertex_count() {
            s.push_str(&format!("  {v};\n"));
        }
        for (u, v) in self.edges() {
            s.push_str(&format!("  {u} -- {v};\n"));
        }
        s.push_str("}\n");
        s
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.vertex_count(), self.edges())
    }
}
