use super::{Graph, VertexSet};
use crate::error::{invalid, Error, Result};

/// Undirected multigraph; loops and parallel edges allowed. Edge ids are
/// the indices `0..m` into [`Multigraph::edges`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if vertex_count > super::MAX_VERTICES {
            return Err(Error::Resource(format!(
                "{vertex_count} vertices exceeds the cap of {}",
                super::MAX_VERTICES
            )));
        }
        if let Some(&(a, b)) = edges.iter().find(|&&(a, b)| a >= vertex_count || b >= vertex_count) {
            return Err(invalid(format!("edge ({a},{b}) out of range for {vertex_count} vertices")));
        }
        Ok(Multigraph { vertex_count, edges })
    }

    /// Edges of a simple graph in [`Graph::edges`] order.
    pub fn from_graph(g: &Graph) -> Self {
        Multigraph { vertex_count: g.vertex_count(), edges: g.edges() }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn is_loop(&self, e: usize) -> bool {
        let (a, b) = self.edges[e];
        a == b
    }

    /// Edge ends at `v`; a loop contributes two.
    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().map(|&(a, b)| (a == v) as usize + (b == v) as usize).sum()
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|(a, b)| a == b).count()
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.edges.iter().all(|&(a, b)| a != b && seen.insert((a.min(b), a.max(b))))
    }

    /// Simple projection: loops dropped, parallel edges collapsed.
    pub fn simple_projection(&self) -> Graph {
        let mut g = Graph::empty(self.vertex_count).expect("vertex cap checked on construction");
        for &(a, b) in &self.edges {
            if a != b {
                g.add_edge(a, b).expect("endpoints in range");
            }
        }
        g
    }

    /// Ids of the edges joining `u` and `v` (loops when `u == v`).
    pub fn edges_between(&self, u: usize, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| (a == u && b == v) || (a == v && b == u))
            .map(|(i, _)| i)
            .collect()
    }

    /// Adjacency sets of the simple projection.
    pub fn neighbor_sets(&self) -> Vec<VertexSet> {
        let mut adj = vec![VertexSet::EMPTY; self.vertex_count];
        for &(a, b) in &self.edges {
            if a != b {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        self.simple_projection().is_connected()
    }
}

impl From<&Graph> for Multigraph {
    fn from(g: &Graph) -> Self {
        Multigraph::from_graph(g)
    }
}
