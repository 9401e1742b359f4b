use serde::Serialize;

use super::{Graph, VertexSet};
use crate::error::{invalid, Result};

/// A two-vertex separator of a connected graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct CutPair {
    pub x: usize,
    pub y: usize,
    /// Whether `x` and `y` are adjacent.
    pub adjacent: bool,
}

impl Graph {
    /// Connected components, ordered by their smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// Components of the subgraph induced by `within`.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut left = within;
        let mut out = Vec::new();
        while let Some(s) = left.first() {
            let c = self.reach(s, left);
            out.push(c);
            left = left.difference(c);
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.vertex_count() == 0 || self.is_connected_set(self.vertices())
    }

    /// Articulation points: vertices whose removal increases the number of components.
    pub fn cut_vertices(&self) -> VertexSet {
        let all = self.vertices();
        let base = self.components().len();
        all.iter()
            .filter(|&v| {
                let rest = all.difference(VertexSet::singleton(v));
                self.components_within(rest).len() > base
            })
            .collect()
    }

    /// All two-element vertex sets whose removal disconnects `self`.
    ///
    /// Pairs are sorted lexicographically. On inputs with a cut vertex the
    /// pairs containing it are reported as well.
    pub fn cut_pairs(&self) -> Result<Vec<CutPair>> {
        if !self.is_connected() {
            return Err(invalid("cut_pairs requires a connected graph"));
        }
        let n = self.vertex_count();
        let all = self.vertices();
        let mut out = Vec::new();
        for x in 0..n {
            for y in x + 1..n {
                let rest = all.difference(VertexSet::singleton(x)).difference(VertexSet::singleton(y));
                if rest.len() >= 2 && !self.is_connected_set(rest) {
                    out.push(CutPair { x, y, adjacent: self.has_edge(x, y) });
                }
            }
        }
        Ok(out)
    }

    pub fn is_2_connected(&self) -> bool {
        self.vertex_count() >= 3 && self.is_connected() && self.cut_vertices().is_empty()
    }

    /// At least four vertices, connected, no cut vertex and no cut pair.
    pub fn is_3_connected(&self) -> bool {
        self.vertex_count() >= 4
            && self.is_2_connected()
            && self.cut_pairs().map(|p| p.is_empty()).unwrap_or(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::generators::{complete, cycle, path};

    fn bowtie() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap()
    }

    #[test]
    fn component_counts() {
        assert_eq!(complete(4).components().len(), 1);
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_k2.components().len(), 2);
        assert!(!two_k2.is_connected());
        assert_eq!(Graph::empty(3).unwrap().components().len(), 3);
    }

    #[test]
    fn bowtie_has_centre_cut_vertex() {
        assert_eq!(bowtie().cut_vertices().to_vec(), vec![2]);
        assert_eq!(path(4).cut_vertices().to_vec(), vec![1, 2]);
        assert!(complete(4).cut_vertices().is_empty());
    }

    #[test]
    fn c4_cut_pairs_are_the_diagonals() {
        let pairs = cycle(4).cut_pairs().unwrap();
        assert_eq!(
            pairs,
            vec![CutPair { x: 0, y: 2, adjacent: false }, CutPair { x: 1, y: 3, adjacent: false }]
        );
    }

    #[test]
    fn three_connectivity() {
        assert!(complete(4).is_3_connected());
        assert!(!complete(3).is_3_connected());
        assert!(!cycle(5).is_3_connected());
        assert!(crate::generators::wheel4().is_3_connected());
    }

    #[test]
    fn cut_pairs_reject_disconnected() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(g.cut_pairs(), Err(Error::InvalidArgument(_))));
    }
}
