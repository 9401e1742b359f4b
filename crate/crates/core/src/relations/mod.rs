//! Containment relations: contraction, minor and topological minor, each
//! with an independently checkable witness.

mod checks;
mod contraction;
mod topological;

pub use checks::{
    all_contractions, contraction_via_dual, dual_topological_test, star_contractibility,
    verify_degree3_equivalence,
};
pub use contraction::{is_contraction, is_contraction_with, is_minor, is_minor_with};
pub use topological::{is_topological_minor, is_topological_minor_with};

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::graph::{Graph, Multigraph, VertexSet};

/// Surjection `V(G) → V(H)` certifying `H ≤_c G`: `labels[v]` is the
/// vertex of `H` that `v` is merged into.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessPartition {
    pub labels: Vec<usize>,
}

impl WitnessPartition {
    /// Preimage of every vertex of `H`.
    pub fn branch_sets(&self, k: usize) -> Vec<VertexSet> {
        let mut sets = vec![VertexSet::EMPTY; k];
        for (v, &l) in self.labels.iter().enumerate() {
            if l < k {
                sets[l].insert(v);
            }
        }
        sets
    }

    /// Checks surjectivity, connected preimages and that the quotient is exactly `h`.
    pub fn validate(&self, h: &Graph, g: &Graph) -> Result<()> {
        let k = h.vertex_count();
        if self.labels.len() != g.vertex_count() {
            return Err(invalid("witness length differs from |V(G)|"));
        }
        if let Some(&l) = self.labels.iter().find(|&&l| l >= k) {
            return Err(invalid(format!("label {l} out of range")));
        }
        for (i, set) in self.branch_sets(k).into_iter().enumerate() {
            if set.is_empty() {
                return Err(invalid(format!("vertex {i} of H has an empty preimage")));
            }
            if !g.is_connected_set(set) {
                return Err(invalid(format!("preimage of vertex {i} is not connected")));
            }
        }
        if g.quotient(&self.labels, k)? != *h {
            return Err(invalid("quotient graph differs from H"));
        }
        Ok(())
    }

    /// A contraction sequence realising the witness: spanning-tree edges of
    /// each preimage, as `G` vertex pairs.
    pub fn contraction_sequence(&self, g: &Graph, k: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for set in self.branch_sets(k) {
            let Some(root) = set.first() else { continue };
            let mut seen = VertexSet::singleton(root);
            let mut stack = vec![root];
            while let Some(v) = stack.pop() {
                for w in g.neighbors(v).intersection(set).difference(seen) {
                    seen.insert(w);
                    out.push((v, w));
                    stack.push(w);
                }
            }
        }
        out
    }
}

/// Disjoint connected branch sets certifying `H ≤_m G`; `labels[v]` is
/// `None` for deleted vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorWitness {
    pub labels: Vec<Option<usize>>,
}

impl MinorWitness {
    pub fn validate(&self, h: &Graph, g: &Graph) -> Result<()> {
        let k = h.vertex_count();
        if self.labels.len() != g.vertex_count() {
            return Err(invalid("witness length differs from |V(G)|"));
        }
        let mut sets = vec![VertexSet::EMPTY; k];
        for (v, l) in self.labels.iter().enumerate() {
            if let Some(l) = *l {
                if l >= k {
                    return Err(invalid(format!("label {l} out of range")));
                }
                sets[l].insert(v);
            }
        }
        for (i, &set) in sets.iter().enumerate() {
            if set.is_empty() || !g.is_connected_set(set) {
                return Err(invalid(format!("branch set of vertex {i} is empty or disconnected")));
            }
        }
        for (a, b) in h.edges() {
            if g.neighborhood(sets[a]).intersection(sets[b]).is_empty() {
                return Err(invalid(format!("edge ({a},{b}) of H is not realised")));
            }
        }
        Ok(())
    }
}

/// Subdivision certificate for `H ≤_tm G`: `branch[a]` is the image of
/// pattern vertex `a`, and `paths[e]` lists the host edge ids of the path
/// realising pattern edge `e`, walked from `branch` of its first endpoint.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TmWitness {
    pub branch: Vec<usize>,
    pub paths: Vec<Vec<usize>>,
}

impl TmWitness {
    pub fn validate(&self, h: &Multigraph, g: &Multigraph) -> Result<()> {
        let n = g.vertex_count();
        if self.branch.len() != h.vertex_count() || self.paths.len() != h.edge_count() {
            return Err(invalid("witness shape differs from the pattern"));
        }
        let mut is_branch = vec![false; n];
        for &x in &self.branch {
            if x >= n || std::mem::replace(&mut is_branch[x], true) {
                return Err(invalid(format!("branch vertex {x} out of range or reused")));
            }
        }
        let mut edge_used = vec![false; g.edge_count()];
        let mut inner_used = vec![false; n];
        for (e, path) in self.paths.iter().enumerate() {
            let (a, b) = h.endpoints(e);
            let (s, t) = (self.branch[a], self.branch[b]);
            if path.is_empty() {
                return Err(invalid(format!("pattern edge {e} has an empty path")));
            }
            let mut at = s;
            for (i, &he) in path.iter().enumerate() {
                if he >= g.edge_count() || std::mem::replace(&mut edge_used[he], true) {
                    return Err(invalid(format!("host edge {he} out of range or reused")));
                }
                let (x, y) = g.endpoints(he);
                at = if x == at {
                    y
                } else if y == at {
                    x
                } else {
                    return Err(invalid(format!("path of pattern edge {e} is not a walk")));
                };
                if i + 1 < path.len() && (is_branch[at] || std::mem::replace(&mut inner_used[at], true)) {
                    return Err(invalid(format!("path of pattern edge {e} reuses vertex {at}")));
                }
            }
            if at != t {
                return Err(invalid(format!("path of pattern edge {e} ends at the wrong vertex")));
            }
        }
        Ok(())
    }
}

pub(crate) fn require_connected(g: &Graph, what: &str) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(invalid(format!("{what} must be connected")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, complete_bipartite, path, wheel4};

    #[test]
    fn witness_validation_catches_errors() {
        let h = path(2);
        let g = path(3);
        assert!(WitnessPartition { labels: vec![0, 0, 1] }.validate(&h, &g).is_ok());
        assert!(WitnessPartition { labels: vec![0, 1, 0] }.validate(&h, &g).is_err());
        assert!(WitnessPartition { labels: vec![0, 0, 0] }.validate(&h, &g).is_err());
        assert!(WitnessPartition { labels: vec![0, 0, 2] }.validate(&h, &g).is_err());
    }

    #[test]
    fn w4_from_k33_witness() {
        // Contract {a_2, b_2} of K_{3,3}; vertices 0..3 on one side, 3..6 on the other.
        let g = complete_bipartite(3, 3);
        let w = WitnessPartition { labels: vec![0, 4, 2, 1, 4, 3] };
        w.validate(&wheel4(), &g).unwrap();
        let seq = w.contraction_sequence(&g, 5);
        assert_eq!(seq, vec![(1, 4)]);
    }

    #[test]
    fn tm_witness_checks_disjointness() {
        let h = Multigraph::from_graph(&complete(3));
        let g = Multigraph::from_graph(&crate::generators::cycle(4));
        // Cycle 0-1-2-3 with edges (0,1),(0,3),(1,2),(2,3) in sorted order.
        let ok = TmWitness { branch: vec![0, 1, 2], paths: vec![vec![0], vec![1, 3], vec![2]] };
        assert!(ok.validate(&h, &g).is_ok());
        let bad = TmWitness { branch: vec![0, 1, 2], paths: vec![vec![0], vec![0, 2], vec![2]] };
        assert!(bad.validate(&h, &g).is_err());
    }
}
