//! Rotation-system embeddings of multigraphs on the sphere.
//!
//! Edge `e` has two darts: `2e` leaves the first endpoint of `e`, `2e + 1`
//! leaves the second. A rotation lists, for every vertex, the darts leaving
//! it in cyclic order. Face traversal: after walking along dart `d`, the
//! next dart is the rotation successor of `twin(d)` at the head of `d`.

mod dual;
mod enumerate;
mod equivalence;
mod ops;
mod planarity;

pub use dual::{dual, DualPair};
pub use enumerate::{enumerate_embeddings, EMBEDDING_VERTEX_CAP};
pub use equivalence::{combinatorially_equivalent, map_code};
pub use ops::{is_thin, is_triangulated, DigonChoice};
pub use planarity::planar_embed;

use crate::error::{invalid, Result};
use crate::graph::Multigraph;

/// A closed boundary walk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    /// Darts in traversal order; empty for the face around an isolated vertex.
    pub darts: Vec<usize>,
    /// Some vertex on the boundary.
    pub anchor: usize,
}

impl Face {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }
}

/// A multigraph together with a rotation system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneMultigraph {
    graph: Multigraph,
    rotation: Vec<Vec<usize>>,
    succ: Vec<usize>,
    pred: Vec<usize>,
}

impl PlaneMultigraph {
    /// Validates that `rotation[v]` lists exactly the darts leaving `v`.
    ///
    /// No genus check is made; see [`PlaneMultigraph::is_spherical`].
    pub fn new(graph: Multigraph, rotation: Vec<Vec<usize>>) -> Result<Self> {
        let n = graph.vertex_count();
        let darts = 2 * graph.edge_count();
        if rotation.len() != n {
            return Err(invalid(format!("{} rotations for {n} vertices", rotation.len())));
        }
        let mut seen = vec![false; darts];
        let mut succ = vec![usize::MAX; darts];
        let mut pred = vec![usize::MAX; darts];
        for (v, rot) in rotation.iter().enumerate() {
            for (i, &d) in rot.iter().enumerate() {
                if d >= darts {
                    return Err(invalid(format!("dart {d} out of range at vertex {v}")));
                }
                if std::mem::replace(&mut seen[d], true) {
                    return Err(invalid(format!("dart {d} listed twice")));
                }
                if dart_tail(&graph, d) != v {
                    return Err(invalid(format!("dart {d} does not leave vertex {v}")));
                }
                let next = rot[(i + 1) % rot.len()];
                succ[d] = next;
                pred[next] = d;
            }
        }
        if let Some(d) = seen.iter().position(|s| !s) {
            return Err(invalid(format!("dart {d} missing from the rotation system")));
        }
        Ok(PlaneMultigraph { graph, rotation, succ, pred })
    }

    pub fn multigraph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn dart_count(&self) -> usize {
        2 * self.graph.edge_count()
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    #[inline]
    pub fn succ(&self, d: usize) -> usize {
        self.succ[d]
    }

    #[inline]
    pub fn pred(&self, d: usize) -> usize {
        self.pred[d]
    }

    #[inline]
    pub fn twin(d: usize) -> usize {
        d ^ 1
    }

    #[inline]
    pub fn edge_of(d: usize) -> usize {
        d / 2
    }

    #[inline]
    pub fn tail(&self, d: usize) -> usize {
        dart_tail(&self.graph, d)
    }

    #[inline]
    pub fn head(&self, d: usize) -> usize {
        dart_tail(&self.graph, d ^ 1)
    }

    /// Next dart along the face walk containing `d`.
    #[inline]
    pub fn face_next(&self, d: usize) -> usize {
        self.succ[d ^ 1]
    }

    /// The dart of edge `e` leaving `v` (the first one for loops).
    pub fn dart_at(&self, e: usize, v: usize) -> Option<usize> {
        let (a, b) = self.graph.endpoints(e);
        if a == v {
            Some(2 * e)
        } else if b == v {
            Some(2 * e + 1)
        } else {
            None
        }
    }

    /// All faces: dart orbits in order of their smallest dart, then one
    /// empty face per isolated vertex.
    pub fn faces(&self) -> Vec<Face> {
        let mut seen = vec![false; self.dart_count()];
        let mut out = Vec::new();
        for start in 0..self.dart_count() {
            if seen[start] {
                continue;
            }
            let mut darts = Vec::new();
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                darts.push(d);
                d = self.face_next(d);
            }
            out.push(Face { anchor: self.tail(start), darts });
        }
        for v in 0..self.vertex_count() {
            if self.rotation[v].is_empty() {
                out.push(Face { darts: Vec::new(), anchor: v });
            }
        }
        out
    }

    pub fn face_count(&self) -> usize {
        self.faces().len()
    }

    /// Component id per vertex, numbered by smallest vertex.
    pub fn component_of_vertices(&self) -> Vec<usize> {
        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut next = 0;
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &d in &self.rotation[v] {
                    let w = self.head(d);
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn component_count(&self) -> usize {
        self.component_of_vertices().into_iter().max().map_or(0, |m| m + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Euler's relation `|V| − |E| + |F| = 2` on every component.
    pub fn is_spherical(&self) -> bool {
        let comp = self.component_of_vertices();
        let k = self.component_count();
        let mut chi = vec![0i64; k];
        for &c in &comp {
            chi[c] += 1;
        }
        for &(a, _) in self.graph.edges() {
            chi[comp[a]] -= 1;
        }
        for f in self.faces() {
            chi[comp[f.anchor]] += 1;
        }
        chi.iter().all(|&x| x == 2)
    }

    /// The mirror image: every rotation reversed.
    pub fn mirrored(&self) -> PlaneMultigraph {
        let rotation = self
            .rotation
            .iter()
            .map(|r| r.iter().rev().copied().collect())
            .collect();
        PlaneMultigraph::new(self.graph.clone(), rotation).expect("reversal keeps validity")
    }

    /// Copy without edge `e`; later edge ids shift down by one.
    pub fn delete_edge(&self, e: usize) -> Result<PlaneMultigraph> {
        if e >= self.edge_count() {
            return Err(invalid(format!("edge {e} out of range")));
        }
        let renum = |d: usize| if d > 2 * e + 1 { d - 2 } else { d };
        let edges: Vec<(usize, usize)> = self
            .graph
            .edges()
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != e)
            .map(|(_, &x)| x)
            .collect();
        let rotation = self
            .rotation
            .iter()
            .map(|r| r.iter().filter(|&&d| d / 2 != e).map(|&d| renum(d)).collect())
            .collect();
        PlaneMultigraph::new(Multigraph::new(self.vertex_count(), edges)?, rotation)
    }
}

#[inline]
fn dart_tail(g: &Multigraph, d: usize) -> usize {
    let (a, b) = g.endpoints(d / 2);
    if d.is_multiple_of(2) {
        a
    } else {
        b
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, triangulated_grid};

    #[test]
    fn k4_has_four_triangles() {
        let pg = planar_embed(&complete(4)).unwrap();
        let faces = pg.faces();
        assert_eq!(faces.len(), 4);
        assert!(faces.iter().all(|f| f.len() == 3));
        assert!(pg.is_spherical());
    }

    #[test]
    fn c4_has_two_square_faces() {
        let pg = planar_embed(&cycle(4)).unwrap();
        let faces = pg.faces();
        assert_eq!(faces.len(), 2);
        assert!(faces.iter().all(|f| f.len() == 4));
    }

    #[test]
    fn gamma6_has_68_triangles() {
        let pg = planar_embed(&triangulated_grid(6).unwrap()).unwrap();
        let faces = pg.faces();
        assert_eq!(faces.len(), 68);
        assert!(faces.iter().all(|f| f.len() == 3));
    }

    #[test]
    fn every_dart_used_once_by_faces() {
        let pg = planar_embed(&triangulated_grid(4).unwrap()).unwrap();
        let mut used: Vec<usize> = pg.faces().into_iter().flat_map(|f| f.darts).collect();
        used.sort_unstable();
        assert_eq!(used, (0..pg.dart_count()).collect::<Vec<_>>());
    }

    #[test]
    fn bad_rotations_rejected() {
        let m = Multigraph::new(2, vec![(0, 1)]).unwrap();
        assert!(PlaneMultigraph::new(m.clone(), vec![vec![1], vec![0]]).is_err());
        assert!(PlaneMultigraph::new(m.clone(), vec![vec![0], vec![]]).is_err());
        assert!(PlaneMultigraph::new(m, vec![vec![0], vec![1]]).is_ok());
    }

    #[test]
    fn isolated_vertex_is_one_face() {
        let pg = PlaneMultigraph::new(Multigraph::new(1, vec![]).unwrap(), vec![vec![]]).unwrap();
        assert_eq!(pg.face_count(), 1);
        assert!(pg.is_spherical());
    }

    #[test]
    fn toroidal_rotation_is_not_spherical() {
        // K_4 with one vertex's rotation reversed has genus 1.
        let pg = planar_embed(&complete(4)).unwrap();
        let mut rot = pg.rotations().to_vec();
        rot[0].reverse();
        let bad = PlaneMultigraph::new(pg.multigraph().clone(), rot).unwrap();
        assert!(!bad.is_spherical());
    }
}
