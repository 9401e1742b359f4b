use super::PlaneMultigraph;
use crate::error::{invalid, Result};
use crate::graph::Multigraph;

/// A connected plane multigraph, its dual, and the face each dart bounds.
///
/// Dual edge `e` crosses primal edge `e`; dual dart `d` leaves the face of
/// primal dart `d`. Dual vertex `f` is face `f` of [`PlaneMultigraph::faces`].
#[derive(Clone, Debug)]
pub struct DualPair {
    pub primal: PlaneMultigraph,
    pub dual: PlaneMultigraph,
    pub face_of_dart: Vec<usize>,
}

impl DualPair {
    /// The dual edge crossing primal edge `e`.
    pub fn dual_edge(&self, e: usize) -> usize {
        e
    }

    /// `(primal endpoints, dual endpoints)` per edge id, for reporting.
    pub fn edge_bijection(&self) -> Vec<((usize, usize), (usize, usize))> {
        (0..self.primal.edge_count())
            .map(|e| (self.primal.multigraph().endpoints(e), self.dual.multigraph().endpoints(e)))
            .collect()
    }
}

/// The dual of a connected plane multigraph.
pub fn dual(pg: &PlaneMultigraph) -> Result<DualPair> {
    if !pg.is_connected() {
        return Err(invalid("the dual is only defined for connected plane graphs"));
    }
    let faces = pg.faces();
    let mut face_of_dart = vec![usize::MAX; pg.dart_count()];
    for (i, f) in faces.iter().enumerate() {
        for &d in &f.darts {
            face_of_dart[d] = i;
        }
    }
    let edges = (0..pg.edge_count()).map(|e| (face_of_dart[2 * e], face_of_dart[2 * e + 1])).collect();
    let mg = Multigraph::new(faces.len(), edges)?;
    let rotation = faces.into_iter().map(|f| f.darts).collect();
    let d = PlaneMultigraph::new(mg, rotation)?;
    Ok(DualPair { primal: pg.clone(), dual: d, face_of_dart })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::{combinatorially_equivalent, planar_embed};
    use crate::generators::{complete, cycle, grid, path, triangulated_grid, wheel4};
    use crate::graph::Graph;

    fn embed(g: &Graph) -> PlaneMultigraph {
        planar_embed(g).unwrap()
    }

    #[test]
    fn k4_is_self_dual() {
        let pg = embed(&complete(4));
        let d = dual(&pg).unwrap();
        assert!(d.dual.multigraph().is_simple());
        assert!(combinatorially_equivalent(&pg, &d.dual));
    }

    #[test]
    fn cycle_dual_is_two_vertices() {
        let d = dual(&embed(&cycle(5))).unwrap();
        assert_eq!(d.dual.vertex_count(), 2);
        assert_eq!(d.dual.edge_count(), 5);
        assert_eq!(d.dual.multigraph().edges_between(0, 1).len(), 5);
    }

    #[test]
    fn tree_dual_is_a_bouquet() {
        let d = dual(&embed(&path(4))).unwrap();
        assert_eq!(d.dual.vertex_count(), 1);
        assert_eq!(d.dual.multigraph().loop_count(), 3);
        assert!(d.dual.is_spherical());
    }

    #[test]
    fn k1_dual_is_k1() {
        let d = dual(&embed(&complete(1))).unwrap();
        assert_eq!(d.dual.vertex_count(), 1);
        assert_eq!(d.dual.edge_count(), 0);
    }

    #[test]
    fn dual_is_an_involution() {
        for g in [complete(4), wheel4(), grid(4).unwrap(), triangulated_grid(4).unwrap(), path(3), cycle(6)] {
            let pg = embed(&g);
            let d = dual(&pg).unwrap();
            assert!(d.dual.is_spherical());
            let dd = dual(&d.dual).unwrap();
            assert!(combinatorially_equivalent(&pg, &dd.dual));
        }
    }

    #[test]
    fn disconnected_rejected() {
        let g = complete(2).disjoint_union(&complete(2)).unwrap();
        assert!(dual(&embed(&g)).is_err());
    }
}
