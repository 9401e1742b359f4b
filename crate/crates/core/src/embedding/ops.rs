//! Embedded contraction, dissolution and thinness.

use super::{planar_embed, PlaneMultigraph};
use crate::error::{invalid, Result};
use crate::graph::{Graph, Multigraph};

/// Which edge of a two-edge face is removed during clean-up.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DigonChoice {
    /// The edge of the face's first dart.
    #[default]
    First,
    /// The edge of the face's second dart.
    Second,
}

impl PlaneMultigraph {
    /// Contracts non-loop edge `e`, splicing the rotations of its ends.
    /// Parallel edges and loops created by the contraction are kept.
    ///
    /// Returns the map from old to new vertex ids; the merged vertex takes
    /// the smaller id and ids above the larger one shift down.
    pub fn raw_contract(&self, e: usize) -> Result<(PlaneMultigraph, Vec<usize>)> {
        if e >= self.edge_count() {
            return Err(invalid(format!("edge {e} out of range")));
        }
        let (a, b) = self.multigraph().endpoints(e);
        if a == b {
            return Err(invalid(format!("edge {e} is a loop")));
        }
        let after = |v: usize, d: usize| -> Vec<usize> {
            let rot = self.rotation(v);
            let i = rot.iter().position(|&x| x == d).expect("dart in rotation");
            rot[i + 1..].iter().chain(&rot[..i]).copied().collect()
        };
        let mut merged = after(a, 2 * e);
        merged.extend(after(b, 2 * e + 1));
        let (keep, gone) = (a.min(b), a.max(b));
        let n = self.vertex_count();
        let vmap: Vec<usize> = (0..n)
            .map(|v| match v {
                _ if v == gone => keep,
                _ if v > gone => v - 1,
                _ => v,
            })
            .collect();
        let renum = |d: usize| if d > 2 * e + 1 { d - 2 } else { d };
        let edges = self
            .multigraph()
            .edges()
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != e)
            .map(|(_, &(x, y))| (vmap[x], vmap[y]))
            .collect();
        let rotation = (0..n)
            .filter(|&v| v != gone)
            .map(|v| {
                let src = if v == keep { &merged[..] } else { self.rotation(v) };
                src.iter().map(|&d| renum(d)).collect()
            })
            .collect();
        let pg = PlaneMultigraph::new(Multigraph::new(n - 1, edges)?, rotation)?;
        Ok((pg, vmap))
    }

    /// Contraction followed by removing one edge of every face bounded by
    /// exactly two distinct edges, until none is left.
    pub fn embedded_contract(&self, e: usize, choice: DigonChoice) -> Result<(PlaneMultigraph, Vec<usize>)> {
        let (mut pg, vmap) = self.raw_contract(e)?;
        while let Some(face) = pg.faces().into_iter().find(|f| is_digon(&f.darts)) {
            let d = match choice {
                DigonChoice::First => face.darts[0],
                DigonChoice::Second => face.darts[1],
            };
            pg = pg.delete_edge(d / 2)?;
        }
        Ok((pg, vmap))
    }

    /// Replaces a degree-2 vertex and its two edges by a single edge.
    pub fn dissolve(&self, v: usize) -> Result<(PlaneMultigraph, Vec<usize>)> {
        let rot = self.rotation(v);
        if rot.len() != 2 || rot[0] / 2 == rot[1] / 2 {
            return Err(invalid(format!("vertex {v} does not have two distinct non-loop edges")));
        }
        self.raw_contract(rot[0] / 2)
    }
}

fn is_digon(darts: &[usize]) -> bool {
    darts.len() == 2 && darts[0] / 2 != darts[1] / 2
}

/// No face is bounded by exactly two distinct edges.
pub fn is_thin(pg: &PlaneMultigraph) -> bool {
    !pg.faces().iter().any(|f| is_digon(&f.darts))
}

/// Connected plane graph with at least three vertices all of whose faces
/// are triangles.
pub fn is_triangulated(g: &Graph) -> bool {
    if g.vertex_count() < 3 || !g.is_connected() {
        return false;
    }
    if g.edge_count() != 3 * g.vertex_count() - 6 {
        return false;
    }
    match planar_embed(g) {
        Some(pg) => pg.faces().iter().all(|f| f.len() == 3),
        None => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::{combinatorially_equivalent, dual};
    use crate::generators::{complete, complete_bipartite, cycle, grid, triangulated_grid, wheel4};

    fn embed(g: &Graph) -> PlaneMultigraph {
        planar_embed(g).unwrap()
    }

    #[test]
    fn contracting_a_triangle_edge_leaves_k2() {
        let pg = embed(&complete(3));
        let (raw, _) = pg.raw_contract(0).unwrap();
        assert_eq!(raw.edge_count(), 2);
        assert!(!is_thin(&raw));
        let (c, _) = pg.embedded_contract(0, DigonChoice::First).unwrap();
        assert_eq!(c.vertex_count(), 2);
        assert_eq!(c.edge_count(), 1);
        assert!(is_thin(&c));
    }

    #[test]
    fn digon_choice_does_not_matter() {
        for g in [complete(4), wheel4(), triangulated_grid(3).unwrap(), grid(3).unwrap()] {
            let pg = embed(&g);
            for e in 0..pg.edge_count() {
                let (a, _) = pg.embedded_contract(e, DigonChoice::First).unwrap();
                let (b, _) = pg.embedded_contract(e, DigonChoice::Second).unwrap();
                assert!(combinatorially_equivalent(&a, &b));
                assert!(a.is_spherical());
                assert!(is_thin(&a));
            }
        }
    }

    #[test]
    fn embedded_contraction_matches_abstract_contraction() {
        for g in [complete_bipartite(3, 3).without_edge(0, 3).unwrap(), triangulated_grid(3).unwrap()] {
        let pg = embed(&g);
        for (e, &(u, v)) in pg.multigraph().edges().iter().enumerate() {
            let (c, _) = pg.embedded_contract(e, DigonChoice::First).unwrap();
            let (h, _) = g.contract_edge(u, v).unwrap();
            assert_eq!(c.multigraph().simple_projection(), h);
        }
        }
    }

    #[test]
    fn contraction_dualises_to_deletion() {
        for g in [complete(4), cycle(5), wheel4(), triangulated_grid(3).unwrap()] {
            let pg = embed(&g);
            let d = dual(&pg).unwrap();
            for e in 0..pg.edge_count() {
                let (c, _) = pg.raw_contract(e).unwrap();
                let lhs = dual(&c).unwrap().dual;
                let rhs = d.dual.delete_edge(d.dual_edge(e)).unwrap();
                assert!(combinatorially_equivalent(&lhs, &rhs));
            }
        }
    }

    #[test]
    fn dissolution_shortens_a_cycle() {
        let pg = embed(&cycle(5));
        let (c, _) = pg.dissolve(2).unwrap();
        assert!(combinatorially_equivalent(&c, &embed(&cycle(4))));
        assert!(embed(&complete(4)).dissolve(0).is_err());
    }

    #[test]
    fn triangulated_examples() {
        assert!(is_triangulated(&complete(3)));
        assert!(is_triangulated(&complete(4)));
        assert!(is_triangulated(&triangulated_grid(5).unwrap()));
        assert!(!is_triangulated(&wheel4()));
        assert!(!is_triangulated(&complete(5)));
        assert!(!is_triangulated(&complete(2)));
    }
}
