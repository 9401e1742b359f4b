use super::{find_c_obstruction, smallest_triangulated_grid_index, triangulation_witness, DEFAULT_GRID_MAX};
use crate::budget::{Budget, Outcome};
use crate::embedding::{dual, planar_embed};
use crate::error::{Error, Result};
use crate::generators::grid;
use crate::graph::{Graph, Multigraph};
use crate::relations::{is_minor_with, is_topological_minor_with};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CMode {
    /// Least `m` with the dual of the triangulation a minor of `M_m`.
    Exact,
    /// `m = 2(|V| + 2|E|)` of the dual, loops and parallel edges counted.
    #[default]
    Bound,
}

/// Treewidth threshold `c_H = 6m − 3` with its provenance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CBound {
    pub pattern: Graph,
    pub triangulation: Graph,
    /// Least `k ≤ DEFAULT_GRID_MAX` with `H ≤_c Γ_k`, if found within budget.
    pub grid_index: Option<usize>,
    pub dual_vertex_count: usize,
    pub dual_edge_count: usize,
    pub bound_m: usize,
    pub m: usize,
    pub c_h: usize,
    /// `m` is the exact least grid side, not the analytic bound.
    pub exact: bool,
}

pub fn compute_c_h(h: &Graph, mode: CMode, budget: &Budget) -> Result<CBound> {
    if let Some((name, _)) = find_c_obstruction(h)? {
        return Err(Error::Domain(format!("H is not in class C: it contracts to {name}")));
    }
    let triangulation = triangulation_witness(h)?
        .ok_or_else(|| Error::Domain("no triangulated grid within the search range contracts to H".into()))?;
    let grid_index = smallest_triangulated_grid_index(h, DEFAULT_GRID_MAX, &budget.fresh())?.found();
    let pg = planar_embed(&triangulation).expect("triangulations are planar");
    let hd = dual(&pg)?.dual;
    let (dv, de) = (hd.vertex_count(), hd.edge_count());
    let bound_m = 2 * (dv + 2 * de);
    let mut m = bound_m;
    let mut exact = false;
    if mode == CMode::Exact {
        let simple = hd.multigraph().simple_projection();
        for side in 1..=bound_m {
            if side * side > crate::graph::MAX_VERTICES {
                break;
            }
            let host = grid(side)?;
            // Below degree 4 a minor is a topological minor, and the path
            // search is far cheaper than branch-set search on grids.
            let found = if simple.max_degree() <= 3 {
                is_topological_minor_with(&Multigraph::from_graph(&simple), &Multigraph::from_graph(&host), &budget.fresh())?
                    .map(|_| ())
            } else {
                is_minor_with(&simple, &host, &budget.fresh())?.map(|_| ())
            };
            match found {
                Outcome::Found(()) => {
                    m = side;
                    exact = true;
                    break;
                }
                Outcome::Absent => {}
                Outcome::Exhausted => break,
            }
        }
    }
    Ok(CBound {
        pattern: h.clone(),
        triangulation,
        grid_index,
        dual_vertex_count: dv,
        dual_edge_count: de,
        bound_m,
        m,
        c_h: 6 * m - 3,
        exact,
    })
}
