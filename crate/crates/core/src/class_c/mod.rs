//! The class of contractions of triangulated planar graphs.
//!
//! Three independent membership routes: splitting along cut vertices and
//! adjacent 2-cuts ([`decompose`]), forbidden contractions
//! ([`find_c_obstruction`]) and contraction of a triangulated grid
//! ([`smallest_triangulated_grid_index`]). `K₁` and `K₂` are members.

mod constant;
mod decomposition;

pub use constant::{compute_c_h, CBound, CMode};
pub use decomposition::{decompose, is_in_c_by_decomposition, Cut, DecompositionTree, Piece, PieceKind};

use crate::budget::{Budget, Outcome};
use crate::embedding::is_triangulated;
use crate::error::{Error, Result};
use crate::generators::{class_c_obstructions, planarity_obstructions, triangulated_grid};
use crate::graph::Graph;
use crate::relations::{is_contraction, is_contraction_with, WitnessPartition};

/// Grids searched by [`triangulation_witness`].
pub const DEFAULT_GRID_MAX: usize = 6;

/// The first forbidden pattern (in the order `K_{2,r}` for `r = 2..=n−2`,
/// `K^3_{3,3}`, `K_5`, `W_4`) that is a contraction of `g`, with its witness.
pub fn find_c_obstruction(g: &Graph) -> Result<Option<(String, WitnessPartition)>> {
    first_contraction(g, class_c_obstructions(g.vertex_count()))
}

pub fn is_in_c_by_forbidden(g: &Graph) -> Result<bool> {
    Ok(find_c_obstruction(g)?.is_none())
}

/// The first of `K_{3,3}`, `K^1_{3,3}`, `K^2_{3,3}`, `K^3_{3,3}`, `K_5` that is a
/// contraction of `g`.
pub fn find_planarity_obstruction(g: &Graph) -> Result<Option<(String, WitnessPartition)>> {
    first_contraction(g, planarity_obstructions())
}

pub fn is_planar_by_forbidden_contraction(g: &Graph) -> Result<bool> {
    Ok(find_planarity_obstruction(g)?.is_none())
}

fn first_contraction(g: &Graph, patterns: Vec<(String, Graph)>) -> Result<Option<(String, WitnessPartition)>> {
    if !g.is_connected() {
        return Err(crate::error::invalid("G must be connected"));
    }
    for (name, p) in patterns {
        if let Some(w) = is_contraction(&p, g)? {
            return Ok(Some((name, w)));
        }
    }
    Ok(None)
}

/// Least `k` in `2..=k_max` with `h ≤_c Γ_k`. Non-members are rejected up
/// front by the forbidden-contraction test so no grid search is wasted.
pub fn smallest_triangulated_grid_index(h: &Graph, k_max: usize, budget: &Budget) -> Result<Outcome<usize>> {
    if find_c_obstruction(h)?.is_some() {
        return Ok(Outcome::Absent);
    }
    for k in 2..=k_max {
        if h.vertex_count() > k * k {
            continue;
        }
        let grid = triangulated_grid(k)?;
        match is_contraction_with(h, &grid, budget)? {
            Outcome::Found(_) => return Ok(Outcome::Found(k)),
            Outcome::Exhausted => return Ok(Outcome::Exhausted),
            Outcome::Absent => {}
        }
    }
    Ok(Outcome::Absent)
}

/// A triangulated graph contracting to `h`: `h` itself when triangulated,
/// otherwise the smallest triangulated grid that works.
pub fn triangulation_witness(h: &Graph) -> Result<Option<Graph>> {
    if is_triangulated(h) {
        return Ok(Some(h.clone()));
    }
    let budget = Budget::from_env();
    match smallest_triangulated_grid_index(h, DEFAULT_GRID_MAX, &budget)? {
        Outcome::Found(k) => Ok(Some(triangulated_grid(k)?)),
        Outcome::Absent => Ok(None),
        Outcome::Exhausted => Err(Error::BudgetExhausted(budget.limit())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, complete_bipartite, cycle, path, petersen, star, wheel4};

    #[test]
    fn forbidden_route_examples() {
        assert_eq!(find_c_obstruction(&wheel4()).unwrap().unwrap().0, "W_4");
        assert_eq!(find_c_obstruction(&cycle(4)).unwrap().unwrap().0, "K_{2,2}");
        assert!(is_in_c_by_forbidden(&complete(4)).unwrap());
        assert!(is_in_c_by_forbidden(&star(3)).unwrap());
        assert!(is_in_c_by_forbidden(&complete(1)).unwrap());
    }

    #[test]
    fn planarity_route_examples() {
        assert!(!is_planar_by_forbidden_contraction(&complete(5)).unwrap());
        assert!(!is_planar_by_forbidden_contraction(&petersen()).unwrap());
        assert!(is_planar_by_forbidden_contraction(&triangulated_grid(3).unwrap()).unwrap());
        assert!(!is_planar_by_forbidden_contraction(&complete_bipartite(3, 3)).unwrap());
    }

    #[test]
    fn grid_index_examples() {
        let b = Budget::unlimited();
        assert_eq!(smallest_triangulated_grid_index(&complete(4), 6, &b).unwrap().found(), Some(2));
        assert_eq!(smallest_triangulated_grid_index(&complete(3), 6, &b).unwrap().found(), Some(2));
        assert!(matches!(smallest_triangulated_grid_index(&cycle(4), 6, &b).unwrap(), Outcome::Absent));
    }

    #[test]
    fn triangulation_witness_examples() {
        assert_eq!(triangulation_witness(&complete(4)).unwrap().unwrap(), complete(4));
        // Contractions of K_4 are complete, so P_3 needs the next grid.
        assert_eq!(triangulation_witness(&path(3)).unwrap().unwrap(), triangulated_grid(3).unwrap());
        assert!(triangulation_witness(&wheel4()).unwrap().is_none());
    }
}
