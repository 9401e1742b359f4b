//! Cross-checks between relations: the dual route to contraction, the
//! independent-set characterisation of star contractions, degree-3
//! minors, and an exhaustive contraction closure used as an oracle.

use std::collections::HashSet;

use super::{
    is_contraction, is_minor, is_topological_minor, is_topological_minor_with, require_connected, TmWitness,
    WitnessPartition,
};
use crate::budget::{Budget, Outcome};
use crate::embedding::{dual, is_triangulated, planar_embed, PlaneMultigraph};
use crate::error::{invalid, Error, Result};
use crate::graph::{canonical_form, CanonicalForm, Graph, VertexSet};

/// Largest graph accepted by [`all_contractions`].
pub const CLOSURE_VERTEX_CAP: usize = 9;

/// Canonical forms of every contraction of `g` (including `g`), found by
/// contracting single edges in every order with memoisation.
pub fn all_contractions(g: &Graph) -> Result<HashSet<CanonicalForm>> {
    if g.vertex_count() > CLOSURE_VERTEX_CAP {
        return Err(Error::Resource(format!("contraction closure is limited to {CLOSURE_VERTEX_CAP} vertices")));
    }
    let mut seen = HashSet::new();
    let mut stack = vec![g.clone()];
    seen.insert(canonical_form(g));
    while let Some(x) = stack.pop() {
        for (u, v) in x.edges() {
            let (y, _) = x.contract_edge(u, v)?;
            if seen.insert(canonical_form(&y)) {
                stack.push(y);
            }
        }
    }
    Ok(seen)
}

/// Whether `dual(h_emb) ≤_tm dual(g_emb)`.
pub fn dual_topological_test(
    h_emb: &PlaneMultigraph,
    g_emb: &PlaneMultigraph,
    budget: &Budget,
) -> Result<Outcome<TmWitness>> {
    let hd = dual(h_emb)?;
    let gd = dual(g_emb)?;
    is_topological_minor_with(hd.dual.multigraph(), gd.dual.multigraph(), budget)
}

/// Decides `H ≤_c G` for triangulated `H` through `H* ≤_tm G*`; the witness
/// of a positive answer comes from the direct search, and a disagreement
/// between the two routes is reported as [`Error::Inconsistent`].
pub fn contraction_via_dual(h: &Graph, g: &Graph) -> Result<Option<WitnessPartition>> {
    if !is_triangulated(h) {
        return Err(invalid("H must be triangulated"));
    }
    require_connected(g, "G")?;
    let g_emb = planar_embed(g).ok_or_else(|| invalid("G must be planar"))?;
    let h_emb = planar_embed(h).expect("triangulated graphs are planar");
    let budget = Budget::from_env();
    let tm = dual_topological_test(&h_emb, &g_emb, &budget)?.into_result(&budget)?;
    if tm.is_none() {
        return Ok(None);
    }
    match is_contraction(h, g)? {
        Some(w) => Ok(Some(w)),
        None => Err(Error::Inconsistent("dual topological minor found but no contraction".into())),
    }
}

/// Whether `G` has an independent set `S` of `m` vertices with `G − S`
/// connected and non-empty, i.e. `K_{1,m} ≤_c G`.
pub fn star_contractibility(g: &Graph, m: usize) -> Result<bool> {
    require_connected(g, "G")?;
    let n = g.vertex_count();
    if m >= n {
        return Ok(false);
    }
    fn pick(g: &Graph, from: usize, left: usize, s: VertexSet) -> bool {
        if left == 0 {
            let rest = g.vertices().difference(s);
            return g.is_connected_set(rest);
        }
        for v in from..g.vertex_count() {
            if g.neighbors(v).intersection(s).is_empty() {
                let mut t = s;
                t.insert(v);
                if pick(g, v + 1, left - 1, t) {
                    return true;
                }
            }
        }
        false
    }
    Ok(pick(g, 0, m, VertexSet::EMPTY))
}

/// For `Δ(H) ≤ 3`: whether `H ≤_m G` and `H ≤_tm G` agree.
pub fn verify_degree3_equivalence(h: &Graph, g: &Graph) -> Result<bool> {
    if h.max_degree() > 3 {
        return Err(invalid("pattern has a vertex of degree above 3"));
    }
    Ok(is_minor(h, g)?.is_some() == is_topological_minor(h, g)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, complete_bipartite, cycle, grid, path, petersen, star, triangulated_grid};

    #[test]
    fn star_examples() {
        assert!(star_contractibility(&path(4), 2).unwrap());
        assert!(!star_contractibility(&cycle(5), 2).unwrap());
        assert!(!star_contractibility(&complete(4), 3).unwrap());
        assert!(star_contractibility(&star(3), 3).unwrap());
        assert!(star_contractibility(&complete(2), 1).unwrap());
    }

    #[test]
    fn via_dual_examples() {
        let k4 = complete(4);
        assert!(contraction_via_dual(&k4, &triangulated_grid(3).unwrap()).unwrap().is_some());
        assert!(contraction_via_dual(&k4, &cycle(5)).unwrap().is_none());
        assert!(contraction_via_dual(&triangulated_grid(2).unwrap(), &k4).unwrap().is_some());
        assert!(contraction_via_dual(&cycle(4), &k4).is_err());
    }

    #[test]
    fn degree3_examples() {
        assert!(verify_degree3_equivalence(&complete(4), &grid(3).unwrap()).unwrap());
        assert!(verify_degree3_equivalence(&cycle(4), &path(4)).unwrap());
        assert!(verify_degree3_equivalence(&complete_bipartite(3, 3), &petersen()).unwrap());
        assert!(verify_degree3_equivalence(&complete(5), &petersen()).is_err());
    }

    #[test]
    fn closure_matches_search() {
        let g = triangulated_grid(3).unwrap();
        let closure = all_contractions(&g).unwrap();
        for h in [complete(4), complete(3), path(3), cycle(4), star(3), complete(5)] {
            let direct = is_contraction(&h, &g).unwrap().is_some();
            assert_eq!(direct, closure.contains(&canonical_form(&h)), "{h:?}");
        }
    }
}
