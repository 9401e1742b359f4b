//! Exhaustive enumeration of spherical embeddings of small graphs.

use std::collections::BTreeMap;

use super::{map_code, PlaneMultigraph};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{Graph, Multigraph};

/// Largest vertex count accepted by [`enumerate_embeddings`].
pub const EMBEDDING_VERTEX_CAP: usize = 11;

/// All spherical rotation systems of `g`, one per combinatorial
/// equivalence class, sorted by [`map_code`].
pub fn enumerate_embeddings(g: &Graph, budget: &Budget) -> Result<Vec<PlaneMultigraph>> {
    let n = g.vertex_count();
    if n > EMBEDDING_VERTEX_CAP {
        return Err(Error::Resource(format!(
            "embedding enumeration is limited to {EMBEDDING_VERTEX_CAP} vertices, got {n}"
        )));
    }
    let mg = Multigraph::from_graph(g);
    let mut darts_at: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (e, &(a, b)) in mg.edges().iter().enumerate() {
        darts_at[a].push(2 * e);
        darts_at[b].push(2 * e + 1);
    }
    let mut search = Search {
        g,
        mg: &mg,
        darts_at,
        rotation: vec![Vec::new(); n],
        assigned: vec![false; n],
        found: BTreeMap::new(),
        budget,
    };
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    if !search.assign(&order, 0) {
        return Err(Error::BudgetExhausted(budget.limit()));
    }
    Ok(search.found.into_values().collect())
}

struct Search<'a> {
    g: &'a Graph,
    mg: &'a Multigraph,
    darts_at: Vec<Vec<usize>>,
    rotation: Vec<Vec<usize>>,
    assigned: Vec<bool>,
    found: BTreeMap<Vec<u32>, PlaneMultigraph>,
    budget: &'a Budget,
}

impl Search<'_> {
    /// Returns `false` when the budget runs out.
    fn assign(&mut self, order: &[usize], depth: usize) -> bool {
        if !self.budget.tick() {
            return false;
        }
        if depth == order.len() {
            let pg = PlaneMultigraph::new(self.mg.clone(), self.rotation.clone()).expect("complete rotation");
            if pg.is_spherical() {
                self.found.entry(map_code(&pg)).or_insert(pg);
            }
            return true;
        }
        let v = order[depth];
        let darts = self.darts_at[v].clone();
        if darts.len() <= 2 {
            self.rotation[v] = darts;
            return self.descend(order, depth);
        }
        let mut rest: Vec<usize> = darts[1..].to_vec();
        let mut ok = true;
        permutations(&mut rest, 0, &mut |perm| {
            // A reflection of every rotation gives an equivalent map, so the
            // first vertex only needs one of each mirror pair.
            if depth == 0 && perm[0] > perm[perm.len() - 1] {
                return true;
            }
            let mut rot = vec![darts[0]];
            rot.extend_from_slice(perm);
            self.rotation[v] = rot;
            ok = self.descend(order, depth);
            ok
        });
        self.rotation[v].clear();
        ok
    }

    fn descend(&mut self, order: &[usize], depth: usize) -> bool {
        let v = order[depth];
        self.assigned[v] = true;
        let ok = if self.partial_is_planar() { self.assign(order, depth + 1) } else { true };
        self.assigned[v] = false;
        ok
    }

    /// Euler check on the sub-map induced by the assigned vertices. Deleting
    /// edges never raises the genus, so a failure here is final.
    fn partial_is_planar(&self) -> bool {
        let n = self.g.vertex_count();
        let keep = |d: usize| {
            let (a, b) = self.mg.endpoints(d / 2);
            self.assigned[a] && self.assigned[b]
        };
        let dc = 2 * self.mg.edge_count();
        let mut succ = vec![usize::MAX; dc];
        let mut vertices = 0i64;
        for v in (0..n).filter(|&v| self.assigned[v]) {
            vertices += 1;
            let sub: Vec<usize> = self.rotation[v].iter().copied().filter(|&d| keep(d)).collect();
            for i in 0..sub.len() {
                succ[sub[i]] = sub[(i + 1) % sub.len()];
            }
        }
        let mut edges = 0i64;
        let mut faces = 0i64;
        let mut seen = vec![false; dc];
        for d in 0..dc {
            if succ[d] == usize::MAX {
                continue;
            }
            if d % 2 == 0 {
                edges += 1;
            }
            if seen[d] {
                continue;
            }
            faces += 1;
            let mut x = d;
            while !seen[x] {
                seen[x] = true;
                x = succ[x ^ 1];
            }
        }
        // Components of the induced subgraph; isolated vertices add a face each.
        let mut within = crate::graph::VertexSet::EMPTY;
        for v in (0..n).filter(|&v| self.assigned[v]) {
            within.insert(v);
        }
        let comps = self.g.components_within(within);
        for c in &comps {
            if c.len() == 1 {
                faces += 1;
            }
        }
        vertices - edges + faces == 2 * comps.len() as i64
    }
}

/// Calls `f` on every permutation of `items[k..]` (with `items[..k]`
/// fixed); stops early when `f` returns `false`.
fn permutations(items: &mut [usize], k: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if k == items.len() {
        return f(items);
    }
    for i in k..items.len() {
        items.swap(k, i);
        let cont = permutations(items, k + 1, f);
        items.swap(k, i);
        if !cont {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::{combinatorially_equivalent, planar_embed};
    use crate::generators::{complete, complete_bipartite, cycle, path, star, triangulated_grid, wheel4};

    fn count(g: &Graph) -> usize {
        enumerate_embeddings(g, &Budget::unlimited()).unwrap().len()
    }

    #[test]
    fn three_connected_graphs_embed_uniquely() {
        assert_eq!(count(&complete(4)), 1);
        assert_eq!(count(&wheel4()), 1);
        assert_eq!(count(&triangulated_grid(2).unwrap()), 1);
    }

    #[test]
    fn trees_and_cycles() {
        assert_eq!(count(&path(5)), 1);
        assert_eq!(count(&cycle(6)), 1);
        // Four leaves around a centre: cyclic orders up to reflection.
        assert_eq!(count(&star(4)), 1);
        assert_eq!(count(&complete(1)), 1);
    }

    #[test]
    fn k23_and_bowtie_embed_uniquely() {
        assert_eq!(count(&complete_bipartite(2, 3)), 1);
        let bowtie = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert_eq!(count(&bowtie), 1);
    }

    #[test]
    fn non_planar_has_none() {
        assert_eq!(count(&complete(5)), 0);
        assert_eq!(count(&complete_bipartite(3, 3)), 0);
    }

    #[test]
    fn planar_embed_is_among_enumerated() {
        // Four paths of lengths 1..=4 between 0 and 1: cyclic orders of four
        // distinct branches up to reflection.
        let g = Graph::from_edges(
            8,
            &[(0, 1), (0, 2), (2, 1), (0, 3), (3, 4), (4, 1), (0, 5), (5, 6), (6, 7), (7, 1)],
        )
        .unwrap();
        let all = enumerate_embeddings(&g, &Budget::unlimited()).unwrap();
        assert_eq!(all.len(), 3);
        let pg = planar_embed(&g).unwrap();
        assert_eq!(all.iter().filter(|x| combinatorially_equivalent(x, &pg)).count(), 1);
        for (i, a) in all.iter().enumerate() {
            for b in &all[i + 1..] {
                assert!(!combinatorially_equivalent(a, b));
            }
        }
    }

    #[test]
    fn budget_and_cap() {
        assert!(matches!(enumerate_embeddings(&complete(4), &Budget::new(3)), Err(Error::BudgetExhausted(_))));
        assert!(matches!(enumerate_embeddings(&cycle(12), &Budget::unlimited()), Err(Error::Resource(_))));
    }
}
