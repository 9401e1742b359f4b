//! Exact treewidth by subset dynamic programming, greedy bounds, and
//! checks of the dual and grid-minor treewidth facts.

use serde::Serialize;

use crate::embedding::{dual, PlaneMultigraph};
use crate::error::{invalid, Error, Result};
use crate::generators::grid;
use crate::graph::{Graph, VertexSet};
use crate::relations::is_minor;

/// Largest graph accepted by [`exact_treewidth`].
pub const EXACT_TW_CAP: usize = 18;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwResult {
    pub lower: usize,
    pub upper: usize,
    pub exact: bool,
    /// Elimination order of width `upper`.
    pub order: Vec<usize>,
}

/// Width of an elimination order: the largest number of later neighbours
/// a vertex has when it is eliminated.
pub fn elimination_width(g: &Graph, order: &[usize]) -> Result<usize> {
    let n = g.vertex_count();
    let mut seen = VertexSet::EMPTY;
    for &v in order {
        if v >= n || seen.contains(v) {
            return Err(invalid("order is not a permutation of the vertices"));
        }
        seen.insert(v);
    }
    if seen.len() != n {
        return Err(invalid("order is not a permutation of the vertices"));
    }
    let mut adj: Vec<VertexSet> = (0..n).map(|v| g.neighbors(v)).collect();
    let mut width = 0;
    for &v in order {
        let nb = adj[v];
        width = width.max(nb.len());
        for u in nb {
            adj[u] = adj[u].union(nb);
            adj[u].remove(u);
            adj[u].remove(v);
        }
    }
    Ok(width)
}

/// Exact treewidth for at most [`EXACT_TW_CAP`] vertices.
///
/// `TW(S)` is the best width of eliminating `S` first; eliminating `v`
/// after `S` costs the number of vertices outside `S ∪ {v}` reachable from
/// `v` through `S`.
pub fn exact_treewidth(g: &Graph) -> Result<TwResult> {
    let n = g.vertex_count();
    if n > EXACT_TW_CAP {
        return Err(Error::Resource(format!("exact treewidth is limited to {EXACT_TW_CAP} vertices, got {n}")));
    }
    if n == 0 {
        return Ok(TwResult { lower: 0, upper: 0, exact: true, order: Vec::new() });
    }
    let heur = treewidth_bounds(g);
    if heur.exact {
        return Ok(heur);
    }
    // Entries at or above the heuristic bound are useless; cap them there.
    let cap = heur.upper as u8;
    let full = (1usize << n) - 1;
    let mut tw = vec![cap; 1 << n];
    tw[0] = 0;
    for s in 1..=full {
        let mut best = cap;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let prev = s & !(1 << v);
            let sub = tw[prev];
            if sub >= best {
                continue;
            }
            let q = q_size(g, prev, v) as u8;
            let val = sub.max(q);
            if val < best {
                best = val;
            }
        }
        tw[s] = best;
    }
    let value = tw[full] as usize;
    if value >= heur.upper {
        return Ok(TwResult { lower: heur.upper, upper: heur.upper, exact: true, order: heur.order });
    }
    // Walk back from the full set to recover an order.
    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let target = tw[s];
        let mut rest = s;
        let mut chosen = None;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let prev = s & !(1 << v);
            if tw[prev].max(q_size(g, prev, v) as u8) == target {
                chosen = Some(v);
                break;
            }
        }
        let v = chosen.expect("DP value is attained");
        order.push(v);
        s &= !(1 << v);
    }
    order.reverse();
    debug_assert_eq!(elimination_width(g, &order).ok(), Some(value));
    Ok(TwResult { lower: value, upper: value, exact: true, order })
}

fn q_size(g: &Graph, s: usize, v: usize) -> usize {
    let within = VertexSet(s as u128 | 1u128 << v);
    let comp = g.reach(v, within);
    g.neighborhood(comp).difference(within).len()
}

/// Min-fill upper bound and minor-min-width lower bound.
pub fn treewidth_bounds(g: &Graph) -> TwResult {
    let (upper, order) = min_fill(g);
    let lower = minor_min_width(g).min(upper);
    TwResult { lower, upper, exact: lower == upper, order }
}

fn min_fill(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.vertex_count();
    let mut adj: Vec<VertexSet> = (0..n).map(|v| g.neighbors(v)).collect();
    let mut alive = g.vertices();
    let mut order = Vec::with_capacity(n);
    let mut width = 0;
    while let Some(first) = alive.first() {
        let mut best = (usize::MAX, usize::MAX, first);
        for v in alive {
            let nb = adj[v];
            let mut fill = 0;
            for u in nb {
                fill += nb.difference(adj[u]).len() - 1;
            }
            let key = (fill / 2, nb.len(), v);
            if key < best {
                best = key;
            }
        }
        let v = best.2;
        let nb = adj[v];
        width = width.max(nb.len());
        for u in nb {
            adj[u] = adj[u].union(nb);
            adj[u].remove(u);
            adj[u].remove(v);
        }
        alive.remove(v);
        order.push(v);
    }
    (width, order)
}

/// Repeatedly contracts a minimum-degree vertex into the neighbour it
/// shares fewest neighbours with; the largest minimum degree seen is a
/// lower bound because treewidth does not grow under minors.
fn minor_min_width(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut adj: Vec<VertexSet> = (0..n).map(|v| g.neighbors(v)).collect();
    let mut alive = g.vertices();
    let mut lb = 0;
    while alive.len() >= 2 {
        let v = alive.iter().min_by_key(|&v| (adj[v].len(), v)).unwrap();
        let d = adj[v].len();
        lb = lb.max(d);
        if d == 0 {
            alive.remove(v);
            continue;
        }
        let u = adj[v].iter().min_by_key(|&u| (adj[u].intersection(adj[v]).len(), u)).unwrap();
        // Merge v into u.
        let merged = adj[u].union(adj[v]).difference(VertexSet::singleton(u)).difference(VertexSet::singleton(v));
        for w in adj[v] {
            adj[w].remove(v);
            if w != u {
                adj[w].insert(u);
            }
        }
        adj[u] = merged;
        adj[v] = VertexSet::EMPTY;
        alive.remove(v);
    }
    lb
}

/// `tw(G*) ≤ tw(G) + 1`, comparing simple projections.
pub fn check_dual_tw(pg: &PlaneMultigraph) -> Result<bool> {
    let d = dual(pg)?;
    let g = pg.multigraph().simple_projection();
    let gd = d.dual.multigraph().simple_projection();
    Ok(exact_treewidth(&gd)?.upper <= exact_treewidth(&g)?.upper + 1)
}

/// If `M_m` is not a minor of `g` then `tw(g) ≤ 6m − 5`.
pub fn check_grid_minor_bound(g: &Graph, m: usize) -> Result<bool> {
    if is_minor(&grid(m)?, g)?.is_some() {
        return Ok(true);
    }
    Ok(exact_treewidth(g)?.upper + 5 <= 6 * m)
}
