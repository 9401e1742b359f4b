//! Combinatorial equivalence of rotation systems, up to relabelling and
//! reflection. Components are compared as a multiset; how components nest
//! inside each other's faces is not recorded.

use super::PlaneMultigraph;

/// Darts of each component that has edges, grouped by component.
fn dart_components(pg: &PlaneMultigraph) -> Vec<Vec<usize>> {
    let comp = pg.component_of_vertices();
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); pg.component_count()];
    for d in 0..pg.dart_count() {
        groups[comp[pg.tail(d)]].push(d);
    }
    groups.retain(|g| !g.is_empty());
    groups
}

fn isolated_count(pg: &PlaneMultigraph) -> usize {
    (0..pg.vertex_count()).filter(|&v| pg.rotation(v).is_empty()).count()
}

/// Direct test: search for a dart bijection commuting with the twin
/// involution and with the rotation (or its inverse).
pub fn combinatorially_equivalent(a: &PlaneMultigraph, b: &PlaneMultigraph) -> bool {
    if a.vertex_count() != b.vertex_count()
        || a.edge_count() != b.edge_count()
        || isolated_count(a) != isolated_count(b)
    {
        return false;
    }
    let ca = dart_components(a);
    let cb = dart_components(b);
    if ca.len() != cb.len() {
        return false;
    }
    let mut used = vec![false; cb.len()];
    'outer: for comp in &ca {
        for (j, other) in cb.iter().enumerate() {
            if used[j] || other.len() != comp.len() {
                continue;
            }
            if component_matches(a, b, comp[0], other) {
                used[j] = true;
                continue 'outer;
            }
        }
        return false;
    }
    true
}

fn component_matches(a: &PlaneMultigraph, b: &PlaneMultigraph, root: usize, targets: &[usize]) -> bool {
    let mut fwd = vec![usize::MAX; a.dart_count()];
    let mut inv = vec![usize::MAX; b.dart_count()];
    for mirror in [false, true] {
        for &t in targets {
            if try_map(a, b, root, t, mirror, &mut fwd, &mut inv) {
                return true;
            }
        }
    }
    false
}

fn try_map(
    a: &PlaneMultigraph,
    b: &PlaneMultigraph,
    root: usize,
    target: usize,
    mirror: bool,
    fwd: &mut [usize],
    inv: &mut [usize],
) -> bool {
    let mut touched = Vec::new();
    let mut ok = true;
    let mut queue = vec![(root, target)];
    while let Some((x, y)) = queue.pop() {
        if fwd[x] != usize::MAX || inv[y] != usize::MAX {
            if fwd[x] != y || inv[y] != x {
                ok = false;
                break;
            }
            continue;
        }
        fwd[x] = y;
        inv[y] = x;
        touched.push((x, y));
        queue.push((x ^ 1, y ^ 1));
        let ys = if mirror { b.pred(y) } else { b.succ(y) };
        queue.push((a.succ(x), ys));
    }
    for (x, y) in touched {
        fwd[x] = usize::MAX;
        inv[y] = usize::MAX;
    }
    ok
}

/// Canonical code: equal for two plane multigraphs exactly when they are
/// combinatorially equivalent.
pub fn map_code(pg: &PlaneMultigraph) -> Vec<u32> {
    let mut comps: Vec<Vec<u32>> = dart_components(pg).iter().map(|c| component_code(pg, c)).collect();
    comps.sort();
    let mut out = vec![pg.vertex_count() as u32, pg.edge_count() as u32, isolated_count(pg) as u32];
    for c in comps {
        out.push(c.len() as u32);
        out.extend(c);
    }
    out
}

fn component_code(pg: &PlaneMultigraph, darts: &[usize]) -> Vec<u32> {
    let mut best: Option<Vec<u32>> = None;
    let mut label = vec![u32::MAX; pg.dart_count()];
    let mut order = Vec::with_capacity(darts.len());
    for mirror in [false, true] {
        for &root in darts {
            order.clear();
            label[root] = 0;
            order.push(root);
            let mut code = Vec::with_capacity(2 * darts.len());
            let mut i = 0;
            let mut worse = false;
            let mut ahead = false;
            while i < order.len() {
                let x = order[i];
                let s = if mirror { pg.pred(x) } else { pg.succ(x) };
                for y in [x ^ 1, s] {
                    if label[y] == u32::MAX {
                        label[y] = order.len() as u32;
                        order.push(y);
                    }
                    code.push(label[y]);
                }
                // Prune once the prefix exceeds the best code found so far.
                if !ahead {
                    if let Some(b) = &best {
                        let k = code.len();
                        match code[..].cmp(&b[..k]) {
                            std::cmp::Ordering::Greater => {
                                worse = true;
                                break;
                            }
                            std::cmp::Ordering::Less => ahead = true,
                            std::cmp::Ordering::Equal => {}
                        }
                    }
                }
                i += 1;
            }
            for &d in &order {
                label[d] = u32::MAX;
            }
            if !worse && best.as_ref().is_none_or(|b| code < *b) {
                best = Some(code);
            }
        }
    }
    best.unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::planar_embed;
    use crate::generators::{complete, cycle, triangulated_grid, wheel4};

    #[test]
    fn relabelled_embedding_is_equivalent() {
        let pg = planar_embed(&triangulated_grid(3).unwrap()).unwrap();
        let n = pg.vertex_count();
        let perm: Vec<usize> = (0..n).map(|v| (v * 4 + 1) % n).collect();
        let g2 = triangulated_grid(3).unwrap().permuted(&perm);
        let pg2 = planar_embed(&g2).unwrap();
        assert!(combinatorially_equivalent(&pg, &pg2));
        assert_eq!(map_code(&pg), map_code(&pg2));
    }

    #[test]
    fn mirror_is_equivalent() {
        let pg = planar_embed(&wheel4()).unwrap();
        assert!(combinatorially_equivalent(&pg, &pg.mirrored()));
        assert_eq!(map_code(&pg), map_code(&pg.mirrored()));
    }

    #[test]
    fn different_maps_differ() {
        let a = planar_embed(&complete(4)).unwrap();
        let b = planar_embed(&cycle(4)).unwrap();
        assert!(!combinatorially_equivalent(&a, &b));
        assert_ne!(map_code(&a), map_code(&b));
    }

    #[test]
    fn component_order_does_not_matter() {
        let g1 = complete(3).disjoint_union(&cycle(4)).unwrap();
        let g2 = cycle(4).disjoint_union(&complete(3)).unwrap();
        let a = planar_embed(&g1).unwrap();
        let b = planar_embed(&g2).unwrap();
        assert!(combinatorially_equivalent(&a, &b));
        assert_eq!(map_code(&a), map_code(&b));
    }
}
