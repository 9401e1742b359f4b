//! Isomorphism testing and canonical labelling.
//!
//! The two are implemented independently: [`is_isomorphic`] is a direct
//! backtracking search, while [`canonical_form`] uses colour refinement with
//! individualisation and automorphism pruning.

use std::cmp::Ordering;

use super::{Graph, VertexSet};

/// Byte string labelling a graph up to isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(pub Vec<u8>);

/// Backtracking isomorphism search; returns `phi` with `phi[v]` the image in `h` of `v ∈ g`.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    iso_search(g, h, None)
}

/// Vertices of `g` that represent its automorphism orbits (the smallest of each).
pub fn orbit_representatives(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut orbit = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for i in 0..n {
        if orbit[i] != usize::MAX {
            continue;
        }
        orbit[i] = i;
        reps.push(i);
        for j in i + 1..n {
            if orbit[j] == usize::MAX && iso_search(g, g, Some((i, j))).is_some() {
                orbit[j] = i;
            }
        }
    }
    reps
}

fn iso_search(g: &Graph, h: &Graph, pin: Option<(usize, usize)>) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    if n != h.vertex_count() || g.edge_count() != h.edge_count() || g.degree_sequence() != h.degree_sequence() {
        return None;
    }
    let inv_g = vertex_invariants(g);
    let inv_h = vertex_invariants(h);
    let mut sorted_g = inv_g.clone();
    let mut sorted_h = inv_h.clone();
    sorted_g.sort();
    sorted_h.sort();
    if sorted_g != sorted_h {
        return None;
    }
    // Visit g's vertices so that each one (per component) has an earlier neighbour.
    let mut order = Vec::with_capacity(n);
    let mut seen = VertexSet::EMPTY;
    while order.len() < n {
        let start = match pin {
            Some((v, _)) if !seen.contains(v) => v,
            _ => (0..n).filter(|&v| !seen.contains(v)).max_by_key(|&v| g.degree(v)).unwrap(),
        };
        seen.insert(start);
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for w in g.neighbors(v).difference(seen) {
                seen.insert(w);
                queue.push_back(w);
            }
        }
    }
    let mut phi = vec![usize::MAX; n];
    let mut used = VertexSet::EMPTY;
    let ctx = IsoCtx { g, h, inv_g: &inv_g, inv_h: &inv_h, order: &order, pin: pin.map(|p| p.1) };
    if ctx.extend(0, &mut phi, &mut used) {
        Some(phi)
    } else {
        None
    }
}

fn vertex_invariants(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    (0..g.vertex_count())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|w| g.degree(w)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect()
}

struct IsoCtx<'a> {
    g: &'a Graph,
    h: &'a Graph,
    inv_g: &'a [(usize, Vec<usize>)],
    inv_h: &'a [(usize, Vec<usize>)],
    order: &'a [usize],
    /// Forced image of `order[0]`.
    pin: Option<usize>,
}

impl IsoCtx<'_> {
    fn extend(&self, depth: usize, phi: &mut [usize], used: &mut VertexSet) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        'cand: for x in 0..self.h.vertex_count() {
            if used.contains(x) || self.inv_g[v] != self.inv_h[x] {
                continue;
            }
            if depth == 0 && self.pin.is_some_and(|p| p != x) {
                continue;
            }
            for &u in &self.order[..depth] {
                if self.g.has_edge(u, v) != self.h.has_edge(phi[u], x) {
                    continue 'cand;
                }
            }
            phi[v] = x;
            used.insert(x);
            if self.extend(depth + 1, phi, used) {
                return true;
            }
            used.remove(x);
            phi[v] = usize::MAX;
        }
        false
    }
}

/// Canonical form of `g`; equal for two graphs exactly when they are isomorphic.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let (_, cert) = canonical_search(g);
    let n = g.vertex_count();
    let mut bytes = Vec::with_capacity(1 + n * n.div_ceil(8));
    bytes.push(n as u8);
    // Row i only needs columns > i; pack them.
    let mut acc = 0u8;
    let mut bits = 0;
    for (i, row) in cert.iter().enumerate() {
        for j in i + 1..n {
            acc = acc << 1 | (row >> j & 1) as u8;
            bits += 1;
            if bits == 8 {
                bytes.push(acc);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        bytes.push(acc << (8 - bits));
    }
    CanonicalForm(bytes)
}

/// Canonical labelling: `lab[v]` is the canonical position of `v`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    canonical_search(g).0
}

type Partition = Vec<Vec<usize>>;

struct CanonSearch<'a> {
    g: &'a Graph,
    best: Option<(Vec<u128>, Vec<usize>)>,
    first: Option<(Vec<u128>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

fn canonical_search(g: &Graph) -> (Vec<usize>, Vec<u128>) {
    let n = g.vertex_count();
    if n == 0 {
        return (Vec::new(), Vec::new());
    }
    let mut search = CanonSearch { g, best: None, first: None, automorphisms: Vec::new() };
    let root = refine(g, vec![(0..n).collect()]);
    search.descend(root, &mut Vec::new());
    let (cert, lab) = search.best.expect("at least one leaf");
    (lab, cert)
}

impl CanonSearch<'_> {
    fn descend(&mut self, part: Partition, prefix: &mut Vec<usize>) {
        if part.len() == self.g.vertex_count() {
            self.leaf(&part);
            return;
        }
        let target = part.iter().position(|c| c.len() > 1).expect("non-discrete partition");
        let cell = part[target].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cell {
            if !explored.is_empty() && self.in_explored_orbit(v, &explored, prefix) {
                continue;
            }
            explored.push(v);
            let mut child = part.clone();
            let rest: Vec<usize> = cell.iter().copied().filter(|&w| w != v).collect();
            child.splice(target..=target, [vec![v], rest]);
            let child = refine(self.g, child);
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
        }
    }

    /// Whether `v` lies in the orbit of an explored vertex under the group
    /// generated by the known automorphisms that fix `prefix` pointwise.
    fn in_explored_orbit(&self, v: usize, explored: &[usize], prefix: &[usize]) -> bool {
        let n = self.g.vertex_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.automorphisms {
            if prefix.iter().all(|&p| gamma[p] == p) {
                any = true;
                for x in 0..n {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, gamma[x]));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == rv)
    }

    fn leaf(&mut self, part: &Partition) {
        let n = self.g.vertex_count();
        let mut lab = vec![0; n];
        for (pos, cell) in part.iter().enumerate() {
            lab[cell[0]] = pos;
        }
        let mut cert = vec![0u128; n];
        for (u, v) in self.g.edges() {
            cert[lab[u]] |= 1 << lab[v];
            cert[lab[v]] |= 1 << lab[u];
        }
        for reference in [&self.first, &self.best].into_iter().flatten() {
            if reference.0 == cert {
                // lab_ref^-1 ∘ lab is an automorphism.
                let mut inv = vec![0; n];
                for (v, &p) in reference.1.iter().enumerate() {
                    inv[p] = v;
                }
                let gamma: Vec<usize> = (0..n).map(|v| inv[lab[v]]).collect();
                if gamma.iter().enumerate().any(|(i, &x)| i != x) && !self.automorphisms.contains(&gamma) {
                    self.automorphisms.push(gamma);
                }
            }
        }
        if self.first.is_none() {
            self.first = Some((cert.clone(), lab.clone()));
        }
        let better = match &self.best {
            None => true,
            Some((b, _)) => cert.cmp(b) == Ordering::Less,
        };
        if better {
            self.best = Some((cert, lab));
        }
    }
}

/// Equitable refinement of an ordered partition. Cells are split by the
/// count vector of neighbours in each current cell; sub-cells keep their
/// parent's position and are ordered by that vector, so the result is
/// isomorphism-invariant.
fn refine(g: &Graph, mut part: Partition) -> Partition {
    loop {
        let k = part.len();
        let masks: Vec<VertexSet> = part.iter().map(|c| c.iter().copied().collect()).collect();
        let mut next: Partition = Vec::with_capacity(k);
        for cell in &part {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u8>, usize)> = cell
                .iter()
                .map(|&v| {
                    let nb = g.neighbors(v);
                    (masks.iter().map(|m| nb.intersection(*m).len() as u8).collect(), v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() == k {
            return next;
        }
        part = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, complete_bipartite, cycle, path, triangulated_grid};

    #[test]
    fn c4_is_k22() {
        let phi = is_isomorphic(&cycle(4), &complete_bipartite(2, 2)).unwrap();
        let g = cycle(4);
        let h = complete_bipartite(2, 2);
        for (u, v) in g.edges() {
            assert!(h.has_edge(phi[u], phi[v]));
        }
        assert_eq!(canonical_form(&g), canonical_form(&h));
    }

    #[test]
    fn triangle_is_not_a_path() {
        assert!(is_isomorphic(&complete(3), &path(3)).is_none());
        assert_ne!(canonical_form(&complete(3)), canonical_form(&path(3)));
    }

    #[test]
    fn gamma2_is_k4() {
        assert!(is_isomorphic(&triangulated_grid(2).unwrap(), &complete(4)).is_some());
    }

    #[test]
    fn canonical_form_invariant_under_relabelling() {
        let g = triangulated_grid(4).unwrap();
        let n = g.vertex_count();
        let perm: Vec<usize> = (0..n).map(|v| (v * 7 + 3) % n).collect();
        assert_eq!(canonical_form(&g), canonical_form(&g.permuted(&perm)));
    }

    #[test]
    fn orbits() {
        assert_eq!(orbit_representatives(&complete(5)), vec![0]);
        assert_eq!(orbit_representatives(&path(4)), vec![0, 1]);
        assert_eq!(orbit_representatives(&complete_bipartite(2, 3)), vec![0, 2]);
    }

    #[test]
    fn large_cliques_are_fast() {
        // Automorphism pruning keeps K_12 tractable.
        let f = canonical_form(&complete(12));
        assert_eq!(f, canonical_form(&complete(12)));
    }
}
