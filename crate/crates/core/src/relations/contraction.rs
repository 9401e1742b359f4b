//! Branch-set search for contractions and minors.
//!
//! Vertices of `G` are labelled in BFS order with vertices of `H` (plus a
//! "deleted" label for minors). After each assignment the remaining
//! domains are checked for connectivity of every branch set, surjectivity,
//! and realisability of every edge of `H`.

use std::collections::VecDeque;

use super::{require_connected, MinorWitness, WitnessPartition};
use crate::budget::{Budget, Outcome};
use crate::error::{Error, Result};
use crate::graph::{is_isomorphic, orbit_representatives, Graph, VertexSet};

/// `H ≤_c G` with the default budget. Budget exhaustion is an error.
pub fn is_contraction(h: &Graph, g: &Graph) -> Result<Option<WitnessPartition>> {
    let budget = Budget::from_env();
    is_contraction_with(h, g, &budget)?.into_result(&budget)
}

pub fn is_contraction_with(h: &Graph, g: &Graph, budget: &Budget) -> Result<Outcome<WitnessPartition>> {
    require_connected(h, "H")?;
    require_connected(g, "G")?;
    let (k, n) = (h.vertex_count(), g.vertex_count());
    if k > n || h.edge_count() > g.edge_count() || k == 0 {
        return Ok(Outcome::Absent);
    }
    if k == n {
        return Ok(match is_isomorphic(g, h) {
            Some(phi) => Outcome::Found(WitnessPartition { labels: phi }),
            None => Outcome::Absent,
        });
    }
    if k == 1 {
        return Ok(Outcome::Found(WitnessPartition { labels: vec![0; n] }));
    }
    let out = Csp::new(h, g, false, budget).run();
    Ok(out.map(|labels| {
        let w = WitnessPartition { labels };
        debug_assert!(w.validate(h, g).is_ok());
        w
    }))
}

/// `H ≤_m G` with the default budget. Budget exhaustion is an error.
pub fn is_minor(h: &Graph, g: &Graph) -> Result<Option<MinorWitness>> {
    let budget = Budget::from_env();
    is_minor_with(h, g, &budget)?.into_result(&budget)
}

pub fn is_minor_with(h: &Graph, g: &Graph, budget: &Budget) -> Result<Outcome<MinorWitness>> {
    require_connected(h, "H")?;
    require_connected(g, "G")?;
    let (k, n) = (h.vertex_count(), g.vertex_count());
    if k > n || h.edge_count() > g.edge_count() || k == 0 {
        return Ok(Outcome::Absent);
    }
    if k >= crate::graph::MAX_VERTICES {
        return Err(Error::Resource("minor search needs a spare label bit".into()));
    }
    let out = Csp::new(h, g, true, budget).run();
    Ok(out.map(|labels| {
        let w = MinorWitness { labels: labels.into_iter().map(|l| (l < k).then_some(l)).collect() };
        debug_assert!(w.validate(h, g).is_ok());
        w
    }))
}

struct Csp<'a> {
    h: &'a Graph,
    g: &'a Graph,
    k: usize,
    minor: bool,
    order: Vec<usize>,
    /// Closed neighbourhoods in `H`, as label masks.
    closed: Vec<u128>,
    root_labels: u128,
    label: Vec<usize>,
    budget: &'a Budget,
}

const UNSET: usize = usize::MAX;

impl<'a> Csp<'a> {
    fn new(h: &'a Graph, g: &'a Graph, minor: bool, budget: &'a Budget) -> Self {
        let k = h.vertex_count();
        let n = g.vertex_count();
        let root = (0..n).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).expect("non-empty");
        let mut order = Vec::with_capacity(n);
        let mut seen = VertexSet::singleton(root);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for w in g.neighbors(v).difference(seen) {
                seen.insert(w);
                queue.push_back(w);
            }
        }
        let closed = (0..k).map(|i| h.neighbors(i).0 | 1u128 << i).collect();
        let mut root_labels = 0u128;
        for r in orbit_representatives(h) {
            root_labels |= 1u128 << r;
        }
        if minor {
            // The root may still be deleted.
            root_labels |= 1u128 << k;
        }
        Csp { h, g, k, minor, order, closed, root_labels, label: vec![UNSET; n], budget }
    }

    fn all_labels(&self) -> u128 {
        let bits = self.k + self.minor as usize;
        if bits >= 128 {
            u128::MAX
        } else {
            (1u128 << bits) - 1
        }
    }

    fn run(mut self) -> Outcome<Vec<usize>> {
        let n = self.g.vertex_count();
        let mut domains = vec![self.all_labels(); n];
        domains[self.order[0]] &= self.root_labels;
        match self.search(0, domains) {
            None => Outcome::Exhausted,
            Some(true) => Outcome::Found(self.label),
            Some(false) => Outcome::Absent,
        }
    }

    /// `None` when the budget ran out.
    fn search(&mut self, depth: usize, domains: Vec<u128>) -> Option<bool> {
        if !self.budget.tick() {
            return None;
        }
        if depth == self.order.len() {
            return Some(true);
        }
        let v = self.order[depth];
        for l in self.value_order(v, domains[v]) {
            let mut next = domains.clone();
            next[v] = 1u128 << l;
            self.label[v] = l;
            if self.propagate(v, l, &mut next) && self.feasible(&next) {
                match self.search(depth + 1, next) {
                    Some(true) => return Some(true),
                    None => {
                        self.label[v] = UNSET;
                        return None;
                    }
                    Some(false) => {}
                }
            }
            self.label[v] = UNSET;
        }
        Some(false)
    }

    /// Labels already on neighbours, then unused labels, then the rest.
    fn value_order(&self, v: usize, dom: u128) -> Vec<usize> {
        let mut near = 0u128;
        for w in self.g.neighbors(v) {
            if self.label[w] != UNSET {
                near |= 1u128 << self.label[w];
            }
        }
        let mut used = 0u128;
        for &l in &self.label {
            if l != UNSET {
                used |= 1u128 << l;
            }
        }
        let mut out = Vec::new();
        for mask in [dom & near, dom & !near & !used, dom & !near & used] {
            let mut m = mask;
            while m != 0 {
                let l = m.trailing_zeros() as usize;
                m &= m - 1;
                // Deleting is tried last.
                if !(self.minor && l == self.k) {
                    out.push(l);
                }
            }
        }
        if self.minor && dom >> self.k & 1 == 1 {
            out.push(self.k);
        }
        out
    }

    fn propagate(&self, v: usize, l: usize, domains: &mut [u128]) -> bool {
        if self.minor {
            return true;
        }
        for w in self.g.neighbors(v) {
            if self.label[w] == UNSET {
                domains[w] &= self.closed[l];
                if domains[w] == 0 {
                    return false;
                }
            }
        }
        true
    }

    fn feasible(&self, domains: &[u128]) -> bool {
        let k = self.k;
        let mut assigned = vec![VertexSet::EMPTY; k];
        let mut possible = vec![VertexSet::EMPTY; k];
        for v in 0..self.g.vertex_count() {
            let l = self.label[v];
            if l != UNSET {
                if l < k {
                    assigned[l].insert(v);
                }
            } else {
                let mut m = domains[v] & ((1u128 << k) - 1);
                while m != 0 {
                    let i = m.trailing_zeros() as usize;
                    m &= m - 1;
                    possible[i].insert(v);
                }
            }
        }
        let mut reach = vec![VertexSet::EMPTY; k];
        for i in 0..k {
            let a = assigned[i];
            let span = a.union(possible[i]);
            match a.first() {
                None => {
                    if span.is_empty() {
                        return false;
                    }
                    reach[i] = span;
                }
                Some(r) => {
                    let comp = self.g.reach(r, span);
                    if !a.is_subset(comp) {
                        return false;
                    }
                    reach[i] = comp;
                }
            }
        }
        // Union of neighbour sets, overlapping the region itself.
        let touch: Vec<VertexSet> = reach
            .iter()
            .map(|r| r.iter().fold(VertexSet::EMPTY, |acc, v| acc.union(self.g.neighbors(v))))
            .collect();
        for (a, b) in self.h.edges() {
            if touch[a].intersection(reach[b]).is_empty() {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{
        complete, complete_bipartite, cycle, grid, path, petersen, star, triangulated_grid, wheel4,
    };

    fn contracts(h: &Graph, g: &Graph) -> bool {
        let w = is_contraction(h, g).unwrap();
        if let Some(w) = &w {
            w.validate(h, g).unwrap();
        }
        w.is_some()
    }

    fn minor(h: &Graph, g: &Graph) -> bool {
        let w = is_minor(h, g).unwrap();
        if let Some(w) = &w {
            w.validate(h, g).unwrap();
        }
        w.is_some()
    }

    #[test]
    fn paths_and_cycles() {
        assert!(contracts(&path(3), &path(4)));
        assert!(!contracts(&path(3), &cycle(5)));
        assert!(contracts(&complete(3), &cycle(5)));
        assert!(!contracts(&path(3), &complete(4)));
    }

    #[test]
    fn w4_is_a_contraction_of_k33() {
        assert!(contracts(&wheel4(), &complete_bipartite(3, 3)));
    }

    #[test]
    fn k4_from_gamma3() {
        assert!(contracts(&complete(4), &triangulated_grid(3).unwrap()));
        assert!(contracts(&star(3), &triangulated_grid(3).unwrap()));
    }

    #[test]
    fn minors() {
        assert!(minor(&complete(4), &grid(3).unwrap()));
        assert!(!minor(&complete(4), &grid(2).unwrap()));
        assert!(minor(&complete(5), &petersen()));
        assert!(minor(&cycle(4), &cycle(6)));
        assert!(!minor(&cycle(4), &path(6)));
    }

    #[test]
    fn disconnected_inputs_rejected() {
        let two = complete(2).disjoint_union(&complete(2)).unwrap();
        assert!(is_contraction(&complete(2), &two).is_err());
        assert!(is_minor(&two, &complete(4)).is_err());
    }

    #[test]
    fn budget_exhaustion_is_distinct() {
        let g = triangulated_grid(4).unwrap();
        let out = is_contraction_with(&complete_bipartite(2, 4), &g, &Budget::new(5)).unwrap();
        assert!(out.is_exhausted());
    }
}
