//! Topological-minor search for multigraph patterns in multigraph hosts.
//!
//! Branch vertices are placed one at a time (injective, degree-filtered);
//! as soon as both ends of a pattern edge are placed, a path for it is
//! routed through unused vertices and edges, backtracking over paths.

use super::TmWitness;
use crate::budget::{Budget, Outcome};
use crate::error::{invalid, Result};
use crate::graph::{Graph, Multigraph, VertexSet};

/// `H ≤_tm G` for simple graphs, with the default budget.
pub fn is_topological_minor(h: &Graph, g: &Graph) -> Result<Option<TmWitness>> {
    let budget = Budget::from_env();
    is_topological_minor_with(&Multigraph::from_graph(h), &Multigraph::from_graph(g), &budget)?.into_result(&budget)
}

/// `H ≤_tm G` for multigraphs. Parallel pattern edges need distinct paths,
/// a pattern loop needs a cycle through its branch vertex.
pub fn is_topological_minor_with(h: &Multigraph, g: &Multigraph, budget: &Budget) -> Result<Outcome<TmWitness>> {
    if !h.is_connected() || !g.is_connected() {
        return Err(invalid("topological-minor search requires connected inputs"));
    }
    let (k, n) = (h.vertex_count(), g.vertex_count());
    if k > n || h.edge_count() > g.edge_count() {
        return Ok(Outcome::Absent);
    }
    let mut incident: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        incident[a].push((e, b));
        if a != b {
            incident[b].push((e, a));
        }
    }
    // Pattern vertices in BFS order from a maximum-degree vertex.
    let hdeg: Vec<usize> = (0..k).map(|a| h.degree(a)).collect();
    let gdeg: Vec<usize> = (0..n).map(|x| g.degree(x)).collect();
    let hadj = h.neighbor_sets();
    let mut order = Vec::with_capacity(k);
    let mut placed = vec![false; k];
    while order.len() < k {
        let s = (0..k).filter(|&a| !placed[a]).max_by_key(|&a| (hdeg[a], std::cmp::Reverse(a))).unwrap();
        placed[s] = true;
        let mut q = std::collections::VecDeque::from([s]);
        while let Some(a) = q.pop_front() {
            order.push(a);
            for b in hadj[a] {
                if !placed[b] {
                    placed[b] = true;
                    q.push_back(b);
                }
            }
        }
    }
    let mut pos = vec![0; k];
    for (i, &a) in order.iter().enumerate() {
        pos[a] = i;
    }
    // Edges to route once order[i] is placed: those whose later end is order[i].
    let mut route_at: Vec<Vec<usize>> = vec![Vec::new(); k];
    for (e, &(a, b)) in h.edges().iter().enumerate() {
        route_at[pos[a].max(pos[b])].push(e);
    }
    let mut s = Tm {
        h,
        hadj,
        hdeg,
        gdeg,
        incident,
        order,
        route_at,
        branch: vec![usize::MAX; k],
        vertex_used: vec![false; n],
        edge_used: vec![false; g.edge_count()],
        paths: vec![Vec::new(); h.edge_count()],
        budget,
    };
    Ok(match s.place(0) {
        None => Outcome::Exhausted,
        Some(false) => Outcome::Absent,
        Some(true) => {
            let w = TmWitness { branch: s.branch, paths: s.paths };
            debug_assert!(w.validate(h, g).is_ok());
            Outcome::Found(w)
        }
    })
}

struct Tm<'a> {
    h: &'a Multigraph,
    hadj: Vec<VertexSet>,
    hdeg: Vec<usize>,
    gdeg: Vec<usize>,
    incident: Vec<Vec<(usize, usize)>>,
    order: Vec<usize>,
    route_at: Vec<Vec<usize>>,
    branch: Vec<usize>,
    vertex_used: Vec<bool>,
    edge_used: Vec<bool>,
    paths: Vec<Vec<usize>>,
    budget: &'a Budget,
}

impl Tm<'_> {
    fn place(&mut self, i: usize) -> Option<bool> {
        if !self.budget.tick() {
            return None;
        }
        if i == self.order.len() {
            return Some(true);
        }
        let a = self.order[i];
        // Try hosts near the images of already placed pattern neighbours first.
        let anchor = self.order[..i].iter().copied().find(|&b| self.hadj[a].contains(b)).map(|b| self.branch[b]);
        let candidates: Vec<usize> = match anchor {
            Some(s) => {
                let dist = self.distances(s, usize::MAX);
                let mut c: Vec<usize> = (0..self.gdeg.len()).filter(|&x| dist[x] != usize::MAX).collect();
                c.sort_by_key(|&x| dist[x]);
                c
            }
            None => (0..self.gdeg.len()).collect(),
        };
        for x in candidates {
            if self.vertex_used[x] || self.gdeg[x] < self.hdeg[a] {
                continue;
            }
            self.vertex_used[x] = true;
            self.branch[a] = x;
            match self.route(i, 0) {
                Some(false) => {}
                other => return other,
            }
            self.branch[a] = usize::MAX;
            self.vertex_used[x] = false;
        }
        Some(false)
    }

    /// Routes the `j`-th pending edge of step `i`, then continues.
    fn route(&mut self, i: usize, j: usize) -> Option<bool> {
        if j == self.route_at[i].len() {
            return self.place(i + 1);
        }
        let e = self.route_at[i][j];
        let (a, b) = self.h.endpoints(e);
        let (s, t) = (self.branch[a], self.branch[b]);
        let dist = self.distances(t, s);
        let mut path = Vec::new();
        self.extend_path(i, j, e, s, t, &dist, &mut path)
    }

    /// BFS distances from `from` through vertices not yet used, with `also`
    /// allowed as an extra endpoint; `usize::MAX` marks unreachable.
    fn distances(&self, from: usize, also: usize) -> Vec<usize> {
        let n = self.gdeg.len();
        let mut dist = vec![usize::MAX; n];
        dist[from] = 0;
        let mut q = std::collections::VecDeque::from([from]);
        while let Some(x) = q.pop_front() {
            if x != from && (x == also || self.vertex_used[x]) {
                continue;
            }
            for &(he, y) in &self.incident[x] {
                if !self.edge_used[he] && dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    q.push_back(y);
                }
            }
        }
        dist
    }

    /// Depth-first extension of the path for pattern edge `e`, currently at `at`.
    #[allow(clippy::too_many_arguments)]
    fn extend_path(
        &mut self,
        i: usize,
        j: usize,
        e: usize,
        at: usize,
        t: usize,
        dist: &[usize],
        path: &mut Vec<usize>,
    ) -> Option<bool> {
        if !self.budget.tick() {
            return None;
        }
        // Steps in order of distance to the target; vertices that could not
        // reach it even before this path started are skipped.
        let mut steps: Vec<(usize, usize)> =
            self.incident[at].iter().copied().filter(|&(he, y)| !self.edge_used[he] && dist[y] != usize::MAX).collect();
        steps.sort_by_key(|&(he, y)| (dist[y], he));
        for (he, y) in steps {
            if self.edge_used[he] {
                continue;
            }
            if y == t {
                self.edge_used[he] = true;
                path.push(he);
                self.paths[e] = path.clone();
                let r = self.route(i, j + 1);
                path.pop();
                self.edge_used[he] = false;
                match r {
                    Some(false) => continue,
                    other => return other,
                }
            }
            if self.vertex_used[y] {
                continue;
            }
            self.vertex_used[y] = true;
            self.edge_used[he] = true;
            path.push(he);
            let r = self.extend_path(i, j, e, y, t, dist, path);
            path.pop();
            self.edge_used[he] = false;
            self.vertex_used[y] = false;
            match r {
                Some(false) => {}
                other => return other,
            }
        }
        Some(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, complete_bipartite, cycle, grid, path, petersen, wall};

    fn tm(h: &Graph, g: &Graph) -> bool {
        let w = is_topological_minor(h, g).unwrap();
        if let Some(w) = &w {
            w.validate(&Multigraph::from_graph(h), &Multigraph::from_graph(g)).unwrap();
        }
        w.is_some()
    }

    #[test]
    fn petersen_examples() {
        assert!(!tm(&complete(5), &petersen()));
        assert!(tm(&complete_bipartite(3, 3), &petersen()));
    }

    #[test]
    fn subdivisions() {
        assert!(tm(&complete(3), &cycle(7)));
        assert!(!tm(&complete(3), &path(7)));
        assert!(tm(&complete(4), &wall(3).unwrap()));
        assert!(!tm(&complete(4), &grid(2).unwrap()));
        assert!(tm(&complete(4), &grid(3).unwrap()));
    }

    #[test]
    fn multigraph_patterns() {
        // Triple edge needs three disjoint paths between two branch vertices.
        let theta = Multigraph::new(2, vec![(0, 1), (0, 1), (0, 1)]).unwrap();
        let b = Budget::unlimited();
        let host = Multigraph::from_graph(&complete_bipartite(2, 3));
        let out = is_topological_minor_with(&theta, &host, &b).unwrap();
        out.found().unwrap().validate(&theta, &host).unwrap();
        let c = Multigraph::from_graph(&cycle(5));
        assert!(!is_topological_minor_with(&theta, &c, &b).unwrap().is_found());
        // A loop is realised by any cycle.
        let lp = Multigraph::new(1, vec![(0, 0)]).unwrap();
        assert!(is_topological_minor_with(&lp, &c, &b).unwrap().is_found());
        let tree = Multigraph::from_graph(&path(4));
        assert!(!is_topological_minor_with(&lp, &tree, &b).unwrap().is_found());
        // Parallel host edges form a 2-cycle.
        let digon = Multigraph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert!(is_topological_minor_with(&lp, &digon, &b).unwrap().is_found());
    }
}
