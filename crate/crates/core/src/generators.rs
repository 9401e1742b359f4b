//! Named graph families and exhaustive small-graph enumeration.
//!
//! Grid-like families number vertex `(i, j)` as `i * k + j`.

use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::embedding::{dual, planar_embed};
use crate::error::{invalid, Error, Result};
use crate::graph::{canonical_form, canonical_labeling, Graph};

/// Largest order accepted by [`enumerate_connected_graphs`].
pub const ENUMERATION_CAP: usize = 7;

/// Tag for every named family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PatternName {
    Grid(usize),
    TriangulatedGrid(usize),
    Wall(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Cycle(usize),
    Path(usize),
    Star(usize),
    Wheel4,
    /// `K_{3,3}` plus `i` edges inside one side.
    K33Plus(usize),
    Petersen,
}

impl fmt::Display for PatternName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PatternName::Grid(k) => write!(f, "M_{k}"),
            PatternName::TriangulatedGrid(k) => write!(f, "Gamma_{k}"),
            PatternName::Wall(k) => write!(f, "Gamma*_{k}"),
            PatternName::Complete(n) => write!(f, "K_{n}"),
            PatternName::CompleteBipartite(p, q) => write!(f, "K_{{{p},{q}}}"),
            PatternName::Cycle(n) => write!(f, "C_{n}"),
            PatternName::Path(n) => write!(f, "P_{n}"),
            PatternName::Star(m) => write!(f, "K_{{1,{m}}}"),
            PatternName::Wheel4 => write!(f, "W_4"),
            PatternName::K33Plus(0) => write!(f, "K_{{3,3}}"),
            PatternName::K33Plus(i) => write!(f, "K^{i}_{{3,3}}"),
            PatternName::Petersen => write!(f, "Petersen"),
        }
    }
}

/// Builds the graph for a tag, validating its parameters.
pub fn named(p: PatternName) -> Result<Graph> {
    let need = |ok: bool, what: &str| if ok { Ok(()) } else { Err(invalid(format!("{p:?}: {what}"))) };
    match p {
        PatternName::Grid(k) => {
            need(k >= 1, "k >= 1")?;
            grid(k)
        }
        PatternName::TriangulatedGrid(k) => triangulated_grid(k),
        PatternName::Wall(k) => wall(k),
        PatternName::Complete(n) => {
            need(n >= 1, "n >= 1")?;
            cap(n)?;
            Ok(complete(n))
        }
        PatternName::CompleteBipartite(a, b) => {
            need(a >= 1 && b >= 1, "p, q >= 1")?;
            cap(a + b)?;
            Ok(complete_bipartite(a, b))
        }
        PatternName::Cycle(n) => {
            need(n >= 3, "n >= 3")?;
            cap(n)?;
            Ok(cycle(n))
        }
        PatternName::Path(n) => {
            need(n >= 1, "n >= 1")?;
            cap(n)?;
            Ok(path(n))
        }
        PatternName::Star(m) => {
            need(m >= 1, "m >= 1")?;
            cap(m + 1)?;
            Ok(star(m))
        }
        PatternName::Wheel4 => Ok(wheel4()),
        PatternName::K33Plus(i) => {
            need(i <= 3, "i in 0..=3")?;
            Ok(k33_plus(i))
        }
        PatternName::Petersen => Ok(petersen()),
    }
}

fn cap(n: usize) -> Result<()> {
    if n > crate::graph::MAX_VERTICES {
        Err(Error::Resource(format!("{n} vertices exceeds the vertex cap")))
    } else {
        Ok(())
    }
}

fn build(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    let mut g = Graph::empty(n).expect("family size within the vertex cap");
    for (u, v) in edges {
        g.add_edge(u, v).expect("family edges are valid");
    }
    g
}

/// The `k × k` grid `M_k`.
pub fn grid(k: usize) -> Result<Graph> {
    cap(k * k)?;
    let mut edges = Vec::new();
    for i in 0..k {
        for j in 0..k {
            if i + 1 < k {
                edges.push((i * k + j, (i + 1) * k + j));
            }
            if j + 1 < k {
                edges.push((i * k + j, i * k + j + 1));
            }
        }
    }
    Ok(build(k * k, edges))
}

/// The triangulated grid `Γ_k`: `M_k`, the diagonals `(i, j)–(i−1, j+1)`,
/// and the corner `(k−1, k−1)` joined to every outer vertex except its two
/// grid neighbours.
pub fn triangulated_grid(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(invalid("triangulated grid needs k >= 2"));
    }
    let mut g = grid(k)?;
    let id = |i: usize, j: usize| i * k + j;
    for i in 1..k {
        for j in 0..k - 1 {
            g.add_edge(id(i, j), id(i - 1, j + 1))?;
        }
    }
    let corner = id(k - 1, k - 1);
    for i in 0..k {
        for j in 0..k {
            let outer = i == 0 || i == k - 1 || j == 0 || j == k - 1;
            let skip = (i, j) == (k - 2, k - 1) || (i, j) == (k - 1, k - 2) || (i, j) == (k - 1, k - 1);
            if outer && !skip {
                g.add_edge(corner, id(i, j))?;
            }
        }
    }
    Ok(g)
}

/// The wall `Γ*_k`: dual of the unique embedding of `Γ_k`, dual vertices
/// numbered in face-traversal order.
pub fn wall(k: usize) -> Result<Graph> {
    let t = triangulated_grid(k)?;
    let pg = planar_embed(&t).ok_or_else(|| Error::Inconsistent("triangulated grid not planar".into()))?;
    let d = dual(&pg)?;
    let m = d.dual.multigraph();
    if !m.is_simple() {
        return Err(Error::Inconsistent("dual of a triangulation is not simple".into()));
    }
    Ok(m.simple_projection())
}

pub fn complete(n: usize) -> Graph {
    build(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `K_{p,q}` with the `p` side numbered first.
pub fn complete_bipartite(p: usize, q: usize) -> Graph {
    build(p + q, (0..p).flat_map(|a| (p..p + q).map(move |b| (a, b))))
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    build(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path(n: usize) -> Graph {
    build(n, (1..n).map(|i| (i - 1, i)))
}

/// `K_{1,m}` with centre 0.
pub fn star(m: usize) -> Graph {
    build(m + 1, (1..=m).map(|i| (0, i)))
}

/// `W_4`: rim `0..4`, hub 4.
pub fn wheel4() -> Graph {
    build(5, (0..4).map(|i| (i, (i + 1) % 4)).chain((0..4).map(|i| (i, 4))))
}

/// `K^i_{3,3}` with sides `a = {0,1,2}`, `b = {3,4,5}`; the added edges are
/// `a1a2`, `a2a3`, `a1a3`, in that order.
pub fn k33_plus(i: usize) -> Graph {
    assert!(i <= 3);
    let extra = [(0, 1), (1, 2), (0, 2)];
    let mut g = complete_bipartite(3, 3);
    for &(u, v) in &extra[..i] {
        g.add_edge(u, v).unwrap();
    }
    g
}

pub fn petersen() -> Graph {
    build(
        10,
        (0..5)
            .map(|i| (i, (i + 1) % 5))
            .chain((0..5).map(|i| (i, i + 5)))
            .chain((0..5).map(|i| (i + 5, (i + 2) % 5 + 5))),
    )
}

/// The patterns forbidden as contractions in class C with at most `n`
/// vertices, in checking order.
pub fn class_c_obstructions(n: usize) -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = (2..=n.saturating_sub(2))
        .map(|r| (format!("K_{{2,{r}}}"), complete_bipartite(2, r)))
        .collect();
    out.push(("K^3_{3,3}".into(), k33_plus(3)));
    out.push(("K_5".into(), complete(5)));
    out.push(("W_4".into(), wheel4()));
    out
}

/// The five contraction obstructions to planarity for connected graphs.
pub fn planarity_obstructions() -> Vec<(String, Graph)> {
    (0..=3)
        .map(|i| (PatternName::K33Plus(i).to_string(), k33_plus(i)))
        .chain(std::iter::once(("K_5".into(), complete(5))))
        .collect()
}

static ALL_GRAPHS: OnceLock<Vec<Vec<Graph>>> = OnceLock::new();

/// One representative per isomorphism class of all (not necessarily
/// connected) graphs on `n ≤ ENUMERATION_CAP` vertices, each relabelled
/// canonically, ordered by edge count and canonical form.
fn all_graphs(n: usize) -> &'static [Graph] {
    let levels = ALL_GRAPHS.get_or_init(|| {
        let mut levels: Vec<Vec<Graph>> = vec![vec![Graph::empty(0).unwrap()]];
        for k in 1..=ENUMERATION_CAP {
            let mut seen = HashSet::new();
            let mut next = Vec::new();
            for g in &levels[k - 1] {
                for mask in 0u32..(1 << (k - 1)) {
                    let mut h = Graph::empty(k).unwrap();
                    for (u, v) in g.edges() {
                        h.add_edge(u, v).unwrap();
                    }
                    for u in 0..k - 1 {
                        if mask >> u & 1 == 1 {
                            h.add_edge(u, k - 1).unwrap();
                        }
                    }
                    let form = canonical_form(&h);
                    if seen.insert(form.clone()) {
                        let lab = canonical_labeling(&h);
                        next.push((h.edge_count(), form, h.permuted(&lab)));
                    }
                }
            }
            next.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
            levels.push(next.into_iter().map(|(_, _, g)| g).collect());
        }
        levels
    });
    &levels[n]
}

/// One representative per isomorphism class of connected simple graphs on
/// `n` vertices.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > ENUMERATION_CAP {
        return Err(Error::Resource(format!(
            "enumeration is capped at {ENUMERATION_CAP} vertices, got {n}"
        )));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    Ok(all_graphs(n).iter().filter(|g| g.is_connected()).cloned().collect())
}

/// Connected graphs on `1..=n` vertices.
pub fn connected_graphs_up_to(n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for k in 1..=n {
        out.extend(enumerate_connected_graphs(k)?);
    }
    Ok(out)
}

/// Largest edge count accepted by [`connected_graphs_by_edges`].
pub const EDGE_ENUMERATION_CAP: usize = 12;

/// One representative per isomorphism class of connected graphs with at
/// most `max_edges` edges, `K₁` included, ordered by edge count and
/// canonical form. Each class of size `m + 1` comes from one of size `m`
/// by adding a pendant vertex or a chord.
pub fn connected_graphs_by_edges(max_edges: usize) -> Result<Vec<Graph>> {
    if max_edges > EDGE_ENUMERATION_CAP {
        return Err(Error::Resource(format!(
            "edge enumeration is capped at {EDGE_ENUMERATION_CAP} edges, got {max_edges}"
        )));
    }
    let mut level = vec![Graph::empty(1)?];
    let mut out = level.clone();
    for _ in 0..max_edges {
        let mut next = std::collections::BTreeMap::new();
        for g in &level {
            let n = g.vertex_count();
            let mut add = |h: Graph| {
                next.entry(canonical_form(&h)).or_insert(h);
            };
            for v in 0..n {
                let mut h = Graph::empty(n + 1)?;
                for (a, b) in g.edges() {
                    h.add_edge(a, b)?;
                }
                h.add_edge(v, n)?;
                add(h);
            }
            for u in 0..n {
                for v in u + 1..n {
                    if !g.has_edge(u, v) {
                        let mut h = g.clone();
                        h.add_edge(u, v)?;
                        add(h);
                    }
                }
            }
        }
        level = next.into_values().collect();
        out.extend(level.iter().cloned());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::is_triangulated;
    use crate::graph::is_isomorphic;

    #[test]
    fn grid_sizes() {
        assert_eq!(grid(2).unwrap(), cycle(4).permuted(&[0, 1, 3, 2]));
        let m6 = grid(6).unwrap();
        assert_eq!((m6.vertex_count(), m6.edge_count()), (36, 60));
        assert_eq!(grid(1).unwrap(), complete(1));
    }

    #[test]
    fn triangulated_grid_examples() {
        assert_eq!(triangulated_grid(2).unwrap(), complete(4));
        let g6 = triangulated_grid(6).unwrap();
        assert_eq!((g6.vertex_count(), g6.edge_count()), (36, 102));
        let g3 = triangulated_grid(3).unwrap();
        assert_eq!((g3.vertex_count(), g3.edge_count()), (9, 21));
        assert!(triangulated_grid(1).is_err());
    }

    #[test]
    fn triangulated_grids_are_triangulated() {
        for k in 2..=8 {
            let g = triangulated_grid(k).unwrap();
            assert_eq!(g.edge_count(), 3 * k * k - 6);
            assert!(is_triangulated(&g), "k = {k}");
            let m = grid(k).unwrap();
            assert!(m.edges().iter().all(|&(u, v)| g.has_edge(u, v)));
        }
    }

    #[test]
    fn walls() {
        assert!(is_isomorphic(&wall(2).unwrap(), &complete(4)).is_some());
        let w6 = wall(6).unwrap();
        assert_eq!((w6.vertex_count(), w6.edge_count()), (68, 102));
        let w3 = wall(3).unwrap();
        assert_eq!((w3.vertex_count(), w3.edge_count()), (14, 21));
        for k in 2..=6 {
            let w = wall(k).unwrap();
            assert_eq!(w.vertex_count(), 2 * k * k - 4);
            assert!((0..w.vertex_count()).all(|v| w.degree(v) == 3));
        }
    }

    #[test]
    fn walls_are_3_connected() {
        for k in 2..=6 {
            assert!(wall(k).unwrap().is_3_connected(), "k = {k}");
        }
    }

    #[test]
    fn named_examples() {
        let w = named(PatternName::Wheel4).unwrap();
        assert_eq!((w.vertex_count(), w.edge_count()), (5, 8));
        let k = named(PatternName::K33Plus(3)).unwrap();
        assert_eq!((k.vertex_count(), k.edge_count()), (6, 12));
        assert_eq!(named(PatternName::Star(3)).unwrap(), complete_bipartite(1, 3));
        assert!(named(PatternName::Cycle(2)).is_err());
        assert!(named(PatternName::K33Plus(4)).is_err());
        assert!(named(PatternName::Complete(0)).is_err());
    }

    /// Brute-force oracle: every edge subset on `n` labelled vertices,
    /// filtered by connectivity, deduplicated by isomorphism.
    fn count_by_edge_subsets(n: usize) -> usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let mut reps: Vec<Graph> = Vec::new();
        let mut by_key: std::collections::HashMap<(usize, Vec<usize>), Vec<usize>> = Default::default();
        for mask in 0u64..(1 << pairs.len()) {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            if !g.is_connected() {
                continue;
            }
            let key = (g.edge_count(), g.degree_sequence());
            let bucket = by_key.entry(key).or_default();
            if bucket.iter().all(|&i| is_isomorphic(&reps[i], &g).is_none()) {
                bucket.push(reps.len());
                reps.push(g);
            }
        }
        reps.len()
    }

    #[test]
    fn enumeration_matches_edge_subset_oracle() {
        for n in 1..=5 {
            assert_eq!(enumerate_connected_graphs(n).unwrap().len(), count_by_edge_subsets(n), "n = {n}");
        }
    }

    #[test]
    fn enumeration_small_counts() {
        assert_eq!(enumerate_connected_graphs(1).unwrap().len(), 1);
        assert_eq!(enumerate_connected_graphs(3).unwrap().len(), 2);
        assert_eq!(enumerate_connected_graphs(4).unwrap().len(), 6);
        assert!(matches!(enumerate_connected_graphs(8), Err(Error::Resource(_))));
    }

    #[test]
    fn enumeration_classes_are_distinct() {
        let gs = enumerate_connected_graphs(6).unwrap();
        let forms: HashSet<_> = gs.iter().map(canonical_form).collect();
        assert_eq!(forms.len(), gs.len());
        assert!(gs.iter().all(|g| g.is_connected() && g.vertex_count() == 6));
    }

    #[test]
    fn edge_enumeration_counts() {
        let gs = connected_graphs_by_edges(9).unwrap();
        let mut by_edges = [0usize; 10];
        for g in &gs {
            assert!(g.is_connected());
            by_edges[g.edge_count()] += 1;
        }
        assert_eq!(by_edges, [1, 1, 1, 3, 5, 12, 30, 79, 227, 710]);
        // Graphs with at most 6 edges have at most 7 vertices.
        let small: HashSet<_> = gs.iter().filter(|g| g.edge_count() <= 6).map(canonical_form).collect();
        let oracle: HashSet<_> =
            connected_graphs_up_to(7).unwrap().iter().filter(|g| g.edge_count() <= 6).map(canonical_form).collect();
        assert_eq!(small, oracle);
    }
}
