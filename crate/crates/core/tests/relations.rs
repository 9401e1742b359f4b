use std::collections::HashSet;

use proptest::prelude::*;

use contract_lab::class_c::{decompose, is_in_c_by_forbidden};
use contract_lab::generators::{connected_graphs_up_to, enumerate_connected_graphs};
use contract_lab::graph::{canonical_form, is_isomorphic};
use contract_lab::pipeline::sample_planar_graph;
use contract_lab::relations::{all_contractions, is_contraction, is_minor, is_topological_minor};
use contract_lab::Graph;

#[test]
fn contraction_and_topological_minor_imply_minor() {
    let gs = connected_graphs_up_to(6).unwrap();
    for g in &gs {
        let closure = all_contractions(g).unwrap();
        for h in gs.iter().filter(|h| h.vertex_count() <= g.vertex_count()) {
            let c = is_contraction(h, g).unwrap();
            assert_eq!(c.is_some(), closure.contains(&canonical_form(h)), "{:?} in {:?}", h.edges(), g.edges());
            if let Some(w) = &c {
                w.validate(h, g).unwrap();
            }
            let m = is_minor(h, g).unwrap();
            if let Some(w) = &m {
                w.validate(h, g).unwrap();
            }
            let tm = is_topological_minor(h, g).unwrap().is_some();
            if c.is_some() || tm {
                assert!(m.is_some(), "{:?} in {:?}", h.edges(), g.edges());
            }
        }
    }
}

#[test]
fn contraction_is_transitive() {
    // Every contraction of a contraction of G is already in G's closure.
    for g in connected_graphs_up_to(6).unwrap() {
        let closure = all_contractions(&g).unwrap();
        for h in connected_graphs_up_to(g.vertex_count()).unwrap() {
            if closure.contains(&canonical_form(&h)) {
                assert!(all_contractions(&h).unwrap().is_subset(&closure));
            }
        }
    }
}

#[test]
fn class_c_is_closed_under_contraction() {
    for g in connected_graphs_up_to(6).unwrap() {
        if !decompose(&g).unwrap().accepted() {
            continue;
        }
        for (u, v) in g.edges() {
            let (h, _) = g.contract_edge(u, v).unwrap();
            assert!(decompose(&h).unwrap().accepted(), "{:?} / {u}{v}", g.edges());
            assert!(is_in_c_by_forbidden(&h).unwrap());
        }
    }
}

fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    fn perms(k: usize, p: &mut Vec<usize>, used: &mut Vec<bool>, g: &Graph, h: &Graph) -> bool {
        let n = used.len();
        if k == n {
            return g.edges().iter().all(|&(u, v)| h.has_edge(p[u], p[v]));
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                p.push(x);
                if perms(k + 1, p, used, g, h) {
                    return true;
                }
                p.pop();
                used[x] = false;
            }
        }
        false
    }
    g.vertex_count() == h.vertex_count()
        && g.edge_count() == h.edge_count()
        && perms(0, &mut Vec::new(), &mut vec![false; g.vertex_count()], g, h)
}

fn graph_from_bits(n: usize, bits: u32) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    let mut i = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits >> i & 1 == 1 {
                g.add_edge(u, v).unwrap();
            }
            i += 1;
        }
    }
    g
}

proptest! {
    #[test]
    fn canonical_form_decides_isomorphism(n in 1usize..=6, a in any::<u32>(), b in any::<u32>()) {
        let (g, h) = (graph_from_bits(n, a), graph_from_bits(n, b));
        let same = brute_isomorphic(&g, &h);
        prop_assert_eq!(canonical_form(&g) == canonical_form(&h), same);
        prop_assert_eq!(is_isomorphic(&g, &h).is_some(), same);
    }

    #[test]
    fn canonical_form_ignores_labels(n in 1usize..=6, a in any::<u32>(), seed in any::<u64>()) {
        let g = graph_from_bits(n, a);
        let mut perm: Vec<usize> = (0..n).collect();
        let mut x = seed;
        for i in (1..n).rev() {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1);
            perm.swap(i, (x >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(canonical_form(&g), canonical_form(&g.permuted(&perm)));
    }

    #[test]
    fn contracting_a_spanning_tree_leaves_one_vertex(n in 1usize..=40, seed in any::<u64>()) {
        let mut g = sample_planar_graph(n, seed).unwrap();
        // Always contract an edge of a BFS tree from vertex 0.
        while g.vertex_count() > 1 {
            let v = g.neighbors(0).first().unwrap();
            g = g.contract_edge(0, v).unwrap().0;
            prop_assert!(g.is_connected());
        }
        prop_assert_eq!(g.edge_count(), 0);
    }
}

#[test]
fn seven_vertex_classes_are_distinct() {
    let gs = enumerate_connected_graphs(7).unwrap();
    let forms: HashSet<_> = gs.iter().map(canonical_form).collect();
    assert_eq!(forms.len(), gs.len());
    assert_eq!(gs.len(), 853);
}
