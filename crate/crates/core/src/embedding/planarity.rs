//! Planarity testing and embedding by path addition per biconnected block.

use std::collections::{HashMap, VecDeque};

use super::PlaneMultigraph;
use crate::graph::{Graph, Multigraph, VertexSet};

/// A planar rotation system for `g`, or `None` when `g` is not planar.
///
/// Darts are those of [`Multigraph::from_graph`]. Each biconnected block is
/// embedded on its own and block rotations are concatenated at cut vertices.
pub fn planar_embed(g: &Graph) -> Option<PlaneMultigraph> {
    let n = g.vertex_count();
    let edges = g.edges();
    // Quick reject by edge count.
    if n >= 3 && edges.len() > 3 * n - 6 {
        return None;
    }
    let index: HashMap<(usize, usize), usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let dart = |v: usize, w: usize| -> usize {
        let e = index[&(v.min(w), v.max(w))];
        if v < w {
            2 * e
        } else {
            2 * e + 1
        }
    };
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); n];
    for block in biconnected_blocks(g) {
        if block.len() == 1 {
            let (u, v) = block[0];
            rotation[u].push(dart(u, v));
            rotation[v].push(dart(v, u));
            continue;
        }
        let mut verts = VertexSet::EMPTY;
        for &(u, v) in &block {
            verts.insert(u);
            verts.insert(v);
        }
        let local: Vec<usize> = verts.to_vec();
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in local.iter().enumerate() {
            pos[v] = i;
        }
        let mut b = Graph::empty(local.len()).expect("block within cap");
        for &(u, v) in &block {
            b.add_edge(pos[u], pos[v]).expect("block edges are simple");
        }
        let faces = embed_biconnected(&b)?;
        for (i, order) in rotation_from_faces(&b, &faces).into_iter().enumerate() {
            let v = local[i];
            rotation[v].extend(order.into_iter().map(|w| dart(v, local[w])));
        }
    }
    let pg = PlaneMultigraph::new(Multigraph::from_graph(g), rotation).expect("rotation covers every dart");
    debug_assert!(pg.is_spherical());
    Some(pg)
}

/// Edge lists of the biconnected blocks (bridges are single-edge blocks).
fn biconnected_blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    struct State<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        blocks: Vec<Vec<(usize, usize)>>,
    }
    fn dfs(s: &mut State, v: usize, parent: usize) {
        s.disc[v] = s.time;
        s.low[v] = s.time;
        s.time += 1;
        for w in s.g.neighbors(v) {
            if s.disc[w] == usize::MAX {
                s.stack.push((v.min(w), v.max(w)));
                dfs(s, w, v);
                s.low[v] = s.low[v].min(s.low[w]);
                if s.low[w] >= s.disc[v] {
                    let key = (v.min(w), v.max(w));
                    let mut block = Vec::new();
                    while let Some(e) = s.stack.pop() {
                        block.push(e);
                        if e == key {
                            break;
                        }
                    }
                    s.blocks.push(block);
                }
            } else if w != parent && s.disc[w] < s.disc[v] {
                s.stack.push((v.min(w), v.max(w)));
                s.low[v] = s.low[v].min(s.disc[w]);
            }
        }
    }
    let n = g.vertex_count();
    let mut s = State { g, disc: vec![usize::MAX; n], low: vec![0; n], time: 0, stack: Vec::new(), blocks: Vec::new() };
    for v in 0..n {
        if s.disc[v] == usize::MAX {
            dfs(&mut s, v, usize::MAX);
        }
    }
    s.blocks
}

/// Oriented facial cycles of a 2-connected graph with at least three
/// vertices, or `None` if it is not planar.
fn embed_biconnected(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = g.vertex_count();
    let start = 0;
    let first = g.neighbors(start).first()?;
    // A path first -> .. -> start that avoids the edge {start, first}.
    let mut parent = vec![usize::MAX; n];
    parent[first] = first;
    let mut queue = VecDeque::from([first]);
    while let Some(v) = queue.pop_front() {
        if v == start {
            break;
        }
        for w in g.neighbors(v) {
            if v == first && w == start {
                continue;
            }
            if parent[w] == usize::MAX {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    if parent[start] == usize::MAX {
        return None;
    }
    let mut cycle = vec![start];
    let mut v = parent[start];
    while v != first {
        cycle.push(v);
        v = parent[v];
    }
    cycle.push(first);
    let mut embedded = VertexSet::EMPTY;
    let mut emb_adj = vec![VertexSet::EMPTY; n];
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        embedded.insert(a);
        emb_adj[a].insert(b);
        emb_adj[b].insert(a);
    }
    let mut faces = vec![cycle.clone(), cycle.iter().rev().copied().collect::<Vec<_>>()];

    loop {
        let fragments = fragments(g, embedded, &emb_adj);
        if fragments.is_empty() {
            break;
        }
        let face_sets: Vec<VertexSet> = faces.iter().map(|f| f.iter().copied().collect()).collect();
        let mut chosen: Option<(usize, usize)> = None;
        for (i, frag) in fragments.iter().enumerate() {
            let feasible: Vec<usize> = (0..faces.len()).filter(|&f| frag.attach.is_subset(face_sets[f])).collect();
            match feasible.len() {
                0 => return None,
                1 => {
                    chosen = Some((i, feasible[0]));
                    break;
                }
                _ => {
                    if chosen.is_none() {
                        chosen = Some((i, feasible[0]));
                    }
                }
            }
        }
        let (fi, face) = chosen.expect("some fragment");
        let path = fragment_path(g, &fragments[fi]);
        for w in path.windows(2) {
            emb_adj[w[0]].insert(w[1]);
            emb_adj[w[1]].insert(w[0]);
        }
        for &v in &path {
            embedded.insert(v);
        }
        let (f1, f2) = split_face(&faces[face], &path);
        faces[face] = f1;
        faces.push(f2);
    }
    Some(faces)
}

struct Fragment {
    attach: VertexSet,
    /// Interior vertices; empty for a chord.
    interior: VertexSet,
}

fn fragments(g: &Graph, embedded: VertexSet, emb_adj: &[VertexSet]) -> Vec<Fragment> {
    let mut out = Vec::new();
    for u in embedded {
        for v in g.neighbors(u).intersection(embedded).difference(emb_adj[u]) {
            if u < v {
                let mut attach = VertexSet::singleton(u);
                attach.insert(v);
                out.push(Fragment { attach, interior: VertexSet::EMPTY });
            }
        }
    }
    let rest = g.vertices().difference(embedded);
    for comp in g.components_within(rest) {
        let attach = g.neighborhood(comp).intersection(embedded);
        out.push(Fragment { attach, interior: comp });
    }
    out
}

/// A path between two attachments of the fragment through its interior.
fn fragment_path(g: &Graph, frag: &Fragment) -> Vec<usize> {
    let mut att = frag.attach.iter();
    let a = att.next().expect("fragment has attachments");
    let b = att.next().expect("2-connected fragments have two attachments");
    if frag.interior.is_empty() {
        return vec![a, b];
    }
    let n = g.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for s in g.neighbors(a).intersection(frag.interior) {
        parent[s] = s;
        queue.push_back(s);
    }
    let mut end = usize::MAX;
    while let Some(v) = queue.pop_front() {
        if g.has_edge(v, b) {
            end = v;
            break;
        }
        for w in g.neighbors(v).intersection(frag.interior) {
            if parent[w] == usize::MAX {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    assert!(end != usize::MAX, "fragment interior is connected to every attachment");
    let mut mid = vec![end];
    let mut v = end;
    while parent[v] != v {
        v = parent[v];
        mid.push(v);
    }
    mid.reverse();
    let mut path = vec![a];
    path.extend(mid);
    path.push(b);
    path
}

/// Splits the facial cycle `face` by `path`, whose ends lie on it.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let k = face.len();
    let a = path[0];
    let b = *path.last().unwrap();
    let ia = face.iter().position(|&x| x == a).expect("attachment on face");
    let ib = face.iter().position(|&x| x == b).expect("attachment on face");
    let walk = |from: usize, to: usize| -> Vec<usize> {
        let mut out = vec![face[from]];
        let mut i = from;
        while i != to {
            i = (i + 1) % k;
            out.push(face[i]);
        }
        out
    };
    let interior = &path[1..path.len() - 1];
    // a .. b then back along the path.
    let mut f1 = walk(ia, ib);
    f1.extend(interior.iter().rev());
    // b .. a then forward along the path.
    let mut f2 = walk(ib, ia);
    f2.extend(interior.iter());
    (f1, f2)
}

/// Cyclic neighbour orders: for consecutive `u, v, w` on an oriented face,
/// the successor of `v -> u` in the rotation at `v` is `v -> w`.
fn rotation_from_faces(g: &Graph, faces: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut next: HashMap<(usize, usize), usize> = HashMap::new();
    for f in faces {
        let k = f.len();
        for i in 0..k {
            let (u, v, w) = (f[(i + k - 1) % k], f[i], f[(i + 1) % k]);
            next.insert((v, u), w);
        }
    }
    (0..n)
        .map(|v| {
            let Some(u0) = g.neighbors(v).first() else {
                return Vec::new();
            };
            let mut order = vec![u0];
            let mut u = next[&(v, u0)];
            while u != u0 {
                order.push(u);
                u = next[&(v, u)];
            }
            debug_assert_eq!(order.len(), g.degree(v));
            order
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{
        complete, complete_bipartite, grid, k33_plus, path, petersen, star, triangulated_grid, wheel4,
    };

    #[test]
    fn planar_families_embed() {
        for g in [
            complete(1),
            complete(2),
            complete(4),
            path(5),
            star(4),
            wheel4(),
            complete_bipartite(2, 5),
            grid(5).unwrap(),
            triangulated_grid(7).unwrap(),
        ] {
            let pg = planar_embed(&g).unwrap_or_else(|| panic!("{g:?} should be planar"));
            assert!(pg.is_spherical());
        }
    }

    #[test]
    fn kuratowski_graphs_rejected() {
        assert!(planar_embed(&complete(5)).is_none());
        assert!(planar_embed(&complete_bipartite(3, 3)).is_none());
        assert!(planar_embed(&petersen()).is_none());
        for i in 0..=3 {
            assert!(planar_embed(&k33_plus(i)).is_none());
        }
    }

    #[test]
    fn bowtie_and_disconnected_graphs_embed() {
        let bowtie = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let pg = planar_embed(&bowtie).unwrap();
        assert_eq!(pg.face_count(), 3);
        let two = complete(3).disjoint_union(&complete(4)).unwrap();
        let pg = planar_embed(&two).unwrap();
        assert!(pg.is_spherical());
        assert_eq!(pg.face_count(), 6);
    }

    #[test]
    fn k5_minus_edge_is_planar() {
        let g = complete(5).without_edge(0, 1).unwrap();
        assert!(planar_embed(&g).unwrap().is_spherical());
    }
}
