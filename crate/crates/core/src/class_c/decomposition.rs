use serde::Serialize;

use crate::embedding::is_triangulated;
use crate::error::{invalid, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PieceKind {
    K1,
    K2,
    Triangulated,
    /// 2-connected, not triangulated, and without an adjacent 2-cut.
    Fail,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Cut {
    Vertex(usize),
    Edge(usize, usize),
}

/// One node of a [`DecompositionTree`]; vertices are ids of the input graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Piece {
    pub vertices: Vec<usize>,
    /// Cut this piece was split along, for inner nodes.
    pub cut: Option<Cut>,
    pub children: Vec<usize>,
    /// Verdict, for leaves.
    pub kind: Option<PieceKind>,
}

/// Pieces indexed from the root at 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionTree {
    pub pieces: Vec<Piece>,
}

impl DecompositionTree {
    pub fn accepted(&self) -> bool {
        self.leaves().all(|p| p.kind != Some(PieceKind::Fail))
    }

    pub fn leaves(&self) -> impl Iterator<Item = &Piece> {
        self.pieces.iter().filter(|p| p.children.is_empty())
    }

    /// Checks that every split is a genuine cut of its parent piece, that
    /// children overlap only in the cut and cover the parent, and that the
    /// leaf verdicts are right.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let set_of = |p: &Piece| -> VertexSet { p.vertices.iter().copied().collect() };
        if self.pieces.is_empty() || set_of(&self.pieces[0]) != g.vertices() {
            return Err(invalid("root piece is not the whole graph"));
        }
        for p in &self.pieces {
            let s = set_of(p);
            if p.children.is_empty() {
                let (h, _) = g.induced(s);
                let expect = leaf_kind(&h);
                if p.kind != Some(expect) {
                    return Err(invalid(format!("leaf {:?} has the wrong verdict", p.vertices)));
                }
                continue;
            }
            let cut: VertexSet = match p.cut {
                Some(Cut::Vertex(v)) => VertexSet::singleton(v),
                Some(Cut::Edge(x, y)) => {
                    if !g.has_edge(x, y) {
                        return Err(invalid("edge cut is not an edge"));
                    }
                    [x, y].into_iter().collect()
                }
                None => return Err(invalid("inner piece without a cut")),
            };
            if !cut.is_subset(s) || g.is_connected_set(s.difference(cut)) {
                return Err(invalid(format!("{:?} does not separate {:?}", p.cut, p.vertices)));
            }
            let mut union = VertexSet::EMPTY;
            for (i, &c) in p.children.iter().enumerate() {
                let cs = set_of(&self.pieces[c]);
                if !cut.is_subset(cs) {
                    return Err(invalid("child misses the cut"));
                }
                for &d in &p.children[i + 1..] {
                    if cs.intersection(set_of(&self.pieces[d])) != cut {
                        return Err(invalid("children overlap outside the cut"));
                    }
                }
                union = union.union(cs);
            }
            if union != s {
                return Err(invalid("children do not cover their parent"));
            }
        }
        Ok(())
    }
}

fn leaf_kind(h: &Graph) -> PieceKind {
    match h.vertex_count() {
        1 => PieceKind::K1,
        2 => PieceKind::K2,
        _ if is_triangulated(h) => PieceKind::Triangulated,
        _ => PieceKind::Fail,
    }
}

/// Splits `g` at cut vertices first, then at the lexicographically least
/// adjacent 2-cut, until every piece is `K₁`, `K₂`, triangulated, or stuck.
pub fn decompose(g: &Graph) -> Result<DecompositionTree> {
    if !g.is_connected() || g.vertex_count() == 0 {
        return Err(invalid("G must be connected and non-empty"));
    }
    let mut tree = DecompositionTree { pieces: Vec::new() };
    split(g, g.vertices(), &mut tree)?;
    Ok(tree)
}

/// The decomposition tree when every leaf is accepted.
pub fn is_in_c_by_decomposition(g: &Graph) -> Result<Option<DecompositionTree>> {
    let tree = decompose(g)?;
    Ok(tree.accepted().then_some(tree))
}

fn split(g: &Graph, set: VertexSet, tree: &mut DecompositionTree) -> Result<usize> {
    let id = tree.pieces.len();
    tree.pieces.push(Piece { vertices: set.to_vec(), cut: None, children: Vec::new(), kind: None });
    let (h, old) = g.induced(set);
    if h.vertex_count() <= 2 {
        tree.pieces[id].kind = Some(leaf_kind(&h));
        return Ok(id);
    }
    let (cut, cut_local) = if let Some(v) = h.cut_vertices().first() {
        (Cut::Vertex(old[v]), VertexSet::singleton(v))
    } else {
        let adjacent = h.cut_pairs()?.into_iter().filter(|p| p.adjacent).min();
        match adjacent {
            Some(p) => (Cut::Edge(old[p.x], old[p.y]), [p.x, p.y].into_iter().collect()),
            None => {
                tree.pieces[id].kind = Some(leaf_kind(&h));
                return Ok(id);
            }
        }
    };
    tree.pieces[id].cut = Some(cut);
    let mut children = Vec::new();
    for comp in h.components_within(h.vertices().difference(cut_local)) {
        let child: VertexSet = comp.union(cut_local).iter().map(|v| old[v]).collect();
        children.push(split(g, child, tree)?);
    }
    tree.pieces[id].children = children;
    Ok(id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path, triangulated_grid, wheel4};

    fn member(g: &Graph) -> bool {
        let tree = decompose(g).unwrap();
        tree.validate(g).unwrap();
        tree.accepted()
    }

    #[test]
    fn examples() {
        // Two K_4's sharing the edge {0, 1}.
        let mut g = complete(4).disjoint_union(&complete(2)).unwrap();
        for (u, v) in [(4, 0), (4, 1), (5, 0), (5, 1), (4, 5)] {
            g.add_edge(u, v).unwrap();
        }
        assert!(member(&g));
        assert!(!member(&cycle(4)));
        let bowtie = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert!(member(&bowtie));
        let tree = decompose(&bowtie).unwrap();
        assert_eq!(tree.pieces[0].cut, Some(Cut::Vertex(2)));
    }

    #[test]
    fn small_members() {
        assert!(member(&complete(1)));
        assert!(member(&complete(2)));
        assert!(member(&path(5)));
        assert!(member(&complete(3)));
        assert!(member(&triangulated_grid(4).unwrap()));
        assert!(!member(&wheel4()));
        assert!(!member(&cycle(5)));
    }

    #[test]
    fn disconnected_rejected() {
        assert!(decompose(&Graph::empty(2).unwrap()).is_err());
    }
}
