//! GraphFile and EmbeddingFile text formats.
//!
//! ```text
//! # comment
//! p <n> <m>
//! e <u> <v>        (m lines, u < v)
//! r <v> <ids...>   (embedding files only, one per vertex)
//! ```
//!
//! Embedding files describe multigraphs, so their edge lines may repeat a
//! pair or use `u = v`; a loop's id appears twice in its rotation.

use std::fmt::{self, Write as _};

use contract_lab::embedding::PlaneMultigraph;
use contract_lab::graph::MAX_VERTICES;
use contract_lab::{Graph, Multigraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, message: message.into() })
}

/// Non-blank, non-comment lines with 1-based line numbers.
fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.trim();
        (!l.is_empty() && !l.starts_with('#')).then(|| (i + 1, l.split_whitespace().collect()))
    })
}

fn number(line: usize, tok: &str) -> Result<usize, ParseError> {
    tok.parse().map_err(|_| ParseError { line, message: format!("expected a non-negative integer, got {tok:?}") })
}

struct Header {
    n: usize,
    edges: Vec<(usize, usize)>,
    last_line: usize,
}

fn parse_edges<'a>(
    recs: &mut impl Iterator<Item = (usize, Vec<&'a str>)>,
    multigraph: bool,
) -> Result<Header, ParseError> {
    let Some((line, toks)) = recs.next() else {
        return err(1, "missing header \"p <n> <m>\"");
    };
    if toks.len() != 3 || toks[0] != "p" {
        return err(line, "expected header \"p <n> <m>\"");
    }
    let (n, m) = (number(line, toks[1])?, number(line, toks[2])?);
    if n > MAX_VERTICES {
        return err(line, format!("at most {MAX_VERTICES} vertices are supported"));
    }
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::new();
    let mut last_line = line;
    for i in 0..m {
        let Some((line, toks)) = recs.next() else {
            return err(last_line, format!("expected {m} edge lines, found {i}"));
        };
        last_line = line;
        if toks.len() != 3 || toks[0] != "e" {
            return err(line, "expected edge \"e <u> <v>\"");
        }
        let (u, v) = (number(line, toks[1])?, number(line, toks[2])?);
        if v >= n {
            return err(line, format!("vertex {v} out of range for n = {n}"));
        }
        if u > v || (u == v && !multigraph) {
            return err(line, format!("edge endpoints must satisfy u < v, got {u} {v}"));
        }
        if !multigraph && !seen.insert((u, v)) {
            return err(line, format!("duplicate edge {u} {v}"));
        }
        edges.push((u, v));
    }
    Ok(Header { n, edges, last_line })
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut recs = records(text);
    let h = parse_edges(&mut recs, false)?;
    if let Some((line, _)) = recs.next() {
        return err(line, "unexpected line after the edge list");
    }
    Graph::from_edges(h.n, &h.edges).map_err(|e| ParseError { line: h.last_line, message: e.to_string() })
}

/// Header and edge lines in canonical order.
pub fn serialize_graph(g: &Graph) -> String {
    let mut s = String::new();
    writeln!(s, "p {} {}", g.vertex_count(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(s, "e {u} {v}").unwrap();
    }
    s
}

pub fn parse_embedding(text: &str) -> Result<PlaneMultigraph, ParseError> {
    let mut recs = records(text);
    let h = parse_edges(&mut recs, true)?;
    let n = h.n;
    let mut rotation: Vec<Option<Vec<usize>>> = vec![None; n];
    let mut last_line = h.last_line;
    for _ in 0..n {
        let Some((line, toks)) = recs.next() else {
            return err(last_line, format!("expected {n} rotation lines"));
        };
        last_line = line;
        if toks.len() < 2 || toks[0] != "r" {
            return err(line, "expected rotation \"r <v> <edge ids...>\"");
        }
        let v = number(line, toks[1])?;
        if v >= n {
            return err(line, format!("vertex {v} out of range"));
        }
        if rotation[v].is_some() {
            return err(line, format!("second rotation for vertex {v}"));
        }
        let mut darts = Vec::with_capacity(toks.len() - 2);
        let mut loop_seen = std::collections::HashSet::new();
        for tok in &toks[2..] {
            let e = number(line, tok)?;
            let Some(&(a, b)) = h.edges.get(e) else {
                return err(line, format!("edge id {e} out of range"));
            };
            let d = if a == b && a == v {
                if loop_seen.insert(e) {
                    2 * e
                } else {
                    2 * e + 1
                }
            } else if a == v {
                2 * e
            } else if b == v {
                2 * e + 1
            } else {
                return err(line, format!("edge {e} is not incident to vertex {v}"));
            };
            darts.push(d);
        }
        rotation[v] = Some(darts);
    }
    if let Some((line, _)) = recs.next() {
        return err(line, "unexpected line after the rotations");
    }
    let rotation: Vec<Vec<usize>> = rotation.into_iter().map(|r| r.unwrap_or_default()).collect();
    let mg = Multigraph::new(n, h.edges).map_err(|e| ParseError { line: last_line, message: e.to_string() })?;
    let pg = PlaneMultigraph::new(mg, rotation).map_err(|e| ParseError { line: last_line, message: e.to_string() })?;
    if !pg.is_spherical() {
        return err(last_line, "rotation system does not describe a sphere embedding");
    }
    Ok(pg)
}

/// Edges in id order with endpoints sorted, then one rotation per vertex.
pub fn serialize_embedding(pg: &PlaneMultigraph) -> String {
    let mg = pg.multigraph();
    let mut s = String::new();
    writeln!(s, "p {} {}", mg.vertex_count(), mg.edge_count()).unwrap();
    for &(a, b) in mg.edges() {
        writeln!(s, "e {} {}", a.min(b), a.max(b)).unwrap();
    }
    for v in 0..mg.vertex_count() {
        write!(s, "r {v}").unwrap();
        for &d in pg.rotation(v) {
            write!(s, " {}", d / 2).unwrap();
        }
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use contract_lab::embedding::{combinatorially_equivalent, dual, planar_embed};
    use contract_lab::generators::{complete, triangulated_grid, wall};

    #[test]
    fn graph_examples() {
        assert_eq!(parse_graph("p 2 1\ne 0 1\n").unwrap(), complete(2));
        assert_eq!(parse_graph("# one vertex\np 1 0\n").unwrap(), complete(1));
        let e = parse_graph("p 2 1\ne 1 0\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert_eq!(parse_graph("p 3 2\ne 0 1\n\ne 0 1\n").unwrap_err().line, 4);
        assert_eq!(parse_graph("p 3 1\ne 0 3\n").unwrap_err().line, 2);
        assert_eq!(parse_graph("p 2 2\ne 0 1\n").unwrap_err().line, 2);
        assert_eq!(parse_graph("p 2 x\n").unwrap_err().line, 1);
        assert_eq!(parse_graph("").unwrap_err().line, 1);
        assert_eq!(parse_graph("p 2 1\ne 0 1\ne 0 1\n").unwrap_err().line, 3);
    }

    #[test]
    fn graph_round_trip() {
        for g in [complete(5), triangulated_grid(4).unwrap(), wall(3).unwrap()] {
            let text = serialize_graph(&g);
            assert_eq!(parse_graph(&text).unwrap(), g);
            assert_eq!(serialize_graph(&parse_graph(&text).unwrap()), text);
        }
    }

    #[test]
    fn embedding_round_trip_with_loops() {
        let pg = planar_embed(&complete(3)).unwrap();
        let d = dual(&pg).unwrap().dual;
        let text = serialize_embedding(&d);
        let back = parse_embedding(&text).unwrap();
        assert!(combinatorially_equivalent(&back, &d));
        let lp = parse_embedding("p 1 1\ne 0 0\nr 0 0 0\n").unwrap();
        assert_eq!(lp.face_count(), 2);
        let k4 = planar_embed(&complete(4)).unwrap();
        assert_eq!(serialize_embedding(&parse_embedding(&serialize_embedding(&k4)).unwrap()), serialize_embedding(&k4));
    }

    #[test]
    fn embedding_errors() {
        // K_4 with every rotation in id order has two faces: a torus.
        let torus = "p 4 6\ne 0 1\ne 0 2\ne 0 3\ne 1 2\ne 1 3\ne 2 3\nr 0 0 1 2\nr 1 0 3 4\nr 2 1 3 5\nr 3 2 4 5\n";
        assert_eq!(parse_embedding(torus).unwrap_err().line, 11);
        let sphere = torus.replace("r 1 0 3 4", "r 1 0 4 3").replace("r 3 2 4 5", "r 3 2 5 4");
        assert!(parse_embedding(&sphere).unwrap().is_spherical());
        assert_eq!(parse_embedding("p 2 1\ne 0 1\nr 0 0\n").unwrap_err().line, 3);
        assert_eq!(parse_embedding("p 3 1\ne 0 1\nr 0 0\nr 1 0\nr 2 0\n").unwrap_err().line, 5);
    }
}
