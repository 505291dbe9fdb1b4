//! Graph documents.
//!
//! ```toml
//! vertices = ["a", "b", "c", "d"]
//! edges = [["a", "b"], ["b", "c"], ["c", "d"]]
//! ```
//!
//! Loops, repeated edges, repeated vertices and edges naming an unknown vertex
//! are rejected with the 1-based line of the offending entry.

use std::collections::HashSet;
use std::path::Path;

use serde::Deserialize;
use toml::Spanned;

use super::Graph;
use crate::error::{Error, Result};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    vertices: Vec<Spanned<String>>,
    #[serde(default)]
    edges: Vec<Spanned<Vec<Spanned<String>>>>,
}

fn line_of(text: &str, offset: usize) -> usize {
    text[..offset.min(text.len())].matches('\n').count() + 1
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let doc: GraphDoc = toml::from_str(text).map_err(|e| Error::Parse {
        line: e.span().map_or(1, |s| line_of(text, s.start)),
        message: e.message().to_string(),
    })?;
    let err = |offset: usize, message: String| Error::Parse {
        line: line_of(text, offset),
        message,
    };

    let mut seen = HashSet::new();
    for v in &doc.vertices {
        let name = v.get_ref();
        if name.is_empty() || name.chars().any(|c| c.is_whitespace() || c == '^') {
            return Err(err(
                v.span().start,
                format!("invalid vertex name `{name}` (no whitespace or `^`)"),
            ));
        }
        if !seen.insert(name.as_str()) {
            return Err(err(v.span().start, format!("duplicate vertex `{name}`")));
        }
    }
    let names: Vec<String> = doc.vertices.iter().map(|v| v.get_ref().clone()).collect();
    let mut g = Graph::empty(names).map_err(|e| err(0, e.to_string()))?;

    for edge in &doc.edges {
        let at = edge.span().start;
        let ends = edge.get_ref();
        if ends.len() != 2 {
            return Err(err(
                at,
                format!("edge must list exactly 2 vertices, found {}", ends.len()),
            ));
        }
        let mut idx = [0; 2];
        for (slot, end) in idx.iter_mut().zip(ends) {
            *slot = g.vertex(end.get_ref()).map_err(|_| {
                err(
                    end.span().start,
                    format!("edge endpoint `{}` is not a vertex", end.get_ref()),
                )
            })?;
        }
        let (u, v) = (idx[0], idx[1]);
        if u == v {
            return Err(err(at, format!("loop at `{}`", g.name(u))));
        }
        if g.adjacent(u, v) {
            return Err(err(at, format!("duplicate edge `{}`-`{}`", g.name(u), g.name(v))));
        }
        g.try_add_edge(u, v)?;
    }
    Ok(g)
}

pub fn load_graph(path: impl AsRef<Path>) -> Result<Graph> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    parse_graph(&text)
}

/// Serializes in the same document format, one edge per line.
pub fn graph_to_toml(g: &Graph) -> String {
    let quote = |s: &str| format!("{s:?}");
    let verts: Vec<String> = g.names().iter().map(|n| quote(n)).collect();
    let mut out = format!("vertices = [{}]\nedges = [\n", verts.join(", "));
    for (u, v) in g.edges() {
        out.push_str(&format!("  [{}, {}],\n", quote(g.name(u)), quote(g.name(v))));
    }
    out.push_str("]\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loads_a_path() {
        let g = parse_graph(
            r#"
vertices = ["a", "b", "c", "d"]
edges = [["a", "b"], ["b", "c"], ["c", "d"]]
"#,
        )
        .unwrap();
        assert_eq!(g, Graph::path(4));
        assert_eq!(parse_graph(&graph_to_toml(&g)).unwrap(), g);
    }

    #[test]
    fn edges_default_to_empty() {
        assert_eq!(parse_graph("vertices = [\"a\", \"b\"]").unwrap(), Graph::discrete(2));
    }

    fn line_of_error(text: &str) -> (usize, String) {
        match parse_graph(text) {
            Err(Error::Parse { line, message }) => (line, message),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn loop_is_rejected_with_its_line() {
        let (line, msg) =
            line_of_error("vertices = [\"a\", \"b\"]\nedges = [\n  [\"a\", \"b\"],\n  [\"b\", \"b\"],\n]\n");
        assert_eq!(line, 4);
        assert!(msg.contains("loop"), "{msg}");
    }

    #[test]
    fn duplicate_edge_is_rejected_with_its_line() {
        let (line, msg) =
            line_of_error("vertices = [\"a\", \"b\"]\nedges = [\n  [\"a\", \"b\"],\n  [\"b\", \"a\"],\n]\n");
        assert_eq!(line, 4);
        assert!(msg.contains("duplicate edge"), "{msg}");
    }

    #[test]
    fn unknown_endpoint_is_rejected_with_its_line() {
        let (line, msg) = line_of_error("vertices = [\"a\", \"b\"]\n\nedges = [[\"a\", \"zz\"]]\n");
        assert_eq!(line, 3);
        assert!(msg.contains("`zz`"), "{msg}");
    }

    #[test]
    fn syntax_errors_carry_a_line() {
        let (line, _) = line_of_error("vertices = [\"a\"]\nedges = [[\"a\",\n");
        assert!(line >= 2);
        let (_, msg) = line_of_error("vertices = [\"a\", \"a\"]");
        assert!(msg.contains("duplicate vertex"));
    }
}
