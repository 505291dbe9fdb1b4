//! Graphviz output. Nodes appear in vertex or class order and edges in
//! lexicographic order, so output is stable across runs.

use std::fmt::Write;
use std::str::FromStr;

use crate::error::Result;
use crate::graph::Graph;
use crate::order::{class_poset, gamma_zero, VertexClass};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DotKind {
    Graph,
    Poset,
    GammaZero,
}

impl FromStr for DotKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "graph" => Ok(DotKind::Graph),
            "poset" => Ok(DotKind::Poset),
            "gamma0" => Ok(DotKind::GammaZero),
            _ => Err(format!("unknown diagram `{s}` (expected graph, poset or gamma0)")),
        }
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn class_node(out: &mut String, i: usize, g: &Graph, cls: &VertexClass) {
    let shape = if cls.is_abelian() { "box" } else { "ellipse" };
    writeln!(out, "  c{i} [label={}, shape={shape}];", quote(&cls.format(g))).unwrap();
}

pub fn graph_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        writeln!(out, "  {};", quote(g.name(v))).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {} -- {};", quote(g.name(u)), quote(g.name(v))).unwrap();
    }
    out.push_str("}\n");
    out
}

/// Hasse diagram of the class order, edges pointing upward.
pub fn poset_dot(g: &Graph) -> Result<String> {
    let poset = class_poset(g)?;
    let mut out = String::from("digraph poset {\n  rankdir=BT;\n");
    for (i, cls) in poset.classes.iter().enumerate() {
        class_node(&mut out, i, g, cls);
    }
    for (i, j) in poset.covers() {
        writeln!(out, "  c{i} -> c{j};").unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}

pub fn gamma_zero_dot(g: &Graph) -> Result<String> {
    let g0 = gamma_zero(g)?;
    let mut out = String::from("graph gamma0 {\n");
    for (i, cls) in g0.classes.iter().enumerate() {
        class_node(&mut out, i, g, cls);
    }
    for (i, j) in &g0.edges {
        writeln!(out, "  c{i} -- c{j};").unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}

pub fn dot(g: &Graph, kind: DotKind) -> Result<String> {
    match kind {
        DotKind::Graph => Ok(graph_dot(g)),
        DotKind::Poset => poset_dot(g),
        DotKind::GammaZero => gamma_zero_dot(g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(s: &str, pat: &str) -> usize {
        s.matches(pat).count()
    }

    #[test]
    fn gamma_zero_of_p4() {
        let d = gamma_zero_dot(&Graph::path(4)).unwrap();
        assert_eq!(count(&d, "[label="), 2);
        assert_eq!(count(&d, " -- "), 1);
        assert_eq!(count(&gamma_zero_dot(&Graph::complete(4)).unwrap(), "[label="), 1);
    }

    #[test]
    fn poset_of_p3() {
        let d = poset_dot(&Graph::path(3)).unwrap();
        assert_eq!(
            d,
            "digraph poset {\n  rankdir=BT;\n  c0 [label=\"{a,c}\", shape=ellipse];\n  \
             c1 [label=\"{b}\", shape=box];\n  c0 -> c1;\n}\n"
        );
    }

    #[test]
    fn plain_graph() {
        let d = graph_dot(&Graph::path(3));
        assert!(d.contains("\"a\" -- \"b\";"));
        assert_eq!(count(&d, " -- "), 2);
        assert!("gamma1".parse::<DotKind>().is_err());
    }
}
