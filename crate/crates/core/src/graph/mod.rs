//! Finite simplicial graphs and the primitives the rest of the crate is built on.
//!
//! Vertices are addressed by their position in the graph's vertex list. That
//! position is also the total order used everywhere output has to be
//! deterministic (class representatives, normal forms, report ordering).

mod enumerate;
pub mod io;
mod vertex_set;

use std::collections::{HashMap, VecDeque};
use std::fmt;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

pub use enumerate::{
    canonical_code, connected_graphs_up_to_iso, graphs_up_to_iso, random_connected_graph, random_graph, random_tree,
    symmetries,
};
pub use io::{graph_to_toml, load_graph, parse_graph};
pub use vertex_set::VertexSet;

/// Index of a vertex in its graph's vertex list.
pub type Vertex = usize;

pub const MAX_VERTICES: usize = 64;

/// Edge-path distance; vertices in different components are infinitely far apart.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    names: Vec<String>,
    index: HashMap<String, Vertex>,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .map(|(u, v)| format!("{}-{}", self.names[u], self.names[v]))
            .collect();
        f.debug_struct("Graph")
            .field("vertices", &self.names)
            .field("edges", &edges)
            .finish()
    }
}

impl Graph {
    /// Builds a graph from vertex names and edges given by name.
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Self> {
        let names: Vec<String> = vertices.iter().map(|s| s.as_ref().to_string()).collect();
        let mut g = Self::empty(names)?;
        for (u, v) in edges {
            let (u, v) = (g.vertex(u.as_ref())?, g.vertex(v.as_ref())?);
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Graph with the given vertices and no edges.
    pub fn empty(names: Vec<String>) -> Result<Self> {
        if names.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices(names.len()));
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || name.chars().any(|c| c.is_whitespace() || c == '^') {
                return Err(Error::Internal(format!("invalid vertex name `{name}`")));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::Internal(format!("duplicate vertex `{name}`")));
            }
        }
        let adj = vec![0; names.len()];
        Ok(Graph { names, index, adj })
    }

    /// Builds a graph on `n` generated vertex names from index pairs.
    pub fn from_index_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = Self::empty(default_names(n))?;
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn from_adjacency(names: Vec<String>, adj: Vec<u64>) -> Self {
        let index = names.iter().cloned().enumerate().map(|(i, n)| (n, i)).collect();
        Graph { names, index, adj }
    }

    pub(crate) fn try_add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        let n = self.len();
        if u >= n {
            return Err(Error::VertexOutOfRange(u));
        }
        if v >= n {
            return Err(Error::VertexOutOfRange(v));
        }
        if u == v {
            return Err(Error::Internal(format!("loop at `{}`", self.names[u])));
        }
        if self.adjacent(u, v) {
            return Err(Error::Internal(format!(
                "duplicate edge `{}`-`{}`",
                self.names[u], self.names[v]
            )));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    /// Path on `n` vertices named a, b, c, ...
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_index_edges(n, &edges).expect("path graph")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a simplicial cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_index_edges(n, &edges).expect("cycle graph")
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        Self::from_index_edges(n, &edges).expect("complete graph")
    }

    pub fn discrete(n: usize) -> Self {
        Self::from_index_edges(n, &[]).expect("discrete graph")
    }

    /// Star K_{1,leaves}: vertex 0 is the center.
    pub fn star_graph(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Self::from_index_edges(leaves + 1, &edges).expect("star graph")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: Vertex) -> &str {
        &self.names[v]
    }

    pub fn vertex(&self, name: &str) -> Result<Vertex> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.len()
    }

    pub fn all(&self) -> VertexSet {
        VertexSet::full(self.len())
    }

    /// Resolves a list of names into a vertex set.
    pub fn set_of<S: AsRef<str>>(&self, names: &[S]) -> Result<VertexSet> {
        names
            .iter()
            .map(|n| self.vertex(n.as_ref()))
            .collect::<Result<VertexSet>>()
    }

    pub fn check_set(&self, s: VertexSet) -> Result<()> {
        match (s - self.all()).first() {
            Some(v) => Err(Error::VertexOutOfRange(v)),
            None => Ok(()),
        }
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Generators `u` and `v` commute in the Artin group.
    pub fn commute(&self, u: Vertex, v: Vertex) -> bool {
        u == v || self.adjacent(u, v)
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices().flat_map(move |u| {
            VertexSet::from_bits(self.adj[u])
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn link(&self, v: Vertex) -> VertexSet {
        VertexSet::from_bits(self.adj[v])
    }

    pub fn star(&self, v: Vertex) -> VertexSet {
        self.link(v).with(v)
    }

    /// Breadth-first edge-path distance.
    pub fn distance(&self, u: Vertex, v: Vertex) -> Distance {
        if u == v {
            return Distance::Finite(0);
        }
        let mut seen = VertexSet::single(u);
        let mut frontier = seen;
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let mut next = VertexSet::EMPTY;
            for x in frontier {
                next |= self.link(x);
            }
            next -= seen;
            if next.contains(v) {
                return Distance::Finite(d);
            }
            seen |= next;
            frontier = next;
        }
        Distance::Infinite
    }

    /// All-pairs distances by repeated BFS.
    pub fn distance_matrix(&self) -> Vec<Vec<Distance>> {
        self.vertices()
            .map(|u| {
                let mut row = vec![Distance::Infinite; self.len()];
                row[u] = Distance::Finite(0);
                let mut queue = VecDeque::from([u]);
                while let Some(x) = queue.pop_front() {
                    let dx = row[x].finite().unwrap();
                    for y in self.link(x) {
                        if row[y] == Distance::Infinite {
                            row[y] = Distance::Finite(dx + 1);
                            queue.push_back(y);
                        }
                    }
                }
                row
            })
            .collect()
    }

    /// Connected components of the subgraph induced on `within`, ordered by least vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(start) = rest.first() {
            let mut comp = VertexSet::single(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for x in frontier {
                    next |= self.link(x) & within;
                }
                next -= comp;
                comp |= next;
                frontier = next;
            }
            rest -= comp;
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.all())
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Components of Γ minus the closed star of `v`.
    pub fn components_minus_star(&self, v: Vertex) -> Vec<VertexSet> {
        self.components_within(self.all() - self.star(v))
    }

    /// Vertices commuting with every vertex of `th`.
    pub fn perp(&self, th: VertexSet) -> VertexSet {
        th.iter().fold(self.all(), |acc, w| acc & self.star(w))
    }

    pub fn induced_subgraph(&self, within: VertexSet) -> Graph {
        let keep: Vec<Vertex> = within.iter().collect();
        let names = keep.iter().map(|&v| self.names[v].clone()).collect();
        let adj = keep
            .iter()
            .map(|&u| {
                keep.iter()
                    .enumerate()
                    .filter(|&(_, &v)| self.adjacent(u, v))
                    .fold(0u64, |acc, (j, _)| acc | 1 << j)
            })
            .collect();
        Graph::from_adjacency(names, adj)
    }

    /// Splits off single-vertex components (the free factor of rank `j`) from the
    /// subgraphs on the remaining components.
    pub fn free_product_factors(&self) -> (usize, Vec<Graph>) {
        let comps = self.components();
        let isolated = comps.iter().filter(|c| c.len() == 1).count();
        let factors = comps
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| self.induced_subgraph(c))
            .collect();
        (isolated, factors)
    }

    /// Size of a largest clique (maximal rank of a free abelian special subgroup).
    pub fn dimension(&self) -> usize {
        fn expand(g: &Graph, size: usize, candidates: VertexSet, best: &mut usize) {
            if candidates.is_empty() {
                *best = (*best).max(size);
                return;
            }
            if size + candidates.len() <= *best {
                return;
            }
            let mut cand = candidates;
            while let Some(v) = cand.first() {
                if size + cand.len() <= *best {
                    return;
                }
                cand.remove(v);
                expand(g, size + 1, cand & g.link(v), best);
            }
        }
        let mut best = 0;
        expand(self, 0, self.all(), &mut best);
        best
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| (s - self.star(v)).is_empty())
    }

    /// `{a,b,c}` rendering of a vertex set in vertex order.
    pub fn format_set(&self, s: VertexSet) -> String {
        let names: Vec<&str> = s.iter().map(|v| self.name(v)).collect();
        format!("{{{}}}", names.join(","))
    }

    pub fn set_names(&self, s: VertexSet) -> Vec<String> {
        s.iter().map(|v| self.names[v].clone()).collect()
    }

    /// Stable content hash of the vertex list and edge set.
    pub fn content_hash(&self) -> String {
        let mut hasher = Sha256::new();
        for name in &self.names {
            hasher.update(name.as_bytes());
            hasher.update([0u8]);
        }
        hasher.update([1u8]);
        for (u, v) in self.edges() {
            hasher.update((u as u32).to_le_bytes());
            hasher.update((v as u32).to_le_bytes());
        }
        hex::encode(&hasher.finalize()[..16])
    }

    pub(crate) fn adjacency_bits(&self) -> &[u64] {
        &self.adj
    }
}

/// a, b, ..., z, then v26, v27, ...
pub fn default_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            if i < 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("v{i}")
            }
        })
        .collect()
}
