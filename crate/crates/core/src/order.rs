//! The domination order `v ≤ w ⇔ lk(v) ⊆ st(w)`, its equivalence classes, the
//! induced partial order on classes and the graph Γ₀ of maximal classes.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Distance, Graph, Vertex, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassKind {
    /// Members pairwise adjacent (or a single vertex): generates a free abelian group.
    Abelian,
    /// Members pairwise at distance two: generates a non-abelian free group.
    Free,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexClass {
    /// Least member in vertex order.
    pub representative: Vertex,
    pub members: VertexSet,
    pub kind: ClassKind,
}

impl VertexClass {
    pub fn is_abelian(&self) -> bool {
        self.kind == ClassKind::Abelian
    }

    pub fn format(&self, g: &Graph) -> String {
        g.format_set(self.members)
    }
}

/// How `v ≤ w` is realised.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeqCase {
    Equal,
    /// `d(v,w) = 1` and `st(v) ⊆ st(w)`.
    AdjacentStar,
    /// `d(v,w) = 2` and `lk(v) ⊆ lk(w)`.
    DistanceTwoLink,
    NotLeq,
}

pub fn leq(g: &Graph, v: Vertex, w: Vertex) -> bool {
    g.link(v).is_subset(g.star(w))
}

pub fn equivalent(g: &Graph, v: Vertex, w: Vertex) -> bool {
    leq(g, v, w) && leq(g, w, v)
}

pub fn leq_case(g: &Graph, v: Vertex, w: Vertex) -> Result<LeqCase> {
    if v == w {
        return Ok(LeqCase::Equal);
    }
    if !leq(g, v, w) {
        return Ok(LeqCase::NotLeq);
    }
    match g.distance(v, w) {
        Distance::Finite(1) if g.star(v).is_subset(g.star(w)) => Ok(LeqCase::AdjacentStar),
        Distance::Finite(2) if g.link(v).is_subset(g.link(w)) => Ok(LeqCase::DistanceTwoLink),
        _ => Err(Error::LeqCaseMismatch {
            v: g.name(v).to_string(),
            w: g.name(w).to_string(),
        }),
    }
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

/// Partition of `V` into `~`-classes, ordered by representative.
pub fn equivalence_classes(g: &Graph) -> Result<Vec<VertexClass>> {
    require_connected(g)?;
    let mut assigned = VertexSet::EMPTY;
    let mut out = Vec::new();
    for v in g.vertices() {
        if assigned.contains(v) {
            continue;
        }
        let members: VertexSet = g.vertices().filter(|&w| equivalent(g, v, w)).collect();
        assigned |= members;
        let adjacent_pairs = members
            .iter()
            .flat_map(|x| members.iter().filter(move |&y| y > x).map(move |y| (x, y)))
            .map(|(x, y)| g.adjacent(x, y))
            .collect::<Vec<_>>();
        let kind = if adjacent_pairs.iter().all(|&a| a) {
            ClassKind::Abelian
        } else if adjacent_pairs.iter().all(|&a| !a) {
            ClassKind::Free
        } else {
            return Err(Error::Internal(format!(
                "class {} mixes adjacent and non-adjacent members",
                g.format_set(members)
            )));
        };
        out.push(VertexClass {
            representative: v,
            members,
            kind,
        });
    }
    Ok(out)
}

/// Classes with the order they inherit from `≤`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassPoset {
    pub classes: Vec<VertexClass>,
    /// `leq[i][j]` iff `[i] ≤ [j]`.
    leq: Vec<Vec<bool>>,
    class_of: Vec<usize>,
}

impl ClassPoset {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq[i][j]
    }

    /// Index of the class containing `v`.
    pub fn class_of(&self, v: Vertex) -> usize {
        self.class_of[v]
    }

    pub fn is_maximal(&self, i: usize) -> bool {
        (0..self.len()).all(|j| !self.lt(i, j))
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.is_maximal(i)).collect()
    }

    /// All ordered pairs `(i, j)` with `[i] ≤ [j]`, reflexive pairs included.
    pub fn relation(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|i| (0..self.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| self.leq[i][j])
            .collect()
    }

    /// Covering pairs `[i] < [j]` with nothing strictly between: the Hasse diagram.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.lt(i, j) && !(0..n).any(|k| self.lt(i, k) && self.lt(k, j)))
            .collect()
    }

    /// Index of the class matching `cls` exactly.
    pub fn index_of(&self, cls: &VertexClass) -> Option<usize> {
        self.classes.iter().position(|c| c == cls)
    }
}

pub fn class_poset(g: &Graph) -> Result<ClassPoset> {
    let classes = equivalence_classes(g)?;
    let mut class_of = vec![0; g.len()];
    for (i, c) in classes.iter().enumerate() {
        for v in c.members {
            class_of[v] = i;
        }
    }
    let leq = classes
        .iter()
        .map(|a| {
            classes
                .iter()
                .map(|b| leq(g, a.representative, b.representative))
                .collect()
        })
        .collect();
    Ok(ClassPoset { classes, leq, class_of })
}

/// Graph whose vertices are the maximal classes, adjacent when their members are.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaZero {
    pub classes: Vec<VertexClass>,
    pub edges: Vec<(usize, usize)>,
}

impl GammaZero {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i.min(j), i.max(j)))
    }

    pub fn neighbours(&self, i: usize) -> Vec<usize> {
        (0..self.len()).filter(|&j| self.adjacent(i, j)).collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.classes.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in self.neighbours(i) {
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Breadth-first parent pointers from `root`; `None` marks the root and
    /// unreachable classes.
    pub fn bfs_tree(&self, root: usize) -> Vec<Option<usize>> {
        let mut parent = vec![None; self.len()];
        let mut seen = vec![false; self.len()];
        seen[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(i) = queue.pop_front() {
            for j in self.neighbours(i) {
                if !seen[j] {
                    seen[j] = true;
                    parent[j] = Some(i);
                    queue.push_back(j);
                }
            }
        }
        parent
    }
}

pub fn gamma_zero(g: &Graph) -> Result<GammaZero> {
    gamma_zero_of(g, &class_poset(g)?)
}

pub(crate) fn gamma_zero_of(g: &Graph, poset: &ClassPoset) -> Result<GammaZero> {
    let classes: Vec<VertexClass> = poset.maximal().into_iter().map(|i| poset.classes[i].clone()).collect();
    let mut edges = Vec::new();
    for i in 0..classes.len() {
        for j in i + 1..classes.len() {
            let (a, b) = (&classes[i], &classes[j]);
            let cross: Vec<bool> = a
                .members
                .iter()
                .flat_map(|x| b.members.iter().map(move |y| (x, y)))
                .map(|(x, y)| g.adjacent(x, y))
                .collect();
            if cross.iter().all(|&e| e) {
                edges.push((i, j));
            } else if cross.iter().any(|&e| e) {
                return Err(Error::Internal(format!(
                    "adjacency between {} and {} depends on representatives",
                    a.format(g),
                    b.format(g)
                )));
            }
        }
    }
    Ok(GammaZero { classes, edges })
}

/// For a chain `[v_0] < [v_1] < ... < [v_{k-1}]`, the number `j` of leading
/// steps at distance two. Every later step is at distance one and every class
/// after position `j` is abelian; both are checked.
pub fn chain_shape(g: &Graph, chain: &[Vertex]) -> Result<usize> {
    for &v in chain {
        if v >= g.len() {
            return Err(Error::VertexOutOfRange(v));
        }
    }
    let not_chain = || Error::NotAChain(chain.iter().map(|&v| g.name(v).to_string()).collect());
    for pair in chain.windows(2) {
        if !(leq(g, pair[0], pair[1]) && !leq(g, pair[1], pair[0])) {
            return Err(not_chain());
        }
    }
    let dists: Vec<Distance> = chain.windows(2).map(|p| g.distance(p[0], p[1])).collect();
    let j = dists.iter().take_while(|&&d| d == Distance::Finite(2)).count();
    if let Some(d) = dists[j..].iter().find(|&&d| d != Distance::Finite(1)) {
        return Err(Error::Internal(format!(
            "chain has a step at distance {d} after its distance-one steps"
        )));
    }
    let classes = equivalence_classes(g)?;
    for &v in &chain[(j + 1).min(chain.len())..] {
        let cls = classes.iter().find(|c| c.members.contains(v)).unwrap();
        if !cls.is_abelian() {
            return Err(Error::Internal(format!(
                "class of `{}` follows a distance-one step but is free",
                g.name(v)
            )));
        }
    }
    Ok(j)
}
