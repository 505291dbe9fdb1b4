use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;

use super::{default_names, Graph, Vertex, VertexSet};

/// Isomorphism invariant of a vertex: its degree and the sorted degrees of its neighbours.
fn vertex_colour(g: &Graph, v: Vertex) -> (usize, Vec<usize>) {
    let mut nbr: Vec<usize> = g.link(v).iter().map(|u| g.degree(u)).collect();
    nbr.sort_unstable();
    (g.degree(v), nbr)
}

fn colour_classes(g: &Graph) -> Vec<Vec<Vertex>> {
    let mut classes: BTreeMap<(usize, Vec<usize>), Vec<Vertex>> = BTreeMap::new();
    for v in g.vertices() {
        classes.entry(vertex_colour(g, v)).or_default().push(v);
    }
    classes.into_values().collect()
}

fn code_of(g: &Graph, order: &[Vertex]) -> u128 {
    let n = order.len();
    let mut code = 0u128;
    for i in 0..n {
        for j in i + 1..n {
            code = code << 1 | g.adjacent(order[i], order[j]) as u128;
        }
    }
    code
}

/// Canonical form up to isomorphism: colour-class sizes plus the largest
/// upper-triangle adjacency code over all colour-respecting orderings.
///
/// Exhaustive over the orderings, so meant for graphs with at most ~10 vertices.
pub fn canonical_code(g: &Graph) -> (Vec<(usize, Vec<usize>, usize)>, u128) {
    assert!(g.len() <= 15, "canonical_code is exhaustive; graph too large");
    let classes = colour_classes(g);
    let shape = classes
        .iter()
        .map(|c| {
            let (d, nbr) = vertex_colour(g, c[0]);
            (d, nbr, c.len())
        })
        .collect();

    fn permute(g: &Graph, classes: &[Vec<Vertex>], k: usize, order: &mut Vec<Vertex>, best: &mut u128) {
        if k == classes.len() {
            *best = (*best).max(code_of(g, order));
            return;
        }
        permute_class(g, classes, k, &mut classes[k].clone(), order, best);
    }

    fn permute_class(
        g: &Graph,
        classes: &[Vec<Vertex>],
        k: usize,
        pool: &mut Vec<Vertex>,
        order: &mut Vec<Vertex>,
        best: &mut u128,
    ) {
        if pool.is_empty() {
            permute(g, classes, k + 1, order, best);
            return;
        }
        for i in 0..pool.len() {
            let v = pool.remove(i);
            order.push(v);
            permute_class(g, classes, k, pool, order, best);
            order.pop();
            pool.insert(i, v);
        }
    }

    let mut best = 0;
    permute(g, &classes, 0, &mut Vec::new(), &mut best);
    (shape, best)
}

/// One representative of every isomorphism class of graphs on exactly `n` vertices.
///
/// Built by adding a vertex with every possible neighbourhood to the graphs on
/// `n - 1` vertices and deduplicating by [`canonical_code`].
pub fn graphs_up_to_iso(n: usize) -> Vec<Graph> {
    let mut layer = vec![Graph::discrete(0)];
    for k in 1..=n {
        let mut seen = BTreeMap::new();
        for base in &layer {
            let bits = base.adjacency_bits();
            for nbrs in VertexSet::full(k - 1).subsets() {
                let mut adj: Vec<u64> = bits.to_vec();
                for u in nbrs {
                    adj[u] |= 1 << (k - 1);
                }
                adj.push(nbrs.bits());
                let g = Graph::from_adjacency(default_names(k), adj);
                seen.entry(canonical_code(&g)).or_insert(g);
            }
        }
        layer = seen.into_values().collect();
    }
    layer
}

/// Connected graphs on 1..=`max_n` vertices, one per isomorphism class.
pub fn connected_graphs_up_to_iso(max_n: usize) -> Vec<Graph> {
    (1..=max_n)
        .flat_map(graphs_up_to_iso)
        .filter(Graph::is_connected)
        .collect()
}

/// All adjacency-preserving permutations; `perm[v]` is the image of `v`.
///
/// Backtracking over vertices in order, only trying targets of matching colour.
pub fn symmetries(g: &Graph) -> Vec<Vec<Vertex>> {
    let colours: Vec<_> = g.vertices().map(|v| vertex_colour(g, v)).collect();
    let n = g.len();
    let mut out = Vec::new();
    let mut perm = Vec::with_capacity(n);
    let mut used = VertexSet::EMPTY;

    fn extend(
        g: &Graph,
        colours: &[(usize, Vec<usize>)],
        perm: &mut Vec<Vertex>,
        used: &mut VertexSet,
        out: &mut Vec<Vec<Vertex>>,
    ) {
        let v = perm.len();
        if v == g.len() {
            out.push(perm.clone());
            return;
        }
        for w in g.vertices() {
            if used.contains(w) || colours[w] != colours[v] {
                continue;
            }
            let consistent = perm
                .iter()
                .enumerate()
                .all(|(u, &img)| g.adjacent(u, v) == g.adjacent(img, w));
            if consistent {
                perm.push(w);
                used.insert(w);
                extend(g, colours, perm, used, out);
                used.remove(w);
                perm.pop();
            }
        }
    }

    extend(g, &colours, &mut perm, &mut used, &mut out);
    out
}

/// Erdős–Rényi graph G(n, p) with generated vertex names.
pub fn random_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::discrete(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.try_add_edge(u, v).expect("fresh edge");
            }
        }
    }
    g
}

/// G(n, p) conditioned on connectivity by rejection; after 200 rejections the
/// components are chained together by an edge between consecutive least vertices.
pub fn random_connected_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    for _ in 0..200 {
        let g = random_graph(n, p, rng);
        if g.is_connected() {
            return g;
        }
    }
    let mut g = random_graph(n, p, rng);
    let comps = g.components();
    for pair in comps.windows(2) {
        let (u, v) = (pair[0].first().unwrap(), pair[1].first().unwrap());
        g.try_add_edge(u, v).expect("components are disjoint");
    }
    g
}

/// Uniform random recursive tree on `n` vertices, with vertex labels shuffled.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    let mut labels: Vec<Vertex> = (0..n).collect();
    labels.shuffle(rng);
    let mut g = Graph::discrete(n);
    for i in 1..n {
        let parent = rng.gen_range(0..i);
        g.try_add_edge(labels[i], labels[parent]).expect("tree edge");
    }
    g
}
