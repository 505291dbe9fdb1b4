use std::collections::HashSet;

use super::{nf, Letter, NormalForm};
use crate::graph::{Graph, VertexSet};

/// Every element of word length at most `radius`, each exactly once, ordered by
/// length and then lexicographically by normal form.
pub fn enumerate_ball(g: &Graph, radius: usize) -> Vec<NormalForm> {
    enumerate_ball_within(g, g.all(), radius)
}

/// Ball of the special subgroup generated by `gens`.
///
/// Sphere `k + 1` is obtained from sphere `k` by right-multiplying with each
/// letter and keeping products whose normal form got longer; every geodesic has
/// a geodesic prefix, so nothing is missed. Memory grows with the ball, which
/// in practice limits the radius to about 7 on six generators.
pub fn enumerate_ball_within(g: &Graph, gens: VertexSet, radius: usize) -> Vec<NormalForm> {
    let letters: Vec<Letter> = gens.iter().flat_map(|v| [Letter::pos(v), Letter::neg(v)]).collect();
    let mut out = vec![NormalForm::identity()];
    let mut sphere = vec![NormalForm::identity()];
    for k in 1..=radius {
        let mut next: HashSet<NormalForm> = HashSet::new();
        for x in &sphere {
            let mut buf = x.letters().to_vec();
            for &l in &letters {
                buf.push(l);
                let y = nf(g, &buf);
                if y.len() == k {
                    next.insert(y);
                }
                buf.pop();
            }
        }
        let mut layer: Vec<NormalForm> = next.into_iter().collect();
        layer.sort();
        out.extend(layer.iter().cloned());
        sphere = layer;
    }
    out
}

/// Number of elements of each length `0..=radius`.
pub fn sphere_sizes(ball: &[NormalForm], radius: usize) -> Vec<usize> {
    let mut sizes = vec![0; radius + 1];
    for x in ball {
        sizes[x.len()] += 1;
    }
    sizes
}
