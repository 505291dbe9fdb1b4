//! Joins `J_[v] = L_[v] ∗ [v]` and normalizers, centralizers and centers of
//! special subgroups, all returned as the vertex sets that generate them.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::order::{class_poset, equivalence_classes, gamma_zero, ClassKind, VertexClass};
use crate::words::{enumerate_ball, nf, Letter, NormalForm};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JoinData {
    pub class: VertexClass,
    /// `L_[v] = lk(v) \ [v]`.
    pub link_part: VertexSet,
    /// `J_[v] = L_[v] ∪ [v]`.
    pub join: VertexSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NCZResult {
    pub normalizer: VertexSet,
    pub centralizer: VertexSet,
    pub center: VertexSet,
}

fn check_class(g: &Graph, cls: &VertexClass) -> Result<()> {
    g.check_set(cls.members)?;
    if equivalence_classes(g)?.contains(cls) {
        Ok(())
    } else {
        Err(Error::ForeignClass(g.format_set(cls.members)))
    }
}

pub fn join_of_class(g: &Graph, cls: &VertexClass) -> Result<JoinData> {
    check_class(g, cls)?;
    let v = cls.representative;
    let link_part = g.link(v) - cls.members;
    for u in cls.members {
        if g.link(u) - cls.members != link_part {
            return Err(Error::Internal(format!(
                "L of {} depends on the representative",
                cls.format(g)
            )));
        }
        if link_part.iter().any(|x| !g.adjacent(u, x)) {
            return Err(Error::Internal(format!(
                "{} is not joined to {}",
                g.format_set(link_part),
                cls.format(g)
            )));
        }
    }
    Ok(JoinData {
        class: cls.clone(),
        link_part,
        join: link_part | cls.members,
    })
}

/// `N(Θ) = A_{Θ∪Θ⊥}`, `C(Θ) = A_{Θ⊥}`, `Z(A_Θ) = A_{Θ∩Θ⊥}`.
pub fn godelle_ncz(g: &Graph, th: VertexSet) -> Result<NCZResult> {
    g.check_set(th)?;
    let perp = g.perp(th);
    Ok(NCZResult {
        normalizer: th | perp,
        centralizer: perp,
        center: th & perp,
    })
}

fn class_center(cls: &VertexClass) -> VertexSet {
    match cls.kind {
        ClassKind::Abelian => cls.members,
        ClassKind::Free => VertexSet::EMPTY,
    }
}

fn require_maximal(g: &Graph, cls: &VertexClass) -> Result<()> {
    let poset = class_poset(g)?;
    match poset.index_of(cls) {
        Some(i) if poset.is_maximal(i) => Ok(()),
        Some(_) => Err(Error::NotMaximal(cls.format(g))),
        None => Err(Error::ForeignClass(cls.format(g))),
    }
}

fn agree(g: &Graph, what: &str, formula: NCZResult, general: NCZResult) -> Result<NCZResult> {
    if formula == general {
        Ok(formula)
    } else {
        Err(Error::Internal(format!(
            "{what}: formula gives N={} C={} Z={}, general gives N={} C={} Z={}",
            g.format_set(formula.normalizer),
            g.format_set(formula.centralizer),
            g.format_set(formula.center),
            g.format_set(general.normalizer),
            g.format_set(general.centralizer),
            g.format_set(general.center),
        )))
    }
}

/// For maximal `[v]`: `N = J_[v]` and `C = Z = [v]` when abelian, trivial when free.
pub fn ncz_of_maximal_join(g: &Graph, jd: &JoinData) -> Result<NCZResult> {
    require_maximal(g, &jd.class)?;
    if join_of_class(g, &jd.class)? != *jd {
        return Err(Error::ForeignClass(jd.class.format(g)));
    }
    let z = class_center(&jd.class);
    let formula = NCZResult {
        normalizer: jd.join,
        centralizer: z,
        center: z,
    };
    agree(
        g,
        &format!("join of {}", jd.class.format(g)),
        formula,
        godelle_ncz(g, jd.join)?,
    )
}

/// `J_{v,w} = J_[v] ∩ J_[w]` for adjacent maximal classes, which splits as the
/// join `[v] ∗ [w] ∗ (L_[v] ∩ L_[w])` and has center
/// `Z([v]) × Z([w]) × Z(L_[v] ∩ L_[w])`.
pub fn adjacent_join_intersection(g: &Graph, jv: &JoinData, jw: &JoinData) -> Result<(VertexSet, NCZResult)> {
    require_maximal(g, &jv.class)?;
    require_maximal(g, &jw.class)?;
    let g0 = gamma_zero(g)?;
    let pos = |c: &VertexClass| g0.classes.iter().position(|x| x == c);
    let adjacent = match (pos(&jv.class), pos(&jw.class)) {
        (Some(i), Some(j)) => g0.adjacent(i, j),
        _ => false,
    };
    if !adjacent {
        return Err(Error::NotAdjacent(jv.class.format(g), jw.class.format(g)));
    }
    let (v, w) = (jv.class.members, jw.class.members);
    let common = jv.link_part & jw.link_part;
    let jvw = jv.join & jw.join;
    let parts = [v, w, common];
    let disjoint = parts.iter().map(|p| p.len()).sum::<usize>() == (v | w | common).len();
    let joined = (0..3).all(|i| (i + 1..3).all(|j| parts[i].iter().all(|x| parts[j].iter().all(|y| g.adjacent(x, y)))));
    if !(disjoint && joined && jvw == v | w | common) {
        return Err(Error::Internal(format!(
            "{} is not the join {} * {} * {}",
            g.format_set(jvw),
            g.format_set(v),
            g.format_set(w),
            g.format_set(common)
        )));
    }
    let z = class_center(&jv.class) | class_center(&jw.class) | (common & g.perp(common));
    let formula = NCZResult {
        normalizer: jvw,
        centralizer: z,
        center: z,
    };
    let ncz = agree(
        g,
        &format!("intersection {}", g.format_set(jvw)),
        formula,
        godelle_ncz(g, jvw)?,
    )?;
    Ok((jvw, ncz))
}

/// Elements of the ball of the given radius that commute with every generator in `th`.
pub fn brute_centralizer(g: &Graph, th: VertexSet, radius: usize) -> Vec<NormalForm> {
    enumerate_ball(g, radius)
        .into_iter()
        .filter(|x| {
            th.iter().all(|u| {
                let mut left = vec![Letter::pos(u)];
                left.extend_from_slice(x.letters());
                let mut right = x.letters().to_vec();
                right.push(Letter::pos(u));
                nf(g, &left) == nf(g, &right)
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn class_containing(g: &Graph, name: &str) -> VertexClass {
        let v = g.vertex(name).unwrap();
        equivalence_classes(g)
            .unwrap()
            .into_iter()
            .find(|c| c.members.contains(v))
            .unwrap()
    }

    fn set(g: &Graph, names: &[&str]) -> VertexSet {
        g.set_of(names).unwrap()
    }

    #[test]
    fn joins_of_small_graphs() {
        let p3 = Graph::path(3);
        let jd = join_of_class(&p3, &class_containing(&p3, "b")).unwrap();
        assert_eq!(jd.link_part, set(&p3, &["a", "c"]));
        assert_eq!(jd.join, p3.all());

        let k4 = Graph::complete(4);
        let jd = join_of_class(&k4, &class_containing(&k4, "a")).unwrap();
        assert!(jd.link_part.is_empty());
        assert_eq!(jd.join, k4.all());

        let p4 = Graph::path(4);
        let jd = join_of_class(&p4, &class_containing(&p4, "c")).unwrap();
        assert_eq!(jd.link_part, set(&p4, &["b", "d"]));
        assert_eq!(jd.join, set(&p4, &["b", "c", "d"]));
    }

    #[test]
    fn foreign_class_is_rejected() {
        let p3 = Graph::path(3);
        let fake = VertexClass {
            representative: 0,
            members: VertexSet::single(0),
            kind: ClassKind::Abelian,
        };
        assert!(matches!(join_of_class(&p3, &fake), Err(Error::ForeignClass(_))));
    }

    #[test]
    fn godelle_examples() {
        let p3 = Graph::path(3);
        let r = godelle_ncz(&p3, set(&p3, &["a", "c"])).unwrap();
        assert_eq!(r.normalizer, p3.all());
        assert_eq!(r.centralizer, set(&p3, &["b"]));
        assert!(r.center.is_empty());

        let k3 = Graph::complete(3);
        let r = godelle_ncz(&k3, k3.all()).unwrap();
        assert_eq!((r.normalizer, r.centralizer, r.center), (k3.all(), k3.all(), k3.all()));

        let f2 = Graph::discrete(2);
        let a = set(&f2, &["a"]);
        let r = godelle_ncz(&f2, a).unwrap();
        assert_eq!((r.normalizer, r.centralizer, r.center), (a, a, a));
    }

    #[test]
    fn maximal_join_centers() {
        let p3 = Graph::path(3);
        let jd = join_of_class(&p3, &class_containing(&p3, "b")).unwrap();
        let r = ncz_of_maximal_join(&p3, &jd).unwrap();
        assert_eq!(r.center, set(&p3, &["b"]));
        assert_eq!(r.normalizer, p3.all());

        let p4 = Graph::path(4);
        let jd = join_of_class(&p4, &class_containing(&p4, "b")).unwrap();
        let r = ncz_of_maximal_join(&p4, &jd).unwrap();
        assert_eq!(r.centralizer, set(&p4, &["b"]));
        assert_eq!(r.normalizer, set(&p4, &["a", "b", "c"]));

        let jd = join_of_class(&p4, &class_containing(&p4, "a")).unwrap();
        assert!(matches!(ncz_of_maximal_join(&p4, &jd), Err(Error::NotMaximal(_))));

        let c5 = Graph::cycle(5);
        for cls in equivalence_classes(&c5).unwrap() {
            let jd = join_of_class(&c5, &cls).unwrap();
            ncz_of_maximal_join(&c5, &jd).unwrap();
        }
    }

    #[test]
    fn adjacent_intersections() {
        let p4 = Graph::path(4);
        let jb = join_of_class(&p4, &class_containing(&p4, "b")).unwrap();
        let jc = join_of_class(&p4, &class_containing(&p4, "c")).unwrap();
        let (jvw, r) = adjacent_join_intersection(&p4, &jb, &jc).unwrap();
        assert_eq!(jvw, set(&p4, &["b", "c"]));
        assert_eq!(r.center, set(&p4, &["b", "c"]));

        let square = Graph::cycle(4);
        let ja = join_of_class(&square, &class_containing(&square, "a")).unwrap();
        let jb = join_of_class(&square, &class_containing(&square, "b")).unwrap();
        let (jvw, r) = adjacent_join_intersection(&square, &ja, &jb).unwrap();
        assert_eq!(jvw, square.all());
        assert!(r.center.is_empty());

        let c5 = Graph::cycle(5);
        let ja = join_of_class(&c5, &class_containing(&c5, "a")).unwrap();
        let jc = join_of_class(&c5, &class_containing(&c5, "c")).unwrap();
        assert!(matches!(
            adjacent_join_intersection(&c5, &ja, &jc),
            Err(Error::NotAdjacent(..))
        ));
    }

    #[test]
    fn brute_centralizer_examples() {
        let p3 = Graph::path(3);
        let found: Vec<String> = brute_centralizer(&p3, set(&p3, &["a", "c"]), 2)
            .iter()
            .map(|x| x.to_text(&p3))
            .collect();
        assert_eq!(found, vec!["", "b", "b^-1", "b b", "b^-1 b^-1"]);
        assert_eq!(
            brute_centralizer(&p3, VertexSet::EMPTY, 2).len(),
            enumerate_ball(&p3, 2).len()
        );
        let f2 = Graph::discrete(2);
        let powers = brute_centralizer(&f2, set(&f2, &["a"]), 2);
        assert_eq!(powers.len(), 5);
        assert!(powers.iter().all(|x| x.support().is_subset(set(&f2, &["a"]))));
    }
}
