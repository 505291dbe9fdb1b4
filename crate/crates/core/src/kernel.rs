//! The kernel `K` of the restriction maps, its invariant `f = ∏ f_v`, leaf
//! transvections and the kernel `K_P` of the projection maps, and the
//! decomposition used when Γ₀ is a single vertex.

use crate::automorphism::{abelianization_matrix, evaluate_word, Automorphism, GenLetter, GeneratorSpec};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::joins::join_of_class;
use crate::order::{class_poset, gamma_zero, ClassKind, GammaZero, VertexClass};
use crate::projection::{assemble_rp, conjugator_on};
use crate::words::{abelianize, Word};
use crate::IntVector;

/// `f_v` for every maximal class, in the vertex order of Γ₀.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelVector {
    pub parts: Vec<KernelPart>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelPart {
    pub class: VertexClass,
    /// Conjugator by which the canonical representative acts on `J_[v]`.
    pub conjugator: Word,
    /// Abelianized conjugator, zero on the members of the class.
    pub f: IntVector,
}

impl KernelVector {
    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(|p| p.f.is_zero())
    }

    /// Entrywise sum; both sides must come from the same graph.
    pub fn add(&self, other: &KernelVector) -> KernelVector {
        KernelVector {
            parts: self
                .parts
                .iter()
                .zip(&other.parts)
                .map(|(a, b)| KernelPart {
                    class: a.class.clone(),
                    conjugator: Word::empty(),
                    f: a.f.clone() + b.f.clone(),
                })
                .collect(),
        }
    }

    pub fn values(&self) -> Vec<&IntVector> {
        self.parts.iter().map(|p| &p.f).collect()
    }
}

fn not_in_kernel(g: &Graph, cls: &VertexClass) -> Error {
    Error::NotInKernel(format!("does not act by conjugation on the join of {}", cls.format(g)))
}

fn conjugator_on_join(g: &Graph, f: &Automorphism, cls: &VertexClass) -> Result<Word> {
    let jd = join_of_class(g, cls)?;
    conjugator_on(g, f, jd.join).ok_or_else(|| not_in_kernel(g, cls))
}

/// Maximal class used as the base point of canonical representatives: the
/// least free maximal class, or else the least adjacent pair in Γ₀.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaseChoice {
    Free(usize),
    Pair(usize, usize),
}

pub fn base_choice(g0: &GammaZero) -> Result<BaseChoice> {
    if g0.len() < 2 {
        return Err(Error::SingletonGammaZero);
    }
    if let Some(i) = g0.classes.iter().position(|c| c.kind == ClassKind::Free) {
        return Ok(BaseChoice::Free(i));
    }
    let &(y, z) = g0
        .edges
        .first()
        .ok_or_else(|| Error::Internal("graph of maximal classes has no edges".into()))?;
    Ok(BaseChoice::Pair(y, z))
}

/// The representative of the outer class of `f` singled out by the base choice:
/// identity on `J_[y]`, and in the all-abelian case acting on `J_[z]` by an
/// element of `A_{L_[y]}`.
pub fn canonicalize(g: &Graph, f: &Automorphism) -> Result<Automorphism> {
    let g0 = gamma_zero(g)?;
    let choice = base_choice(&g0)?;
    let y = match choice {
        BaseChoice::Free(y) | BaseChoice::Pair(y, _) => &g0.classes[y],
    };
    let gy = conjugator_on_join(g, f, y)?;
    let phi_y = Automorphism::inner(g, &gy.inverse()).compose(g, f)?;
    let BaseChoice::Pair(_, z) = choice else {
        return Ok(phi_y);
    };
    let z = &g0.classes[z];
    let a = conjugator_on_join(g, &phi_y, z)?;
    let (jy, jz) = (join_of_class(g, y)?, join_of_class(g, z)?);
    let common = jy.link_part & jz.link_part;
    let allowed = y.members | z.members | (common & g.perp(common));
    if !a.letter_set().is_subset(allowed) {
        return Err(Error::Irreconcilable(format!(
            "conjugator `{}` on the join of {} leaves {}",
            a.to_text(g),
            z.format(g),
            g.format_set(allowed)
        )));
    }
    // letters of `a` commute pairwise, so its [y]-part splits off
    let r = a.delete(g.all() - y.members);
    Automorphism::inner(g, &r.inverse()).compose(g, &phi_y)
}

/// Canonical representative of a word in the generators that lies in `K`.
pub fn canonical_representative(g: &Graph, word: &[GenLetter]) -> Result<Automorphism> {
    let g0 = gamma_zero(g)?;
    base_choice(&g0)?;
    let f = evaluate_word(g, word)?;
    for cls in &g0.classes {
        conjugator_on_join(g, &f, cls)?;
    }
    canonicalize(g, &f)
}

/// `f_v(φ)`: the abelianized conjugator of the canonical representative on
/// each maximal join, with the coordinates of `[v]` dropped.
pub fn kernel_f(g: &Graph, word: &[GenLetter]) -> Result<KernelVector> {
    let f = evaluate_word(g, word)?;
    kernel_f_of(g, &f)
}

pub fn kernel_f_of(g: &Graph, f: &Automorphism) -> Result<KernelVector> {
    let g0 = gamma_zero(g)?;
    let rep = if g0.len() < 2 {
        // one maximal join, and it is all of Γ: K is trivial in Out
        let cls = &g0.classes[0];
        conjugator_on_join(g, f, cls)?;
        Automorphism::identity(g.len())
    } else {
        for cls in &g0.classes {
            conjugator_on_join(g, f, cls)?;
        }
        canonicalize(g, f)?
    };
    let parts = g0
        .classes
        .iter()
        .map(|cls| {
            let conjugator = conjugator_on_join(g, &rep, cls)?;
            let f = abelianize(g, &conjugator).restrict(g.all() - cls.members);
            Ok(KernelPart {
                class: cls.clone(),
                conjugator,
                f,
            })
        })
        .collect::<Result<_>>()?;
    Ok(KernelVector { parts })
}

/// A class `[v]` whose `L_[v]` contains exactly one maximal class `[w]`, with
/// `[v] < [w]`; `[w]` is then abelian.
pub fn leaf_like_vertices(g: &Graph) -> Result<Vec<(VertexClass, VertexClass)>> {
    let poset = class_poset(g)?;
    let maximal = poset.maximal();
    let mut out = Vec::new();
    for (i, cls) in poset.classes.iter().enumerate() {
        let l = join_of_class(g, cls)?.link_part;
        let inside: Vec<usize> = maximal
            .iter()
            .copied()
            .filter(|&m| poset.classes[m].members.is_subset(l))
            .collect();
        if let [w] = inside[..] {
            if poset.lt(i, w) {
                let partner = poset.classes[w].clone();
                if !partner.is_abelian() {
                    return Err(Error::Internal(format!(
                        "leaf-like {} pairs with the free class {}",
                        cls.format(g),
                        partner.format(g)
                    )));
                }
                out.push((cls.clone(), partner));
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LeafTransvection {
    pub v: Vertex,
    pub w: Vertex,
}

impl LeafTransvection {
    pub fn spec(&self) -> GeneratorSpec {
        GeneratorSpec::Transvection { v: self.v, w: self.w }
    }

    pub fn describe(&self, g: &Graph) -> String {
        self.spec().describe(g)
    }
}

pub fn leaf_transvections(g: &Graph) -> Result<Vec<LeafTransvection>> {
    let mut out = Vec::new();
    for (cls, partner) in leaf_like_vertices(g)? {
        for v in cls.members {
            for w in partner.members {
                out.push(LeafTransvection { v, w });
            }
        }
    }
    out.sort();
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KPMembership {
    /// Every projection is trivial and no leaf transvection is involved.
    InK { f: KernelVector },
    /// `φ = (∏ t^c) · κ` with `κ ∈ K`.
    InKPViaLeafPart {
        leaf_part: Vec<(LeafTransvection, i64)>,
        f: KernelVector,
    },
    /// Certified outside `K_P`; the string names the witness.
    Outside { witness: String },
    /// Every projection is inner and the abelianization matches a leaf part,
    /// yet the remainder is not in `K`. This would contradict the generation
    /// of `K_P` by `K` and the leaf transvections.
    NotDetected { reason: String },
}

/// Membership in `K_P`. Inner-ness of projections is decided exactly, so
/// "outside" always carries a certificate.
pub fn check_kp_membership(g: &Graph, word: &[GenLetter]) -> Result<KPMembership> {
    let g0 = gamma_zero(g)?;
    if g0.len() < 2 {
        // P is the projection to L_[v]; handled by the singleton decomposition
        return Err(Error::SingletonGammaZero);
    }
    let f = evaluate_word(g, word)?;
    for action in assemble_rp(g, word)? {
        let p = &action.projection.local;
        if p.inner_conjugator(g).is_some() {
            continue;
        }
        let moved_on_h1 = p
            .domain
            .iter()
            .find(|&u| abelianize(g, &p.map.image(u).to_word()) != abelianize(g, &Word::gen(u)));
        return Ok(match moved_on_h1 {
            Some(u) => KPMembership::Outside {
                witness: format!(
                    "projection to {} moves `{}` to `{}` in the abelianization",
                    g.format_set(p.domain),
                    g.name(u),
                    p.map.image(u).to_text(g)
                ),
            },
            None => KPMembership::Outside {
                witness: format!("projection to {} is not inner", g.format_set(p.domain)),
            },
        });
    }

    // leaf transvections add columns w to v; everything in K is trivial on H_1
    let m = abelianization_matrix(g, &f)?;
    let leaves = leaf_transvections(g)?;
    let leaf_part: Vec<(LeafTransvection, i64)> = leaves
        .iter()
        .map(|t| (*t, *m.get(t.w, t.v)))
        .filter(|(_, c)| *c != 0)
        .collect();
    let mut remainder = Vec::new();
    for (t, c) in &leaf_part {
        let letter = if *c > 0 {
            GenLetter::inv(t.spec())
        } else {
            GenLetter::new(t.spec())
        };
        remainder.extend(std::iter::repeat_n(letter, c.unsigned_abs() as usize));
    }
    remainder.extend_from_slice(word);
    let rest = evaluate_word(g, &remainder)?;
    let rest_m = abelianization_matrix(g, &rest)?;
    if rest_m != crate::IntMatrix::identity(g.len()) {
        return Ok(KPMembership::Outside {
            witness: "abelianized action is not a product of leaf transvections".into(),
        });
    }
    match kernel_f_of(g, &rest) {
        Ok(kf) if leaf_part.is_empty() => Ok(KPMembership::InK { f: kf }),
        Ok(kf) => Ok(KPMembership::InKPViaLeafPart { leaf_part, f: kf }),
        Err(Error::NotInKernel(reason)) => Ok(KPMembership::NotDetected { reason }),
        Err(e) => Err(e),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingletonDecomposition {
    /// Basis `t(u, w)` of the transvection subgroup, `u ∈ L_[v]`, `w ∈ [v]`.
    pub transvections: Vec<LeafTransvection>,
    pub class: VertexClass,
    pub link_part: VertexSet,
}

pub fn singleton_decomposition(g: &Graph) -> Result<SingletonDecomposition> {
    let g0 = gamma_zero(g)?;
    if g0.len() != 1 {
        return Err(Error::NotSingleton(g0.len()));
    }
    let class = g0.classes[0].clone();
    if !class.is_abelian() {
        return Err(Error::Internal(format!(
            "the only maximal class {} is free",
            class.format(g)
        )));
    }
    let jd = join_of_class(g, &class)?;
    if jd.join != g.all() {
        return Err(Error::Internal(format!(
            "the only maximal join {} is not the whole graph",
            g.format_set(jd.join)
        )));
    }
    let transvections = jd
        .link_part
        .iter()
        .flat_map(|u| class.members.iter().map(move |w| LeafTransvection { v: u, w }))
        .collect();
    Ok(SingletonDecomposition {
        transvections,
        class,
        link_part: jd.link_part,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pc(g: &Graph, v: &str, comp: &[&str]) -> GenLetter {
        GenLetter::new(GeneratorSpec::PartialConjugation {
            v: g.vertex(v).unwrap(),
            component: g.set_of(comp).unwrap(),
        })
    }

    fn names(g: &Graph, ts: &[LeafTransvection]) -> Vec<String> {
        ts.iter().map(|t| t.describe(g)).collect()
    }

    #[test]
    fn leaf_like_examples() {
        let p4 = Graph::path(4);
        let pairs: Vec<(String, String)> = leaf_like_vertices(&p4)
            .unwrap()
            .iter()
            .map(|(a, b)| (a.format(&p4), b.format(&p4)))
            .collect();
        assert_eq!(pairs, vec![("{a}".into(), "{b}".into()), ("{d}".into(), "{c}".into())]);
        assert_eq!(names(&p4, &leaf_transvections(&p4).unwrap()), vec!["t(a,b)", "t(d,c)"]);
        let p3 = Graph::path(3);
        assert_eq!(names(&p3, &leaf_transvections(&p3).unwrap()), vec!["t(a,b)", "t(c,b)"]);
        assert!(leaf_transvections(&Graph::complete(4)).unwrap().is_empty());
    }

    #[test]
    fn inner_elements_have_zero_invariant() {
        let p4 = Graph::path(4);
        // Γ - st(b) = {d}, so this partial conjugation is conjugation by b
        let pi_b = pc(&p4, "b", &["d"]);
        let f = kernel_f(&p4, std::slice::from_ref(&pi_b)).unwrap();
        assert!(f.is_zero());
        assert!(canonical_representative(&p4, &[pi_b.clone(), pi_b])
            .unwrap()
            .is_identity());
        assert!(kernel_f(&p4, &[]).unwrap().is_zero());
    }

    #[test]
    fn nontrivial_kernel_element() {
        // in P6 conjugating {a,b} by d is outer but acts on every maximal join by conjugation
        let p6 = Graph::path(6);
        let x = pc(&p6, "d", &["a", "b"]);
        let f1 = kernel_f(&p6, std::slice::from_ref(&x)).unwrap();
        assert!(!f1.is_zero());
        let f2 = kernel_f(&p6, &[x.clone(), x.clone()]).unwrap();
        assert_eq!(f2.values(), f1.add(&f1).values());
        let rep = canonical_representative(&p6, &[x]).unwrap();
        let again = canonicalize(&p6, &rep).unwrap();
        assert_eq!(rep, again);
    }

    #[test]
    fn non_kernel_elements_are_reported() {
        let p4 = Graph::path(4);
        let t = GenLetter::new(GeneratorSpec::Transvection { v: 0, w: 1 });
        assert!(matches!(kernel_f(&p4, &[t]), Err(Error::NotInKernel(_))));
    }

    #[test]
    fn kp_membership() {
        let p4 = Graph::path(4);
        let t = GenLetter::new(GeneratorSpec::Transvection { v: 0, w: 1 });
        match check_kp_membership(&p4, &[t]).unwrap() {
            KPMembership::InKPViaLeafPart { leaf_part, f } => {
                assert_eq!(leaf_part, vec![(LeafTransvection { v: 0, w: 1 }, 1)]);
                assert!(f.is_zero());
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            check_kp_membership(&p4, &[pc(&p4, "b", &["d"])]).unwrap(),
            KPMembership::InK { .. }
        ));
        let inv_b = GenLetter::new(GeneratorSpec::Inversion(1));
        assert!(matches!(
            check_kp_membership(&p4, &[inv_b]).unwrap(),
            KPMembership::Outside { .. }
        ));
    }

    #[test]
    fn singleton_examples() {
        let p3 = Graph::path(3);
        let d = singleton_decomposition(&p3).unwrap();
        assert_eq!(names(&p3, &d.transvections), vec!["t(a,b)", "t(c,b)"]);
        assert_eq!(d.class.format(&p3), "{b}");
        assert_eq!(p3.format_set(d.link_part), "{a,c}");

        let k3 = Graph::complete(3);
        let d = singleton_decomposition(&k3).unwrap();
        assert!(d.transvections.is_empty() && d.link_part.is_empty());

        let star = Graph::star_graph(3);
        let d = singleton_decomposition(&star).unwrap();
        assert_eq!(names(&star, &d.transvections), vec!["t(b,a)", "t(c,a)", "t(d,a)"]);

        assert_eq!(singleton_decomposition(&Graph::path(4)), Err(Error::NotSingleton(2)));
        assert!(matches!(
            canonical_representative(&p3, &[]),
            Err(Error::SingletonGammaZero)
        ));
    }
}
