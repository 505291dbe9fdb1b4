//! Automorphisms of `A_Γ` stored as generator images, and the standard
//! generating set: inversions, inner automorphisms, transvections `v ↦ vw`,
//! partial conjugations and graph symmetries.

mod serial;

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{symmetries, Graph, Vertex, VertexSet};
use crate::order::leq;
use crate::words::{abelianize, conjugate_by, enumerate_ball, nf, Letter, NormalForm, Word};
use crate::IntMatrix;

pub use serial::{automorphism_from_json, automorphism_to_json, AutomorphismDoc};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorSpec {
    /// `v ↦ v^-1`.
    Inversion(Vertex),
    /// `v ↦ vw`, defined when `v ≤ w`.
    Transvection { v: Vertex, w: Vertex },
    /// `u ↦ v u v^-1` for `u` in one component of `Γ - st(v)`.
    PartialConjugation { v: Vertex, component: VertexSet },
    /// `u ↦ v u v^-1` for every `u`.
    Inner(Vertex),
    /// Vertex permutation preserving adjacency; `perm[v]` is the image of `v`.
    Symmetry(Vec<Vertex>),
}

impl GeneratorSpec {
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let n = g.len();
        let check = |v: Vertex| if v < n { Ok(()) } else { Err(Error::VertexOutOfRange(v)) };
        let invalid = |msg: String| Err(Error::InvalidGenerator(msg));
        match self {
            GeneratorSpec::Inversion(v) | GeneratorSpec::Inner(v) => check(*v),
            GeneratorSpec::Transvection { v, w } => {
                check(*v)?;
                check(*w)?;
                if v == w || !leq(g, *v, *w) {
                    return invalid(format!("t({},{}) needs v <= w, v != w", g.name(*v), g.name(*w)));
                }
                Ok(())
            }
            GeneratorSpec::PartialConjugation { v, component } => {
                check(*v)?;
                g.check_set(*component)?;
                if !g.components_minus_star(*v).contains(component) {
                    return invalid(format!(
                        "{} is not a component of the complement of st({})",
                        g.format_set(*component),
                        g.name(*v)
                    ));
                }
                Ok(())
            }
            GeneratorSpec::Symmetry(perm) => {
                let image: VertexSet = perm.iter().copied().filter(|&v| v < n).collect();
                if perm.len() != n || image != g.all() {
                    return invalid(format!("{perm:?} is not a permutation of {n} vertices"));
                }
                if g.edges().any(|(u, v)| !g.adjacent(perm[u], perm[v])) {
                    return invalid(format!("{perm:?} does not preserve adjacency"));
                }
                Ok(())
            }
        }
    }

    /// Everything except graph symmetries.
    pub fn is_pure(&self) -> bool {
        !matches!(self, GeneratorSpec::Symmetry(_))
    }

    pub fn describe(&self, g: &Graph) -> String {
        match self {
            GeneratorSpec::Inversion(v) => format!("inv({})", g.name(*v)),
            GeneratorSpec::Transvection { v, w } => format!("t({},{})", g.name(*v), g.name(*w)),
            GeneratorSpec::PartialConjugation { v, component } => {
                format!("pc({},{})", g.name(*v), g.format_set(*component))
            }
            GeneratorSpec::Inner(v) => format!("inner({})", g.name(*v)),
            GeneratorSpec::Symmetry(perm) => {
                let parts: Vec<String> = perm
                    .iter()
                    .enumerate()
                    .filter(|(v, p)| v != *p)
                    .map(|(v, &p)| format!("{}->{}", g.name(v), g.name(p)))
                    .collect();
                format!("sym({})", parts.join(" "))
            }
        }
    }
}

/// A generator or its inverse, as a letter of a word in the generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GenLetter {
    pub spec: GeneratorSpec,
    pub inverse: bool,
}

impl GenLetter {
    pub fn new(spec: GeneratorSpec) -> Self {
        GenLetter { spec, inverse: false }
    }

    pub fn inv(spec: GeneratorSpec) -> Self {
        GenLetter { spec, inverse: true }
    }

    pub fn inverted(&self) -> Self {
        GenLetter {
            spec: self.spec.clone(),
            inverse: !self.inverse,
        }
    }

    pub fn describe(&self, g: &Graph) -> String {
        let s = self.spec.describe(g);
        if self.inverse {
            format!("{s}^-1")
        } else {
            s
        }
    }
}

/// Formats a generator word `s1 s2 ... sk`.
pub fn describe_word(g: &Graph, word: &[GenLetter]) -> String {
    if word.is_empty() {
        return "id".into();
    }
    word.iter().map(|l| l.describe(g)).collect::<Vec<_>>().join(" ")
}

/// An endomorphism of `A_Γ` given by the image of every generator, together
/// with the images defining its claimed inverse.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Automorphism {
    images: Vec<NormalForm>,
    inverse_images: Vec<NormalForm>,
}

impl fmt::Debug for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Automorphism")
            .field("images", &self.images)
            .field("inverse_images", &self.inverse_images)
            .finish()
    }
}

impl Automorphism {
    pub fn identity(n: usize) -> Self {
        let images: Vec<NormalForm> = (0..n)
            .map(|v| NormalForm::from_reduced_unchecked(vec![Letter::pos(v)]))
            .collect();
        Automorphism {
            inverse_images: images.clone(),
            images,
        }
    }

    /// Builds the map from explicit images; nothing beyond well-formedness is
    /// checked, see [`verify_automorphism`].
    pub fn from_images(g: &Graph, images: &[Word], inverse_images: &[Word]) -> Result<Self> {
        let n = g.len();
        for list in [images, inverse_images] {
            if list.len() != n {
                return Err(Error::NotAnAutomorphism(format!(
                    "expected {n} images, found {}",
                    list.len()
                )));
            }
            for w in list {
                w.check(g)?;
            }
        }
        Ok(Automorphism {
            images: images.iter().map(|w| nf(g, w.letters())).collect(),
            inverse_images: inverse_images.iter().map(|w| nf(g, w.letters())).collect(),
        })
    }

    /// Conjugation `x ↦ h x h^-1`.
    pub fn inner(g: &Graph, h: &Word) -> Self {
        let hinv = h.inverse();
        let conj = |k: &Word| {
            g.vertices()
                .map(|v| nf(g, conjugate_by(k, &Word::gen(v)).letters()))
                .collect()
        };
        Automorphism {
            images: conj(h),
            inverse_images: conj(&hinv),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn image(&self, v: Vertex) -> &NormalForm {
        &self.images[v]
    }

    pub fn inverse_image(&self, v: Vertex) -> &NormalForm {
        &self.inverse_images[v]
    }

    pub fn images(&self) -> &[NormalForm] {
        &self.images
    }

    pub fn inverse_images(&self) -> &[NormalForm] {
        &self.inverse_images
    }

    pub fn inverse(&self) -> Self {
        Automorphism {
            images: self.inverse_images.clone(),
            inverse_images: self.images.clone(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(v, w)| w.letters() == [Letter::pos(v)])
    }

    /// Letter-by-letter substitution, without reduction.
    pub fn apply(&self, w: &Word) -> Word {
        let mut out = Vec::new();
        for l in w.letters() {
            let img = self.images[l.gen].letters();
            if l.inv {
                out.extend(img.iter().rev().map(|x| x.inverse()));
            } else {
                out.extend_from_slice(img);
            }
        }
        Word::from_letters(out)
    }

    pub fn apply_nf(&self, g: &Graph, w: &Word) -> NormalForm {
        nf(g, self.apply(w).letters())
    }

    /// `self ∘ h`.
    pub fn compose(&self, g: &Graph, h: &Automorphism) -> Result<Automorphism> {
        for n in [self.len(), h.len()] {
            if n != g.len() {
                return Err(Error::GraphMismatch {
                    expected: format!("{} vertices", g.len()),
                    found: format!("{n} vertices"),
                });
            }
        }
        let inv_self = self.inverse();
        let inv_h = h.inverse();
        Ok(Automorphism {
            images: h.images.iter().map(|x| self.apply_nf(g, &x.to_word())).collect(),
            inverse_images: inv_self
                .images
                .iter()
                .map(|x| inv_h.apply_nf(g, &x.to_word()))
                .collect(),
        })
    }

    /// Same images on every vertex of `domain`.
    pub fn agrees_on(&self, other: &Automorphism, domain: VertexSet) -> bool {
        domain.iter().all(|v| self.images[v] == other.images[v])
    }

    /// Non-fixed generators as `a -> a b, ...`, or `id`.
    pub fn format(&self, g: &Graph) -> String {
        let moved: Vec<String> = self
            .images
            .iter()
            .enumerate()
            .filter(|(v, w)| w.letters() != [Letter::pos(*v)])
            .map(|(v, w)| format!("{} -> {}", g.name(v), w.to_text(g)))
            .collect();
        if moved.is_empty() {
            "id".into()
        } else {
            moved.join(", ")
        }
    }
}

/// `(f ∘ h)(v) = f(h(v))`.
pub fn compose(g: &Graph, f: &Automorphism, h: &Automorphism) -> Result<Automorphism> {
    f.compose(g, h)
}

/// Image of a word; fails on letters outside the domain.
pub fn apply(f: &Automorphism, w: &Word) -> Result<Word> {
    if let Some(l) = w.letters().iter().find(|l| l.gen >= f.len()) {
        return Err(Error::VertexOutOfRange(l.gen));
    }
    Ok(f.apply(w))
}

pub fn as_automorphism(g: &Graph, spec: &GeneratorSpec) -> Result<Automorphism> {
    spec.validate(g)?;
    let n = g.len();
    let id = Automorphism::identity(n);
    let mut images: Vec<Word> = id.images.iter().map(Word::from).collect();
    let mut inverse_images = images.clone();
    let conj = |c: Letter, u: Vertex| Word::from_letters(vec![c, Letter::pos(u), c.inverse()]);
    match spec {
        GeneratorSpec::Inversion(v) => {
            images[*v] = Word::from_letters(vec![Letter::neg(*v)]);
            inverse_images[*v] = images[*v].clone();
        }
        GeneratorSpec::Transvection { v, w } => {
            images[*v] = Word::from_letters(vec![Letter::pos(*v), Letter::pos(*w)]);
            inverse_images[*v] = Word::from_letters(vec![Letter::pos(*v), Letter::neg(*w)]);
        }
        GeneratorSpec::PartialConjugation { v, component } => {
            for u in *component {
                images[u] = conj(Letter::pos(*v), u);
                inverse_images[u] = conj(Letter::neg(*v), u);
            }
        }
        GeneratorSpec::Inner(v) => return Ok(Automorphism::inner(g, &Word::gen(*v))),
        GeneratorSpec::Symmetry(perm) => {
            for (v, &p) in perm.iter().enumerate() {
                images[v] = Word::gen(p);
                inverse_images[p] = Word::gen(v);
            }
        }
    }
    Automorphism::from_images(g, &images, &inverse_images)
}

pub fn letter_automorphism(g: &Graph, letter: &GenLetter) -> Result<Automorphism> {
    let f = as_automorphism(g, &letter.spec)?;
    Ok(if letter.inverse { f.inverse() } else { f })
}

/// The product `s1 ∘ s2 ∘ ... ∘ sk` of a word in the generators.
pub fn evaluate_word(g: &Graph, word: &[GenLetter]) -> Result<Automorphism> {
    let mut acc = Automorphism::identity(g.len());
    for letter in word {
        acc = acc.compose(g, &letter_automorphism(g, letter)?)?;
    }
    Ok(acc)
}

/// Failures found by [`verify_automorphism`]; empty lists mean success.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    /// Edges `{u, v}` whose images do not commute.
    pub relation_failures: Vec<(Vertex, Vertex)>,
    /// Same for the inverse map.
    pub inverse_relation_failures: Vec<(Vertex, Vertex)>,
    /// Generators `v` with `φ(φ^-1(v)) ≠ v` or `φ^-1(φ(v)) ≠ v`.
    pub inverse_failures: Vec<Vertex>,
    pub size_mismatch: bool,
}

impl VerificationReport {
    pub fn is_ok(&self) -> bool {
        self.relation_failures.is_empty()
            && self.inverse_relation_failures.is_empty()
            && self.inverse_failures.is_empty()
            && !self.size_mismatch
    }

    pub fn describe(&self, g: &Graph) -> String {
        if self.is_ok() {
            return "ok".into();
        }
        let edges = |list: &[(Vertex, Vertex)]| {
            list.iter()
                .map(|&(u, v)| format!("{}-{}", g.name(u), g.name(v)))
                .collect::<Vec<_>>()
                .join(", ")
        };
        let mut parts = Vec::new();
        if self.size_mismatch {
            parts.push("image count differs from vertex count".to_string());
        }
        if !self.relation_failures.is_empty() {
            parts.push(format!("relations broken on {}", edges(&self.relation_failures)));
        }
        if !self.inverse_relation_failures.is_empty() {
            parts.push(format!(
                "inverse breaks relations on {}",
                edges(&self.inverse_relation_failures)
            ));
        }
        if !self.inverse_failures.is_empty() {
            let vs: Vec<&str> = self.inverse_failures.iter().map(|&v| g.name(v)).collect();
            parts.push(format!("inverse fails at {}", vs.join(", ")));
        }
        parts.join("; ")
    }
}

fn broken_relations(g: &Graph, f: &Automorphism) -> Vec<(Vertex, Vertex)> {
    g.edges()
        .filter(|&(u, v)| {
            let (x, y) = (f.image(u).to_word(), f.image(v).to_word());
            nf(g, x.mul(&y).letters()) != nf(g, y.mul(&x).letters())
        })
        .collect()
}

/// Checks that images respect every commutation relation, in both directions,
/// and that the stored inverse really inverts.
pub fn verify_automorphism(g: &Graph, f: &Automorphism) -> VerificationReport {
    let out_of_range = f
        .images
        .iter()
        .chain(&f.inverse_images)
        .any(|w| w.letters().iter().any(|l| l.gen >= g.len()));
    if f.len() != g.len() || out_of_range {
        return VerificationReport {
            size_mismatch: true,
            ..Default::default()
        };
    }
    let inv = f.inverse();
    let inverse_failures = g
        .vertices()
        .filter(|&v| {
            let x = Word::gen(v);
            let fx = f.apply_nf(g, &inv.apply(&x));
            let xf = inv.apply_nf(g, &f.apply(&x));
            fx.letters() != [Letter::pos(v)] || xf.letters() != [Letter::pos(v)]
        })
        .collect();
    VerificationReport {
        relation_failures: broken_relations(g, f),
        inverse_relation_failures: broken_relations(g, &inv),
        inverse_failures,
        size_mismatch: false,
    }
}

/// Action on `Z^V`: column `v` is the abelianized image of `v`.
pub fn abelianization_matrix(g: &Graph, f: &Automorphism) -> Result<IntMatrix> {
    let m = IntMatrix::from_columns(f.images.iter().map(|w| abelianize(g, &w.to_word())).collect());
    if m.is_unimodular() {
        Ok(m)
    } else {
        Err(Error::NotAnAutomorphism(format!(
            "abelianized determinant is {}",
            m.determinant()
        )))
    }
}

/// First `h` of the ball, in its canonical order, with `f(v) = h v h^-1` for
/// all `v`. `None` only means nothing was found within `radius`.
pub fn is_inner_bounded(g: &Graph, f: &Automorphism, radius: usize) -> Option<Word> {
    // inner automorphisms act trivially on the abelianization
    let trivial_on_h1 = g
        .vertices()
        .all(|v| abelianize(g, &f.image(v).to_word()) == abelianize(g, &Word::gen(v)));
    if !trivial_on_h1 {
        return None;
    }
    enumerate_ball(g, radius).into_iter().find_map(|h| {
        let h = h.to_word();
        g.vertices()
            .all(|v| &nf(g, conjugate_by(&h, &Word::gen(v)).letters()) == f.image(v))
            .then_some(h)
    })
}

pub fn enumerate_graph_symmetries(g: &Graph) -> Vec<Vec<Vertex>> {
    symmetries(g)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurenceGenerators {
    /// Inversions, inner automorphisms, transvections, partial conjugations, in that order.
    pub pure: Vec<GeneratorSpec>,
    /// Non-identity graph symmetries.
    pub symmetries: Vec<GeneratorSpec>,
}

impl LaurenceGenerators {
    pub fn count<F: Fn(&GeneratorSpec) -> bool>(&self, pred: F) -> usize {
        self.pure.iter().filter(|s| pred(s)).count()
    }

    pub fn inversions(&self) -> usize {
        self.count(|s| matches!(s, GeneratorSpec::Inversion(_)))
    }

    pub fn inners(&self) -> usize {
        self.count(|s| matches!(s, GeneratorSpec::Inner(_)))
    }

    pub fn transvections(&self) -> usize {
        self.count(|s| matches!(s, GeneratorSpec::Transvection { .. }))
    }

    pub fn partial_conjugations(&self) -> usize {
        self.count(|s| matches!(s, GeneratorSpec::PartialConjugation { .. }))
    }
}

pub fn enumerate_laurence_generators(g: &Graph) -> LaurenceGenerators {
    let mut pure: Vec<GeneratorSpec> = g.vertices().map(GeneratorSpec::Inversion).collect();
    pure.extend(g.vertices().map(GeneratorSpec::Inner));
    for v in g.vertices() {
        for w in g.vertices() {
            if v != w && leq(g, v, w) {
                pure.push(GeneratorSpec::Transvection { v, w });
            }
        }
    }
    for v in g.vertices() {
        for component in g.components_minus_star(v) {
            pure.push(GeneratorSpec::PartialConjugation { v, component });
        }
    }
    let symmetries = symmetries(g)
        .into_iter()
        .filter(|p| p.iter().enumerate().any(|(v, &q)| v != q))
        .map(GeneratorSpec::Symmetry)
        .collect();
    LaurenceGenerators { pure, symmetries }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(g: &Graph, s: &str) -> Word {
        Word::parse(g, s).unwrap()
    }

    fn t(v: Vertex, w: Vertex) -> GeneratorSpec {
        GeneratorSpec::Transvection { v, w }
    }

    #[test]
    fn generator_counts() {
        let k4 = Graph::complete(4);
        let gens = enumerate_laurence_generators(&k4);
        assert_eq!(gens.transvections(), 12);
        assert_eq!(gens.inversions(), 4);
        assert_eq!(gens.partial_conjugations(), 0);
        assert_eq!(gens.symmetries.len(), 23);

        let p4 = Graph::path(4);
        let gens = enumerate_laurence_generators(&p4);
        let descr: Vec<String> = gens
            .pure
            .iter()
            .filter(|s| !matches!(s, GeneratorSpec::Inversion(_) | GeneratorSpec::Inner(_)))
            .map(|s| s.describe(&p4))
            .collect();
        assert_eq!(
            descr,
            vec![
                "t(a,b)",
                "t(a,c)",
                "t(d,b)",
                "t(d,c)",
                "pc(a,{c,d})",
                "pc(b,{d})",
                "pc(c,{a})",
                "pc(d,{a,b})"
            ]
        );
        assert_eq!(gens.symmetries.len(), 1);

        let f2 = Graph::discrete(2);
        let gens = enumerate_laurence_generators(&f2);
        assert_eq!((gens.transvections(), gens.inversions(), gens.inners()), (2, 2, 2));
        assert_eq!(gens.partial_conjugations(), 2);
    }

    #[test]
    fn every_generator_verifies() {
        for g in [
            Graph::path(4),
            Graph::cycle(5),
            Graph::complete(3),
            Graph::star_graph(3),
        ] {
            let gens = enumerate_laurence_generators(&g);
            for s in gens.pure.iter().chain(&gens.symmetries) {
                let f = as_automorphism(&g, s).unwrap();
                assert!(verify_automorphism(&g, &f).is_ok(), "{}", s.describe(&g));
                assert!(abelianization_matrix(&g, &f).is_ok());
            }
        }
    }

    #[test]
    fn invalid_specs_are_rejected() {
        let p4 = Graph::path(4);
        assert!(as_automorphism(&p4, &t(1, 0)).is_err());
        assert!(as_automorphism(&p4, &t(0, 0)).is_err());
        let bogus = GeneratorSpec::PartialConjugation {
            v: 1,
            component: VertexSet::single(0),
        };
        assert!(as_automorphism(&p4, &bogus).is_err());
        assert!(as_automorphism(&p4, &GeneratorSpec::Symmetry(vec![1, 0, 2, 3])).is_err());
        assert!(as_automorphism(&p4, &GeneratorSpec::Symmetry(vec![3, 2, 1, 0])).is_ok());
    }

    #[test]
    fn transvection_images() {
        let p4 = Graph::path(4);
        let f = as_automorphism(&p4, &t(0, 1)).unwrap();
        assert_eq!(f.format(&p4), "a -> a b");
        assert_eq!(f.apply(&w(&p4, "a^-1")).to_text(&p4), "b^-1 a^-1");
        let ff = f.compose(&p4, &f).unwrap();
        assert_eq!(ff.image(0).to_text(&p4), "a b b");
        let pc = as_automorphism(
            &p4,
            &GeneratorSpec::PartialConjugation {
                v: 1,
                component: VertexSet::single(3),
            },
        )
        .unwrap();
        assert_eq!(pc.format(&p4), "d -> b d b^-1");
    }

    #[test]
    fn composition_and_inverses() {
        let p4 = Graph::path(4);
        let inv = as_automorphism(&p4, &GeneratorSpec::Inversion(0)).unwrap();
        assert!(inv.compose(&p4, &inv).unwrap().is_identity());
        let f = as_automorphism(&p4, &t(0, 2)).unwrap();
        assert_eq!(f.compose(&p4, &Automorphism::identity(4)).unwrap(), f);
        assert!(f.compose(&p4, &f.inverse()).unwrap().is_identity());
        assert!(f.compose(&p4, &Automorphism::identity(3)).is_err());
    }

    #[test]
    fn verification_catches_bad_maps() {
        let k2 = Graph::complete(2);
        let collapse =
            Automorphism::from_images(&k2, &[w(&k2, "b"), w(&k2, "b")], &[w(&k2, "a"), w(&k2, "b")]).unwrap();
        assert!(!verify_automorphism(&k2, &collapse).inverse_failures.is_empty());

        let p3 = Graph::path(3);
        let swap = Automorphism::from_images(
            &p3,
            &[w(&p3, "b"), w(&p3, "a"), w(&p3, "c")],
            &[w(&p3, "b"), w(&p3, "a"), w(&p3, "c")],
        )
        .unwrap();
        let report = verify_automorphism(&p3, &swap);
        assert_eq!(report.relation_failures, vec![(1, 2)]);
        assert!(!report.is_ok());
    }

    #[test]
    fn abelianization_matrices() {
        let p4 = Graph::path(4);
        let m = abelianization_matrix(&p4, &as_automorphism(&p4, &t(0, 1)).unwrap()).unwrap();
        assert_eq!(*m.get(1, 0), 1);
        assert_eq!(m.determinant(), 1);
        let m = abelianization_matrix(&p4, &as_automorphism(&p4, &GeneratorSpec::Inversion(2)).unwrap()).unwrap();
        assert_eq!(*m.get(2, 2), -1);
        assert_eq!(m.determinant(), -1);
        let m = abelianization_matrix(&p4, &as_automorphism(&p4, &GeneratorSpec::Inner(1)).unwrap()).unwrap();
        assert_eq!(m, IntMatrix::identity(4));
    }

    #[test]
    fn bounded_inner_search() {
        let p4 = Graph::path(4);
        let inner = as_automorphism(&p4, &GeneratorSpec::Inner(0)).unwrap();
        let h = is_inner_bounded(&p4, &inner, 2).unwrap();
        assert_eq!(Automorphism::inner(&p4, &h), inner);
        assert!(is_inner_bounded(&p4, &Automorphism::identity(4), 2).unwrap().is_empty());
        let inv = as_automorphism(&p4, &GeneratorSpec::Inversion(0)).unwrap();
        assert!(is_inner_bounded(&p4, &inv, 3).is_none());
    }

    #[test]
    fn words_in_generators() {
        let p4 = Graph::path(4);
        let word = vec![GenLetter::new(t(0, 1)), GenLetter::inv(t(0, 1))];
        assert!(evaluate_word(&p4, &word).unwrap().is_identity());
        assert_eq!(describe_word(&p4, &word), "t(a,b) t(a,b)^-1");
    }
}
