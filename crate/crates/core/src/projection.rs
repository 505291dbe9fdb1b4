//! Restriction to maximal joins and projection to their link parts.
//!
//! An element of the pure group is handed over as a word in generators. For a
//! maximal class `[v]` each generator is replaced by a representative that
//! preserves both `A_[v]` and `A_{J_[v]}`; the product of these is restricted to
//! `J_[v]` (the map `R_[v]`) or pushed down to `A_{L_[v]} = A_{J_[v]} / A_[v]`
//! (the map `P_[v]`).

use crate::automorphism::{evaluate_word, letter_automorphism, Automorphism, GenLetter, GeneratorSpec};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::joins::{join_of_class, JoinData};
use crate::order::{class_poset, gamma_zero, VertexClass};
use crate::words::{abelianize, common_conjugator, nf, Letter, NormalForm, Word};

/// An automorphism of a special subgroup `A_D`, stored as a map on all of `V`
/// whose images of vertices in `D` are supported in `D`. Vertices outside `D`
/// carry no meaning.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalAutomorphism {
    pub domain: VertexSet,
    pub map: Automorphism,
}

impl LocalAutomorphism {
    pub fn images(&self) -> Vec<(Vertex, NormalForm)> {
        self.domain.iter().map(|v| (v, self.map.image(v).clone())).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.domain
            .iter()
            .all(|v| self.map.image(v).letters() == [Letter::pos(v)])
    }

    /// `self ∘ other` on the common domain.
    pub fn compose(&self, g: &Graph, other: &LocalAutomorphism) -> Result<LocalAutomorphism> {
        if self.domain != other.domain {
            return Err(Error::Internal(format!(
                "composing maps on {} and {}",
                g.format_set(self.domain),
                g.format_set(other.domain)
            )));
        }
        Ok(LocalAutomorphism {
            domain: self.domain,
            map: self.map.compose(g, &other.map)?,
        })
    }

    pub fn inverse(&self) -> LocalAutomorphism {
        LocalAutomorphism {
            domain: self.domain,
            map: self.map.inverse(),
        }
    }

    /// `h ∈ A_D` with `self(u) = h u h^-1` for all `u ∈ D`, if one is found.
    pub fn inner_conjugator(&self, g: &Graph) -> Option<Word> {
        let h = conjugator_on(g, &self.map, self.domain)?;
        Some(retract(g, &h, self.domain))
    }

    /// Equality in `Out(A_D)`: `self ∘ other^-1` is inner.
    pub fn out_equal(&self, g: &Graph, other: &LocalAutomorphism) -> Result<bool> {
        Ok(self.compose(g, &other.inverse())?.inner_conjugator(g).is_some())
    }

    pub fn format(&self, g: &Graph) -> String {
        let moved: Vec<String> = self
            .images()
            .into_iter()
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

/// The image of a word under `A_Γ → A_D`, deleting letters outside `D`.
pub fn retract(g: &Graph, w: &Word, domain: VertexSet) -> Word {
    nf(g, w.delete(g.all() - domain).letters()).into()
}

/// Finds `h ∈ A_Γ` with `f(u) = h u h^-1` for every `u ∈ domain`.
///
/// The answer is exact. Conjugators of a single generator `u` form a coset
/// `c·A_st(u)`, and two such cosets meet iff their quotient splits in the
/// double coset, which greedy peeling decides.
pub fn conjugator_on(g: &Graph, f: &Automorphism, domain: VertexSet) -> Option<Word> {
    let trivial_on_h1 = domain
        .iter()
        .all(|u| abelianize(g, &f.image(u).to_word()) == abelianize(g, &Word::gen(u)));
    if !trivial_on_h1 {
        return None;
    }
    let pairs: Vec<(Vertex, NormalForm)> = domain.iter().map(|u| (u, f.image(u).clone())).collect();
    common_conjugator(g, &pairs)
}

fn maximal_join(g: &Graph, cls: &VertexClass) -> Result<JoinData> {
    let poset = class_poset(g)?;
    match poset.index_of(cls) {
        Some(i) if poset.is_maximal(i) => join_of_class(g, cls),
        Some(_) => Err(Error::NotMaximal(cls.format(g))),
        None => Err(Error::ForeignClass(cls.format(g))),
    }
}

/// Inner correction `h` such that `c(h) ∘ s` preserves `A_[v]` and `A_J`.
fn correction(spec: &GeneratorSpec, jd: &JoinData, g: &Graph) -> Result<Word> {
    Ok(match spec {
        GeneratorSpec::Inner(x) => Word::from_letters(vec![Letter::neg(*x)]),
        GeneratorSpec::PartialConjugation { v: w, component }
            if !jd.join.contains(*w) && !(*component & jd.join).is_empty() =>
        {
            Word::from_letters(vec![Letter::neg(*w)])
        }
        GeneratorSpec::Symmetry(_) => {
            return Err(Error::InvalidGenerator(format!(
                "{} is not in the pure group",
                spec.describe(g)
            )))
        }
        _ => Word::empty(),
    })
}

fn check_preserves(g: &Graph, f: &Automorphism, jd: &JoinData) -> Result<()> {
    for (set, what) in [(jd.class.members, "class"), (jd.join, "join")] {
        for u in set {
            for img in [f.image(u), f.inverse_image(u)] {
                if !img.support().is_subset(set) {
                    return Err(Error::Internal(format!(
                        "representative sends `{}` to `{}` outside the {what} {}",
                        g.name(u),
                        img.to_text(g),
                        g.format_set(set)
                    )));
                }
            }
        }
    }
    Ok(())
}

/// A representative of the outer class of `word` preserving `A_[v]` and
/// `A_{J_[v]}`, with `h` such that it equals `c(h) ∘ word`.
pub fn preserving_representative(g: &Graph, word: &[GenLetter], cls: &VertexClass) -> Result<(Automorphism, Word)> {
    let jd = maximal_join(g, cls)?;
    let mut h_total = Word::empty();
    let mut product = Automorphism::identity(g.len());
    for letter in word {
        let s = letter_automorphism(g, letter)?;
        let mut h = correction(&letter.spec, &jd, g)?;
        if letter.inverse {
            // (c(h) s)^-1 = s^-1 c(h^-1) = c(s^-1(h^-1)) s^-1
            h = s.apply(&h.inverse());
        }
        h_total = h_total.mul(&product.apply(&h));
        product = product.compose(g, &s)?;
    }
    let h_total: Word = nf(g, h_total.letters()).into();
    let full = Automorphism::inner(g, &h_total).compose(g, &product)?;
    check_preserves(g, &full, &jd)?;
    Ok((full, h_total))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictedAutomorphism {
    pub class: VertexClass,
    /// Domain `J_[v]`.
    pub local: LocalAutomorphism,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectedAutomorphism {
    pub base: VertexClass,
    /// Domain `L_[v]`.
    pub local: LocalAutomorphism,
}

pub fn restrict_r(g: &Graph, word: &[GenLetter], cls: &VertexClass) -> Result<RestrictedAutomorphism> {
    let jd = maximal_join(g, cls)?;
    let (full, _) = preserving_representative(g, word, cls)?;
    Ok(RestrictedAutomorphism {
        class: cls.clone(),
        local: LocalAutomorphism {
            domain: jd.join,
            map: full,
        },
    })
}

/// Kills the letters of `[v]` in the images of `L_[v]`.
pub fn project_p(g: &Graph, word: &[GenLetter], cls: &VertexClass) -> Result<ProjectedAutomorphism> {
    let jd = maximal_join(g, cls)?;
    let (full, _) = preserving_representative(g, word, cls)?;
    Ok(ProjectedAutomorphism {
        base: cls.clone(),
        local: project_map(g, &full, &jd)?,
    })
}

fn project_map(g: &Graph, full: &Automorphism, jd: &JoinData) -> Result<LocalAutomorphism> {
    let kill = |w: &NormalForm| -> Word { nf(g, w.to_word().delete(jd.class.members).letters()).into() };
    let images: Vec<Word> = g
        .vertices()
        .map(|u| {
            if jd.link_part.contains(u) {
                kill(full.image(u))
            } else {
                Word::gen(u)
            }
        })
        .collect();
    let inverse_images: Vec<Word> = g
        .vertices()
        .map(|u| {
            if jd.link_part.contains(u) {
                kill(full.inverse_image(u))
            } else {
                Word::gen(u)
            }
        })
        .collect();
    Ok(LocalAutomorphism {
        domain: jd.link_part,
        map: Automorphism::from_images(g, &images, &inverse_images)?,
    })
}

/// Restriction and projection for one maximal class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassAction {
    pub join: JoinData,
    pub restriction: RestrictedAutomorphism,
    pub projection: ProjectedAutomorphism,
    /// `h` with representative `c(h) ∘ word`.
    pub inner_correction: Word,
}

/// `R_[v]` and `P_[v]` for every maximal class, in the vertex order of Γ₀.
pub fn assemble_rp(g: &Graph, word: &[GenLetter]) -> Result<Vec<ClassAction>> {
    // touching every generator once validates the word up front
    evaluate_word(g, word)?;
    let g0 = gamma_zero(g)?;
    g0.classes
        .iter()
        .map(|cls| {
            let jd = join_of_class(g, cls)?;
            let (full, h) = preserving_representative(g, word, cls)?;
            Ok(ClassAction {
                restriction: RestrictedAutomorphism {
                    class: cls.clone(),
                    local: LocalAutomorphism {
                        domain: jd.join,
                        map: full.clone(),
                    },
                },
                projection: ProjectedAutomorphism {
                    base: cls.clone(),
                    local: project_map(g, &full, &jd)?,
                },
                inner_correction: h,
                join: jd,
            })
        })
        .collect()
}
