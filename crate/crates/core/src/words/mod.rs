//! Exact arithmetic in the right-angled Artin group `A_Γ`.
//!
//! A [`Word`] is any sequence of signed generators. Its [`NormalForm`] is
//! obtained in two steps:
//!
//! 1. cancel every letter against a later inverse letter that it can reach
//!    through commuting letters, until no such pair is left;
//! 2. among all rearrangements reachable by swapping adjacent commuting
//!    letters, take the lexicographically least one, where letters are ordered
//!    by vertex-list position with `v` before `v^-1`.
//!
//! Two words represent the same group element exactly when their normal forms
//! are identical.

mod ball;
mod conjugacy;

use std::fmt;

use crate::abelian::{Scalar, ZVector};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

pub use ball::{enumerate_ball, enumerate_ball_within, sphere_sizes};
pub use conjugacy::{
    common_conjugator, conjugate_by, cyclically_reduce, extract_conjugator, split_double_coset, CONJUGACY_STATE_LIMIT,
};

/// A generator or its inverse.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: Vertex,
    pub inv: bool,
}

impl Letter {
    pub fn pos(gen: Vertex) -> Self {
        Letter { gen, inv: false }
    }

    pub fn neg(gen: Vertex) -> Self {
        Letter { gen, inv: true }
    }

    pub fn inverse(self) -> Self {
        Letter {
            gen: self.gen,
            inv: !self.inv,
        }
    }

    pub fn sign(self) -> i64 {
        if self.inv {
            -1
        } else {
            1
        }
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inv {
            write!(f, "{}^-1", self.gen)
        } else {
            write!(f, "{}", self.gen)
        }
    }
}

/// Sequence of letters; not necessarily reduced.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

/// Reduced word in canonical shuffle order.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct NormalForm(Vec<Letter>);

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.0).finish()
    }
}

impl fmt::Debug for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NF")?;
        f.debug_list().entries(&self.0).finish()
    }
}

fn parse_letters(g: &Graph, text: &str) -> Result<Vec<Letter>> {
    text.split_whitespace()
        .map(|tok| {
            let (name, inv) = match tok.split_once('^') {
                None => (tok, false),
                Some((name, "-1")) => (name, true),
                Some((name, "1")) => (name, false),
                Some(_) => return Err(Error::MalformedWord(format!("bad token `{tok}`"))),
            };
            Ok(Letter {
                gen: g.vertex(name)?,
                inv,
            })
        })
        .collect()
}

fn format_letters(g: &Graph, letters: &[Letter]) -> String {
    let toks: Vec<String> = letters
        .iter()
        .map(|l| {
            if l.inv {
                format!("{}^-1", g.name(l.gen))
            } else {
                g.name(l.gen).to_string()
            }
        })
        .collect();
    toks.join(" ")
}

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn gen(v: Vertex) -> Self {
        Word(vec![Letter::pos(v)])
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    /// Parses whitespace-separated `v` / `v^-1` tokens; the empty string is the identity.
    pub fn parse(g: &Graph, text: &str) -> Result<Self> {
        parse_letters(g, text).map(Word)
    }

    pub fn to_text(&self, g: &Graph) -> String {
        format_letters(g, &self.0)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    /// Concatenation.
    pub fn mul(&self, rhs: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + rhs.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&rhs.0);
        Word(v)
    }

    /// Reversal with every sign flipped.
    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn check(&self, g: &Graph) -> Result<()> {
        match self.0.iter().find(|l| l.gen >= g.len()) {
            Some(l) => Err(Error::VertexOutOfRange(l.gen)),
            None => Ok(()),
        }
    }

    /// Generators appearing anywhere in the word (not reduced first).
    pub fn letter_set(&self) -> VertexSet {
        self.0.iter().map(|l| l.gen).collect()
    }

    /// Deletes every letter whose generator lies in `kill`.
    pub fn delete(&self, kill: VertexSet) -> Word {
        Word(self.0.iter().copied().filter(|l| !kill.contains(l.gen)).collect())
    }
}

impl From<NormalForm> for Word {
    fn from(nf: NormalForm) -> Word {
        Word(nf.0)
    }
}

impl From<&NormalForm> for Word {
    fn from(nf: &NormalForm) -> Word {
        Word(nf.0.clone())
    }
}

impl NormalForm {
    pub fn identity() -> Self {
        NormalForm(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_word(&self) -> Word {
        Word(self.0.clone())
    }

    pub fn to_text(&self, g: &Graph) -> String {
        format_letters(g, &self.0)
    }

    /// Parses and normalizes; printing the result gives back canonical text.
    pub fn parse(g: &Graph, text: &str) -> Result<Self> {
        Ok(NormalForm(normalize(g, &parse_letters(g, text)?)))
    }

    pub fn support(&self) -> VertexSet {
        self.0.iter().map(|l| l.gen).collect()
    }

    pub(crate) fn from_reduced_unchecked(letters: Vec<Letter>) -> Self {
        NormalForm(letters)
    }
}

/// Cancels letter pairs `x ... x^-1` whose intervening letters all commute with `x`.
///
/// Processes letters left to right against a reduced stack: a new letter cancels
/// the nearest earlier inverse it can reach through commuting letters. Removing
/// one letter from a geodesic leaves a geodesic, so the stack stays reduced.
pub(crate) fn reduce(g: &Graph, letters: &[Letter]) -> Vec<Letter> {
    let mut stack: Vec<Letter> = Vec::with_capacity(letters.len());
    'next: for &l in letters {
        for j in (0..stack.len()).rev() {
            let m = stack[j];
            if m.gen == l.gen {
                if m.inv != l.inv {
                    stack.remove(j);
                    continue 'next;
                }
                break;
            }
            if !g.adjacent(m.gen, l.gen) {
                break;
            }
        }
        stack.push(l);
    }
    stack
}

/// Least rearrangement of a reduced word under commuting swaps.
///
/// Greedy: repeatedly emit the smallest letter that every remaining earlier
/// letter commutes with. This is the lexicographically least linear extension
/// of the word's dependency order.
pub(crate) fn canonical_shuffle(g: &Graph, letters: &[Letter]) -> Vec<Letter> {
    let mut rest: Vec<Letter> = letters.to_vec();
    let mut out = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let mut seen = VertexSet::EMPTY;
        let mut best: Option<usize> = None;
        for (i, l) in rest.iter().enumerate() {
            let blocked = seen.contains(l.gen) || !(seen - g.star(l.gen)).is_empty();
            if !blocked && best.is_none_or(|b| *l < rest[b]) {
                best = Some(i);
            }
            seen.insert(l.gen);
            if (g.all() - seen).is_empty() {
                break;
            }
        }
        out.push(rest.remove(best.expect("the first letter is always available")));
    }
    out
}

pub(crate) fn normalize(g: &Graph, letters: &[Letter]) -> Vec<Letter> {
    canonical_shuffle(g, &reduce(g, letters))
}

/// Normal form of a letter sequence known to use only vertices of `g`.
pub(crate) fn nf(g: &Graph, letters: &[Letter]) -> NormalForm {
    NormalForm(normalize(g, letters))
}

pub fn normal_form(g: &Graph, w: &Word) -> Result<NormalForm> {
    w.check(g)?;
    Ok(nf(g, &w.0))
}

pub fn equal(g: &Graph, w1: &Word, w2: &Word) -> Result<bool> {
    Ok(normal_form(g, w1)? == normal_form(g, w2)?)
}

pub fn multiply(w1: &Word, w2: &Word) -> Word {
    w1.mul(w2)
}

pub fn invert(w: &Word) -> Word {
    w.inverse()
}

/// Generators that survive in the normal form.
pub fn support(g: &Graph, w: &Word) -> Result<VertexSet> {
    Ok(normal_form(g, w)?.support())
}

/// Exponent-sum vector in `Z^V`.
pub fn abelianize(g: &Graph, w: &Word) -> ZVector<i64> {
    abelianize_as(g, w)
}

pub fn abelianize_as<T: Scalar>(g: &Graph, w: &Word) -> ZVector<T> {
    let mut z = ZVector::zero(g.len());
    for l in w.letters() {
        z.add_at(l.gen, T::from_i64(l.sign()).expect("sign fits"));
    }
    z
}
