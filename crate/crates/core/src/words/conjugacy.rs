//! Cyclic reduction, conjugator extraction and parabolic coset arithmetic.

use std::collections::{HashMap, VecDeque};

use super::{nf, Letter, NormalForm, Word};
use crate::graph::{Graph, Vertex, VertexSet};

/// Upper bound on the cyclic-shift states explored by [`extract_conjugator`].
pub const CONJUGACY_STATE_LIMIT: usize = 20_000;

/// Index of letters that can be shuffled to the front.
fn first_able(g: &Graph, letters: &[Letter]) -> Vec<usize> {
    let mut seen = VertexSet::EMPTY;
    let mut out = Vec::new();
    for (i, l) in letters.iter().enumerate() {
        if !seen.contains(l.gen) && (seen - g.star(l.gen)).is_empty() {
            out.push(i);
        }
        seen.insert(l.gen);
    }
    out
}

/// Index of letters that can be shuffled to the back.
fn last_able(g: &Graph, letters: &[Letter]) -> Vec<usize> {
    let mut seen = VertexSet::EMPTY;
    let mut out = Vec::new();
    for (i, l) in letters.iter().enumerate().rev() {
        if !seen.contains(l.gen) && (seen - g.star(l.gen)).is_empty() {
            out.push(i);
        }
        seen.insert(l.gen);
    }
    out.reverse();
    out
}

/// `h w h^-1` as a word.
pub fn conjugate_by(h: &Word, w: &Word) -> Word {
    h.mul(w).mul(&h.inverse())
}

/// Writes `w = conjugator · core · conjugator^-1` with `core` cyclically reduced.
///
/// Repeatedly peels a letter that can be moved to the front together with an
/// inverse letter that can be moved to the back.
pub fn cyclically_reduce(g: &Graph, w: &Word) -> (NormalForm, Word) {
    let mut letters = nf(g, w.letters()).0;
    let mut conj = Word::empty();
    loop {
        let fronts = first_able(g, &letters);
        let backs = last_able(g, &letters);
        let pair = fronts.iter().find_map(|&i| {
            backs
                .iter()
                .find(|&&j| j > i && letters[j] == letters[i].inverse())
                .map(|&j| (i, j))
        });
        match pair {
            Some((i, j)) => {
                conj.push(letters[i]);
                letters.remove(j);
                letters.remove(i);
            }
            None => break,
        }
    }
    (nf(g, &letters), conj)
}

/// Finds `h` with `y = h x h^-1`, or `None`.
///
/// Both words are cyclically reduced; the cores are then compared up to
/// cyclic shifts of the trace (moving any front-able letter to the back),
/// explored breadth-first up to [`CONJUGACY_STATE_LIMIT`] states. The result is
/// one conjugator; all others differ from it on the right by `C(x)`.
pub fn extract_conjugator(g: &Graph, x: &Word, y: &Word) -> Option<Word> {
    let (core_x, cx) = cyclically_reduce(g, x);
    let (core_y, cy) = cyclically_reduce(g, y);
    if core_x.len() != core_y.len() {
        return None;
    }
    // x = cx·core_x·cx^-1 and y = cy·core_y·cy^-1; search t with core_y = t·core_x·t^-1.
    let mut parent: HashMap<NormalForm, Option<(NormalForm, Letter)>> = HashMap::new();
    parent.insert(core_y.clone(), None);
    let mut queue = VecDeque::from([core_y]);
    let mut found = None;
    while let Some(state) = queue.pop_front() {
        if state == core_x {
            found = Some(state);
            break;
        }
        if parent.len() > CONJUGACY_STATE_LIMIT {
            break;
        }
        for i in first_able(g, state.letters()) {
            let mut moved = state.letters().to_vec();
            let l = moved.remove(i);
            moved.push(l);
            let next = nf(g, &moved);
            if !parent.contains_key(&next) {
                parent.insert(next.clone(), Some((state.clone(), l)));
                queue.push_back(next);
            }
        }
    }
    let mut state = found?;
    // each step state' = l^-1 · state · l, so t collects the moved letters in order
    let mut steps = Vec::new();
    while let Some(Some((prev, l))) = parent.get(&state) {
        steps.push(*l);
        state = prev.clone();
    }
    steps.reverse();
    let t = Word::from_letters(steps);
    let h = cy.mul(&t).mul(&cx.inverse());
    Some(nf(g, h.letters()).into())
}

/// Splits `x = a1 · p · a2` with `a1 ∈ A_left`, `a2 ∈ A_right`, by greedily
/// peeling front letters in `left` and back letters in `right`.
///
/// `p` is empty exactly when the greedy peel shows `x ∈ A_left · A_right`.
pub fn split_double_coset(g: &Graph, x: &Word, left: VertexSet, right: VertexSet) -> (Word, NormalForm, Word) {
    let mut p = nf(g, x.letters()).0;
    let mut a1 = Vec::new();
    let mut a2 = Vec::new();
    loop {
        let mut changed = false;
        while let Some(i) = first_able(g, &p).into_iter().find(|&i| left.contains(p[i].gen)) {
            a1.push(p.remove(i));
            changed = true;
        }
        while let Some(j) = last_able(g, &p).into_iter().rev().find(|&j| right.contains(p[j].gen)) {
            a2.insert(0, p.remove(j));
            changed = true;
        }
        if !changed {
            break;
        }
    }
    (
        Word::from_letters(a1),
        NormalForm::from_reduced_unchecked(p),
        Word::from_letters(a2),
    )
}

/// Finds `h` with `h u h^-1 = image(u)` for every pair `(u, image)`, or `None`.
///
/// Each pair pins `h` to a coset `c_u · C(u) = c_u · A_st(u)`; the cosets are
/// intersected one at a time by double-coset splitting and the final candidate
/// is checked against every pair, so a returned value is always correct.
pub fn common_conjugator(g: &Graph, pairs: &[(Vertex, NormalForm)]) -> Option<Word> {
    let mut h: Option<(Word, VertexSet)> = None;
    for (u, image) in pairs {
        let c = extract_conjugator(g, &Word::gen(*u), &image.to_word())?;
        h = Some(match h {
            None => (c, g.star(*u)),
            Some((h, theta)) => {
                let x = h.inverse().mul(&c);
                let (a1, p, _) = split_double_coset(g, &x, theta, g.star(*u));
                if !p.is_identity() {
                    return None;
                }
                (h.mul(&a1), theta & g.star(*u))
            }
        });
    }
    let h: Word = match h {
        Some((h, _)) => nf(g, h.letters()).into(),
        None => Word::empty(),
    };
    let ok = pairs
        .iter()
        .all(|(u, image)| &nf(g, conjugate_by(&h, &Word::gen(*u)).letters()) == image);
    ok.then_some(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::normal_form;

    fn w(g: &Graph, s: &str) -> Word {
        Word::parse(g, s).unwrap()
    }

    fn same(g: &Graph, a: &Word, b: &Word) -> bool {
        normal_form(g, a).unwrap() == normal_form(g, b).unwrap()
    }

    #[test]
    fn cyclic_reduction_examples() {
        let d2 = Graph::discrete(2);
        let (core, c) = cyclically_reduce(&d2, &w(&d2, "b a b^-1"));
        assert_eq!((core.to_text(&d2), c.to_text(&d2)), ("a".into(), "b".into()));

        let (core, c) = cyclically_reduce(&d2, &w(&d2, "a b"));
        assert_eq!(core.to_text(&d2), "a b");
        assert!(c.is_empty());

        let p3 = Graph::path(3);
        let y = w(&p3, "c b a b^-1 c^-1");
        let (core, c) = cyclically_reduce(&p3, &y);
        assert_eq!((core.to_text(&p3), c.to_text(&p3)), ("a".into(), "c".into()));
        assert!(same(&p3, &y, &conjugate_by(&c, &core.to_word())));
    }

    #[test]
    fn cyclic_reduction_sees_through_commuting_letters() {
        // b commutes with a and c, so every other letter cancels
        let p4 = Graph::path(4);
        let y = w(&p4, "a c b c^-1 a^-1");
        let (core, c) = cyclically_reduce(&p4, &y);
        assert_eq!(core.len(), 1);
        assert!(same(&p4, &y, &conjugate_by(&c, &core.to_word())));
    }

    #[test]
    fn conjugator_examples() {
        let d2 = Graph::discrete(2);
        let a = w(&d2, "a");
        assert_eq!(
            extract_conjugator(&d2, &a, &w(&d2, "b a b^-1")).unwrap().to_text(&d2),
            "b"
        );
        assert!(extract_conjugator(&d2, &a, &a).unwrap().is_empty());
        assert!(extract_conjugator(&d2, &a, &w(&d2, "b")).is_none());
    }

    #[test]
    fn conjugator_handles_cyclic_shifts() {
        let d3 = Graph::discrete(3);
        let x = w(&d3, "a b c");
        let y = w(&d3, "c a b");
        let h = extract_conjugator(&d3, &x, &y).unwrap();
        assert!(same(&d3, &y, &conjugate_by(&h, &x)));
        let z = w(&d3, "a c b");
        assert!(extract_conjugator(&d3, &x, &z).is_none());
    }

    #[test]
    fn double_coset_split() {
        let g = Graph::path(4);
        let x = w(&g, "a b d");
        let (a1, p, a2) = split_double_coset(&g, &x, g.set_of(&["a"]).unwrap(), g.set_of(&["d"]).unwrap());
        assert_eq!(a1.to_text(&g), "a");
        assert_eq!(p.to_text(&g), "b");
        assert_eq!(a2.to_text(&g), "d");
    }

    #[test]
    fn common_conjugator_recovers_inner_action() {
        let g = Graph::cycle(5);
        let h = w(&g, "a c^-1 d");
        let pairs: Vec<_> = g
            .vertices()
            .map(|u| (u, normal_form(&g, &conjugate_by(&h, &Word::gen(u))).unwrap()))
            .collect();
        let found = common_conjugator(&g, &pairs).unwrap();
        // the center of A_Γ is trivial for a 5-cycle, so the conjugator is unique
        assert!(same(&g, &found, &h));
    }

    #[test]
    fn common_conjugator_rejects_non_inner() {
        let g = Graph::discrete(2);
        let pairs = vec![
            (0, normal_form(&g, &w(&g, "b a b^-1")).unwrap()),
            (1, normal_form(&g, &w(&g, "a b a^-1")).unwrap()),
        ];
        assert!(common_conjugator(&g, &pairs).is_none());
    }
}
