use proptest::prelude::*;
use raag_core::automorphism::{
    abelianization_matrix, enumerate_laurence_generators, evaluate_word, verify_automorphism, GenLetter,
};
use raag_core::graph::{random_connected_graph, Graph};
use raag_core::kernel::{canonicalize, kernel_f_of};
use raag_core::order::{class_poset, equivalence_classes, gamma_zero, leq};
use raag_core::projection::preserving_representative;
use raag_core::words::{abelianize, normal_form, Letter, Word};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn graph() -> impl Strategy<Value = Graph> {
    (1usize..=6).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            let edges: Vec<_> = pairs.iter().zip(&keep).filter(|(_, k)| **k).map(|(e, _)| *e).collect();
            Graph::from_index_edges(n, &edges).unwrap()
        })
    })
}

fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 0.1f64..0.9, any::<u64>())
        .prop_map(|(n, p, seed)| random_connected_graph(n, p, &mut ChaCha8Rng::seed_from_u64(seed)))
}

fn word(n: usize, max_len: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec((0..n, any::<bool>()), 0..=max_len)
        .prop_map(|ls| Word::from_letters(ls.into_iter().map(|(gen, inv)| Letter { gen, inv }).collect()))
}

fn graph_and_words() -> impl Strategy<Value = (Graph, Word, Word)> {
    graph().prop_flat_map(|g| {
        let n = g.len();
        (Just(g), word(n, 10), word(n, 10))
    })
}

/// A connected graph with two random words in its pure generators.
fn generator_words(max_n: usize, max_len: usize) -> impl Strategy<Value = (Graph, Vec<GenLetter>, Vec<GenLetter>)> {
    connected_graph(max_n)
        .prop_flat_map(move |g| {
            let k = enumerate_laurence_generators(&g).pure.len();
            let w = proptest::collection::vec((0..k, any::<bool>()), 0..=max_len);
            (Just(g), w.clone(), w)
        })
        .prop_map(|(g, a, b)| {
            let pure = enumerate_laurence_generators(&g).pure;
            let to = |w: Vec<(usize, bool)>| {
                w.into_iter()
                    .map(|(i, inverse)| GenLetter {
                        spec: pure[i].clone(),
                        inverse,
                    })
                    .collect::<Vec<_>>()
            };
            (g.clone(), to(a), to(b))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn normal_form_is_a_congruence((g, u, v) in graph_and_words()) {
        let nu = normal_form(&g, &u).unwrap();
        let nv = normal_form(&g, &v).unwrap();
        let whole = normal_form(&g, &u.mul(&v)).unwrap();
        let parts = normal_form(&g, &nu.to_word().mul(&nv.to_word())).unwrap();
        prop_assert_eq!(&whole, &parts);
        prop_assert_eq!(normal_form(&g, &nu.to_word()).unwrap(), nu);
        prop_assert!(normal_form(&g, &u.mul(&u.inverse())).unwrap().is_identity());
    }

    #[test]
    fn abelianization_is_additive((g, u, v) in graph_and_words()) {
        prop_assert_eq!(abelianize(&g, &u.mul(&v)), abelianize(&g, &u) + abelianize(&g, &v));
        prop_assert!((abelianize(&g, &u) + abelianize(&g, &u.inverse())).is_zero());
    }

    #[test]
    fn order_is_a_preorder(g in connected_graph(7)) {
        for u in g.vertices() {
            prop_assert!(leq(&g, u, u));
            for v in g.vertices() {
                for w in g.vertices() {
                    prop_assert!(!(leq(&g, u, v) && leq(&g, v, w)) || leq(&g, u, w));
                }
            }
        }
        let classes = equivalence_classes(&g).unwrap();
        let covered: usize = classes.iter().map(|c| c.members.len()).sum();
        prop_assert_eq!(covered, g.len());
        let poset = class_poset(&g).unwrap();
        let g0 = gamma_zero(&g).unwrap();
        prop_assert_eq!(g0.len(), poset.maximal().len());
        prop_assert!(g0.is_connected());
    }

    #[test]
    fn composition_matches_word_products((g, u, v) in generator_words(6, 4)) {
        let fu = evaluate_word(&g, &u).unwrap();
        let fv = evaluate_word(&g, &v).unwrap();
        let uv: Vec<GenLetter> = u.iter().chain(&v).cloned().collect();
        let fuv = evaluate_word(&g, &uv).unwrap();
        prop_assert_eq!(&fu.compose(&g, &fv).unwrap(), &fuv);
        prop_assert!(verify_automorphism(&g, &fuv).is_ok());
        prop_assert!(fuv.compose(&g, &fuv.inverse()).unwrap().is_identity());
        let m = abelianization_matrix(&g, &fuv).unwrap();
        prop_assert_eq!(m, abelianization_matrix(&g, &fu).unwrap().mul(&abelianization_matrix(&g, &fv).unwrap()));
    }

    #[test]
    fn preserving_representatives_exist((g, u, _v) in generator_words(6, 4)) {
        let g0 = gamma_zero(&g).unwrap();
        for cls in &g0.classes {
            let rep = preserving_representative(&g, &u, cls);
            prop_assert!(rep.is_ok(), "{}: {:?}", cls.format(&g), rep.err());
        }
    }

    #[test]
    fn canonical_representatives_are_stable((g, u, _v) in generator_words(6, 4)) {
        let f = evaluate_word(&g, &u).unwrap();
        if gamma_zero(&g).unwrap().len() >= 2 && kernel_f_of(&g, &f).is_ok() {
            let once = canonicalize(&g, &f).unwrap();
            prop_assert_eq!(canonicalize(&g, &once).unwrap(), once.clone());
            prop_assert_eq!(kernel_f_of(&g, &once).unwrap(), kernel_f_of(&g, &f).unwrap());
        }
    }
}
