//! Invariant suites. Each runs over a list of connected graphs and returns the
//! number of checks performed together with every violation found, formatted
//! so that the offending graph and input can be reproduced.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::automorphism::{
    abelianization_matrix, as_automorphism, describe_word, enumerate_laurence_generators, evaluate_word,
    verify_automorphism, GenLetter, GeneratorSpec,
};
use crate::error::Error;
use crate::graph::{Distance, Graph, VertexSet};
use crate::joins::{adjacent_join_intersection, godelle_ncz, join_of_class, ncz_of_maximal_join};
use crate::kernel::{canonicalize, kernel_f_of, leaf_transvections};
use crate::order::{chain_shape, class_poset, equivalence_classes, gamma_zero, leq, leq_case, ClassKind};
use crate::projection::project_p;
use crate::words::{enumerate_ball, nf, Letter};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    OrderLemmas,
    GodelleOracle,
    GeneratorWellformed,
    LeafCommute,
    KernelF,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::OrderLemmas,
        Suite::GodelleOracle,
        Suite::GeneratorWellformed,
        Suite::LeafCommute,
        Suite::KernelF,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::OrderLemmas => "order-lemmas",
            Suite::GodelleOracle => "godelle-oracle",
            Suite::GeneratorWellformed => "generator-wellformed",
            Suite::LeafCommute => "leaf-commute",
            Suite::KernelF => "kernel-f",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
            format!("unknown suite `{s}` (expected one of {})", names.join(", "))
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Ball radius for the brute-force centralizer oracle.
    pub radius: usize,
    /// Random samples per graph where a suite draws them.
    pub samples: usize,
    /// Longest random generator word.
    pub max_word: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            radius: 6,
            samples: 20,
            max_word: 4,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub graphs: usize,
    pub checks: usize,
    pub violations: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn check(&mut self, ok: bool, g: &Graph, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.violations.push(format!("{} on {}", what(), describe_graph(g)));
        }
    }

    fn merge(&mut self, other: SuiteReport) {
        self.graphs += other.graphs;
        self.checks += other.checks;
        self.violations.extend(other.violations);
    }
}

/// Vertex and edge lists, enough to rebuild the graph.
pub fn describe_graph(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().map(|(u, v)| format!("{}-{}", g.name(u), g.name(v))).collect();
    format!("graph [{}] edges [{}]", g.names().join(" "), edges.join(" "))
}

pub fn run_suite(suite: Suite, graphs: &[Graph], cfg: &SuiteConfig) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut total = SuiteReport::default();
    for g in graphs {
        let mut r = match suite {
            Suite::OrderLemmas => order_lemmas(g),
            Suite::GodelleOracle => godelle_oracle(g, cfg.radius),
            Suite::GeneratorWellformed => generator_wellformed(g, cfg, &mut rng),
            Suite::LeafCommute => leaf_commute(g),
            Suite::KernelF => kernel_f_suite(g, cfg, &mut rng),
        };
        r.graphs = 1;
        total.merge(r);
    }
    total
}

/// Seeded connected Erdős–Rényi graphs with a vertex count drawn from `1..=max_n`.
pub fn random_connected_graphs(count: usize, max_n: usize, p: f64, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            crate::graph::random_connected_graph(n, p, &mut rng)
        })
        .collect()
}

fn chains(poset: &crate::order::ClassPoset) -> Vec<Vec<usize>> {
    fn extend(poset: &crate::order::ClassPoset, chain: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(chain.clone());
        let last = *chain.last().unwrap();
        for j in 0..poset.len() {
            if poset.lt(last, j) {
                chain.push(j);
                extend(poset, chain, out);
                chain.pop();
            }
        }
    }
    let mut out = Vec::new();
    for i in 0..poset.len() {
        extend(poset, &mut vec![i], &mut out);
    }
    out
}

/// Transitivity, the distance-one step lemma, constant distance inside classes,
/// chain shapes, and connectivity and coverage of Γ₀.
pub fn order_lemmas(g: &Graph) -> SuiteReport {
    let mut r = SuiteReport::default();
    let n = g.len();
    let name = |v| g.name(v).to_string();
    for u in 0..n {
        for v in 0..n {
            for w in 0..n {
                let (uv, vw) = (leq(g, u, v), leq(g, v, w));
                r.check(!(uv && vw) || leq(g, u, w), g, || {
                    format!("transitivity fails at {} <= {} <= {}", name(u), name(v), name(w))
                });
                let one =
                    !(uv && vw && g.distance(u, v) == Distance::Finite(1)) || g.distance(v, w) <= Distance::Finite(1);
                r.check(one, g, || {
                    format!("step lemma fails at {}, {}, {}", name(u), name(v), name(w))
                });
            }
            r.check(leq_case(g, u, v).is_ok(), g, || {
                format!("no case applies to {} <= {}", name(u), name(v))
            });
        }
    }
    let classes = match equivalence_classes(g) {
        Ok(c) => c,
        Err(e) => {
            r.check(false, g, || format!("classes: {e}"));
            return r;
        }
    };
    for cls in &classes {
        let expected = match cls.kind {
            ClassKind::Abelian => Distance::Finite(1),
            ClassKind::Free => Distance::Finite(2),
        };
        for x in cls.members {
            for y in cls.members {
                if x != y {
                    r.check(g.distance(x, y) == expected, g, || {
                        format!(
                            "class {} has {} at distance {}",
                            cls.format(g),
                            name(x),
                            g.distance(x, y)
                        )
                    });
                }
            }
        }
    }
    let poset = class_poset(g).expect("classes already computed");
    for chain in chains(&poset) {
        let reps: Vec<usize> = chain.iter().map(|&i| poset.classes[i].representative).collect();
        let res = chain_shape(g, &reps);
        r.check(res.is_ok(), g, || {
            format!(
                "chain {:?}: {}",
                reps.iter().map(|&v| name(v)).collect::<Vec<_>>(),
                res.unwrap_err()
            )
        });
    }
    match gamma_zero(g) {
        Ok(g0) => {
            r.check(g0.is_connected(), g, || {
                "graph of maximal classes is disconnected".into()
            });
            let covered = g0
                .classes
                .iter()
                .filter_map(|c| join_of_class(g, c).ok())
                .fold(VertexSet::EMPTY, |acc, jd| acc | jd.join);
            r.check(covered == g.all(), g, || {
                format!("maximal joins miss {}", g.format_set(g.all() - covered))
            });
        }
        Err(e) => r.check(false, g, || format!("graph of maximal classes: {e}")),
    }
    r
}

/// Brute-force centralizers against `Θ⊥` for every subset `Θ`, then the
/// closed formulas for maximal joins and their pairwise intersections.
pub fn godelle_oracle(g: &Graph, radius: usize) -> SuiteReport {
    let mut r = SuiteReport::default();
    let ball = enumerate_ball(g, radius);
    // for each element, the generators it commutes with
    let commutes: Vec<VertexSet> = ball
        .iter()
        .map(|x| {
            g.vertices()
                .filter(|&u| {
                    let mut left = vec![Letter::pos(u)];
                    left.extend_from_slice(x.letters());
                    let mut right = x.letters().to_vec();
                    right.push(Letter::pos(u));
                    nf(g, &left) == nf(g, &right)
                })
                .collect()
        })
        .collect();
    for th in g.all().subsets() {
        let ncz = godelle_ncz(g, th).expect("subset of the graph");
        for (x, &c) in ball.iter().zip(&commutes) {
            let centralizes = th.is_subset(c);
            let inside = x.support().is_subset(ncz.centralizer);
            r.check(centralizes == inside, g, || {
                format!(
                    "`{}` {} {} but its support {} inside the formula {}",
                    x.to_text(g),
                    if centralizes {
                        "centralizes"
                    } else {
                        "does not centralize"
                    },
                    g.format_set(th),
                    if inside { "lies" } else { "does not lie" },
                    g.format_set(ncz.centralizer)
                )
            });
        }
    }
    let Ok(g0) = gamma_zero(g) else {
        r.check(false, g, || "graph of maximal classes failed".into());
        return r;
    };
    let joins: Vec<_> = g0.classes.iter().map(|c| join_of_class(g, c)).collect();
    for jd in joins.iter().flatten() {
        let res = ncz_of_maximal_join(g, jd);
        r.check(res.is_ok(), g, || {
            format!("maximal join formula: {}", res.clone().unwrap_err())
        });
        r.check(g.perp(jd.join).is_subset(jd.class.members), g, || {
            format!("perp of the join of {} leaves the class", jd.class.format(g))
        });
    }
    for &(i, j) in &g0.edges {
        if let (Ok(a), Ok(b)) = (&joins[i], &joins[j]) {
            let res = adjacent_join_intersection(g, a, b);
            r.check(res.is_ok(), g, || format!("intersection formula: {}", res.unwrap_err()));
        }
    }
    if let Ok(classes) = equivalence_classes(g) {
        let l: Vec<(VertexSet, VertexSet)> = classes
            .iter()
            .filter_map(|c| join_of_class(g, c).ok())
            .map(|jd| (jd.class.members, jd.link_part))
            .collect();
        for &(cv, lv) in &l {
            for &(cw, lw) in &l {
                let (v, w) = (cv.first().unwrap(), cw.first().unwrap());
                r.check(lv.contains(w) == lw.contains(v), g, || {
                    format!("L symmetry fails for {} and {}", g.name(v), g.name(w))
                });
            }
        }
    }
    r
}

fn random_word<R: Rng>(pool: &[GeneratorSpec], max_len: usize, rng: &mut R) -> Vec<GenLetter> {
    if pool.is_empty() {
        return Vec::new();
    }
    let len = rng.gen_range(1..=max_len.max(1));
    (0..len)
        .map(|_| GenLetter {
            spec: pool.choose(rng).unwrap().clone(),
            inverse: rng.gen_bool(0.5),
        })
        .collect()
}

/// Every generator, pure or symmetry, is an automorphism with a unimodular
/// abelianization, and its stored inverse composes to the identity. Random
/// pairs check that abelianization is multiplicative.
pub fn generator_wellformed<R: Rng>(g: &Graph, cfg: &SuiteConfig, rng: &mut R) -> SuiteReport {
    let mut r = SuiteReport::default();
    let gens = enumerate_laurence_generators(g);
    let all: Vec<GeneratorSpec> = gens.pure.iter().chain(&gens.symmetries).cloned().collect();
    let mut autos = Vec::new();
    for s in &all {
        match as_automorphism(g, s) {
            Ok(f) => {
                let report = verify_automorphism(g, &f);
                r.check(report.is_ok(), g, || {
                    format!("{}: {}", s.describe(g), report.describe(g))
                });
                let m = abelianization_matrix(g, &f);
                r.check(m.is_ok(), g, || {
                    format!("{}: {}", s.describe(g), m.clone().unwrap_err())
                });
                let back = f.compose(g, &f.inverse()).map(|x| x.is_identity());
                r.check(back == Ok(true), g, || {
                    format!("{}: inverse does not cancel", s.describe(g))
                });
                autos.push(f);
            }
            Err(e) => r.check(false, g, || format!("{}: {e}", s.describe(g))),
        }
    }
    if autos.is_empty() {
        return r;
    }
    for _ in 0..cfg.samples {
        let (i, j) = (rng.gen_range(0..autos.len()), rng.gen_range(0..autos.len()));
        let (f, h) = (&autos[i], &autos[j]);
        let fh = f.compose(g, h).expect("same graph");
        let lhs = abelianization_matrix(g, &fh);
        let rhs = abelianization_matrix(g, f).and_then(|a| abelianization_matrix(g, h).map(|b| a.mul(&b)));
        r.check(lhs.is_ok() && lhs == rhs, g, || {
            format!(
                "M(f h) != M(f) M(h) for f = {}, h = {}",
                all[i].describe(g),
                all[j].describe(g)
            )
        });
    }
    r
}

/// Leaf transvections commute with every partial conjugation, as automorphisms.
pub fn leaf_commute(g: &Graph) -> SuiteReport {
    let mut r = SuiteReport::default();
    let leaves = match leaf_transvections(g) {
        Ok(l) => l,
        Err(e) => {
            r.check(false, g, || format!("leaf transvections: {e}"));
            return r;
        }
    };
    let pcs: Vec<GeneratorSpec> = enumerate_laurence_generators(g)
        .pure
        .into_iter()
        .filter(|s| matches!(s, GeneratorSpec::PartialConjugation { .. }))
        .collect();
    for t in &leaves {
        let ft = as_automorphism(g, &t.spec()).expect("leaf transvections are valid");
        for p in &pcs {
            let fp = as_automorphism(g, p).expect("enumerated generators are valid");
            let same = ft.compose(g, &fp).ok() == fp.compose(g, &ft).ok();
            let by_leaf = matches!(p, GeneratorSpec::PartialConjugation { v, .. } if *v == t.v);
            r.check(same, g, || {
                let note = if by_leaf {
                    " (conjugating vertex is the leaf itself)"
                } else {
                    ""
                };
                format!("{} and {} do not commute{note}", t.describe(g), p.describe(g))
            });
        }
    }
    r
}

/// Inner automorphisms and partial conjugations that lie in `K`.
pub fn kernel_generators(g: &Graph) -> Vec<GeneratorSpec> {
    enumerate_laurence_generators(g)
        .pure
        .into_iter()
        .filter(|s| matches!(s, GeneratorSpec::Inner(_) | GeneratorSpec::PartialConjugation { .. }))
        .filter(|s| {
            let f = as_automorphism(g, s).expect("enumerated generators are valid");
            kernel_f_of(g, &f).is_ok()
        })
        .collect()
}

/// Additivity of `f` on random pairs of products of kernel generators, and
/// triviality after canonicalization of products on which `f` vanishes.
pub fn kernel_f_suite<R: Rng>(g: &Graph, cfg: &SuiteConfig, rng: &mut R) -> SuiteReport {
    let mut r = SuiteReport::default();
    let Ok(g0) = gamma_zero(g) else {
        r.check(false, g, || "graph of maximal classes failed".into());
        return r;
    };
    let pool = kernel_generators(g);
    for _ in 0..cfg.samples {
        let u = random_word(&pool, cfg.max_word, rng);
        let v = random_word(&pool, cfg.max_word, rng);
        let uv: Vec<GenLetter> = u.iter().chain(&v).cloned().collect();
        let eval = |w: &[GenLetter]| evaluate_word(g, w).and_then(|f| kernel_f_of(g, &f));
        match (eval(&u), eval(&v), eval(&uv)) {
            (Ok(fu), Ok(fv), Ok(fuv)) => {
                r.check(fuv.values() == fu.add(&fv).values(), g, || {
                    format!(
                        "f not additive on u = {}, v = {}",
                        describe_word(g, &u),
                        describe_word(g, &v)
                    )
                });
                for (w, fw) in [(&u, &fu), (&uv, &fuv)] {
                    if fw.is_zero() && g0.len() >= 2 {
                        let rep = evaluate_word(g, w).and_then(|f| canonicalize(g, &f));
                        r.check(rep.as_ref().map(|x| x.is_identity()) == Ok(true), g, || {
                            format!(
                                "f vanishes on {} but it is not canonically trivial",
                                describe_word(g, w)
                            )
                        });
                    }
                }
                if g0.len() >= 2 {
                    let f = evaluate_word(g, &uv).expect("valid word");
                    let once = canonicalize(g, &f);
                    let twice = once.as_ref().map_err(Error::clone).and_then(|x| canonicalize(g, x));
                    r.check(once.is_ok() && once == twice, g, || {
                        format!("canonicalization of {} is not idempotent", describe_word(g, &uv))
                    });
                }
            }
            (a, b, c) => {
                let err = [a.err(), b.err(), c.err()].into_iter().flatten().next().unwrap();
                r.check(false, g, || {
                    format!(
                        "kernel product u = {}, v = {}: {err}",
                        describe_word(g, &u),
                        describe_word(g, &v)
                    )
                });
            }
        }
    }
    r
}

/// `P(uv) = P(u) ∘ P(v)` in `Out(A_L)` for every maximal class, compared by
/// the exact inner test.
pub fn projection_homomorphism<R: Rng>(g: &Graph, cfg: &SuiteConfig, rng: &mut R) -> SuiteReport {
    let mut r = SuiteReport::default();
    let Ok(g0) = gamma_zero(g) else {
        r.check(false, g, || "graph of maximal classes failed".into());
        return r;
    };
    let pool = enumerate_laurence_generators(g).pure;
    for _ in 0..cfg.samples {
        let u = random_word(&pool, cfg.max_word, rng);
        let v = random_word(&pool, cfg.max_word, rng);
        let uv: Vec<GenLetter> = u.iter().chain(&v).cloned().collect();
        for cls in &g0.classes {
            let res = (|| {
                let pu = project_p(g, &u, cls)?;
                let pv = project_p(g, &v, cls)?;
                let puv = project_p(g, &uv, cls)?;
                puv.local.out_equal(g, &pu.local.compose(g, &pv.local)?)
            })();
            r.check(res == Ok(true), g, || {
                format!(
                    "P_{} not multiplicative on u = {}, v = {} ({})",
                    cls.format(g),
                    describe_word(g, &u),
                    describe_word(g, &v),
                    match res {
                        Ok(_) => "no conjugator found".to_string(),
                        Err(e) => e.to_string(),
                    }
                )
            });
        }
    }
    r
}

/// Γ₀ has one vertex, the center is nontrivial, and Γ is the join of some
/// abelian class: three descriptions of the same situation.
pub fn singleton_conditions(g: &Graph) -> SuiteReport {
    let mut r = SuiteReport::default();
    let single = gamma_zero(g).map(|g0| g0.len() == 1);
    let center = godelle_ncz(g, g.all()).map(|x| !x.center.is_empty());
    let whole_join = equivalence_classes(g).map(|cs| {
        cs.iter()
            .filter(|c| c.is_abelian())
            .any(|c| join_of_class(g, c).map(|jd| jd.join == g.all()).unwrap_or(false))
    });
    r.check(single.is_ok() && single == center && center == whole_join, g, || {
        format!("singleton {single:?}, center {center:?}, whole join {whole_join:?}")
    });
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> Vec<Graph> {
        vec![
            Graph::path(3),
            Graph::path(4),
            Graph::cycle(5),
            Graph::complete(3),
            Graph::star_graph(3),
        ]
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn suites_pass_on_small_graphs() {
        let cfg = SuiteConfig {
            radius: 3,
            samples: 5,
            ..SuiteConfig::default()
        };
        for s in Suite::ALL.into_iter().filter(|&s| s != Suite::LeafCommute) {
            let r = run_suite(s, &small(), &cfg);
            assert!(r.passed(), "{s}: {:?}", r.violations);
            assert!(r.checks > 0, "{s}");
        }
    }

    #[test]
    fn leaf_commute_fails_only_for_conjugation_by_the_leaf() {
        let r = run_suite(Suite::LeafCommute, &small(), &SuiteConfig::default());
        assert!(!r.violations.is_empty());
        assert!(
            r.violations.iter().all(|v| v.contains("the leaf itself")),
            "{:?}",
            r.violations
        );
        assert!(run_suite(Suite::LeafCommute, &[Graph::path(3)], &SuiteConfig::default()).passed());
    }

    #[test]
    fn chain_enumeration() {
        let p4 = Graph::path(4);
        let poset = class_poset(&p4).unwrap();
        // four singletons plus a<b, a<c, d<b, d<c
        assert_eq!(chains(&poset).len(), 8);
    }
}
