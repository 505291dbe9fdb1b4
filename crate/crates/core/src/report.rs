//! Structured JSON documents: the analysis of a graph and the kernel data of a
//! single element. Field order is fixed by the structs and every list is in
//! vertex or class order, so the same input always gives the same bytes.

use serde::Serialize;

use crate::automorphism::{describe_word, enumerate_laurence_generators, GenLetter};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::joins::{join_of_class, ncz_of_maximal_join};
use crate::kernel::{check_kp_membership, kernel_f, leaf_transvections, singleton_decomposition, KPMembership};
use crate::order::{class_poset, gamma_zero, ClassKind, VertexClass};
use crate::projection::assemble_rp;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassDoc {
    pub representative: String,
    pub members: Vec<String>,
    pub kind: ClassKind,
}

impl ClassDoc {
    fn new(g: &Graph, c: &VertexClass) -> Self {
        ClassDoc {
            representative: g.name(c.representative).to_string(),
            members: g.set_names(c.members),
            kind: c.kind,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PosetDoc {
    /// Strict relations `[i, j]` meaning class i < class j.
    pub less_than: Vec<[usize; 2]>,
    pub covers: Vec<[usize; 2]>,
    pub maximal: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaZeroDoc {
    /// Indices into the class list.
    pub vertices: Vec<usize>,
    /// Pairs of indices into the class list.
    pub edges: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JoinDoc {
    pub class: usize,
    pub link_part: Vec<String>,
    pub join: Vec<String>,
    pub normalizer: Vec<String>,
    pub centralizer: Vec<String>,
    pub center: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorCounts {
    pub inversions: usize,
    pub inners: usize,
    pub transvections: usize,
    pub partial_conjugations: usize,
    pub symmetries: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorDoc {
    pub counts: GeneratorCounts,
    pub pure: Vec<String>,
    pub symmetries: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SingletonDoc {
    pub class: Vec<String>,
    pub link_part: Vec<String>,
    pub transvections: Vec<String>,
    /// Rank of the transvection subgroup.
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorReport {
    pub vertices: Vec<String>,
    pub classes: Vec<ClassDoc>,
    pub poset: PosetDoc,
    pub gamma_zero: GammaZeroDoc,
    pub joins: Vec<JoinDoc>,
    pub generators: GeneratorDoc,
    pub leaf_transvections: Vec<String>,
    pub singleton: Option<SingletonDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
    pub graph_hash: String,
    /// Rank of the free factor generated by isolated vertices.
    pub isolated_count: usize,
    /// Size of a largest clique.
    pub dimension: usize,
    pub factors: Vec<FactorReport>,
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report types always serialize");
        s.push('\n');
        s
    }
}

fn names(g: &Graph, s: VertexSet) -> Vec<String> {
    g.set_names(s)
}

pub fn analyze_factor(g: &Graph) -> Result<FactorReport> {
    let poset = class_poset(g)?;
    let g0 = gamma_zero(g)?;
    let index = |c: &VertexClass| poset.index_of(c).expect("maximal classes come from the poset");
    let less_than = poset
        .relation()
        .into_iter()
        .filter(|(i, j)| i != j)
        .map(|(i, j)| [i, j])
        .collect();
    let joins = g0
        .classes
        .iter()
        .map(|c| {
            let jd = join_of_class(g, c)?;
            let ncz = ncz_of_maximal_join(g, &jd)?;
            Ok(JoinDoc {
                class: index(c),
                link_part: names(g, jd.link_part),
                join: names(g, jd.join),
                normalizer: names(g, ncz.normalizer),
                centralizer: names(g, ncz.centralizer),
                center: names(g, ncz.center),
            })
        })
        .collect::<Result<_>>()?;
    let gens = enumerate_laurence_generators(g);
    let generators = GeneratorDoc {
        counts: GeneratorCounts {
            inversions: gens.inversions(),
            inners: gens.inners(),
            transvections: gens.transvections(),
            partial_conjugations: gens.partial_conjugations(),
            symmetries: gens.symmetries.len(),
        },
        pure: gens.pure.iter().map(|s| s.describe(g)).collect(),
        symmetries: gens.symmetries.iter().map(|s| s.describe(g)).collect(),
    };
    let singleton = if g0.len() == 1 {
        let d = singleton_decomposition(g)?;
        Some(SingletonDoc {
            class: names(g, d.class.members),
            link_part: names(g, d.link_part),
            rank: d.transvections.len(),
            transvections: d.transvections.iter().map(|t| t.describe(g)).collect(),
        })
    } else {
        None
    };
    Ok(FactorReport {
        vertices: g.names().to_vec(),
        classes: poset.classes.iter().map(|c| ClassDoc::new(g, c)).collect(),
        poset: PosetDoc {
            less_than,
            covers: poset.covers().into_iter().map(|(i, j)| [i, j]).collect(),
            maximal: poset.maximal(),
        },
        gamma_zero: GammaZeroDoc {
            vertices: g0.classes.iter().map(index).collect(),
            edges: g0
                .edges
                .iter()
                .map(|&(i, j)| [index(&g0.classes[i]), index(&g0.classes[j])])
                .collect(),
        },
        joins,
        generators,
        leaf_transvections: leaf_transvections(g)?.iter().map(|t| t.describe(g)).collect(),
        singleton,
    })
}

/// Splits off isolated vertices and analyzes every remaining component.
pub fn analyze(g: &Graph) -> Result<AnalysisReport> {
    let (isolated_count, factors) = g.free_product_factors();
    Ok(AnalysisReport {
        vertices: g.names().to_vec(),
        edges: g
            .edges()
            .map(|(u, v)| [g.name(u).to_string(), g.name(v).to_string()])
            .collect(),
        graph_hash: g.content_hash(),
        isolated_count,
        dimension: g.dimension(),
        factors: factors.iter().map(analyze_factor).collect::<Result<_>>()?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassKernelDoc {
    pub class: Vec<String>,
    pub inner_correction: String,
    pub restriction: Vec<[String; 2]>,
    pub projection: Vec<[String; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KernelPartDoc {
    pub class: Vec<String>,
    pub conjugator: String,
    /// Nonzero entries of `f_v`, by vertex name.
    pub f: Vec<(String, i64)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KernelReport {
    pub graph_hash: String,
    pub element: String,
    pub classes: Vec<ClassKernelDoc>,
    /// Present when the element lies in `K`.
    pub kernel: Option<Vec<KernelPartDoc>>,
    pub kp_membership: String,
    pub leaf_part: Vec<(String, i64)>,
}

impl KernelReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report types always serialize");
        s.push('\n');
        s
    }
}

/// Restriction, projection and kernel data of one element, for a graph whose
/// Γ₀ has at least two vertices.
pub fn kernel_report(g: &Graph, word: &[GenLetter]) -> Result<KernelReport> {
    let pairs = |domain: VertexSet, f: &crate::automorphism::Automorphism| {
        domain
            .iter()
            .map(|v| [g.name(v).to_string(), f.image(v).to_text(g)])
            .collect()
    };
    let classes = assemble_rp(g, word)?
        .iter()
        .map(|a| ClassKernelDoc {
            class: names(g, a.join.class.members),
            inner_correction: a.inner_correction.to_text(g),
            restriction: pairs(a.restriction.local.domain, &a.restriction.local.map),
            projection: pairs(a.projection.local.domain, &a.projection.local.map),
        })
        .collect();
    let kernel = match kernel_f(g, word) {
        Ok(kv) => Some(
            kv.parts
                .iter()
                .map(|p| KernelPartDoc {
                    class: names(g, p.class.members),
                    conjugator: p.conjugator.to_text(g),
                    f: p.f
                        .entries()
                        .iter()
                        .enumerate()
                        .filter(|(_, x)| **x != 0)
                        .map(|(v, x)| (g.name(v).to_string(), *x))
                        .collect(),
                })
                .collect(),
        ),
        Err(crate::Error::NotInKernel(_)) => None,
        Err(e) => return Err(e),
    };
    let (kp_membership, leaf_part) = match check_kp_membership(g, word)? {
        KPMembership::InK { .. } => ("in-K".to_string(), Vec::new()),
        KPMembership::InKPViaLeafPart { leaf_part, .. } => (
            "in-KP-via-leaf-part".to_string(),
            leaf_part.iter().map(|(t, c)| (t.describe(g), *c)).collect(),
        ),
        KPMembership::Outside { witness } => (format!("outside: {witness}"), Vec::new()),
        KPMembership::NotDetected { reason, .. } => (format!("not-detected: {reason}"), Vec::new()),
    };
    Ok(KernelReport {
        graph_hash: g.content_hash(),
        element: describe_word(g, word),
        classes,
        kernel,
        kp_membership,
        leaf_part,
    })
}
