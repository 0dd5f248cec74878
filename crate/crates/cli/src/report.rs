//! JSON report types. Field order is the serialization order and is part of
//! the output format.

use agl_core::classify::ClassificationReport;
use agl_core::toric::{KernelVerdict, ShapeReport, WeightedPolyRing};
use agl_core::ulrich::{
    ConductorUlrichReport, GorensteinWitnessReport, IdealizationCertificate, PredictionReport,
    TwoGeneratedConsequences, TwoGeneratedRelation, UlrichCertificate, UlrichChecks,
};
use agl_core::{NumericalSemigroup, ValueIdeal};
use serde::Serialize;

use crate::Format;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct RunManifest {
    pub command: String,
    pub generators: Vec<u64>,
    pub options: RunOptions,
    pub version: &'static str,
}

#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct RunOptions {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub v_max: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d_max: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_frobenius: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub manifest: Option<String>,
    pub format: &'static str,
}

impl RunManifest {
    pub fn new(command: &str, generators: &[u64], options: RunOptions) -> Self {
        Self {
            command: command.to_string(),
            generators: generators.to_vec(),
            options,
            version: env!("CARGO_PKG_VERSION"),
        }
    }

    pub fn options(format: Format) -> RunOptions {
        RunOptions {
            format: format.name(),
            ..RunOptions::default()
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct IdealJson {
    pub min: i64,
    pub gens: Vec<i64>,
    #[serde(rename = "complement_in_S")]
    pub complement_in_s: Vec<i64>,
}

impl IdealJson {
    pub fn new(s: &NumericalSemigroup, e: &ValueIdeal) -> Self {
        Self {
            min: e.min(),
            gens: e.minimal_generators(s),
            complement_in_s: e.complement_in(s),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SallyJson {
    pub e0: i64,
    pub e1: i64,
    pub l_r_i: i64,
    pub rank: i64,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ConductorJson {
    pub gens: Vec<i64>,
    pub colength: usize,
    pub form_index: Option<usize>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct KModRJson {
    pub mu: usize,
    pub length: usize,
    pub free_rank: usize,
    pub residue_rank: usize,
    pub free: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SPrimeJson {
    pub gens: Vec<i64>,
    pub gorenstein: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct AnalyzeJson {
    pub manifest: RunManifest,
    pub generators: Vec<i64>,
    pub frobenius: i64,
    pub genus: usize,
    pub pf: Vec<i64>,
    #[serde(rename = "type")]
    pub type_r: usize,
    pub embdim: usize,
    pub multiplicity: i64,
    pub minimal_multiplicity: bool,
    pub class: String,
    pub sally: SallyJson,
    pub conductor: ConductorJson,
    pub kmodr: Option<KModRJson>,
    pub s_prime: SPrimeJson,
    pub canonical_gens: Vec<i64>,
}

impl AnalyzeJson {
    pub fn new(manifest: RunManifest, r: &ClassificationReport) -> Self {
        let s = &r.semigroup;
        let h = &r.hilbert;
        Self {
            manifest,
            generators: s.generators().to_vec(),
            frobenius: s.frobenius(),
            genus: s.genus(),
            pf: s.pseudo_frobenius().to_vec(),
            type_r: s.type_r(),
            embdim: s.embedding_dimension(),
            multiplicity: s.multiplicity(),
            minimal_multiplicity: r.minimal_multiplicity,
            class: r.label.to_string(),
            sally: SallyJson {
                e0: h.e0,
                e1: h.e1,
                l_r_i: h.l_r_i,
                rank: h.sally_rank,
            },
            conductor: ConductorJson {
                gens: r.conductor.minimal_generators(s),
                colength: r.conductor_colength,
                form_index: r.conductor_form.and_then(|f| f.index),
            },
            kmodr: r.kmodr.map(|d| KModRJson {
                mu: d.mu,
                length: d.length,
                free_rank: d.free_rank,
                residue_rank: d.residue_rank,
                free: d.is_free,
            }),
            s_prime: SPrimeJson {
                gens: r.s_prime.generators().to_vec(),
                gorenstein: r.s_gorenstein,
            },
            canonical_gens: r.canonical.minimal_generators(s),
        }
    }
}

#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq)]
pub struct ChecksJson {
    pub proper_over_q: bool,
    pub square_is_qi: bool,
    pub quotient_free: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub good_ideal: Option<bool>,
}

impl From<UlrichChecks> for ChecksJson {
    fn from(c: UlrichChecks) -> Self {
        Self {
            proper_over_q: c.proper_over_q,
            square_is_qi: c.square_is_qi,
            quotient_free: c.quotient_free,
            good_ideal: c.good_ideal,
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CertificateJson {
    pub gens: Vec<i64>,
    pub v: i64,
    pub mu: usize,
    pub colength: usize,
    pub checks: ChecksJson,
}

impl CertificateJson {
    pub fn new(s: &NumericalSemigroup, c: &UlrichCertificate) -> Self {
        Self {
            gens: c.generators(s),
            v: c.v,
            mu: c.mu,
            colength: c.l_r_i,
            checks: c.checks.into(),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct PredictionJson {
    pub kmodr_free: bool,
    pub predicted: Vec<Vec<i64>>,
    pub agrees: bool,
}

impl PredictionJson {
    pub fn new(s: &NumericalSemigroup, p: &PredictionReport) -> Self {
        Self {
            kmodr_free: p.kmodr_free,
            predicted: p.predicted.iter().map(|e| e.minimal_generators(s)).collect(),
            agrees: p.agrees(),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ConductorCriterionJson {
    pub conductor: Vec<i64>,
    pub c_is_ulrich: bool,
    pub s_prime_gorenstein: bool,
    pub kmodr_free: bool,
    pub c_squared_is_fc: bool,
    pub holds: bool,
}

impl ConductorCriterionJson {
    pub fn new(s: &NumericalSemigroup, r: &ConductorUlrichReport) -> Self {
        Self {
            conductor: r.conductor.minimal_generators(s),
            c_is_ulrich: r.c_is_ulrich(),
            s_prime_gorenstein: r.s_prime_symmetric,
            kmodr_free: r.kmodr_free,
            c_squared_is_fc: r.c_squared_is_fc,
            holds: r.holds(),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ConsequencesJson {
    pub kmodr_free: bool,
    pub conductor_degenerate: bool,
    pub sum_with_conductor_is_maximal: bool,
    pub holds: bool,
}

impl From<TwoGeneratedConsequences> for ConsequencesJson {
    fn from(c: TwoGeneratedConsequences) -> Self {
        Self {
            kmodr_free: c.kmodr_free,
            conductor_degenerate: c.conductor_degenerate,
            sum_with_conductor_is_maximal: c.sum_with_conductor_is_maximal,
            holds: c.holds(),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TwoGeneratedJson {
    pub gens: Vec<i64>,
    pub relation: RelationJson,
    pub consequences: Option<ConsequencesJson>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct RelationJson {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub c_in_ideal: bool,
    pub matrix_squares_to_relation: bool,
}

impl From<TwoGeneratedRelation> for RelationJson {
    fn from(r: TwoGeneratedRelation) -> Self {
        Self {
            a: r.a,
            b: r.b,
            c: r.c,
            c_in_ideal: r.c_in_ideal,
            matrix_squares_to_relation: r.matrix_squares_to_relation,
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct WitnessJson {
    pub witness: Option<Vec<i64>>,
    pub conductor_mu: usize,
    pub embdim: usize,
    pub minimal_multiplicity: bool,
    pub holds: Option<bool>,
}

impl WitnessJson {
    pub fn new(s: &NumericalSemigroup, r: &GorensteinWitnessReport) -> Self {
        Self {
            witness: r.witness.as_ref().map(|c| c.generators(s)),
            conductor_mu: r.conductor_mu,
            embdim: r.embedding_dimension,
            minimal_multiplicity: r.minimal_multiplicity,
            holds: r.holds(),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct UlrichJson {
    pub manifest: RunManifest,
    pub generators: Vec<i64>,
    pub v_max: i64,
    pub regular: bool,
    pub certificates: Vec<CertificateJson>,
    pub prediction: Option<PredictionJson>,
    pub conductor_criterion: Option<ConductorCriterionJson>,
    pub two_generated: Vec<TwoGeneratedJson>,
    pub gorenstein_witness: Option<WitnessJson>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct KernelGeneratorJson {
    pub degree: u64,
    pub polynomial: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct VariableJson {
    pub name: String,
    pub weight: u64,
}

pub fn variables(ring: &WeightedPolyRing) -> Vec<VariableJson> {
    ring.names()
        .iter()
        .zip(ring.weights())
        .map(|(n, &w)| VariableJson {
            name: n.clone(),
            weight: w,
        })
        .collect()
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ToricJson {
    pub manifest: RunManifest,
    pub generators: Vec<i64>,
    pub variables: Vec<VariableJson>,
    pub d_max: u64,
    pub count: usize,
    pub degree_bound_too_small: bool,
    pub kernel_generators: Vec<KernelGeneratorJson>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VerdictJson {
    ContainedAndEqualToBound { d_max: u64 },
    ContainedButSmaller { degree: u64, missing: usize },
    NotContained { index: usize, generator: String },
    NotHomogeneous { index: usize, generator: String },
}

impl VerdictJson {
    pub fn new(v: &KernelVerdict, assembled: &[String]) -> Self {
        let name = |i: &usize| assembled.get(*i).cloned().unwrap_or_default();
        match v {
            KernelVerdict::ContainedAndEqualToBound { d_max } => Self::ContainedAndEqualToBound { d_max: *d_max },
            KernelVerdict::ContainedButSmaller { degree, missing } => Self::ContainedButSmaller {
                degree: *degree,
                missing: *missing,
            },
            KernelVerdict::NotContained { index } => Self::NotContained {
                index: *index,
                generator: name(index),
            },
            KernelVerdict::NotHomogeneous { index } => Self::NotHomogeneous {
                index: *index,
                generator: name(index),
            },
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Self::ContainedAndEqualToBound { .. } => "contained_and_equal_to_bound",
            Self::ContainedButSmaller { .. } => "contained_but_smaller",
            Self::NotContained { .. } => "not_contained",
            Self::NotHomogeneous { .. } => "not_homogeneous",
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CellJson {
    pub row: usize,
    pub col: usize,
    pub reason: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct JFailureJson {
    pub col: usize,
    pub entry: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ShapeJson {
    pub j_failures: Vec<JFailureJson>,
    pub assembled: Vec<String>,
    pub verdict: VerdictJson,
    pub two_agl: Option<bool>,
    pub block_count_matches_type: bool,
    pub minimal_multiplicity_q_zero: bool,
    pub embdim_three_shape: bool,
}

impl ShapeJson {
    pub fn new(r: &ShapeReport, ring: &WeightedPolyRing) -> Self {
        let assembled: Vec<String> = r.assembled.iter().map(|p| p.display(ring).to_string()).collect();
        Self {
            j_failures: r
                .j_failures
                .iter()
                .map(|f| JFailureJson {
                    col: f.col,
                    entry: f.entry.clone(),
                })
                .collect(),
            verdict: VerdictJson::new(&r.verdict, &assembled),
            assembled,
            two_agl: r.two_agl,
            block_count_matches_type: r.block_count_matches_type,
            minimal_multiplicity_q_zero: r.minimal_multiplicity_q_zero,
            embdim_three_shape: r.embdim_three_shape,
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct PresentationJson {
    pub manifest: RunManifest,
    pub name: String,
    pub generators: Vec<i64>,
    pub blocks: crate::presentation::BlockSpec,
    pub d_max: u64,
    pub kernel_generator_count: usize,
    pub shape_error: Option<CellJson>,
    pub shape: Option<ShapeJson>,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct IdealizationJson {
    pub manifest: RunManifest,
    pub generators: Vec<i64>,
    pub q_value: i64,
    pub l_a_i: usize,
    pub l_i_i2: usize,
    pub mu: usize,
    pub checks: ChecksJson,
    pub ulrich: bool,
}

impl IdealizationJson {
    pub fn new(manifest: RunManifest, s: &NumericalSemigroup, c: &IdealizationCertificate) -> Self {
        Self {
            manifest,
            generators: s.generators().to_vec(),
            q_value: c.q_value,
            l_a_i: c.l_a_i,
            l_i_i2: c.l_i_i2,
            mu: c.mu,
            checks: c.checks.into(),
            ulrich: c.checks.passed(),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CorpusMemberJson {
    pub generators: Vec<i64>,
    pub frobenius: i64,
    pub genus: usize,
    #[serde(rename = "type")]
    pub type_r: usize,
    pub class: String,
    pub conductor_colength: usize,
}

#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct CorpusSummaryJson {
    pub gorenstein: usize,
    pub almost_gorenstein: usize,
    pub two_almost_gorenstein: usize,
    pub higher_rank: usize,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CorpusJson {
    pub manifest: RunManifest,
    pub seed: u64,
    pub count: usize,
    pub max_frobenius: i64,
    pub members: Vec<CorpusMemberJson>,
    pub summary: CorpusSummaryJson,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SuiteRowJson {
    pub id: String,
    pub claim: String,
    pub observed: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SuiteJson {
    pub manifest: RunManifest,
    pub results: Vec<SuiteRowJson>,
    pub passed: usize,
    pub failed: usize,
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("report types serialize");
    out.push('\n');
    out
}

pub fn list(values: &[i64]) -> String {
    let parts: Vec<String> = values.iter().map(i64::to_string).collect();
    format!("{{{}}}", parts.join(","))
}
