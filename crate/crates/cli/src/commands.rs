//! One function per subcommand. Each returns the rendered output and whether
//! all mathematical checks passed.

use std::fmt::Write as _;
use std::path::Path;

use agl_core::classify::{classify, ClassLabel};
use agl_core::toric::{
    check_determinantal_shape, default_degree_bound, minimal_kernel_generators, WeightedPolyRing,
};
use agl_core::ulrich::{
    conductor_ulrich_iff, gorenstein_witness_check, default_v_max, idealization_ulrich, two_generated_consequences,
    two_generated_relation, verify_minimal_multiplicity_prediction,
};
use agl_core::{Error, NumericalSemigroup};
use anyhow::Result;
use rayon::prelude::*;

use crate::presentation::PresentationManifest;
use crate::report::*;
use crate::scan::parallel_scan;
use crate::{corpus, suite, Format, Outcome};

fn semigroup(gens: &[u64]) -> Result<NumericalSemigroup> {
    Ok(NumericalSemigroup::from_generators(gens)?)
}

fn render<T: serde::Serialize>(format: Format, json: &T, text: impl FnOnce() -> String) -> String {
    match format {
        Format::Json => to_json(json),
        Format::Text => text(),
    }
}

pub fn analyze(gens: &[u64], format: Format) -> Result<Outcome> {
    let s = semigroup(gens)?;
    let report = classify(&s)?;
    let json = AnalyzeJson::new(RunManifest::new("analyze", gens, RunManifest::options(format)), &report);
    let output = render(format, &json, || {
        let mut t = String::new();
        let _ = writeln!(t, "semigroup: {s}");
        let _ = writeln!(t, "frobenius: {}  genus: {}  type: {}", json.frobenius, json.genus, json.type_r);
        let _ = writeln!(t, "pseudo-frobenius: {}", list(&json.pf));
        let _ = writeln!(
            t,
            "multiplicity: {}  embedding dimension: {}  minimal multiplicity: {}",
            json.multiplicity, json.embdim, json.minimal_multiplicity
        );
        let _ = writeln!(t, "canonical ideal generators: {}", list(&json.canonical_gens));
        let _ = writeln!(
            t,
            "sally: e0 = {}  e1 = {}  l(R/I) = {}  rank = {}",
            json.sally.e0, json.sally.e1, json.sally.l_r_i, json.sally.rank
        );
        let _ = writeln!(
            t,
            "conductor: {}  colength {}",
            list(&json.conductor.gens),
            json.conductor.colength
        );
        if let Some(i) = json.conductor.form_index {
            let _ = writeln!(t, "conductor form: c = (x{i}^2) + (other generators)");
        }
        if let Some(d) = &json.kmodr {
            let _ = writeln!(
                t,
                "K/R: mu = {}  length = {}  free rank = {}  residue rank = {}  free: {}",
                d.mu, d.length, d.free_rank, d.residue_rank, d.free
            );
        }
        let _ = writeln!(
            t,
            "S' = <{}>  gorenstein: {}",
            json.s_prime.gens.iter().map(i64::to_string).collect::<Vec<_>>().join(","),
            json.s_prime.gorenstein
        );
        let _ = writeln!(t, "class: {}", json.class);
        t
    });
    Ok(Outcome { output, passed: true })
}

pub fn ulrich(gens: &[u64], v_max: Option<i64>, format: Format) -> Result<Outcome> {
    let s = semigroup(gens)?;
    let v_max = v_max.unwrap_or_else(|| default_v_max(&s));
    let mut options = RunManifest::options(format);
    options.v_max = Some(v_max);
    let manifest = RunManifest::new("ulrich", gens, options);

    let mut json = UlrichJson {
        manifest,
        generators: s.generators().to_vec(),
        v_max,
        regular: s.is_natural(),
        certificates: Vec::new(),
        prediction: None,
        conductor_criterion: None,
        two_generated: Vec::new(),
        gorenstein_witness: None,
    };
    if s.is_natural() {
        let output = render(format, &json, || {
            "regular ring (S = N): the maximal ideal is principal and there are no Ulrich ideals\n".to_string()
        });
        return Ok(Outcome { output, passed: true });
    }

    let certs = parallel_scan(&s, v_max)?;
    let report = classify(&s)?;
    let two_agl = report.label == ClassLabel::TwoAlmostGorenstein;
    json.certificates = certs.iter().map(|c| CertificateJson::new(&s, c)).collect();
    if two_agl && s.has_minimal_multiplicity() {
        json.prediction = Some(PredictionJson::new(&s, &verify_minimal_multiplicity_prediction(&s, v_max)?));
    }
    if two_agl {
        json.conductor_criterion = Some(ConductorCriterionJson::new(&s, &conductor_ulrich_iff(&s)?));
        if report.s_gorenstein {
            json.gorenstein_witness = Some(WitnessJson::new(&s, &gorenstein_witness_check(&s, v_max)?));
        }
    }
    for cert in certs.iter().filter(|c| c.mu == 2) {
        json.two_generated.push(TwoGeneratedJson {
            gens: cert.generators(&s),
            relation: two_generated_relation(&s, cert)?.into(),
            consequences: if two_agl { Some(two_generated_consequences(&s, cert)?.into()) } else { None },
        });
    }

    let passed = json.prediction.as_ref().is_none_or(|p| p.agrees)
        && json.conductor_criterion.as_ref().is_none_or(|c| c.holds)
        && json.gorenstein_witness.as_ref().is_none_or(|w| w.holds != Some(false))
        && json.two_generated.iter().all(|t| {
            t.relation.c_in_ideal
                && t.relation.matrix_squares_to_relation
                && t.consequences.as_ref().is_none_or(|c| c.holds)
        });

    let output = render(format, &json, || {
        let mut t = String::new();
        let _ = writeln!(t, "semigroup: {s}");
        let _ = writeln!(t, "monomial Ulrich ideals with minimum value <= {v_max}: {}", certs.len());
        for c in &json.certificates {
            let _ = writeln!(
                t,
                "  {}  v = {}  mu = {}  l(R/I) = {}",
                list(&c.gens),
                c.v,
                c.mu,
                c.colength
            );
        }
        if let Some(p) = &json.prediction {
            let predicted: Vec<String> = p.predicted.iter().map(|g| list(g)).collect();
            let _ = writeln!(
                t,
                "predicted for 2-AGL with minimal multiplicity: {}  agrees: {}",
                predicted.join(" "),
                p.agrees
            );
        }
        if let Some(c) = &json.conductor_criterion {
            let _ = writeln!(
                t,
                "conductor Ulrich: {}  S' gorenstein: {}  K/R free: {}  c^2 = fc: {}  equivalence holds: {}",
                c.c_is_ulrich, c.s_prime_gorenstein, c.kmodr_free, c.c_squared_is_fc, c.holds
            );
        }
        for g in &json.two_generated {
            let _ = writeln!(
                t,
                "two-generated {}: b^2 = ac with c = t^{} in I: {}",
                list(&g.gens),
                g.relation.c,
                g.relation.c_in_ideal
            );
            if let Some(c) = &g.consequences {
                let _ = writeln!(
                    t,
                    "  K/R free: {}  c = (x2..xn): {}  I + c = m: {}",
                    c.kmodr_free, c.conductor_degenerate, c.sum_with_conductor_is_maximal
                );
            }
        }
        if let Some(w) = &json.gorenstein_witness {
            match w.holds {
                Some(h) => {
                    let _ = writeln!(
                        t,
                        "S' gorenstein with two-generated witness: mu(c) = {}  n = {}  minimal multiplicity: {}  holds: {h}",
                        w.conductor_mu, w.embdim, w.minimal_multiplicity
                    );
                }
                None => {
                    let _ = writeln!(t, "S' gorenstein: no two-generated witness");
                }
            }
        }
        t
    });
    Ok(Outcome { output, passed })
}

pub fn toric(gens: &[u64], d_max: Option<u64>, format: Format) -> Result<Outcome> {
    let s = semigroup(gens)?;
    let d_max = d_max.unwrap_or_else(|| default_degree_bound(&s));
    let ring = WeightedPolyRing::for_semigroup(&s);
    let found = minimal_kernel_generators(&ring, d_max);
    let mut options = RunManifest::options(format);
    options.d_max = Some(d_max);
    let json = ToricJson {
        manifest: RunManifest::new("toric", gens, options),
        generators: s.generators().to_vec(),
        variables: variables(&ring),
        d_max,
        count: found.count(),
        degree_bound_too_small: found.degree_bound_too_small,
        kernel_generators: found
            .generators
            .iter()
            .map(|(d, g)| KernelGeneratorJson {
                degree: *d,
                polynomial: g.display(&ring).to_string(),
            })
            .collect(),
    };
    let output = render(format, &json, || {
        let mut t = String::new();
        let _ = writeln!(t, "semigroup: {s}");
        let _ = writeln!(
            t,
            "minimal generators of the defining ideal up to degree {d_max}: {}",
            json.count
        );
        for g in &json.kernel_generators {
            let _ = writeln!(t, "  [{}] {}", g.degree, g.polynomial);
        }
        if json.degree_bound_too_small {
            let _ = writeln!(t, "warning: a generator appeared close to the degree bound; raise --max-deg");
        }
        t
    });
    Ok(Outcome {
        output,
        passed: !json.degree_bound_too_small,
    })
}

/// Where a presentation manifest comes from.
pub enum ManifestSource<'a> {
    Path(&'a Path),
    Bundled(&'a str),
}

pub fn check_presentation(source: ManifestSource<'_>, d_max: Option<u64>, format: Format) -> Result<Outcome> {
    let (manifest, label) = match source {
        ManifestSource::Path(p) => (PresentationManifest::load(p)?, p.display().to_string()),
        ManifestSource::Bundled(name) => {
            let text = crate::presentation::bundled(name)
                .ok_or_else(|| anyhow::anyhow!("no bundled manifest named `{name}` (try curve_5_7_9_13 or curve_4_9_11_14)"))?;
            (PresentationManifest::from_json(text)?, format!("bundled:{name}"))
        }
    };
    let s = manifest.semigroup()?;
    let ring = manifest.ring(&s)?;
    let mat = manifest.matrix(&ring)?;
    let d_max = d_max.unwrap_or_else(|| default_degree_bound(&s));
    let mut options = RunManifest::options(format);
    options.d_max = Some(d_max);
    options.manifest = Some(label);

    let mut json = PresentationJson {
        manifest: RunManifest::new("check-presentation", &manifest.generators, options),
        name: manifest.name.clone(),
        generators: s.generators().to_vec(),
        blocks: manifest.blocks,
        d_max,
        kernel_generator_count: minimal_kernel_generators(&ring, d_max).count(),
        shape_error: None,
        shape: None,
        passed: false,
    };
    match check_determinantal_shape(&mat, &ring, manifest.blocks(), &s, d_max) {
        Ok(report) => {
            json.passed = report.passed();
            json.shape = Some(ShapeJson::new(&report, &ring));
        }
        Err(Error::ShapeMismatch { row, col, reason }) => {
            json.shape_error = Some(CellJson { row, col, reason });
        }
        Err(e) => return Err(e.into()),
    }

    let output = render(format, &json, || {
        let mut t = String::new();
        let _ = writeln!(t, "presentation {} over {s}, degree bound {d_max}", json.name);
        let _ = writeln!(t, "minimal generators of the defining ideal: {}", json.kernel_generator_count);
        if let Some(e) = &json.shape_error {
            let _ = writeln!(t, "shape mismatch at row {}, column {}: {}", e.row, e.col, e.reason);
        }
        if let Some(sh) = &json.shape {
            for f in &sh.j_failures {
                let _ = writeln!(t, "entry outside J at row 1, column {}: {}", f.col, f.entry);
            }
            let _ = writeln!(t, "assembled generators: {}", sh.assembled.len());
            for g in &sh.assembled {
                let _ = writeln!(t, "  {g}");
            }
            let _ = match &sh.verdict {
                VerdictJson::ContainedAndEqualToBound { d_max } => {
                    writeln!(t, "verdict: contained_and_equal_to_bound (checked up to degree {d_max})")
                }
                VerdictJson::ContainedButSmaller { degree, missing } => {
                    writeln!(t, "verdict: contained_but_smaller (degree {degree}, {missing} missing)")
                }
                VerdictJson::NotContained { index, generator } => {
                    writeln!(t, "verdict: not_contained (assembled generator {index}: {generator})")
                }
                VerdictJson::NotHomogeneous { index, generator } => {
                    writeln!(t, "verdict: not_homogeneous (assembled generator {index}: {generator})")
                }
            };
            let _ = writeln!(
                t,
                "2-AGL: {}  l + m = r - 1: {}  q = 0 under minimal multiplicity: {}  n = 3 shape: {}",
                sh.two_agl.map_or("not evaluated".to_string(), |b| b.to_string()),
                sh.block_count_matches_type,
                sh.minimal_multiplicity_q_zero,
                sh.embdim_three_shape
            );
        }
        let _ = writeln!(t, "result: {}", if json.passed { "PASS" } else { "FAIL" });
        t
    });
    Ok(Outcome {
        output,
        passed: json.passed,
    })
}

pub fn idealization(gens: &[u64], q: i64, format: Format) -> Result<Outcome> {
    let s = semigroup(gens)?;
    let cert = idealization_ulrich(&s, q)?;
    let mut options = RunManifest::options(format);
    options.q = Some(q);
    let json = IdealizationJson::new(RunManifest::new("idealization", gens, options), &s, &cert);
    let output = render(format, &json, || {
        let mut t = String::new();
        let _ = writeln!(t, "A = R x R over {s}, I = (t^{q}) x R");
        let _ = writeln!(
            t,
            "l(A/I) = {}  l(I/I^2) = {}  mu(I) = {}",
            json.l_a_i, json.l_i_i2, json.mu
        );
        let _ = writeln!(
            t,
            "I != Q: {}  I^2 = QI: {}  I/I^2 free: {}",
            json.checks.proper_over_q, json.checks.square_is_qi, json.checks.quotient_free
        );
        let _ = writeln!(t, "ulrich: {}", json.ulrich);
        t
    });
    Ok(Outcome {
        output,
        passed: json.ulrich,
    })
}

pub fn corpus(count: usize, max_frobenius: i64, seed: u64, format: Format) -> Result<Outcome> {
    let members = corpus::generate(count, max_frobenius, seed);
    let reports: Vec<_> = members.par_iter().map(classify).collect::<Result<_, _>>()?;
    let mut summary = CorpusSummaryJson::default();
    let members: Vec<CorpusMemberJson> = reports
        .iter()
        .map(|r| {
            match r.label {
                ClassLabel::Gorenstein => summary.gorenstein += 1,
                ClassLabel::AlmostGorenstein => summary.almost_gorenstein += 1,
                ClassLabel::TwoAlmostGorenstein => summary.two_almost_gorenstein += 1,
                ClassLabel::Rank(_) => summary.higher_rank += 1,
            }
            CorpusMemberJson {
                generators: r.semigroup.generators().to_vec(),
                frobenius: r.semigroup.frobenius(),
                genus: r.semigroup.genus(),
                type_r: r.semigroup.type_r(),
                class: r.label.to_string(),
                conductor_colength: r.conductor_colength,
            }
        })
        .collect();
    let mut options = RunManifest::options(format);
    options.seed = Some(seed);
    options.count = Some(count);
    options.max_frobenius = Some(max_frobenius);
    let json = CorpusJson {
        manifest: RunManifest::new("corpus", &[], options),
        seed,
        count: members.len(),
        max_frobenius,
        members,
        summary,
    };
    let output = render(format, &json, || {
        let mut t = String::new();
        let _ = writeln!(t, "seed {seed}, {} semigroups with F <= {max_frobenius}", json.count);
        for m in &json.members {
            let gens: Vec<String> = m.generators.iter().map(i64::to_string).collect();
            let _ = writeln!(t, "  <{}>  F = {}  type = {}  {}", gens.join(","), m.frobenius, m.type_r, m.class);
        }
        let s = &json.summary;
        let _ = writeln!(
            t,
            "gorenstein {}  almost_gorenstein {}  two_almost_gorenstein {}  higher {}",
            s.gorenstein, s.almost_gorenstein, s.two_almost_gorenstein, s.higher_rank
        );
        t
    });
    Ok(Outcome { output, passed: true })
}

pub fn worked_examples(fixtures: Option<&Path>, format: Format) -> Result<Outcome> {
    let rows = suite::run(fixtures)?;
    let failed = rows.iter().filter(|r| !r.pass).count();
    let json = SuiteJson {
        manifest: RunManifest::new("examples", &[], RunManifest::options(format)),
        passed: rows.len() - failed,
        failed,
        results: rows,
    };
    let output = render(format, &json, || {
        let mut t = String::new();
        let width = json.results.iter().map(|r| r.id.len()).max().unwrap_or(0);
        for r in &json.results {
            let _ = writeln!(
                t,
                "{}  {:width$}  {}  [{}]",
                if r.pass { "PASS" } else { "FAIL" },
                r.id,
                r.claim,
                r.observed
            );
        }
        let _ = writeln!(t, "{} passed, {} failed", json.passed, json.failed);
        t
    });
    Ok(Outcome {
        output,
        passed: failed == 0,
    })
}
