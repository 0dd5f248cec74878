//! The bundled regression table of worked examples.

use std::path::Path;

use agl_core::classify::{classify, kmodr_decomposition, ClassLabel};
use agl_core::toric::{check_determinantal_shape, default_degree_bound, minimal_kernel_generators};
use agl_core::ulrich::{
    conductor_ulrich_iff, default_v_max, gorenstein_witness_check, idealization_ulrich, is_ulrich,
    scan_monomial_ulrich, verify_minimal_multiplicity_prediction,
};
use agl_core::{NumericalSemigroup, ValueIdeal};
use anyhow::Result;

use crate::presentation::{bundled, PresentationManifest};
use crate::report::SuiteRowJson;

fn sg(gens: &[u64]) -> Result<NumericalSemigroup> {
    Ok(NumericalSemigroup::from_generators(gens)?)
}

fn row(id: &str, claim: &str, f: impl FnOnce() -> Result<(String, bool)>) -> SuiteRowJson {
    let (observed, pass) = match f() {
        Ok(r) => r,
        Err(e) => (format!("error: {e:#}"), false),
    };
    SuiteRowJson {
        id: id.to_string(),
        claim: claim.to_string(),
        observed,
        pass,
    }
}

fn scan_gens(gens: &[u64]) -> Result<Vec<Vec<i64>>> {
    let s = sg(gens)?;
    let mut out: Vec<Vec<i64>> = scan_monomial_ulrich(&s, default_v_max(&s))?
        .iter()
        .map(|c| c.generators(&s))
        .collect();
    out.sort();
    Ok(out)
}

type Summary = (String, ClassLabel, usize, Vec<i64>, Vec<i64>);

fn summary(gens: &[u64]) -> Result<Summary> {
    let s = sg(gens)?;
    let r = classify(&s)?;
    let c = r.conductor.minimal_generators(&s);
    let k = r.canonical.minimal_generators(&s);
    let text = format!("{}, r = {}, c = {:?}, K gens = {:?}", r.label, s.type_r(), c, k);
    Ok((text, r.label, s.type_r(), c, k))
}

fn manifest(fixtures: Option<&Path>, name: &str) -> Result<PresentationManifest> {
    match fixtures {
        Some(dir) => PresentationManifest::load(&dir.join(format!("{name}.json"))),
        None => PresentationManifest::from_json(bundled(name).expect("bundled manifest")),
    }
}

fn presentation(fixtures: Option<&Path>, name: &str, expected_generators: usize) -> Result<(String, bool)> {
    let m = manifest(fixtures, name)?;
    let s = m.semigroup()?;
    let ring = m.ring(&s)?;
    let mat = m.matrix(&ring)?;
    let d_max = default_degree_bound(&s);
    let count = minimal_kernel_generators(&ring, d_max).count();
    let report = check_determinantal_shape(&mat, &ring, m.blocks(), &s, d_max)?;
    Ok((
        format!(
            "kernel generators {count}, verdict {:?}, entries outside J {}",
            report.verdict,
            report.j_failures.len()
        ),
        count == expected_generators && report.passed(),
    ))
}

/// Every row; a row that errors is reported as a failure with the error text.
pub fn run(fixtures: Option<&Path>) -> Result<Vec<SuiteRowJson>> {
    let mut rows = Vec::new();

    rows.push(row("378.class", "<3,7,8> is 2-AGL of type 2 with minimal multiplicity", || {
        let (t, label, r, _, _) = summary(&[3, 7, 8])?;
        let mm = sg(&[3, 7, 8])?.has_minimal_multiplicity();
        Ok((t, label == ClassLabel::TwoAlmostGorenstein && r == 2 && mm))
    }));
    rows.push(row("378.ulrich", "Ulrich ideals of <3,7,8>: c = (t^6,t^7,t^8) and m", || {
        let got = scan_gens(&[3, 7, 8])?;
        Ok((format!("{got:?}"), got == vec![vec![3, 7, 8], vec![6, 7, 8]]))
    }));
    rows.push(row("378.prediction", "K/R free, so the Ulrich ideals are exactly {c, m}", || {
        let s = sg(&[3, 7, 8])?;
        let p = verify_minimal_multiplicity_prediction(&s, default_v_max(&s))?;
        Ok((format!("free {}, agrees {}", p.kmodr_free, p.agrees()), p.kmodr_free && p.agrees()))
    }));
    rows.push(row("4-9-11-14.class", "<4,9,11,14> is 2-AGL, r = 3, c = (t^8,t^9,t^11,t^14), K = R + Rt^3 + Rt^5", || {
        let (t, label, r, c, k) = summary(&[4, 9, 11, 14])?;
        Ok((
            t,
            label == ClassLabel::TwoAlmostGorenstein && r == 3 && c == vec![8, 9, 11, 14] && k == vec![0, 3, 5],
        ))
    }));
    rows.push(row("4-9-11-14.kmodr", "K/R is not R/c-free", || {
        let d = kmodr_decomposition(&sg(&[4, 9, 11, 14])?)?;
        Ok((format!("{d:?}"), !d.is_free && d.free_rank == 1 && d.residue_rank == 1))
    }));
    rows.push(row("4-9-11-14.ulrich", "the only Ulrich ideal of <4,9,11,14> is m", || {
        let got = scan_gens(&[4, 9, 11, 14])?;
        Ok((format!("{got:?}"), got == vec![vec![4, 9, 11, 14]]))
    }));
    rows.push(row("6-8-10-11.ulrich", "monomial Ulrich ideals of <6,8,10,11>: (t^6,t^11), (t^8,t^11), c", || {
        let got = scan_gens(&[6, 8, 10, 11])?;
        Ok((format!("{got:?}"), got == vec![vec![6, 8, 10], vec![6, 11], vec![8, 11]]))
    }));
    rows.push(row("6-8-10-11.class", "<6,8,10,11> is 2-AGL of type 2 with c = (t^6,t^8,t^10)", || {
        let (t, label, r, c, _) = summary(&[6, 8, 10, 11])?;
        Ok((t, label == ClassLabel::TwoAlmostGorenstein && r == 2 && c == vec![6, 8, 10]))
    }));
    rows.push(row("6-8-10-11.conductor", "c is Ulrich, S' is Gorenstein and K/R is free", || {
        let r = conductor_ulrich_iff(&sg(&[6, 8, 10, 11])?)?;
        Ok((
            format!("c Ulrich {}, S' Gorenstein {}, free {}", r.c_is_ulrich(), r.s_prime_symmetric, r.kmodr_free),
            r.c_is_ulrich() && r.s_prime_symmetric && r.kmodr_free && r.holds(),
        ))
    }));
    rows.push(row("6-8-10-11.witness", "a two-generated Ulrich ideal forces mu(c) = n - 1 and e != n", || {
        let s = sg(&[6, 8, 10, 11])?;
        let r = gorenstein_witness_check(&s, default_v_max(&s))?;
        Ok((
            format!("mu(c) = {}, n = {}, minimal multiplicity {}", r.conductor_mu, r.embedding_dimension, r.minimal_multiplicity),
            r.holds() == Some(true),
        ))
    }));
    rows.push(row("378.conductor", "c of <3,7,8> is Ulrich", || {
        let r = conductor_ulrich_iff(&sg(&[3, 7, 8])?)?;
        Ok((format!("c Ulrich {}", r.c_is_ulrich()), r.c_is_ulrich() && r.holds()))
    }));
    rows.push(row("5-7-9-13.class", "<5,7,9,13> is 2-AGL, r = 2, c = (t^7,t^9,t^10,t^13), K = R + Rt^3, K/R free", || {
        let (t, label, r, c, k) = summary(&[5, 7, 9, 13])?;
        let free = kmodr_decomposition(&sg(&[5, 7, 9, 13])?)?.is_free;
        Ok((
            format!("{t}, free {free}"),
            label == ClassLabel::TwoAlmostGorenstein && r == 2 && c == vec![7, 9, 10, 13] && k == vec![0, 3] && free,
        ))
    }));
    rows.push(row("5-7-9-13.presentation", "2x2 minors plus Y^2 - XZ, Z^2 - XW generate the defining ideal (5 generators)", || {
        presentation(fixtures, "curve_5_7_9_13", 5)
    }));
    rows.push(row("4-9-11-14.presentation", "two blocks of 2x2 minors generate the defining ideal (6 generators)", || {
        presentation(fixtures, "curve_4_9_11_14", 6)
    }));
    rows.push(row("controls.2-3", "<2,3> is Gorenstein", || {
        let (t, label, ..) = summary(&[2, 3])?;
        Ok((t, label == ClassLabel::Gorenstein))
    }));
    rows.push(row("controls.3-4-5", "<3,4,5> is almost Gorenstein with c = m", || {
        let s = sg(&[3, 4, 5])?;
        let r = classify(&s)?;
        Ok((
            r.label.to_string(),
            r.label == ClassLabel::AlmostGorenstein && r.conductor == ValueIdeal::maximal(&s),
        ))
    }));
    rows.push(row("idealization.3-4-5", "q x R is Ulrich in R x R with two generators", || {
        let c = idealization_ulrich(&sg(&[3, 4, 5])?, 3)?;
        Ok((
            format!("l(A/I) = {}, l(I/I^2) = {}, mu = {}", c.l_a_i, c.l_i_i2, c.mu),
            c.checks.passed() && (c.l_a_i, c.l_i_i2, c.mu) == (3, 6, 2),
        ))
    }));
    rows.push(row("idealization.2-3", "q x R is Ulrich in R x R for <2,3>, q = (t^2)", || {
        let c = idealization_ulrich(&sg(&[2, 3])?, 2)?;
        Ok((
            format!("l(A/I) = {}, l(I/I^2) = {}", c.l_a_i, c.l_i_i2),
            c.checks.passed() && (c.l_a_i, c.l_i_i2) == (2, 4),
        ))
    }));
    rows.push(row("6-8-10-11.two-generated", "(t^6,t^11) is Ulrich with l(R/I) = 3", || {
        let s = sg(&[6, 8, 10, 11])?;
        let cert = is_ulrich(&s, &ValueIdeal::generated(&s, &[6, 11]))?;
        Ok(match cert {
            Some(c) => (format!("v = {}, mu = {}, l = {}", c.v, c.mu, c.l_r_i), (c.v, c.mu, c.l_r_i) == (6, 2, 3)),
            None => ("not Ulrich".to_string(), false),
        })
    }));
    Ok(rows)
}
