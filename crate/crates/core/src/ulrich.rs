//! Ulrich ideals generated by monomials.
//!
//! For a value ideal `E` with `v = min E` the monomial `t^v` generates a
//! minimal reduction `Q`. The Ulrich conditions become:
//!
//! * `I ⊋ Q`: `E ≠ v + S`;
//! * `I² = QI`: `E + E = v + E`, i.e. `D = E - v` is a semigroup containing `S`;
//! * `I/I²` free over `R/I`: `ℓ(R/I²) - ℓ(R/I) = μ(I)·ℓ(R/I)`.
//!
//! The second point turns the search into a walk over the finitely many
//! oversemigroups `D ⊇ S`: every Ulrich ideal is `v + D` for such a `D` and
//! some `v ∈ S : D`.

use alloc::vec;
use alloc::vec::Vec;

use crate::classify::{classify, conductor_form, kmodr_decomposition, ClassLabel};
use crate::semigroup::NumericalSemigroup;
use crate::toric::{WeightedPolyRing, WeightedPolynomial};
use crate::valueideal::{conductor, ValueIdeal};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UlrichChecks {
    pub proper_over_q: bool,
    pub square_is_qi: bool,
    pub quotient_free: bool,
    /// `Q : I = I`, only evaluated when `μ = 2`.
    pub good_ideal: Option<bool>,
}

impl UlrichChecks {
    pub fn passed(&self) -> bool {
        self.proper_over_q && self.square_is_qi && self.quotient_free
    }
}

/// The numbers behind the Ulrich conditions for one monomial ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UlrichCertificate {
    pub ideal: ValueIdeal,
    pub v: i64,
    pub mu: usize,
    /// `ℓ_R(R/I)`.
    pub l_r_i: usize,
    /// `ℓ_R(I/I²)`.
    pub l_i_i2: usize,
    pub checks: UlrichChecks,
}

impl UlrichCertificate {
    pub fn generators(&self, s: &NumericalSemigroup) -> Vec<i64> {
        self.ideal.minimal_generators(s)
    }
}

/// Evaluates every Ulrich condition for `E`, whether or not they hold.
///
/// For two-generated ideals with `I² = QI` the freeness test and the good
/// ideal test must agree; a disagreement is reported as
/// [`Error::Inconsistent`].
pub fn ulrich_checks(s: &NumericalSemigroup, e: &ValueIdeal) -> Result<UlrichCertificate> {
    if !e.is_integral(s) {
        return Err(Error::NotIntegral);
    }
    if !e.is_module_over(s) {
        return Err(Error::NotModule);
    }
    if e.min() == 0 {
        return Err(Error::NotPrimary);
    }
    let v = e.min();
    let q = ValueIdeal::principal(s, v);
    let square = e.product(e);
    let l_r_i = e.colength(s)?;
    let l_i_i2 = square.colength(s)? - l_r_i;
    let mu = e.mu(s);
    let square_is_qi = square == e.shifted(v);
    let quotient_free = l_i_i2 == mu * l_r_i;
    let good_ideal = (mu == 2).then(|| q.colon(e) == *e);
    if square_is_qi && good_ideal.is_some_and(|g| g != quotient_free) {
        return Err(Error::Inconsistent(alloc::format!(
            "freeness and good-ideal tests disagree for the ideal with values {:?} in {s}",
            e.minimal_generators(s)
        )));
    }
    Ok(UlrichCertificate {
        ideal: e.clone(),
        v,
        mu,
        l_r_i,
        l_i_i2,
        checks: UlrichChecks {
            proper_over_q: *e != q,
            square_is_qi,
            quotient_free,
            good_ideal,
        },
    })
}

/// The certificate for `E` if it is an Ulrich ideal.
pub fn is_ulrich(s: &NumericalSemigroup, e: &ValueIdeal) -> Result<Option<UlrichCertificate>> {
    let cert = ulrich_checks(s, e)?;
    if !cert.checks.passed() {
        return Ok(None);
    }
    if cert.v != (cert.mu * cert.l_r_i) as i64 {
        return Err(Error::Inconsistent(alloc::format!(
            "certified ideal in {s} has v = {} but μ·ℓ(R/I) = {}",
            cert.v,
            cert.mu * cert.l_r_i
        )));
    }
    Ok(Some(cert))
}

/// `3·(F + 1)`. Minimum values of Ulrich ideals never exceed `2·genus`, which
/// is below this bound.
pub fn default_v_max(s: &NumericalSemigroup) -> i64 {
    3 * (s.frobenius() + 1)
}

/// All numerical semigroups `D ⊇ S`, as value ideals with minimum 0.
///
/// Walks the tree rooted at ℕ in which the children of `T` are `T \ {x}` for
/// minimal generators `x > F(T)`; only gaps of `S` are ever removed.
pub fn oversemigroups(s: &NumericalSemigroup) -> Vec<ValueIdeal> {
    let f = s.frobenius();
    if f < 0 {
        return vec![ValueIdeal::interval(0)];
    }
    let top = f as usize;
    let mut out = Vec::new();
    let mut stack: Vec<(Vec<bool>, i64)> = vec![(vec![true; top + 1], -1)];
    while let Some((member, frob)) = stack.pop() {
        for x in (frob + 1).max(1)..=f {
            if s.contains(x) {
                continue;
            }
            let xu = x as usize;
            let decomposable = (1..xu).any(|y| member[y] && member[xu - y]);
            if !decomposable {
                let mut child = member.clone();
                child[xu] = false;
                stack.push((child, x));
            }
        }
        out.push(ValueIdeal::from_predicate(0, f + 1, |z| member[z as usize]));
    }
    out
}

/// Certificates with minimum `v`, given the oversemigroups of `S`.
pub fn scan_at(s: &NumericalSemigroup, v: i64, overs: &[ValueIdeal]) -> Result<Vec<UlrichCertificate>> {
    let mut out = Vec::new();
    if v <= 0 || !s.contains(v) {
        return Ok(out);
    }
    let genus = s.genus() as i64;
    for d in overs {
        // ℓ(R/I) = v + g(D) - g(S) and v = μ·ℓ(R/I) with μ ≥ 2.
        let gap_drop = genus - (0..d.tail()).filter(|&z| !d.contains(z)).count() as i64;
        if v > 2 * gap_drop {
            continue;
        }
        let e = d.shifted(v);
        if !e.is_integral(s) {
            continue;
        }
        if let Some(cert) = is_ulrich(s, &e)? {
            out.push(cert);
        }
    }
    sort_certificates(s, &mut out);
    Ok(out)
}

/// Monomial Ulrich ideals with `min E ≤ v_max`, sorted by `(v, window bits)`.
pub fn scan_monomial_ulrich(s: &NumericalSemigroup, v_max: i64) -> Result<Vec<UlrichCertificate>> {
    if s.is_natural() {
        return Err(Error::RegularRing);
    }
    let overs = oversemigroups(s);
    let mut out = Vec::new();
    for v in 1..=v_max {
        out.extend(scan_at(s, v, &overs)?);
    }
    sort_certificates(s, &mut out);
    Ok(out)
}

/// The same scan by brute force: for each `v`, every subset of
/// `S ∩ (v, v + F]` closed under adding generators is tried. Exponential in
/// `F`; meant as a cross-check for small semigroups.
pub fn scan_monomial_ulrich_exhaustive(
    s: &NumericalSemigroup,
    v_max: i64,
) -> Result<Vec<UlrichCertificate>> {
    if s.is_natural() {
        return Err(Error::RegularRing);
    }
    let f = s.frobenius();
    let mut out = Vec::new();
    for v in s.elements_up_to(v_max).filter(|&v| v > 0) {
        let mut chosen = vec![false; (f + 1) as usize];
        chosen[0] = true;
        let mut found = Vec::new();
        extend_window(s, v, 1, &mut chosen, &mut found);
        for e in found {
            if let Some(cert) = is_ulrich(s, &e)? {
                out.push(cert);
            }
        }
    }
    sort_certificates(s, &mut out);
    Ok(out)
}

// Decides offsets `i..=F` of the window starting at `v`; offset `i` is forced in
// once some chosen element lies a generator below it.
fn extend_window(
    s: &NumericalSemigroup,
    v: i64,
    i: usize,
    chosen: &mut [bool],
    found: &mut Vec<ValueIdeal>,
) {
    if i == chosen.len() {
        let tail = v + chosen.len() as i64;
        found.push(ValueIdeal::from_predicate(v, tail, |z| chosen[(z - v) as usize]));
        return;
    }
    let z = v + i as i64;
    let forced = s
        .generators()
        .iter()
        .any(|&g| g <= i as i64 && chosen[i - g as usize]);
    if s.contains(z) {
        chosen[i] = true;
        extend_window(s, v, i + 1, chosen, found);
    }
    if !forced {
        chosen[i] = false;
        extend_window(s, v, i + 1, chosen, found);
    }
    chosen[i] = false;
}

fn sort_certificates(s: &NumericalSemigroup, certs: &mut Vec<UlrichCertificate>) {
    let len = (s.frobenius() + 1).max(0) as usize;
    certs.sort_by_cached_key(|c| (c.v, c.ideal.window_bits(len)));
    certs.dedup_by(|a, b| a.ideal == b.ideal);
}

/// Predicted versus scanned Ulrich ideals of a 2-AGL ring of minimal
/// multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PredictionReport {
    pub kmodr_free: bool,
    pub v_max: i64,
    pub predicted: Vec<ValueIdeal>,
    pub found: Vec<UlrichCertificate>,
    /// `(ideal, predicted, found)` over the union of both lists.
    pub rows: Vec<(ValueIdeal, bool, bool)>,
}

impl PredictionReport {
    pub fn agrees(&self) -> bool {
        self.rows.iter().all(|&(_, p, f)| p == f)
    }
}

/// Compares the scan with `{c, m}` (when `K/R` is `R/c`-free) or `{m}`.
pub fn verify_minimal_multiplicity_prediction(s: &NumericalSemigroup, v_max: i64) -> Result<PredictionReport> {
    if !s.has_minimal_multiplicity() {
        return Err(Error::HypothesesNotMet("the ring does not have minimal multiplicity"));
    }
    let report = classify(s)?;
    if report.label != ClassLabel::TwoAlmostGorenstein {
        return Err(Error::HypothesesNotMet("the ring is not 2-almost Gorenstein"));
    }
    let free = kmodr_decomposition(s)?.is_free;
    let mut predicted = vec![ValueIdeal::maximal(s)];
    if free {
        predicted.insert(0, report.conductor.clone());
    }
    let found = scan_monomial_ulrich(s, v_max)?;
    let mut rows: Vec<(ValueIdeal, bool, bool)> = predicted
        .iter()
        .map(|p| (p.clone(), true, found.iter().any(|c| c.ideal == *p)))
        .collect();
    for c in &found {
        if !predicted.contains(&c.ideal) {
            rows.push((c.ideal.clone(), false, true));
        }
    }
    Ok(PredictionReport {
        kmodr_free: free,
        v_max,
        predicted,
        found,
        rows,
    })
}

/// Both sides of "c is Ulrich ⟺ S' is Gorenstein and K/R is R/c-free".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConductorUlrichReport {
    pub conductor: ValueIdeal,
    pub certificate: Option<UlrichCertificate>,
    pub s_prime: NumericalSemigroup,
    pub s_prime_symmetric: bool,
    pub kmodr_free: bool,
    /// `c + c = f + c` with `f = min c`.
    pub c_squared_is_fc: bool,
}

impl ConductorUlrichReport {
    pub fn c_is_ulrich(&self) -> bool {
        self.certificate.is_some()
    }

    pub fn holds(&self) -> bool {
        self.c_is_ulrich() == (self.s_prime_symmetric && self.kmodr_free)
            && self.s_prime_symmetric == self.c_squared_is_fc
    }
}

pub fn conductor_ulrich_iff(s: &NumericalSemigroup) -> Result<ConductorUlrichReport> {
    let report = classify(s)?;
    if report.label != ClassLabel::TwoAlmostGorenstein {
        return Err(Error::NotTwoAgl);
    }
    let c = conductor(s, &report.s_prime)?;
    let certificate = is_ulrich(s, &c)?;
    let kmodr_free = kmodr_decomposition(s)?.is_free;
    let c_squared_is_fc = c.product(&c) == c.shifted(c.min());
    Ok(ConductorUlrichReport {
        s_prime_symmetric: report.s_prime.is_symmetric(),
        s_prime: report.s_prime,
        conductor: c,
        certificate,
        kmodr_free,
        c_squared_is_fc,
    })
}

/// Consequences of a two-generated Ulrich ideal in a 2-AGL ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwoGeneratedConsequences {
    pub kmodr_free: bool,
    /// `c = (x₂, …, xₙ)` for a suitable ordering of the generators.
    pub conductor_degenerate: bool,
    /// `I + c = m`.
    pub sum_with_conductor_is_maximal: bool,
}

impl TwoGeneratedConsequences {
    pub fn holds(&self) -> bool {
        self.kmodr_free && self.conductor_degenerate && self.sum_with_conductor_is_maximal
    }
}

pub fn two_generated_consequences(s: &NumericalSemigroup, cert: &UlrichCertificate) -> Result<TwoGeneratedConsequences> {
    let report = classify(s)?;
    if report.label != ClassLabel::TwoAlmostGorenstein {
        return Err(Error::HypothesesNotMet("the ring is not 2-almost Gorenstein"));
    }
    require_two_generated_ulrich(s, cert)?;
    Ok(TwoGeneratedConsequences {
        kmodr_free: kmodr_decomposition(s)?.is_free,
        conductor_degenerate: conductor_form(s)?.degenerate,
        sum_with_conductor_is_maximal: cert.ideal.union(&report.conductor) == ValueIdeal::maximal(s),
    })
}

fn require_two_generated_ulrich(s: &NumericalSemigroup, cert: &UlrichCertificate) -> Result<()> {
    if cert.mu != 2 {
        return Err(Error::HypothesesNotMet("the ideal is not two-generated"));
    }
    if is_ulrich(s, &cert.ideal)?.is_none() {
        return Err(Error::HypothesesNotMet("the ideal is not an Ulrich ideal"));
    }
    Ok(())
}

/// Outcome of looking for a two-generated Ulrich ideal when `S'` is
/// Gorenstein.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GorensteinWitnessReport {
    pub witness: Option<UlrichCertificate>,
    pub conductor_mu: usize,
    pub embedding_dimension: usize,
    pub minimal_multiplicity: bool,
    pub v_max: i64,
}

impl GorensteinWitnessReport {
    /// `None` when there is no witness to test against.
    pub fn holds(&self) -> Option<bool> {
        self.witness.as_ref().map(|_| {
            self.conductor_mu + 1 == self.embedding_dimension && !self.minimal_multiplicity
        })
    }
}

pub fn gorenstein_witness_check(s: &NumericalSemigroup, v_max: i64) -> Result<GorensteinWitnessReport> {
    let report = classify(s)?;
    if report.label != ClassLabel::TwoAlmostGorenstein {
        return Err(Error::HypothesesNotMet("the ring is not 2-almost Gorenstein"));
    }
    if !report.s_gorenstein {
        return Err(Error::HypothesesNotMet("S' is not symmetric"));
    }
    let witness = scan_monomial_ulrich(s, v_max)?.into_iter().find(|c| c.mu == 2);
    Ok(GorensteinWitnessReport {
        witness,
        conductor_mu: report.conductor.mu(s),
        embedding_dimension: s.embedding_dimension(),
        minimal_multiplicity: s.has_minimal_multiplicity(),
        v_max,
    })
}

/// `I = (t^a, t^b)` with `b² = ac`: the value `2b - a` of `c` and the check
/// that the periodic syzygy matrix squares to `(b² - ac)·Id`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwoGeneratedRelation {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub c_in_ideal: bool,
    pub matrix_squares_to_relation: bool,
}

pub fn two_generated_relation(s: &NumericalSemigroup, cert: &UlrichCertificate) -> Result<TwoGeneratedRelation> {
    require_two_generated_ulrich(s, cert)?;
    let gens = cert.generators(s);
    let (a, b) = (gens[0], gens[1]);
    let c = 2 * b - a;
    let ring = WeightedPolyRing::new([("a", a as u64), ("b", b as u64), ("c", c as u64)]);
    let (pa, pb, pc) = (ring.var(0, 1), ring.var(1, 1), ring.var(2, 1));
    let m = [[-&pb, -&pc], [pa.clone(), pb.clone()]];
    let relation = &(&pb * &pb) - &(&pa * &pc);
    let mut identity = relation.in_kernel(&ring);
    for i in 0..2 {
        for j in 0..2 {
            let entry = &(&m[i][0] * &m[0][j]) + &(&m[i][1] * &m[1][j]);
            let expected = if i == j { relation.clone() } else { WeightedPolynomial::zero() };
            identity &= entry == expected;
        }
    }
    Ok(TwoGeneratedRelation {
        a,
        b,
        c,
        c_in_ideal: cert.ideal.contains(c),
        matrix_squares_to_relation: identity,
    })
}

/// An ideal of the idealization `A = R ⋉ R` of the shape `I₁ × I₂`, where
/// `I₂` is an `R`-submodule of the second copy of `R` with `I₁ ⊆ I₂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairIdeal {
    pub first: ValueIdeal,
    pub second: ValueIdeal,
}

impl PairIdeal {
    /// `(I₁ × I₂)(J₁ × J₂) = I₁J₁ × (I₁J₂ + I₂J₁)`.
    pub fn product(&self, other: &PairIdeal) -> PairIdeal {
        PairIdeal {
            first: self.first.product(&other.first),
            second: self
                .first
                .product(&other.second)
                .union(&self.second.product(&other.first)),
        }
    }

    /// `ℓ_A(A/I) = ℓ_R(R/I₁) + ℓ_R(R/I₂)`.
    pub fn colength(&self, s: &NumericalSemigroup) -> Result<usize> {
        Ok(self.first.colength(s)? + self.second.colength(s)?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdealizationCertificate {
    /// The value `s` of the parameter `q = (t^s)`.
    pub q_value: i64,
    /// `ℓ_A(A/I)`.
    pub l_a_i: usize,
    /// `ℓ_A(I/I²)`.
    pub l_i_i2: usize,
    /// `μ_A(I) = ℓ_A(I/m_A I)`.
    pub mu: usize,
    pub checks: UlrichChecks,
}

/// Checks that `I = q × R` is an Ulrich ideal of `R ⋉ R` for `q = (t^s)`.
pub fn idealization_ulrich(s: &NumericalSemigroup, q_value: i64) -> Result<IdealizationCertificate> {
    if q_value <= 0 || !s.contains(q_value) {
        return Err(Error::NotMember(q_value));
    }
    let unit = ValueIdeal::unit(s);
    let q = ValueIdeal::principal(s, q_value);
    let ideal = PairIdeal { first: q.clone(), second: unit.clone() };
    let reduction = PairIdeal { first: q.clone(), second: q };
    let maximal = PairIdeal { first: ValueIdeal::maximal(s), second: unit };

    let square = ideal.product(&ideal);
    let l_a_i = ideal.colength(s)?;
    let l_i_i2 = square.colength(s)? - l_a_i;
    let mu = maximal.product(&ideal).colength(s)? - l_a_i;
    Ok(IdealizationCertificate {
        q_value,
        l_a_i,
        l_i_i2,
        mu,
        checks: UlrichChecks {
            proper_over_q: reduction != ideal,
            square_is_qi: square == reduction.product(&ideal),
            quotient_free: l_i_i2 == mu * l_a_i,
            good_ideal: None,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    fn gens_of(s: &NumericalSemigroup, certs: &[UlrichCertificate]) -> Vec<Vec<i64>> {
        certs.iter().map(|c| c.generators(s)).collect()
    }

    #[test]
    fn two_generated_example() {
        let s = sg(&[6, 8, 10, 11]);
        let cert = is_ulrich(&s, &ValueIdeal::generated(&s, &[6, 11])).unwrap().unwrap();
        assert_eq!((cert.v, cert.mu, cert.l_r_i, cert.l_i_i2), (6, 2, 3, 6));
        assert_eq!(cert.ideal.complement_in(&s), vec![0, 8, 10]);
        assert_eq!(cert.checks.good_ideal, Some(true));
    }

    #[test]
    fn conductor_of_first_example() {
        let s = sg(&[3, 7, 8]);
        let cert = is_ulrich(&s, &ValueIdeal::generated(&s, &[6, 7, 8])).unwrap().unwrap();
        assert_eq!((cert.v, cert.mu, cert.l_r_i, cert.l_i_i2), (6, 3, 2, 6));
        assert_eq!(cert.checks.good_ideal, None);
    }

    #[test]
    fn principal_is_not_ulrich() {
        let s = sg(&[3, 7, 8]);
        let e = ValueIdeal::principal(&s, 6);
        assert_eq!(is_ulrich(&s, &e).unwrap(), None);
        assert!(!ulrich_checks(&s, &e).unwrap().checks.proper_over_q);
    }

    #[test]
    fn input_errors() {
        let s = sg(&[3, 7, 8]);
        assert_eq!(is_ulrich(&s, &ValueIdeal::interval(4)), Err(Error::NotIntegral));
        assert_eq!(is_ulrich(&s, &ValueIdeal::unit(&s)), Err(Error::NotPrimary));
        let not_closed = ValueIdeal::from_predicate(3, 9, |z| z == 3 || z == 7);
        assert_eq!(is_ulrich(&s, &not_closed), Err(Error::NotModule));
        assert_eq!(scan_monomial_ulrich(&NumericalSemigroup::natural(), 5), Err(Error::RegularRing));
    }

    #[test]
    fn scans_reproduce_lists() {
        let s = sg(&[3, 7, 8]);
        assert_eq!(gens_of(&s, &scan_monomial_ulrich(&s, 18).unwrap()), vec![vec![3, 7, 8], vec![6, 7, 8]]);
        let s = sg(&[4, 9, 11, 14]);
        assert_eq!(gens_of(&s, &scan_monomial_ulrich(&s, 33).unwrap()), vec![vec![4, 9, 11, 14]]);
        let s = sg(&[6, 8, 10, 11]);
        assert_eq!(
            gens_of(&s, &scan_monomial_ulrich(&s, 48).unwrap()),
            vec![vec![6, 11], vec![6, 8, 10], vec![8, 11]]
        );
    }

    #[test]
    fn exhaustive_scan_agrees() {
        for gens in [&[3u64, 7, 8][..], &[4, 9, 11, 14], &[6, 8, 10, 11], &[3, 4, 5], &[5, 7, 9, 13]] {
            let s = sg(gens);
            let v_max = default_v_max(&s);
            assert_eq!(
                scan_monomial_ulrich(&s, v_max).unwrap(),
                scan_monomial_ulrich_exhaustive(&s, v_max).unwrap(),
                "{s}"
            );
        }
    }

    #[test]
    fn oversemigroups_of_small_cases() {
        assert_eq!(oversemigroups(&sg(&[2, 3])).len(), 2);
        // ⟨3,4,5⟩ ⊆ ⟨2,3⟩ ⊆ ℕ and ⟨3,4,5⟩ itself.
        assert_eq!(oversemigroups(&sg(&[3, 4, 5])).len(), 3);
    }

    #[test]
    fn predictions() {
        let r = verify_minimal_multiplicity_prediction(&sg(&[3, 7, 8]), 18).unwrap();
        assert!(r.kmodr_free && r.agrees() && r.predicted.len() == 2);
        let r = verify_minimal_multiplicity_prediction(&sg(&[4, 9, 11, 14]), 33).unwrap();
        assert!(!r.kmodr_free && r.agrees() && r.predicted.len() == 1);
        assert!(matches!(verify_minimal_multiplicity_prediction(&sg(&[6, 8, 10, 11]), 48), Err(Error::HypothesesNotMet(_))));
    }

    #[test]
    fn conductor_criterion() {
        let r = conductor_ulrich_iff(&sg(&[3, 7, 8])).unwrap();
        assert!(r.c_is_ulrich() && r.s_prime_symmetric && r.kmodr_free && r.c_squared_is_fc && r.holds());
        assert!(r.s_prime.is_natural());
        let r = conductor_ulrich_iff(&sg(&[4, 9, 11, 14])).unwrap();
        assert!(!r.c_is_ulrich() && !r.s_prime_symmetric && !r.kmodr_free && r.holds());
        assert_eq!(r.s_prime, sg(&[3, 4, 5]));
        let r = conductor_ulrich_iff(&sg(&[6, 8, 10, 11])).unwrap();
        assert!(r.c_is_ulrich() && r.s_prime_symmetric && r.kmodr_free && r.holds());
        assert_eq!(r.s_prime, sg(&[2, 11]));
        assert_eq!(conductor_ulrich_iff(&sg(&[3, 4, 5])), Err(Error::NotTwoAgl));
    }

    #[test]
    fn consequences_of_two_generated() {
        let s = sg(&[6, 8, 10, 11]);
        for g in [[6, 11], [8, 11]] {
            let cert = is_ulrich(&s, &ValueIdeal::generated(&s, &g)).unwrap().unwrap();
            assert!(two_generated_consequences(&s, &cert).unwrap().holds());
        }
        let s = sg(&[3, 7, 8]);
        let m = is_ulrich(&s, &ValueIdeal::maximal(&s)).unwrap().unwrap();
        assert!(matches!(two_generated_consequences(&s, &m), Err(Error::HypothesesNotMet(_))));
    }

    #[test]
    fn witnesses_for_gorenstein_s_prime() {
        let r = gorenstein_witness_check(&sg(&[6, 8, 10, 11]), 48).unwrap();
        assert_eq!(r.witness.as_ref().unwrap().generators(&sg(&[6, 8, 10, 11])), vec![6, 11]);
        assert_eq!((r.conductor_mu, r.embedding_dimension), (3, 4));
        assert_eq!(r.holds(), Some(true));
        let r = gorenstein_witness_check(&sg(&[3, 7, 8]), 18).unwrap();
        assert_eq!(r.holds(), None);
        // S' = ⟨3,5,7⟩ is not symmetric here.
        let s = sg(&[5, 7, 9, 13]);
        assert!(matches!(gorenstein_witness_check(&s, 36), Err(Error::HypothesesNotMet(_))));
        assert!(scan_monomial_ulrich(&s, 36).unwrap().iter().all(|c| c.mu != 2));
    }

    #[test]
    fn relation_values() {
        let s = sg(&[6, 8, 10, 11]);
        for (g, c) in [([6, 11], 16), ([8, 11], 14)] {
            let cert = is_ulrich(&s, &ValueIdeal::generated(&s, &g)).unwrap().unwrap();
            let rel = two_generated_relation(&s, &cert).unwrap();
            assert_eq!(rel.c, c);
            assert!(rel.c_in_ideal && rel.matrix_squares_to_relation);
        }
    }

    #[test]
    fn idealization() {
        let c = idealization_ulrich(&sg(&[3, 4, 5]), 3).unwrap();
        assert_eq!((c.l_a_i, c.l_i_i2, c.mu), (3, 6, 2));
        assert!(c.checks.passed());
        let c = idealization_ulrich(&sg(&[2, 3]), 2).unwrap();
        assert_eq!((c.l_a_i, c.l_i_i2, c.mu), (2, 4, 2));
        assert!(c.checks.passed());
        assert_eq!(idealization_ulrich(&sg(&[3, 4, 5]), 1), Err(Error::NotMember(1)));
    }
}
