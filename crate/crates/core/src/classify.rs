//! Hilbert coefficients of the canonical ideal, the Sally-module rank and the
//! resulting classification.
//!
//! With `a = F + 1` the ideal `I = a + K` is an integral canonical ideal and
//! `Q = (t^a)` is a minimal reduction of it. The lengths `ℓ_R(R/I^{n+1})` are
//! eventually `e0·(n+1) - e1`, and
//!
//! ```text
//! rank S_Q(I) = e1 - (e0 - ℓ_R(R/I))
//! ```
//!
//! is 0 for Gorenstein rings, 1 for non-Gorenstein almost Gorenstein rings and
//! 2 for 2-almost Gorenstein rings. Independently, the colength of the
//! conductor `c = R : R[K]` is 0, 1, 2 in exactly those cases; [`classify`]
//! computes both and refuses to answer if they disagree.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::semigroup::NumericalSemigroup;
use crate::valueideal::{canonical_ideal, conductor, ring_generated, ValueIdeal};
use crate::{Error, Result};

/// Hilbert data of the canonical ideal `I = a + K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    pub e0: i64,
    pub e1: i64,
    /// `ℓ_R(R/I)`.
    pub l_r_i: i64,
    pub sally_rank: i64,
    /// The shift `a`, so that `I = a + K` and `Q = (t^a)`.
    pub reduction_shift: i64,
    /// `ℓ_R(R/I^{n+1})` for `n = 0, 1, …` up to the detected stabilization.
    pub lengths: Vec<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassLabel {
    Gorenstein,
    AlmostGorenstein,
    TwoAlmostGorenstein,
    /// Sally rank `k ≥ 3`.
    Rank(i64),
}

impl ClassLabel {
    fn from_rank(rank: i64) -> Self {
        match rank {
            0 => ClassLabel::Gorenstein,
            1 => ClassLabel::AlmostGorenstein,
            2 => ClassLabel::TwoAlmostGorenstein,
            k => ClassLabel::Rank(k),
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassLabel::Gorenstein => f.write_str("gorenstein"),
            ClassLabel::AlmostGorenstein => f.write_str("almost_gorenstein"),
            ClassLabel::TwoAlmostGorenstein => f.write_str("two_almost_gorenstein"),
            ClassLabel::Rank(k) => write!(f, "rank_{k}"),
        }
    }
}

/// `K/R ≅ (R/c)^free_rank ⊕ (R/m)^residue_rank` over the length-2 ring `R/c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KModRDecomposition {
    pub mu: usize,
    pub length: usize,
    pub free_rank: usize,
    pub residue_rank: usize,
    pub is_free: bool,
}

/// Shape of the conductor of a 2-AGL ring in terms of the generators of `S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConductorForm {
    /// Least 1-based `i` with `c = (t^{2aᵢ}) + (t^{aⱼ} : j ≠ i)`.
    pub index: Option<usize>,
    /// Whether already `c = (t^{aⱼ} : j ≠ i)` for that `i`.
    pub degenerate: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub semigroup: NumericalSemigroup,
    pub hilbert: HilbertData,
    pub canonical: ValueIdeal,
    pub conductor: ValueIdeal,
    /// `ℓ_R(R/c)`.
    pub conductor_colength: usize,
    pub label: ClassLabel,
    /// Present for 2-AGL rings.
    pub kmodr: Option<KModRDecomposition>,
    /// Value semigroup of `R[K]`.
    pub s_prime: NumericalSemigroup,
    /// `R[K]` is Gorenstein, i.e. `S'` is symmetric.
    pub s_gorenstein: bool,
    pub minimal_multiplicity: bool,
    /// Present for 2-AGL rings.
    pub conductor_form: Option<ConductorForm>,
}

/// Hilbert coefficients of `I = (F + 1) + K`.
pub fn hilbert_coefficients(s: &NumericalSemigroup) -> Result<HilbertData> {
    hilbert_coefficients_with_shift(s, s.frobenius() + 1)
}

/// Same as [`hilbert_coefficients`] for the canonical ideal `shift + K`; the
/// shift must make it integral.
pub fn hilbert_coefficients_with_shift(s: &NumericalSemigroup, shift: i64) -> Result<HilbertData> {
    if s.is_natural() {
        return Err(Error::RegularRing);
    }
    let ideal = canonical_ideal(s).shifted(shift);
    if !ideal.is_integral(s) {
        return Err(Error::NotIntegral);
    }
    let cap = (2 * (s.frobenius() + 1)).max(16) as usize;
    let mut power = ideal.clone();
    let mut lengths = Vec::new();
    let mut e1_seq = Vec::new();
    for n in 0..=cap {
        let len = power.colength(s)? as i64;
        lengths.push(len);
        e1_seq.push(shift * (n as i64 + 1) - len);
        if let [.., x, y, z] = e1_seq[..] {
            if x == y && y == z {
                let e1 = z;
                let l_r_i = lengths[0];
                let sally_rank = e1 - (shift - l_r_i);
                if sally_rank < 0 {
                    return Err(Error::Inconsistent(format!(
                        "negative Sally rank {sally_rank} for {s}"
                    )));
                }
                return Ok(HilbertData {
                    e0: shift,
                    e1,
                    l_r_i,
                    sally_rank,
                    reduction_shift: shift,
                    lengths,
                });
            }
        }
        power = power.product(&ideal);
    }
    Err(Error::NonStabilized(cap))
}

/// `e1(I) - (e0(I) - ℓ_R(R/I))`; zero for ℕ.
pub fn sally_rank(s: &NumericalSemigroup) -> Result<i64> {
    if s.is_natural() {
        return Ok(0);
    }
    Ok(hilbert_coefficients(s)?.sally_rank)
}

struct ConductorData {
    canonical: ValueIdeal,
    s_prime: NumericalSemigroup,
    conductor: ValueIdeal,
    colength: usize,
}

fn conductor_data(s: &NumericalSemigroup) -> Result<ConductorData> {
    let canonical = canonical_ideal(s);
    let s_prime = ring_generated(&canonical)?;
    let conductor = conductor(s, &s_prime)?;
    let colength = conductor.colength(s)?;
    Ok(ConductorData {
        canonical,
        s_prime,
        conductor,
        colength,
    })
}

/// Full classification with the Sally-rank and conductor routes cross-checked.
pub fn classify(s: &NumericalSemigroup) -> Result<ClassificationReport> {
    let data = conductor_data(s)?;
    let hilbert = if s.is_natural() {
        HilbertData {
            e0: 0,
            e1: 0,
            l_r_i: 0,
            sally_rank: 0,
            reduction_shift: 0,
            lengths: Vec::new(),
        }
    } else {
        hilbert_coefficients(s)?
    };
    let rank = hilbert.sally_rank;

    let unit = ValueIdeal::unit(s);
    let maximal = ValueIdeal::maximal(s);
    let agree = [
        (rank == 0, data.colength == 0),
        (rank == 0, data.canonical == unit),
        (rank == 0, s.is_symmetric()),
        (rank == 1, !s.is_natural() && data.conductor == maximal),
        (rank == 2, data.colength == 2),
    ]
    .iter()
    .all(|(a, b)| a == b);
    if !agree {
        return Err(Error::Inconsistent(format!(
            "Sally rank {rank} disagrees with conductor colength {} for {s}",
            data.colength
        )));
    }

    let label = ClassLabel::from_rank(rank);
    let (kmodr, form) = if label == ClassLabel::TwoAlmostGorenstein {
        (
            Some(decompose(s, &data.canonical)?),
            Some(form_of(s, &data.conductor)),
        )
    } else {
        (None, None)
    };
    Ok(ClassificationReport {
        semigroup: s.clone(),
        hilbert,
        canonical: data.canonical,
        conductor: data.conductor,
        conductor_colength: data.colength,
        label,
        kmodr,
        s_gorenstein: data.s_prime.is_symmetric(),
        s_prime: data.s_prime,
        minimal_multiplicity: s.has_minimal_multiplicity(),
        conductor_form: form,
    })
}

/// `K/R` as a module over `R/c`; requires a 2-AGL ring.
pub fn kmodr_decomposition(s: &NumericalSemigroup) -> Result<KModRDecomposition> {
    let data = conductor_data(s)?;
    if data.colength != 2 {
        return Err(Error::NotTwoAgl);
    }
    decompose(s, &data.canonical)
}

fn decompose(s: &NumericalSemigroup, canonical: &ValueIdeal) -> Result<KModRDecomposition> {
    let length = canonical.explicit_members().filter(|&z| !s.contains(z)).count();
    // Minimal generators of K other than 0 are exactly those of K/R.
    let mu = canonical
        .minimal_generators(s)
        .into_iter()
        .filter(|&z| z != 0)
        .count();
    if length < mu || 2 * mu < length {
        return Err(Error::Inconsistent(format!(
            "K/R with μ = {mu} and ℓ = {length} is not a module over a length-2 ring for {s}"
        )));
    }
    let free_rank = length - mu;
    let residue_rank = 2 * mu - length;
    let r = s.type_r();
    if free_rank + residue_rank != r - 1 {
        let note = if free_rank + residue_rank == r + 1 {
            " (matches r(R) + 1 instead)"
        } else {
            ""
        };
        return Err(Error::Inconsistent(format!(
            "free rank {free_rank} + residue rank {residue_rank} ≠ r(R) - 1 = {} for {s}{note}",
            r - 1
        )));
    }
    Ok(KModRDecomposition {
        mu,
        length,
        free_rank,
        residue_rank,
        is_free: residue_rank == 0,
    })
}

/// Which generator plays the role of `x₁` in `c = (x₁²) + (x₂, …, xₙ)`.
pub fn conductor_form(s: &NumericalSemigroup) -> Result<ConductorForm> {
    let data = conductor_data(s)?;
    if data.colength != 2 {
        return Err(Error::NotTwoAgl);
    }
    Ok(form_of(s, &data.conductor))
}

fn form_of(s: &NumericalSemigroup, c: &ValueIdeal) -> ConductorForm {
    let gens = s.generators();
    for i in 0..gens.len() {
        let others: Vec<i64> = gens
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &g)| g)
            .collect();
        let mut with_square = others.clone();
        with_square.push(2 * gens[i]);
        if ValueIdeal::generated(s, &with_square) == *c {
            let degenerate = !others.is_empty() && ValueIdeal::generated(s, &others) == *c;
            return ConductorForm {
                index: Some(i + 1),
                degenerate,
            };
        }
    }
    ConductorForm {
        index: None,
        degenerate: false,
    }
}
