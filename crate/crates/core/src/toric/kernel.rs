//! The defining ideal `a = Ker φ` of the monomial curve, degree by degree.
//!
//! Every monomial of weighted degree `d` maps to `t^d`, so the degree-`d` part
//! of `a` is spanned by the differences `m - m₀` and has dimension
//! `#monomials(d) - 1`. Ideal generation questions in degree `d` reduce to the
//! rank of `{ g·u : g a generator, u a monomial of degree d - deg g }` in the
//! coordinates given by the degree-`d` monomials.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::linalg::EchelonBasis;
use super::poly::{Exponents, WeightedPolyRing, WeightedPolynomial};

/// `dim_k (Ker φ)_d`.
pub fn kernel_dimension(ring: &WeightedPolyRing, d: u64) -> usize {
    ring.monomials_of_degree(d).len().saturating_sub(1)
}

/// Minimal homogeneous generators of `Ker φ` up to a degree bound.
#[derive(Clone, Debug)]
pub struct KernelGenerators {
    /// `(degree, generator)` in increasing degree.
    pub generators: Vec<(u64, WeightedPolynomial)>,
    pub d_max: u64,
    /// A generator showed up within one maximal weight of the bound, so the
    /// bound may be too small to have seen all of them.
    pub degree_bound_too_small: bool,
}

impl KernelGenerators {
    pub fn count(&self) -> usize {
        self.generators.len()
    }
}

struct DegreeSpace {
    index: BTreeMap<Exponents, usize>,
    basis: EchelonBasis,
    target: usize,
}

impl DegreeSpace {
    fn new(ring: &WeightedPolyRing, d: u64) -> (Self, Vec<Exponents>) {
        let monomials = ring.monomials_of_degree(d);
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let space = Self {
            index,
            basis: EchelonBasis::new(monomials.len()),
            target: monomials.len().saturating_sub(1),
        };
        (space, monomials)
    }

    fn full(&self) -> bool {
        self.basis.rank() >= self.target
    }

    fn insert(&mut self, p: &WeightedPolynomial) -> bool {
        let mut v = vec![BigInt::zero(); self.index.len()];
        for (e, c) in p.terms() {
            v[self.index[e]] += c;
        }
        self.basis.insert(v)
    }

    /// Adds `g·u` for every monomial `u` of the complementary degree, stopping
    /// as soon as the whole kernel is spanned.
    fn absorb(&mut self, ring: &WeightedPolyRing, d: u64, gens: &[(u64, &WeightedPolynomial)]) {
        for &(dg, g) in gens {
            if self.full() {
                return;
            }
            if dg > d {
                continue;
            }
            for u in ring.monomials_of_degree(d - dg) {
                if self.full() {
                    return;
                }
                self.insert(&g.times_monomial(&u));
            }
        }
    }
}

/// Minimal generators of `Ker φ` in degrees `≤ d_max`, chosen among the
/// binomials `m - m₀` where `m₀` is the lexicographically first monomial of
/// its degree.
pub fn minimal_kernel_generators(ring: &WeightedPolyRing, d_max: u64) -> KernelGenerators {
    let mut generators: Vec<(u64, WeightedPolynomial)> = Vec::new();
    for d in 1..=d_max {
        let (mut space, monomials) = DegreeSpace::new(ring, d);
        if space.target == 0 {
            continue;
        }
        let previous: Vec<(u64, &WeightedPolynomial)> =
            generators.iter().map(|(dg, g)| (*dg, g)).collect();
        space.absorb(ring, d, &previous);
        let base = WeightedPolynomial::monomial(monomials[0].clone(), BigInt::one());
        let mut fresh = Vec::new();
        for m in &monomials[1..] {
            if space.full() {
                break;
            }
            let candidate = &WeightedPolynomial::monomial(m.clone(), BigInt::one()) - &base;
            if space.insert(&candidate) {
                fresh.push((d, candidate));
            }
        }
        generators.extend(fresh);
    }
    let max_weight = ring.weights().iter().copied().max().unwrap_or(0);
    let degree_bound_too_small = generators
        .last()
        .is_some_and(|(d, _)| d + max_weight > d_max);
    KernelGenerators {
        generators,
        d_max,
        degree_bound_too_small,
    }
}

/// Outcome of comparing an ideal with `Ker φ` up to a degree bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KernelVerdict {
    /// Every generator lies in `Ker φ` and the ideal agrees with `Ker φ` in
    /// every degree `≤ d_max`.
    ContainedAndEqualToBound { d_max: u64 },
    /// Contained, but the span falls short of `Ker φ` in some degree.
    ContainedButSmaller { degree: u64, missing: usize },
    /// Generator `index` does not vanish under `φ`.
    NotContained { index: usize },
    /// Generator `index` lies in `Ker φ` but is not weighted-homogeneous, so
    /// degreewise comparison does not apply.
    NotHomogeneous { index: usize },
}

impl KernelVerdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, KernelVerdict::ContainedAndEqualToBound { .. })
    }
}

/// Decides whether `gens` generate `Ker φ` in all degrees `≤ d_max`.
pub fn ideal_equal_to_kernel(
    gens: &[WeightedPolynomial],
    ring: &WeightedPolyRing,
    d_max: u64,
) -> KernelVerdict {
    let mut graded = Vec::new();
    for (index, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        if !g.in_kernel(ring) {
            return KernelVerdict::NotContained { index };
        }
        match g.homogeneous_degree(ring) {
            Some(d) => graded.push((d, g)),
            None => return KernelVerdict::NotHomogeneous { index },
        }
    }
    graded.sort_by_key(|&(d, _)| d);
    for d in 1..=d_max {
        let (mut space, _) = DegreeSpace::new(ring, d);
        if space.target == 0 {
            continue;
        }
        space.absorb(ring, d, &graded);
        if !space.full() {
            return KernelVerdict::ContainedButSmaller {
                degree: d,
                missing: space.target - space.basis.rank(),
            };
        }
    }
    KernelVerdict::ContainedAndEqualToBound { d_max }
}

/// Dimension of the degree-`d` part of the ideal generated by `gens`
/// (homogeneous generators only).
pub fn span_dimension(gens: &[WeightedPolynomial], ring: &WeightedPolyRing, d: u64) -> usize {
    let graded: Vec<(u64, &WeightedPolynomial)> = gens
        .iter()
        .filter_map(|g| g.homogeneous_degree(ring).map(|dg| (dg, g)))
        .collect();
    let (mut space, monomials) = DegreeSpace::new(ring, d);
    // No early exit: count the full span even past the kernel dimension.
    space.target = monomials.len();
    space.absorb(ring, d, &graded);
    space.basis.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(weights: &[u64]) -> WeightedPolyRing {
        let names = ["X", "Y", "Z", "W"];
        WeightedPolyRing::new(weights.iter().enumerate().map(|(i, &w)| (names[i], w)))
    }

    #[test]
    fn dimensions() {
        assert_eq!(kernel_dimension(&ring(&[5, 7, 9, 13]), 14), 1);
        assert_eq!(kernel_dimension(&ring(&[5, 7, 9, 13]), 0), 0);
        assert_eq!(kernel_dimension(&ring(&[4, 9, 11, 14]), 18), 1);
        assert_eq!(kernel_dimension(&ring(&[4, 9, 11, 14]), 1), 0);
    }

    #[test]
    fn generator_counts() {
        assert_eq!(minimal_kernel_generators(&ring(&[5, 7, 9, 13]), 40).count(), 5);
        assert_eq!(minimal_kernel_generators(&ring(&[4, 9, 11, 14]), 40).count(), 6);
        let k = minimal_kernel_generators(&ring(&[3, 7, 8]), 40);
        assert_eq!(k.count(), 3);
        assert!(!k.degree_bound_too_small);
        let degrees: Vec<u64> = k.generators.iter().map(|(d, _)| *d).collect();
        assert_eq!(degrees, vec![14, 15, 16]);
    }

    #[test]
    fn small_bound_is_flagged() {
        let k = minimal_kernel_generators(&ring(&[3, 7, 8]), 15);
        assert_eq!(k.count(), 2);
        assert!(k.degree_bound_too_small);
    }

    #[test]
    fn verdicts() {
        let r = ring(&[3, 7, 8]);
        let gens = minimal_kernel_generators(&r, 30);
        let polys: Vec<_> = gens.generators.iter().map(|(_, g)| g.clone()).collect();
        assert!(ideal_equal_to_kernel(&polys, &r, 30).is_equal());
        assert_eq!(
            ideal_equal_to_kernel(&polys[..2], &r, 30),
            KernelVerdict::ContainedButSmaller { degree: 16, missing: 1 }
        );
        let bad = r.parse("X - Y").unwrap();
        assert_eq!(
            ideal_equal_to_kernel(&[bad], &r, 30),
            KernelVerdict::NotContained { index: 0 }
        );
        let mixed = r.parse("X^7 - Y^3 + Y^4 - X^7*Y").unwrap();
        assert_eq!(
            ideal_equal_to_kernel(&[mixed], &r, 30),
            KernelVerdict::NotHomogeneous { index: 0 }
        );
    }
}
