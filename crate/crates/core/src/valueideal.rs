//! Value sets of monomial fractional ideals.
//!
//! A monomial fractional ideal `I` of `R = k[[t^s : s ∈ S]]` is determined by
//! its value set `E = v(I) ⊆ ℤ`, which satisfies `E + S ⊆ E` and contains every
//! sufficiently large integer. Ideal multiplication becomes the Minkowski sum,
//! colon ideals become `{ z : z + B ⊆ A }` and the length `ℓ_R(R/I)` of an
//! integral ideal is `#(S \ E)`.
//!
//! [`ValueIdeal`] stores the minimum `v` and an exact membership table on
//! `[v, tail)`, where `tail` is the least integer with `[tail, ∞) ⊆ E`. Because
//! the tail is tracked exactly, every operation knows how far it has to look
//! and no window ever has to be guessed.

use alloc::vec::Vec;

use crate::semigroup::NumericalSemigroup;
use crate::{Error, Result};

/// A cofinite subset `E ⊆ ℤ` bounded below, in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ValueIdeal {
    min: i64,
    /// Membership of `min + i` for `i < bits.len()`; everything from
    /// `min + bits.len()` on is a member. Empty, or `bits[0]` true and the last
    /// entry false.
    bits: Vec<bool>,
}

impl ValueIdeal {
    /// Builds the set `{ z ≥ lo : member(z) }`, given that every `z ≥ hi` is a
    /// member. Panics if the resulting set would be empty, which cannot happen
    /// when `hi` is a genuine tail bound.
    pub fn from_predicate(lo: i64, hi: i64, member: impl Fn(i64) -> bool) -> Self {
        let hi = hi.max(lo);
        let min = (lo..hi).find(|&z| member(z)).unwrap_or(hi);
        let mut bits: Vec<bool> = (min..hi).map(&member).collect();
        while bits.last() == Some(&true) {
            bits.pop();
        }
        Self { min, bits }
    }

    /// `[from, ∞)`.
    pub fn interval(from: i64) -> Self {
        Self {
            min: from,
            bits: Vec::new(),
        }
    }

    /// `S` viewed as an ideal of itself (the unit ideal `R`).
    pub fn unit(s: &NumericalSemigroup) -> Self {
        Self::from_predicate(0, s.frobenius() + 1, |z| s.contains(z))
    }

    /// The ideal generated by monomials with the given values:
    /// `⋃ (g + S)`. `values` must be nonempty.
    pub fn generated(s: &NumericalSemigroup, values: &[i64]) -> Self {
        assert!(!values.is_empty(), "an ideal needs at least one generator");
        let lo = *values.iter().min().unwrap();
        let hi = lo + s.frobenius() + 1;
        Self::from_predicate(lo, hi, |z| values.iter().any(|&g| s.contains(z - g)))
    }

    /// Principal ideal `(t^v)`, value set `v + S`.
    pub fn principal(s: &NumericalSemigroup, v: i64) -> Self {
        Self::generated(s, &[v])
    }

    /// The maximal ideal `m = S \ {0}`.
    pub fn maximal(s: &NumericalSemigroup) -> Self {
        Self::generated(s, s.generators())
    }

    pub fn min(&self) -> i64 {
        self.min
    }

    /// Least `t` with `[t, ∞) ⊆ E`.
    pub fn tail(&self) -> i64 {
        self.min + self.bits.len() as i64
    }

    pub fn contains(&self, z: i64) -> bool {
        if z < self.min {
            false
        } else if z >= self.tail() {
            true
        } else {
            self.bits[(z - self.min) as usize]
        }
    }

    /// Members in `[min, tail)`; everything from `tail` on is implied.
    pub fn explicit_members(&self) -> impl Iterator<Item = i64> + '_ {
        (self.min..self.tail()).filter(move |&z| self.contains(z))
    }

    /// Membership bits on `[min, min + len)`, used as a deterministic sort key.
    pub fn window_bits(&self, len: usize) -> Vec<bool> {
        (0..len as i64).map(|i| self.contains(self.min + i)).collect()
    }

    /// `E + shift`.
    pub fn shifted(&self, shift: i64) -> Self {
        Self {
            min: self.min + shift,
            bits: self.bits.clone(),
        }
    }

    /// Minkowski sum `A + B`, the value set of the product ideal.
    pub fn product(&self, other: &ValueIdeal) -> ValueIdeal {
        let lo = self.min + other.min;
        let hi = (self.tail() + other.min).min(self.min + other.tail());
        let a: Vec<i64> = self.explicit_members().collect();
        ValueIdeal::from_predicate(lo, hi, |z| {
            a.iter()
                .take_while(|&&x| x + other.min <= z)
                .any(|&x| other.contains(z - x))
                || (z - other.min >= self.tail())
        })
    }

    /// `A : B = { z : z + B ⊆ A }`.
    pub fn colon(&self, other: &ValueIdeal) -> ValueIdeal {
        let lo = self.min - other.min;
        let hi = self.tail() - other.min;
        ValueIdeal::from_predicate(lo, hi, |z| {
            // Only b < tail(A) - z can land outside A.
            (other.min..self.tail() - z).all(|b| !other.contains(b) || self.contains(z + b))
        })
    }

    /// `A ∪ B`, the value set of the sum of two monomial ideals.
    pub fn union(&self, other: &ValueIdeal) -> ValueIdeal {
        let lo = self.min.min(other.min);
        let hi = self.tail().min(other.tail()).max(lo);
        ValueIdeal::from_predicate(lo, hi, |z| self.contains(z) || other.contains(z))
    }

    pub fn is_subset_of(&self, other: &ValueIdeal) -> bool {
        let end = self.tail().max(other.tail());
        (self.min..end).all(|z| !self.contains(z) || other.contains(z))
    }

    /// `E + S ⊆ E`.
    pub fn is_module_over(&self, s: &NumericalSemigroup) -> bool {
        self.explicit_members()
            .all(|z| s.generators().iter().all(|&g| self.contains(z + g)))
    }

    /// `E ⊆ S`.
    pub fn is_integral(&self, s: &NumericalSemigroup) -> bool {
        let end = self.tail().max(s.frobenius() + 1);
        (self.min..end).all(|z| !self.contains(z) || s.contains(z))
    }

    /// Elements of `S \ E` (finite when `E` is cofinite).
    pub fn complement_in(&self, s: &NumericalSemigroup) -> Vec<i64> {
        (0..self.tail().max(0))
            .filter(|&z| s.contains(z) && !self.contains(z))
            .collect()
    }

    /// `ℓ_R(R/I) = #(S \ E)` for an integral ideal.
    pub fn colength(&self, s: &NumericalSemigroup) -> Result<usize> {
        if !self.is_integral(s) {
            return Err(Error::NotIntegral);
        }
        Ok(self.complement_in(s).len())
    }

    /// Values of a minimal monomial generating system: `E \ (E + m)`.
    pub fn minimal_generators(&self, s: &NumericalSemigroup) -> Vec<i64> {
        let end = self.tail() + s.multiplicity();
        (self.min..end)
            .filter(|&z| self.contains(z))
            .filter(|&z| s.generators().iter().all(|&a| !self.contains(z - a)))
            .collect()
    }

    /// `μ_R(I)`.
    pub fn mu(&self, s: &NumericalSemigroup) -> usize {
        self.minimal_generators(s).len()
    }
}

/// The normalized canonical ideal `K = { x : F - x ∉ S }`, with `min K = 0`.
pub fn canonical_ideal(s: &NumericalSemigroup) -> ValueIdeal {
    let f = s.frobenius();
    ValueIdeal::from_predicate(0, f + 1, |x| !s.contains(f - x))
}

/// The semigroup generated by the elements of `K` (the value semigroup of
/// `R[K]`). Requires `min K = 0`.
pub fn ring_generated(k: &ValueIdeal) -> Result<NumericalSemigroup> {
    if k.min() != 0 {
        return Err(Error::NotNormalized(k.min()));
    }
    let bound = 2 * k.tail().max(1) + 1;
    let candidates: Vec<u64> = (1..=bound).filter(|&z| k.contains(z)).map(|z| z as u64).collect();
    NumericalSemigroup::from_generators(&candidates)
}

/// The conductor `c = R : R[K] = { z : z + S' ⊆ S }`.
///
/// The second description `c = K : S'` is evaluated as well and the two must
/// agree.
pub fn conductor(s: &NumericalSemigroup, s_prime: &NumericalSemigroup) -> Result<ValueIdeal> {
    if !s.is_subsemigroup_of(s_prime) {
        return Err(Error::NotSubsemigroup);
    }
    let over = ValueIdeal::unit(s_prime);
    let c = ValueIdeal::unit(s).colon(&over);
    let via_canonical = canonical_ideal(s).colon(&over);
    if c != via_canonical {
        return Err(Error::Inconsistent(alloc::format!(
            "R : S' and K : S' differ for {s}"
        )));
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn sg(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    fn k_minus_s(s: &NumericalSemigroup) -> Vec<i64> {
        let k = canonical_ideal(s);
        k.explicit_members().filter(|&z| !s.contains(z)).collect()
    }

    #[test]
    fn canonical_examples() {
        let s = sg(&[2, 3]);
        assert_eq!(canonical_ideal(&s), ValueIdeal::unit(&s));
        assert_eq!(k_minus_s(&sg(&[3, 7, 8])), vec![1, 4]);
        assert_eq!(k_minus_s(&sg(&[4, 9, 11, 14])), vec![3, 5, 7]);
        let s = sg(&[4, 9, 11, 14]);
        assert_eq!(canonical_ideal(&s).minimal_generators(&s), vec![0, 3, 5]);
    }

    #[test]
    fn products() {
        let s = sg(&[3, 7, 8]);
        let k = canonical_ideal(&s);
        assert_eq!(k.product(&k), ValueIdeal::interval(0));
        let m = ValueIdeal::maximal(&s);
        let m2 = m.product(&m);
        assert_eq!(m2.min(), 6);
        // Pairwise sums of elements of m, not just of its generators: 9 = 3 + 6.
        let elems: Vec<i64> = (1..20).filter(|&z| s.contains(z)).collect();
        for z in 0..20 {
            let direct = elems.iter().any(|&x| elems.contains(&(z - x)));
            assert_eq!(m2.contains(z), direct, "z = {z}");
        }
        let members: Vec<i64> = (0..14).filter(|&z| m2.contains(z)).collect();
        assert_eq!(members, vec![6, 9, 10, 11, 12, 13]);
        let q = ValueIdeal::principal(&s, 6);
        assert_eq!(q.product(&k), k.shifted(6));
    }

    #[test]
    fn colons() {
        let s = sg(&[6, 8, 10, 11]);
        let unit = ValueIdeal::unit(&s);
        assert_eq!(unit.colon(&unit), unit);
        let q = ValueIdeal::principal(&s, 6);
        let i = ValueIdeal::generated(&s, &[6, 11]);
        assert_eq!(q.colon(&i), i);

        let s = sg(&[4, 9, 11, 14]);
        let over = ValueIdeal::unit(&sg(&[3, 4, 5]));
        let c = ValueIdeal::unit(&s).colon(&over);
        let members: Vec<i64> = (0..16).filter(|&z| c.contains(z)).collect();
        assert_eq!(members, vec![8, 9, 11, 12, 13, 14, 15]);
        assert_eq!(c.minimal_generators(&s), vec![8, 9, 11, 14]);
    }

    #[test]
    fn ring_generated_examples() {
        let s = sg(&[2, 3]);
        assert_eq!(ring_generated(&canonical_ideal(&s)).unwrap(), s);
        assert!(ring_generated(&canonical_ideal(&sg(&[3, 7, 8]))).unwrap().is_natural());
        let s = sg(&[6, 8, 10, 11]);
        assert_eq!(k_minus_s(&s), vec![2, 13]);
        assert_eq!(ring_generated(&canonical_ideal(&s)).unwrap().generators(), &[2, 11]);
        assert_eq!(
            ring_generated(&ValueIdeal::interval(3)),
            Err(Error::NotNormalized(3))
        );
    }

    #[test]
    fn conductor_examples() {
        for (gens, want_gens, want_len) in [
            (&[3u64, 7, 8][..], vec![6, 7, 8], 2),
            (&[6, 8, 10, 11][..], vec![6, 8, 10], 2),
            (&[5, 7, 9, 13][..], vec![7, 9, 10, 13], 2),
            (&[4, 9, 11, 14][..], vec![8, 9, 11, 14], 2),
            (&[3, 4, 5][..], vec![3, 4, 5], 1),
        ] {
            let s = sg(gens);
            let sp = ring_generated(&canonical_ideal(&s)).unwrap();
            let c = conductor(&s, &sp).unwrap();
            assert_eq!(c.minimal_generators(&s), want_gens, "{s}");
            assert_eq!(c.colength(&s).unwrap(), want_len, "{s}");
        }
        let s = sg(&[3, 7, 8]);
        let c = conductor(&s, &NumericalSemigroup::natural()).unwrap();
        assert_eq!(c.complement_in(&s), vec![0, 3]);
        assert_eq!(
            conductor(&sg(&[2, 3]), &sg(&[3, 4, 5])),
            Err(Error::NotSubsemigroup)
        );
    }

    #[test]
    fn colength_examples() {
        let s = sg(&[3, 7, 8]);
        assert_eq!(ValueIdeal::unit(&s).colength(&s).unwrap(), 0);
        let e = canonical_ideal(&s).shifted(6);
        assert_eq!(e.complement_in(&s), vec![0, 3, 8, 11]);
        assert_eq!(e.colength(&s).unwrap(), 4);
        assert_eq!(canonical_ideal(&s).colength(&s), Err(Error::NotIntegral));

        let s = sg(&[6, 8, 10, 11]);
        let e = ValueIdeal::generated(&s, &[6, 11]);
        assert_eq!(e.complement_in(&s), vec![0, 8, 10]);
        assert_eq!(e.colength(&s).unwrap(), 3);
    }

    #[test]
    fn principal_generators() {
        let s = sg(&[4, 9, 11, 14]);
        assert_eq!(ValueIdeal::principal(&s, 13).minimal_generators(&s), vec![13]);
        assert_eq!(ValueIdeal::maximal(&s).minimal_generators(&s), vec![4, 9, 11, 14]);
    }

    #[test]
    fn canonical_form_is_unique() {
        let s = sg(&[3, 7, 8]);
        let a = ValueIdeal::from_predicate(-5, 40, |z| s.contains(z - 6));
        let b = ValueIdeal::principal(&s, 6);
        assert_eq!(a, b);
        assert_eq!(b.tail(), 12);
    }
}
