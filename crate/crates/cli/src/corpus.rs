//! Seeded random numerical semigroups.

use std::collections::BTreeSet;

use agl_core::NumericalSemigroup;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Up to `count` distinct semigroups with `F ≤ max_frobenius`, in generation
/// order. Multiplicities are drawn from `2..=12` and the remaining one to three
/// generators from the next `max_frobenius + 1` integers.
pub fn generate(count: usize, max_frobenius: i64, seed: u64) -> Vec<NumericalSemigroup> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let top = (max_frobenius + 1).clamp(2, 12) as u64;
    let mut attempts = 0;
    while out.len() < count && attempts < 1000 * count.max(1) {
        attempts += 1;
        let m = rng.gen_range(2..=top);
        let extra = rng.gen_range(1..=3);
        let mut gens = vec![m];
        for _ in 0..extra {
            gens.push(rng.gen_range(m + 1..=m + max_frobenius.max(1) as u64 + 1));
        }
        let Ok(s) = NumericalSemigroup::from_generators(&gens) else {
            continue;
        };
        if s.frobenius() > max_frobenius || s.is_natural() {
            continue;
        }
        if seen.insert(s.generators().to_vec()) {
            out.push(s);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_and_bounded() {
        let a = generate(50, 30, 7);
        let b = generate(50, 30, 7);
        assert_eq!(a, b);
        assert_eq!(a.len(), 50);
        assert!(a.iter().all(|s| (0..=30).contains(&s.frobenius())));
        assert_ne!(generate(50, 30, 8), a);
    }

    #[test]
    fn tiny_bound_terminates() {
        let a = generate(10, 1, 1);
        assert_eq!(a.len(), 1);
        assert_eq!(a[0].generators(), &[2, 3]);
    }
}
