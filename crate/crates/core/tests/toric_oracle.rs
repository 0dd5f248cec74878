use std::collections::BTreeMap;

use agl_core::toric::{
    default_degree_bound, kernel_dimension, minimal_kernel_generators, span_dimension, WeightedPolyRing,
};
use agl_core::NumericalSemigroup;
use num_integer::Integer;
use proptest::prelude::*;

// Exponent vectors of weighted degree d, by plain recursion.
fn monomials(weights: &[u64], d: u64) -> Vec<Vec<u32>> {
    if weights.is_empty() {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for k in 0..=d / weights[0] {
        for mut rest in monomials(&weights[1..], d - k * weights[0]) {
            rest.insert(0, k as u32);
            out.push(rest);
        }
    }
    out
}

// Minimal binomial generators of a toric ideal in degree d number one less
// than the connected components of the graph joining monomials that share a
// variable.
fn generators_in_degree(weights: &[u64], d: u64) -> usize {
    let mons = monomials(weights, d);
    if mons.is_empty() {
        return 0;
    }
    let mut parent: Vec<usize> = (0..mons.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for i in 0..mons.len() {
        for j in i + 1..mons.len() {
            if mons[i].iter().zip(&mons[j]).any(|(&a, &b)| a > 0 && b > 0) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let roots = (0..mons.len()).filter(|&i| find(&mut parent, i) == i).count();
    roots - 1
}

fn oracle_degrees(weights: &[u64], d_max: u64) -> BTreeMap<u64, usize> {
    (1..=d_max)
        .map(|d| (d, generators_in_degree(weights, d)))
        .filter(|&(_, c)| c > 0)
        .collect()
}

fn computed_degrees(ring: &WeightedPolyRing, d_max: u64) -> BTreeMap<u64, usize> {
    let mut out = BTreeMap::new();
    for (d, _) in minimal_kernel_generators(ring, d_max).generators {
        *out.entry(d).or_insert(0) += 1;
    }
    out
}

#[test]
fn counts_for_named_curves() {
    for (gens, count) in [(&[5u64, 7, 9, 13][..], 5), (&[4, 9, 11, 14], 6), (&[3, 7, 8], 3), (&[6, 8, 10, 11], 4)] {
        let s = NumericalSemigroup::from_generators(gens).unwrap();
        let ring = WeightedPolyRing::for_semigroup(&s);
        let d_max = default_degree_bound(&s);
        assert_eq!(computed_degrees(&ring, d_max), oracle_degrees(gens, d_max), "{s}");
        assert_eq!(minimal_kernel_generators(&ring, d_max).count(), count, "{s}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn degreewise_counts_match_graph_oracle(
        gens in prop::collection::vec(3u64..14, 3..5)
            .prop_filter("coprime", |g| g.iter().fold(0, |a, &b| b.gcd(&a)) == 1)
    ) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        prop_assume!(s.embedding_dimension() >= 2);
        let ring = WeightedPolyRing::for_semigroup(&s);
        let weights: Vec<u64> = s.generators_u64();
        let d_max = default_degree_bound(&s);
        prop_assert_eq!(computed_degrees(&ring, d_max), oracle_degrees(&weights, d_max));
        for d in 0..=d_max {
            prop_assert_eq!(kernel_dimension(&ring, d), monomials(&weights, d).len().saturating_sub(1));
        }
    }

    #[test]
    fn generators_are_irredundant(
        gens in prop::collection::vec(3u64..12, 3..5)
            .prop_filter("coprime", |g| g.iter().fold(0, |a, &b| b.gcd(&a)) == 1)
    ) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let ring = WeightedPolyRing::for_semigroup(&s);
        let found = minimal_kernel_generators(&ring, default_degree_bound(&s));
        let polys: Vec<_> = found.generators.iter().map(|(_, g)| g.clone()).collect();
        for (i, (d, _)) in found.generators.iter().enumerate() {
            let mut fewer = polys.clone();
            fewer.remove(i);
            prop_assert!(span_dimension(&fewer, &ring, *d) < span_dimension(&polys, &ring, *d));
        }
    }
}
