use agl_core::classify::{classify, hilbert_coefficients_with_shift, kmodr_decomposition, ClassLabel};
use agl_core::ulrich::{
    conductor_ulrich_iff, is_ulrich, oversemigroups, two_generated_consequences, scan_monomial_ulrich,
    scan_monomial_ulrich_exhaustive, ulrich_checks,
};
use agl_core::valueideal::{canonical_ideal, conductor, ring_generated};
use agl_core::{NumericalSemigroup, ValueIdeal};
use num_integer::Integer;
use proptest::prelude::*;

fn semigroups(max_gen: u64, max_frobenius: i64) -> impl Strategy<Value = NumericalSemigroup> {
    prop::collection::vec(2..=max_gen, 2..5)
        .prop_filter("coprime", |g| g.iter().fold(0, |a, &b| b.gcd(&a)) == 1)
        .prop_map(|g| NumericalSemigroup::from_generators(&g).unwrap())
        .prop_filter("frobenius bound", move |s| s.frobenius() <= max_frobenius)
}

// Membership by dynamic programming over the generators.
fn reachable(gens: &[i64], bound: i64) -> Vec<bool> {
    let mut reach = vec![false; bound as usize + 1];
    reach[0] = true;
    for z in 1..=bound as usize {
        reach[z] = gens.iter().any(|&g| g as usize <= z && reach[z - g as usize]);
    }
    reach
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn membership_matches_apery(s in semigroups(30, 200)) {
        let w = s.window();
        let reach = reachable(s.generators(), w);
        for &m in s.generators() {
            let apery = s.apery_set(m).unwrap();
            for z in 0..=w {
                prop_assert_eq!(reach[z as usize], z >= apery[(z % m) as usize]);
                prop_assert_eq!(s.contains(z), reach[z as usize]);
            }
        }
    }

    #[test]
    fn gap_counts(s in semigroups(30, 200)) {
        prop_assert_eq!(s.gaps().count(), s.genus());
        let f = s.frobenius();
        prop_assert!(f < 2 * s.genus() as i64);
        prop_assert_eq!(f + 1 == 2 * s.genus() as i64, s.is_symmetric());
        prop_assert_eq!(s.type_r() == 1, s.is_symmetric());
        let pf = s.pseudo_frobenius();
        prop_assert_eq!(*pf.last().unwrap(), f);
        prop_assert!(pf.iter().all(|&z| !s.contains(z)));
        let again = NumericalSemigroup::from_generators(&s.generators_u64()).unwrap();
        prop_assert_eq!(again.generators(), s.generators());
    }

    #[test]
    fn principal_colength_is_value(s in semigroups(25, 80)) {
        for v in s.elements_up_to(3 * s.multiplicity() + s.frobenius()).filter(|&v| v > 0).take(20) {
            prop_assert_eq!(ValueIdeal::principal(&s, v).colength(&s).unwrap(), v as usize);
        }
    }

    #[test]
    fn product_and_colon_laws(s in semigroups(20, 60)) {
        let m = ValueIdeal::maximal(&s);
        let k = canonical_ideal(&s);
        let p = ValueIdeal::generated(&s, &[s.multiplicity() * 2, s.generators()[1]]);
        prop_assert_eq!(m.product(&k), k.product(&m));
        prop_assert_eq!(m.product(&k).product(&p), m.product(&k.product(&p)));
        for (a, b) in [(&m, &k), (&p, &m), (&k, &p), (&m, &p)] {
            prop_assert!(a.colon(b).product(b).is_subset_of(a));
        }
    }

    #[test]
    fn canonical_duality(s in semigroups(25, 100)) {
        let k = canonical_ideal(&s);
        let f = s.frobenius();
        for x in -5..=s.window() {
            prop_assert_eq!(k.contains(x), x >= 0 && !s.contains(f - x));
        }
    }

    #[test]
    fn conductor_is_largest(s in semigroups(20, 60)) {
        let s_prime = ring_generated(&canonical_ideal(&s)).unwrap();
        let c = conductor(&s, &s_prime).unwrap();
        let over = ValueIdeal::unit(&s_prime);
        prop_assert!(c.product(&over).is_subset_of(&ValueIdeal::unit(&s)));
        for z in 0..c.tail() {
            if c.contains(z) {
                continue;
            }
            let bigger = c.union(&ValueIdeal::generated(&s, &[z.max(0)]));
            prop_assert!(!bigger.product(&over).is_subset_of(&ValueIdeal::unit(&s)));
        }
    }

    #[test]
    fn classification_routes(s in semigroups(25, 60)) {
        let report = classify(&s).unwrap();
        let rank = report.hilbert.sally_rank;
        prop_assert!(rank >= 0);
        prop_assert_eq!(rank == 2, report.conductor_colength == 2);
        prop_assert_eq!(rank == 0, s.is_symmetric());
        prop_assert_eq!(rank == 1, report.conductor == ValueIdeal::maximal(&s));
        let a = s.frobenius() + 1;
        prop_assert_eq!(report.hilbert.e0, a);
        prop_assert_eq!(ValueIdeal::principal(&s, a).colength(&s).unwrap() as i64, a);
        for shift in s.elements_up_to(2 * s.multiplicity()).take(3) {
            let h = hilbert_coefficients_with_shift(&s, a + shift).unwrap();
            prop_assert_eq!(h.sally_rank, rank);
        }
        if report.label == ClassLabel::TwoAlmostGorenstein {
            let d = kmodr_decomposition(&s).unwrap();
            prop_assert_eq!(d.free_rank + d.residue_rank, s.type_r() - 1);
            prop_assert_eq!(d.free_rank + d.mu, d.length);
        }
    }

    // ℓ(S'/K) counts the rank directly.
    #[test]
    fn rank_by_lengths(s in semigroups(25, 60)) {
        let rank = classify(&s).unwrap().hilbert.sally_rank;
        let k = canonical_ideal(&s);
        let s_prime = ring_generated(&k).unwrap();
        let non_k = (0..k.tail()).filter(|&z| !k.contains(z)).count();
        prop_assert_eq!(rank, non_k as i64 - s_prime.genus() as i64);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn certificates_are_consistent(s in semigroups(16, 30)) {
        for cert in scan_monomial_ulrich(&s, 3 * (s.frobenius() + 1)).unwrap() {
            prop_assert_eq!(cert.v, (cert.mu * cert.l_r_i) as i64);
            prop_assert!(cert.ideal.is_module_over(&s));
            prop_assert!(cert.ideal.is_integral(&s));
            prop_assert_eq!(cert.ideal.product(&ValueIdeal::unit(&s)), cert.ideal.clone());
        }
    }

    #[test]
    fn fast_scan_matches_exhaustive(s in semigroups(13, 12)) {
        let v_max = 3 * (s.frobenius() + 1);
        prop_assert_eq!(
            scan_monomial_ulrich(&s, v_max).unwrap(),
            scan_monomial_ulrich_exhaustive(&s, v_max).unwrap()
        );
    }

    #[test]
    fn oversemigroups_by_subsets(s in semigroups(13, 12)) {
        let gaps: Vec<i64> = s.gaps().collect();
        let mut count = 0;
        for mask in 0u32..1 << gaps.len() {
            let kept = |z: i64| s.contains(z) || gaps.iter().enumerate().any(|(i, &g)| g == z && mask >> i & 1 == 1);
            let closed = (1..=s.frobenius())
                .all(|x| (1..=s.frobenius()).all(|y| !kept(x) || !kept(y) || kept(x + y)));
            count += usize::from(closed);
        }
        prop_assert_eq!(oversemigroups(&s).len(), count);
    }

    // Good ideal and freeness agree whenever I² = QI, whether or not the
    // ideal is Ulrich.
    #[test]
    fn two_generated_routes_agree(s in semigroups(14, 20)) {
        for a in s.elements_up_to(2 * s.frobenius() + 2).filter(|&a| a > 0) {
            for b in a + 1..=a + s.frobenius() {
                if !s.contains(b) || s.contains(b - a) {
                    continue;
                }
                let e = ValueIdeal::generated(&s, &[a, b]);
                let cert = ulrich_checks(&s, &e).unwrap();
                if cert.mu == 2 && cert.checks.square_is_qi {
                    prop_assert_eq!(cert.checks.good_ideal, Some(cert.checks.quotient_free));
                }
            }
        }
    }

    #[test]
    fn two_agl_consequences(s in semigroups(16, 40)) {
        if classify(&s).unwrap().label != ClassLabel::TwoAlmostGorenstein {
            return Ok(());
        }
        prop_assert!(conductor_ulrich_iff(&s).unwrap().holds());
        for cert in scan_monomial_ulrich(&s, 3 * (s.frobenius() + 1)).unwrap() {
            if cert.mu == 2 {
                prop_assert!(two_generated_consequences(&s, &cert).unwrap().holds());
            }
        }
    }
}

#[test]
fn maximal_ideal_is_ulrich_iff_minimal_multiplicity() {
    for gens in [&[3u64, 7, 8][..], &[4, 9, 11, 14], &[6, 8, 10, 11], &[5, 7, 9, 13], &[3, 4, 5], &[2, 3]] {
        let s = NumericalSemigroup::from_generators(gens).unwrap();
        let m = ValueIdeal::maximal(&s);
        assert_eq!(is_ulrich(&s, &m).unwrap().is_some(), s.has_minimal_multiplicity(), "{s}");
    }
}
