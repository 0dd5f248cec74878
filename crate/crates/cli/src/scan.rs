//! The monomial Ulrich scan, one worker per minimum value.

use agl_core::ulrich::{oversemigroups, scan_at, UlrichCertificate};
use agl_core::{Error, NumericalSemigroup, Result};
use rayon::prelude::*;

pub fn parallel_scan(s: &NumericalSemigroup, v_max: i64) -> Result<Vec<UlrichCertificate>> {
    if s.is_natural() {
        return Err(Error::RegularRing);
    }
    let overs = oversemigroups(s);
    let per_v: Vec<Result<Vec<UlrichCertificate>>> =
        (1..=v_max).into_par_iter().map(|v| scan_at(s, v, &overs)).collect();
    let mut out = Vec::new();
    for certs in per_v {
        out.extend(certs?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use agl_core::ulrich::scan_monomial_ulrich;

    #[test]
    fn agrees_with_sequential_scan() {
        for gens in [&[3u64, 7, 8][..], &[6, 8, 10, 11], &[5, 7, 9, 13], &[7, 9, 10, 12]] {
            let s = NumericalSemigroup::from_generators(gens).unwrap();
            let v_max = 3 * (s.frobenius() + 1);
            assert_eq!(parallel_scan(&s, v_max).unwrap(), scan_monomial_ulrich(&s, v_max).unwrap());
        }
    }
}
