//! Exact rank computations over ℚ using integer arithmetic only.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A sparse integer row: `(column, value)` pairs. Rational rows can be
/// cleared of denominators first; rank is unaffected.
pub type SparseRow = Vec<(usize, BigInt)>;

/// Rank over ℚ by fraction-free (Bareiss) elimination.
pub fn exact_rank(rows: &[SparseRow]) -> usize {
    let ncols = rows
        .iter()
        .flat_map(|r| r.iter().map(|&(c, _)| c + 1))
        .max()
        .unwrap_or(0);
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            let mut dense = vec![BigInt::zero(); ncols];
            for (c, v) in r {
                dense[*c] += v;
            }
            dense
        })
        .collect();

    let nrows = m.len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col].clone();
        let (top, bottom) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in bottom {
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(pivot_row).skip(col + 1) {
                *x = (&pivot * &*x - &factor * p) / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Row-echelon basis grown one vector at a time.
///
/// Each stored row has a pivot column where all later rows vanish; rows are
/// kept primitive (content 1) so coefficients stay small.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    ncols: usize,
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl EchelonBasis {
    pub fn new(ncols: usize) -> Self {
        Self {
            ncols,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Adds `v` to the span; returns whether the rank went up.
    pub fn insert(&mut self, mut v: Vec<BigInt>) -> bool {
        debug_assert_eq!(v.len(), self.ncols);
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let a = row[*pivot].clone();
            let b = v[*pivot].clone();
            for (x, r) in v.iter_mut().zip(row) {
                *x = &a * &*x - &b * r;
            }
            make_primitive(&mut v);
        }
        match v.iter().position(|x| !x.is_zero()) {
            Some(pivot) => {
                make_primitive(&mut v);
                self.rows.push((pivot, v));
                true
            }
            None => false,
        }
    }

    pub fn insert_sparse(&mut self, row: &SparseRow) -> bool {
        let mut dense = vec![BigInt::zero(); self.ncols];
        for (c, x) in row {
            dense[*c] += x;
        }
        self.insert(dense)
    }
}

fn make_primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in v.iter_mut() {
        *x = &*x / &g;
    }
    debug_assert!(!g.is_negative());
}
