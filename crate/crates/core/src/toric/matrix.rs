//! Polynomial matrices and verification of the determinantal presentation of
//! the defining ideal of a 2-almost Gorenstein monomial curve.
//!
//! The matrix has `1 + l + m` rows and `l·n + m·n + q` columns. Row 0 holds the
//! entries `a_ij` (`l` blocks of width `n`), `b_ij` (`m` blocks of width `n`) and
//! `c_1 … c_q`. Below it sits a block-diagonal pattern: `(X₁², X₂, …, Xₙ)` under
//! each `a` block and `(X₁, X₂, …, Xₙ)` under each `b` block, zero elsewhere.
//! The defining ideal should be the sum of the ideals of 2×2 minors of each
//! `a`/`b` block stacked on its pattern row, plus `(c_1, …, c_q)`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::kernel::{ideal_equal_to_kernel, KernelVerdict};
use super::poly::{WeightedPolyRing, WeightedPolynomial};
use crate::classify::{classify, ClassLabel};
use crate::semigroup::NumericalSemigroup;
use crate::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PolyMatrix {
    pub rows: Vec<Vec<WeightedPolynomial>>,
}

impl PolyMatrix {
    pub fn new(rows: Vec<Vec<WeightedPolynomial>>) -> Self {
        Self { rows }
    }

    pub fn parse(ring: &WeightedPolyRing, rows: &[Vec<&str>]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|t| ring.parse(t)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { rows })
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }
}

/// Column partition `(l, m, q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Blocks {
    pub l: usize,
    pub m: usize,
    pub q: usize,
}

/// Nonzero 2×2 minors `top_j·bottom_k - top_k·bottom_j`, `j < k`.
pub fn minors_2x2(top: &[WeightedPolynomial], bottom: &[WeightedPolynomial]) -> Vec<WeightedPolynomial> {
    let n = top.len().min(bottom.len());
    let mut out = Vec::new();
    for j in 0..n {
        for k in j + 1..n {
            let minor = &(&top[j] * &bottom[k]) - &(&top[k] * &bottom[j]);
            if !minor.is_zero() {
                out.push(minor);
            }
        }
    }
    out
}

/// A cell whose entry is required to lie in `J` but does not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JFailure {
    /// 1-based column in row 1.
    pub col: usize,
    pub entry: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeReport {
    pub blocks: Blocks,
    /// Entries `a_ij` and `b_ij` (`j ≥ 2`) outside `J`.
    pub j_failures: Vec<JFailure>,
    /// Generators of `Σ I₂(…) + (c_1, …, c_q)`.
    pub assembled: Vec<WeightedPolynomial>,
    pub verdict: KernelVerdict,
    pub d_max: u64,
    /// Classification of the ring once the matrix checks pass; the
    /// determinantal shape forces 2-AGL.
    pub two_agl: Option<bool>,
    /// `l + m = r(R) - 1`.
    pub block_count_matches_type: bool,
    /// Minimal multiplicity forces `q = 0`.
    pub minimal_multiplicity_q_zero: bool,
    /// Embedding dimension 3 forces `(l, m, q) = (1, 0, 0)`.
    pub embdim_three_shape: bool,
}

impl ShapeReport {
    pub fn passed(&self) -> bool {
        self.j_failures.is_empty()
            && self.verdict.is_equal()
            && self.two_agl == Some(true)
            && self.block_count_matches_type
            && self.minimal_multiplicity_q_zero
            && self.embdim_three_shape
    }
}

/// Checks a matrix against the determinantal presentation structure.
///
/// Dimension and pattern-row problems are reported as
/// [`Error::ShapeMismatch`] at the first offending (1-based) cell; everything
/// else is recorded in the [`ShapeReport`].
pub fn check_determinantal_shape(
    mat: &PolyMatrix,
    ring: &WeightedPolyRing,
    blocks: Blocks,
    s: &NumericalSemigroup,
    d_max: u64,
) -> Result<ShapeReport> {
    check_ring(ring, s)?;
    let n = ring.nvars();
    let Blocks { l, m, q } = blocks;
    let width = l * n + m * n + q;
    if mat.nrows() != 1 + l + m {
        return Err(mismatch(mat.nrows(), 0, format!("expected {} rows", 1 + l + m)));
    }
    for (i, row) in mat.rows.iter().enumerate() {
        if row.len() != width {
            return Err(mismatch(i + 1, row.len(), format!("expected {width} columns")));
        }
    }

    // Pattern rows.
    let square = ring.var(0, 2);
    for i in 0..l + m {
        let row = &mat.rows[1 + i];
        for (col, entry) in row.iter().enumerate() {
            let expected = if col / n == i && col < (l + m) * n {
                let k = col % n;
                if k == 0 && i < l {
                    square.clone()
                } else {
                    ring.var(k, 1)
                }
            } else {
                WeightedPolynomial::zero()
            };
            if *entry != expected {
                return Err(mismatch(
                    i + 2,
                    col + 1,
                    format!(
                        "expected `{}`, found `{}`",
                        expected.display(ring),
                        entry.display(ring)
                    ),
                ));
            }
        }
    }

    let top = &mat.rows[0];
    let mut j_failures = Vec::new();
    for (col, entry) in top.iter().enumerate().take((l + m) * n) {
        let in_b_first_column = col >= l * n && col % n == 0;
        if !in_b_first_column && !entry.in_j() {
            j_failures.push(JFailure {
                col: col + 1,
                entry: format!("{}", entry.display(ring)),
            });
        }
    }

    let mut assembled = Vec::new();
    for i in 0..l + m {
        let cols = i * n..(i + 1) * n;
        assembled.extend(minors_2x2(&top[cols.clone()], &mat.rows[1 + i][cols]));
    }
    assembled.extend(top[(l + m) * n..].iter().filter(|c| !c.is_zero()).cloned());

    let verdict = ideal_equal_to_kernel(&assembled, ring, d_max);
    let two_agl = if j_failures.is_empty() && verdict.is_equal() {
        Some(classify(s)?.label == ClassLabel::TwoAlmostGorenstein)
    } else {
        None
    };

    Ok(ShapeReport {
        blocks,
        j_failures,
        assembled,
        verdict,
        d_max,
        two_agl,
        block_count_matches_type: l + m + 1 == s.type_r(),
        minimal_multiplicity_q_zero: !s.has_minimal_multiplicity() || q == 0,
        embdim_three_shape: n != 3 || (l, m, q) == (1, 0, 0),
    })
}

/// The weights must be the minimal generators of `s`, in any order.
pub fn check_ring(ring: &WeightedPolyRing, s: &NumericalSemigroup) -> Result<()> {
    let mut w: Vec<i64> = ring.weights().iter().map(|&x| x as i64).collect();
    w.sort_unstable();
    if w != s.generators() {
        return Err(Error::RingMismatch {
            weights: ring.weights().to_vec(),
            generators: s.generators().to_vec(),
        });
    }
    Ok(())
}

fn mismatch(row: usize, col: usize, reason: String) -> Error {
    Error::ShapeMismatch { row, col, reason }
}
