//! Brute-force reference computations.
//!
//! Nothing here reuses the closed forms or the recurrences it is meant to
//! check: determinants come from Gaussian elimination or cofactor expansion,
//! eigenvalues from Sturm-count bisection on a symmetrized copy.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::tridiag::TridiagonalMatrix;

/// Bisection stops once the bracket is this narrow.
pub const BISECTION_TOLERANCE: f64 = 1e-12;
pub const BISECTION_MAX_ITERATIONS: usize = 200;

/// Largest order accepted by [`cofactor_det`].
pub const COFACTOR_MAX_ORDER: usize = 20;

/// Which side an eigenvector multiplies from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

fn check_square(rows: &[Vec<f64>]) -> Result<usize> {
    let n = rows.len();
    match rows.iter().find(|r| r.len() != n) {
        Some(bad) => Err(Error::DimensionMismatch {
            expected: n,
            actual: bad.len(),
        }),
        None => Ok(n),
    }
}

/// Determinant by Gaussian elimination with partial pivoting.
pub fn dense_det(rows: &[Vec<f64>]) -> Result<f64> {
    let n = check_square(rows)?;
    let mut a = rows.to_vec();
    let mut det = 1.0;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
            .unwrap_or(col);
        if a[pivot][col] == 0.0 {
            return Ok(0.0);
        }
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        det *= a[col][col];
        let (top, bottom) = a.split_at_mut(col + 1);
        let pivot_row = &top[col];
        for row in bottom {
            let factor = row[col] / pivot_row[col];
            if factor != 0.0 {
                for (v, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *v -= factor * p;
                }
            }
        }
    }
    Ok(det)
}

/// Determinant by Laplace expansion along successive rows, memoized on the
/// set of columns still available. Exponential in `n`; capped at
/// [`COFACTOR_MAX_ORDER`].
pub fn cofactor_det(rows: &[Vec<f64>]) -> Result<f64> {
    let n = check_square(rows)?;
    if n > COFACTOR_MAX_ORDER {
        return Err(Error::OrderTooLarge {
            order: n,
            bound: COFACTOR_MAX_ORDER,
        });
    }
    if n == 0 {
        return Ok(1.0);
    }
    fn expand(rows: &[Vec<f64>], row: usize, cols: u32, memo: &mut HashMap<u32, f64>) -> f64 {
        if row == rows.len() {
            return 1.0;
        }
        if let Some(&v) = memo.get(&cols) {
            return v;
        }
        let mut sum = 0.0;
        let mut sign = 1.0;
        for col in 0..rows.len() {
            if cols & (1 << col) == 0 {
                continue;
            }
            let entry = rows[row][col];
            if entry != 0.0 {
                sum += sign * entry * expand(rows, row + 1, cols & !(1 << col), memo);
            }
            sign = -sign;
        }
        memo.insert(cols, sum);
        sum
    }
    let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    Ok(expand(rows, 0, all, &mut HashMap::new()))
}

/// Diagonal similarity `D^{-1} M D` with both off-diagonals `√(sub·sup)`.
pub fn symmetrize(m: &TridiagonalMatrix) -> Result<TridiagonalMatrix> {
    let off = m
        .off_products()
        .enumerate()
        .map(|(index, product)| {
            if product > 0.0 {
                Ok(product.sqrt())
            } else {
                Err(Error::IndefiniteProduct { index, product })
            }
        })
        .collect::<Result<Vec<_>>>()?;
    TridiagonalMatrix::new(off.clone(), m.diag().to_vec(), off)
}

/// Number of eigenvalues of the symmetric tridiagonal `(diag, off)` strictly
/// below `x`, from the signs of the `LDL^T` pivots of `S - x I`.
pub fn sturm_count(diag: &[f64], off: &[f64], x: f64) -> usize {
    let max_off_sq = off.iter().map(|e| e * e).fold(1.0, f64::max);
    let pivmin = f64::MIN_POSITIVE * max_off_sq;
    let mut count = 0;
    let mut q = 0.0;
    for (i, d) in diag.iter().enumerate() {
        q = if i == 0 {
            d - x
        } else {
            d - x - off[i - 1] * off[i - 1] / q
        };
        if q.abs() < pivmin {
            q = -pivmin;
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Interval containing every eigenvalue of the symmetric `(diag, off)`.
pub fn gershgorin_interval(diag: &[f64], off: &[f64]) -> (f64, f64) {
    let n = diag.len();
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let mut r = 0.0;
        if i > 0 {
            r += off[i - 1].abs();
        }
        if i + 1 < n {
            r += off[i].abs();
        }
        lo = lo.min(diag[i] - r);
        hi = hi.max(diag[i] + r);
    }
    let pad = f64::EPSILON * (lo.abs().max(hi.abs()).max(1.0)) * n as f64;
    (lo - pad, hi + pad)
}

/// All eigenvalues of a tridiagonal matrix with `sub_i · sup_i > 0`,
/// in descending order, repeated according to multiplicity.
pub fn eig_roots(m: &TridiagonalMatrix) -> Result<Vec<f64>> {
    let s = symmetrize(m)?;
    let (diag, off) = (s.diag(), s.sub());
    let n = diag.len();
    let (lo0, hi0) = gershgorin_interval(diag, off);
    let mut roots: Vec<f64> = (0..n)
        .map(|k| {
            // k-th smallest eigenvalue: the point where the count first exceeds k
            let (mut lo, mut hi) = (lo0, hi0);
            for _ in 0..BISECTION_MAX_ITERATIONS {
                if hi - lo <= BISECTION_TOLERANCE {
                    break;
                }
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                if sturm_count(diag, off, mid) > k {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            0.5 * (lo + hi)
        })
        .collect();
    roots.reverse();
    Ok(roots)
}

/// `‖M v - x v‖∞` for [`Side::Right`], `‖vᵀ M - x vᵀ‖∞` for [`Side::Left`].
pub fn residual(m: &TridiagonalMatrix, x: f64, v: &[f64], side: Side) -> Result<f64> {
    let n = m.order();
    if v.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: v.len(),
        });
    }
    // vᵀ M is the right product with Mᵀ, whose bands are swapped.
    let (lower, upper) = match side {
        Side::Right => (m.sub(), m.sup()),
        Side::Left => (m.sup(), m.sub()),
    };
    let mut worst: f64 = 0.0;
    for i in 0..n {
        let mut r = (m.diag()[i] - x) * v[i];
        if i > 0 {
            r += lower[i - 1] * v[i - 1];
        }
        if i + 1 < n {
            r += upper[i] * v[i + 1];
        }
        worst = worst.max(r.abs());
    }
    Ok(worst)
}
