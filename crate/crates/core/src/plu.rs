//! `M = P L U` for a tridiagonal `M` with nonzero subdiagonal, using a fixed
//! cyclic row pivot so that no diagonal entry of `M` is ever divided by.
//!
//! * `P` sends row `n` to the top and shifts rows `1..n-1` down by one.
//! * `L` is unit lower triangular; its only off-diagonal entries form the last
//!   row `L_{1,n} .. L_{n-1,n}`.
//! * `U` holds rows `2..n` of `M` shifted up by one, followed by a last row
//!   whose only entry is the corner `U_{n,n}`.
//!
//! With 1-based indices the last row of `L` satisfies
//!
//! ```text
//! L_{1,n} = m_{1,1} / m_{2,1}
//! L_{2,n} = -(m_{1,1} m_{2,2} - m_{1,2} m_{2,1}) / (m_{2,1} m_{3,2})
//! L_{i,n} = -(m_{i,i} L_{i-1,n} + m_{i-1,i} L_{i-2,n}) / m_{i+1,i}     3 <= i <= n-1
//! U_{n,n} = -m_{n,n} L_{n-1,n} - m_{n-1,n} L_{n-2,n}
//! ```
//!
//! and `det M = (-1)^n (∏ m_{k,k-1}) (m_{n,n} L_{n-1,n} + m_{n-1,n} L_{n-2,n})`.
//!
//! For the first intersection matrix of a table algebra, specialized to
//! `a_0 = 0`, `c_1 = 1`, `b_0 = k`, the same recurrence applied to `x I - B_1`
//! yields the characteristic polynomial and the eigenvector recurrences below.
//!
//! The `L` row carries no growth control: for generic matrices its entries
//! grow geometrically with `n`.

use crate::error::{Error, Result};
use crate::oracle::{self, Side};
use crate::spectra::positive;
use crate::table_algebra::TableAlgebraSpec;
use crate::tridiag::TridiagonalMatrix;

const RESCALE_HIGH: f64 = 1e100;
const RESCALE_LOW: f64 = 1e-100;

/// Eigenvector residual bound, relative to `1 + |x|`.
pub const EIGENVECTOR_TOLERANCE: f64 = 1e-8;

/// The `n`-cycle `P` with `(P X)_1 = X_n` and `(P X)_i = X_{i-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CyclicPermutation {
    n: usize,
}

impl CyclicPermutation {
    pub fn new(n: usize) -> Self {
        Self { n }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Row of `X` that lands in row `i` of `P X` (0-based).
    pub fn source_row(&self, i: usize) -> usize {
        if i == 0 {
            self.n - 1
        } else {
            i - 1
        }
    }

    pub fn apply_rows<T: Clone>(&self, rows: &[T]) -> Vec<T> {
        (0..self.n)
            .map(|i| rows[self.source_row(i)].clone())
            .collect()
    }

    pub fn det(&self) -> f64 {
        if self.n % 2 == 1 {
            1.0
        } else {
            -1.0
        }
    }
}

/// Factors of `M = P L U`.
#[derive(Debug, Clone, PartialEq)]
pub struct PluFactors {
    perm: CyclicPermutation,
    lrow: Vec<f64>,
    u_diag: Vec<f64>,
    u_sup1: Vec<f64>,
    u_sup2: Vec<f64>,
    ucorner: f64,
}

fn check_subdiagonal(m: &TridiagonalMatrix) -> Result<()> {
    match m.sub().iter().position(|&v| v == 0.0) {
        Some(i) => Err(Error::ZeroSubdiagonal { index: i + 1 }),
        None => Ok(()),
    }
}

fn check_order(m: &TridiagonalMatrix) -> Result<()> {
    if m.order() < 3 {
        return Err(Error::OrderTooSmall {
            order: m.order(),
            min: 3,
        });
    }
    Ok(())
}

impl PluFactors {
    /// Requires `n >= 3` and every `m_{i+1,i} != 0`.
    pub fn factor(m: &TridiagonalMatrix) -> Result<Self> {
        check_order(m)?;
        check_subdiagonal(m)?;
        let n = m.order();
        let (sub, diag, sup) = (m.sub(), m.diag(), m.sup());

        let mut lrow = Vec::with_capacity(n - 1);
        lrow.push(diag[0] / sub[0]);
        lrow.push(-(diag[0] * diag[1] - sup[0] * sub[0]) / (sub[0] * sub[1]));
        for k in 2..n - 1 {
            let next = -(diag[k] * lrow[k - 1] + sup[k - 1] * lrow[k - 2]) / sub[k];
            lrow.push(next);
        }
        if let Some(k) = lrow.iter().position(|v| !v.is_finite()) {
            return Err(Error::Overflow { index: k + 1 });
        }
        let ucorner = -diag[n - 1] * lrow[n - 2] - sup[n - 2] * lrow[n - 3];

        Ok(Self {
            perm: CyclicPermutation::new(n),
            lrow,
            u_diag: sub.to_vec(),
            u_sup1: diag[1..].to_vec(),
            u_sup2: sup[1..].to_vec(),
            ucorner,
        })
    }

    pub fn order(&self) -> usize {
        self.perm.order()
    }

    pub fn permutation(&self) -> CyclicPermutation {
        self.perm
    }

    /// `L_{1,n} .. L_{n-1,n}`.
    pub fn lrow(&self) -> &[f64] {
        &self.lrow
    }

    /// `U_{n,n}`.
    pub fn ucorner(&self) -> f64 {
        self.ucorner
    }

    /// `U_{i,i}` for `i < n`, i.e. the subdiagonal of `M`.
    pub fn u_diag(&self) -> &[f64] {
        &self.u_diag
    }

    /// `U_{i,i+1}` for `i < n`.
    pub fn u_sup1(&self) -> &[f64] {
        &self.u_sup1
    }

    /// `U_{i,i+2}` for `i < n-1`.
    pub fn u_sup2(&self) -> &[f64] {
        &self.u_sup2
    }

    pub fn det_p(&self) -> f64 {
        self.perm.det()
    }

    pub fn det_l(&self) -> f64 {
        1.0
    }

    pub fn det_u(&self) -> f64 {
        self.u_diag.iter().product::<f64>() * self.ucorner
    }

    /// `(-1)^n (∏ m_{k,k-1}) (m_{n,n} L_{n-1,n} + m_{n-1,n} L_{n-2,n})`.
    pub fn determinant(&self) -> f64 {
        let n = self.order();
        let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
        let tail = self.u_sup1[n - 2] * self.lrow[n - 2] + self.u_sup2[n - 3] * self.lrow[n - 3];
        sign * self.u_diag.iter().product::<f64>() * tail
    }

    /// Row `r` of `U` as `(first column, entries)`, 0-based.
    fn u_row(&self, r: usize) -> (usize, Vec<f64>) {
        let n = self.order();
        if r == n - 1 {
            return (r, vec![self.ucorner]);
        }
        let mut entries = vec![self.u_diag[r], self.u_sup1[r]];
        if r + 2 < n {
            entries.push(self.u_sup2[r]);
        }
        (r, entries)
    }

    /// Last row of `L U`, which `P` moves to the top.
    fn lu_last_row(&self) -> Vec<f64> {
        let n = self.order();
        let mut row = vec![0.0; n];
        for r in 0..n {
            let weight = if r == n - 1 { 1.0 } else { self.lrow[r] };
            let (start, entries) = self.u_row(r);
            for (k, v) in entries.iter().enumerate() {
                row[start + k] += weight * v;
            }
        }
        row
    }

    pub fn l_dense(&self) -> Vec<Vec<f64>> {
        let n = self.order();
        let mut l = vec![vec![0.0; n]; n];
        for (i, row) in l.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        l[n - 1][..n - 1].copy_from_slice(&self.lrow);
        l
    }

    pub fn u_dense(&self) -> Vec<Vec<f64>> {
        let n = self.order();
        let mut u = vec![vec![0.0; n]; n];
        for (r, row) in u.iter_mut().enumerate() {
            let (start, entries) = self.u_row(r);
            row[start..start + entries.len()].copy_from_slice(&entries);
        }
        u
    }

    /// Dense `P L U`.
    pub fn product_dense(&self) -> Vec<Vec<f64>> {
        let n = self.order();
        let mut lu = self.u_dense();
        lu[n - 1] = self.lu_last_row();
        self.perm.apply_rows(&lu)
    }

    /// `‖|L| |U|‖∞`. Rounding bounds the reconstruction error by a small
    /// multiple of `n ε` times this norm, which grows with the `L` row.
    pub fn abs_factor_norm(&self) -> f64 {
        let n = self.order();
        let row_sums: Vec<f64> = (0..n)
            .map(|r| self.u_row(r).1.iter().map(|v| v.abs()).sum())
            .collect();
        let last = self
            .lrow
            .iter()
            .zip(&row_sums)
            .map(|(l, s)| l.abs() * s)
            .sum::<f64>()
            + row_sums[n - 1];
        row_sums[..n - 1].iter().copied().fold(last, f64::max)
    }

    /// `‖P L U - M‖∞` (largest absolute row sum) in `O(n)` memory.
    pub fn reconstruction_residual(&self, m: &TridiagonalMatrix) -> Result<f64> {
        let n = self.order();
        if m.order() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                actual: m.order(),
            });
        }
        let (sub, diag, sup) = (m.sub(), m.diag(), m.sup());
        let m_entry = |i: usize, j: usize| -> f64 {
            if i == j {
                diag[i]
            } else if i == j + 1 {
                sub[j]
            } else if j == i + 1 {
                sup[i]
            } else {
                0.0
            }
        };

        // Row 0 of P L U is the last row of L U.
        let top = self.lu_last_row();
        let mut worst = top
            .iter()
            .enumerate()
            .map(|(j, v)| (v - m_entry(0, j)).abs())
            .sum::<f64>();
        // Row i >= 1 of P L U is row i - 1 of U, which spans exactly the band of row i of M.
        for i in 1..n {
            let (start, entries) = self.u_row(i - 1);
            let s: f64 = entries
                .iter()
                .enumerate()
                .map(|(k, v)| (v - m_entry(i, start + k)).abs())
                .sum();
            worst = worst.max(s);
        }
        Ok(worst)
    }
}

/// Determinant via the factorization; orders 1 and 2 are computed directly.
pub fn det_via_plu(m: &TridiagonalMatrix) -> Result<f64> {
    match m.order() {
        1 => Ok(m.diag()[0]),
        2 => Ok(m.diag()[0] * m.diag()[1] - m.sub()[0] * m.sup()[0]),
        _ => Ok(PluFactors::factor(m)?.determinant()),
    }
}

/// [`det_via_plu`] as `(sign, ln|det|)`, rescaling the `L` recurrence so that
/// orders in the thousands neither overflow nor underflow.
pub fn log_det_via_plu(m: &TridiagonalMatrix) -> Result<(f64, f64)> {
    if m.order() < 3 {
        let det = det_via_plu(m)?;
        return Ok(if det == 0.0 {
            (0.0, f64::NEG_INFINITY)
        } else {
            (det.signum(), det.abs().ln())
        });
    }
    check_subdiagonal(m)?;
    let n = m.order();
    let (sub, diag, sup) = (m.sub(), m.diag(), m.sup());

    // Only the ratio of consecutive entries matters once the first two are
    // known, so the pair is rescaled together and the scale kept in log form.
    let mut older = diag[0] / sub[0];
    let mut newer = -(diag[0] * diag[1] - sup[0] * sub[0]) / (sub[0] * sub[1]);
    let mut log_scale = 0.0;
    for k in 2..n - 1 {
        let next = -(diag[k] * newer + sup[k - 1] * older) / sub[k];
        older = newer;
        newer = next;
        let s = newer.abs().max(older.abs());
        if s > RESCALE_HIGH || (s > 0.0 && s < RESCALE_LOW) {
            newer /= s;
            older /= s;
            log_scale += s.ln();
        }
    }
    let tail = diag[n - 1] * newer + sup[n - 2] * older;
    if tail == 0.0 {
        return Ok((0.0, f64::NEG_INFINITY));
    }
    let mut sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let mut log_mag = tail.abs().ln() + log_scale;
    for &s in sub {
        sign *= s.signum();
        log_mag += s.abs().ln();
    }
    Ok((sign * tail.signum(), log_mag))
}

/// `det(x I - B_1)` for `B_1` specialized to `a_0 = 0`, `c_1 = 1`, `b_0 = k`,
/// through the `L`-row recurrence of the factorization of `x I - B_1`:
///
/// ```text
/// L_1 = -x / k
/// L_2 = -(x (x - a_1) - k) / (k b_1)
/// L_i = ((x - a_{i-1}) L_{i-1} - c_{i-1} L_{i-2}) / b_{i-1}        3 <= i <= d
/// det = -k (b_1 ⋯ b_{d-1}) ((x - a_d) L_d - c_d L_{d-1})
/// ```
pub fn b1_charpoly_via_plu(spec: &TableAlgebraSpec, k: f64, x: f64) -> Result<f64> {
    positive("k", k)?;
    let d = spec.d();
    let (b, a, c) = (spec.b(), spec.a(), spec.c());
    // l[i] holds L_{i, d+1}; l[0] is unused.
    let mut l = vec![0.0; d + 1];
    l[1] = -x / k;
    l[2] = -(x * (x - a[1]) - k) / (k * b[1]);
    for i in 3..=d {
        l[i] = ((x - a[i - 1]) * l[i - 1] - c[i - 2] * l[i - 2]) / b[i - 1];
    }
    let product: f64 = b[1..d].iter().product();
    Ok(-k * product * ((x - a[d]) * l[d] - c[d - 1] * l[d - 1]))
}

fn normalize_eigenvector(mut v: Vec<f64>, x: f64) -> Result<Vec<f64>> {
    let max = v.iter().fold(0.0_f64, |m, e| m.max(e.abs()));
    if !(max > 0.0 && max.is_finite()) {
        return Err(Error::NotAnEigenvalue {
            x,
            residual: f64::INFINITY,
            tolerance: EIGENVECTOR_TOLERANCE * (1.0 + x.abs()),
        });
    }
    let lead = v
        .iter()
        .copied()
        .find(|e| e.abs() > max * f64::EPSILON)
        .unwrap_or(max);
    let scale = lead.signum() / max;
    for e in &mut v {
        *e *= scale;
    }
    Ok(v)
}

fn certify(m: &TridiagonalMatrix, x: f64, v: Vec<f64>, side: Side) -> Result<Vec<f64>> {
    let v = normalize_eigenvector(v, x)?;
    let residual = oracle::residual(m, x, &v, side)?;
    let tolerance = EIGENVECTOR_TOLERANCE * (1.0 + x.abs());
    if residual > tolerance || !residual.is_finite() {
        return Err(Error::NotAnEigenvalue {
            x,
            residual,
            tolerance,
        });
    }
    Ok(v)
}

/// Right eigenvector `η` of `B_1` (with `a_0 = 0`, `c_1 = 1`, `b_0 = k`) for
/// the eigenvalue `x`, from the backward recurrence seeded at `η_{d+1} = 1`:
///
/// ```text
/// η_d     = (x - a_d) / b_{d-1} η_{d+1}
/// η_{j-2} = ((x - a_{j-2}) η_{j-1} - c_{j-1} η_j) / b_{j-3}       j = d+1 .. 3
/// ```
///
/// Returned with unit max-norm and first nonzero entry positive.
pub fn right_eigenvector(spec: &TableAlgebraSpec, k: f64, x: f64) -> Result<Vec<f64>> {
    let spec = spec.with_leading(k)?;
    let d = spec.d();
    let (b, a, c) = (spec.b(), spec.a(), spec.c());
    // eta[j - 1] holds η_j.
    let mut eta = vec![0.0; d + 1];
    eta[d] = 1.0;
    eta[d - 1] = (x - a[d]) / b[d - 1] * eta[d];
    for j in (3..=d + 1).rev() {
        eta[j - 3] = ((x - a[j - 2]) * eta[j - 2] - c[j - 2] * eta[j - 1]) / b[j - 3];
    }
    certify(&spec.first_intersection_matrix(), x, eta, Side::Right)
}

/// Left eigenvector `ψ` of `B_1` (with `a_0 = 0`, `c_1 = 1`, `b_0 = k`) for
/// the eigenvalue `x`, from the forward recurrence seeded at `ψ_1 = 1`:
///
/// ```text
/// ψ_2 = x / k ψ_1
/// ψ_j = ((x - a_{j-2}) ψ_{j-1} - c_{j-2} ψ_{j-2}) / b_{j-2}         j = 3 .. d+1
/// ```
///
/// Returned with unit max-norm and first nonzero entry positive.
pub fn left_eigenvector(spec: &TableAlgebraSpec, k: f64, x: f64) -> Result<Vec<f64>> {
    let spec = spec.with_leading(k)?;
    let d = spec.d();
    let (b, a, c) = (spec.b(), spec.a(), spec.c());
    // psi[j - 1] holds ψ_j.
    let mut psi = vec![0.0; d + 1];
    psi[0] = 1.0;
    psi[1] = x / k * psi[0];
    for j in 3..=d + 1 {
        psi[j - 1] = ((x - a[j - 2]) * psi[j - 2] - c[j - 3] * psi[j - 3]) / b[j - 2];
    }
    certify(&spec.first_intersection_matrix(), x, psi, Side::Left)
}
