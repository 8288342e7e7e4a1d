use crate::error::{Error, Result};
use crate::polynomial::Polynomial;

/// Largest order accepted by [`TridiagonalMatrix::charpoly_coeffs`].
///
/// Coefficients of the characteristic polynomial of an O(1)-entry matrix
/// overflow `f64` somewhere past this order.
pub const DEFAULT_COEFF_ORDER_BOUND: usize = 1024;

// Rescale the running minors once they leave this window.
const RESCALE_HIGH: f64 = 1e100;
const RESCALE_LOW: f64 = 1e-100;

/// Real tridiagonal matrix of order `n` held as three bands.
///
/// `sub[i]` is the entry at row `i + 1`, column `i`; `sup[i]` sits at row `i`,
/// column `i + 1` (0-based).
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalMatrix {
    sub: Vec<f64>,
    diag: Vec<f64>,
    sup: Vec<f64>,
}

/// Characteristic polynomial value and slope at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharpolySample {
    pub value: f64,
    pub derivative: f64,
}

impl CharpolySample {
    /// Magnitude used to judge a root residual: `max(1, |p'(x)|)`.
    pub fn scale(&self) -> f64 {
        self.derivative.abs().max(1.0)
    }

    /// `|p(x)| / scale`, a first-order estimate of the distance to a root.
    pub fn scaled_residual(&self) -> f64 {
        self.value.abs() / self.scale()
    }
}

/// `product * prev`, with a decoupled step contributing nothing even when
/// `prev` has overflowed.
fn coupled(product: f64, prev: f64) -> f64 {
    if product == 0.0 {
        0.0
    } else {
        product * prev
    }
}

impl TridiagonalMatrix {
    pub fn new(sub: Vec<f64>, diag: Vec<f64>, sup: Vec<f64>) -> Result<Self> {
        let n = diag.len();
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        if sub.len() != n - 1 || sup.len() != n - 1 {
            return Err(Error::BandLength {
                diag: n,
                sub: sub.len(),
                sup: sup.len(),
            });
        }
        for (band, values) in [("sub", &sub), ("diag", &diag), ("sup", &sup)] {
            if let Some(index) = values.iter().position(|v| !v.is_finite()) {
                return Err(Error::NonFinite { band, index });
            }
        }
        Ok(Self { sub, diag, sup })
    }

    pub fn from_diagonal(diag: Vec<f64>) -> Result<Self> {
        let off = vec![0.0; diag.len().saturating_sub(1)];
        Self::new(off.clone(), diag, off)
    }

    /// Reads the tridiagonal part of a square dense matrix, ignoring the rest.
    pub fn from_dense(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                actual: bad.len(),
            });
        }
        let diag = (0..n).map(|i| rows[i][i]).collect();
        let sub = (1..n).map(|i| rows[i][i - 1]).collect();
        let sup = (1..n).map(|i| rows[i - 1][i]).collect();
        Self::new(sub, diag, sup)
    }

    pub fn order(&self) -> usize {
        self.diag.len()
    }

    pub fn sub(&self) -> &[f64] {
        &self.sub
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn sup(&self) -> &[f64] {
        &self.sup
    }

    pub fn trace(&self) -> f64 {
        self.diag.iter().sum()
    }

    /// Largest absolute row sum.
    pub fn norm_inf(&self) -> f64 {
        let n = self.order();
        (0..n)
            .map(|i| {
                let mut s = self.diag[i].abs();
                if i > 0 {
                    s += self.sub[i - 1].abs();
                }
                if i + 1 < n {
                    s += self.sup[i].abs();
                }
                s
            })
            .fold(0.0, f64::max)
    }

    pub fn transpose(&self) -> Self {
        Self {
            sub: self.sup.clone(),
            diag: self.diag.clone(),
            sup: self.sub.clone(),
        }
    }

    /// `x I - M`.
    pub fn shifted(&self, x: f64) -> Self {
        Self {
            sub: self.sub.iter().map(|v| -v).collect(),
            diag: self.diag.iter().map(|v| x - v).collect(),
            sup: self.sup.iter().map(|v| -v).collect(),
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        let n = self.order();
        let mut rows = vec![vec![0.0; n]; n];
        for i in 0..n {
            rows[i][i] = self.diag[i];
            if i + 1 < n {
                rows[i + 1][i] = self.sub[i];
                rows[i][i + 1] = self.sup[i];
            }
        }
        rows
    }

    /// Products `sub[i] * sup[i]`, the only off-diagonal data the determinant sees.
    pub fn off_products(&self) -> impl Iterator<Item = f64> + '_ {
        self.sub.iter().zip(&self.sup).map(|(l, u)| l * u)
    }

    /// Determinant by the three-term leading-minor recurrence
    /// `|H_k| = h_kk |H_{k-1}| - h_{k-1,k} h_{k,k-1} |H_{k-2}|`.
    pub fn det(&self) -> f64 {
        let mut prev = 1.0;
        let mut cur = self.diag[0];
        for i in 1..self.order() {
            let next = self.diag[i] * cur - coupled(self.sup[i - 1] * self.sub[i - 1], prev);
            prev = cur;
            cur = next;
        }
        cur
    }

    /// Determinant as `(sign, ln|det|)`, safe against overflow for large orders.
    ///
    /// `sign` is 0 (and the logarithm `-inf`) for a singular matrix.
    pub fn log_det(&self) -> (f64, f64) {
        let mut prev = 1.0_f64;
        let mut cur = self.diag[0];
        let mut log_scale = 0.0;
        for i in 1..self.order() {
            let next = self.diag[i] * cur - coupled(self.sup[i - 1] * self.sub[i - 1], prev);
            prev = cur;
            cur = next;
            let m = cur.abs().max(prev.abs());
            if m > RESCALE_HIGH || (m > 0.0 && m < RESCALE_LOW) {
                cur /= m;
                prev /= m;
                log_scale += m.ln();
            }
        }
        if cur == 0.0 {
            (0.0, f64::NEG_INFINITY)
        } else {
            (cur.signum(), cur.abs().ln() + log_scale)
        }
    }

    /// `det(x I - M)`.
    pub fn charpoly_eval(&self, x: f64) -> f64 {
        let mut prev = 1.0;
        let mut cur = x - self.diag[0];
        for i in 1..self.order() {
            let next = (x - self.diag[i]) * cur - self.sub[i - 1] * self.sup[i - 1] * prev;
            prev = cur;
            cur = next;
        }
        cur
    }

    /// `det(x I - M)` together with its derivative in `x`.
    pub fn charpoly_sample(&self, x: f64) -> CharpolySample {
        let (mut p_prev, mut p) = (1.0, x - self.diag[0]);
        let (mut dp_prev, mut dp) = (0.0, 1.0);
        for i in 1..self.order() {
            let q = self.sub[i - 1] * self.sup[i - 1];
            let shift = x - self.diag[i];
            let dp_next = p + shift * dp - q * dp_prev;
            let p_next = shift * p - q * p_prev;
            p_prev = p;
            p = p_next;
            dp_prev = dp;
            dp = dp_next;
        }
        CharpolySample {
            value: p,
            derivative: dp,
        }
    }

    /// Monic coefficient form of `det(x I - M)`, capped at
    /// [`DEFAULT_COEFF_ORDER_BOUND`].
    pub fn charpoly_coeffs(&self) -> Result<Polynomial> {
        self.charpoly_coeffs_bounded(DEFAULT_COEFF_ORDER_BOUND)
    }

    pub fn charpoly_coeffs_bounded(&self, bound: usize) -> Result<Polynomial> {
        let n = self.order();
        if n > bound {
            return Err(Error::OrderTooLarge { order: n, bound });
        }
        let mut prev = Polynomial::constant(1.0);
        let mut cur = Polynomial::new(vec![-self.diag[0], 1.0]);
        for i in 1..n {
            let q = self.sub[i - 1] * self.sup[i - 1];
            let next = &(&cur.shift() - &cur.scale(self.diag[i])) - &prev.scale(q);
            prev = cur;
            cur = next;
        }
        Ok(cur)
    }
}
