//! P-polynomial table algebras described by their first intersection matrix.
//!
//! The structure constants of `x_1 x_i = b_{i-1} x_{i-1} + a_i x_i + c_{i+1} x_{i+1}`
//! fill a tridiagonal `B_1` with diagonal `a_0..a_d`, subdiagonal `b_0..b_{d-1}`
//! and superdiagonal `c_1..c_d`. The characters are `p_0(j) = 1`,
//! `p_1(j)` the eigenvalues of `B_1`, and `p_i(j) = ν_i(p_1(j))` where `ν_i` is
//! the degree-`i` polynomial with `x_i = ν_i(x_1)`.
//!
//! Two families have closed forms, see [`ClassOne`] and [`ClassTwo`].

use std::f64::consts::PI;

use crate::chebyshev;
use crate::error::{Error, Result};
use crate::oracle;
use crate::polynomial::Polynomial;
use crate::spectra::positive;
use crate::tridiag::TridiagonalMatrix;

/// Structure constants `(b, a, c)` of a P-polynomial table algebra of
/// dimension index `d`: `|b| = |c| = d`, `|a| = d + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct TableAlgebraSpec {
    b: Vec<f64>,
    a: Vec<f64>,
    c: Vec<f64>,
}

impl TableAlgebraSpec {
    /// Requires `d >= 2`, `b_i > 0`, `c_i > 0` and `a_i >= 0`.
    pub fn new(b: Vec<f64>, a: Vec<f64>, c: Vec<f64>) -> Result<Self> {
        let spec = Self::relaxed(b, a, c)?;
        if let Some((i, v)) = spec.a.iter().enumerate().find(|(_, v)| **v < 0.0) {
            return Err(Error::InvalidSpec(format!("a_{i} = {v} is negative")));
        }
        Ok(spec)
    }

    /// Like [`TableAlgebraSpec::new`] but lets the diagonal `a` take any
    /// finite real value. The PLU recurrences need no sign condition on `a`.
    pub fn relaxed(b: Vec<f64>, a: Vec<f64>, c: Vec<f64>) -> Result<Self> {
        let d = a.len().saturating_sub(1);
        if d < 2 {
            return Err(Error::InvalidSpec(format!(
                "dimension index d must be at least 2, got {} diagonal entries",
                a.len()
            )));
        }
        if b.len() != d || c.len() != d {
            return Err(Error::InvalidSpec(format!(
                "expected {d} entries in b and c, got {} and {}",
                b.len(),
                c.len()
            )));
        }
        if let Some((i, v)) = a.iter().enumerate().find(|(_, v)| !v.is_finite()) {
            return Err(Error::InvalidSpec(format!("a_{i} = {v} is not finite")));
        }
        if let Some((i, v)) = b
            .iter()
            .enumerate()
            .find(|(_, v)| !(**v > 0.0 && v.is_finite()))
        {
            return Err(Error::InvalidSpec(format!("b_{i} = {v} must be positive")));
        }
        if let Some((i, v)) = c
            .iter()
            .enumerate()
            .find(|(_, v)| !(**v > 0.0 && v.is_finite()))
        {
            return Err(Error::InvalidSpec(format!(
                "c_{} = {v} must be positive",
                i + 1
            )));
        }
        Ok(Self { b, a, c })
    }

    pub fn d(&self) -> usize {
        self.b.len()
    }

    /// `b_0..b_{d-1}`.
    pub fn b(&self) -> &[f64] {
        &self.b
    }

    /// `a_0..a_d`.
    pub fn a(&self) -> &[f64] {
        &self.a
    }

    /// `c_1..c_d`; `c()[i]` is `c_{i+1}`.
    pub fn c(&self) -> &[f64] {
        &self.c
    }

    /// The same constants with `a_0 = 0`, `c_1 = 1` and `b_0 = k`.
    pub fn with_leading(&self, k: f64) -> Result<Self> {
        positive("k", k)?;
        let mut out = self.clone();
        out.a[0] = 0.0;
        out.c[0] = 1.0;
        out.b[0] = k;
        Ok(out)
    }

    pub fn first_intersection_matrix(&self) -> TridiagonalMatrix {
        TridiagonalMatrix::new(self.b.clone(), self.a.clone(), self.c.clone())
            .expect("validated bands form a tridiagonal matrix")
    }

    /// `ν_0..ν_d` from `ν_{i+1} = ((x - a_i) ν_i - b_{i-1} ν_{i-1}) / c_{i+1}`.
    pub fn nu_polynomials(&self) -> Vec<Polynomial> {
        let d = self.d();
        let mut nus = Vec::with_capacity(d + 1);
        nus.push(Polynomial::constant(1.0));
        nus.push(Polynomial::x());
        for i in 1..d {
            let cur = &nus[i];
            let next = &(&cur.shift() - &cur.scale(self.a[i])) - &nus[i - 1].scale(self.b[i - 1]);
            nus.push(next.scale(1.0 / self.c[i]));
        }
        nus
    }

    /// Character table with `p_1(j)` from Sturm bisection on `B_1`.
    pub fn character_table(&self) -> Result<CharacterTable> {
        let eigs = oracle::eig_roots(&self.first_intersection_matrix())?;
        let nus = self.nu_polynomials();
        Ok(CharacterTable::from_rows(
            nus.iter()
                .map(|nu| eigs.iter().map(|&x| nu.eval(x)).collect())
                .collect(),
        ))
    }
}

/// `(d+1) × (d+1)` array of characters; entry `[i][j]` is `p_i(j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CharacterTable {
    values: Vec<Vec<f64>>,
}

impl CharacterTable {
    pub(crate) fn from_rows(values: Vec<Vec<f64>>) -> Self {
        debug_assert!(values.iter().all(|r| r.len() == values.len()));
        Self { values }
    }

    /// Builds a table from raw rows, checking it is square with at least 3 rows.
    pub fn new(values: Vec<Vec<f64>>) -> Result<Self> {
        let n = values.len();
        if n < 3 {
            return Err(Error::InvalidSpec(format!(
                "character table needs at least 3 rows, got {n}"
            )));
        }
        if let Some(bad) = values.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                actual: bad.len(),
            });
        }
        Ok(Self { values })
    }

    pub fn d(&self) -> usize {
        self.values.len() - 1
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.values
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i][j]
    }

    /// Row 1, the eigenvalues of `B_1`.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.values[1]
    }

    /// Largest entrywise difference, each measured relative to
    /// `max(|p|, |q|, max_j |p_i(j)|)` so that characters near zero are judged
    /// on the scale of their row.
    pub fn max_relative_discrepancy(&self, other: &Self) -> Result<f64> {
        if other.values.len() != self.values.len() {
            return Err(Error::DimensionMismatch {
                expected: self.values.len(),
                actual: other.values.len(),
            });
        }
        let mut worst: f64 = 0.0;
        for (r1, r2) in self.values.iter().zip(&other.values) {
            let row_scale = r1.iter().chain(r2).fold(0.0_f64, |m, v| m.max(v.abs()));
            for (p, q) in r1.iter().zip(r2) {
                let scale = p.abs().max(q.abs()).max(row_scale);
                if scale > 0.0 {
                    worst = worst.max((p - q).abs() / scale);
                }
            }
        }
        Ok(worst)
    }

    pub fn into_rows(self) -> Vec<Vec<f64>> {
        self.values
    }
}

fn closed_table(eigs: Vec<f64>, nu: impl Fn(usize, f64) -> f64) -> CharacterTable {
    let d = eigs.len() - 1;
    let mut rows = Vec::with_capacity(d + 1);
    rows.push(vec![1.0; d + 1]);
    for i in 2..=d {
        rows.push(eigs.iter().map(|&x| nu(i, x)).collect());
    }
    rows.insert(1, eigs);
    CharacterTable::from_rows(rows)
}

fn check_dimension(d: usize) -> Result<()> {
    if d < 2 {
        return Err(Error::InvalidSpec(format!(
            "dimension index d must be at least 2, got {d}"
        )));
    }
    Ok(())
}

/// Table algebra with `b = (2α², α, …, α)`, `a = (0, …, 0, α)`,
/// `c = (1, α, …, α)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassOne {
    d: usize,
    alpha: f64,
}

impl ClassOne {
    pub fn new(d: usize, alpha: f64) -> Result<Self> {
        check_dimension(d)?;
        positive("alpha", alpha)?;
        Ok(Self { d, alpha })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn spec(&self) -> TableAlgebraSpec {
        let (d, al) = (self.d, self.alpha);
        let mut b = vec![al; d];
        b[0] = 2.0 * al * al;
        let mut a = vec![0.0; d + 1];
        a[d] = al;
        let mut c = vec![al; d];
        c[0] = 1.0;
        TableAlgebraSpec::new(b, a, c).expect("class I constants are valid")
    }

    /// `2α cos(2jπ / (2d+1))` for `j = 0..=d`, descending.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let denom = (2 * self.d + 1) as f64;
        (0..=self.d)
            .map(|j| 2.0 * self.alpha * (2.0 * j as f64 * PI / denom).cos())
            .collect()
    }

    /// `det(x I - B_1) = 2α^{d+1} [T_{d+1}(x/2α) - T_d(x/2α)]`.
    pub fn charpoly(&self, x: f64) -> f64 {
        let y = x / (2.0 * self.alpha);
        2.0 * self.alpha.powi(self.d as i32 + 1)
            * (chebyshev::t(self.d + 1, y) - chebyshev::t(self.d, y))
    }

    /// `ν_i(x) = (1/α) [(x² - 2α²) U_{i-2}(x/2α) - α x U_{i-3}(x/2α)]`, `i >= 2`.
    pub fn nu(&self, i: usize, x: f64) -> f64 {
        let al = self.alpha;
        let y = x / (2.0 * al);
        let i = i as i64;
        ((x * x - 2.0 * al * al) * chebyshev::u_from(i - 2, y)
            - al * x * chebyshev::u_from(i - 3, y))
            / al
    }

    pub fn characters(&self) -> CharacterTable {
        closed_table(self.eigenvalues(), |i, x| self.nu(i, x))
    }
}

/// Table algebra with `b = (2αγ, α, …, α, 2α)`, `a = 0`, `c = (1, γ, …, γ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassTwo {
    d: usize,
    alpha: f64,
    gamma: f64,
}

impl ClassTwo {
    pub fn new(d: usize, alpha: f64, gamma: f64) -> Result<Self> {
        check_dimension(d)?;
        positive("alpha", alpha)?;
        positive("gamma", gamma)?;
        Ok(Self { d, alpha, gamma })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    fn root(&self) -> f64 {
        (self.alpha * self.gamma).sqrt()
    }

    pub fn spec(&self) -> TableAlgebraSpec {
        let (d, al, ga) = (self.d, self.alpha, self.gamma);
        let mut b = vec![al; d];
        b[0] = 2.0 * al * ga;
        b[d - 1] = 2.0 * al;
        let mut c = vec![ga; d];
        c[0] = 1.0;
        TableAlgebraSpec::new(b, vec![0.0; d + 1], c).expect("class II constants are valid")
    }

    /// `2√(αγ) cos(jπ/d)` for `j = 0..=d`, descending.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let g = self.root();
        (0..=self.d)
            .map(|j| 2.0 * g * (j as f64 * PI / self.d as f64).cos())
            .collect()
    }

    /// `det(x I - B_1) = 2(√αγ)^{d+1} [T_{d+1}(y) - T_{d-1}(y)]`, `y = x / 2√αγ`.
    pub fn charpoly(&self, x: f64) -> f64 {
        let g = self.root();
        let y = x / (2.0 * g);
        2.0 * g.powi(self.d as i32 + 1)
            * (chebyshev::t(self.d + 1, y) - chebyshev::t(self.d - 1, y))
    }

    /// `ν_i(x) = ((α/γ)^{(i-2)/2} / γ) [(x² - 2αγ) U_{i-2}(y) - √αγ x U_{i-3}(y)]`
    /// with `y = x / 2√αγ`, `i >= 2`.
    pub fn nu(&self, i: usize, x: f64) -> f64 {
        let (al, ga, g) = (self.alpha, self.gamma, self.root());
        let y = x / (2.0 * g);
        let i = i as i64;
        let prefactor = (al / ga).sqrt().powi(i as i32 - 2) / ga;
        prefactor
            * ((x * x - 2.0 * al * ga) * chebyshev::u_from(i - 2, y)
                - g * x * chebyshev::u_from(i - 3, y))
    }

    pub fn characters(&self) -> CharacterTable {
        closed_table(self.eigenvalues(), |i, x| self.nu(i, x))
    }
}
