//! Structured tridiagonal families with closed-form spectra.
//!
//! * `A_n`: zero diagonal, unit superdiagonal, subdiagonal `(2, 1, ..., 1)`.
//!   `det(x I - A_n) = 2 T_n(x/2)`, eigenvalues `2 cos((2k+1)π / 2n)`.
//! * `P_n(a)`: zero diagonal, unit superdiagonal, constant subdiagonal `a`.
//!   `det(x I - P_n) = (√a)^n U_n(x / 2√a)`, eigenvalues `2√a cos(kπ / (n+1))`.
//! * `Q_n(a, b, c)`: diagonal `a`, superdiagonal `b`, subdiagonal
//!   `(2c, c, ..., c)`. `det(x I - Q_n) = (√bc)^n D_n((x - a)/√bc)` with
//!   `D_n` the characteristic polynomial of `A_n`.
//!
//! Closed forms are restricted to `a > 0` and `bc > 0` so that every square
//! root stays real.

use std::f64::consts::PI;

use crate::chebyshev;
use crate::error::{Error, Result};
use crate::tridiag::TridiagonalMatrix;

pub(crate) fn positive(name: &'static str, value: f64) -> Result<f64> {
    if value > 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonPositiveParameter { name, value })
    }
}

fn positive_product(b: f64, c: f64) -> Result<f64> {
    let bc = b * c;
    if bc > 0.0 && bc.is_finite() {
        Ok(bc)
    } else {
        Err(Error::NonPositiveProduct(bc))
    }
}

fn subdiagonal_with_double_head(n: usize, value: f64) -> Vec<f64> {
    let mut sub = vec![value; n.saturating_sub(1)];
    if let Some(first) = sub.first_mut() {
        *first = 2.0 * value;
    }
    sub
}

/// Cosine nodes `cos((2k+1)π / 2n)` for `k = 0..n`, in descending order.
fn shifted_cosine_nodes(n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |k| ((2 * k + 1) as f64 * PI / (2 * n) as f64).cos())
}

pub fn make_a(n: usize) -> Result<TridiagonalMatrix> {
    if n == 0 {
        return Err(Error::EmptyMatrix);
    }
    TridiagonalMatrix::new(
        subdiagonal_with_double_head(n, 1.0),
        vec![0.0; n],
        vec![1.0; n - 1],
    )
}

/// Eigenvalues of `A_n`, descending.
pub fn eigs_a(n: usize) -> Vec<f64> {
    shifted_cosine_nodes(n).map(|c| 2.0 * c).collect()
}

/// `det(x I - A_n) = 2 T_n(x/2)`; the empty determinant 1 at `n = 0`.
pub fn charpoly_a(n: usize, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    2.0 * chebyshev::t(n, x / 2.0)
}

pub fn make_p(n: usize, a: f64) -> Result<TridiagonalMatrix> {
    positive("a", a)?;
    if n == 0 {
        return Err(Error::EmptyMatrix);
    }
    TridiagonalMatrix::new(vec![a; n - 1], vec![0.0; n], vec![1.0; n - 1])
}

/// Eigenvalues `2√a cos(kπ / (n+1))`, `k = 1..=n`, of `P_n(a)`, descending.
pub fn eigs_p(n: usize, a: f64) -> Result<Vec<f64>> {
    let root = positive("a", a)?.sqrt();
    Ok((1..=n)
        .map(|k| 2.0 * root * (k as f64 * PI / (n + 1) as f64).cos())
        .collect())
}

/// `det(x I - P_n) = (√a)^n U_n(x / 2√a)`.
pub fn charpoly_p(n: usize, a: f64, x: f64) -> Result<f64> {
    let root = positive("a", a)?.sqrt();
    Ok(root.powi(n as i32) * chebyshev::u_from(n as i64, x / (2.0 * root)))
}

/// Builds `Q_n`. Any finite `a, b, c` gives a valid matrix; the closed forms
/// below additionally need `bc > 0`.
pub fn make_q(n: usize, a: f64, b: f64, c: f64) -> Result<TridiagonalMatrix> {
    if n == 0 {
        return Err(Error::EmptyMatrix);
    }
    TridiagonalMatrix::new(
        subdiagonal_with_double_head(n, c),
        vec![a; n],
        vec![b; n - 1],
    )
}

/// Eigenvalues `a + 2√bc cos((2k+1)π / 2n)` of `Q_n`, descending.
pub fn eigs_q(n: usize, a: f64, b: f64, c: f64) -> Result<Vec<f64>> {
    let root = positive_product(b, c)?.sqrt();
    Ok(shifted_cosine_nodes(n)
        .map(|node| a + 2.0 * root * node)
        .collect())
}

/// `det(x I - Q_n) = (√bc)^n D_n((x - a)/√bc)`.
///
/// `D_1(y) = y`, so the identity already holds at `n = 1`.
pub fn charpoly_q(n: usize, a: f64, b: f64, c: f64, x: f64) -> Result<f64> {
    let root = positive_product(b, c)?.sqrt();
    Ok(root.powi(n as i32) * charpoly_a(n, (x - a) / root))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    #[test]
    fn a_matrices() {
        assert_eq!(make_a(1).unwrap().to_dense(), vec![vec![0.0]]);
        assert_eq!(
            make_a(2).unwrap().to_dense(),
            vec![vec![0.0, 1.0], vec![2.0, 0.0]]
        );
        let a4 = make_a(4).unwrap();
        assert_eq!(a4.sub(), &[2.0, 1.0, 1.0]);
        assert_eq!(a4.diag(), &[0.0; 4]);
        assert_eq!(a4.sup(), &[1.0, 1.0, 1.0]);
        assert_eq!(make_a(0), Err(Error::EmptyMatrix));
    }

    #[test]
    fn a_spectrum_examples() {
        let e1 = eigs_a(1);
        assert_eq!(e1.len(), 1);
        assert_abs_diff_eq!(e1[0], 0.0, epsilon = 1e-15);

        let e2 = eigs_a(2);
        assert_abs_diff_eq!(e2[0], 2f64.sqrt(), epsilon = 1e-15);
        assert_abs_diff_eq!(e2[1], -(2f64.sqrt()), epsilon = 1e-15);

        let a5 = make_a(5).unwrap();
        for x in eigs_a(5) {
            assert!(a5.charpoly_eval(x).abs() <= 1e-10);
        }
    }

    #[test]
    fn a_charpoly_examples() {
        assert_eq!(charpoly_a(2, 2.0), 2.0);
        assert_eq!(charpoly_a(3, 0.0), 0.0);
        // det(1.2 I - A_6) = 1.504384 by exact rational expansion
        assert_relative_eq!(charpoly_a(6, 1.2), 1.504384, max_relative = 1e-12);
        assert_relative_eq!(
            charpoly_a(6, 1.2),
            make_a(6).unwrap().charpoly_eval(1.2),
            max_relative = 1e-12
        );
    }

    #[test]
    fn p_matrices() {
        assert_eq!(
            make_p(2, 3.0).unwrap().to_dense(),
            vec![vec![0.0, 1.0], vec![3.0, 0.0]]
        );
        let p3 = make_p(3, 2.0).unwrap();
        assert_eq!(p3.sub(), &[2.0, 2.0]);
        assert_eq!(p3.sup(), &[1.0, 1.0]);
        assert_eq!(make_p(1, 1.0).unwrap().to_dense(), vec![vec![0.0]]);
        assert_eq!(
            make_p(3, 0.0),
            Err(Error::NonPositiveParameter {
                name: "a",
                value: 0.0
            })
        );
        assert!(charpoly_p(3, -1.0, 0.0).is_err());
    }

    #[test]
    fn p_charpoly_examples() {
        assert_eq!(charpoly_p(1, 4.0, 0.0).unwrap(), 0.0);
        assert_relative_eq!(charpoly_p(2, 2.0, 0.0).unwrap(), -2.0, max_relative = 1e-15);
        // det(1.5 I - P_5(3)) = 7.59375 by exact rational expansion
        assert_relative_eq!(
            charpoly_p(5, 3.0, 1.5).unwrap(),
            7.59375,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            charpoly_p(5, 3.0, 1.5).unwrap(),
            make_p(5, 3.0).unwrap().charpoly_eval(1.5),
            max_relative = 1e-12
        );
    }

    #[test]
    fn p_spectrum_examples() {
        // P_2(3) = [[0,1],[3,0]] has eigenvalues ±√3
        let e = eigs_p(2, 3.0).unwrap();
        assert_abs_diff_eq!(e[0], 3f64.sqrt(), epsilon = 1e-15);
        assert_abs_diff_eq!(e[1], -(3f64.sqrt()), epsilon = 1e-15);
        let p6 = make_p(6, 2.0).unwrap();
        for x in eigs_p(6, 2.0).unwrap() {
            assert!(p6.charpoly_sample(x).scaled_residual() <= 1e-12);
        }
        assert!(eigs_p(3, -1.0).is_err());
    }

    #[test]
    fn q_matrices() {
        assert_eq!(make_q(2, 0.0, 1.0, 1.0).unwrap(), make_a(2).unwrap());
        let q3 = make_q(3, 1.0, 2.0, 3.0).unwrap();
        assert_eq!(q3.sub(), &[6.0, 3.0]);
        assert_eq!(q3.diag(), &[1.0, 1.0, 1.0]);
        assert_eq!(q3.sup(), &[2.0, 2.0]);
        assert_eq!(
            make_q(1, 5.0, 1.0, 1.0).unwrap().to_dense(),
            vec![vec![5.0]]
        );
        // negative product still builds a real matrix
        assert!(make_q(3, 0.0, 1.0, -1.0).is_ok());
    }

    #[test]
    fn q_spectrum_examples() {
        let e = eigs_q(2, 0.0, 1.0, 1.0).unwrap();
        for (x, y) in e.iter().zip(eigs_a(2)) {
            assert_abs_diff_eq!(*x, y, epsilon = 1e-15);
        }
        assert_eq!(eigs_q(1, 7.0, 1.0, 1.0).unwrap(), vec![7.0]);

        // 1 + 2√6 cos((2k+1)π/8), evaluated symbolically
        let expected = [
            5.5260668769074295,
            2.874758284622695,
            -0.874758284622695,
            -3.5260668769074295,
        ];
        let q4 = make_q(4, 1.0, 2.0, 3.0).unwrap();
        for (x, want) in eigs_q(4, 1.0, 2.0, 3.0).unwrap().iter().zip(expected) {
            assert_abs_diff_eq!(*x, want, epsilon = 1e-13);
            assert!(q4.charpoly_sample(*x).scaled_residual() <= 1e-9);
        }
        assert_eq!(
            eigs_q(3, 0.0, 1.0, -1.0),
            Err(Error::NonPositiveProduct(-1.0))
        );
    }

    #[test]
    fn q_charpoly_matches_expansion() {
        // det(x I - Q_4(1,2,3)) = x^4 - 4x^3 - 18x^2 + 44x + 49
        let p = |x: f64| x.powi(4) - 4.0 * x.powi(3) - 18.0 * x * x + 44.0 * x + 49.0;
        for x in [-2.0, 0.0, 0.7, 3.0] {
            assert_relative_eq!(
                charpoly_q(4, 1.0, 2.0, 3.0, x).unwrap(),
                p(x),
                max_relative = 1e-12
            );
        }
        assert_relative_eq!(
            charpoly_q(1, 5.0, 2.0, 3.0, 7.5).unwrap(),
            2.5,
            max_relative = 1e-15
        );
    }
}
