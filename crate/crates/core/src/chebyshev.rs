//! Chebyshev polynomials of the first and second kind.
//!
//! The three-term recurrence is the evaluation path and is valid on the whole
//! real line. The trigonometric forms are only defined on `[-1, 1]` and serve
//! as an independent cross-check.

use crate::error::{Error, Result};

/// `T_n(x)` via `T_n = 2x T_{n-1} - T_{n-2}`, `T_0 = 1`, `T_1 = x`.
pub fn t(n: usize, x: f64) -> f64 {
    match n {
        0 => 1.0,
        1 => x,
        _ => {
            let (mut prev, mut cur) = (1.0, x);
            for _ in 1..n {
                let next = 2.0 * x * cur - prev;
                prev = cur;
                cur = next;
            }
            cur
        }
    }
}

/// `U_n(x)` via `U_n = 2x U_{n-1} - U_{n-2}`, `U_0 = 1`, `U_1 = 2x`.
///
/// `U_{-1} = 0` is accepted; lower indices are a domain error.
pub fn u(n: i64, x: f64) -> Result<f64> {
    if n < -1 {
        return Err(Error::ChebyshevIndex(n));
    }
    Ok(u_from(n, x))
}

/// Second-kind evaluation for indices already known to be `>= -1`.
pub(crate) fn u_from(n: i64, x: f64) -> f64 {
    debug_assert!(n >= -1);
    let (mut prev, mut cur) = (0.0, 1.0);
    if n < 0 {
        return prev;
    }
    for _ in 0..n {
        let next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `cos(n arccos x)` for `|x| <= 1`; `None` outside that interval.
pub fn t_trig(n: usize, x: f64) -> Option<f64> {
    if !(-1.0..=1.0).contains(&x) {
        return None;
    }
    Some((n as f64 * x.acos()).cos())
}

/// `sin((n+1) θ) / sin θ` with `θ = arccos x`, for `|x| <= 1` and `n >= -1`.
///
/// At `x = ±1` the removable singularity is replaced by its limit `(±1)^n (n+1)`.
pub fn u_trig(n: i64, x: f64) -> Option<f64> {
    if !(-1.0..=1.0).contains(&x) || n < -1 {
        return None;
    }
    let theta = x.acos();
    let s = theta.sin();
    if s == 0.0 {
        let sign = if x < 0.0 && n % 2 != 0 { -1.0 } else { 1.0 };
        return Some(sign * (n + 1) as f64);
    }
    Some(((n + 1) as f64 * theta).sin() / s)
}

/// Checks `U_n(x) - U_{n-2}(x) = 2 T_n(x)` to `1e-10 (1 + |T_n(x)|)`.
pub fn tu_identity_holds(n: usize, x: f64) -> bool {
    if n < 2 {
        return false;
    }
    let n_i = n as i64;
    let lhs = u_from(n_i, x) - u_from(n_i - 2, x);
    let tn = t(n, x);
    (lhs - 2.0 * tn).abs() <= 1e-10 * (1.0 + tn.abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn first_kind_examples() {
        assert_eq!(t(3, 1.0), 1.0);
        assert_eq!(t(2, 0.5), -0.5);
        // cos(5 arccos 0.3) = 0.99888, from the trigonometric form
        assert_abs_diff_eq!(t(5, 0.3), 0.99888, epsilon = 1e-12);
        assert_abs_diff_eq!(t(5, 0.3), t_trig(5, 0.3).unwrap(), epsilon = 1e-12);
    }

    #[test]
    fn second_kind_examples() {
        assert_eq!(u(-1, 0.7).unwrap(), 0.0);
        assert_eq!(u(2, 1.0).unwrap(), 3.0);
        // sin(5θ)/sinθ at θ = arccos 0.2 equals 16x^4 - 12x^2 + 1 = 0.5456
        assert_abs_diff_eq!(u(4, 0.2).unwrap(), 0.5456, epsilon = 1e-12);
        assert_abs_diff_eq!(u_trig(4, 0.2).unwrap(), 0.5456, epsilon = 1e-12);
    }

    #[test]
    fn second_kind_rejects_low_index() {
        assert_eq!(u(-2, 0.3), Err(Error::ChebyshevIndex(-2)));
    }

    #[test]
    fn trig_forms_handle_endpoints() {
        assert_eq!(t_trig(3, 1.5), None);
        assert_eq!(u_trig(4, 1.0), Some(5.0));
        assert_eq!(u_trig(3, -1.0), Some(-4.0));
        assert_eq!(u_trig(2, -1.0), Some(3.0));
    }

    #[test]
    fn tu_identity_examples() {
        assert!(tu_identity_holds(2, 0.5));
        assert!(tu_identity_holds(7, 0.9));
        assert!(tu_identity_holds(10, -0.3));
        assert!(!tu_identity_holds(1, 0.3));
    }
}
