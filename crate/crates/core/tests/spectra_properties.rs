use approx::assert_abs_diff_eq;
use proptest::prelude::*;

use tritab::spectra::{
    charpoly_a, charpoly_p, charpoly_q, eigs_a, eigs_p, eigs_q, make_a, make_p, make_q,
};

fn rel_err(p: f64, q: f64) -> f64 {
    let scale = p.abs().max(q.abs());
    if scale == 0.0 {
        0.0
    } else {
        (p - q).abs() / scale
    }
}

#[test]
fn a_eigenvalues_are_roots_of_both_forms() {
    for n in 1..=200 {
        let m = make_a(n).unwrap();
        for x in eigs_a(n) {
            assert!(charpoly_a(n, x).abs() <= 1e-8, "n = {n}, x = {x}");
            assert!(
                m.charpoly_eval(x).abs() <= 1e-8 * n as f64,
                "n = {n}, x = {x}"
            );
        }
    }
}

#[test]
fn a_eigenvalues_decrease_strictly_inside_open_interval() {
    for n in 1..=200 {
        let e = eigs_a(n);
        assert_eq!(e.len(), n);
        assert!(e.windows(2).all(|w| w[0] > w[1]), "n = {n}");
        assert!(e.iter().all(|x| x.abs() < 2.0), "n = {n}");
    }
}

#[test]
fn p_eigenvalues_match_oracle() {
    for a in [0.5, 1.0, 2.0, 3.0] {
        for n in 1..=100 {
            let oracle = tritab::oracle::eig_roots(&make_p(n, a).unwrap()).unwrap();
            for (x, y) in eigs_p(n, a).unwrap().iter().zip(oracle) {
                assert!((x - y).abs() <= 1e-9, "a = {a}, n = {n}");
            }
        }
    }
}

#[test]
fn p_charpoly_matches_recurrence_on_grid() {
    for a in [0.5, 1.0, 2.0, 3.0] {
        let r = 2.5 * f64::sqrt(a);
        for n in 1..=64 {
            let m = make_p(n, a).unwrap();
            for j in 0..50 {
                let x = -r + 2.0 * r * (j as f64 + 0.37) / 50.0;
                let err = rel_err(charpoly_p(n, a, x).unwrap(), m.charpoly_eval(x));
                assert!(err <= 1e-9, "a = {a}, n = {n}, x = {x}: {err:e}");
            }
        }
    }
}

fn same_sign_pair() -> impl Strategy<Value = (f64, f64)> {
    (0.1..=5.0f64, 0.1..=5.0f64, any::<bool>())
        .prop_map(|(b, c, neg)| if neg { (-b, -c) } else { (b, c) })
}

proptest! {
    #[test]
    fn q_charpoly_is_shifted_scaled_a(
        n in 1usize..=64,
        a in -5.0..=5.0f64,
        (b, c) in same_sign_pair(),
        t in -2.5..=2.5f64,
    ) {
        let root = (b * c).sqrt();
        let x = a + t * root;
        let closed = root.powi(n as i32) * charpoly_a(n, (x - a) / root);
        let recurrence = make_q(n, a, b, c).unwrap().charpoly_eval(x);
        prop_assert!(rel_err(closed, recurrence) <= 1e-9, "{closed} vs {recurrence}");
        prop_assert_eq!(charpoly_q(n, a, b, c, x).unwrap(), closed);
    }

    #[test]
    fn q_spectrum_is_affine_image_of_a(
        n in 1usize..=200,
        a in -5.0..=5.0f64,
        (b, c) in same_sign_pair(),
    ) {
        let root = (b * c).sqrt();
        for (q, p) in eigs_q(n, a, b, c).unwrap().iter().zip(eigs_a(n)) {
            prop_assert!((q - (a + root * p)).abs() <= 1e-10);
        }
    }

    #[test]
    fn q_trace_equals_eigenvalue_sum(
        n in 1usize..=100,
        a in -5.0..=5.0f64,
        (b, c) in same_sign_pair(),
    ) {
        let sum: f64 = eigs_q(n, a, b, c).unwrap().iter().sum();
        let trace = make_q(n, a, b, c).unwrap().trace();
        prop_assert!((sum - trace).abs() <= 1e-9 * n as f64 * (1.0 + a.abs() + (b * c).sqrt()));
    }
}

#[test]
fn closed_forms_reject_indefinite_products() {
    assert!(eigs_q(3, 0.0, 2.0, -1.0).is_err());
    assert!(charpoly_q(3, 0.0, 0.0, 1.0, 0.5).is_err());
    assert!(charpoly_p(3, 0.0, 0.5).is_err());
    assert_abs_diff_eq!(charpoly_a(0, 1.3), 1.0);
}
