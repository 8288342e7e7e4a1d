use proptest::prelude::*;

use tritab::oracle::{cofactor_det, dense_det, eig_roots, residual, Side};
use tritab::plu::{
    b1_charpoly_via_plu, det_via_plu, left_eigenvector, log_det_via_plu, right_eigenvector,
};
use tritab::{CyclicPermutation, Error, PluFactors, TableAlgebraSpec, TridiagonalMatrix};

fn nonzero(lo: f64) -> impl Strategy<Value = f64> {
    (lo..=5.0f64, any::<bool>()).prop_map(|(m, neg)| if neg { -m } else { m })
}

fn pivotable(
    n: std::ops::RangeInclusive<usize>,
    sub_min: f64,
) -> impl Strategy<Value = TridiagonalMatrix> {
    n.prop_flat_map(move |n| {
        (
            prop::collection::vec(nonzero(sub_min), n - 1),
            prop::collection::vec(-5.0..=5.0f64, n),
            prop::collection::vec(-5.0..=5.0f64, n - 1),
        )
            .prop_map(|(sub, diag, sup)| TridiagonalMatrix::new(sub, diag, sup).unwrap())
    })
}

fn permutation_matrix(p: CyclicPermutation) -> Vec<Vec<f64>> {
    let n = p.order();
    (0..n)
        .map(|i| {
            let mut row = vec![0.0; n];
            row[p.source_row(i)] = 1.0;
            row
        })
        .collect()
}

fn abs_product_norm(l: &[Vec<f64>], u: &[Vec<f64>]) -> f64 {
    let n = l.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| (l[i][k] * u[k][j]).abs()).sum::<f64>())
                .sum::<f64>()
        })
        .fold(0.0, f64::max)
}

proptest! {
    #[test]
    fn factor_determinants_have_closed_forms(m in pivotable(3..=16, 0.1)) {
        let f = PluFactors::factor(&m).unwrap();
        let n = m.order();
        let det_p = cofactor_det(&permutation_matrix(f.permutation())).unwrap();
        prop_assert_eq!(det_p, if n % 2 == 1 { 1.0 } else { -1.0 });
        prop_assert_eq!(f.det_p(), det_p);
        prop_assert_eq!(cofactor_det(&f.l_dense()).unwrap(), 1.0);
        prop_assert_eq!(f.det_l(), 1.0);
        let expected_u = m.sub().iter().product::<f64>() * f.ucorner();
        let dense_u = dense_det(&f.u_dense()).unwrap();
        prop_assert!((dense_u - expected_u).abs() <= 1e-12 * expected_u.abs());
        prop_assert!((f.det_u() - expected_u).abs() <= 1e-12 * expected_u.abs());
    }

    #[test]
    fn reconstruction_is_backward_stable(m in pivotable(3..=12, 0.1)) {
        // ‖PLU - M‖ stays within a small multiple of eps ‖|L||U|‖, which grows with L.
        let f = PluFactors::factor(&m).unwrap();
        let dense_norm = abs_product_norm(&f.l_dense(), &f.u_dense());
        prop_assert!((f.abs_factor_norm() - dense_norm).abs() <= 1e-13 * dense_norm);
        let bound = 4.0 * m.order() as f64 * f64::EPSILON * dense_norm;
        prop_assert!(f.reconstruction_residual(&m).unwrap() <= bound);
    }

    #[test]
    fn reconstruction_is_tight_while_l_stays_small(m in pivotable(3..=6, 1.0)) {
        let f = PluFactors::factor(&m).unwrap();
        prop_assert!(f.reconstruction_residual(&m).unwrap() <= 1e-11 * m.norm_inf());
        for (row, want) in f.product_dense().iter().zip(m.to_dense()) {
            for (v, w) in row.iter().zip(want) {
                prop_assert!((v - w).abs() <= 1e-11 * m.norm_inf());
            }
        }
    }

    #[test]
    fn determinant_matches_recurrence(m in pivotable(1..=60, 0.1)) {
        let det = m.det();
        let via = det_via_plu(&m).unwrap();
        prop_assert!((via - det).abs() <= 1e-9 * (1.0 + det.abs()), "{via} vs {det}");
    }

    #[test]
    fn log_determinant_survives_large_orders(m in pivotable(300..=1200, 0.1)) {
        let (s1, l1) = log_det_via_plu(&m).unwrap();
        let (s2, l2) = m.log_det();
        prop_assert_eq!(s1, s2);
        prop_assert!((l1 - l2).exp_m1().abs() <= 1e-9);
    }

    #[test]
    fn b1_charpoly_matches_recurrence(
        (b, a, c) in (3usize..=20).prop_flat_map(|d| (
            prop::collection::vec(0.5..=3.0f64, d),
            prop::collection::vec(-3.0..=3.0f64, d + 1),
            prop::collection::vec(0.5..=3.0f64, d),
        )),
        k in 0.5..=3.0f64,
        x in -8.0..=8.0f64,
    ) {
        let spec = TableAlgebraSpec::relaxed(b, a, c).unwrap();
        let via = b1_charpoly_via_plu(&spec, k, x).unwrap();
        let direct = spec.with_leading(k).unwrap().first_intersection_matrix().charpoly_eval(x);
        prop_assert!((via - direct).abs() <= 1e-9 * via.abs().max(direct.abs()));
    }

    #[test]
    fn eigenvectors_certify_at_oracle_eigenvalues(
        (b, a, c) in (2usize..=10).prop_flat_map(|d| (
            prop::collection::vec(0.5..=3.0f64, d),
            prop::collection::vec(0.0..=3.0f64, d + 1),
            prop::collection::vec(1.0..=3.0f64, d),
        )),
        k in 0.5..=3.0f64,
    ) {
        let spec = TableAlgebraSpec::new(b, a, c).unwrap().with_leading(k).unwrap();
        let b1 = spec.first_intersection_matrix();
        for x in eig_roots(&b1).unwrap() {
            let eta = right_eigenvector(&spec, k, x).unwrap();
            let psi = left_eigenvector(&spec, k, x).unwrap();
            for v in [&eta, &psi] {
                let max = v.iter().fold(0.0_f64, |m, e| m.max(e.abs()));
                prop_assert!((max - 1.0).abs() <= 1e-15);
                prop_assert!(v.iter().find(|e| **e != 0.0).unwrap() > &0.0);
            }
            prop_assert!(residual(&b1, x, &eta, Side::Right).unwrap() <= 1e-8 * (1.0 + x.abs()));
            prop_assert!(residual(&b1, x, &psi, Side::Left).unwrap() <= 1e-8 * (1.0 + x.abs()));
        }
    }
}

#[test]
fn zero_subdiagonal_is_reported_by_column() {
    let m = TridiagonalMatrix::new(vec![1.0, 2.0, 0.0], vec![1.0; 4], vec![1.0; 3]).unwrap();
    assert_eq!(
        PluFactors::factor(&m),
        Err(Error::ZeroSubdiagonal { index: 3 })
    );
    assert_eq!(det_via_plu(&m), Err(Error::ZeroSubdiagonal { index: 3 }));
    let m = TridiagonalMatrix::new(vec![0.0, 2.0], vec![1.0; 3], vec![1.0; 2]).unwrap();
    assert_eq!(
        log_det_via_plu(&m),
        Err(Error::ZeroSubdiagonal { index: 1 })
    );
}

#[test]
fn small_orders_fall_back_or_fail() {
    let m2 = TridiagonalMatrix::new(vec![3.0], vec![1.0, 4.0], vec![2.0]).unwrap();
    assert_eq!(det_via_plu(&m2).unwrap(), -2.0);
    assert!(matches!(
        PluFactors::factor(&m2),
        Err(Error::OrderTooSmall { order: 2, min: 3 })
    ));
}

#[test]
fn non_eigenvalue_is_rejected() {
    let spec = TableAlgebraSpec::new(vec![2.0, 1.0], vec![0.0; 3], vec![1.0, 1.0]).unwrap();
    for x in [0.5, 3.0] {
        assert!(matches!(
            right_eigenvector(&spec, 2.0, x),
            Err(Error::NotAnEigenvalue { .. })
        ));
        assert!(matches!(
            left_eigenvector(&spec, 2.0, x),
            Err(Error::NotAnEigenvalue { .. })
        ));
    }
}

#[test]
fn cyclic_permutation_moves_last_row_to_top() {
    let p = CyclicPermutation::new(4);
    assert_eq!(p.apply_rows(&[1, 2, 3, 4]), vec![4, 1, 2, 3]);
    assert_eq!(p.det(), -1.0);
    assert_eq!(CyclicPermutation::new(5).det(), 1.0);
}
