use proptest::prelude::*;

use tritab::oracle::{dense_det, eig_roots, gershgorin_interval, sturm_count, symmetrize};
use tritab::TridiagonalMatrix;

/// Tridiagonal matrices with every `sub_i · sup_i > 0`.
fn real_spectrum_matrix(max_n: usize) -> impl Strategy<Value = TridiagonalMatrix> {
    (1..=max_n).prop_flat_map(|n| {
        (
            prop::collection::vec((0.1..=5.0f64, 0.1..=5.0f64, any::<bool>()), n - 1),
            prop::collection::vec(-5.0..=5.0f64, n),
        )
            .prop_map(|(pairs, diag)| {
                let (sub, sup) = pairs
                    .into_iter()
                    .map(|(s, t, neg)| if neg { (-s, -t) } else { (s, t) })
                    .unzip();
                TridiagonalMatrix::new(sub, diag, sup).unwrap()
            })
    })
}

fn generic_matrix(max_n: usize) -> impl Strategy<Value = TridiagonalMatrix> {
    (1..=max_n).prop_flat_map(|n| {
        (
            prop::collection::vec(-5.0..=5.0f64, n - 1),
            prop::collection::vec(-5.0..=5.0f64, n),
            prop::collection::vec(-5.0..=5.0f64, n - 1),
        )
            .prop_map(|(sub, diag, sup)| TridiagonalMatrix::new(sub, diag, sup).unwrap())
    })
}

proptest! {
    #[test]
    fn roots_cover_spectrum_and_sum_to_trace(m in real_spectrum_matrix(40)) {
        let n = m.order();
        let roots = eig_roots(&m).unwrap();
        prop_assert_eq!(roots.len(), n);
        prop_assert!(roots.windows(2).all(|w| w[0] >= w[1]));
        let scale = m.norm_inf().max(1.0);
        prop_assert!((roots.iter().sum::<f64>() - m.trace()).abs() <= 1e-8 * n as f64 * scale);
        for x in roots {
            prop_assert!(m.charpoly_sample(x).scaled_residual() <= 1e-8 * scale);
        }
    }

    #[test]
    fn sturm_count_sweeps_from_zero_to_n(m in real_spectrum_matrix(40)) {
        let s = symmetrize(&m).unwrap();
        let (lo, hi) = gershgorin_interval(s.diag(), s.sub());
        let counts: Vec<usize> = (0..=200)
            .map(|j| sturm_count(s.diag(), s.sub(), lo + (hi - lo) * j as f64 / 200.0))
            .collect();
        prop_assert_eq!(counts[0], 0);
        prop_assert_eq!(counts[200], m.order());
        prop_assert!(counts.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn symmetrize_preserves_charpoly(m in real_spectrum_matrix(40), x in -12.0..=12.0f64) {
        let s = symmetrize(&m).unwrap();
        prop_assert_eq!(s.sub(), s.sup());
        let (p, q) = (m.charpoly_sample(x), s.charpoly_sample(x));
        prop_assert!(
            (p.value - q.value).abs() <= 1e-9 * p.value.abs().max(q.value.abs()),
            "{} vs {}", p.value, q.value
        );
    }

    #[test]
    fn elimination_matches_recurrence(m in generic_matrix(32)) {
        let (det, oracle) = (m.det(), dense_det(&m.to_dense()).unwrap());
        prop_assert!((det - oracle).abs() <= 1e-9 * det.abs().max(oracle.abs()).max(1.0));
    }
}
