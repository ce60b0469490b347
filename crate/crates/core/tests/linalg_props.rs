use proptest::prelude::*;

use hopfstar::fixtures::fixture;
use hopfstar::inner::check_adjoint;
use hopfstar::linalg::Matrix;
use hopfstar::scalar::Scalar;

/// Matrix with Gaussian-integer entries in [-3, 3] + [-3, 3]i.
fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec((-3i64..=3, -3i64..=3), rows * cols).prop_map(move |v| {
        Matrix::from_fn(rows, cols, |r, c| {
            let (a, b) = v[r * cols + c];
            &Scalar::from_int(a) + &(&Scalar::i() * &Scalar::from_int(b))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kron_mixed_product(a in matrix(2, 2), b in matrix(3, 3), c in matrix(2, 2), d in matrix(3, 3)) {
        prop_assert_eq!(&a.kron(&b) * &c.kron(&d), (&a * &c).kron(&(&b * &d)));
    }

    #[test]
    fn vectorize_round_trips(a in matrix(3, 2)) {
        prop_assert_eq!(Matrix::unvectorize(&a.vectorize(), 3, 2), a);
    }

    #[test]
    fn inverse_and_determinant(a in matrix(3, 3)) {
        match a.inverse() {
            Some(inv) => {
                prop_assert_eq!(&a * &inv, Matrix::identity(3));
                prop_assert!(!a.determinant().is_zero());
            }
            None => {
                prop_assert!(a.determinant().is_zero());
                prop_assert!(a.rank() < 3);
            }
        }
    }

    #[test]
    fn rank_nullity(a in matrix(3, 4)) {
        prop_assert_eq!(a.rank() + a.kernel().len(), 4);
        for k in a.kernel() {
            prop_assert!(a.apply(&k).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn conj_transpose_reverses_products(a in matrix(2, 3), b in matrix(3, 2)) {
        prop_assert_eq!((&a * &b).conj_transpose(), &b.conj_transpose() * &a.conj_transpose());
    }

    #[test]
    fn adjoint_relation_on_trivial_sign(t in matrix(2, 2)) {
        let f = fixture("sweedler(1)").unwrap();
        let g = f.module("trivial_sign").unwrap().gram.clone().unwrap();
        prop_assert!(check_adjoint(&t, &g, &g).unwrap().all_pass());
    }
}
