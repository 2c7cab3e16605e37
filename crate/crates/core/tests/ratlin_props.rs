use axial_core::ratlin::{Matrix, Scalar, SparseMatrix};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn small_scalar() -> impl Strategy<Value = Scalar> {
    (-9i64..10, 1i64..6).prop_map(|(n, d)| Scalar::new(n, d))
}

fn wide_scalar() -> impl Strategy<Value = Scalar> {
    (any::<i64>(), 1i64..i64::MAX).prop_map(|(n, d)| Scalar::new(n, d))
}

fn matrix(max_r: usize, max_c: usize) -> impl Strategy<Value = Matrix> {
    (1..=max_r, 1..=max_c).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(small_scalar(), c), r)
            .prop_map(|rows| Matrix::from_rows(rows).unwrap())
    })
}

fn big(s: &Scalar) -> BigRational {
    BigRational::new(s.numer(), s.denom())
}

proptest! {
    // arithmetic agrees with a plain big-integer rational path
    #[test]
    fn scalar_ops_match_bigrational(a in wide_scalar(), b in wide_scalar()) {
        let (x, y) = (big(&a), big(&b));
        prop_assert_eq!(big(&(&a + &b)), &x + &y);
        prop_assert_eq!(big(&(&a - &b)), &x - &y);
        prop_assert_eq!(big(&(&a * &b)), &x * &y);
        if !b.is_zero() {
            prop_assert_eq!(big(&(&a / &b)), &x / &y);
        }
        prop_assert_eq!(a.cmp(&b), x.cmp(&y));
        let s = (&a * &b) * (&a + &b);
        prop_assert_eq!(s.to_string().parse::<Scalar>().unwrap(), s.clone());
        prop_assert!(s.denom() > BigInt::from(0));
    }

    #[test]
    fn rref_is_idempotent(m in matrix(5, 6)) {
        let r = m.rref();
        prop_assert_eq!(r.matrix.rref().matrix, r.matrix.clone());
        prop_assert!(r.pivots.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn rank_nullity(m in matrix(5, 6)) {
        let k = m.kernel();
        prop_assert_eq!(m.rank() + k.len(), m.cols());
        for v in &k {
            prop_assert!(m.mul_vec(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn sparse_rref_matches_dense(m in matrix(5, 6)) {
        let (s, piv) = SparseMatrix::from_dense(&m).rref();
        let d = m.rref();
        prop_assert_eq!(&piv, &d.pivots);
        prop_assert_eq!(s.to_dense(), Matrix::from_sparse_rows(
            &(0..d.rank).map(|i| d.matrix.row_sparse(i)).collect::<Vec<_>>(), m.cols()));
    }

    #[test]
    fn gram_matrices_have_no_negative_inertia(m in matrix(4, 5)) {
        let g = m.transpose().mul(&m).unwrap();
        let i = g.inertia().unwrap();
        prop_assert_eq!(i.negative, 0);
        prop_assert_eq!(i.positive, m.rank());
        prop_assert_eq!(i.zero, g.kernel().len());
    }
}
