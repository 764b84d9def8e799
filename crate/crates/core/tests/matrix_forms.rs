use num_complex::Complex64;
use proptest::prelude::*;
use sl3c_geometry::linalg::{
    bracket, cartan_involution, ensure_in_s, inner_g, inner_s, killing_form, phi,
};
use sl3c_geometry::SquareComplexMatrix;

const TOL: f64 = 1e-10;

fn entry() -> impl Strategy<Value = Complex64> {
    (-2.0..2.0f64, -2.0..2.0f64).prop_map(|(re, im)| Complex64::new(re, im))
}

/// A random traceless 3x3 complex matrix.
fn sl3() -> impl Strategy<Value = SquareComplexMatrix> {
    prop::collection::vec(entry(), 9).prop_map(|mut e| {
        let tr = (e[0] + e[4] + e[8]) / 3.0;
        for i in [0, 4, 8] {
            e[i] -= tr;
        }
        SquareComplexMatrix::from_entries(3, e).unwrap()
    })
}

/// A random element of the solvable algebra: upper triangular, real traceless diagonal.
fn solvable() -> impl Strategy<Value = SquareComplexMatrix> {
    (
        prop::collection::vec(entry(), 3),
        -2.0..2.0f64,
        -2.0..2.0f64,
    )
        .prop_map(|(up, d0, d1)| {
            let z = Complex64::default();
            let r = |x: f64| Complex64::new(x, 0.0);
            SquareComplexMatrix::from_rows(&[
                vec![r(d0), up[0], up[2]],
                vec![z, r(d1), up[1]],
                vec![z, z, r(-d0 - d1)],
            ])
            .unwrap()
        })
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= TOL * (1.0 + a.abs().max(b.abs()))
}

proptest! {
    #[test]
    fn matrix_bracket_satisfies_jacobi(x in sl3(), y in sl3(), z in sl3()) {
        let j = &(&bracket(&bracket(&x, &y).unwrap(), &z).unwrap()
            + &bracket(&bracket(&y, &z).unwrap(), &x).unwrap())
            + &bracket(&bracket(&z, &x).unwrap(), &y).unwrap();
        prop_assert!(j.max_abs() <= TOL * 100.0);
    }

    #[test]
    fn inner_g_is_minus_killing_against_theta(x in sl3(), y in sl3()) {
        let b = killing_form(&x, &cartan_involution(&y)).unwrap();
        prop_assert!(close(inner_g(&x, &y).unwrap(), -b / 6.0));
    }

    #[test]
    fn killing_form_is_ad_invariant(x in sl3(), y in sl3(), z in sl3()) {
        let lhs = killing_form(&bracket(&x, &y).unwrap(), &z).unwrap();
        let rhs = killing_form(&x, &bracket(&y, &z).unwrap()).unwrap();
        prop_assert!(close(lhs, rhs));
    }

    #[test]
    fn theta_is_an_isometric_involution(x in sl3(), y in sl3()) {
        let tx = cartan_involution(&x);
        prop_assert!((&cartan_involution(&tx) - &x).max_abs() == 0.0);
        prop_assert!(close(inner_g(&tx, &cartan_involution(&y)).unwrap(), inner_g(&x, &y).unwrap()));
    }

    #[test]
    fn theta_is_an_automorphism(x in sl3(), y in sl3()) {
        let lhs = cartan_involution(&bracket(&x, &y).unwrap());
        let rhs = bracket(&cartan_involution(&x), &cartan_involution(&y)).unwrap();
        prop_assert!((&lhs - &rhs).max_abs() <= TOL);
    }

    #[test]
    fn inner_g_is_positive_definite(x in sl3()) {
        let n = inner_g(&x, &x).unwrap();
        prop_assert!(close(n, 2.0 * x.frobenius_norm().powi(2)));
    }

    #[test]
    fn inner_s_is_pulled_back_through_phi(x in solvable(), y in solvable()) {
        prop_assert!(ensure_in_s(&x).is_ok());
        let pulled = inner_g(&phi(&x), &phi(&y)).unwrap();
        prop_assert!(close(inner_s(&x, &y).unwrap(), pulled));
    }

    #[test]
    fn solvable_algebra_is_closed_under_bracket(x in solvable(), y in solvable()) {
        prop_assert!(ensure_in_s(&bracket(&x, &y).unwrap()).is_ok());
    }

    #[test]
    fn phi_lands_in_hermitian_matrices(x in sl3()) {
        let p = phi(&x);
        prop_assert!((&p - &p.adjoint()).max_abs() <= 1e-15);
        prop_assert!((&cartan_involution(&p) + &p).max_abs() <= 1e-15);
    }
}

#[test]
fn lower_triangular_entries_are_rejected() {
    let mut x = SquareComplexMatrix::zeros(3);
    x[(2, 0)] = Complex64::new(1e-9, 0.0);
    assert!(ensure_in_s(&x).is_err());
    assert!(inner_s(&x, &x).is_err());
}
