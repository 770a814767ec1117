mod common;

use common::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use permchow::permanent::{
    check_parity_dependence, eval_product_form, fwht, per_glynn, per_naive, per_ryser,
    per_via_hadamard, Algorithm, HadamardScheme,
};
use permchow::{PermError, SquareMatrix};
use proptest::prelude::*;
use rand::Rng;

#[test]
fn symbolic_two_by_two_at_random_points() {
    let mut r = rng(11);
    for _ in 0..4 {
        let a = random_int_matrix(&mut r, 2, 1000);
        let expected = a.get(0, 0) * a.get(1, 1) + a.get(0, 1) * a.get(1, 0);
        for algo in Algorithm::ALL {
            assert_eq!(algo.run(&a).unwrap(), expected, "{algo}");
        }
    }
}

#[test]
fn naive_agrees_with_function_enumeration_oracle() {
    let mut r = rng(5);
    for n in 1..=5 {
        for _ in 0..10 {
            let a = random_int_matrix(&mut r, n, 5);
            assert_eq!(per_naive(&a).unwrap(), permanent_by_functions(&a));
        }
    }
}

#[test]
fn glynn_random_five_by_five() {
    let mut r = rng(17);
    let a = random_int_matrix(&mut r, 5, 9);
    assert_eq!(per_glynn(&a).unwrap(), per_naive(&a).unwrap());
}

#[test]
fn hadamard_on_random_four_by_four() {
    let mut r = rng(23);
    let a = random_int_matrix(&mut r, 4, 5);
    let one = BigInt::one();
    let expected = per_naive(&a).unwrap();
    assert_eq!(per_via_hadamard(&a, HadamardScheme::Ryser01, &one).unwrap(), expected);
    assert_eq!(per_via_hadamard(&a, HadamardScheme::GlynnPm, &one).unwrap(), expected);
}

#[test]
fn hadamard_glynn_step_independent_rational() {
    let mut r = rng(29);
    let a = random_rational_matrix(&mut r, 3);
    let h1 = per_via_hadamard(&a, HadamardScheme::GlynnPm, &BigRational::one()).unwrap();
    let h2 = per_via_hadamard(&a, HadamardScheme::GlynnPm, &BigRational::from_integer(2.into())).unwrap();
    assert_eq!(h1, h2);
    assert_eq!(h1, per_naive(&a).unwrap());
}

#[test]
fn product_form_at_diagonal_point() {
    // F_A(h, h) = (a00 + a01)(a10 + a11) h^2
    let a = int_matrix(&[&[2, -3], &[5, 7]]);
    let h = BigInt::from(3);
    assert_eq!(eval_product_form(&a, &[h.clone(), h]).unwrap(), BigInt::from(-12 * 9));
}

#[test]
fn parity_identity_complex() {
    let mut r = rng(31);
    let a = random_complex_matrix(&mut r, 3);
    let x: Vec<_> = (0..3).map(|_| random_complex(&mut r)).collect();
    assert!(check_parity_dependence(&a, &x, 1e-12).unwrap());
}

#[test]
fn complex_algorithms_agree() {
    let mut r = rng(37);
    let a = random_complex_matrix(&mut r, 5);
    let reference = per_naive(&a).unwrap();
    for algo in Algorithm::ALL {
        let v = algo.run(&a).unwrap();
        assert!((v - reference).norm() < 1e-10, "{algo}: {v} vs {reference}");
    }
}

/// Dense Kronecker power of ((1,1),(1,-1)): entry (r, c) is (-1)^popcount(r & c).
fn hadamard_by_matrix(v: &[i64]) -> Vec<i64> {
    (0..v.len())
        .map(|r| {
            v.iter()
                .enumerate()
                .map(|(c, &x)| if (r & c).count_ones() % 2 == 0 { x } else { -x })
                .sum()
        })
        .collect()
}

#[test]
fn fwht_matches_dense_kronecker_product() {
    let mut r = rng(41);
    for k in 0..=10 {
        let v: Vec<i64> = (0..1usize << k).map(|_| r.random_range(-100..=100)).collect();
        let mut fast: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        fwht(&mut fast).unwrap();
        let dense: Vec<BigInt> = hadamard_by_matrix(&v).into_iter().map(BigInt::from).collect();
        assert_eq!(fast, dense, "k = {k}");
        // H^2 = 2^k I
        fwht(&mut fast).unwrap();
        let scaled: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x) << k).collect();
        assert_eq!(fast, scaled);
    }
}

#[test]
fn guards_surface_as_errors() {
    let big = SquareMatrix::<BigInt>::identity(11).unwrap();
    assert!(matches!(per_naive(&big), Err(PermError::DimensionGuard { limit: 10, .. })));
    let huge = SquareMatrix::<BigInt>::identity(31).unwrap();
    assert!(per_ryser(&huge).unwrap_err().is_guard());
    assert!(per_glynn(&huge).unwrap_err().is_guard());
}

#[test]
fn zero_matrix_and_zero_step() {
    let z = SquareMatrix::from_fn(3, |_, _| BigInt::zero()).unwrap();
    for algo in Algorithm::ALL {
        assert_eq!(algo.run(&z).unwrap(), BigInt::zero());
    }
    assert!(matches!(
        per_via_hadamard(&z, HadamardScheme::Ryser01, &BigInt::zero()),
        Err(PermError::ZeroStep)
    ));
}

fn int_matrix_strategy(max_n: usize) -> impl Strategy<Value = SquareMatrix<BigInt>> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(-5i64..=5, n * n).prop_map(move |v| {
            SquareMatrix::new(n, v.into_iter().map(BigInt::from).collect()).unwrap()
        })
    })
}

fn perm_strategy(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn all_algorithms_agree(a in int_matrix_strategy(7)) {
        let expected = per_naive(&a).unwrap();
        for algo in Algorithm::ALL {
            prop_assert_eq!(algo.run(&a).unwrap(), expected.clone(), "{}", algo);
        }
    }

    #[test]
    fn invariant_under_row_column_permutations_and_transpose(
        (a, rows, cols) in int_matrix_strategy(6).prop_flat_map(|a| {
            let n = a.n();
            (Just(a), perm_strategy(n), perm_strategy(n))
        })
    ) {
        let p = per_ryser(&a).unwrap();
        prop_assert_eq!(per_ryser(&a.permuted(&rows, &cols)).unwrap(), p.clone());
        prop_assert_eq!(per_ryser(&a.transpose()).unwrap(), p);
    }

    #[test]
    fn linear_in_each_row(
        (a, row, split) in int_matrix_strategy(6).prop_flat_map(|a| {
            let n = a.n();
            (Just(a), 0..n, prop::collection::vec(-5i64..=5, n))
        })
    ) {
        let n = a.n();
        let mut first = a.clone();
        let mut second = a.clone();
        for (j, s) in split.into_iter().enumerate() {
            let s = BigInt::from(s);
            first.set(row, j, s.clone());
            second.set(row, j, a.get(row, j) - s);
        }
        let lhs = per_glynn(&a).unwrap();
        let rhs = per_glynn(&first).unwrap() + per_glynn(&second).unwrap();
        prop_assert_eq!(lhs, rhs, "n = {}", n);
    }

    #[test]
    fn parity_identity_exact(a in int_matrix_strategy(6), seed in any::<u64>()) {
        let mut r = rng(seed);
        let x: Vec<BigInt> = (0..a.n()).map(|_| BigInt::from(r.random_range(-7i64..=7))).collect();
        prop_assert!(check_parity_dependence(&a, &x, 0.0).unwrap());
    }
}
