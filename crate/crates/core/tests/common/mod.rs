#![allow(dead_code)]

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use permchow::SquareMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn int_matrix(rows: &[&[i64]]) -> SquareMatrix<BigInt> {
    SquareMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()).unwrap()
}

pub fn random_int_matrix(rng: &mut impl Rng, n: usize, bound: i64) -> SquareMatrix<BigInt> {
    SquareMatrix::from_fn(n, |_, _| BigInt::from(rng.random_range(-bound..=bound))).unwrap()
}

pub fn random_rational(rng: &mut impl Rng) -> BigRational {
    BigRational::new(BigInt::from(rng.random_range(-9i64..=9)), BigInt::from(rng.random_range(1i64..=6)))
}

pub fn random_rational_matrix(rng: &mut impl Rng, n: usize) -> SquareMatrix<BigRational> {
    SquareMatrix::from_fn(n, |_, _| random_rational(rng)).unwrap()
}

pub fn random_complex(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
}

pub fn random_complex_matrix(rng: &mut impl Rng, n: usize) -> SquareMatrix<Complex64> {
    SquareMatrix::from_fn(n, |_, _| random_complex(rng)).unwrap()
}

/// Independent permanent oracle: sum over all n^n functions, keeping the
/// injective ones.
pub fn permanent_by_functions(a: &SquareMatrix<BigInt>) -> BigInt {
    let n = a.n();
    permchow::monoid::all_functions(n)
        .filter(|f| f.is_bijective())
        .map(|f| (0..n).map(|i| a.get(i, f.apply(i)).clone()).product::<BigInt>())
        .sum()
}
