//! The Ryser and Glynn formulas written as row-structured decompositions of
//! `Per(A)`. Each term's scalar weight is folded into its row-0 factor so the
//! result is a plain `ρ × n × n` coefficient array.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::chow::decomposition::RowStructuredDecomposition;

/// `ρ = 2^n - 1` terms, one per nonempty column subset `S` (term `u` is the
/// subset with bitmask `u + 1`): `(-1)^(n-|S|) ∏_i Σ_{j∈S} a_ij`.
pub fn build_ryser(n: usize) -> RowStructuredDecomposition<BigInt> {
    assert!((1..63).contains(&n), "build_ryser: n = {n}");
    let rho = (1usize << n) - 1;
    let mut d = RowStructuredDecomposition::zeros(n, rho).expect("n >= 1");
    for u in 0..rho {
        let subset = u + 1;
        let sign = if (n - subset.count_ones() as usize).is_multiple_of(2) { 1 } else { -1 };
        for i in 0..n {
            for j in (0..n).filter(|j| subset >> j & 1 == 1) {
                let weight = if i == 0 { sign } else { 1 };
                d.set(u, i, j, BigInt::from(weight));
            }
        }
    }
    d
}

/// `ρ = 2^(n-1)` terms, one per `δ ∈ {±1}^n` with `δ_0 = +1` (bit `j-1` of
/// `u` set means `δ_j = -1`): `(∏_k δ_k) / 2^(n-1) · ∏_i Σ_j δ_j a_ij`.
pub fn build_glynn(n: usize) -> RowStructuredDecomposition<BigRational> {
    assert!((1..64).contains(&n), "build_glynn: n = {n}");
    let rho = 1usize << (n - 1);
    let scale = BigRational::new(BigInt::one(), BigInt::one() << (n - 1));
    let mut d = RowStructuredDecomposition::zeros(n, rho).expect("n >= 1");
    for u in 0..rho {
        let delta: Vec<i64> = (0..n)
            .map(|j| if j > 0 && u >> (j - 1) & 1 == 1 { -1 } else { 1 })
            .collect();
        let sign: i64 = delta.iter().product();
        for i in 0..n {
            for (j, &dj) in delta.iter().enumerate() {
                let entry = if i == 0 {
                    &scale * BigRational::from_integer(BigInt::from(dj * sign))
                } else {
                    BigRational::from_integer(BigInt::from(dj))
                };
                debug_assert!(!entry.is_zero());
                d.set(u, i, j, entry);
            }
        }
    }
    d
}
