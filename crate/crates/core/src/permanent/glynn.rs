//! Glynn's formula:
//! `Per(A) = 2^-(n-1) Σ_{δ ∈ {±1}^n, δ_0 = 1} (∏_k δ_k) ∏_i Σ_j δ_j a_ij`.
//!
//! The undivided sum is accumulated in the matrix field and divided by
//! `2^(n-1)` once at the end. Over the integers that division is always
//! exact, so a remainder means the accumulation is wrong.

use crate::error::{PermError, Result};
use crate::limits::{guard, Limits};
use crate::matrix::SquareMatrix;
use crate::scalar::Scalar;

pub fn per_glynn<T: Scalar>(a: &SquareMatrix<T>) -> Result<T> {
    let n = a.n();
    guard("per_glynn", n, Limits::current().exponential)?;
    let undivided = glynn_sum(a);
    let divisor = T::from_i64(2).pow_u32(n as u32 - 1);
    undivided.exact_div(&divisor).ok_or_else(|| {
        PermError::InexactDivision(format!("Glynn sum {undivided:?} by 2^{}", n - 1))
    })
}

pub(crate) fn glynn_sum<T: Scalar>(a: &SquareMatrix<T>) -> T {
    let n = a.n();
    let mut row_sums: Vec<T> = (0..n)
        .map(|i| {
            let mut s = T::zero();
            for v in a.row(i) {
                s += v;
            }
            s
        })
        .collect();
    let product = |sums: &[T]| {
        let mut p = T::one();
        for s in sums {
            p *= s;
        }
        p
    };
    let mut total = product(&row_sums);
    // Gray code over the signs of columns 1..n; bit b set means δ_{b+1} = -1.
    let mut gray: u64 = 0;
    for k in 1u64..(1u64 << (n - 1)) {
        let bit = k.trailing_zeros() as usize;
        gray ^= 1 << bit;
        let col = bit + 1;
        let now_negative = gray & (1 << bit) != 0;
        for (i, sum) in row_sums.iter_mut().enumerate() {
            let mut twice = a.get(i, col).clone();
            twice += a.get(i, col);
            if now_negative {
                *sum -= &twice;
            } else {
                *sum += &twice;
            }
        }
        let p = product(&row_sums);
        if gray.count_ones().is_multiple_of(2) {
            total += &p;
        } else {
            total -= &p;
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn small_cases() {
        let ones = SquareMatrix::<BigInt>::ones(3).unwrap();
        assert_eq!(per_glynn(&ones).unwrap(), BigInt::from(6));
        let single = SquareMatrix::new(1, vec![BigInt::from(-9)]).unwrap();
        assert_eq!(per_glynn(&single).unwrap(), BigInt::from(-9));
        let m = SquareMatrix::from_rows(vec![
            vec![BigInt::from(1), BigInt::from(2)],
            vec![BigInt::from(3), BigInt::from(4)],
        ])
        .unwrap();
        // ((1+2)(3+4) - (1-2)(3-4)) / 2
        assert_eq!(glynn_sum(&m), BigInt::from(20));
        assert_eq!(per_glynn(&m).unwrap(), BigInt::from(10));
    }
}
