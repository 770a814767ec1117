//! Ryser's formula with Gray-code subset iteration.
//!
//! `Per(A) = Σ_{∅ ≠ S ⊆ Z_n} (-1)^(n-|S|) ∏_i Σ_{j ∈ S} a_ij`. Consecutive
//! Gray codes differ in one column, so every subset costs `n` row-sum
//! updates and one `n`-fold product.

use crate::error::Result;
use crate::limits::{guard, Limits};
use crate::matrix::SquareMatrix;
use crate::scalar::Scalar;

pub fn per_ryser<T: Scalar>(a: &SquareMatrix<T>) -> Result<T> {
    let n = a.n();
    guard("per_ryser", n, Limits::current().exponential)?;
    if let Some(v) = T::ryser_accelerated(a.entries(), n) {
        return Ok(v);
    }
    Ok(ryser_generic(a))
}

pub(crate) fn ryser_generic<T: Scalar>(a: &SquareMatrix<T>) -> T {
    let n = a.n();
    let mut row_sums = vec![T::zero(); n];
    let mut total = T::zero();
    let mut gray: u64 = 0;
    for k in 1u64..(1u64 << n) {
        let col = k.trailing_zeros() as usize;
        gray ^= 1 << col;
        let adding = gray & (1 << col) != 0;
        for (i, sum) in row_sums.iter_mut().enumerate() {
            if adding {
                *sum += a.get(i, col);
            } else {
                *sum -= a.get(i, col);
            }
        }
        let mut product = T::one();
        for sum in &row_sums {
            product *= sum;
        }
        if (n - gray.count_ones() as usize).is_multiple_of(2) {
            total += &product;
        } else {
            total -= &product;
        }
    }
    total
}

/// Same iteration in checked 128-bit arithmetic; `None` on overflow.
pub(crate) fn ryser_i128(entries: &[i128], n: usize) -> Option<i128> {
    let mut row_sums = vec![0i128; n];
    let mut total: i128 = 0;
    let mut gray: u64 = 0;
    for k in 1u64..(1u64 << n) {
        let col = k.trailing_zeros() as usize;
        gray ^= 1 << col;
        let adding = gray & (1 << col) != 0;
        for (i, sum) in row_sums.iter_mut().enumerate() {
            let v = entries[n * i + col];
            *sum = if adding { sum.checked_add(v)? } else { sum.checked_sub(v)? };
        }
        let mut product: i128 = 1;
        for &sum in &row_sums {
            if sum == 0 {
                product = 0;
                break;
            }
            product = product.checked_mul(sum)?;
        }
        total = if (n - gray.count_ones() as usize).is_multiple_of(2) {
            total.checked_add(product)?
        } else {
            total.checked_sub(product)?
        };
    }
    Some(total)
}
