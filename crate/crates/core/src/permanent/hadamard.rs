//! The finite-difference route to the permanent.
//!
//! `Per(A)` is the mixed derivative `∂_0 ⋯ ∂_{n-1} F_A`. Sampling `F_A` on a
//! two-point grid per coordinate and applying `((1,1),(1,-1))^{⊗n}` turns the
//! derivative into a difference quotient; because `F_A` is homogeneous of
//! degree `n`, the quotient is exact for every nonzero step `h`.
//!
//! Grid layout: in the `2^n` sample vector, bit `b` of the index controls
//! coordinate `x_{n-1-b}`. A clear bit means `x = h`, a set bit means the
//! second grid value (`0` for Ryser, `-h` for Glynn). Index `0` is therefore
//! `F_A(h, …, h)` and index `2^n - 1` is `F_A(0, …, 0)` (resp.
//! `F_A(-h, …, -h)`). The permanent is entry `2^n - 1` of the transformed
//! vector divided by `h^n` (Ryser) or `(2h)^n` (Glynn).

use std::fmt;
use std::str::FromStr;

use crate::error::{PermError, Result};
use crate::limits::{guard, Limits};
use crate::matrix::SquareMatrix;
use crate::permanent::eval_product_form;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HadamardScheme {
    /// Grid `{h, 0}^n`.
    Ryser01,
    /// Grid `{h, -h}^n`.
    GlynnPm,
}

impl fmt::Display for HadamardScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HadamardScheme::Ryser01 => "ryser01",
            HadamardScheme::GlynnPm => "glynn±",
        })
    }
}

impl FromStr for HadamardScheme {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ryser01" | "ryser" => Ok(HadamardScheme::Ryser01),
            "glynn±" | "glynn" | "glynn-pm" => Ok(HadamardScheme::GlynnPm),
            other => Err(PermError::Malformed(format!("unknown scheme {other:?}"))),
        }
    }
}

/// In-place Walsh–Hadamard transform, `v ← H^{⊗k} v` with
/// `H = ((1,1),(1,-1))`. Bit `i` of the index is tensor factor `i`.
pub fn fwht<T: Scalar>(v: &mut [T]) -> Result<()> {
    let len = v.len();
    if !len.is_power_of_two() {
        return Err(PermError::NotPowerOfTwo(len));
    }
    let mut half = 1;
    while half < len {
        for block in v.chunks_mut(2 * half) {
            let (lo, hi) = block.split_at_mut(half);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let mut diff = a.clone();
                diff -= b;
                *a += b;
                *b = diff;
            }
        }
        half *= 2;
    }
    Ok(())
}

/// The `2^n` samples of `F_A` in the layout described in the module docs.
pub fn sample_grid<T: Scalar>(a: &SquareMatrix<T>, scheme: HadamardScheme, h: &T) -> Result<Vec<T>> {
    let n = a.n();
    let low = match scheme {
        HadamardScheme::Ryser01 => T::zero(),
        HadamardScheme::GlynnPm => -h.clone(),
    };
    (0..1usize << n)
        .map(|k| {
            let x: Vec<T> = (0..n)
                .map(|coord| {
                    let bit = n - 1 - coord;
                    if k >> bit & 1 == 1 { low.clone() } else { h.clone() }
                })
                .collect();
            eval_product_form(a, &x)
        })
        .collect()
}

pub fn per_via_hadamard<T: Scalar>(a: &SquareMatrix<T>, scheme: HadamardScheme, h: &T) -> Result<T> {
    let n = a.n();
    guard("per_via_hadamard", n, Limits::current().exponential)?;
    if h.is_zero() {
        return Err(PermError::ZeroStep);
    }
    let mut samples = sample_grid(a, scheme, h)?;
    fwht(&mut samples)?;
    let last = samples.pop().expect("2^n >= 2 samples");
    let scale = match scheme {
        HadamardScheme::Ryser01 => h.pow_u32(n as u32),
        HadamardScheme::GlynnPm => {
            let mut two_h = h.clone();
            two_h += h;
            two_h.pow_u32(n as u32)
        }
    };
    last.exact_div(&scale).ok_or_else(|| {
        PermError::InexactDivision(format!("transformed sample {last:?} by {scale:?}"))
    })
}
