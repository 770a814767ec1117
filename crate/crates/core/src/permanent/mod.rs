//! Exact permanents.
//!
//! Four independent routes are provided and are expected to agree exactly
//! over the exact fields: direct expansion over `S_n` ([`per_naive`]),
//! Ryser's inclusion–exclusion ([`per_ryser`]), Glynn's `±1` formula
//! ([`per_glynn`]) and the finite-difference pipeline of
//! [`hadamard::per_via_hadamard`], which evaluates the product form
//! `F_A(x) = ∏_i (Σ_j a_ij x_j)` on a two-point grid and applies the
//! Walsh–Hadamard transform.

pub mod glynn;
pub mod hadamard;
pub mod ryser;

use std::fmt;
use std::str::FromStr;

use crate::error::{PermError, Result};
use crate::limits::{guard, Limits};
use crate::matrix::{AnyMatrix, SquareMatrix};
use crate::scalar::{AnyScalar, Scalar};

pub use glynn::per_glynn;
pub use hadamard::{fwht, per_via_hadamard, HadamardScheme};
pub use ryser::per_ryser;

/// `Σ_{σ ∈ S_n} ∏_i A[i, σ(i)]`, guarded by [`Limits::naive`].
pub fn per_naive<T: Scalar>(a: &SquareMatrix<T>) -> Result<T> {
    per_naive_with_limit(a, Limits::current().naive)
}

pub fn per_naive_with_limit<T: Scalar>(a: &SquareMatrix<T>, limit: usize) -> Result<T> {
    guard("per_naive", a.n(), limit)?;
    let mut used = vec![false; a.n()];
    let mut acc = T::zero();
    expand(a, 0, &mut used, &T::one(), &mut acc);
    Ok(acc)
}

// Depth-first over injective row→column assignments, carrying the prefix
// product so each leaf costs one multiplication.
fn expand<T: Scalar>(a: &SquareMatrix<T>, row: usize, used: &mut [bool], prefix: &T, acc: &mut T) {
    if row == a.n() {
        *acc += prefix;
        return;
    }
    for col in 0..a.n() {
        if used[col] || a.get(row, col).is_zero() {
            continue;
        }
        used[col] = true;
        let mut next = prefix.clone();
        next *= a.get(row, col);
        expand(a, row + 1, used, &next, acc);
        used[col] = false;
    }
}

/// `F_A(x) = ∏_i (Σ_j A[i, j] x_j)`.
pub fn eval_product_form<T: Scalar>(a: &SquareMatrix<T>, x: &[T]) -> Result<T> {
    if x.len() != a.n() {
        return Err(PermError::DimensionMismatch {
            expected: a.n(),
            found: x.len(),
        });
    }
    let mut product = T::one();
    for i in 0..a.n() {
        let mut form = T::zero();
        for (aij, xj) in a.row(i).iter().zip(x) {
            let mut term = aij.clone();
            term *= xj;
            form += &term;
        }
        product *= &form;
    }
    Ok(product)
}

/// Checks `F_A(x) + (-1)^(n+1) F_A(-x) = 0`, the relation that lets Glynn's
/// formula fix the first sign. `tol` only matters for the complex field.
pub fn check_parity_dependence<T: Scalar>(a: &SquareMatrix<T>, x: &[T], tol: f64) -> Result<bool> {
    let forward = eval_product_form(a, x)?;
    let negated: Vec<T> = x.iter().map(|v| -v.clone()).collect();
    let backward = eval_product_form(a, &negated)?;
    let mut sum = forward;
    if a.n() % 2 == 1 {
        sum += &backward;
    } else {
        sum -= &backward;
    }
    Ok(sum.is_negligible(tol))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Naive,
    Ryser,
    Glynn,
    HadamardRyser,
    HadamardGlynn,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::Naive,
        Algorithm::Ryser,
        Algorithm::Glynn,
        Algorithm::HadamardRyser,
        Algorithm::HadamardGlynn,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Naive => "naive",
            Algorithm::Ryser => "ryser",
            Algorithm::Glynn => "glynn",
            Algorithm::HadamardRyser => "hadamard-ryser",
            Algorithm::HadamardGlynn => "hadamard-glynn",
        }
    }

    pub fn limit(self, limits: &Limits) -> usize {
        match self {
            Algorithm::Naive => limits.naive,
            _ => limits.exponential,
        }
    }

    /// Runs the algorithm with step `h = 1` for the Hadamard schemes.
    pub fn run<T: Scalar>(self, a: &SquareMatrix<T>) -> Result<T> {
        self.run_with_step(a, &T::one())
    }

    pub fn run_with_step<T: Scalar>(self, a: &SquareMatrix<T>, h: &T) -> Result<T> {
        match self {
            Algorithm::Naive => per_naive(a),
            Algorithm::Ryser => per_ryser(a),
            Algorithm::Glynn => per_glynn(a),
            Algorithm::HadamardRyser => per_via_hadamard(a, HadamardScheme::Ryser01, h),
            Algorithm::HadamardGlynn => per_via_hadamard(a, HadamardScheme::GlynnPm, h),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| PermError::Malformed(format!("unknown algorithm {s:?}")))
    }
}

/// Permanent of a type-erased matrix. `h` must already be parsed in the
/// matrix's field when given.
pub fn permanent_any(a: &AnyMatrix, algo: Algorithm, h: Option<&AnyScalar>) -> Result<AnyScalar> {
    fn step<T: Scalar>(h: Option<&AnyScalar>, pick: impl Fn(&AnyScalar) -> Option<T>) -> Result<T> {
        match h {
            None => Ok(T::one()),
            Some(v) => pick(v).ok_or_else(|| PermError::Malformed("step field mismatch".into())),
        }
    }
    Ok(match a {
        AnyMatrix::Int(m) => {
            let h = step(h, |v| match v {
                AnyScalar::Int(x) => Some(x.clone()),
                _ => None,
            })?;
            AnyScalar::Int(algo.run_with_step(m, &h)?)
        }
        AnyMatrix::Rational(m) => {
            let h = step(h, |v| match v {
                AnyScalar::Rational(x) => Some(x.clone()),
                _ => None,
            })?;
            AnyScalar::Rational(algo.run_with_step(m, &h)?)
        }
        AnyMatrix::Complex(m) => {
            let h = step(h, |v| match v {
                AnyScalar::Complex(x) => Some(*x),
                _ => None,
            })?;
            AnyScalar::Complex(algo.run_with_step(m, &h)?)
        }
    })
}
