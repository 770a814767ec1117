//! Target polynomials and coefficient-by-coefficient verification.

use serde::{Deserialize, Serialize};

use crate::chow::decomposition::RowStructuredDecomposition;
use crate::error::{PermError, Result};
use crate::limits::{guard, Limits};
use crate::monoid::{fiber_partition, monoid_size, unrank_fun, FunctionTable, SignPattern};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TargetKind {
    /// `Per(A)`: coefficient 1 on the bijections, 0 elsewhere.
    Permanent,
    /// `Σ_[f] ω_[f] Σ_{g ∈ [f]} ∏_i a_{i,g(i)}`.
    Signed(SignPattern),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TargetSpec {
    n: usize,
    kind: TargetKind,
}

impl TargetSpec {
    pub fn permanent(n: usize) -> Self {
        TargetSpec {
            n,
            kind: TargetKind::Permanent,
        }
    }

    pub fn signed(pattern: SignPattern) -> Self {
        TargetSpec {
            n: pattern.n(),
            kind: TargetKind::Signed(pattern),
        }
    }

    /// `P(A) = 2·Per(A) - ∏_i (Σ_j a_ij)`.
    pub fn signed_default(n: usize) -> Self {
        Self::signed(SignPattern::signed_default(n))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> &TargetKind {
        &self.kind
    }

    /// Coefficient of `∏_i a_{i,f(i)}` in the target; always -1, 0 or 1.
    pub fn coefficient(&self, f: &FunctionTable) -> i64 {
        match &self.kind {
            TargetKind::Permanent => i64::from(f.is_bijective()),
            TargetKind::Signed(omega) => omega.sign(&fiber_partition(f)).value(),
        }
    }
}

pub fn target_coefficient(target: &TargetSpec, f: &FunctionTable) -> i64 {
    target.coefficient(f)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub checked: u64,
    pub max_error: f64,
    pub violations: u64,
    pub passed: bool,
}

/// Compares all `n^n` coefficients of `d` with the target. Exact fields
/// require equality; complex decompositions allow absolute error `tol`.
/// Guarded by [`Limits::coefficients`].
pub fn verify_against_target<T: Scalar>(
    d: &RowStructuredDecomposition<T>,
    target: &TargetSpec,
    tol: f64,
) -> Result<VerificationReport> {
    if d.n() != target.n() {
        return Err(PermError::DimensionMismatch {
            expected: d.n(),
            found: target.n(),
        });
    }
    guard("verify_against_target", d.n(), Limits::current().coefficients)?;
    let coefficients = d.extract_all_coefficients()?;
    let mut max_error = 0.0f64;
    let mut violations = 0u64;
    for (k, c) in coefficients.into_iter().enumerate() {
        let f = unrank_fun(d.n(), k as u64)?;
        let mut diff = c;
        diff -= &T::from_i64(target.coefficient(&f));
        max_error = max_error.max(diff.magnitude());
        if !diff.is_negligible(tol) {
            violations += 1;
        }
    }
    Ok(VerificationReport {
        checked: monoid_size(d.n()),
        max_error,
        violations,
        passed: violations == 0,
    })
}
