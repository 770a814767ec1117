//! Coefficient-equation systems for a rank-ρ row-structured decomposition.
//!
//! The full system has one equation per function `f ∈ Z_n^Z_n`:
//! `Σ_u ∏_i B[u, i, f(i)] = ω_f`. The reduced system keeps, per class, the
//! sum of those equations over the class (right-hand side `|orbit| · ω`) and
//! the single equation of the canonical representative.

use serde::{Deserialize, Serialize};

use crate::chow::{RowStructuredDecomposition, TargetSpec};
use crate::error::{PermError, Result};
use crate::limits::{guard, Limits};
use crate::monoid::{all_functions, enumerate_classes, lex_fun, monoid_size, orbit};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EquationKind {
    Full,
    OrbitSum,
    Representative,
}

/// `Σ_{f ∈ functions} Σ_u ∏_i B[u, i, f(i)] = rhs`, functions given by rank.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoefficientEquation {
    pub kind: EquationKind,
    pub functions: Vec<u64>,
    pub rhs: f64,
}

pub fn build_full_system(n: usize, target: &TargetSpec) -> Result<Vec<CoefficientEquation>> {
    check_target(n, target)?;
    guard("build_full_system", n, Limits::current().systems)?;
    Ok(all_functions(n)
        .map(|f| CoefficientEquation {
            kind: EquationKind::Full,
            functions: vec![lex_fun(&f)],
            rhs: target.coefficient(&f) as f64,
        })
        .collect())
}

/// `Pa(n)` orbit-sum equations followed by `Pa(n)` representative equations,
/// both in ascending partition order.
pub fn build_reduced_system(n: usize, target: &TargetSpec) -> Result<Vec<CoefficientEquation>> {
    check_target(n, target)?;
    guard("build_reduced_system", n, Limits::current().systems)?;
    let classes = enumerate_classes(n)?;
    let mut sums = Vec::with_capacity(classes.len());
    let mut reps = Vec::with_capacity(classes.len());
    for class in &classes {
        let omega = target.coefficient(&class.representative) as f64;
        let members: Vec<u64> = orbit(&class.representative)?.iter().map(lex_fun).collect();
        debug_assert_eq!(members.len() as u128, class.orbit_size);
        sums.push(CoefficientEquation {
            kind: EquationKind::OrbitSum,
            rhs: members.len() as f64 * omega,
            functions: members,
        });
        reps.push(CoefficientEquation {
            kind: EquationKind::Representative,
            functions: vec![lex_fun(&class.representative)],
            rhs: omega,
        });
    }
    sums.extend(reps);
    Ok(sums)
}

/// The full system whose right-hand sides are the coefficients of a known
/// decomposition, so that `planted` itself is an exact solution.
pub fn planted_full_system<T: Scalar>(planted: &RowStructuredDecomposition<T>) -> Result<Vec<CoefficientEquation>> {
    let n = planted.n();
    guard("planted_full_system", n, Limits::current().systems)?;
    let coefficients = planted.extract_all_coefficients()?;
    coefficients
        .into_iter()
        .enumerate()
        .map(|(k, c)| {
            let c = c.to_complex();
            if c.im != 0.0 {
                return Err(PermError::Malformed("planted coefficients must be real".into()));
            }
            Ok(CoefficientEquation {
                kind: EquationKind::Full,
                functions: vec![k as u64],
                rhs: c.re,
            })
        })
        .collect()
}

fn check_target(n: usize, target: &TargetSpec) -> Result<()> {
    if n == 0 {
        return Err(PermError::EmptyDimension);
    }
    if target.n() != n {
        return Err(PermError::DimensionMismatch {
            expected: n,
            found: target.n(),
        });
    }
    Ok(())
}

/// Every rank referenced by the system must be below `n^n`.
pub(crate) fn validate_system(n: usize, system: &[CoefficientEquation]) -> Result<()> {
    let bound = monoid_size(n);
    for eq in system {
        if let Some(&bad) = eq.functions.iter().find(|&&k| k >= bound) {
            return Err(PermError::IndexOutOfRange {
                index: bad.into(),
                bound: bound.into(),
            });
        }
    }
    Ok(())
}
