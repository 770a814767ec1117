//! Decomposition files: `{"n": int, "rho": int, "field": ..., "B": [ρ][n][n]}`
//! with entries encoded as in matrix files.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::chow::decomposition::{GeneralDecomposition, RowStructuredDecomposition};
use crate::chow::target::{verify_against_target, TargetSpec, VerificationReport};
use crate::error::{PermError, Result};
use crate::scalar::{FieldKind, Scalar};

#[derive(Debug, Serialize, Deserialize)]
struct DecompositionFile {
    n: usize,
    rho: usize,
    field: FieldKind,
    #[serde(rename = "B")]
    b: Vec<Vec<Vec<Value>>>,
}

impl<T: Scalar> RowStructuredDecomposition<T> {
    pub fn to_json_value(&self) -> Value {
        let (n, rho) = (self.n(), self.rho());
        let b = (0..rho)
            .map(|u| {
                (0..n)
                    .map(|i| (0..n).map(|j| self.get(u, i, j).to_json()).collect())
                    .collect()
            })
            .collect();
        serde_json::to_value(DecompositionFile { n, rho, field: T::FIELD, b })
            .expect("decomposition serializes")
    }
}

fn parse_b<T: Scalar>(file: &DecompositionFile) -> Result<RowStructuredDecomposition<T>> {
    let n = file.n;
    if file.b.len() != file.rho {
        return Err(PermError::Malformed(format!(
            "declared rho = {} but B has {} terms",
            file.rho,
            file.b.len()
        )));
    }
    let mut flat = Vec::with_capacity(file.rho * n * n);
    for term in &file.b {
        if term.len() != n || term.iter().any(|row| row.len() != n) {
            return Err(PermError::Malformed(format!("every term of B must be {n} × {n}")));
        }
        for row in term {
            for v in row {
                flat.push(T::from_json(v)?);
            }
        }
    }
    RowStructuredDecomposition::new(n, file.rho, flat)
}

/// A row-structured decomposition over whichever field its file declared.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyDecomposition {
    Int(RowStructuredDecomposition<BigInt>),
    Rational(RowStructuredDecomposition<BigRational>),
    Complex(RowStructuredDecomposition<Complex64>),
}

impl AnyDecomposition {
    pub fn from_json_str(text: &str) -> Result<Self> {
        let file: DecompositionFile = serde_json::from_str(text)
            .map_err(|e| PermError::Malformed(format!("decomposition file: {e}")))?;
        if file.n == 0 {
            return Err(PermError::Malformed("n must be positive".into()));
        }
        Ok(match file.field {
            FieldKind::Int => AnyDecomposition::Int(parse_b(&file)?),
            FieldKind::Rational => AnyDecomposition::Rational(parse_b(&file)?),
            FieldKind::Complex => AnyDecomposition::Complex(parse_b(&file)?),
        })
    }

    pub fn to_json_value(&self) -> Value {
        match self {
            AnyDecomposition::Int(d) => d.to_json_value(),
            AnyDecomposition::Rational(d) => d.to_json_value(),
            AnyDecomposition::Complex(d) => d.to_json_value(),
        }
    }

    pub fn n(&self) -> usize {
        match self {
            AnyDecomposition::Int(d) => d.n(),
            AnyDecomposition::Rational(d) => d.n(),
            AnyDecomposition::Complex(d) => d.n(),
        }
    }

    pub fn rho(&self) -> usize {
        match self {
            AnyDecomposition::Int(d) => d.rho(),
            AnyDecomposition::Rational(d) => d.rho(),
            AnyDecomposition::Complex(d) => d.rho(),
        }
    }

    pub fn verify(&self, target: &TargetSpec, tol: f64) -> Result<VerificationReport> {
        match self {
            AnyDecomposition::Int(d) => verify_against_target(d, target, tol),
            AnyDecomposition::Rational(d) => verify_against_target(d, target, tol),
            AnyDecomposition::Complex(d) => verify_against_target(d, target, tol),
        }
    }
}

impl<T: Scalar> GeneralDecomposition<T> {
    /// `{"rho", "degree", "vars", "field", "H": [ρ][d][N+1]}`; the last entry
    /// of each factor is its constant term.
    pub fn to_json_value(&self) -> Value {
        let h: Vec<Vec<Vec<Value>>> = (0..self.rho())
            .map(|u| {
                (0..self.degree())
                    .map(|v| (0..=self.vars()).map(|w| self.get(u, v, w).to_json()).collect())
                    .collect()
            })
            .collect();
        serde_json::json!({
            "rho": self.rho(),
            "degree": self.degree(),
            "vars": self.vars(),
            "field": T::FIELD,
            "H": h,
        })
    }
}
