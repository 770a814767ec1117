//! Dense square matrices and the JSON matrix file format.
//!
//! A matrix file is `{"n": int, "field": "int"|"rational"|"complex",
//! "entries": [[...]]}`. Integers may be JSON numbers or decimal strings,
//! rationals are `"p/q"` strings and complex entries are `[re, im]` pairs.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{PermError, Result};
use crate::scalar::{AnyScalar, FieldKind, Scalar};

/// An `n × n` matrix stored row-major: entry `(i, j)` lives at flat index
/// `n * i + j`.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix<T> {
    n: usize,
    entries: Vec<T>,
}

impl<T: Scalar> SquareMatrix<T> {
    pub fn new(n: usize, entries: Vec<T>) -> Result<Self> {
        if n == 0 {
            return Err(PermError::EmptyDimension);
        }
        if entries.len() != n * n {
            return Err(PermError::DimensionMismatch {
                expected: n * n,
                found: entries.len(),
            });
        }
        Ok(SquareMatrix { n, entries })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(PermError::DimensionMismatch {
                expected: n,
                found: bad.len(),
            });
        }
        Self::new(n, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Result<Self> {
        let entries = (0..n * n).map(|k| f(k / n, k % n)).collect();
        Self::new(n, entries)
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::from_fn(n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn ones(n: usize) -> Result<Self> {
        Self::from_fn(n, |_, _| T::one())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[self.n * i + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.entries[self.n * i + j] = value;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[self.n * i..self.n * (i + 1)]
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        SquareMatrix {
            n,
            entries: (0..n * n).map(|k| self.get(k % n, k / n).clone()).collect(),
        }
    }

    /// The matrix `B` with `B[row_perm[i], col_perm[j]] = A[i, j]`, i.e. the
    /// variable `a_ij` moved to position `(σ(i), γ(j))`.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> Self {
        let n = self.n;
        let mut entries = self.entries.clone();
        for i in 0..n {
            for j in 0..n {
                entries[n * row_perm[i] + col_perm[j]] = self.get(i, j).clone();
            }
        }
        SquareMatrix { n, entries }
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> SquareMatrix<U> {
        SquareMatrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn rows_json(&self) -> Vec<Vec<Value>> {
        (0..self.n)
            .map(|i| self.row(i).iter().map(Scalar::to_json).collect())
            .collect()
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct MatrixFile {
    n: usize,
    field: FieldKind,
    entries: Vec<Vec<Value>>,
}

fn parse_entries<T: Scalar>(file: &MatrixFile) -> Result<SquareMatrix<T>> {
    if file.entries.len() != file.n {
        return Err(PermError::Malformed(format!(
            "declared n = {} but found {} rows",
            file.n,
            file.entries.len()
        )));
    }
    let rows = file
        .entries
        .iter()
        .map(|row| {
            if row.len() != file.n {
                return Err(PermError::Malformed(format!(
                    "declared n = {} but found a row of length {}",
                    file.n,
                    row.len()
                )));
            }
            row.iter().map(T::from_json).collect::<Result<Vec<T>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    SquareMatrix::from_rows(rows)
}

/// A matrix over whichever field its file declared.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyMatrix {
    Int(SquareMatrix<BigInt>),
    Rational(SquareMatrix<BigRational>),
    Complex(SquareMatrix<Complex64>),
}

impl AnyMatrix {
    pub fn from_json_str(text: &str) -> Result<Self> {
        let file: MatrixFile = serde_json::from_str(text)
            .map_err(|e| PermError::Malformed(format!("matrix file: {e}")))?;
        if file.n == 0 {
            return Err(PermError::Malformed("n must be positive".into()));
        }
        Ok(match file.field {
            FieldKind::Int => AnyMatrix::Int(parse_entries(&file)?),
            FieldKind::Rational => AnyMatrix::Rational(parse_entries(&file)?),
            FieldKind::Complex => AnyMatrix::Complex(parse_entries(&file)?),
        })
    }

    pub fn to_json_string(&self) -> String {
        let (n, field, entries) = match self {
            AnyMatrix::Int(m) => (m.n(), FieldKind::Int, m.rows_json()),
            AnyMatrix::Rational(m) => (m.n(), FieldKind::Rational, m.rows_json()),
            AnyMatrix::Complex(m) => (m.n(), FieldKind::Complex, m.rows_json()),
        };
        serde_json::to_string(&MatrixFile { n, field, entries }).expect("matrix serializes")
    }

    pub fn n(&self) -> usize {
        match self {
            AnyMatrix::Int(m) => m.n(),
            AnyMatrix::Rational(m) => m.n(),
            AnyMatrix::Complex(m) => m.n(),
        }
    }

    pub fn field(&self) -> FieldKind {
        match self {
            AnyMatrix::Int(_) => FieldKind::Int,
            AnyMatrix::Rational(_) => FieldKind::Rational,
            AnyMatrix::Complex(_) => FieldKind::Complex,
        }
    }

    /// Parses `text` as a scalar of this matrix's field.
    pub fn parse_scalar(&self, text: &str) -> Result<AnyScalar> {
        let value = serde_json::from_str::<Value>(text).unwrap_or(Value::String(text.into()));
        Ok(match self.field() {
            FieldKind::Int => AnyScalar::Int(BigInt::from_json(&value)?),
            FieldKind::Rational => AnyScalar::Rational(BigRational::from_json(&value)?),
            FieldKind::Complex => AnyScalar::Complex(match &value {
                Value::String(s) => s
                    .parse::<Complex64>()
                    .map_err(|_| PermError::Malformed(format!("not a complex number: {s:?}")))?,
                other => Complex64::from_json(other)?,
            }),
        })
    }
}
