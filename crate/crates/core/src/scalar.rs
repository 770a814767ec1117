//! The three scalar fields the library computes over.

use std::fmt;
use std::ops::{AddAssign, MulAssign, Neg, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{PermError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldKind {
    Int,
    Rational,
    Complex,
}

impl FieldKind {
    pub fn is_exact(self) -> bool {
        !matches!(self, FieldKind::Complex)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            FieldKind::Int => "int",
            FieldKind::Rational => "rational",
            FieldKind::Complex => "complex",
        }
    }
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FieldKind {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "int" | "integer" => Ok(FieldKind::Int),
            "rational" => Ok(FieldKind::Rational),
            "complex" => Ok(FieldKind::Complex),
            other => Err(PermError::Malformed(format!("unknown field kind {other:?}"))),
        }
    }
}

/// Arithmetic needed by every algorithm in the crate.
///
/// Exact fields (`BigInt`, `BigRational`) compare with `==`; `Complex64`
/// comparisons go through [`Scalar::is_negligible`] with a caller tolerance.
pub trait Scalar:
    Clone
    + fmt::Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
    + Send
    + Sync
{
    const FIELD: FieldKind;

    fn from_i64(v: i64) -> Self;

    /// `self / divisor` when the quotient exists in the field. For integers
    /// the division must be exact.
    fn exact_div(&self, divisor: &Self) -> Option<Self>;

    /// Exact fields ignore `tol` and test for zero.
    fn is_negligible(&self, tol: f64) -> bool;

    fn magnitude(&self) -> f64;

    fn to_complex(&self) -> Complex64;

    fn to_json(&self) -> Value;

    fn from_json(value: &Value) -> Result<Self>;

    /// Human-readable form used by the CLI: integers and `p/q` rationals
    /// verbatim, complex values as `[re, im]`.
    fn render(&self) -> String;

    /// Field-specific fast path for Ryser's formula; `None` falls back to the
    /// generic implementation.
    fn ryser_accelerated(_entries: &[Self], _n: usize) -> Option<Self> {
        None
    }

    fn pow_u32(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc *= self;
        }
        acc
    }
}

impl Scalar for BigInt {
    const FIELD: FieldKind = FieldKind::Int;

    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }

    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    fn is_negligible(&self, _tol: f64) -> bool {
        self.is_zero()
    }

    fn magnitude(&self) -> f64 {
        self.abs().to_f64().unwrap_or(f64::INFINITY)
    }

    fn to_complex(&self) -> Complex64 {
        Complex64::new(self.to_f64().unwrap_or(f64::NAN), 0.0)
    }

    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }

    fn from_json(value: &Value) -> Result<Self> {
        match value {
            Value::String(s) => s
                .trim()
                .parse::<BigInt>()
                .map_err(|_| PermError::Malformed(format!("not an integer: {s:?}"))),
            Value::Number(num) => num
                .as_i64()
                .map(BigInt::from)
                .or_else(|| num.as_u64().map(BigInt::from))
                .ok_or_else(|| PermError::Malformed(format!("not an integer: {num}"))),
            other => Err(PermError::Malformed(format!("not an integer: {other}"))),
        }
    }

    fn render(&self) -> String {
        self.to_string()
    }

    fn ryser_accelerated(entries: &[Self], n: usize) -> Option<Self> {
        let small: Vec<i128> = entries
            .iter()
            .map(|e| e.to_i64().map(i128::from))
            .collect::<Option<_>>()?;
        crate::permanent::ryser::ryser_i128(&small, n).map(BigInt::from)
    }
}

impl Scalar for BigRational {
    const FIELD: FieldKind = FieldKind::Rational;

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        (!divisor.is_zero()).then(|| self / divisor)
    }

    fn is_negligible(&self, _tol: f64) -> bool {
        self.is_zero()
    }

    fn magnitude(&self) -> f64 {
        self.abs().to_f64().unwrap_or(f64::INFINITY)
    }

    fn to_complex(&self) -> Complex64 {
        Complex64::new(self.to_f64().unwrap_or(f64::NAN), 0.0)
    }

    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }

    fn from_json(value: &Value) -> Result<Self> {
        match value {
            Value::String(s) => parse_rational(s),
            Value::Number(_) => BigInt::from_json(value).map(BigRational::from_integer),
            other => Err(PermError::Malformed(format!("not a rational: {other}"))),
        }
    }

    fn render(&self) -> String {
        self.to_string()
    }
}

impl Scalar for Complex64 {
    const FIELD: FieldKind = FieldKind::Complex;

    fn from_i64(v: i64) -> Self {
        Complex64::new(v as f64, 0.0)
    }

    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        (!divisor.is_zero()).then(|| self / divisor)
    }

    fn is_negligible(&self, tol: f64) -> bool {
        self.norm() <= tol
    }

    fn magnitude(&self) -> f64 {
        self.norm()
    }

    fn to_complex(&self) -> Complex64 {
        *self
    }

    fn to_json(&self) -> Value {
        serde_json::json!([self.re, self.im])
    }

    fn from_json(value: &Value) -> Result<Self> {
        let real = |v: &Value| {
            v.as_f64()
                .ok_or_else(|| PermError::Malformed(format!("not a number: {v}")))
        };
        match value {
            Value::Array(pair) if pair.len() == 2 => {
                Ok(Complex64::new(real(&pair[0])?, real(&pair[1])?))
            }
            Value::Number(_) => Ok(Complex64::new(real(value)?, 0.0)),
            other => Err(PermError::Malformed(format!(
                "complex entries must be [re, im] pairs, got {other}"
            ))),
        }
    }

    fn render(&self) -> String {
        format!("[{:?}, {:?}]", self.re, self.im)
    }
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || PermError::Malformed(format!("not a rational: {s:?}"));
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => s.parse::<BigInt>().map(BigRational::from_integer).map_err(|_| bad()),
    }
}

/// A scalar of any of the three fields, as produced by type-erased entry
/// points such as [`crate::AnyMatrix`].
#[derive(Debug, Clone, PartialEq)]
pub enum AnyScalar {
    Int(BigInt),
    Rational(BigRational),
    Complex(Complex64),
}

impl AnyScalar {
    pub fn field(&self) -> FieldKind {
        match self {
            AnyScalar::Int(_) => FieldKind::Int,
            AnyScalar::Rational(_) => FieldKind::Rational,
            AnyScalar::Complex(_) => FieldKind::Complex,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            AnyScalar::Int(v) => v.to_json(),
            AnyScalar::Rational(v) => v.to_json(),
            AnyScalar::Complex(v) => v.to_json(),
        }
    }
}

impl fmt::Display for AnyScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyScalar::Int(v) => f.write_str(&v.render()),
            AnyScalar::Rational(v) => f.write_str(&v.render()),
            AnyScalar::Complex(v) => f.write_str(&v.render()),
        }
    }
}
