//! Functions `Z_n → Z_n`, their ranking, and the `S_n × S_n` action.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{PermError, Result};

/// Largest `n` for which `n^n` still fits the `u64` ranks of [`lex_fun`].
pub const MAX_FUNCTION_DIM: usize = 15;

/// A function `f: Z_n → Z_n` stored as its value array `(f(0), …, f(n-1))`.
/// Permutations are the bijective tables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct FunctionTable {
    values: Vec<usize>,
}

impl FunctionTable {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(PermError::EmptyDimension);
        }
        if n > MAX_FUNCTION_DIM {
            return Err(PermError::DimensionGuard {
                op: "FunctionTable",
                n,
                limit: MAX_FUNCTION_DIM,
            });
        }
        if let Some(&value) = values.iter().find(|&&v| v >= n) {
            return Err(PermError::ValueOutOfRange { value, n });
        }
        Ok(FunctionTable { values })
    }

    pub fn identity(n: usize) -> Self {
        FunctionTable {
            values: (0..n).collect(),
        }
    }

    pub fn constant(n: usize, value: usize) -> Self {
        assert!(value < n);
        FunctionTable {
            values: vec![value; n],
        }
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, i: usize) -> usize {
        self.values[i]
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.n()];
        self.values.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    /// `self ∘ inner`, i.e. `i ↦ self(inner(i))`.
    pub fn compose(&self, inner: &FunctionTable) -> Result<FunctionTable> {
        check_same_n(self, inner)?;
        Ok(FunctionTable {
            values: inner.values.iter().map(|&v| self.values[v]).collect(),
        })
    }

    pub fn inverse(&self) -> Result<FunctionTable> {
        if !self.is_bijective() {
            return Err(PermError::NotBijective);
        }
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.values.iter().enumerate() {
            inv[v] = i;
        }
        Ok(FunctionTable { values: inv })
    }

    /// The two-sided action `(σ, γ) · f = γ ∘ f ∘ σ^{-1}`.
    pub fn act(&self, sigma: &FunctionTable, gamma: &FunctionTable) -> Result<FunctionTable> {
        check_same_n(self, sigma)?;
        check_same_n(self, gamma)?;
        if !gamma.is_bijective() {
            return Err(PermError::NotBijective);
        }
        gamma.compose(&self.compose(&sigma.inverse()?)?)
    }

    /// Unchecked action for callers that already hold `σ^{-1}`.
    pub(crate) fn act_with_inverse(&self, sigma_inv: &[usize], gamma: &[usize]) -> FunctionTable {
        FunctionTable {
            values: sigma_inv.iter().map(|&k| gamma[self.values[k]]).collect(),
        }
    }

    /// Sizes `|f^{-1}(j)|` for every `j`, zeros included.
    pub fn fiber_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.n()];
        for &v in &self.values {
            sizes[v] += 1;
        }
        sizes
    }

    /// The values as a digit string, e.g. `"001"`; digits past 9 are
    /// lower-case letters.
    pub fn digit_string(&self) -> String {
        self.values
            .iter()
            .map(|&v| char::from_digit(v as u32, 36).expect("n <= 15"))
            .collect()
    }
}

impl fmt::Display for FunctionTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.digit_string())
    }
}

impl TryFrom<Vec<usize>> for FunctionTable {
    type Error = PermError;

    fn try_from(values: Vec<usize>) -> Result<Self> {
        FunctionTable::new(values)
    }
}

impl From<FunctionTable> for Vec<usize> {
    fn from(f: FunctionTable) -> Self {
        f.values
    }
}

fn check_same_n(a: &FunctionTable, b: &FunctionTable) -> Result<()> {
    if a.n() != b.n() {
        return Err(PermError::DimensionMismatch {
            expected: a.n(),
            found: b.n(),
        });
    }
    Ok(())
}

/// `n^n`, the size of the transformation monoid.
pub fn monoid_size(n: usize) -> u64 {
    (n as u64).pow(n as u32)
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Base-`n` rank `Σ_i f(i) n^i`.
pub fn lex_fun(f: &FunctionTable) -> u64 {
    let n = f.n() as u64;
    f.values.iter().rev().fold(0, |acc, &v| acc * n + v as u64)
}

pub fn unrank_fun(n: usize, index: u64) -> Result<FunctionTable> {
    if n == 0 {
        return Err(PermError::EmptyDimension);
    }
    if n > MAX_FUNCTION_DIM {
        return Err(PermError::DimensionGuard {
            op: "unrank_fun",
            n,
            limit: MAX_FUNCTION_DIM,
        });
    }
    let bound = monoid_size(n);
    if index >= bound {
        return Err(PermError::IndexOutOfRange {
            index: index.into(),
            bound: bound.into(),
        });
    }
    let mut rest = index;
    let values = (0..n)
        .map(|_| {
            let digit = (rest % n as u64) as usize;
            rest /= n as u64;
            digit
        })
        .collect();
    Ok(FunctionTable { values })
}

/// Iterates `Z_n^Z_n` in rank order.
pub fn all_functions(n: usize) -> impl Iterator<Item = FunctionTable> {
    (0..monoid_size(n)).map(move |k| unrank_fun(n, k).expect("in range"))
}

/// Factorial-number-system rank `Σ_k c_k k!` with
/// `c_k = |{i < k : σ(i) > σ(k)}|`.
pub fn lex_perm(sigma: &FunctionTable) -> Result<u64> {
    if !sigma.is_bijective() {
        return Err(PermError::NotBijective);
    }
    let v = sigma.values();
    let mut rank: u64 = 0;
    let mut weight: u64 = 1;
    for k in 0..v.len() {
        if k > 0 {
            weight *= k as u64;
        }
        let digit = v[..k].iter().filter(|&&x| x > v[k]).count() as u64;
        rank += digit * weight;
    }
    Ok(rank)
}

pub fn unrank_perm(n: usize, index: u64) -> Result<FunctionTable> {
    if n == 0 {
        return Err(PermError::EmptyDimension);
    }
    let bound = factorial(n);
    if n > MAX_FUNCTION_DIM || u128::from(index) >= bound {
        return Err(PermError::IndexOutOfRange {
            index: index.into(),
            bound,
        });
    }
    // Peel the digits c_k (0 <= c_k <= k) off the factorial base.
    let mut digits = vec![0usize; n];
    let mut rest = index;
    for (k, digit) in digits.iter_mut().enumerate().skip(1) {
        let radix = k as u64 + 1;
        *digit = (rest % radix) as usize;
        rest /= radix;
    }
    // c_k counts larger values to the left of position k, so rebuilding from
    // the right: σ(k) is the (k - c_k)-th smallest value still unused among
    // the first k+1 positions.
    let mut remaining: Vec<usize> = (0..n).collect();
    let mut values = vec![0usize; n];
    for k in (0..n).rev() {
        let pos = k - digits[k];
        values[k] = remaining.remove(pos);
    }
    Ok(FunctionTable { values })
}

/// All of `S_n`, in rank order.
pub fn all_permutations(n: usize) -> Vec<FunctionTable> {
    (0..factorial(n) as u64)
        .map(|k| unrank_perm(n, k).expect("in range"))
        .collect()
}

/// `n! · lex_perm(σ) + lex_perm(γ)`.
pub fn lex_pair(sigma: &FunctionTable, gamma: &FunctionTable) -> Result<u128> {
    check_same_n(sigma, gamma)?;
    Ok(factorial(sigma.n()) * u128::from(lex_perm(sigma)?) + u128::from(lex_perm(gamma)?))
}
