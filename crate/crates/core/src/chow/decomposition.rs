//! Decomposition data model.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{PermError, Result};
use crate::limits::{guard, Limits};
use crate::matrix::SquareMatrix;
use crate::monoid::{monoid_size, unrank_fun, FunctionTable};
use crate::scalar::Scalar;

/// A homogeneous, row-structured Chow decomposition
/// `Σ_{u<ρ} ∏_{i<n} (Σ_j B[u,i,j] a_ij)`: factor `i` of every term only
/// involves the variables of row `i`.
#[derive(Debug, Clone, PartialEq)]
pub struct RowStructuredDecomposition<T> {
    n: usize,
    rho: usize,
    b: Vec<T>,
}

impl<T: Scalar> RowStructuredDecomposition<T> {
    /// `b` is `B` flattened with index `(u·n + i)·n + j`.
    pub fn new(n: usize, rho: usize, b: Vec<T>) -> Result<Self> {
        if n == 0 {
            return Err(PermError::EmptyDimension);
        }
        if b.len() != rho * n * n {
            return Err(PermError::DimensionMismatch {
                expected: rho * n * n,
                found: b.len(),
            });
        }
        Ok(RowStructuredDecomposition { n, rho, b })
    }

    pub fn zeros(n: usize, rho: usize) -> Result<Self> {
        Self::new(n, rho, vec![T::zero(); rho * n * n])
    }

    /// One `n × n` coefficient matrix per term.
    pub fn from_terms(n: usize, terms: &[SquareMatrix<T>]) -> Result<Self> {
        let mut b = Vec::with_capacity(terms.len() * n * n);
        for term in terms {
            if term.n() != n {
                return Err(PermError::DimensionMismatch {
                    expected: n,
                    found: term.n(),
                });
            }
            b.extend_from_slice(term.entries());
        }
        Self::new(n, terms.len(), b)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rho(&self) -> usize {
        self.rho
    }

    pub fn as_slice(&self) -> &[T] {
        &self.b
    }

    pub fn index(&self, u: usize, i: usize, j: usize) -> usize {
        (u * self.n + i) * self.n + j
    }

    pub fn get(&self, u: usize, i: usize, j: usize) -> &T {
        &self.b[self.index(u, i, j)]
    }

    pub fn set(&mut self, u: usize, i: usize, j: usize, value: T) {
        let k = self.index(u, i, j);
        self.b[k] = value;
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> RowStructuredDecomposition<U> {
        RowStructuredDecomposition {
            n: self.n,
            rho: self.rho,
            b: self.b.iter().map(f).collect(),
        }
    }

    pub fn to_complex(&self) -> RowStructuredDecomposition<Complex64> {
        self.map(Scalar::to_complex)
    }

    fn check_n(&self, found: usize) -> Result<()> {
        if found != self.n {
            return Err(PermError::DimensionMismatch {
                expected: self.n,
                found,
            });
        }
        Ok(())
    }

    /// Coefficient of `∏_i a_{i,f(i)}`: `Σ_u ∏_i B[u, i, f(i)]`.
    pub fn coefficient(&self, f: &FunctionTable) -> Result<T> {
        self.check_n(f.n())?;
        Ok(self.coefficient_of_values(f.values()))
    }

    pub(crate) fn coefficient_of_values(&self, values: &[usize]) -> T {
        let mut total = T::zero();
        for u in 0..self.rho {
            let mut product = T::one();
            for (i, &j) in values.iter().enumerate() {
                product *= self.get(u, i, j);
                if product.is_zero() {
                    break;
                }
            }
            total += &product;
        }
        total
    }

    /// Value of the represented polynomial at the matrix `a`.
    pub fn evaluate(&self, a: &SquareMatrix<T>) -> Result<T> {
        self.check_n(a.n())?;
        let mut total = T::zero();
        for u in 0..self.rho {
            let mut product = T::one();
            for i in 0..self.n {
                let mut form = T::zero();
                for (j, aij) in a.row(i).iter().enumerate() {
                    let mut t = self.get(u, i, j).clone();
                    t *= aij;
                    form += &t;
                }
                product *= &form;
            }
            total += &product;
        }
        Ok(total)
    }

    /// Coefficients for the functions with ranks in `range` (see
    /// [`crate::monoid::lex_fun`]).
    pub fn coefficient_range(&self, range: std::ops::Range<u64>) -> Vec<T> {
        range
            .map(|k| {
                let f = unrank_fun(self.n, k).expect("rank in range");
                self.coefficient_of_values(f.values())
            })
            .collect()
    }

    /// All `n^n` coefficients indexed by function rank. Disjoint rank ranges
    /// are extracted in parallel. Guarded by [`Limits::coefficients`].
    pub fn extract_all_coefficients(&self) -> Result<Vec<T>> {
        guard("extract_all_coefficients", self.n, Limits::current().coefficients)?;
        let total = monoid_size(self.n);
        const CHUNK: u64 = 4096;
        let chunks: Vec<Vec<T>> = (0..total.div_ceil(CHUNK))
            .into_par_iter()
            .map(|c| self.coefficient_range(c * CHUNK..((c + 1) * CHUNK).min(total)))
            .collect();
        Ok(chunks.into_iter().flatten().collect())
    }
}

/// A general (possibly non-homogeneous) Chow decomposition
/// `Σ_{u<ρ} ∏_{v<d} (H[u,v,N] + Σ_{w<N} H[u,v,w] x_w)` in `N` variables.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneralDecomposition<T> {
    rho: usize,
    degree: usize,
    vars: usize,
    h: Vec<T>,
}

impl<T: Scalar> GeneralDecomposition<T> {
    /// `h` is flattened with index `(u·d + v)·(N+1) + w`.
    pub fn new(rho: usize, degree: usize, vars: usize, h: Vec<T>) -> Result<Self> {
        let expected = rho * degree * (vars + 1);
        if h.len() != expected {
            return Err(PermError::DimensionMismatch {
                expected,
                found: h.len(),
            });
        }
        Ok(GeneralDecomposition { rho, degree, vars, h })
    }

    /// Builds from explicit factors; each factor is `N` linear coefficients
    /// followed by the constant term.
    pub fn from_factors(vars: usize, degree: usize, terms: Vec<Vec<Vec<T>>>) -> Result<Self> {
        let rho = terms.len();
        let mut h = Vec::with_capacity(rho * degree * (vars + 1));
        for term in terms {
            if term.len() != degree {
                return Err(PermError::DimensionMismatch {
                    expected: degree,
                    found: term.len(),
                });
            }
            for factor in term {
                if factor.len() != vars + 1 {
                    return Err(PermError::DimensionMismatch {
                        expected: vars + 1,
                        found: factor.len(),
                    });
                }
                h.extend(factor);
            }
        }
        Self::new(rho, degree, vars, h)
    }

    pub fn rho(&self) -> usize {
        self.rho
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn get(&self, u: usize, v: usize, w: usize) -> &T {
        &self.h[(u * self.degree + v) * (self.vars + 1) + w]
    }

    pub fn as_slice(&self) -> &[T] {
        &self.h
    }

    pub fn evaluate(&self, point: &[T]) -> Result<T> {
        if point.len() != self.vars {
            return Err(PermError::DimensionMismatch {
                expected: self.vars,
                found: point.len(),
            });
        }
        let mut total = T::zero();
        for u in 0..self.rho {
            let mut product = T::one();
            for v in 0..self.degree {
                let mut form = self.get(u, v, self.vars).clone();
                for (w, x) in point.iter().enumerate() {
                    let mut t = self.get(u, v, w).clone();
                    t *= x;
                    form += &t;
                }
                product *= &form;
            }
            total += &product;
        }
        Ok(total)
    }
}
