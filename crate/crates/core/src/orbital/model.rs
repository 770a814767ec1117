//! Residuals and Jacobians of a coefficient-equation system as functions of
//! the flattened coefficient array `B`.
//!
//! Parameters are `B` in [`RowStructuredDecomposition`] order. Over the
//! complex field the real parts come first and the imaginary parts second,
//! and the residual vector likewise stacks real parts over imaginary parts,
//! so one real least-squares kernel serves both fields.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::chow::RowStructuredDecomposition;
use crate::error::{PermError, Result};
use crate::monoid::unrank_fun;
use crate::orbital::system::{validate_system, CoefficientEquation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SolveField {
    Real,
    Complex,
}

impl std::str::FromStr for SolveField {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "real" => Ok(SolveField::Real),
            "complex" => Ok(SolveField::Complex),
            other => Err(PermError::Malformed(format!("unknown solve field {other:?}"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SystemModel {
    n: usize,
    rho: usize,
    field: SolveField,
    /// Per equation, the value tables of its functions.
    functions: Vec<Vec<Vec<usize>>>,
    rhs: Vec<f64>,
}

impl SystemModel {
    pub fn new(n: usize, rho: usize, field: SolveField, system: &[CoefficientEquation]) -> Result<Self> {
        if n == 0 {
            return Err(PermError::EmptyDimension);
        }
        validate_system(n, system)?;
        let functions = system
            .iter()
            .map(|eq| {
                eq.functions
                    .iter()
                    .map(|&k| unrank_fun(n, k).map(|f| f.values().to_vec()))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SystemModel {
            n,
            rho,
            field,
            functions,
            rhs: system.iter().map(|eq| eq.rhs).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rho(&self) -> usize {
        self.rho
    }

    pub fn field(&self) -> SolveField {
        self.field
    }

    pub fn num_equations(&self) -> usize {
        self.rhs.len()
    }

    fn entries(&self) -> usize {
        self.rho * self.n * self.n
    }

    pub fn num_params(&self) -> usize {
        match self.field {
            SolveField::Real => self.entries(),
            SolveField::Complex => 2 * self.entries(),
        }
    }

    pub fn num_residuals(&self) -> usize {
        match self.field {
            SolveField::Real => self.num_equations(),
            SolveField::Complex => 2 * self.num_equations(),
        }
    }

    fn check_params(&self, params: &[f64]) -> Result<()> {
        if params.len() != self.num_params() {
            return Err(PermError::DimensionMismatch {
                expected: self.num_params(),
                found: params.len(),
            });
        }
        Ok(())
    }

    fn coefficients_of(&self, params: &[f64]) -> Vec<Complex64> {
        let m = self.entries();
        match self.field {
            SolveField::Real => params.iter().map(|&re| Complex64::new(re, 0.0)).collect(),
            SolveField::Complex => (0..m).map(|k| Complex64::new(params[k], params[m + k])).collect(),
        }
    }

    pub fn decomposition(&self, params: &[f64]) -> Result<RowStructuredDecomposition<Complex64>> {
        self.check_params(params)?;
        RowStructuredDecomposition::new(self.n, self.rho, self.coefficients_of(params))
    }

    /// Parameters of `d`; over the real field imaginary parts are dropped.
    pub fn params(&self, d: &RowStructuredDecomposition<Complex64>) -> Result<Vec<f64>> {
        if d.n() != self.n || d.rho() != self.rho {
            return Err(PermError::DimensionMismatch {
                expected: self.entries(),
                found: d.as_slice().len(),
            });
        }
        let b = d.as_slice();
        Ok(match self.field {
            SolveField::Real => b.iter().map(|z| z.re).collect(),
            SolveField::Complex => b.iter().map(|z| z.re).chain(b.iter().map(|z| z.im)).collect(),
        })
    }

    fn stack(&self, values: Vec<Complex64>) -> Vec<f64> {
        match self.field {
            SolveField::Real => values.iter().map(|z| z.re).collect(),
            SolveField::Complex => values.iter().map(|z| z.re).chain(values.iter().map(|z| z.im)).collect(),
        }
    }

    /// Left-hand side minus right-hand side, per equation.
    pub fn residual(&self, params: &[f64]) -> Result<Vec<f64>> {
        self.check_params(params)?;
        let b = self.coefficients_of(params);
        let (n, rho) = (self.n, self.rho);
        let values = self
            .functions
            .iter()
            .zip(&self.rhs)
            .map(|(funcs, &rhs)| {
                let mut lhs = Complex64::new(0.0, 0.0);
                for f in funcs {
                    for u in 0..rho {
                        let mut p = Complex64::new(1.0, 0.0);
                        for (i, &j) in f.iter().enumerate() {
                            p *= b[(u * n + i) * n + j];
                        }
                        lhs += p;
                    }
                }
                lhs - rhs
            })
            .collect();
        Ok(self.stack(values))
    }

    /// `∂ r / ∂ params`. The derivative of `∏_i B[u,i,f(i)]` with respect to
    /// `B[u,i0,j0]` is `[f(i0) = j0] ∏_{i≠i0} B[u,i,f(i)]`; prefix and suffix
    /// products avoid dividing by entries that may vanish.
    pub fn jacobian(&self, params: &[f64]) -> Result<DMatrix<f64>> {
        self.check_params(params)?;
        let b = self.coefficients_of(params);
        let (n, rho, m) = (self.n, self.rho, self.entries());
        let eqs = self.num_equations();
        let mut jac = DMatrix::zeros(self.num_residuals(), self.num_params());
        let mut prefix = vec![Complex64::new(0.0, 0.0); n + 1];
        let mut suffix = vec![Complex64::new(0.0, 0.0); n + 1];
        let mut grad = vec![Complex64::new(0.0, 0.0); m];
        for (e, funcs) in self.functions.iter().enumerate() {
            grad.iter_mut().for_each(|g| *g = Complex64::new(0.0, 0.0));
            for f in funcs {
                for u in 0..rho {
                    let at = |i: usize| (u * n + i) * n + f[i];
                    prefix[0] = Complex64::new(1.0, 0.0);
                    for i in 0..n {
                        prefix[i + 1] = prefix[i] * b[at(i)];
                    }
                    suffix[n] = Complex64::new(1.0, 0.0);
                    for i in (0..n).rev() {
                        suffix[i] = suffix[i + 1] * b[at(i)];
                    }
                    for i in 0..n {
                        grad[at(i)] += prefix[i] * suffix[i + 1];
                    }
                }
            }
            match self.field {
                SolveField::Real => {
                    for (k, g) in grad.iter().enumerate() {
                        jac[(e, k)] = g.re;
                    }
                }
                SolveField::Complex => {
                    // Holomorphic in B: ∂/∂Re = g, ∂/∂Im = i·g.
                    for (k, g) in grad.iter().enumerate() {
                        jac[(e, k)] = g.re;
                        jac[(e, m + k)] = -g.im;
                        jac[(eqs + e, k)] = g.im;
                        jac[(eqs + e, m + k)] = g.re;
                    }
                }
            }
        }
        Ok(jac)
    }
}

/// Residual vector of `d` against `system` over `field`.
pub fn residual(
    d: &RowStructuredDecomposition<Complex64>,
    system: &[CoefficientEquation],
    field: SolveField,
) -> Result<Vec<f64>> {
    let model = SystemModel::new(d.n(), d.rho(), field, system)?;
    model.residual(&model.params(d)?)
}

pub fn jacobian(
    d: &RowStructuredDecomposition<Complex64>,
    system: &[CoefficientEquation],
    field: SolveField,
) -> Result<DMatrix<f64>> {
    let model = SystemModel::new(d.n(), d.rho(), field, system)?;
    model.jacobian(&model.params(d)?)
}

pub fn norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}
