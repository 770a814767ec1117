//! Rank-≤2 decompositions of bivariate quadratics
//! `P = a + b0 x0 + b1 x1 + (x0 x1) C (x0 x1)^T`.
//!
//! Adding the antisymmetric matrix `((0, α), (-α, 0))` to `C` leaves the
//! quadratic form unchanged; choosing `α` as a root of
//! `det((c00, c01+α), (c10-α, c11)) = 0` makes the adjusted matrix rank one,
//! so the form splits as a product of two linear forms. Together with the
//! affine part `(a + b0 x0 + b1 x1) · 1` that gives at most two terms.

use num_complex::Complex64;
use num_traits::Zero;

use crate::chow::decomposition::GeneralDecomposition;
use crate::error::{PermError, Result};

/// Pivot magnitude below which a root's factorization is treated as
/// degenerate and the other root is tried.
pub const PIVOT_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadraticCoefficients {
    pub a: Complex64,
    pub b0: Complex64,
    pub b1: Complex64,
    pub c00: Complex64,
    pub c01: Complex64,
    pub c10: Complex64,
    pub c11: Complex64,
}

impl QuadraticCoefficients {
    pub fn from_slice(c: &[Complex64]) -> Result<Self> {
        match *c {
            [a, b0, b1, c00, c01, c10, c11] => Ok(QuadraticCoefficients { a, b0, b1, c00, c01, c10, c11 }),
            _ => Err(PermError::Malformed(format!(
                "expected 7 coefficients a,b0,b1,c00,c01,c10,c11; got {}",
                c.len()
            ))),
        }
    }

    pub fn evaluate(&self, x0: Complex64, x1: Complex64) -> Complex64 {
        self.a
            + self.b0 * x0
            + self.b1 * x1
            + self.c00 * x0 * x0
            + (self.c01 + self.c10) * x0 * x1
            + self.c11 * x1 * x1
    }

    /// The two roots of `det((c00, c01+α), (c10-α, c11)) = 0`, i.e. of
    /// `α² + (c01 - c10) α + c00 c11 - c01 c10`:
    /// `α = ((c10 - c01) ± √((c01+c10)² - 4 c00 c11)) / 2`,
    /// principal square root, `+` first.
    pub fn alpha_roots(&self) -> [Complex64; 2] {
        let s = self.c01 + self.c10;
        let root = (s * s - 4.0 * self.c00 * self.c11).sqrt();
        let shift = self.c10 - self.c01;
        [(shift + root) / 2.0, (shift - root) / 2.0]
    }
}

/// Splits the quadratic form of `q` as `(u·x)(v·x)`, or `None` when it is
/// identically zero.
fn split_quadratic_form(q: &QuadraticCoefficients) -> Option<([Complex64; 2], [Complex64; 2])> {
    if q.c00.is_zero() && q.c11.is_zero() && (q.c01 + q.c10).is_zero() {
        return None;
    }
    let candidates = q.alpha_roots().map(|alpha| {
        let m = [[q.c00, q.c01 + alpha], [q.c10 - alpha, q.c11]];
        let (p, c) = (0..4)
            .map(|k| (k / 2, k % 2))
            .fold((0, 0), |best, (r, col)| {
                if m[r][col].norm() > m[best.0][best.1].norm() { (r, col) } else { best }
            });
        (m, p, c)
    });
    let [plus, minus] = candidates;
    let (m, p, c) = if plus.0[plus.1][plus.2].norm() >= PIVOT_TOLERANCE
        || minus.0[minus.1][minus.2].norm() <= plus.0[plus.1][plus.2].norm()
    {
        plus
    } else {
        minus
    };
    let pivot = m[p][c];
    if pivot.is_zero() {
        return None;
    }
    // Rank one: M = (column c) ⊗ (row p) / M[p][c].
    let u = [m[0][c], m[1][c]];
    let v = [m[p][0] / pivot, m[p][1] / pivot];
    Some((u, v))
}

pub fn decompose_bivariate_quadratic(q: &QuadraticCoefficients) -> GeneralDecomposition<Complex64> {
    let zero = Complex64::zero();
    let one = Complex64::new(1.0, 0.0);
    let mut terms = Vec::with_capacity(2);
    if !(q.a.is_zero() && q.b0.is_zero() && q.b1.is_zero()) {
        terms.push(vec![vec![q.b0, q.b1, q.a], vec![zero, zero, one]]);
    }
    if let Some((u, v)) = split_quadratic_form(q) {
        terms.push(vec![vec![u[0], u[1], zero], vec![v[0], v[1], zero]]);
    }
    GeneralDecomposition::from_factors(2, 2, terms).expect("factors are well-shaped")
}
