//! Exact matrix permanents and Chow (product-rank) decompositions of the
//! permanent.
//!
//! The crate is organised around four areas:
//!
//! - [`permanent`]: the permanent by direct expansion, Ryser's and Glynn's
//!   formulas, and the Walsh–Hadamard finite-difference pipeline that unifies
//!   the latter two.
//! - [`monoid`]: the transformation monoid `Z_n^Z_n` under the two-sided
//!   action of `S_n × S_n`, its orbit/stabilizer structure and the integer
//!   partition function.
//! - [`chow`]: row-structured decompositions `Σ_u ∏_i (Σ_j B[u,i,j] a_ij)`,
//!   coefficient extraction, the Ryser and Glynn certificates and
//!   verification against a target polynomial.
//! - [`orbital`]: the coefficient-equation systems for a decomposition of a
//!   given rank and a damped least-squares search for solutions.
//!
//! Scalars are exact big integers, exact rationals or complex doubles; see
//! [`Scalar`].

pub mod chow;
pub mod error;
pub mod limits;
pub mod matrix;
pub mod monoid;
pub mod orbital;
pub mod permanent;
pub mod scalar;

pub use error::{PermError, Result};
pub use limits::{guard, Limits};
pub use matrix::{AnyMatrix, SquareMatrix};
pub use scalar::{AnyScalar, FieldKind, Scalar};
