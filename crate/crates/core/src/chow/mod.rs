//! Chow (product-rank) decompositions.

pub mod certificates;
pub mod decomposition;
pub mod io;
pub mod quadratic;
pub mod target;

pub use certificates::{build_glynn, build_ryser};
pub use decomposition::{GeneralDecomposition, RowStructuredDecomposition};
pub use io::AnyDecomposition;
pub use quadratic::{decompose_bivariate_quadratic, QuadraticCoefficients};
pub use target::{target_coefficient, verify_against_target, TargetKind, TargetSpec, VerificationReport};
