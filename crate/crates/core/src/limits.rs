//! Dimension guards for the operations whose cost grows factorially or
//! exponentially in `n`.

use std::sync::OnceLock;

use crate::error::{PermError, Result};

/// Setting this variable to any non-empty value other than `0` lifts every
/// dimension guard. Nothing stops an `n = 12` naive permanent from running for
/// hours once it is set.
pub const GUARD_OVERRIDE_VAR: &str = "PERMCHOW_GUARD_OVERRIDE";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// Direct `n!` expansion of the permanent.
    pub naive: usize,
    /// Ryser, Glynn and the Hadamard pipeline (`2^n` terms).
    pub exponential: usize,
    /// Explicit orbit enumeration over all `(n!)^2` group pairs.
    pub orbit: usize,
    /// Class enumeration.
    pub classes: usize,
    /// Extraction or verification of all `n^n` coefficients.
    pub coefficients: usize,
    /// Assembly of the full and reduced equation systems.
    pub systems: usize,
    /// Numerical decomposition search.
    pub solver: usize,
    /// Orbital exponent table (`n^2 (n!)^2` triples).
    pub orbital_table: usize,
    /// Materialising a Ryser or Glynn certificate (`~2^n n^2` entries).
    pub certificates: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            naive: 10,
            exponential: 30,
            orbit: 5,
            classes: 6,
            coefficients: 7,
            systems: 5,
            solver: 4,
            orbital_table: 4,
            certificates: 16,
        }
    }
}

impl Limits {
    pub fn unlimited() -> Self {
        Limits {
            naive: usize::MAX,
            exponential: 62,
            orbit: usize::MAX,
            classes: usize::MAX,
            coefficients: usize::MAX,
            systems: usize::MAX,
            solver: usize::MAX,
            orbital_table: usize::MAX,
            certificates: 62,
        }
    }

    /// The process-wide limits: defaults, or unlimited when
    /// [`GUARD_OVERRIDE_VAR`] is set. Read once.
    pub fn current() -> &'static Limits {
        static CURRENT: OnceLock<Limits> = OnceLock::new();
        CURRENT.get_or_init(|| match std::env::var(GUARD_OVERRIDE_VAR) {
            Ok(v) if !v.is_empty() && v != "0" => Limits::unlimited(),
            _ => Limits::default(),
        })
    }
}

/// `Err(DimensionGuard)` when `n > limit`.
pub fn guard(op: &'static str, n: usize, limit: usize) -> Result<()> {
    if n > limit {
        Err(PermError::DimensionGuard { op, n, limit })
    } else {
        Ok(())
    }
}
