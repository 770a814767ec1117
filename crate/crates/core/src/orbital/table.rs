//! The orbital matrix as an exponent table.
//!
//! Entry `(i, j)` of the orbital matrix is the monomial
//! `∏_{(σ,γ)} Z[σ(i), γ(j), lex(σ, γ)]` in the entries of a symbolic
//! `n × n × (n!)²` array `Z`. The table stores, for each `(i, j)`, the list of
//! index triples of that product.

use serde::{Deserialize, Serialize};

use crate::error::{PermError, Result};
use crate::limits::{guard, Limits};
use crate::monoid::{all_permutations, factorial, lex_pair};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ExponentTriple {
    pub row: usize,
    pub col: usize,
    pub slice: u128,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitalTable {
    n: usize,
    entries: Vec<Vec<ExponentTriple>>,
}

impl OrbitalTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &[ExponentTriple] {
        &self.entries[i * self.n + j]
    }

    /// Number of slices of `Z`, `(n!)²`.
    pub fn slices(&self) -> u128 {
        let f = factorial(self.n);
        f * f
    }
}

/// Guarded by [`Limits::orbital_table`].
pub fn orbital_exponent_table(n: usize) -> Result<OrbitalTable> {
    if n == 0 {
        return Err(PermError::EmptyDimension);
    }
    guard("orbital_exponent_table", n, Limits::current().orbital_table)?;
    let perms = all_permutations(n);
    let mut entries = vec![Vec::with_capacity(perms.len() * perms.len()); n * n];
    for sigma in &perms {
        for gamma in &perms {
            let slice = lex_pair(sigma, gamma)?;
            for i in 0..n {
                for j in 0..n {
                    entries[i * n + j].push(ExponentTriple {
                        row: sigma.apply(i),
                        col: gamma.apply(j),
                        slice,
                    });
                }
            }
        }
    }
    Ok(OrbitalTable { n, entries })
}
