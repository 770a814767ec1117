//! Equation systems for row-structured decompositions of a target and a
//! numerical search for solutions of prescribed rank.

pub mod model;
pub mod solver;
pub mod system;
pub mod table;

pub use model::{jacobian, norm, residual, SolveField, SystemModel};
pub use solver::{solve, solve_system, RestartSummary, SolveReport, SolverConfig};
pub use system::{
    build_full_system, build_reduced_system, planted_full_system, CoefficientEquation, EquationKind,
};
pub use table::{orbital_exponent_table, ExponentTriple, OrbitalTable};
