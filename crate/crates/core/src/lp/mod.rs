//! Exact linear programming: a rational simplex and the edge-weight system
//! built on it.

pub mod simplex;
mod weights;

pub use simplex::{
    simplex_solve, LinearProgram, OptimalSolution, Relation, SimplexOutcome, StandardForm,
};
pub use weights::{
    farkas_certificate, is_valid_certificate, shifted_rhs, solve_max_min_weight, system_matrix,
    LpResult, LpStatus, WeightAssignment,
};
