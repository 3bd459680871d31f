//! Exact realizability of eigenvector centrality vectors.
//!
//! Given a connected simple graph and a positive vector `c`, decide whether
//! strictly positive edge weights exist whose weighted adjacency matrix `A`
//! satisfies `A c = c` (spectral radius normalized to one), and construct
//! and verify such weights when they do.
//!
//! - [`feasibility`] decides the question from stable-set conditions.
//! - [`lp`] constructs weights with an exact rational simplex.
//! - [`fstab`] runs the equivalent ray test on the fractional stable set
//!   polytope.
//! - [`spectral`] verifies a weight assignment.
//! - [`special`] gives closed-form answers on complete, complete bipartite,
//!   star and path graphs.

pub mod cli;
pub mod error;
pub mod feasibility;
pub mod fstab;
pub mod generate;
pub mod graph;
pub mod io;
pub mod lp;
pub mod rational;
pub mod special;
pub mod spectral;
pub mod stable;
pub mod target;

pub use error::{Error, Result, ValidationError};
pub use feasibility::{check_feasibility, CheckOptions, FeasibilityVerdict};
pub use graph::{Graph, VertexSet};
pub use lp::{solve_max_min_weight, LpResult, LpStatus, WeightAssignment};
pub use rational::Rational;
pub use target::CentralityTarget;
