//! The edge-weight system `A c = c` as a linear program.
//!
//! Rows are scaled by `c_j`, so vertex `j` reads
//! `Σ_{i ∈ N(j)} w_ij c_i c_j = c_j²`. Substituting `w = z + ε` with
//! `z >= 0` gives `B z = q(ε)` where `B[k, {i,j}] = c_i c_j` for `k ∈ {i,j}`
//! and `q_j(ε) = c_j² − ε Σ_{i ∈ N(j)} c_i c_j`.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::simplex::{simplex_solve, SimplexOutcome, StandardForm};
use crate::graph::Graph;
use crate::rational::Rational;
use crate::target::CentralityTarget;

/// Edge weights keyed by 0-indexed `(i, j)` with `i < j`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightAssignment {
    weights: BTreeMap<(usize, usize), Rational>,
}

impl WeightAssignment {
    pub fn from_map(weights: BTreeMap<(usize, usize), Rational>) -> Self {
        WeightAssignment { weights }
    }

    /// One weight per edge of `g`, in edge order.
    pub fn from_edge_values(g: &Graph, values: Vec<Rational>) -> Self {
        assert_eq!(values.len(), g.m());
        WeightAssignment {
            weights: g.edges().iter().copied().zip(values).collect(),
        }
    }

    /// Builds from 1-based labels.
    pub fn from_labels(entries: &[((usize, usize), Rational)]) -> Self {
        WeightAssignment {
            weights: entries
                .iter()
                .map(|&((i, j), ref w)| ((i.min(j) - 1, i.max(j) - 1), w.clone()))
                .collect(),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&Rational> {
        self.weights.get(&(i.min(j), i.max(j)))
    }

    pub fn set(&mut self, i: usize, j: usize, w: Rational) {
        self.weights.insert((i.min(j), i.max(j)), w);
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize), &Rational)> {
        self.weights.iter()
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn min_weight(&self) -> Option<&Rational> {
        self.weights.values().min()
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.weights.values().all(|w| w.is_positive())
    }

    /// `{"i-j": "p/q"}` with 1-based labels.
    pub fn to_json_map(&self) -> BTreeMap<String, String> {
        self.weights
            .iter()
            .map(|((i, j), w)| (format!("{}-{}", i + 1, j + 1), w.to_string()))
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LpStatus {
    /// The optimal minimum weight is positive.
    StrictlyFeasible,
    /// Nonnegative solutions exist but every one has a zero weight.
    BoundaryOnly,
    /// No nonnegative solution.
    Infeasible,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpResult {
    pub status: LpStatus,
    /// Optimal minimum edge weight; `None` when infeasible.
    pub epsilon_star: Option<Rational>,
    /// The optimal weights (nonnegative, possibly with zeros on the
    /// boundary); `None` when infeasible.
    pub weights: Option<WeightAssignment>,
}

impl LpResult {
    /// The strictly positive solution, when one exists.
    pub fn assignment(&self) -> Option<&WeightAssignment> {
        match self.status {
            LpStatus::StrictlyFeasible => self.weights.as_ref(),
            _ => None,
        }
    }
}

/// The matrix `B` (vertices × edges) of the scaled weight system.
pub fn system_matrix(g: &Graph, c: &CentralityTarget) -> Vec<Vec<Rational>> {
    let mut b = vec![vec![Rational::zero(); g.m()]; g.n()];
    for (e, &(i, j)) in g.edges().iter().enumerate() {
        let product = c.value(i) * c.value(j);
        b[i][e] = product.clone();
        b[j][e] = product;
    }
    b
}

/// `q(ε)` with `q_j = c_j² − ε Σ_{i ∈ N(j)} c_i c_j`.
pub fn shifted_rhs(g: &Graph, c: &CentralityTarget, eps: &Rational) -> Vec<Rational> {
    (0..g.n())
        .map(|j| {
            let spread: Rational = g
                .neighbors(j)
                .iter()
                .map(|&i| c.value(i) * c.value(j))
                .sum();
            c.square(j) - eps * spread
        })
        .collect()
}

/// Maximizes the smallest edge weight over all solutions of `A c = c` with
/// nonnegative weights.
///
/// Variables are `z_e = w_e − ε >= 0` and `ε >= 0`; the terminal Bland basis
/// determines which optimal assignment is returned.
pub fn solve_max_min_weight(g: &Graph, c: &CentralityTarget) -> LpResult {
    let m = g.m();
    let mut a = system_matrix(g, c);
    let rhs = shifted_rhs(g, c, &Rational::zero());
    for (j, row) in a.iter_mut().enumerate() {
        let spread: Rational = g
            .neighbors(j)
            .iter()
            .map(|&i| c.value(i) * c.value(j))
            .sum();
        row.push(spread);
    }
    let mut objective = vec![Rational::zero(); m + 1];
    objective[m] = crate::rational::one();
    let lp = StandardForm {
        a,
        b: rhs,
        objective,
    };
    match simplex_solve(&lp) {
        SimplexOutcome::Optimal(solution) => {
            let eps = solution.x[m].clone();
            let weights = solution.x[..m].iter().map(|z| z + &eps).collect();
            let status = if eps.is_positive() {
                LpStatus::StrictlyFeasible
            } else {
                LpStatus::BoundaryOnly
            };
            LpResult {
                status,
                epsilon_star: Some(eps),
                weights: Some(WeightAssignment::from_edge_values(g, weights)),
            }
        }
        SimplexOutcome::Infeasible { .. } => LpResult {
            status: LpStatus::Infeasible,
            epsilon_star: None,
            weights: None,
        },
        // Every vertex of a graph with an edge bounds ε through its own row.
        SimplexOutcome::Unbounded => unreachable!("minimum weight is bounded"),
    }
}

/// For a given `ε >= 0`, returns `x` with `qᵀx > 0` and `Bᵀx <= 0` when the
/// system `B z = q(ε)`, `z >= 0` has no solution, and `None` otherwise.
pub fn farkas_certificate(
    g: &Graph,
    c: &CentralityTarget,
    eps: &Rational,
) -> Option<Vec<Rational>> {
    let lp = StandardForm {
        a: system_matrix(g, c),
        b: shifted_rhs(g, c, eps),
        objective: vec![Rational::zero(); g.m()],
    };
    match simplex_solve(&lp) {
        SimplexOutcome::Infeasible { certificate } => Some(certificate),
        _ => None,
    }
}

/// Checks `qᵀx > 0` and `Bᵀx <= 0` by direct substitution.
pub fn is_valid_certificate(
    g: &Graph,
    c: &CentralityTarget,
    eps: &Rational,
    x: &[Rational],
) -> bool {
    if x.len() != g.n() {
        return false;
    }
    let q = shifted_rhs(g, c, eps);
    let qx: Rational = q.iter().zip(x).map(|(q, x)| q * x).sum();
    let columns_ok = g
        .edges()
        .iter()
        .all(|&(i, j)| !(c.value(i) * c.value(j) * (&x[i] + &x[j])).is_positive());
    qx.is_positive() && columns_ok
}
