//! Checks that a weight assignment makes `c` a true eigenvector centrality.
//!
//! The verdict is exact: zero residual in `A c = c`, positive weight on every
//! edge, and a connected support. By Perron–Frobenius these force `ρ(A) = 1`
//! as a simple eigenvalue with Perron vector `c`. The floating-point figures
//! (spectral radius, alignment with `c`, spectral gap) only confirm this.

use std::collections::VecDeque;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result, ValidationError};
use crate::graph::Graph;
use crate::lp::WeightAssignment;
use crate::rational::{to_f64, Rational};
use crate::target::CentralityTarget;

pub const DEFAULT_TOLERANCE: f64 = 1e-12;
pub const DEFAULT_MAX_ITERATIONS: usize = 1_000_000;

/// Shift added to the diagonal so that `ρ + σ` strictly dominates `−ρ + σ`
/// on bipartite supports.
const SHIFT: f64 = 1.0;

/// Symmetric weighted adjacency matrix with zero diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedAdjacency {
    entries: Vec<Vec<Rational>>,
}

impl WeightedAdjacency {
    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.entries
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(to_f64).collect())
            .collect()
    }
}

/// Places each edge weight at `(i, j)` and `(j, i)`.
///
/// Every edge needs a weight and every weight needs an edge.
pub fn build_matrix(g: &Graph, w: &WeightAssignment) -> Result<WeightedAdjacency> {
    if let Some((&(i, j), _)) = w.iter().find(|(&(i, j), _)| !g.has_edge(i, j)) {
        return Err(ValidationError::UnknownEdge(i + 1, j + 1).into());
    }
    let mut entries = vec![vec![Rational::zero(); g.n()]; g.n()];
    for &(i, j) in g.edges() {
        let weight = w.get(i, j).ok_or(Error::MissingWeight(i + 1, j + 1))?;
        entries[i][j] = weight.clone();
        entries[j][i] = weight.clone();
    }
    Ok(WeightedAdjacency { entries })
}

/// `(A c)_j − c_j` for every vertex; missing weights count as zero.
pub fn residuals(g: &Graph, w: &WeightAssignment, c: &CentralityTarget) -> Vec<Rational> {
    (0..g.n())
        .map(|j| {
            let image: Rational = g
                .neighbors(j)
                .iter()
                .filter_map(|&i| w.get(i, j).map(|w| w * c.value(i)))
                .sum();
            image - c.value(j)
        })
        .collect()
}

/// True iff every edge has a positive weight, there are no other weights,
/// and `Σ_{i ∈ N(j)} w_ij c_i = c_j` holds exactly for every `j`.
pub fn verify_exact(g: &Graph, w: &WeightAssignment, c: &CentralityTarget) -> bool {
    c.len() == g.n()
        && w.len() == g.m()
        && g.edges()
            .iter()
            .all(|&(i, j)| w.get(i, j).is_some_and(|w| w.is_positive()))
        && residuals(g, w, c).iter().all(Zero::is_zero)
}

/// Whether the graph of positive entries is connected.
pub fn check_irreducible(a: &WeightedAdjacency) -> bool {
    let n = a.n();
    if n == 0 {
        return false;
    }
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    let mut reached = 1;
    while let Some(v) = queue.pop_front() {
        for (u, entry) in a.entries[v].iter().enumerate() {
            if entry.is_positive() && !seen[u] {
                seen[u] = true;
                reached += 1;
                queue.push_back(u);
            }
        }
    }
    reached == n
}

#[derive(Clone, Debug, PartialEq)]
pub struct PowerIteration {
    pub rho: f64,
    /// Unit-norm, nonnegative.
    pub vector: Vec<f64>,
    pub iterations: usize,
}

fn multiply(a: &[Vec<f64>], x: &[f64]) -> Vec<f64> {
    a.iter()
        .map(|row| row.iter().zip(x).map(|(a, x)| a * x).sum())
        .collect()
}

fn norm(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum::<f64>().sqrt()
}

fn dot(x: &[f64], y: &[f64]) -> f64 {
    x.iter().zip(y).map(|(x, y)| x * y).sum()
}

/// Dominant eigenpair of `a` by power iteration on `a + I`.
///
/// Stops once successive unit iterates differ by less than `tol` in the max
/// norm. The eigenvalue is the Rayleigh quotient of the final iterate.
pub fn power_iteration(a: &WeightedAdjacency, tol: f64, max_iter: usize) -> Result<PowerIteration> {
    let n = a.n();
    let mut shifted = a.to_f64();
    for (i, row) in shifted.iter_mut().enumerate() {
        row[i] += SHIFT;
    }
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    for iteration in 1..=max_iter {
        let mut y = multiply(&shifted, &x);
        let length = norm(&y);
        if length == 0.0 {
            break;
        }
        y.iter_mut().for_each(|v| *v /= length);
        let change = x
            .iter()
            .zip(&y)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max);
        x = y;
        if change < tol {
            let rho = dot(&x, &multiply(&shifted, &x)) - SHIFT;
            return Ok(PowerIteration {
                rho,
                vector: x,
                iterations: iteration,
            });
        }
    }
    Err(Error::NotConverged {
        iterations: max_iter,
    })
}

/// `|λ₂| / ρ` from power iteration on the square of `A − ρ v vᵀ`.
///
/// Squaring makes the iteration converge to the largest remaining magnitude
/// regardless of sign.
fn gap_estimate(a: &[Vec<f64>], rho: f64, v: &[f64], tol: f64, max_iter: usize) -> f64 {
    let n = v.len();
    let deflated: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| a[i][j] - rho * v[i] * v[j]).collect())
        .collect();
    let project = |x: &mut Vec<f64>| {
        let along = dot(x, v);
        x.iter_mut().zip(v).for_each(|(x, v)| *x -= along * v);
    };
    let mut x: Vec<f64> = (0..n).map(|i| 1.0 + i as f64 / n as f64).collect();
    project(&mut x);
    let mut estimate = 0.0;
    for _ in 0..max_iter {
        let length = norm(&x);
        if length < 1e-300 {
            return 0.0;
        }
        x.iter_mut().for_each(|v| *v /= length);
        let mut y = multiply(&deflated, &multiply(&deflated, &x));
        project(&mut y);
        let next = dot(&x, &y).max(0.0).sqrt();
        let settled = (next - estimate).abs() < tol.max(1e-12) * next.max(1.0);
        estimate = next;
        x = y;
        if settled {
            break;
        }
    }
    if rho == 0.0 {
        return 0.0;
    }
    estimate / rho
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectralReport {
    pub exact_residual_zero: bool,
    /// Every edge weight is strictly positive.
    pub support_full: bool,
    pub irreducible: bool,
    /// Numerical diagnostics; `None` when the support is reducible or the
    /// iteration did not converge.
    pub rho_estimate: Option<f64>,
    /// Cosine between the power-iteration vector and `c`.
    pub perron_cosine: Option<f64>,
    /// `|λ₂| / ρ`.
    pub gap_estimate: Option<f64>,
    pub iterations: Option<usize>,
    pub converged: bool,
    pub residuals: Vec<Rational>,
}

impl SpectralReport {
    pub fn passed(&self) -> bool {
        self.exact_residual_zero && self.support_full && self.irreducible
    }
}

/// Runs the exact checks and, on an irreducible support, the numerical
/// confirmation.
pub fn verify(
    g: &Graph,
    w: &WeightAssignment,
    c: &CentralityTarget,
    tol: f64,
    max_iter: usize,
) -> Result<SpectralReport> {
    c.check_len(g.n())?;
    let a = build_matrix(g, w)?;
    let residuals = residuals(g, w, c);
    let mut report = SpectralReport {
        exact_residual_zero: residuals.iter().all(Zero::is_zero),
        support_full: g.edges().iter().all(|&(i, j)| a.get(i, j).is_positive()),
        irreducible: check_irreducible(&a),
        rho_estimate: None,
        perron_cosine: None,
        gap_estimate: None,
        iterations: None,
        converged: false,
        residuals,
    };
    if !report.irreducible {
        return Ok(report);
    }
    match power_iteration(&a, tol, max_iter) {
        Ok(result) => {
            let target: Vec<f64> = c.values().iter().map(to_f64).collect();
            report.perron_cosine = Some(dot(&result.vector, &target) / norm(&target));
            report.gap_estimate = Some(gap_estimate(
                &a.to_f64(),
                result.rho,
                &result.vector,
                tol,
                max_iter.min(100_000),
            ));
            report.rho_estimate = Some(result.rho);
            report.iterations = Some(result.iterations);
            report.converged = true;
        }
        Err(Error::NotConverged { .. }) => {}
        Err(other) => return Err(other),
    }
    Ok(report)
}
