//! Exact realizability decision over stable sets.
//!
//! A positive target `c` is the eigenvector centrality of `g` for some
//! strictly positive edge weights iff every covering stable set balances,
//! `Σ_S c² = Σ_{N(S)} c²`, and every open stable set is strictly dominated,
//! `Σ_S c² < Σ_{N(S)} c²`. All comparisons are exact.

use std::fmt::Write as _;

use crate::error::Result;
use crate::graph::Graph;
use crate::rational::Rational;
use crate::stable::{self, Family, StableSetRecord, DEFAULT_ENUMERATION_BOUND};
use crate::target::CentralityTarget;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    /// Only test open sets that survive redundancy pruning.
    pub use_reduced: bool,
    /// Keep scanning after the first violation and collect all of them.
    pub all_witnesses: bool,
    pub enumeration_bound: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            use_reduced: false,
            all_witnesses: false,
            enumeration_bound: DEFAULT_ENUMERATION_BOUND,
        }
    }
}

impl CheckOptions {
    pub fn reduced() -> Self {
        CheckOptions {
            use_reduced: true,
            ..Self::default()
        }
    }
}

/// A stable set whose condition fails, with both sides of the condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub record: StableSetRecord,
    /// `Σ_{j ∈ S} c_j²`
    pub lhs: Rational,
    /// `Σ_{j ∈ N(S)} c_j²`
    pub rhs: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasibilityVerdict {
    pub feasible: bool,
    /// First violation in enumeration order; present iff infeasible.
    pub witness: Option<Violation>,
    /// Every violation, filled only with `all_witnesses`.
    pub violations: Vec<Violation>,
    pub conditions_checked: usize,
    pub used_reduced: bool,
}

/// Decides realizability of `c` on `g`.
///
/// Conditions are evaluated in stable-set enumeration order; without
/// `all_witnesses` the scan stops at the first failure.
pub fn check_feasibility(
    g: &Graph,
    c: &CentralityTarget,
    options: &CheckOptions,
) -> Result<FeasibilityVerdict> {
    c.check_len(g.n())?;
    let mut verdict = FeasibilityVerdict {
        feasible: true,
        witness: None,
        violations: Vec::new(),
        conditions_checked: 0,
        used_reduced: options.use_reduced,
    };
    for record in stable::enumerate_stable_sets(g, options.enumeration_bound)? {
        if options.use_reduced
            && record.family == Family::Open
            && !stable::is_irredundant(g, record.set)
        {
            continue;
        }
        verdict.conditions_checked += 1;
        let lhs = c.square_sum(record.set);
        let rhs = c.square_sum(record.neighborhood);
        let holds = match record.family {
            Family::Covering => lhs == rhs,
            Family::Open => lhs < rhs,
        };
        if holds {
            continue;
        }
        let violation = Violation { record, lhs, rhs };
        verdict.feasible = false;
        if verdict.witness.is_none() {
            verdict.witness = Some(violation.clone());
        }
        if !options.all_witnesses {
            break;
        }
        verdict.violations.push(violation);
    }
    Ok(verdict)
}

pub fn describe_violation(v: &Violation) -> String {
    match v.record.family {
        Family::Covering => format!(
            "S = {} ({}), N(S) = {}: equality fails, {} != {}",
            v.record.set, v.record.family, v.record.neighborhood, v.lhs, v.rhs
        ),
        Family::Open => format!(
            "S = {} ({}), N(S) = {}: strict inequality fails, {} is not < {}",
            v.record.set, v.record.family, v.record.neighborhood, v.lhs, v.rhs
        ),
    }
}

/// Human-readable report for a verdict.
pub fn explain(verdict: &FeasibilityVerdict) -> String {
    let mut out = String::new();
    if verdict.feasible {
        let _ = write!(
            out,
            "feasible: all {} conditions hold",
            verdict.conditions_checked
        );
        return out;
    }
    let witness = verdict
        .witness
        .as_ref()
        .expect("infeasible verdict carries a witness");
    let _ = write!(out, "infeasible: {}", describe_violation(witness));
    if verdict.violations.len() > 1 {
        let _ = write!(out, "\n{} violated conditions:", verdict.violations.len());
        for v in &verdict.violations {
            let _ = write!(out, "\n  {}", describe_violation(v));
        }
    }
    out
}
