//! Dense two-phase primal simplex over exact rationals with Bland's rule.
//!
//! Problems are given in standard form: maximize `objective · x` subject to
//! `A x = b`, `x >= 0`. Phase one starts from an artificial identity basis;
//! when it cannot drive the artificials to zero, the final phase-one prices
//! give a Farkas certificate `y` with `yᵀA <= 0` and `yᵀb > 0`.

use num_traits::{Signed, Zero};

use crate::rational::{one, Rational};

/// `maximize objective · x  s.t.  a x = b, x >= 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardForm {
    pub a: Vec<Vec<Rational>>,
    pub b: Vec<Rational>,
    pub objective: Vec<Rational>,
}

impl StandardForm {
    pub fn rows(&self) -> usize {
        self.b.len()
    }

    pub fn columns(&self) -> usize {
        self.objective.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OptimalSolution {
    pub x: Vec<Rational>,
    pub objective: Rational,
    /// Basic column per remaining row (redundant rows are dropped).
    pub basis: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SimplexOutcome {
    Optimal(OptimalSolution),
    /// `y` with `yᵀA <= 0` componentwise and `yᵀb > 0`.
    Infeasible {
        certificate: Vec<Rational>,
    },
    Unbounded,
}

/// Small builder for inequality-form problems over nonnegative variables.
#[derive(Clone, Debug, Default)]
pub struct LinearProgram {
    objective: Vec<Rational>,
    rows: Vec<(Vec<Rational>, Relation, Rational)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    LessEq,
    Equal,
    GreaterEq,
}

impl LinearProgram {
    pub fn maximize(objective: Vec<Rational>) -> Self {
        LinearProgram {
            objective,
            rows: Vec::new(),
        }
    }

    pub fn constraint(mut self, row: Vec<Rational>, relation: Relation, rhs: Rational) -> Self {
        assert_eq!(row.len(), self.objective.len(), "row width mismatch");
        self.rows.push((row, relation, rhs));
        self
    }

    /// Adds one slack column per inequality.
    pub fn to_standard_form(&self) -> StandardForm {
        let n = self.objective.len();
        let slacks = self
            .rows
            .iter()
            .filter(|(_, rel, _)| *rel != Relation::Equal)
            .count();
        let mut a = Vec::with_capacity(self.rows.len());
        let mut slack = n;
        for (row, relation, _) in &self.rows {
            let mut full = row.clone();
            full.resize(n + slacks, Rational::zero());
            match relation {
                Relation::LessEq => {
                    full[slack] = one();
                    slack += 1;
                }
                Relation::GreaterEq => {
                    full[slack] = -one();
                    slack += 1;
                }
                Relation::Equal => {}
            }
            a.push(full);
        }
        let mut objective = self.objective.clone();
        objective.resize(n + slacks, Rational::zero());
        StandardForm {
            a,
            b: self.rows.iter().map(|(_, _, rhs)| rhs.clone()).collect(),
            objective,
        }
    }

    /// Solves and truncates the solution to the original variables.
    pub fn solve(&self) -> SimplexOutcome {
        match simplex_solve(&self.to_standard_form()) {
            SimplexOutcome::Optimal(mut solution) => {
                solution.x.truncate(self.objective.len());
                SimplexOutcome::Optimal(solution)
            }
            other => other,
        }
    }
}

struct Tableau {
    /// Rows of `[structural | artificial | rhs]`.
    rows: Vec<Vec<Rational>>,
    /// Reduced costs `c_j − c_B B⁻¹ A_j`.
    reduced: Vec<Rational>,
    basis: Vec<usize>,
    structural: usize,
    /// Columns excluding the rhs.
    columns: usize,
}

enum Step {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn width(&self) -> usize {
        self.columns
    }

    fn rhs(&self, row: usize) -> &Rational {
        &self.rows[row][self.width()]
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let pivot = self.rows[row][col].clone();
        if pivot != one() {
            for value in &mut self.rows[row] {
                *value /= &pivot;
            }
        }
        let pivot_row = std::mem::take(&mut self.rows[row]);
        for (i, other) in self.rows.iter_mut().enumerate() {
            if i == row || other[col].is_zero() {
                continue;
            }
            let factor = other[col].clone();
            for (value, p) in other.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *value -= &factor * p;
                }
            }
        }
        let factor = self.reduced[col].clone();
        if !factor.is_zero() {
            for (value, p) in self.reduced.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *value -= &factor * p;
                }
            }
        }
        self.rows[row] = pivot_row;
        self.basis[row] = col;
    }

    /// Bland's rule: lowest-index improving column, ties in the ratio test
    /// broken by the lowest basic index.
    fn optimize(&mut self, allowed: usize) -> Step {
        loop {
            let Some(col) = (0..allowed).find(|&j| self.reduced[j].is_positive()) else {
                return Step::Optimal;
            };
            let mut leaving: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let entry = &self.rows[i][col];
                if !entry.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / entry;
                let better = match &leaving {
                    None => true,
                    Some((best, best_ratio)) => {
                        ratio < *best_ratio
                            || (ratio == *best_ratio && self.basis[i] < self.basis[*best])
                    }
                };
                if better {
                    leaving = Some((i, ratio));
                }
            }
            match leaving {
                Some((row, _)) => self.pivot(row, col),
                None => return Step::Unbounded,
            }
        }
    }

    fn set_costs(&mut self, costs: &[Rational]) {
        let width = self.width();
        let mut reduced: Vec<Rational> = (0..width)
            .map(|j| costs.get(j).cloned().unwrap_or_else(Rational::zero))
            .collect();
        for (i, &basic) in self.basis.iter().enumerate() {
            let cost = costs.get(basic).cloned().unwrap_or_else(Rational::zero);
            if cost.is_zero() {
                continue;
            }
            for (value, entry) in reduced.iter_mut().zip(&self.rows[i]) {
                if !entry.is_zero() {
                    *value -= &cost * entry;
                }
            }
        }
        self.reduced = reduced;
    }

    fn objective_value(&self, costs: &[Rational]) -> Rational {
        self.basis
            .iter()
            .enumerate()
            .filter_map(|(i, &basic)| costs.get(basic).map(|c| c * self.rhs(i)))
            .fold(Rational::zero(), |acc, v| acc + v)
    }
}

/// Solves a standard-form problem exactly.
pub fn simplex_solve(lp: &StandardForm) -> SimplexOutcome {
    let m = lp.rows();
    let n = lp.columns();
    assert!(
        lp.a.iter().all(|row| row.len() == n),
        "ragged constraint matrix"
    );

    // Phase one: flip rows to b >= 0 and append one artificial per row.
    let mut signs = Vec::with_capacity(m);
    let mut rows = Vec::with_capacity(m);
    for (i, (row, rhs)) in lp.a.iter().zip(&lp.b).enumerate() {
        let negate = rhs.is_negative();
        signs.push(negate);
        let mut full: Vec<Rational> = row
            .iter()
            .map(|v| if negate { -v } else { v.clone() })
            .collect();
        full.extend((0..m).map(|k| if k == i { one() } else { Rational::zero() }));
        full.push(if negate { -rhs } else { rhs.clone() });
        rows.push(full);
    }
    let mut tableau = Tableau {
        rows,
        reduced: Vec::new(),
        basis: (n..n + m).collect(),
        structural: n,
        columns: n + m,
    };
    let phase_one_costs: Vec<Rational> = (0..n + m)
        .map(|j| if j < n { Rational::zero() } else { -one() })
        .collect();
    tableau.set_costs(&phase_one_costs);
    if let Step::Unbounded = tableau.optimize(n + m) {
        unreachable!("phase one is bounded by zero");
    }
    if tableau.objective_value(&phase_one_costs).is_negative() {
        // Price of artificial k is −1 − reduced_k; y = −price, rows unflipped.
        let certificate = (0..m)
            .map(|k| {
                let y = one() + &tableau.reduced[n + k];
                if signs[k] {
                    -y
                } else {
                    y
                }
            })
            .collect();
        return SimplexOutcome::Infeasible { certificate };
    }

    // Drive zero-level artificials out of the basis; drop redundant rows.
    let mut row = 0;
    while row < tableau.rows.len() {
        if tableau.basis[row] < n {
            row += 1;
            continue;
        }
        match (0..n).find(|&j| !tableau.rows[row][j].is_zero()) {
            Some(col) => {
                tableau.pivot(row, col);
                row += 1;
            }
            None => {
                tableau.rows.remove(row);
                tableau.basis.remove(row);
            }
        }
    }

    tableau.set_costs(&lp.objective);
    match tableau.optimize(tableau.structural) {
        Step::Unbounded => SimplexOutcome::Unbounded,
        Step::Optimal => {
            let mut x = vec![Rational::zero(); n];
            for (i, &basic) in tableau.basis.iter().enumerate() {
                x[basic] = tableau.rhs(i).clone();
            }
            SimplexOutcome::Optimal(OptimalSolution {
                objective: tableau.objective_value(&lp.objective),
                x,
                basis: tableau.basis,
            })
        }
    }
}
