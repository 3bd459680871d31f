//! Vertices of the fractional stable set polytope
//! `{ y >= 0, y_i + y_j <= 1 on edges }` and the Farkas test they drive.
//!
//! A vector `y ∈ {0, ½, 1}ⁿ` is a vertex iff its ones form a stable set `S`,
//! its zeros contain `N(S)`, and every connected component induced by its
//! halves has an odd cycle. The map `x = 2y − 1` sends the nonzero images to
//! generators of the cone `{ x : x_i + x_j <= 0 on edges }`, which is the
//! dual cone of the weight system. The weight system at slack `ε` is
//! solvable iff `q(ε)ᵀx <= 0` for every generator.

use std::collections::HashSet;
use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::lp::shifted_rhs;
use crate::rational::{ratio, Rational};
use crate::stable::enumerate_stable_sets;
use crate::target::CentralityTarget;

/// Vertex count accepted by [`brute_force_vertices`].
pub const BRUTE_FORCE_BOUND: usize = 8;

/// A vertex of the fractional stable set polytope, stored by level sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FstabVertex {
    pub n: usize,
    pub ones: VertexSet,
    pub zeros: VertexSet,
    pub halves: VertexSet,
}

impl FstabVertex {
    pub fn y(&self) -> Vec<Rational> {
        (0..self.n)
            .map(|v| {
                if self.ones.contains(v) {
                    ratio(1, 1)
                } else if self.halves.contains(v) {
                    ratio(1, 2)
                } else {
                    ratio(0, 1)
                }
            })
            .collect()
    }

    /// `x = 2y − 1`, or `None` for the all-halves vertex (the null vector).
    pub fn ray(&self) -> Option<ExtremeRay> {
        if self.halves.len() == self.n {
            return None;
        }
        let x = (0..self.n)
            .map(|v| {
                if self.ones.contains(v) {
                    1
                } else if self.halves.contains(v) {
                    0
                } else {
                    -1
                }
            })
            .collect();
        Some(ExtremeRay { x })
    }
}

impl fmt::Display for FstabVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.y().iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Which part of the Farkas system a generator belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RayClass {
    /// Entries in `{−1, 0}`: always satisfied once `q >= 0`.
    NonPositive,
    /// Entries in `{−1, 1}`: a stable set against its complement.
    Signed,
    /// Has both `0` and `1` entries.
    Mixed,
}

impl fmt::Display for RayClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RayClass::NonPositive => "non-positive",
            RayClass::Signed => "signed",
            RayClass::Mixed => "mixed",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtremeRay {
    pub x: Vec<i8>,
}

impl ExtremeRay {
    pub fn class(&self) -> RayClass {
        if !self.x.contains(&1) {
            RayClass::NonPositive
        } else if !self.x.contains(&0) {
            RayClass::Signed
        } else {
            RayClass::Mixed
        }
    }

    pub fn dot(&self, q: &[Rational]) -> Rational {
        self.x
            .iter()
            .zip(q)
            .fold(Rational::zero(), |acc, (&x, q)| match x {
                1 => acc + q,
                -1 => acc - q,
                _ => acc,
            })
    }

    /// Membership in `{ x : x_i + x_j <= 0 on edges }`.
    pub fn in_cone(&self, g: &Graph) -> bool {
        g.edges().iter().all(|&(i, j)| self.x[i] + self.x[j] <= 0)
    }
}

impl fmt::Display for ExtremeRay {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.x.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

fn require_edges(g: &Graph) -> Result<()> {
    if g.m() == 0 {
        return Err(Error::Precondition(
            "the polytope is unbounded on a graph without edges".into(),
        ));
    }
    Ok(())
}

/// All vertices, built from the level-set characterization.
///
/// Ones range over stable sets (empty set first, then enumeration order);
/// for each, the zeros are `N(S)` plus every subset of the free vertices in
/// increasing bitmask order, and the rest become halves.
pub fn enumerate_fstab_vertices(g: &Graph, bound: usize) -> Result<Vec<FstabVertex>> {
    require_edges(g)?;
    let stable_sets =
        std::iter::once(VertexSet::EMPTY).chain(enumerate_stable_sets(g, bound)?.map(|r| r.set));
    let mut seen = HashSet::new();
    let mut vertices = Vec::new();
    for ones in stable_sets {
        let forced = g.external_neighborhood(ones);
        let free: Vec<usize> = g.vertices().difference(ones.union(forced)).iter().collect();
        for pick in 0u64..1 << free.len() {
            let extra: VertexSet = free
                .iter()
                .enumerate()
                .filter(|(k, _)| pick >> k & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            let zeros = forced.union(extra);
            let halves = g.vertices().difference(ones.union(zeros));
            let odd_everywhere = g
                .induced_components(halves)
                .into_iter()
                .all(|component| g.two_coloring(component).is_none());
            if !odd_everywhere {
                continue;
            }
            let vertex = FstabVertex {
                n: g.n(),
                ones,
                zeros,
                halves,
            };
            if seen.insert(vertex) {
                vertices.push(vertex);
            }
        }
    }
    Ok(vertices)
}

/// Images `2y − 1` of the vertices, without the null vector, in vertex order.
pub fn extreme_rays(g: &Graph, bound: usize) -> Result<Vec<ExtremeRay>> {
    Ok(enumerate_fstab_vertices(g, bound)?
        .iter()
        .filter_map(FstabVertex::ray)
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RayViolation {
    pub ray: ExtremeRay,
    pub class: RayClass,
    /// `qᵀx`, positive for a violation.
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FarkasScan {
    pub passed: bool,
    pub q: Vec<Rational>,
    pub rays_checked: usize,
    /// First violated ray in canonical order.
    pub first_failure: Option<RayViolation>,
    /// Every violated ray, filled only by a full scan.
    pub failures: Vec<RayViolation>,
}

/// Evaluates `q(ε)ᵀx <= 0` on every generator.
///
/// A `full` scan keeps going after the first violation.
pub fn farkas_scan(
    g: &Graph,
    c: &CentralityTarget,
    eps: &Rational,
    full: bool,
    bound: usize,
) -> Result<FarkasScan> {
    c.check_len(g.n())?;
    if eps.is_negative() {
        return Err(Error::Precondition(format!("eps must be >= 0, got {eps}")));
    }
    let q = shifted_rhs(g, c, eps);
    let mut scan = FarkasScan {
        passed: true,
        q,
        rays_checked: 0,
        first_failure: None,
        failures: Vec::new(),
    };
    for ray in extreme_rays(g, bound)? {
        scan.rays_checked += 1;
        let value = ray.dot(&scan.q);
        if !value.is_positive() {
            continue;
        }
        let violation = RayViolation {
            class: ray.class(),
            ray,
            value,
        };
        scan.passed = false;
        if scan.first_failure.is_none() {
            scan.first_failure = Some(violation.clone());
        }
        if !full {
            break;
        }
        scan.failures.push(violation);
    }
    Ok(scan)
}

type Small = Ratio<i64>;

/// Vertices of the polytope by brute force: every choice of `n` linearly
/// independent tight constraints among `y_i >= 0` and `y_i + y_j <= 1` is
/// solved exactly and kept when feasible. Sorted and deduplicated.
///
/// Independent of the level-set characterization; used as a test oracle.
pub fn brute_force_vertices(g: &Graph) -> Result<Vec<Vec<Rational>>> {
    let n = g.n();
    if n > BRUTE_FORCE_BOUND {
        return Err(Error::ResourceLimit {
            what: "brute-force vertex enumeration",
            n,
            bound: BRUTE_FORCE_BOUND,
        });
    }
    require_edges(g)?;
    let mut constraints: Vec<Row> = (0..n)
        .map(|i| {
            let mut row = [0i64; BRUTE_FORCE_BOUND + 1];
            row[i] = 1;
            row
        })
        .collect();
    for &(i, j) in g.edges() {
        let mut row = [0i64; BRUTE_FORCE_BOUND + 1];
        row[i] = 1;
        row[j] = 1;
        row[BRUTE_FORCE_BOUND] = 1;
        constraints.push(row);
    }
    let mut search = BasisSearch {
        g,
        n,
        constraints: &constraints,
        echelon: Vec::with_capacity(n),
        found: HashSet::new(),
    };
    search.descend(0);
    let mut vertices: Vec<Vec<Small>> = search.found.into_iter().collect();
    vertices.sort();
    Ok(vertices
        .into_iter()
        .map(|v| {
            v.into_iter()
                .map(|x| ratio(*x.numer(), *x.denom()))
                .collect()
        })
        .collect())
}

/// Coefficients in `0..n`, right-hand side in the last slot.
type Row = [i64; BRUTE_FORCE_BOUND + 1];
const RHS: usize = BRUTE_FORCE_BOUND;

struct BasisSearch<'a> {
    g: &'a Graph,
    n: usize,
    constraints: &'a [Row],
    /// Integer echelon rows with their pivot column; row `k` is zero on the
    /// pivots of rows `< k`.
    echelon: Vec<(usize, Row)>,
    found: HashSet<Vec<Small>>,
}

impl BasisSearch<'_> {
    fn descend(&mut self, start: usize) {
        if self.echelon.len() == self.n {
            self.record();
            return;
        }
        let needed = self.n - self.echelon.len();
        for idx in start..self.constraints.len() {
            if self.constraints.len() - idx < needed {
                break;
            }
            let Some(reduced) = self.reduce(self.constraints[idx]) else {
                continue;
            };
            self.echelon.push(reduced);
            self.descend(idx + 1);
            self.echelon.pop();
        }
    }

    /// Eliminates existing pivots; `None` when the row becomes dependent.
    fn reduce(&self, mut row: Row) -> Option<(usize, Row)> {
        for (pivot, base) in &self.echelon {
            let factor = row[*pivot];
            if factor == 0 {
                continue;
            }
            let scale = base[*pivot];
            let mut common = 0i64;
            for k in (0..self.n).chain([RHS]) {
                row[k] = row[k] * scale - factor * base[k];
                common = common.gcd(&row[k]);
            }
            if common > 1 {
                for k in (0..self.n).chain([RHS]) {
                    row[k] /= common;
                }
            }
        }
        let pivot = (0..self.n).find(|&k| row[k] != 0)?;
        Some((pivot, row))
    }

    fn record(&mut self) {
        let mut y = vec![Small::zero(); self.n];
        for (pivot, row) in self.echelon.iter().rev() {
            let mut rest = Small::from_integer(row[RHS]);
            for (k, value) in y.iter().enumerate() {
                if k != *pivot && row[k] != 0 {
                    rest -= *value * row[k];
                }
            }
            y[*pivot] = rest / row[*pivot];
        }
        let one = Small::from_integer(1);
        let feasible = y.iter().all(|v| !v.is_negative())
            && self.g.edges().iter().all(|&(i, j)| y[i] + y[j] <= one);
        if feasible {
            self.found.insert(y);
        }
    }
}
