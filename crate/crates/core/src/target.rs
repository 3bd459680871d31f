use num_traits::Signed;

use crate::error::{Result, ValidationError};
use crate::graph::VertexSet;
use crate::rational::{sum, Rational};

/// A strictly positive candidate centrality vector together with its
/// componentwise squares.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralityTarget {
    values: Vec<Rational>,
    squares: Vec<Rational>,
}

impl CentralityTarget {
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        if values.is_empty() {
            return Err(ValidationError::Empty.into());
        }
        if let Some(index) = values.iter().position(|v| !v.is_positive()) {
            return Err(ValidationError::NonPositive { index: index + 1 }.into());
        }
        let squares = values.iter().map(|v| v * v).collect();
        Ok(CentralityTarget { values, squares })
    }

    pub fn from_integers(values: &[i64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| crate::rational::int(v)).collect())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn value(&self, v: usize) -> &Rational {
        &self.values[v]
    }

    pub fn squares(&self) -> &[Rational] {
        &self.squares
    }

    pub fn square(&self, v: usize) -> &Rational {
        &self.squares[v]
    }

    /// `Σ_{j ∈ s} c_j²`.
    pub fn square_sum(&self, s: VertexSet) -> Rational {
        sum(s.iter().map(|v| &self.squares[v]))
    }

    /// The target multiplied by a positive rational.
    pub fn scaled(&self, factor: &Rational) -> Result<Self> {
        Self::new(self.values.iter().map(|v| v * factor).collect())
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<()> {
        if self.len() != n {
            return Err(ValidationError::LengthMismatch {
                expected: n,
                found: self.len(),
            }
            .into());
        }
        Ok(())
    }

    /// One value per line, the format read by [`crate::io::parse_target`].
    pub fn to_text(&self) -> String {
        self.values.iter().map(|v| format!("{v}\n")).collect()
    }
}
