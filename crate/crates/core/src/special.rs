//! Closed-form realizability on complete, complete bipartite, star and
//! path graphs.

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::graph::{Graph, VertexSet};
use crate::rational::Rational;
use crate::target::CentralityTarget;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StructureTag {
    /// `K_n` with `n >= 3`.
    Complete,
    /// Both parts have at least two vertices; the part holding vertex 1 first.
    CompleteBipartite {
        left: VertexSet,
        right: VertexSet,
    },
    /// Includes `K2`, centered at its smaller vertex.
    Star {
        center: usize,
    },
    /// A path on at least four vertices, listed from its smaller endpoint.
    Chain {
        order: Vec<usize>,
    },
    General,
}

impl StructureTag {
    pub fn name(&self) -> &'static str {
        match self {
            StructureTag::Complete => "complete",
            StructureTag::CompleteBipartite { .. } => "complete-bipartite",
            StructureTag::Star { .. } => "star",
            StructureTag::Chain { .. } => "chain",
            StructureTag::General => "general",
        }
    }

    /// The closed-form rule applied for this structure.
    pub fn clause(&self) -> Option<&'static str> {
        match self {
            StructureTag::Complete => Some("2 max c_j^2 < sum of all c_j^2"),
            StructureTag::CompleteBipartite { .. } => {
                Some("sum of c_j^2 over one part = sum over the other")
            }
            StructureTag::Star { .. } => Some("c_center^2 = sum of leaf c_j^2"),
            StructureTag::Chain { .. } => Some(
                "same-parity prefix sums of c_j^2 strictly increase and the odd and even totals are equal",
            ),
            StructureTag::General => None,
        }
    }
}

impl fmt::Display for StructureTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureTag::CompleteBipartite { left, right } => {
                write!(f, "complete-bipartite parts {left} {right}")
            }
            StructureTag::Star { center } => write!(f, "star center {}", center + 1),
            StructureTag::Chain { order } => {
                let labels: Vec<String> = order.iter().map(|v| (v + 1).to_string()).collect();
                write!(f, "chain {}", labels.join("-"))
            }
            other => f.write_str(other.name()),
        }
    }
}

/// The most specific structure, by precedence
/// complete > star > complete bipartite > chain > general.
pub fn detect_structure(g: &Graph) -> StructureTag {
    let n = g.n();
    let m = g.m();
    if n >= 3 && m == n * (n - 1) / 2 {
        return StructureTag::Complete;
    }
    if n >= 2 {
        if let Some(color) = g.two_coloring(g.vertices()) {
            let other = g.vertices().difference(color);
            let (left, right) = if color.contains(0) {
                (color, other)
            } else {
                (other, color)
            };
            if m == left.len() * right.len() {
                return match (left.len(), right.len()) {
                    (1, _) => StructureTag::Star { center: 0 },
                    (_, 1) => StructureTag::Star {
                        center: right.first().expect("nonempty part"),
                    },
                    _ => StructureTag::CompleteBipartite { left, right },
                };
            }
        }
    }
    if n >= 4 && m == n - 1 && (0..n).all(|v| g.degree(v) <= 2) {
        let start = (0..n)
            .find(|&v| g.degree(v) == 1)
            .expect("a path has endpoints");
        let mut order = vec![start];
        let mut previous = None;
        let mut current = start;
        while let Some(&next) = g.neighbors(current).iter().find(|&&u| Some(u) != previous) {
            order.push(next);
            previous = Some(current);
            current = next;
        }
        return StructureTag::Chain { order };
    }
    StructureTag::General
}

/// `2 max c_j² < Σ c_j²`.
pub fn check_complete(c: &CentralityTarget) -> bool {
    let largest = c.squares().iter().max().expect("nonempty target");
    let total: Rational = c.squares().iter().sum();
    Rational::from_integer(2.into()) * largest < total
}

pub fn check_complete_bipartite(c: &CentralityTarget, left: VertexSet, right: VertexSet) -> bool {
    c.square_sum(left) == c.square_sum(right)
}

pub fn check_star(c: &CentralityTarget, center: usize) -> bool {
    let leaves: Rational = (0..c.len())
        .filter(|&v| v != center)
        .map(|v| c.square(v))
        .sum();
    *c.square(center) == leaves
}

/// Along the path, let `P_k` be the sum of `c²` over positions `<= k` with
/// the parity of `k`. Requires `P_1 < P_2 < … < P_{n−1}` and `P_{n−1} = P_n`.
pub fn check_chain(c: &CentralityTarget, order: &[usize]) -> bool {
    let mut prefix: [Rational; 2] = [Rational::zero(), Rational::zero()];
    let mut sums = Vec::with_capacity(order.len());
    for (k, &v) in order.iter().enumerate() {
        prefix[k % 2] += c.square(v);
        sums.push(prefix[k % 2].clone());
    }
    let Some((last, rest)) = sums.split_last() else {
        return false;
    };
    let Some(before_last) = rest.last() else {
        return false;
    };
    rest.windows(2).all(|w| w[0] < w[1]) && before_last == last
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureVerdict {
    pub feasible: bool,
    pub structure: String,
    pub clause: String,
}

/// Closed-form verdict, or `None` for graphs without a special structure.
pub fn check_structure(g: &Graph, c: &CentralityTarget) -> Option<StructureVerdict> {
    let tag = detect_structure(g);
    let feasible = match &tag {
        StructureTag::Complete => check_complete(c),
        StructureTag::CompleteBipartite { left, right } => {
            check_complete_bipartite(c, *left, *right)
        }
        StructureTag::Star { center } => check_star(c, *center),
        StructureTag::Chain { order } => check_chain(c, order),
        StructureTag::General => return None,
    };
    Some(StructureVerdict {
        feasible,
        structure: tag.to_string(),
        clause: tag
            .clause()
            .expect("special structures have a clause")
            .to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    fn target(values: &[i64]) -> CentralityTarget {
        CentralityTarget::from_integers(values).unwrap()
    }

    fn set(labels: &[usize]) -> VertexSet {
        VertexSet::from_labels(labels)
    }

    #[test]
    fn detection() {
        assert_eq!(
            detect_structure(&generate::complete(4)),
            StructureTag::Complete
        );
        assert_eq!(
            detect_structure(&generate::path(5)),
            StructureTag::Chain {
                order: vec![0, 1, 2, 3, 4]
            }
        );
        assert_eq!(
            detect_structure(&generate::cycle(4)),
            StructureTag::CompleteBipartite {
                left: set(&[1, 3]),
                right: set(&[2, 4])
            }
        );
        assert_eq!(
            detect_structure(&generate::complete(2)),
            StructureTag::Star { center: 0 }
        );
        assert_eq!(
            detect_structure(&generate::path(3)),
            StructureTag::Star { center: 1 }
        );
        assert_eq!(
            detect_structure(&generate::star(5)),
            StructureTag::Star { center: 0 }
        );
        assert_eq!(detect_structure(&generate::paw()), StructureTag::General);
        assert_eq!(detect_structure(&generate::cycle(5)), StructureTag::General);
    }

    #[test]
    fn chain_from_smaller_endpoint() {
        // 3-1-4-2 as a path
        let g = Graph::from_labels(4, &[(3, 1), (1, 4), (4, 2)]).unwrap();
        assert_eq!(
            detect_structure(&g),
            StructureTag::Chain {
                order: vec![1, 3, 0, 2]
            }
        );
    }

    #[test]
    fn complete_rule() {
        assert!(check_complete(&target(&[1, 1, 1])));
        assert!(!check_complete(&target(&[2, 1, 1])));
        assert!(check_complete(&target(&[1, 1, 1, 1])));
    }

    #[test]
    fn bipartite_rule() {
        assert!(check_complete_bipartite(
            &target(&[1, 1, 1, 1]),
            set(&[1, 3]),
            set(&[2, 4])
        ));
        assert!(!check_complete_bipartite(
            &target(&[2, 1, 1, 1]),
            set(&[1]),
            set(&[2, 3, 4])
        ));
        assert!(check_complete_bipartite(
            &target(&[2, 1, 1, 1, 1]),
            set(&[1]),
            set(&[2, 3, 4, 5])
        ));
        assert!(!check_complete_bipartite(
            &target(&[3, 3, 2, 2, 2]),
            set(&[1, 2]),
            set(&[3, 4, 5])
        ));
    }

    #[test]
    fn star_rule() {
        assert!(check_star(&target(&[2, 1, 1, 1, 1]), 0));
        assert!(!check_star(&target(&[1, 1, 1, 1]), 0));
        assert!(check_star(&target(&[3, 5, 4]), 1));
    }

    #[test]
    fn chain_rule() {
        assert!(check_chain(&target(&[3, 5, 4]), &[0, 1, 2]));
        assert!(!check_chain(&target(&[1, 1, 1]), &[0, 1, 2]));
        assert!(check_chain(&target(&[1, 2, 2, 1]), &[0, 1, 2, 3]));
        assert!(check_chain(&target(&[1, 1]), &[0, 1]));
        assert!(!check_chain(&target(&[1, 2]), &[0, 1]));
    }

    #[test]
    fn structure_verdicts() {
        let verdict = check_structure(&generate::star(5), &target(&[2, 1, 1, 1, 1])).unwrap();
        assert!(verdict.feasible);
        assert_eq!(verdict.structure, "star center 1");
        assert!(check_structure(&generate::paw(), &target(&[2, 2, 2, 1])).is_none());
    }
}
