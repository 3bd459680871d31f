//! Enumeration and classification of nonempty stable sets.
//!
//! Every nonempty stable set `S` yields one realizability condition on the
//! squared target: an equality `Σ_S c² = Σ_{N(S)} c²` when `S` touches every
//! edge ([`Family::Covering`]), and a strict inequality `Σ_S c² < Σ_{N(S)} c²`
//! otherwise ([`Family::Open`]). Most strict inequalities are implied by
//! others; [`reduce_family`] drops the two redundant kinds.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Enumeration bound used when none is configured.
pub const DEFAULT_ENUMERATION_BOUND: usize = 25;

/// Which kind of condition a stable set contributes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    /// No edge avoids the set (written `S1` in reports): equality condition.
    #[serde(rename = "S1")]
    Covering,
    /// Some edge has both endpoints outside the set (`S2`): strict inequality.
    #[serde(rename = "S2")]
    Open,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Covering => "S1",
            Family::Open => "S2",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct StableSetRecord {
    pub set: VertexSet,
    pub neighborhood: VertexSet,
    pub family: Family,
}

impl StableSetRecord {
    fn new(g: &Graph, set: VertexSet) -> Self {
        StableSetRecord {
            set,
            neighborhood: g.external_neighborhood(set),
            family: family_of(g, set),
        }
    }
}

impl fmt::Display for StableSetRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} N={} {}", self.set, self.neighborhood, self.family)
    }
}

fn family_of(g: &Graph, s: VertexSet) -> Family {
    if g.induces_edge(g.vertices().difference(s)) {
        Family::Open
    } else {
        Family::Covering
    }
}

/// Classifies a nonempty stable set.
pub fn classify(g: &Graph, s: VertexSet) -> Result<Family> {
    if s.is_empty() {
        return Err(Error::Precondition("classify needs a nonempty set".into()));
    }
    if !s.is_subset(g.vertices()) || !g.is_stable(s) {
        return Err(Error::Precondition(format!("{s} is not a stable set")));
    }
    Ok(family_of(g, s))
}

/// Depth-first producer of all nonempty stable sets.
///
/// Sets come out in lexicographic order of their sorted member lists
/// (`{1}, {1,4}, {2}, ...`): each branch extends the current set with a
/// larger vertex that is not adjacent to any member.
pub struct StableSets<'g> {
    graph: &'g Graph,
    /// (current set, vertices still available to extend it)
    stack: Vec<(VertexSet, VertexSet)>,
}

impl Iterator for StableSets<'_> {
    type Item = StableSetRecord;

    fn next(&mut self) -> Option<StableSetRecord> {
        loop {
            let (set, candidates) = self.stack.last_mut()?;
            let Some(v) = candidates.first() else {
                self.stack.pop();
                continue;
            };
            *candidates = candidates.difference(VertexSet::singleton(v));
            let extended = set.with(v);
            let remaining = candidates.difference(self.graph.adjacency(v));
            self.stack.push((extended, remaining));
            return Some(StableSetRecord::new(self.graph, extended));
        }
    }
}

/// Streams every nonempty stable set with its neighborhood and family.
///
/// Fails with [`Error::ResourceLimit`] when `g.n() > bound`.
pub fn enumerate_stable_sets(g: &Graph, bound: usize) -> Result<StableSets<'_>> {
    if g.n() > bound {
        return Err(Error::ResourceLimit {
            what: "stable set enumeration",
            n: g.n(),
            bound,
        });
    }
    Ok(StableSets {
        graph: g,
        stack: vec![(VertexSet::EMPTY, g.vertices())],
    })
}

/// True when the set splits into two nonempty parts with disjoint
/// neighborhoods, i.e. the graph on members joined when their neighborhoods
/// overlap is disconnected.
pub fn splits_into_independent_parts(g: &Graph, s: VertexSet) -> bool {
    let Some(start) = s.first() else {
        return false;
    };
    let mut reached = VertexSet::singleton(start);
    let mut frontier = reached;
    while !frontier.is_empty() {
        let mut next = VertexSet::EMPTY;
        for v in frontier.iter() {
            for u in s.difference(reached).iter() {
                if !g.adjacency(u).is_disjoint(g.adjacency(v)) {
                    next.insert(u);
                }
            }
        }
        reached = reached.union(next);
        frontier = next;
    }
    reached != s
}

/// True when a strictly larger stable set has the same neighborhood.
///
/// Such a superset exists iff a single vertex `v ∉ S ∪ N(S)` has
/// `N({v}) ⊆ N(S)`: `S ∪ {v}` is then stable with neighborhood `N(S)`, and
/// every member of a larger equal-neighborhood superset has this property.
pub fn has_equal_neighborhood_superset(g: &Graph, s: VertexSet) -> bool {
    let neighborhood = g.external_neighborhood(s);
    g.vertices()
        .difference(s.union(neighborhood))
        .iter()
        .any(|v| g.adjacency(v).is_subset(neighborhood))
}

/// Whether an `Open` set survives both redundancy prunings.
pub fn is_irredundant(g: &Graph, s: VertexSet) -> bool {
    !splits_into_independent_parts(g, s) && !has_equal_neighborhood_superset(g, s)
}

/// The `Open` stable sets whose strict inequality is not implied by others.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedFamily {
    pub sets: Vec<StableSetRecord>,
}

impl ReducedFamily {
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, s: VertexSet) -> bool {
        self.sets.iter().any(|r| r.set == s)
    }
}

/// Keeps the `Open` records that neither split into parts with disjoint
/// neighborhoods nor extend to a stable superset with the same neighborhood.
/// `Covering` records are ignored. Input order is preserved.
pub fn reduce_family(
    g: &Graph,
    records: impl IntoIterator<Item = StableSetRecord>,
) -> ReducedFamily {
    let sets = records
        .into_iter()
        .filter(|r| r.family == Family::Open && is_irredundant(g, r.set))
        .collect();
    ReducedFamily { sets }
}

/// Convenience: enumerate and reduce in one go.
pub fn reduced_family(g: &Graph, bound: usize) -> Result<ReducedFamily> {
    Ok(reduce_family(g, enumerate_stable_sets(g, bound)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    fn set(labels: &[usize]) -> VertexSet {
        VertexSet::from_labels(labels)
    }

    fn all(g: &Graph) -> Vec<StableSetRecord> {
        enumerate_stable_sets(g, DEFAULT_ENUMERATION_BOUND)
            .unwrap()
            .collect()
    }

    #[test]
    fn paw_stable_sets_are_all_open() {
        let records = all(&generate::paw());
        let sets: Vec<VertexSet> = records.iter().map(|r| r.set).collect();
        assert_eq!(
            sets,
            vec![
                set(&[1]),
                set(&[1, 4]),
                set(&[2]),
                set(&[2, 4]),
                set(&[3]),
                set(&[4])
            ]
        );
        assert!(records.iter().all(|r| r.family == Family::Open));
        assert_eq!(records[1].neighborhood, set(&[2, 3]));
    }

    #[test]
    fn k2_singletons_are_covering() {
        let records = all(&generate::complete(2));
        assert_eq!(records.len(), 2);
        assert!(records.iter().all(|r| r.family == Family::Covering));
    }

    #[test]
    fn path3_families() {
        let g = generate::path(3);
        let records = all(&g);
        let family = |s: &[usize]| records.iter().find(|r| r.set == set(s)).unwrap().family;
        assert_eq!(records.len(), 4);
        assert_eq!(family(&[2]), Family::Covering);
        assert_eq!(family(&[1, 3]), Family::Covering);
        assert_eq!(family(&[1]), Family::Open);
        assert_eq!(family(&[3]), Family::Open);
    }

    #[test]
    fn classify_examples() {
        let k23 = generate::complete_bipartite(2, 3);
        assert_eq!(classify(&k23, set(&[1, 2])).unwrap(), Family::Covering);
        assert_eq!(classify(&k23, set(&[3, 4, 5])).unwrap(), Family::Covering);
        assert_eq!(classify(&k23, set(&[3])).unwrap(), Family::Open);
        assert_eq!(classify(&generate::paw(), set(&[4])).unwrap(), Family::Open);
        assert_eq!(
            classify(&generate::complete(2), set(&[1])).unwrap(),
            Family::Covering
        );
        assert!(classify(&generate::paw(), VertexSet::EMPTY).is_err());
        assert!(classify(&generate::paw(), set(&[1, 2])).is_err());
    }

    #[test]
    fn enumeration_bound_is_enforced() {
        let g = generate::path(6);
        assert!(matches!(
            enumerate_stable_sets(&g, 5),
            Err(Error::ResourceLimit { n: 6, bound: 5, .. })
        ));
        assert!(enumerate_stable_sets(&g, 6).is_ok());
    }

    #[test]
    fn paw_reduced_family() {
        let g = generate::paw();
        let reduced = reduced_family(&g, DEFAULT_ENUMERATION_BOUND).unwrap();
        let sets: Vec<String> = reduced.sets.iter().map(|r| r.to_string()).collect();
        assert_eq!(
            sets,
            [
                "{1,4} N={2,3} S2",
                "{2,4} N={1,3} S2",
                "{3} N={1,2,4} S2",
                "{4} N={3} S2"
            ]
        );
    }

    #[test]
    fn complete_graph_keeps_all_singletons() {
        let reduced = reduced_family(&generate::complete(3), 25).unwrap();
        let sets: Vec<VertexSet> = reduced.sets.iter().map(|r| r.set).collect();
        assert_eq!(sets, vec![set(&[1]), set(&[2]), set(&[3])]);
    }

    #[test]
    fn star_leaf_subsets_are_pruned() {
        let g = generate::star(5);
        let records = all(&g);
        assert!(records
            .iter()
            .filter(|r| r.family == Family::Open)
            .all(|r| has_equal_neighborhood_superset(&g, r.set)));
        assert!(reduce_family(&g, records).is_empty());
    }

    #[test]
    fn overlap_split_detection() {
        // path 1-2-3-4-5: {1,5} has neighborhoods {2} and {4}
        let g = generate::path(5);
        assert!(splits_into_independent_parts(&g, set(&[1, 5])));
        assert!(!splits_into_independent_parts(&g, set(&[1, 3])));
        assert!(!splits_into_independent_parts(&g, set(&[3])));
    }
}
