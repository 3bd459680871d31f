//! Connected simple undirected graphs and the vertex-set queries the rest of
//! the crate is built on.
//!
//! Vertices are 0-indexed internally. All text formats and every `Display`
//! impl use 1-based labels.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result, ValidationError};

/// Largest vertex count representable by the bitmask-backed [`VertexSet`].
pub const MAX_VERTICES: usize = 64;

/// A set of vertices stored as a bitmask (bit `i` is vertex `i`, 0-indexed).
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    /// Builds a set from 1-based vertex labels.
    pub fn from_labels(labels: &[usize]) -> Self {
        labels.iter().map(|&v| v - 1).collect()
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in increasing order (0-indexed).
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(v)
        })
    }

    /// Members as 1-based labels.
    pub fn labels(self) -> Vec<usize> {
        self.iter().map(|v| v + 1).collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = VertexSet::EMPTY;
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A connected simple undirected graph.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    /// Sorted, 0-indexed, `i < j`.
    edges: Vec<(usize, usize)>,
    neighbors: Vec<Vec<usize>>,
    adjacency: Vec<VertexSet>,
}

impl Graph {
    /// Validates and builds a graph from 0-indexed edges.
    ///
    /// Edge endpoints may be given in either order.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let graph = Self::build(n, edges)?;
        if !graph.is_connected() {
            return Err(ValidationError::Disconnected.into());
        }
        Ok(graph)
    }

    /// Same as [`Graph::new`] with 1-based labels.
    pub fn from_labels(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        for &(i, j) in edges {
            for v in [i, j] {
                if v == 0 || v > n {
                    return Err(ValidationError::VertexOutOfRange { vertex: v, n }.into());
                }
            }
        }
        Self::new(n, edges.iter().map(|&(i, j)| (i - 1, j - 1)))
    }

    fn build(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(ValidationError::Empty.into());
        }
        if n > MAX_VERTICES {
            return Err(ValidationError::TooManyVertices {
                n,
                max: MAX_VERTICES,
            }
            .into());
        }
        let mut set = BTreeSet::new();
        for (i, j) in edges {
            for v in [i, j] {
                if v >= n {
                    return Err(ValidationError::VertexOutOfRange { vertex: v + 1, n }.into());
                }
            }
            if i == j {
                return Err(ValidationError::SelfLoop(i + 1).into());
            }
            let key = (i.min(j), i.max(j));
            if !set.insert(key) {
                return Err(ValidationError::DuplicateEdge(key.0 + 1, key.1 + 1).into());
            }
        }
        let edges: Vec<_> = set.into_iter().collect();
        let mut neighbors = vec![Vec::new(); n];
        let mut adjacency = vec![VertexSet::EMPTY; n];
        for &(i, j) in &edges {
            neighbors[i].push(j);
            neighbors[j].push(i);
            adjacency[i].insert(j);
            adjacency[j].insert(i);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges,
            neighbors,
            adjacency,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted 0-indexed pairs with `i < j`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Position of edge `{i, j}` in [`Graph::edges`].
    pub fn edge_index(&self, i: usize, j: usize) -> Option<usize> {
        self.edges.binary_search(&(i.min(j), i.max(j))).ok()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn adjacency(&self, v: usize) -> VertexSet {
        self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adjacency[i].contains(j)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// `N(S)`: vertices outside `s` adjacent to some member of `s`.
    pub fn external_neighborhood(&self, s: VertexSet) -> VertexSet {
        s.iter()
            .fold(VertexSet::EMPTY, |acc, v| acc.union(self.adjacency[v]))
            .difference(s)
    }

    /// True iff no edge has both endpoints in `s`.
    pub fn is_stable(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adjacency[v].is_disjoint(s))
    }

    /// True iff the subgraph induced by `s` has at least one edge.
    pub fn induces_edge(&self, s: VertexSet) -> bool {
        !self.is_stable(s)
    }

    /// Connected components of the subgraph induced by `s`, ordered by their
    /// smallest vertex.
    pub fn induced_components(&self, s: VertexSet) -> Vec<VertexSet> {
        let mut remaining = s;
        let mut components = Vec::new();
        while let Some(start) = remaining.first() {
            let mut component = VertexSet::singleton(start);
            let mut frontier = component;
            while !frontier.is_empty() {
                let reach = frontier
                    .iter()
                    .fold(VertexSet::EMPTY, |acc, v| acc.union(self.adjacency[v]))
                    .intersection(s)
                    .difference(component);
                component = component.union(reach);
                frontier = reach;
            }
            remaining = remaining.difference(component);
            components.push(component);
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.induced_components(self.vertices()).len() == 1
    }

    /// Two-colors the subgraph induced by `s`. Returns the color-0 class
    /// (containing the smallest vertex of each component) or `None` when an
    /// odd cycle exists.
    pub fn two_coloring(&self, s: VertexSet) -> Option<VertexSet> {
        let mut color = vec![u8::MAX; self.n];
        let mut stack = Vec::new();
        for start in s.iter() {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            stack.push(start);
            while let Some(v) = stack.pop() {
                for w in self.adjacency[v].intersection(s).iter() {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        stack.push(w);
                    } else if color[w] == color[v] {
                        return None;
                    }
                }
            }
        }
        Some(s.iter().filter(|&v| color[v] == 0).collect())
    }

    /// For a connected induced subgraph, true iff it contains an odd cycle.
    pub fn is_connected_subgraph_nonbipartite(&self, s: VertexSet) -> Result<bool> {
        if self.induced_components(s).len() > 1 {
            return Err(Error::Precondition(format!(
                "subgraph induced by {s} is disconnected"
            )));
        }
        Ok(self.two_coloring(s).is_none())
    }

    /// Renders the graph in the edge-list format accepted by
    /// [`crate::io::parse_graph`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.m());
        for &(i, j) in &self.edges {
            out.push_str(&format!("{} {}\n", i + 1, j + 1));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges
            .iter()
            .map(|&(i, j)| format!("{}-{}", i + 1, j + 1))
            .collect();
        write!(f, "Graph(n={}, [{}])", self.n, edges.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    fn set(labels: &[usize]) -> VertexSet {
        VertexSet::from_labels(labels)
    }

    #[test]
    fn example_graph_neighborhoods() {
        let g = generate::paw();
        assert_eq!(g.external_neighborhood(set(&[1, 4])), set(&[2, 3]));
        assert_eq!(g.external_neighborhood(VertexSet::EMPTY), VertexSet::EMPTY);
        assert_eq!(g.external_neighborhood(set(&[3])), set(&[1, 2, 4]));
        let k2 = generate::complete(2);
        assert_eq!(k2.external_neighborhood(set(&[1])), set(&[2]));
    }

    #[test]
    fn stability() {
        let g = generate::paw();
        assert!(g.is_stable(set(&[1, 4])));
        assert!(!g.is_stable(set(&[1, 2])));
        assert!(g.is_stable(VertexSet::EMPTY));
    }

    #[test]
    fn odd_cycle_detection() {
        let k3 = generate::complete(3);
        assert!(k3
            .is_connected_subgraph_nonbipartite(k3.vertices())
            .unwrap());
        let p3 = generate::path(3);
        assert!(!p3
            .is_connected_subgraph_nonbipartite(p3.vertices())
            .unwrap());
        let c5 = generate::cycle(5);
        assert!(c5
            .is_connected_subgraph_nonbipartite(c5.vertices())
            .unwrap());
        let c4 = generate::cycle(4);
        assert!(!c4
            .is_connected_subgraph_nonbipartite(c4.vertices())
            .unwrap());
    }

    #[test]
    fn odd_cycle_check_requires_connected_subgraph() {
        let p3 = generate::path(3);
        let err = p3.is_connected_subgraph_nonbipartite(set(&[1, 3]));
        assert!(matches!(err, Err(Error::Precondition(_))));
    }

    #[test]
    fn rejects_invalid_graphs() {
        assert!(matches!(
            Graph::from_labels(4, &[(1, 2), (3, 4)]),
            Err(Error::Validation(ValidationError::Disconnected))
        ));
        assert!(matches!(
            Graph::from_labels(2, &[(1, 1)]),
            Err(Error::Validation(ValidationError::SelfLoop(1)))
        ));
        assert!(matches!(
            Graph::from_labels(2, &[(1, 2), (2, 1)]),
            Err(Error::Validation(ValidationError::DuplicateEdge(1, 2)))
        ));
        assert!(matches!(
            Graph::from_labels(2, &[(1, 3)]),
            Err(Error::Validation(ValidationError::VertexOutOfRange {
                vertex: 3,
                n: 2
            }))
        ));
        assert!(matches!(
            Graph::new(0, []),
            Err(Error::Validation(ValidationError::Empty))
        ));
    }

    #[test]
    fn single_vertex_is_connected() {
        let g = Graph::new(1, []).unwrap();
        assert_eq!(g.m(), 0);
        assert!(g.is_connected());
    }

    #[test]
    fn components_of_induced_subgraph() {
        let g = generate::path(5);
        let comps = g.induced_components(set(&[1, 2, 4, 5]));
        assert_eq!(comps, vec![set(&[1, 2]), set(&[4, 5])]);
    }

    #[test]
    fn vertex_set_display_is_one_based() {
        assert_eq!(set(&[1, 4]).to_string(), "{1,4}");
        assert_eq!(VertexSet::EMPTY.to_string(), "{}");
    }
}
