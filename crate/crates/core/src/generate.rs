//! Graph families, exhaustive small-graph catalogs and target generators.
//!
//! The realizable-target generator works on edge "flows" `u_ij = w_ij c_i c_j`:
//! a target is realizable exactly when positive flows exist whose sums at
//! every vertex `j` equal `c_j²`. Choosing the flows first and solving for
//! rational `c` along a spanning tree yields exact feasible instances for any
//! connected graph with at least two vertices.

use std::collections::{HashSet, VecDeque};

use num_traits::{Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{int, ratio, Rational};
use crate::target::CentralityTarget;

fn labeled(n: usize, edges: Vec<(usize, usize)>) -> Graph {
    Graph::new(n, edges).expect("generated graph is valid")
}

pub fn complete(n: usize) -> Graph {
    let edges = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    labeled(n, edges)
}

/// Path `1 - 2 - ... - n`.
pub fn path(n: usize) -> Graph {
    labeled(n, (1..n).map(|i| (i - 1, i)).collect())
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((0, n - 1));
    labeled(n, edges)
}

/// Star with center `1` and leaves `2..=n`.
pub fn star(n: usize) -> Graph {
    labeled(n, (1..n).map(|j| (0, j)).collect())
}

/// `K_{a,b}` with parts `{1..a}` and `{a+1..a+b}`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a)
        .flat_map(|i| (a..a + b).map(move |j| (i, j)))
        .collect();
    labeled(a + b, edges)
}

/// Triangle `1 2 3` with a pendant vertex `4` attached to `3`.
pub fn paw() -> Graph {
    labeled(4, vec![(0, 1), (0, 2), (1, 2), (2, 3)])
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

/// Every connected labeled graph on `n` vertices, obtained by filtering all
/// edge subsets of `K_n`. Practical for `n <= 6`.
pub fn connected_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let all = pairs(n);
    assert!(all.len() < 32, "too many vertex pairs to enumerate");
    (0u32..1 << all.len()).filter_map(move |mask| {
        let edges = all
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e);
        Graph::new(n, edges).ok()
    })
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices (`n <= 8`). Representatives are sorted by edge count, then code.
pub fn connected_graphs_up_to_isomorphism(n: usize) -> Vec<Graph> {
    assert!(
        (1..=8).contains(&n),
        "isomorphism catalog supports 1..=8 vertices"
    );
    let all = pairs(n);
    let mut level: HashSet<u32> = HashSet::from([0]);
    let mut every: Vec<u32> = vec![0];
    for _ in 0..all.len() {
        let mut next = HashSet::new();
        for &code in &level {
            for k in 0..all.len() {
                if code >> k & 1 == 0 {
                    next.insert(canonical_code(n, &all, code | 1 << k));
                }
            }
        }
        every.extend(next.iter().copied());
        level = next;
    }
    let mut graphs: Vec<(u32, u32, Graph)> = every
        .into_iter()
        .filter_map(|code| {
            let edges = all
                .iter()
                .enumerate()
                .filter(|(k, _)| code >> k & 1 == 1)
                .map(|(_, &e)| e);
            Graph::new(n, edges)
                .ok()
                .map(|g| (code.count_ones(), code, g))
        })
        .collect();
    graphs.sort_by_key(|(m, code, _)| (*m, *code));
    graphs.into_iter().map(|(_, _, g)| g).collect()
}

fn pair_position(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = (i.min(j), i.max(j));
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// Minimum edge code over relabelings that respect a degree-based vertex
/// partition. The partition is isomorphism invariant, so the minimum is too.
fn canonical_code(n: usize, all: &[(usize, usize)], code: u32) -> u32 {
    let mut adj = vec![0u32; n];
    for (k, &(i, j)) in all.iter().enumerate() {
        if code >> k & 1 == 1 {
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
    }
    let degree = |v: usize| adj[v].count_ones();
    let signature: Vec<(u32, Vec<u32>)> = (0..n)
        .map(|v| {
            let mut nd: Vec<u32> = (0..n)
                .filter(|&w| adj[v] >> w & 1 == 1)
                .map(degree)
                .collect();
            nd.sort_unstable();
            (degree(v), nd)
        })
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| signature[a].cmp(&signature[b]));
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in &order {
        match classes.last_mut() {
            Some(class) if signature[class[0]] == signature[v] => class.push(v),
            _ => classes.push(vec![v]),
        }
    }
    let mut best = u32::MAX;
    let mut mapping = vec![0usize; n];
    assign_classes(&classes, 0, 0, &mut mapping, &mut |mapping| {
        let mut relabeled = 0u32;
        for (k, &(i, j)) in all.iter().enumerate() {
            if code >> k & 1 == 1 {
                relabeled |= 1 << pair_position(n, mapping[i], mapping[j]);
            }
        }
        best = best.min(relabeled);
    });
    best
}

fn assign_classes(
    classes: &[Vec<usize>],
    class: usize,
    offset: usize,
    mapping: &mut [usize],
    visit: &mut impl FnMut(&[usize]),
) {
    let Some(members) = classes.get(class) else {
        visit(mapping);
        return;
    };
    let mut members = members.clone();
    permute(&mut members, 0, &mut |perm| {
        for (k, &v) in perm.iter().enumerate() {
            mapping[v] = offset + k;
        }
        assign_classes(classes, class + 1, offset + perm.len(), mapping, visit);
    });
}

fn permute(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

/// Random connected graph: a random spanning tree plus each remaining pair
/// with probability `density`.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, density: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for (i, j) in pairs(n) {
        if !edges.contains(&(i, j)) && rng.gen_bool(density) {
            edges.push((i, j));
        }
    }
    labeled(n, edges)
}

/// Uniform rational with numerator in `1..=max_num` and denominator in
/// `1..=max_den`.
pub fn random_rational<R: Rng>(rng: &mut R, max_num: i64, max_den: i64) -> Rational {
    ratio(rng.gen_range(1..=max_num), rng.gen_range(1..=max_den))
}

pub fn random_target<R: Rng>(
    rng: &mut R,
    n: usize,
    max_num: i64,
    max_den: i64,
) -> CentralityTarget {
    CentralityTarget::new(
        (0..n)
            .map(|_| random_rational(rng, max_num, max_den))
            .collect(),
    )
    .expect("random entries are positive")
}

/// Positive `(x, y)` with `x² − y² = difference` for `difference > 0`,
/// parametrized by `x − y = t` with `0 < t < sqrt(difference)`.
pub fn difference_of_squares(difference: &Rational, t: &Rational) -> (Rational, Rational) {
    let quotient = difference / t;
    let two = int(2);
    ((&quotient + t) / &two, (&quotient - t) / &two)
}

/// Smallest positive integer whose square exceeds `bound`.
fn integer_above_sqrt(bound: &Rational) -> Rational {
    let mut k = crate::rational::to_f64(bound).max(0.0).sqrt().floor() as i64;
    while int(k) * int(k) <= *bound {
        k += 1;
    }
    int(k.max(1))
}

/// Rational `x` with `x² > lower` drawn above the integer square-root bound.
fn value_above<R: Rng>(rng: &mut R, lower: &Rational) -> Rational {
    integer_above_sqrt(lower) + random_rational(rng, 6, 4) - int(1) / int(2)
}

/// Picks `(x, y)` with `x² − y² = difference` (any sign), `x² > need_x` and
/// `y² > need_y`.
fn matched_pair<R: Rng>(
    rng: &mut R,
    difference: &Rational,
    need_x: &Rational,
    need_y: &Rational,
) -> (Rational, Rational) {
    if difference.is_zero() {
        let bound = if need_x > need_y { need_x } else { need_y };
        let v = value_above(rng, bound);
        return (v.clone(), v);
    }
    if difference.is_negative() {
        let (y, x) = matched_pair(rng, &-difference, need_y, need_x);
        return (x, y);
    }
    let mut t = random_rational(rng, 3, 2);
    loop {
        if &t * &t < *difference {
            let (x, y) = difference_of_squares(difference, &t);
            if &y * &y > *need_y && &x * &x > *need_x {
                return (x, y);
            }
        }
        t /= int(2);
    }
}

/// A target that is realizable on `g` with strictly positive weights, except
/// that each non-tree edge carries zero flow with probability `zero_flow`
/// (which can push the instance onto the boundary).
///
/// Requires `g.n() >= 2`.
pub fn realizable_target<R: Rng>(rng: &mut R, g: &Graph, zero_flow: f64) -> CentralityTarget {
    let n = g.n();
    assert!(n >= 2, "realizable targets need at least one edge");
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::from([0usize]);
    parent[0] = 0;
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &w in g.neighbors(v) {
            if parent[w] == usize::MAX {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    let mut assigned = vec![Rational::zero(); n];
    for &(i, j) in g.edges() {
        if parent[i] == j || parent[j] == i {
            continue;
        }
        let flow = if rng.gen_bool(zero_flow) {
            Rational::zero()
        } else {
            random_rational(rng, 9, 4)
        };
        assigned[i] += &flow;
        assigned[j] += &flow;
    }
    let root = 0;
    // The root's last child closes the system together with the root: both
    // values must be rational and share the one remaining tree edge.
    let closing = *order
        .iter()
        .rev()
        .find(|&&v| v != root && parent[v] == root)
        .expect("connected graph with n >= 2 has a child of the root");
    let mut values = vec![Rational::zero(); n];
    for &v in order.iter().rev().filter(|&&v| v != root && v != closing) {
        let c = value_above(rng, &assigned[v]);
        let flow = &c * &c - &assigned[v];
        assigned[parent[v]] += &flow;
        values[v] = c;
    }
    let difference = &assigned[root] - &assigned[closing];
    let (x, y) = matched_pair(rng, &difference, &assigned[root], &assigned[closing]);
    values[root] = x;
    values[closing] = y;
    CentralityTarget::new(values).expect("constructed values are positive")
}

/// Structures emitted by the `gen` fixture generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixtureKind {
    Complete,
    Bipartite,
    Star,
    Chain,
    RandomConnected,
}

impl std::str::FromStr for FixtureKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "complete" => FixtureKind::Complete,
            "bipartite" => FixtureKind::Bipartite,
            "star" => FixtureKind::Star,
            "chain" => FixtureKind::Chain,
            "random-connected" => FixtureKind::RandomConnected,
            other => {
                return Err(Error::Precondition(format!(
                    "unknown structure {other:?}; expected complete, bipartite, star, chain or random-connected"
                )))
            }
        })
    }
}

#[derive(Clone, Debug)]
pub struct Fixture {
    pub graph: Graph,
    pub target: CentralityTarget,
    /// False for `random-connected`, whose target is sampled without regard
    /// to realizability.
    pub classified: bool,
}

/// Builds a `gen` fixture. Seed `0` gives the canonical hand-checkable
/// targets (all ones on complete graphs, `(2,1,1,1,1)` on the 5-vertex star,
/// `(3,5,4)` on the 3-vertex chain); other seeds draw random realizable
/// targets.
pub fn fixture(kind: FixtureKind, n: usize, seed: u64) -> Result<Fixture> {
    if n < 2 {
        return Err(Error::Precondition(format!(
            "fixtures need n >= 2, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let graph = match kind {
        FixtureKind::Complete => complete(n),
        FixtureKind::Bipartite => complete_bipartite(n / 2, n - n / 2),
        FixtureKind::Star => star(n),
        FixtureKind::Chain => path(n),
        FixtureKind::RandomConnected => {
            let graph = random_connected(&mut rng, n, 0.3);
            let target = random_target(&mut rng, n, 9, 3);
            return Ok(Fixture {
                graph,
                target,
                classified: false,
            });
        }
    };
    let target = if seed != 0 {
        realizable_target(&mut rng, &graph, 0.0)
    } else {
        CentralityTarget::new(canonical_values(kind, n))?
    };
    Ok(Fixture {
        graph,
        target,
        classified: true,
    })
}

fn canonical_values(kind: FixtureKind, n: usize) -> Vec<Rational> {
    let ones = |k: usize| vec![int(1); k];
    // t with t² < difference, as required by `difference_of_squares`.
    let step = |difference: &Rational| {
        if *difference > int(1) {
            int(1)
        } else {
            difference / int(2)
        }
    };
    match kind {
        FixtureKind::Complete | FixtureKind::RandomConnected => ones(n),
        _ if n == 2 => ones(2),
        FixtureKind::Star => {
            let leaves = int(n as i64 - 1);
            let root = integer_above_sqrt(&(&leaves - int(1)));
            if &root * &root == leaves {
                let mut values = vec![root];
                values.extend(ones(n - 1));
                values
            } else {
                let others = int(n as i64 - 2);
                let (center, last) = difference_of_squares(&others, &ratio(1, 2));
                let mut values = vec![center];
                values.extend(ones(n - 2));
                values.push(last);
                values
            }
        }
        FixtureKind::Bipartite => {
            let (a, b) = (n / 2, n - n / 2);
            let mut values = ones(n);
            if a != b {
                let (x, y) = difference_of_squares(&int((b - a) as i64), &ratio(1, 2));
                values[a - 1] = x;
                values[n - 1] = y;
            }
            values
        }
        FixtureKind::Chain => {
            // Flow u_k on edge (k, k+1): c_1² = u_1, c_k² = u_{k-1} + u_k.
            let mut values = vec![int(3)];
            let mut flow = int(9);
            for _ in 1..n - 2 {
                let c = integer_above_sqrt(&flow);
                flow = &c * &c - &flow;
                values.push(c);
            }
            let (x, y) = difference_of_squares(&flow, &step(&flow));
            values.push(x);
            values.push(y);
            values
        }
    }
}
