//! No-broken-circuit sets of a gain graph, their activities, and the
//! polynomials they determine.
//!
//! The operative definition: an NBC set is a forest of the underlying
//! multigraph containing no broken circuit. Sets with unbalanced circles are
//! excluded because their hyperplanes have empty intersection, and sets with
//! balanced circles contain broken circuits, so forests are the only
//! candidates. NBC sets of size `n - 1` are the NBC bases (spanning trees);
//! an edge of a basis is interiorly active when it is order-minimum in its
//! fundamental cocircuit, the set of all edges reconnecting the two
//! components left by its removal.
//!
//! Enumeration extends edge sets in increasing order rank, maintaining
//! acyclicity and broken-circuit avoidance incrementally; it never touches
//! the full power set.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::covering::{ActivityAssignment, ActivityVector, CoveringSystem, ElementSet};
use crate::gain::{broken_circuits, GainGraph};
use crate::poly::IntPolynomial;

/// Errors for NBC-level operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NbcError {
    /// Basis-level operations need a connected underlying graph.
    Disconnected,
    /// The edge set handed in is not a spanning tree of the graph.
    NotASpanningTree,
    /// An edge rank was out of range.
    RankOutOfRange(usize),
}

impl fmt::Display for NbcError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NbcError::Disconnected => write!(f, "underlying graph is disconnected"),
            NbcError::NotASpanningTree => write!(f, "edge set is not a spanning tree"),
            NbcError::RankOutOfRange(r) => write!(f, "edge rank {r} out of range"),
        }
    }
}

/// An NBC basis with its interiorly active edges, all as order ranks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NbcBasis {
    pub edges: Vec<usize>,
    pub interior_active: Vec<usize>,
}

impl NbcBasis {
    pub fn activity_number(&self) -> usize {
        self.interior_active.len()
    }
}

/// Verdict of the exterior-activity check on an NBC basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExteriorVerdict {
    /// No non-basis edge is exteriorly active.
    Inactive,
    /// This edge closes a balanced circle of which it is the order minimum.
    ActiveWitness(usize),
}

impl ExteriorVerdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, ExteriorVerdict::Inactive)
    }
}

struct Dsu {
    parent: Vec<u32>,
    size: Vec<u32>,
    history: Vec<(u32, u32)>,
}

impl Dsu {
    fn new(n: u32) -> Self {
        Dsu {
            parent: (0..=n).collect(),
            size: alloc::vec![1; n as usize + 1],
            history: Vec::new(),
        }
    }

    fn find(&self, mut v: u32) -> u32 {
        // No path compression so unions can be rolled back.
        while self.parent[v as usize] != v {
            v = self.parent[v as usize];
        }
        v
    }

    /// Unions two distinct roots and records the step for rollback.
    fn union_roots(&mut self, a: u32, b: u32) {
        let (small, big) = if self.size[a as usize] < self.size[b as usize] {
            (a, b)
        } else {
            (b, a)
        };
        self.parent[small as usize] = big;
        self.size[big as usize] += self.size[small as usize];
        self.history.push((small, big));
    }

    fn rollback(&mut self) {
        let (small, big) = self.history.pop().expect("rollback without union");
        self.parent[small as usize] = small;
        self.size[big as usize] -= self.size[small as usize];
    }
}

/// A one-or-two-word bitset over edge ranks.
#[derive(Clone)]
struct EdgeBits(Vec<u64>);

impl EdgeBits {
    fn new(len: usize) -> Self {
        EdgeBits(alloc::vec![0; len.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn clear(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    fn is_subset_of(&self, other: &EdgeBits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    fn from_ranks(len: usize, ranks: &[usize]) -> Self {
        let mut bits = EdgeBits::new(len);
        for &r in ranks {
            bits.set(r);
        }
        bits
    }
}

/// Enumerates every NBC set of the graph (including the empty set), as
/// sorted rank sets in lexicographic prefix order.
pub fn nbc_sets(graph: &GainGraph) -> Vec<Vec<usize>> {
    let m = graph.edge_count();
    let mut by_max: BTreeMap<usize, Vec<EdgeBits>> = BTreeMap::new();
    for bc in broken_circuits(graph) {
        let max = *bc.last().expect("broken circuits are nonempty");
        by_max
            .entry(max)
            .or_default()
            .push(EdgeBits::from_ranks(m, &bc));
    }

    let mut out = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    let mut bits = EdgeBits::new(m);
    let mut dsu = Dsu::new(graph.n());
    extend_nbc(graph, &by_max, 0, &mut current, &mut bits, &mut dsu, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn extend_nbc(
    graph: &GainGraph,
    by_max: &BTreeMap<usize, Vec<EdgeBits>>,
    from: usize,
    current: &mut Vec<usize>,
    bits: &mut EdgeBits,
    dsu: &mut Dsu,
    out: &mut Vec<Vec<usize>>,
) {
    out.push(current.clone());
    for rank in from..graph.edge_count() {
        let e = graph.edges()[rank];
        let (a, b) = (dsu.find(e.tail()), dsu.find(e.head()));
        if a == b {
            continue;
        }
        bits.set(rank);
        // Only broken circuits whose maximum is the new edge can close now.
        let blocked = by_max
            .get(&rank)
            .is_some_and(|bcs| bcs.iter().any(|bc| bc.is_subset_of(bits)));
        if blocked {
            bits.clear(rank);
            continue;
        }
        dsu.union_roots(a, b);
        current.push(rank);
        extend_nbc(graph, by_max, rank + 1, current, bits, dsu, out);
        current.pop();
        dsu.rollback();
        bits.clear(rank);
    }
}

/// The interiorly active edges of a spanning tree: those that are
/// order-minimum among all edges reconnecting the two components of the
/// tree minus the edge.
pub fn interior_activity(graph: &GainGraph, basis: &[usize]) -> Result<Vec<usize>, NbcError> {
    check_spanning_tree(graph, basis)?;
    let mut active = Vec::new();
    for &rank in basis {
        let side = cut_side(graph, basis, rank)?;
        let min_crossing = (0..graph.edge_count())
            .find(|&r| {
                let f = graph.edges()[r];
                side[f.tail() as usize] != side[f.head() as usize]
            })
            .expect("removed edge itself crosses the cut");
        if min_crossing == rank {
            active.push(rank);
        }
    }
    Ok(active)
}

/// Marks the component of the basis-minus-one-edge containing each vertex:
/// `true` for the side of the removed edge's tail.
fn cut_side(graph: &GainGraph, basis: &[usize], removed: usize) -> Result<Vec<bool>, NbcError> {
    let n = graph.n() as usize;
    let mut side = alloc::vec![false; n + 1];
    let start = graph.edges()[removed].tail();
    side[start as usize] = true;
    let mut stack = alloc::vec![start];
    while let Some(v) = stack.pop() {
        for &rank in basis {
            if rank == removed {
                continue;
            }
            if let Some(w) = graph.edges()[rank].other(v) {
                if !side[w as usize] {
                    side[w as usize] = true;
                    stack.push(w);
                }
            }
        }
    }
    Ok(side)
}

fn check_spanning_tree(graph: &GainGraph, basis: &[usize]) -> Result<(), NbcError> {
    let n = graph.n();
    if basis.len() + 1 != n as usize {
        return Err(NbcError::NotASpanningTree);
    }
    let mut dsu = Dsu::new(n);
    for &rank in basis {
        let e = *graph
            .edges()
            .get(rank)
            .ok_or(NbcError::RankOutOfRange(rank))?;
        let (a, b) = (dsu.find(e.tail()), dsu.find(e.head()));
        if a == b {
            return Err(NbcError::NotASpanningTree);
        }
        dsu.union_roots(a, b);
    }
    Ok(())
}

/// The NBC bases: spanning NBC trees with their interior activities.
pub fn nbc_bases(graph: &GainGraph) -> Result<Vec<NbcBasis>, NbcError> {
    if !graph.underlying_connected() {
        return Err(NbcError::Disconnected);
    }
    let target = graph.n() as usize - 1;
    nbc_sets(graph)
        .into_iter()
        .filter(|s| s.len() == target)
        .map(|edges| {
            let interior_active = interior_activity(graph, &edges)?;
            Ok(NbcBasis {
                edges,
                interior_active,
            })
        })
        .collect()
}

/// Entry `i` counts the NBC bases of activity `i`; the vector has `n`
/// entries (activities `0..=n-1`).
pub fn activity_vector(graph: &GainGraph) -> Result<ActivityVector, NbcError> {
    let mut counts = alloc::vec![0usize; graph.n() as usize];
    for basis in nbc_bases(graph)? {
        counts[basis.activity_number()] += 1;
    }
    Ok(ActivityVector::from_counts(&counts))
}

/// The activity polynomial: coefficient `i` counts the NBC bases of
/// activity `i`.
pub fn activity_polynomial(graph: &GainGraph) -> Result<IntPolynomial, NbcError> {
    Ok(activity_vector(graph)?
        .to_polynomial()
        .expect("basis counts are nonnegative"))
}

/// The characteristic polynomial via the NBC expansion
/// `chi(t) = sum over NBC sets A of (-1)^|A| t^(n-|A|)`, returned as
/// `(full, reduced)` with `reduced = full / t`. The full polynomial is
/// always divisible by `t` because NBC sets are forests.
pub fn characteristic_polys(graph: &GainGraph) -> (IntPolynomial, IntPolynomial) {
    let n = graph.n() as usize;
    let mut coeffs = alloc::vec![BigInt::from(0); n + 1];
    for set in nbc_sets(graph) {
        let k = set.len();
        let sign = if k % 2 == 0 { 1 } else { -1 };
        coeffs[n - k] += BigInt::from(sign);
    }
    let full = IntPolynomial::from_coeffs(coeffs);
    let reduced = full
        .div_x()
        .expect("NBC sets are forests, so chi has no constant term");
    (full, reduced)
}

/// `(regions, bounded)` of the arrangement: the activity polynomial
/// evaluated at 2 and at 0.
pub fn region_counts(graph: &GainGraph) -> Result<(BigInt, BigInt), NbcError> {
    let alpha = activity_polynomial(graph)?;
    Ok((alpha.eval(&BigInt::from(2)), alpha.eval(&BigInt::from(0))))
}

/// Checks that no non-basis edge is exteriorly active for the given NBC
/// basis: an edge closing a balanced circle must not be that circle's order
/// minimum.
pub fn exterior_inactive(graph: &GainGraph, basis: &[usize]) -> Result<ExteriorVerdict, NbcError> {
    check_spanning_tree(graph, basis)?;
    for rank in 0..graph.edge_count() {
        if basis.contains(&rank) {
            continue;
        }
        let e = graph.edges()[rank];
        let Some((path_gain, path_ranks)) = tree_path(graph, basis, e.head(), e.tail()) else {
            continue;
        };
        // Circle: cross e from tail to head, then walk back along the tree.
        if e.gain_from(e.tail()) + path_gain == 0 {
            let min = path_ranks.iter().copied().min().unwrap_or(rank);
            if rank < min {
                return Ok(ExteriorVerdict::ActiveWitness(rank));
            }
        }
    }
    Ok(ExteriorVerdict::Inactive)
}

/// Walks the unique tree path `from -> to`, returning its signed gain and
/// edge ranks.
fn tree_path(
    graph: &GainGraph,
    basis: &[usize],
    from: u32,
    to: u32,
) -> Option<(i64, Vec<usize>)> {
    fn dfs(
        graph: &GainGraph,
        basis: &[usize],
        v: u32,
        to: u32,
        visited: &mut [bool],
        gain: i64,
        ranks: &mut Vec<usize>,
    ) -> Option<i64> {
        if v == to {
            return Some(gain);
        }
        visited[v as usize] = true;
        for &rank in basis {
            let e = graph.edges()[rank];
            if let Some(w) = e.other(v) {
                if !visited[w as usize] {
                    ranks.push(rank);
                    if let Some(total) =
                        dfs(graph, basis, w, to, visited, gain + e.gain_from(v), ranks)
                    {
                        return Some(total);
                    }
                    ranks.pop();
                }
            }
        }
        None
    }

    let mut visited = alloc::vec![false; graph.n() as usize + 1];
    let mut ranks = Vec::new();
    dfs(graph, basis, from, to, &mut visited, 0, &mut ranks).map(|g| (g, ranks))
}

/// Casts the NBC structure as a covering system: ground elements are edge
/// ranks, the family is the NBC sets, and the assignment maps each basis to
/// its interiorly active edges.
pub fn as_covering_system(
    graph: &GainGraph,
) -> Result<(CoveringSystem, ActivityAssignment), NbcError> {
    if !graph.underlying_connected() {
        return Err(NbcError::Disconnected);
    }
    let ground = ElementSet::new(0..graph.edge_count() as u32);
    let family = nbc_sets(graph)
        .into_iter()
        .map(|s| ElementSet::new(s.into_iter().map(|r| r as u32)));
    let sys = CoveringSystem::new(ground, family, graph.n() as usize - 1)
        .expect("ranks lie inside the ground set");
    let assignment = ActivityAssignment::new(nbc_bases(graph)?.into_iter().map(|b| {
        (
            ElementSet::new(b.edges.iter().map(|&r| r as u32)),
            ElementSet::new(b.interior_active.iter().map(|&r| r as u32)),
        )
    }));
    Ok((sys, assignment))
}
