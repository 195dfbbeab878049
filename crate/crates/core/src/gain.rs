//! Integral gain graphs, circles, and broken circuits.
//!
//! A gain graph on vertices `1..=n` carries integer gains on its edges;
//! traversing an edge against its stored orientation negates the gain. The
//! edge `g(i,j)` (stored with `tail < head`) encodes the hyperplane
//! `x_head - x_tail = g`, so `complete_interval` builds the gain graph of
//! the arrangement with all gains in `[a, b]` over the complete graph.
//!
//! The edge list's position is the total order used for broken circuits:
//! a broken circuit is a balanced circle (gain-zero cycle of the underlying
//! multigraph) minus its order-minimum edge. The order is a constructor
//! choice; counts downstream of broken circuits are order-invariant and the
//! test suites verify that.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

/// Errors for malformed gain-graph inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GainError {
    /// Loops are not part of these gain graphs.
    LoopEdge { vertex: u32 },
    /// An endpoint lies outside `1..=n`.
    VertexOutOfRange { vertex: u32, n: u32 },
    /// The same (tail, head, gain) triple appeared twice.
    DuplicateEdge(GainEdge),
    /// An interval with `a > b`.
    EmptyInterval { a: i64, b: i64 },
    /// Vertex count below 1.
    NoVertices,
    /// A reordering was not a permutation of the edge list.
    BadOrder,
}

impl fmt::Display for GainError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GainError::LoopEdge { vertex } => write!(f, "loop edge at vertex {vertex}"),
            GainError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} outside 1..={n}")
            }
            GainError::DuplicateEdge(e) => write!(f, "duplicate edge {e}"),
            GainError::EmptyInterval { a, b } => write!(f, "empty gain interval [{a},{b}]"),
            GainError::NoVertices => write!(f, "gain graphs need at least one vertex"),
            GainError::BadOrder => write!(f, "order is not a permutation of the edge list"),
        }
    }
}

/// An edge with an integer gain, stored canonically with `tail < head`.
/// Traversing head-to-tail contributes the negated gain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct GainEdge {
    tail: u32,
    head: u32,
    gain: i64,
}

impl GainEdge {
    /// Builds the edge from `i` to `j` with gain `g`, normalizing the
    /// orientation so `tail < head` (which negates the gain when swapped).
    pub fn new(i: u32, j: u32, g: i64) -> Result<Self, GainError> {
        if i == j {
            return Err(GainError::LoopEdge { vertex: i });
        }
        if i < j {
            Ok(GainEdge { tail: i, head: j, gain: g })
        } else {
            Ok(GainEdge { tail: j, head: i, gain: -g })
        }
    }

    pub fn tail(&self) -> u32 {
        self.tail
    }

    pub fn head(&self) -> u32 {
        self.head
    }

    pub fn gain(&self) -> i64 {
        self.gain
    }

    /// The endpoint that is not `v`; `None` when `v` is not an endpoint.
    pub fn other(&self, v: u32) -> Option<u32> {
        if v == self.tail {
            Some(self.head)
        } else if v == self.head {
            Some(self.tail)
        } else {
            None
        }
    }

    /// Gain contribution when walking from `from` across this edge.
    pub fn gain_from(&self, from: u32) -> i64 {
        if from == self.tail {
            self.gain
        } else {
            -self.gain
        }
    }
}

impl fmt::Display for GainEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},{})", self.gain, self.tail, self.head)
    }
}

/// An integral gain graph on vertices `1..=n`. The position of an edge in
/// the list is its rank in the edge order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GainGraph {
    n: u32,
    edges: Vec<GainEdge>,
}

impl GainGraph {
    /// The complete-graph gain graph with every gain in `[a, b]` on every
    /// vertex pair, in the default lexicographic (tail, head, gain) order.
    pub fn complete_interval(n: u32, a: i64, b: i64) -> Result<Self, GainError> {
        if n < 1 {
            return Err(GainError::NoVertices);
        }
        if a > b {
            return Err(GainError::EmptyInterval { a, b });
        }
        let mut edges = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                for g in a..=b {
                    edges.push(GainEdge { tail: i, head: j, gain: g });
                }
            }
        }
        edges.sort_unstable();
        Ok(GainGraph { n, edges })
    }

    /// Builds a graph from an explicit edge list; the list order becomes the
    /// edge order.
    pub fn from_edges(n: u32, edges: Vec<GainEdge>) -> Result<Self, GainError> {
        if n < 1 {
            return Err(GainError::NoVertices);
        }
        let mut seen = BTreeSet::new();
        for e in &edges {
            if e.head > n {
                return Err(GainError::VertexOutOfRange { vertex: e.head, n });
            }
            if !seen.insert(*e) {
                return Err(GainError::DuplicateEdge(*e));
            }
        }
        Ok(GainGraph { n, edges })
    }

    /// The same graph with edges re-ranked by `perm`: new rank `i` holds the
    /// edge previously at rank `perm[i]`.
    pub fn reordered(&self, perm: &[usize]) -> Result<Self, GainError> {
        if perm.len() != self.edges.len() {
            return Err(GainError::BadOrder);
        }
        let mut seen = alloc::vec![false; perm.len()];
        let mut edges = Vec::with_capacity(perm.len());
        for &p in perm {
            if p >= perm.len() || seen[p] {
                return Err(GainError::BadOrder);
            }
            seen[p] = true;
            edges.push(self.edges[p]);
        }
        Ok(GainGraph { n: self.n, edges })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn edges(&self) -> &[GainEdge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// The rank of an edge in the order, if present.
    pub fn edge_rank(&self, e: &GainEdge) -> Option<usize> {
        self.edges.iter().position(|f| f == e)
    }

    /// True when the underlying simple graph is connected (singleton graphs
    /// count as connected).
    pub fn underlying_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut reached = alloc::vec![false; self.n as usize + 1];
        let mut stack = alloc::vec![1u32];
        reached[1] = true;
        while let Some(v) = stack.pop() {
            for e in &self.edges {
                if let Some(w) = e.other(v) {
                    if !reached[w as usize] {
                        reached[w as usize] = true;
                        stack.push(w);
                    }
                }
            }
        }
        (1..=self.n).all(|v| reached[v as usize])
    }
}

/// A circle: a cyclic edge sequence with traversal directions. Each step
/// stores the edge and the vertex the step starts from, so the signed gain
/// of the traversal is recoverable without the graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circle {
    steps: Vec<(GainEdge, u32)>,
}

impl Circle {
    /// Builds a circle from steps `(edge, from_vertex)`; the steps must form
    /// a closed walk over distinct vertices with distinct edges.
    pub fn new(steps: Vec<(GainEdge, u32)>) -> Option<Self> {
        if steps.len() < 2 {
            return None;
        }
        for (i, &(e, from)) in steps.iter().enumerate() {
            let to = e.other(from)?;
            let (_, next_from) = steps[(i + 1) % steps.len()];
            if to != next_from {
                return None;
            }
        }
        let mut edges: Vec<GainEdge> = steps.iter().map(|&(e, _)| e).collect();
        edges.sort_unstable();
        edges.dedup();
        if edges.len() != steps.len() {
            return None;
        }
        Some(Circle { steps })
    }

    /// Signed gain sum along the stored traversal.
    pub fn gain(&self) -> i64 {
        self.steps.iter().map(|&(e, from)| e.gain_from(from)).sum()
    }

    pub fn is_balanced(&self) -> bool {
        self.gain() == 0
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn steps(&self) -> &[(GainEdge, u32)] {
        &self.steps
    }

    /// The circle's identity: its sorted edge set.
    pub fn edge_set(&self) -> Vec<GainEdge> {
        let mut edges: Vec<GainEdge> = self.steps.iter().map(|&(e, _)| e).collect();
        edges.sort_unstable();
        edges
    }

    /// The same traversal starting from a different step index.
    pub fn rotated(&self, offset: usize) -> Circle {
        let mut steps = self.steps.clone();
        let offset = offset % steps.len();
        steps.rotate_left(offset);
        Circle { steps }
    }

    /// The reversed traversal.
    pub fn reversed(&self) -> Circle {
        let steps = self
            .steps
            .iter()
            .rev()
            .map(|&(e, from)| (e, e.other(from).expect("endpoint")))
            .collect();
        Circle { steps }
    }
}

/// Enumerates every circle of the underlying multigraph: one canonical
/// representative per edge set, covering 2-circles from parallel edges and
/// all longer simple cycles. Deterministic order: by length, then by edge
/// set.
pub fn circles(graph: &GainGraph) -> Vec<Circle> {
    let mut out: Vec<(Vec<GainEdge>, Circle)> = Vec::new();

    // 2-circles: unordered pairs of distinct parallel edges.
    for (i, &e) in graph.edges().iter().enumerate() {
        for &f in &graph.edges()[i + 1..] {
            if e.tail() == f.tail() && e.head() == f.head() {
                let circle = Circle::new(alloc::vec![(e, e.tail()), (f, f.head())])
                    .expect("parallel pair forms a circle");
                out.push((circle.edge_set(), circle));
            }
        }
    }

    // Longer circles: simple cycles of the underlying graph, smallest vertex
    // first, direction normalized, then every choice of parallel edge per
    // consecutive pair.
    let n = graph.n();
    let mut parallel: BTreeSet<(u32, u32)> = BTreeSet::new();
    for e in graph.edges() {
        parallel.insert((e.tail(), e.head()));
    }
    let mut path: Vec<u32> = Vec::new();
    for start in 1..=n {
        path.push(start);
        extend_cycles(graph, &parallel, start, &mut path, &mut out);
        path.pop();
    }

    out.sort_by(|(a, _), (b, _)| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out.dedup_by(|(a, _), (b, _)| a == b);
    out.into_iter().map(|(_, c)| c).collect()
}

fn extend_cycles(
    graph: &GainGraph,
    adjacency: &BTreeSet<(u32, u32)>,
    start: u32,
    path: &mut Vec<u32>,
    out: &mut Vec<(Vec<GainEdge>, Circle)>,
) {
    let last = *path.last().expect("nonempty path");
    for next in (start + 1)..=graph.n() {
        if path.contains(&next) {
            continue;
        }
        let key = if last < next { (last, next) } else { (next, last) };
        if !adjacency.contains(&key) {
            continue;
        }
        path.push(next);
        // Close the cycle when possible; normalize direction by requiring
        // the second vertex to be smaller than the last.
        let closing = {
            let a = start.min(next);
            let b = start.max(next);
            path.len() >= 3 && adjacency.contains(&(a, b)) && path[1] < *path.last().unwrap()
        };
        if closing {
            emit_gain_choices(graph, path, out);
        }
        extend_cycles(graph, adjacency, start, path, out);
        path.pop();
    }
}

/// For a closed vertex cycle, emits one circle per choice of parallel edge
/// on each consecutive pair.
fn emit_gain_choices(
    graph: &GainGraph,
    cycle: &[u32],
    out: &mut Vec<(Vec<GainEdge>, Circle)>,
) {
    let hops: Vec<(u32, u32)> = cycle
        .iter()
        .zip(cycle.iter().cycle().skip(1))
        .map(|(&a, &b)| (a, b))
        .collect();
    let candidates: Vec<Vec<GainEdge>> = hops
        .iter()
        .map(|&(a, b)| {
            graph
                .edges()
                .iter()
                .copied()
                .filter(|e| e.other(a) == Some(b))
                .collect()
        })
        .collect();
    let mut choice: Vec<usize> = alloc::vec![0; hops.len()];
    loop {
        let steps: Vec<(GainEdge, u32)> = hops
            .iter()
            .enumerate()
            .map(|(i, &(a, _))| (candidates[i][choice[i]], a))
            .collect();
        let circle = Circle::new(steps).expect("cycle steps form a circle");
        out.push((circle.edge_set(), circle));

        let mut i = 0;
        loop {
            if i == choice.len() {
                return;
            }
            choice[i] += 1;
            if choice[i] < candidates[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// The balanced circles (gain zero), one canonical representative each.
pub fn balanced_circles(graph: &GainGraph) -> Vec<Circle> {
    circles(graph).into_iter().filter(Circle::is_balanced).collect()
}

/// The broken circuits as sorted sets of edge ranks: each balanced circle
/// minus its order-minimum edge, deduplicated, in deterministic order.
pub fn broken_circuits(graph: &GainGraph) -> Vec<Vec<usize>> {
    let mut out: BTreeSet<Vec<usize>> = BTreeSet::new();
    for circle in balanced_circles(graph) {
        let mut ranks: Vec<usize> = circle
            .edge_set()
            .iter()
            .map(|e| graph.edge_rank(e).expect("circle edge in graph"))
            .collect();
        ranks.sort_unstable();
        ranks.remove(0);
        out.insert(ranks);
    }
    out.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge(i: u32, j: u32, g: i64) -> GainEdge {
        GainEdge::new(i, j, g).unwrap()
    }

    #[test]
    fn edge_normalization_negates_gain() {
        let e = edge(3, 1, 2);
        assert_eq!((e.tail(), e.head(), e.gain()), (1, 3, -2));
        assert_eq!(e.gain_from(3), 2);
        assert!(GainEdge::new(2, 2, 0).is_err());
    }

    #[test]
    fn complete_interval_edge_counts() {
        let lin3 = GainGraph::complete_interval(3, 1, 1).unwrap();
        assert_eq!(lin3.edge_count(), 3);
        let braid3 = GainGraph::complete_interval(3, 0, 0).unwrap();
        assert_eq!(braid3.edge_count(), 3);
        let multi = GainGraph::complete_interval(2, -1, 1).unwrap();
        assert_eq!(multi.edge_count(), 3);
        assert!(GainGraph::complete_interval(3, 2, 1).is_err());
    }

    #[test]
    fn triangle_gains() {
        // All-gain-1 triangle traversed 1 -> 2 -> 3 -> 1 has gain 1.
        let c = Circle::new(alloc::vec![
            (edge(1, 2, 1), 1),
            (edge(2, 3, 1), 2),
            (edge(1, 3, 1), 3),
        ])
        .unwrap();
        assert_eq!(c.gain(), 1);
        assert!(!c.is_balanced());

        // 0(1,2), 1(2,3), 1(1,3) is balanced.
        let c = Circle::new(alloc::vec![
            (edge(1, 2, 0), 1),
            (edge(2, 3, 1), 2),
            (edge(1, 3, 1), 3),
        ])
        .unwrap();
        assert_eq!(c.gain(), 0);

        // A parallel pair with distinct gains is unbalanced.
        let c = Circle::new(alloc::vec![(edge(1, 2, 0), 1), (edge(1, 2, 1), 2)]).unwrap();
        assert_eq!(c.gain(), -1);
    }

    #[test]
    fn gain_invariant_under_rotation_and_negated_by_reversal() {
        let graph = GainGraph::complete_interval(4, -1, 1).unwrap();
        for circle in circles(&graph) {
            let g = circle.gain();
            for offset in 0..circle.len() {
                assert_eq!(circle.rotated(offset).gain(), g);
            }
            assert_eq!(circle.reversed().gain(), -g);
        }
    }

    #[test]
    fn balanced_circles_of_small_graphs() {
        // The single all-gain-1 triangle is unbalanced.
        let lin3 = GainGraph::complete_interval(3, 1, 1).unwrap();
        assert!(balanced_circles(&lin3).is_empty());

        // The all-gain-0 triangle is the unique balanced circle.
        let braid3 = GainGraph::complete_interval(3, 0, 0).unwrap();
        let balanced = balanced_circles(&braid3);
        assert_eq!(balanced.len(), 1);
        assert_eq!(
            balanced[0].edge_set(),
            alloc::vec![edge(1, 2, 0), edge(1, 3, 0), edge(2, 3, 0)]
        );
    }

    #[test]
    fn balanced_circles_with_parallel_gains() {
        // Independent check: of the 8 triangles of the [0,1] graph on three
        // vertices, exactly those with g12 + g23 = g13 are balanced, and no
        // 2-circle is.
        let shi3 = GainGraph::complete_interval(3, 0, 1).unwrap();
        let mut expected = 0;
        for g12 in 0..=1 {
            for g23 in 0..=1 {
                for g13 in 0..=1 {
                    if g12 + g23 == g13 {
                        expected += 1;
                    }
                }
            }
        }
        assert_eq!(expected, 3);
        let balanced = balanced_circles(&shi3);
        assert_eq!(balanced.len(), expected);
        assert!(balanced.iter().all(|c| c.len() == 3));
        assert_eq!(broken_circuits(&shi3).len(), 3);
    }

    #[test]
    fn broken_circuits_of_braid_triangle() {
        let braid3 = GainGraph::complete_interval(3, 0, 0).unwrap();
        // The triangle minus its order-minimum edge 0(1,2).
        assert_eq!(broken_circuits(&braid3), alloc::vec![alloc::vec![1, 2]]);
        let lin3 = GainGraph::complete_interval(3, 1, 1).unwrap();
        assert!(broken_circuits(&lin3).is_empty());
    }

    #[test]
    fn broken_circuits_are_acyclic() {
        let graph = GainGraph::complete_interval(4, 0, 1).unwrap();
        for bc in broken_circuits(&graph) {
            // A circle minus one edge is a path: edge count is at most
            // vertex count minus one.
            let mut vertices = BTreeSet::new();
            for &rank in &bc {
                let e = graph.edges()[rank];
                vertices.insert(e.tail());
                vertices.insert(e.head());
            }
            assert!(bc.len() < vertices.len());
        }
    }

    #[test]
    fn balanced_count_ignores_order() {
        let graph = GainGraph::complete_interval(3, 0, 1).unwrap();
        let perm: Vec<usize> = (0..graph.edge_count()).rev().collect();
        let reordered = graph.reordered(&perm).unwrap();
        assert_eq!(
            balanced_circles(&graph).len(),
            balanced_circles(&reordered).len()
        );
    }

    #[test]
    fn reorder_validates_permutation() {
        let graph = GainGraph::complete_interval(3, 0, 0).unwrap();
        assert!(graph.reordered(&[0, 0, 1]).is_err());
        assert!(graph.reordered(&[0, 1]).is_err());
        assert!(graph.reordered(&[2, 0, 1]).is_ok());
    }
}
