//! Local binary search trees and their rotation to non-increasing trees.
//!
//! An LBS tree on `1..=n` is a planar rooted tree where every vertex has an
//! optional left child smaller than itself and an optional right child
//! larger than itself (the conditions are local: a subtree may contain
//! labels on either side of its root). A left LBS tree is one whose root
//! has no right child.
//!
//! Rotating a left LBS tree rewires every right edge `(v, r)` to
//! `(x, r)`, where `x` is found by climbing parent links from `v` while the
//! climbed edge is a right edge and stopping at the parent of the first
//! left edge (or at the root). The result is a non-increasing rooted tree,
//! and at desk scale the map is a bijection onto them.
//!
//! The conjecture checker reports, without asserting anything, the
//! distributions of consecutive edges `(i+1, i)` against top edges `(n, i)`
//! over left LBS trees (the literal reading) or over non-increasing trees
//! with the smallest-child restriction (the remark's reading).

use alloc::vec::Vec;
use core::fmt;

use crate::covering::ActivityVector;
use crate::forest::{
    consecutive_smallest_child_edges, enumerate_forests, statistic_value, ClassMode,
    ColoredForest, ForestClass, ForestError, Statistic,
};

/// Errors for malformed LBS trees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LbsError {
    VertexOutOfRange { vertex: u32, n: u32 },
    /// A left child at least its parent, or a right child at most it.
    LocalOrderViolated { parent: u32, child: u32 },
    /// A vertex hangs from two slots, or the structure is not a tree.
    NotATree,
    /// The operation needs a left LBS tree (root without right child).
    RootHasRightChild,
    NoVertices,
    /// Propagated forest construction error.
    Forest(ForestError),
}

impl fmt::Display for LbsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LbsError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} outside 1..={n}")
            }
            LbsError::LocalOrderViolated { parent, child } => {
                write!(f, "child {child} on the wrong side of parent {parent}")
            }
            LbsError::NotATree => write!(f, "slots do not form a rooted tree"),
            LbsError::RootHasRightChild => write!(f, "root has a right child"),
            LbsError::NoVertices => write!(f, "LBS trees need at least one vertex"),
            LbsError::Forest(e) => write!(f, "{e}"),
        }
    }
}

impl From<ForestError> for LbsError {
    fn from(e: ForestError) -> Self {
        LbsError::Forest(e)
    }
}

/// Which slot a vertex hangs from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    Left,
    Right,
}

/// A local binary search tree on `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LbsTree {
    n: u32,
    root: u32,
    /// `left[v-1]` / `right[v-1]` are the child slots of vertex `v`.
    left: Vec<Option<u32>>,
    right: Vec<Option<u32>>,
}

impl LbsTree {
    /// Builds and fully validates a tree from its slot arrays.
    pub fn new(
        n: u32,
        root: u32,
        left: Vec<Option<u32>>,
        right: Vec<Option<u32>>,
    ) -> Result<Self, LbsError> {
        if n < 1 {
            return Err(LbsError::NoVertices);
        }
        if root < 1 || root > n || left.len() != n as usize || right.len() != n as usize {
            return Err(LbsError::NotATree);
        }
        let mut parent: Vec<Option<u32>> = alloc::vec![None; n as usize + 1];
        for v in 1..=n {
            for (child, side) in [
                (left[v as usize - 1], Side::Left),
                (right[v as usize - 1], Side::Right),
            ] {
                let Some(c) = child else { continue };
                if c < 1 || c > n {
                    return Err(LbsError::VertexOutOfRange { vertex: c, n });
                }
                let ok = match side {
                    Side::Left => c < v,
                    Side::Right => c > v,
                };
                if !ok {
                    return Err(LbsError::LocalOrderViolated { parent: v, child: c });
                }
                if parent[c as usize].replace(v).is_some() {
                    return Err(LbsError::NotATree);
                }
            }
        }
        if parent[root as usize].is_some() {
            return Err(LbsError::NotATree);
        }
        // Exactly one parentless vertex and no cycles: walk every vertex to
        // the root.
        for v in 1..=n {
            let mut cur = v;
            let mut steps = 0;
            while let Some(p) = parent[cur as usize] {
                cur = p;
                steps += 1;
                if steps > n {
                    return Err(LbsError::NotATree);
                }
            }
            if cur != root {
                return Err(LbsError::NotATree);
            }
        }
        Ok(LbsTree { n, root, left, right })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn root(&self) -> u32 {
        self.root
    }

    pub fn left_child(&self, v: u32) -> Option<u32> {
        self.left[v as usize - 1]
    }

    pub fn right_child(&self, v: u32) -> Option<u32> {
        self.right[v as usize - 1]
    }

    pub fn is_left_variant(&self) -> bool {
        self.right_child(self.root).is_none()
    }

    /// All edges as `(parent, child)` pairs, left slots first per vertex.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.n as usize - 1);
        for v in 1..=self.n {
            if let Some(l) = self.left_child(v) {
                out.push((v, l));
            }
            if let Some(r) = self.right_child(v) {
                out.push((v, r));
            }
        }
        out
    }

    fn parent_sides(&self) -> Vec<Option<(u32, Side)>> {
        let mut parent: Vec<Option<(u32, Side)>> = alloc::vec![None; self.n as usize + 1];
        for v in 1..=self.n {
            if let Some(l) = self.left_child(v) {
                parent[l as usize] = Some((v, Side::Left));
            }
            if let Some(r) = self.right_child(v) {
                parent[r as usize] = Some((v, Side::Right));
            }
        }
        parent
    }
}

/// Enumerates all LBS trees on `1..=n` (optionally only the left variant),
/// in deterministic order.
pub fn enumerate_lbs(n: u32, left_only: bool) -> Vec<LbsTree> {
    let mut out = Vec::new();
    let mut holder: Vec<Option<(u32, Side)>> = alloc::vec![None; n as usize + 1];
    let mut left_used = alloc::vec![false; n as usize + 1];
    let mut right_used = alloc::vec![false; n as usize + 1];
    let mut root: Option<u32> = None;

    fn assign(
        n: u32,
        v: u32,
        left_only: bool,
        holder: &mut Vec<Option<(u32, Side)>>,
        left_used: &mut Vec<bool>,
        right_used: &mut Vec<bool>,
        root: &mut Option<u32>,
        out: &mut Vec<LbsTree>,
    ) {
        if v > n {
            finish(n, left_only, holder, root, out);
            return;
        }
        if root.is_none() {
            *root = Some(v);
            assign(n, v + 1, left_only, holder, left_used, right_used, root, out);
            *root = None;
        }
        // Left slot of a larger vertex.
        for u in (v + 1)..=n {
            if !left_used[u as usize] {
                left_used[u as usize] = true;
                holder[v as usize] = Some((u, Side::Left));
                assign(n, v + 1, left_only, holder, left_used, right_used, root, out);
                holder[v as usize] = None;
                left_used[u as usize] = false;
            }
        }
        // Right slot of a smaller vertex.
        for u in 1..v {
            if !right_used[u as usize] {
                right_used[u as usize] = true;
                holder[v as usize] = Some((u, Side::Right));
                assign(n, v + 1, left_only, holder, left_used, right_used, root, out);
                holder[v as usize] = None;
                right_used[u as usize] = false;
            }
        }
    }

    fn finish(
        n: u32,
        left_only: bool,
        holder: &[Option<(u32, Side)>],
        root: &Option<u32>,
        out: &mut Vec<LbsTree>,
    ) {
        let Some(root) = *root else { return };
        let mut left: Vec<Option<u32>> = alloc::vec![None; n as usize];
        let mut right: Vec<Option<u32>> = alloc::vec![None; n as usize];
        for v in 1..=n {
            match holder[v as usize] {
                Some((u, Side::Left)) => left[u as usize - 1] = Some(v),
                Some((u, Side::Right)) => right[u as usize - 1] = Some(v),
                None => {}
            }
        }
        let Ok(tree) = LbsTree::new(n, root, left, right) else {
            return;
        };
        if left_only && !tree.is_left_variant() {
            return;
        }
        out.push(tree);
    }

    assign(
        n,
        1,
        left_only,
        &mut holder,
        &mut left_used,
        &mut right_used,
        &mut root,
        &mut out,
    );
    out.sort();
    out
}

/// Rotates a left LBS tree to a non-increasing rooted tree: left edges are
/// kept, each right edge `(v, r)` becomes `(x, r)` with `x` the parent at
/// the first left edge on the climb from `v` (or the root).
pub fn rotate_to_nonincreasing(tree: &LbsTree) -> Result<ColoredForest, LbsError> {
    if !tree.is_left_variant() {
        return Err(LbsError::RootHasRightChild);
    }
    let parent = tree.parent_sides();
    let first_left_ancestor = |mut v: u32| -> u32 {
        loop {
            match parent[v as usize] {
                None => return v,
                Some((p, Side::Left)) => return p,
                Some((p, Side::Right)) => v = p,
            }
        }
    };
    let mut edges: Vec<(u32, u32, u32)> = Vec::with_capacity(tree.n() as usize - 1);
    for v in 1..=tree.n() {
        if let Some(l) = tree.left_child(v) {
            edges.push((v, l, 1));
        }
        if let Some(r) = tree.right_child(v) {
            edges.push((first_left_ancestor(v), r, 1));
        }
    }
    Ok(ColoredForest::from_edges(tree.n(), 1, &edges)?)
}

/// Which reading of the conjecture to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConjectureVariant {
    /// Distributions of `(i+1, i)` edges vs `(n, i)` edges over left LBS
    /// trees, edges read off the LBS tree itself.
    Literal,
    /// Distributions over non-increasing trees of children of `n` vs edges
    /// `(i+1, i)` where `i` is the smallest child of `i+1`.
    Restricted,
}

impl fmt::Display for ConjectureVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConjectureVariant::Literal => write!(f, "literal"),
            ConjectureVariant::Restricted => write!(f, "restricted"),
        }
    }
}

/// The two distributions and whether they agree. The checker never asserts
/// the conjecture; it only reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    pub n: u32,
    pub variant: ConjectureVariant,
    pub dist_consecutive: ActivityVector,
    pub dist_top: ActivityVector,
    pub equal: bool,
}

pub fn conjecture_report(n: u32, variant: ConjectureVariant) -> Result<ConjectureReport, LbsError> {
    let mut consecutive = alloc::vec![0usize; n as usize];
    let mut top = alloc::vec![0usize; n as usize];
    match variant {
        ConjectureVariant::Literal => {
            for tree in enumerate_lbs(n, true) {
                let edges = tree.edges();
                consecutive[edges.iter().filter(|&&(p, c)| p == c + 1).count()] += 1;
                top[edges.iter().filter(|&&(p, _)| p == n).count()] += 1;
            }
        }
        ConjectureVariant::Restricted => {
            let class = ForestClass::new(ClassMode::NonIncreasing, 1, 0);
            for tree in enumerate_forests(n, 1, &class, true)? {
                consecutive[consecutive_smallest_child_edges(&tree)] += 1;
                top[statistic_value(&tree, Statistic::ChildrenOfN)] += 1;
            }
        }
    }
    let dist_consecutive = ActivityVector::from_counts(&consecutive);
    let dist_top = ActivityVector::from_counts(&top);
    let equal = dist_consecutive == dist_top;
    Ok(ConjectureReport {
        n,
        variant,
        dist_consecutive,
        dist_top,
        equal,
    })
}

/// Canned example data shared by the test suites and the CLI demos.
pub mod samples {
    use super::*;

    /// The ten-vertex left LBS tree whose rotation rewires exactly
    /// (2,5)→(7,5), (5,9)→(7,9), (1,8)→(9,8), (4,6)→(5,6), (6,10)→(5,10):
    /// root 7 with left spine 7-2, right edges hanging below. Vertex 3,
    /// which lies on none of the climbs, sits as the left leaf of 4.
    pub fn rotation_example() -> LbsTree {
        let n = 10usize;
        let mut left = alloc::vec![None; n];
        let mut right = alloc::vec![None; n];
        let mut set = |v: u32, l: Option<u32>, r: Option<u32>| {
            left[v as usize - 1] = l;
            right[v as usize - 1] = r;
        };
        set(7, Some(2), None);
        set(2, None, Some(5));
        set(5, Some(4), Some(9));
        set(4, Some(3), Some(6));
        set(6, None, Some(10));
        set(9, Some(1), None);
        set(1, None, Some(8));
        LbsTree::new(n as u32, 7, left, right).expect("well-formed sample")
    }

    /// The five right-edge rewirings the rotation of
    /// [`rotation_example`] must produce, as `(new_parent, child)` pairs.
    pub const ROTATION_REWIRINGS: [(u32, u32); 5] =
        [(7, 5), (7, 9), (9, 8), (5, 6), (5, 10)];
}
