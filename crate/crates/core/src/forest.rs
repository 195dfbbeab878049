//! Colored labeled rooted forests and their statistics.
//!
//! Forests live on vertices `1..=n` with edges colored in `1..=k`. A class
//! predicate checks, at every internal vertex whose minimum incident
//! child-edge color `c_v` lies among the first `k1` (non-free) colors, a
//! condition on the children reached through edges of color `c_v`:
//!
//! * decreasing / increasing: all such children are smaller / larger;
//! * non-increasing / non-decreasing: at least one such child is smaller /
//!   larger.
//!
//! The last `k2` colors are free and never trigger a check. The tree
//! activity of a spanning tree is its set of color-1 edges parented at the
//! top vertex `n`; casting a forest class as a covering system with that
//! assignment is what the partition checks downstream verify.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::covering::{ActivityAssignment, ActivityVector, CoveringSystem, ElementSet};

/// Errors for malformed forests and class mismatches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ForestError {
    VertexOutOfRange { vertex: u32, n: u32 },
    ColorOutOfRange { color: u32, colors: u32 },
    MultipleParents { child: u32 },
    CycleAt { vertex: u32 },
    /// The class's `k1 + k2` does not match the forest's color count.
    ColorSplitMismatch { k1: u32, k2: u32, colors: u32 },
    /// The operation needs a single-component spanning tree.
    NotASpanningTree,
    /// The operation needs a single-colored decreasing spanning tree.
    NotDecreasing,
    NeedsOneColor { colors: u32 },
    NoVertices,
}

impl fmt::Display for ForestError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ForestError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} outside 1..={n}")
            }
            ForestError::ColorOutOfRange { color, colors } => {
                write!(f, "color {color} outside 1..={colors}")
            }
            ForestError::MultipleParents { child } => {
                write!(f, "vertex {child} has more than one parent")
            }
            ForestError::CycleAt { vertex } => write!(f, "parent cycle through {vertex}"),
            ForestError::ColorSplitMismatch { k1, k2, colors } => {
                write!(f, "class split {k1}+{k2} does not match {colors} colors")
            }
            ForestError::NotASpanningTree => write!(f, "forest is not a spanning tree"),
            ForestError::NotDecreasing => write!(f, "tree is not decreasing"),
            ForestError::NeedsOneColor { colors } => {
                write!(f, "operation requires one color, got {colors}")
            }
            ForestError::NoVertices => write!(f, "forests need at least one vertex"),
        }
    }
}

/// A rooted forest on `1..=n` with edges colored in `1..=colors`. Roots are
/// the parentless vertices; each vertex stores its parent edge.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ColoredForest {
    n: u32,
    colors: u32,
    /// `links[v-1]` is `Some((parent, color))` for non-roots.
    links: Vec<Option<(u32, u32)>>,
}

impl ColoredForest {
    /// Builds a forest from `(parent, child, color)` edges, validating ranges,
    /// single parenthood, and acyclicity.
    pub fn from_edges(n: u32, colors: u32, edges: &[(u32, u32, u32)]) -> Result<Self, ForestError> {
        if n < 1 {
            return Err(ForestError::NoVertices);
        }
        let mut links: Vec<Option<(u32, u32)>> = alloc::vec![None; n as usize];
        for &(parent, child, color) in edges {
            for v in [parent, child] {
                if v < 1 || v > n {
                    return Err(ForestError::VertexOutOfRange { vertex: v, n });
                }
            }
            if color < 1 || color > colors {
                return Err(ForestError::ColorOutOfRange { color, colors });
            }
            if links[child as usize - 1].is_some() {
                return Err(ForestError::MultipleParents { child });
            }
            links[child as usize - 1] = Some((parent, color));
        }
        let forest = ColoredForest { n, colors, links };
        for v in 1..=n {
            // Walk to the root; a walk longer than n vertices is a cycle.
            let mut cur = v;
            for _ in 0..n {
                match forest.parent_of(cur) {
                    Some(p) => cur = p,
                    None => break,
                }
            }
            if forest.parent_of(cur).is_some() {
                return Err(ForestError::CycleAt { vertex: v });
            }
        }
        Ok(forest)
    }

    /// A forest of isolated vertices.
    pub fn empty(n: u32, colors: u32) -> Result<Self, ForestError> {
        Self::from_edges(n, colors, &[])
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn colors(&self) -> u32 {
        self.colors
    }

    pub fn parent_of(&self, v: u32) -> Option<u32> {
        self.links[v as usize - 1].map(|(p, _)| p)
    }

    pub fn parent_edge(&self, v: u32) -> Option<(u32, u32)> {
        self.links[v as usize - 1]
    }

    /// Edges as `(parent, child, color)`, sorted by child.
    pub fn edges(&self) -> Vec<(u32, u32, u32)> {
        (1..=self.n)
            .filter_map(|v| self.links[v as usize - 1].map(|(p, c)| (p, v, c)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.links.iter().filter(|l| l.is_some()).count()
    }

    pub fn roots(&self) -> Vec<u32> {
        (1..=self.n).filter(|&v| self.parent_of(v).is_none()).collect()
    }

    pub fn is_spanning_tree(&self) -> bool {
        self.roots().len() == 1
    }

    /// Children of `v` with their edge colors, ascending by child.
    pub fn children_of(&self, v: u32) -> Vec<(u32, u32)> {
        (1..=self.n)
            .filter_map(|w| match self.links[w as usize - 1] {
                Some((p, c)) if p == v => Some((w, c)),
                _ => None,
            })
            .collect()
    }

    /// The root of the component containing `v`.
    pub fn component_root(&self, v: u32) -> u32 {
        let mut cur = v;
        while let Some(p) = self.parent_of(cur) {
            cur = p;
        }
        cur
    }
}

/// The five class conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassMode {
    Unrestricted,
    Decreasing,
    Increasing,
    NonDecreasing,
    NonIncreasing,
}

impl fmt::Display for ClassMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            ClassMode::Unrestricted => "unrestricted",
            ClassMode::Decreasing => "decreasing",
            ClassMode::Increasing => "increasing",
            ClassMode::NonDecreasing => "non-decreasing",
            ClassMode::NonIncreasing => "non-increasing",
        };
        write!(f, "{name}")
    }
}

/// A class predicate: a mode plus the split of the palette into `k1`
/// non-free and `k2` free colors (free colors occupy the top of the
/// palette).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ForestClass {
    pub mode: ClassMode,
    pub k1: u32,
    pub k2: u32,
}

impl ForestClass {
    pub fn new(mode: ClassMode, k1: u32, k2: u32) -> Self {
        ForestClass { mode, k1, k2 }
    }

    pub fn colors(&self) -> u32 {
        self.k1 + self.k2
    }
}

/// True when the forest satisfies the class condition at every internal
/// vertex. Vertices whose minimum child-edge color is free are never
/// checked.
pub fn classify(forest: &ColoredForest, class: &ForestClass) -> Result<bool, ForestError> {
    if class.colors() != forest.colors() {
        return Err(ForestError::ColorSplitMismatch {
            k1: class.k1,
            k2: class.k2,
            colors: forest.colors(),
        });
    }
    if matches!(class.mode, ClassMode::Unrestricted) {
        return Ok(true);
    }
    for v in 1..=forest.n() {
        let children = forest.children_of(v);
        if children.is_empty() {
            continue;
        }
        let min_color = children.iter().map(|&(_, c)| c).min().expect("nonempty");
        if min_color > class.k1 {
            continue;
        }
        let checked = children.iter().filter(|&&(_, c)| c == min_color);
        let ok = match class.mode {
            ClassMode::Unrestricted => true,
            ClassMode::Decreasing => checked.clone().all(|&(w, _)| w < v),
            ClassMode::Increasing => checked.clone().all(|&(w, _)| w > v),
            ClassMode::NonIncreasing => checked.clone().any(|&(w, _)| w < v),
            ClassMode::NonDecreasing => checked.clone().any(|&(w, _)| w > v),
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Enumerates the forests (or only the spanning trees) on `1..=n` with `k`
/// colors lying in the class. Output order: parent arrays lexicographically
/// (root first), then color vectors lexicographically.
pub fn enumerate_forests(
    n: u32,
    colors: u32,
    class: &ForestClass,
    spanning_only: bool,
) -> Result<Vec<ColoredForest>, ForestError> {
    if n < 1 {
        return Err(ForestError::NoVertices);
    }
    if class.colors() != colors {
        return Err(ForestError::ColorSplitMismatch {
            k1: class.k1,
            k2: class.k2,
            colors,
        });
    }
    let mut out = Vec::new();
    let mut parents: Vec<Option<u32>> = alloc::vec![None; n as usize];
    assign_parents(n, colors, class, spanning_only, 1, &mut parents, &mut out)?;
    Ok(out)
}

fn assign_parents(
    n: u32,
    colors: u32,
    class: &ForestClass,
    spanning_only: bool,
    v: u32,
    parents: &mut Vec<Option<u32>>,
    out: &mut Vec<ColoredForest>,
) -> Result<(), ForestError> {
    if v > n {
        if spanning_only && parents.iter().filter(|p| p.is_none()).count() != 1 {
            return Ok(());
        }
        color_edges(n, colors, class, parents, out)?;
        return Ok(());
    }
    // Root option first, then parents ascending: parent-array lex order.
    parents[v as usize - 1] = None;
    assign_parents(n, colors, class, spanning_only, v + 1, parents, out)?;
    'parents: for p in 1..=n {
        if p == v {
            continue;
        }
        // Reject assignments closing a parent cycle: the chain from p stops
        // at a root or a not-yet-assigned vertex unless it reaches v.
        let mut cur = p;
        loop {
            if cur == v {
                continue 'parents;
            }
            match parents[cur as usize - 1] {
                Some(next) => cur = next,
                None => break,
            }
        }
        parents[v as usize - 1] = Some(p);
        assign_parents(n, colors, class, spanning_only, v + 1, parents, out)?;
    }
    parents[v as usize - 1] = None;
    Ok(())
}

fn color_edges(
    n: u32,
    colors: u32,
    class: &ForestClass,
    parents: &[Option<u32>],
    out: &mut Vec<ColoredForest>,
) -> Result<(), ForestError> {
    let children: Vec<u32> = (1..=n).filter(|&v| parents[v as usize - 1].is_some()).collect();
    let mut palette: Vec<u32> = alloc::vec![1; children.len()];
    loop {
        let edges: Vec<(u32, u32, u32)> = children
            .iter()
            .zip(&palette)
            .map(|(&child, &color)| (parents[child as usize - 1].unwrap(), child, color))
            .collect();
        let forest = ColoredForest::from_edges(n, colors, &edges)?;
        if classify(&forest, class)? {
            out.push(forest);
        }
        // Next color vector in lexicographic order.
        let mut i = palette.len();
        loop {
            if i == 0 {
                return Ok(());
            }
            i -= 1;
            palette[i] += 1;
            if palette[i] <= colors {
                break;
            }
            palette[i] = 1;
        }
    }
}

/// The activity of a spanning tree: its color-1 edges parented at the top
/// vertex `n`, with their count.
pub fn tree_activity(tree: &ColoredForest) -> Result<(Vec<(u32, u32, u32)>, usize), ForestError> {
    if !tree.is_spanning_tree() {
        return Err(ForestError::NotASpanningTree);
    }
    let edges: Vec<(u32, u32, u32)> = tree
        .edges()
        .into_iter()
        .filter(|&(p, _, c)| p == tree.n() && c == 1)
        .collect();
    let count = edges.len();
    Ok((edges, count))
}

/// Number of edges whose parent is the child plus one.
pub fn consecutive_edges(forest: &ColoredForest) -> usize {
    forest
        .edges()
        .iter()
        .filter(|&&(p, child, _)| p == child + 1)
        .count()
}

/// Number of edges `(i+1, i)` in which `i` is the smallest child of `i+1`.
pub fn consecutive_smallest_child_edges(forest: &ColoredForest) -> usize {
    (1..=forest.n())
        .filter(|&v| {
            let children = forest.children_of(v);
            children
                .iter()
                .map(|&(w, _)| w)
                .min()
                .is_some_and(|smallest| smallest + 1 == v)
        })
        .count()
}

/// The statistics whose distributions over tree classes are compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Statistic {
    /// Color-1 edges parented at vertex `n`.
    ChildrenOfN,
    /// Edges of the form `(i+1, i)`.
    Consecutive,
    /// Edges `(i+1, i)` where `i` is the smallest child of `i+1`.
    ConsecutiveSmallestChild,
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Statistic::ChildrenOfN => "children-of-n",
            Statistic::Consecutive => "consecutive",
            Statistic::ConsecutiveSmallestChild => "consecutive-smallest-child",
        };
        write!(f, "{name}")
    }
}

pub fn statistic_value(forest: &ColoredForest, stat: Statistic) -> usize {
    match stat {
        Statistic::ChildrenOfN => forest
            .edges()
            .iter()
            .filter(|&&(p, _, c)| p == forest.n() && c == 1)
            .count(),
        Statistic::Consecutive => consecutive_edges(forest),
        Statistic::ConsecutiveSmallestChild => consecutive_smallest_child_edges(forest),
    }
}

/// Distribution of a statistic over the spanning trees of a class: entry
/// `i` counts trees with value `i`. The vector has `n` entries.
pub fn tree_statistic_vector(
    n: u32,
    colors: u32,
    class: &ForestClass,
    stat: Statistic,
) -> Result<ActivityVector, ForestError> {
    let mut counts = alloc::vec![0usize; n as usize];
    for tree in enumerate_forests(n, colors, class, true)? {
        counts[statistic_value(&tree, stat)] += 1;
    }
    Ok(ActivityVector::from_counts(&counts))
}

/// The unique spanning tree covering a forest: the root of every component
/// not containing `n` is attached to `n` with a color-1 edge.
pub fn cover_tree(forest: &ColoredForest) -> ColoredForest {
    let n = forest.n();
    let top_root = forest.component_root(n);
    let mut edges = forest.edges();
    for root in forest.roots() {
        if root != top_root {
            edges.push((n, root, 1));
        }
    }
    ColoredForest::from_edges(n, forest.colors(), &edges)
        .expect("attaching roots to the top vertex keeps a forest")
}

/// The involution on single-colored decreasing spanning trees swapping
/// edges `(n, i)` with edges `(i+1, i)`; edges of both forms are fixed.
/// Applying it twice is the identity and it exchanges the two statistics.
pub fn decreasing_involution(tree: &ColoredForest) -> Result<ColoredForest, ForestError> {
    if tree.colors() != 1 {
        return Err(ForestError::NeedsOneColor {
            colors: tree.colors(),
        });
    }
    if !tree.is_spanning_tree() {
        return Err(ForestError::NotASpanningTree);
    }
    let class = ForestClass::new(ClassMode::Decreasing, 1, 0);
    if !classify(tree, &class)? {
        return Err(ForestError::NotDecreasing);
    }
    let n = tree.n();
    let edges: Vec<(u32, u32, u32)> = tree
        .edges()
        .into_iter()
        .map(|(p, child, c)| {
            let top = p == n;
            let consecutive = p == child + 1;
            match (top, consecutive) {
                (true, false) => (child + 1, child, c),
                (false, true) => (n, child, c),
                _ => (p, child, c),
            }
        })
        .collect();
    ColoredForest::from_edges(n, 1, &edges)
}

/// Casts a forest class as a covering system: ground elements are the
/// colored directed edges `(parent, child, color)` in lexicographic order,
/// the family is the forests of the class, and each spanning tree is
/// assigned its color-1 top-vertex edges.
pub fn forests_as_covering_system(
    n: u32,
    colors: u32,
    class: &ForestClass,
) -> Result<(CoveringSystem, ActivityAssignment), ForestError> {
    let mut ids: BTreeMap<(u32, u32, u32), u32> = BTreeMap::new();
    for parent in 1..=n {
        for child in 1..=n {
            if parent == child {
                continue;
            }
            for color in 1..=colors {
                let next = ids.len() as u32;
                ids.insert((parent, child, color), next);
            }
        }
    }
    let ground = ElementSet::new(0..ids.len() as u32);
    let forests = enumerate_forests(n, colors, class, false)?;
    let to_set = |forest: &ColoredForest| {
        ElementSet::new(forest.edges().into_iter().map(|e| ids[&e]))
    };
    let family: Vec<ElementSet> = forests.iter().map(to_set).collect();
    let assignment = ActivityAssignment::new(forests.iter().filter_map(|f| {
        if !f.is_spanning_tree() {
            return None;
        }
        let (active, _) = tree_activity(f).ok()?;
        Some((
            to_set(f),
            ElementSet::new(active.into_iter().map(|e| ids[&e])),
        ))
    }));
    let sys = CoveringSystem::new(ground, family, n as usize - 1)
        .expect("edge ids lie inside the ground set");
    Ok((sys, assignment))
}
