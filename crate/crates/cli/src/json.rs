//! Wire formats: the JSON schemas for trees, LBS trees, covering systems,
//! and edge lists, with conversions to and from the core types.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use gainact::covering::{ActivityAssignment, ActivityVector, CoveringSystem, ElementSet};
use gainact::forest::ColoredForest;
use gainact::gain::{GainEdge, GainGraph};
use gainact::lbs::LbsTree;
use gainact::poly::IntPolynomial;

/// A conversion failure between wire data and core types.
#[derive(Debug)]
pub struct FormatError(pub String);

impl std::fmt::Display for FormatError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for FormatError {}

fn bad<T>(msg: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError(msg.into()))
}

/// `{"n": n, "colors": k, "edges": [[parent, child, color], ...]}`;
/// forests serialize identically with multiple implied roots.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TreeJson {
    pub n: u32,
    pub colors: u32,
    pub edges: Vec<(u32, u32, u32)>,
}

impl TreeJson {
    pub fn from_forest(forest: &ColoredForest) -> Self {
        TreeJson {
            n: forest.n(),
            colors: forest.colors(),
            edges: forest.edges(),
        }
    }

    pub fn to_forest(&self) -> Result<ColoredForest, FormatError> {
        ColoredForest::from_edges(self.n, self.colors, &self.edges)
            .map_err(|e| FormatError(e.to_string()))
    }
}

/// `{"n": n, "nodes": {"v": {"left": l|null, "right": r|null}, ...},
/// "root": r}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LbsTreeJson {
    pub n: u32,
    pub nodes: BTreeMap<String, LbsNodeJson>,
    pub root: u32,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LbsNodeJson {
    pub left: Option<u32>,
    pub right: Option<u32>,
}

impl LbsTreeJson {
    pub fn from_tree(tree: &LbsTree) -> Self {
        let mut nodes = BTreeMap::new();
        for v in 1..=tree.n() {
            nodes.insert(
                v.to_string(),
                LbsNodeJson {
                    left: tree.left_child(v),
                    right: tree.right_child(v),
                },
            );
        }
        LbsTreeJson {
            n: tree.n(),
            nodes,
            root: tree.root(),
        }
    }

    pub fn to_tree(&self) -> Result<LbsTree, FormatError> {
        let mut left = vec![None; self.n as usize];
        let mut right = vec![None; self.n as usize];
        for (key, node) in &self.nodes {
            let v: u32 = match key.parse() {
                Ok(v) if v >= 1 && v <= self.n => v,
                _ => return bad(format!("bad vertex key '{key}'")),
            };
            left[v as usize - 1] = node.left;
            right[v as usize - 1] = node.right;
        }
        LbsTree::new(self.n, self.root, left, right).map_err(|e| FormatError(e.to_string()))
    }
}

/// `{"rank": r, "ground": [ids], "family": [[ids]...],
/// "activity": {"<basis-key>": [ids]}}` with the basis key the
/// comma-joined sorted basis.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CoveringJson {
    pub rank: usize,
    pub ground: Vec<u32>,
    pub family: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub activity: Option<BTreeMap<String, Vec<u32>>>,
}

impl CoveringJson {
    pub fn from_system(sys: &CoveringSystem, act: Option<&ActivityAssignment>) -> Self {
        CoveringJson {
            rank: sys.rank(),
            ground: sys.ground().iter().collect(),
            family: sys.family().map(|m| m.iter().collect()).collect(),
            activity: act.map(|a| {
                a.iter()
                    .map(|(basis, active)| (basis_key(basis), active.iter().collect()))
                    .collect()
            }),
        }
    }

    pub fn to_system(
        &self,
    ) -> Result<(CoveringSystem, Option<ActivityAssignment>), FormatError> {
        let ground = ElementSet::new(self.ground.iter().copied());
        let family = self
            .family
            .iter()
            .map(|m| ElementSet::new(m.iter().copied()));
        let sys = CoveringSystem::new(ground, family, self.rank)
            .map_err(|e| FormatError(e.to_string()))?;
        let act = match &self.activity {
            None => None,
            Some(map) => {
                let mut pairs = Vec::new();
                for (key, active) in map {
                    let basis = parse_basis_key(key)?;
                    pairs.push((basis, ElementSet::new(active.iter().copied())));
                }
                Some(ActivityAssignment::new(pairs))
            }
        };
        Ok((sys, act))
    }
}

pub fn basis_key(basis: &ElementSet) -> String {
    basis
        .iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn parse_basis_key(key: &str) -> Result<ElementSet, FormatError> {
    let mut elements = Vec::new();
    for part in key.split(',') {
        match part.trim().parse::<u32>() {
            Ok(e) => elements.push(e),
            Err(_) => return bad(format!("bad basis key '{key}'")),
        }
    }
    Ok(ElementSet::new(elements))
}

/// An explicit gain-edge list `[[tail, head, gain], ...]`, used for order
/// files and standalone graphs.
pub type EdgeListJson = Vec<(u32, u32, i64)>;

pub fn edges_to_json(graph: &GainGraph) -> EdgeListJson {
    graph
        .edges()
        .iter()
        .map(|e| (e.tail(), e.head(), e.gain()))
        .collect()
}

/// Reorders `graph` so its edge order follows the file's list, which must
/// be a permutation of the graph's edges.
pub fn apply_edge_order(graph: &GainGraph, order: &EdgeListJson) -> Result<GainGraph, FormatError> {
    let mut perm = Vec::with_capacity(order.len());
    for &(t, h, g) in order {
        let edge = GainEdge::new(t, h, g).map_err(|e| FormatError(e.to_string()))?;
        match graph.edge_rank(&edge) {
            Some(rank) => perm.push(rank),
            None => return bad(format!("edge {edge} not in the graph")),
        }
    }
    graph
        .reordered(&perm)
        .map_err(|e| FormatError(e.to_string()))
}

/// Exact decimal strings for a count vector.
pub fn vector_strings(v: &ActivityVector) -> Vec<String> {
    v.entries().iter().map(|e| e.to_string()).collect()
}

/// Exact decimal strings for polynomial coefficients, ascending exponent.
pub fn poly_strings(p: &IntPolynomial) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}
