//! Level-order construction of the tree of a Frobenius (pseudo-)variety.
//!
//! The semigroups of `𝒩_r(a, b, X)` form a tree rooted at `{0, r + 1, →}`
//! in which the parent of `S` is `S ∪ {F(S)}`. The children of `S` are the
//! sets `S ∖ {m}` for minimal generators `m > F(S)` with `m ∉ X` and
//! `(m - b_i) / a_i ∉ S ∖ {0}` for every `i`. A node at depth `k` has genus
//! `r + k`, so the solutions of `P_r(a, b, X, g)` are read off level `g`.

use std::fmt::Write as _;
use std::ops::Range;

use rayon::prelude::*;

use crate::closure::is_ab_monoid;
use crate::error::{Error, Result};
use crate::instance::ProblemInstance;
use crate::semigroup::NumericalSemigroup;

pub const DEFAULT_MAX_NODES: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeOptions {
    /// Total node budget across all levels.
    pub max_nodes: usize,
    /// Worker threads for level expansion; `1` expands sequentially and `0`
    /// uses the rayon default.
    pub threads: usize,
}

impl Default for TreeOptions {
    fn default() -> Self {
        Self {
            max_nodes: DEFAULT_MAX_NODES,
            threads: 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarietyNode {
    pub semigroup: NumericalSemigroup,
    pub depth: usize,
    /// Generator removed from the parent; equals `F(semigroup)`.
    pub removed: Option<u64>,
    /// Index of the parent in [`VarietyTree::nodes`].
    pub parent: Option<usize>,
}

/// Nodes stored level by level; parents are indices into the same arena.
#[derive(Debug, Clone)]
pub struct VarietyTree {
    nodes: Vec<VarietyNode>,
    levels: Vec<Range<usize>>,
}

impl VarietyTree {
    pub fn nodes(&self) -> &[VarietyNode] {
        &self.nodes
    }

    pub fn root(&self) -> &VarietyNode {
        &self.nodes[0]
    }

    /// Number of non-empty levels enumerated.
    pub fn depth_count(&self) -> usize {
        self.levels.len()
    }

    /// Nodes at distance `k` from the root; empty past the last level.
    pub fn level(&self, k: usize) -> &[VarietyNode] {
        self.levels
            .get(k)
            .map_or(&[], |range| &self.nodes[range.clone()])
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|r| r.len()).collect()
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Renders the tree as a Graphviz digraph, nodes and edges in level
    /// order.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph variety {\n");
        for node in &self.nodes {
            let _ = writeln!(out, "  \"{}\";", node.semigroup);
        }
        for node in &self.nodes {
            if let Some(p) = node.parent {
                let _ = writeln!(
                    out,
                    "  \"{}\" -> \"{}\";",
                    self.nodes[p].semigroup, node.semigroup
                );
            }
        }
        out.push_str("}\n");
        out
    }
}

/// `{0, r + 1, →}`, which is `ℕ` for `r = 0`.
pub fn root(inst: &ProblemInstance) -> Result<NumericalSemigroup> {
    let k = inst.r().checked_add(1).ok_or(Error::Overflow)?;
    NumericalSemigroup::ordinary(k)
}

/// Direct membership test for `𝒩_r(a, b, X)`: `X ⊆ S`, `S ⊆ {0, r + 1, →}`
/// and `⟨msg(S)⟩` is an `(a, b)`-monoid.
pub fn in_variety(s: &NumericalSemigroup, inst: &ProblemInstance) -> Result<bool> {
    Ok(inst.x().iter().all(|&x| s.contains(x as i64))
        && s.within_ordinary(inst.r())
        && is_ab_monoid(s.msg(), inst.a(), inst.b())?)
}

/// Whether removing the minimal generator `m` keeps `s` in the variety.
fn admissible(s: &NumericalSemigroup, m: u64, inst: &ProblemInstance) -> bool {
    if inst.x().binary_search(&m).is_ok() {
        return false;
    }
    inst.maps()
        .all(|(a, b)| !(m > b && (m - b).is_multiple_of(a) && s.contains(((m - b) / a) as i64)))
}

/// Children of `s` in the tree, ordered by removed generator.
pub fn children(s: &NumericalSemigroup, inst: &ProblemInstance) -> Result<Vec<NumericalSemigroup>> {
    let frobenius = s.frobenius();
    s.msg()
        .iter()
        .filter(|&&m| m as i64 > frobenius && admissible(s, m, inst))
        .map(|&m| s.remove_generator(m))
        .collect()
}

fn expand(
    parents: &[VarietyNode],
    offset: usize,
    inst: &ProblemInstance,
) -> Result<Vec<VarietyNode>> {
    let per_parent = |(i, node): (usize, &VarietyNode)| -> Result<Vec<VarietyNode>> {
        Ok(children(&node.semigroup, inst)?
            .into_iter()
            .map(|child| VarietyNode {
                removed: Some(child.frobenius() as u64),
                semigroup: child,
                depth: node.depth + 1,
                parent: Some(offset + i),
            })
            .collect())
    };
    Ok(parents
        .iter()
        .enumerate()
        .map(per_parent)
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect())
}

fn par_expand(
    parents: &[VarietyNode],
    offset: usize,
    inst: &ProblemInstance,
) -> Result<Vec<VarietyNode>> {
    // Chunks keep their order through `collect`, so the output matches the
    // sequential expansion exactly.
    const CHUNK: usize = 64;
    let chunks: Vec<Vec<VarietyNode>> = parents
        .par_chunks(CHUNK)
        .enumerate()
        .map(|(c, chunk)| expand(chunk, offset + c * CHUNK, inst))
        .collect::<Result<_>>()?;
    Ok(chunks.into_iter().flatten().collect())
}

/// Breadth-first levels `A_0, ..., A_depth_limit` of the tree, stopping
/// early once a level is empty.
pub fn enumerate(
    inst: &ProblemInstance,
    depth_limit: usize,
    options: &TreeOptions,
) -> Result<VarietyTree> {
    let root = root(inst)?;
    assert!(
        in_variety(&root, inst)?,
        "{root} must belong to the variety of {inst}"
    );
    let mut tree = VarietyTree {
        nodes: vec![VarietyNode {
            semigroup: root,
            depth: 0,
            removed: None,
            parent: None,
        }],
        levels: Vec::new(),
    };
    tree.levels.push(0..1);

    let pool = match options.threads {
        1 => None,
        n => Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .expect("failed to build thread pool"),
        ),
    };

    for depth in 0..depth_limit {
        let current = tree.levels[depth].clone();
        let parents = &tree.nodes[current.clone()];
        let next = match &pool {
            None => expand(parents, current.start, inst)?,
            Some(pool) => pool.install(|| par_expand(parents, current.start, inst))?,
        };
        if next.is_empty() {
            break;
        }
        let total = tree.nodes.len() + next.len();
        if total > options.max_nodes {
            return Err(Error::ResourceLimit {
                nodes: total,
                depth: depth + 1,
            });
        }
        let start = tree.nodes.len();
        tree.nodes.extend(next);
        tree.levels.push(start..tree.nodes.len());
    }
    Ok(tree)
}

/// All solutions of `P_r(a, b, X, g)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSet {
    /// Each solution ascending; the list sorted lexicographically.
    pub solutions: Vec<Vec<u64>>,
    /// Nodes (or candidates, for the oracle) examined.
    pub node_count: usize,
    /// Always `false` for a returned set: exceeding a budget is an error.
    pub truncated: bool,
}

impl SolutionSet {
    pub fn len(&self) -> usize {
        self.solutions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }
}

/// Every solution, read from level `g` of the tree as
/// `{0, r + 1, →} ∖ S`.
pub fn solve(inst: &ProblemInstance, options: &TreeOptions) -> Result<SolutionSet> {
    let g = usize::try_from(inst.g()).map_err(|_| Error::Overflow)?;
    let tree = enumerate(inst, g, options)?;
    let mut solutions: Vec<Vec<u64>> = tree
        .level(g)
        .iter()
        .map(|node| node.semigroup.gaps_within(inst.r()))
        .collect();
    solutions.sort();
    Ok(SolutionSet {
        solutions,
        node_count: tree.node_count(),
        truncated: false,
    })
}

/// DOT rendering of the first `depth_limit` levels.
pub fn export_tree(
    inst: &ProblemInstance,
    depth_limit: usize,
    options: &TreeOptions,
) -> Result<String> {
    enumerate(inst, depth_limit, options).map(|t| t.to_dot())
}
