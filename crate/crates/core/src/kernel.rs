//! Kernelization for the jump budget: either an early answer or a preprocessed
//! instance with `O(budget^2)` vertices and edges.

use std::fmt;

use crate::error::Result;
use crate::graph::{Instance, Vertex};
use crate::matching::matching_size;
use crate::preprocess::{preprocess_tj, ReducedInstance};
use crate::separator_check::{unskippable_vertices, CrossingEdgeIndex};

/// The rule that answered no.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NoRule {
    /// More tokens must move than the budget allows.
    TooManyTokens { k: usize },
    /// Some path is too long to be crossed within the budget.
    LongPath { path: usize, len: usize },
    /// The long paths together hold too many vertices.
    LongPathsTotal { total: usize },
    /// A matching of unskippable crossing edges larger than the budget.
    Matching { size: usize },
    /// Jumps must land on every vertex of `B`, on every unskippable vertex and on an
    /// endpoint of every matched edge, and these landings are distinct.
    Landings { needed: usize },
}

impl fmt::Display for NoRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NoRule::TooManyTokens { k } => write!(f, "{k} tokens must move"),
            NoRule::LongPath { path, len } => write!(f, "path {} has {len} vertices", path + 1),
            NoRule::LongPathsTotal { total } => write!(f, "long paths hold {total} vertices"),
            NoRule::Matching { size } => write!(f, "matching of {size} unskippable crossing edges"),
            NoRule::Landings { needed } => write!(f, "at least {needed} jumps needed"),
        }
    }
}

#[derive(Debug, Clone)]
pub enum KernelOutcome {
    Kernel(Box<ReducedInstance>, usize),
    DecidedNo(NoRule),
    DecidedYes,
}

/// Vertex bound `8l^2 + 5l` of an emitted kernel.
pub fn vertex_bound(budget: usize) -> usize {
    8 * budget * budget + 5 * budget
}

/// Edge bound `12l^2 + 7l` of an emitted kernel.
pub fn edge_bound(budget: usize) -> usize {
    12 * budget * budget + 7 * budget
}

pub fn within_bounds(instance: &Instance, budget: usize) -> bool {
    instance.vertex_count() <= vertex_bound(budget)
        && instance.graph().edge_count() <= edge_bound(budget)
}

/// Decides whether `B` is reachable from `A` within `budget` jumps, or shrinks the
/// instance to an equivalent one of size quadratic in `budget`.
///
/// Path lengths count both terminals.
pub fn kernelize(instance: &Instance, budget: usize) -> Result<KernelOutcome> {
    let ri = preprocess_tj(instance)?;
    let k = ri.k_reduced();
    if k == 0 {
        return Ok(KernelOutcome::DecidedYes);
    }
    if k > budget {
        return Ok(KernelOutcome::DecidedNo(NoRule::TooManyTokens { k }));
    }
    let cp = &ri.paths;
    let (path_cap, long_from) = (4 * (budget + 1) * (budget + 1) + 4, 4 * budget + 4);
    if let Some(path) = (0..cp.len()).find(|&i| cp.path_len(i) > path_cap) {
        return Ok(KernelOutcome::DecidedNo(NoRule::LongPath {
            path,
            len: cp.path_len(path),
        }));
    }
    let total: usize = (0..cp.len())
        .map(|i| cp.path_len(i))
        .filter(|&len| len > long_from)
        .sum();
    if total > 2 * (2 * budget + 2) * (2 * budget + 2) + 2 * budget + 2 {
        return Ok(KernelOutcome::DecidedNo(NoRule::LongPathsTotal { total }));
    }
    let unskippable = unskippable_vertices(&ri);
    let size = unskippable_matching(&ri, &unskippable);
    if size > budget {
        return Ok(KernelOutcome::DecidedNo(NoRule::Matching { size }));
    }
    let needed = k + unskippable.len() + size;
    if needed > budget {
        return Ok(KernelOutcome::DecidedNo(NoRule::Landings { needed }));
    }
    Ok(KernelOutcome::Kernel(Box::new(ri), budget))
}

/// Maximum matching among crossing edges that avoid `A`, `B` and `unskippable`.
fn unskippable_matching(ri: &ReducedInstance, unskippable: &[Vertex]) -> usize {
    let inst = &ri.instance;
    let mut excluded = vec![false; inst.vertex_count() + 1];
    for &v in inst.a().iter().chain(inst.b()).chain(unskippable) {
        excluded[v] = true;
    }
    let cp = &ri.paths;
    let edges: Vec<(usize, usize)> = CrossingEdgeIndex::new(inst, cp)
        .edges()
        .iter()
        .map(|e| (cp.vertex(e.path_a, e.pos_a), cp.vertex(e.path_b, e.pos_b)))
        .filter(|&(u, v)| !excluded[u] && !excluded[v])
        .map(|(u, v)| (u - 1, v - 1))
        .collect();
    matching_size(inst.vertex_count(), &edges)
}
