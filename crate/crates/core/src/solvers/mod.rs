//! Reconfiguration solvers for both token models.
//!
//! Solvers work on canonical-path positions of a derived instance and report
//! [`VertexMove`]s in the ids of the instance they were given.

mod exact;
mod greedy;
mod oracle;
mod pathdecomp;

use std::fmt;
use std::str::FromStr;

use crate::canonical::CanonicalPaths;
use crate::error::{Error, Result};
use crate::flow::max_disjoint_paths;
use crate::graph::{Instance, Vertex};
use crate::preprocess::ReducedInstance;

pub use exact::{solve_tj_shortest, tj_shortest_reduced, SearchOptions, DEFAULT_MAX_STATES};
pub use greedy::{solve_tj_feasible, solve_ts_shortest, tj_greedy_reduced};
pub use oracle::{
    all_minimum_separators, oracle_bfs, oracle_bfs_forbidding, oracle_bfs_with, separators_of_size,
    OracleOptions, SUBSET_LIMIT,
};
pub use pathdecomp::{pathdecomp_from_solution, PathDecomposition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Model {
    Slide,
    Jump,
}

impl Model {
    pub fn as_str(self) -> &'static str {
        match self {
            Model::Slide => "slide",
            Model::Jump => "jump",
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Model {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "slide" => Ok(Model::Slide),
            "jump" => Ok(Model::Jump),
            other => Err(format!("unknown model `{other}`")),
        }
    }
}

/// One token move along path `path`, between 1-based positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Move {
    pub path: usize,
    pub from: usize,
    pub to: usize,
    pub model: Model,
}

/// Moves relative to one set of canonical paths, starting at `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReconfigSequence {
    pub model: Model,
    pub moves: Vec<Move>,
}

impl ReconfigSequence {
    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// The moves as vertex pairs of the instance `cp` belongs to.
    pub fn vertex_pairs(&self, cp: &CanonicalPaths) -> Vec<(Vertex, Vertex)> {
        self.moves
            .iter()
            .map(|m| (cp.vertex(m.path, m.from), cp.vertex(m.path, m.to)))
            .collect()
    }
}

/// A move by vertex ids; `path` indexes the canonical paths of the same instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VertexMove {
    pub path: usize,
    pub from: Vertex,
    pub to: Vertex,
}

/// Result of a solver run on an instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub model: Model,
    /// True if `moves` is guaranteed to be of minimum length.
    pub shortest: bool,
    /// `None` when `B` is unreachable from `A`.
    pub moves: Option<Vec<VertexMove>>,
    pub states_explored: u64,
}

impl Solution {
    pub fn feasible(&self) -> bool {
        self.moves.is_some()
    }

    pub fn length(&self) -> Option<usize> {
        self.moves.as_ref().map(Vec::len)
    }
}

/// Attaches path indices of `instance`'s canonical paths to vertex pairs.
///
/// Both ends of a move between minimum separators lie on the same canonical path.
pub fn label_moves(instance: &Instance, pairs: &[(Vertex, Vertex)]) -> Result<Vec<VertexMove>> {
    let cp = CanonicalPaths::new(instance, &max_disjoint_paths(instance))?;
    pairs
        .iter()
        .map(|&(from, to)| {
            let (path, _) = cp.position_of(from).ok_or(Error::SeparatorOffPath(from))?;
            Ok(VertexMove { path, from, to })
        })
        .collect()
}

/// Vertex pairs of a reduced-instance sequence, in the ids of the original instance.
pub(crate) fn lift(ri: &ReducedInstance, seq: &ReconfigSequence) -> Vec<(Vertex, Vertex)> {
    seq.vertex_pairs(&ri.paths)
        .into_iter()
        .map(|(u, v)| (ri.original(u), ri.original(v)))
        .collect()
}
