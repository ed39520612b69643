//! Separator tests on reduced instances, where every vertex lies on a chordless
//! canonical path and every s-t path must use a single crossing edge to get from the
//! s-side of one token to the t-side of another.

use std::collections::BTreeSet;

use crate::canonical::{CanonicalPaths, Configuration};
use crate::graph::{Instance, Vertex};
use crate::preprocess::ReducedInstance;

/// An edge between two distinct canonical paths, by path index and 1-based position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CrossingEdge {
    pub path_a: usize,
    pub pos_a: usize,
    pub path_b: usize,
    pub pos_b: usize,
}

impl CrossingEdge {
    /// True if the edge links the s-side of one token to the t-side of the other.
    #[inline]
    pub fn opens(&self, pos: &[usize]) -> bool {
        let (ta, tb) = (pos[self.path_a], pos[self.path_b]);
        (self.pos_a > ta && self.pos_b < tb) || (self.pos_b > tb && self.pos_a < ta)
    }
}

#[derive(Debug, Clone)]
pub struct CrossingEdgeIndex {
    edges: Vec<CrossingEdge>,
    // edges[by_pair[i][j]] for i < j
    by_pair: Vec<Vec<Vec<usize>>>,
}

impl CrossingEdgeIndex {
    /// Collects the crossing edges of `instance` with respect to `cp`.
    ///
    /// Edges touching off-path vertices or terminals are ignored, so the index only
    /// describes separation correctly when every vertex lies on a path.
    pub fn new(instance: &Instance, cp: &CanonicalPaths) -> Self {
        let k = cp.len();
        let mut edges = Vec::new();
        let mut by_pair = vec![vec![Vec::new(); k]; k];
        for (u, v) in instance.graph().edges() {
            let (Some((i, p)), Some((j, q))) = (cp.position_of(u), cp.position_of(v)) else {
                continue;
            };
            if i == j {
                continue;
            }
            let e = if i < j {
                CrossingEdge {
                    path_a: i,
                    pos_a: p,
                    path_b: j,
                    pos_b: q,
                }
            } else {
                CrossingEdge {
                    path_a: j,
                    pos_a: q,
                    path_b: i,
                    pos_b: p,
                }
            };
            by_pair[e.path_a][e.path_b].push(edges.len());
            edges.push(e);
        }
        CrossingEdgeIndex { edges, by_pair }
    }

    pub fn edges(&self) -> &[CrossingEdge] {
        &self.edges
    }

    pub fn between(&self, i: usize, j: usize) -> impl Iterator<Item = &CrossingEdge> {
        let (i, j) = (i.min(j), i.max(j));
        self.by_pair[i][j].iter().map(|&e| &self.edges[e])
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// True if no crossing edge opens an s-t path around the tokens at `pos`.
    #[inline]
    pub fn separates(&self, pos: &[usize]) -> bool {
        !self.edges.iter().any(|e| e.opens(pos))
    }
}

/// Crossing-edge separator test for a configuration of a reduced instance.
pub fn is_config_separator(ri: &ReducedInstance, c: &Configuration) -> bool {
    CrossingEdgeIndex::new(&ri.instance, &ri.paths).separates(&c.pos)
}

fn outside_tokens(inst: &Instance, v: Vertex) -> bool {
    !inst.is_terminal(v) && !inst.a().contains(&v) && !inst.b().contains(&v)
}

/// Vertices outside `A ∪ B` with at least two neighbours on one foreign path.
/// Some separator of every reconfiguration sequence contains each of them.
pub fn unskippable_vertices(ri: &ReducedInstance) -> Vec<Vertex> {
    let (inst, cp) = (&ri.instance, &ri.paths);
    inst.graph()
        .vertices()
        .filter(|&v| outside_tokens(inst, v))
        .filter(|&v| {
            let own = cp.position_of(v).map(|(i, _)| i);
            let mut hits = vec![0usize; cp.len()];
            inst.graph()
                .neighbors(v)
                .iter()
                .filter_map(|&w| cp.position_of(w))
                .any(|(i, _)| {
                    hits[i] += 1;
                    Some(i) != own && hits[i] >= 2
                })
        })
        .collect()
}

/// Crossing edges with both ends outside `A ∪ B`; every reconfiguration sequence
/// occupies one of their endpoints at some point.
pub fn unskippable_edges(ri: &ReducedInstance) -> Vec<(Vertex, Vertex)> {
    let (inst, cp) = (&ri.instance, &ri.paths);
    let set: BTreeSet<_> = inst
        .graph()
        .edges()
        .filter(|&(u, v)| outside_tokens(inst, u) && outside_tokens(inst, v))
        .filter(|&(u, v)| match (cp.position_of(u), cp.position_of(v)) {
            (Some((i, _)), Some((j, _))) => i != j,
            _ => false,
        })
        .collect();
    set.into_iter().collect()
}
