//! Canonical paths: chordless internally disjoint s-t paths with the token
//! positions of `A` and `B` and the per-path movement windows.
//!
//! Positions are 1-based along each path, with `s` at position 1 and `t` at
//! position `L(i)`. Path indices are 0-based.

use crate::error::{Error, Result};
use crate::flow::DisjointPaths;
use crate::graph::{Graph, Instance, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalPaths {
    paths: Vec<Vec<Vertex>>,
    // (path, position) of every non-terminal path vertex
    position_of: Vec<Option<(usize, usize)>>,
    a: Vec<usize>,
    b: Vec<usize>,
}

/// One token position per canonical path.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Configuration {
    pub pos: Vec<usize>,
}

/// Shortcuts every chord of `path`, scanning from the start and always jumping to the
/// farthest later neighbour. Returns true if anything was removed.
pub fn shortcut(graph: &Graph, path: &mut Vec<Vertex>) -> bool {
    shortcut_with(path, |u, v| graph.has_edge(u, v))
}

pub(crate) fn shortcut_with(
    path: &mut Vec<Vertex>,
    adjacent: impl Fn(Vertex, Vertex) -> bool,
) -> bool {
    let before = path.len();
    let mut j = 0;
    while j + 2 < path.len() {
        let far = (j + 2..path.len())
            .rev()
            .find(|&q| adjacent(path[j], path[q]));
        if let Some(q) = far {
            path.drain(j + 1..q);
        }
        j += 1;
    }
    path.len() < before
}

impl CanonicalPaths {
    /// Shortcuts the paths of `dp` until they are chordless and locates `A` and `B` on them.
    pub fn new(instance: &Instance, dp: &DisjointPaths) -> Result<Self> {
        let mut paths = dp.paths.clone();
        for path in &mut paths {
            while shortcut(instance.graph(), path) {}
        }
        Self::from_chordless(instance, paths)
    }

    /// Builds the structure from paths that are already chordless.
    pub fn from_chordless(instance: &Instance, paths: Vec<Vec<Vertex>>) -> Result<Self> {
        let mut position_of = vec![None; instance.vertex_count() + 1];
        for (i, path) in paths.iter().enumerate() {
            for (j, &v) in path.iter().enumerate().take(path.len() - 1).skip(1) {
                position_of[v] = Some((i, j + 1));
            }
        }
        let mut cp = CanonicalPaths {
            paths,
            position_of,
            a: Vec::new(),
            b: Vec::new(),
        };
        for &v in instance.a().iter().chain(instance.b()) {
            if cp.position_of[v].is_none() {
                return Err(Error::SeparatorOffPath(v));
            }
        }
        cp.a = cp.locate(instance.a())?.pos;
        cp.b = cp.locate(instance.b())?.pos;
        Ok(cp)
    }

    /// Number of paths, `k`.
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn paths(&self) -> &[Vec<Vertex>] {
        &self.paths
    }

    pub fn path(&self, i: usize) -> &[Vertex] {
        &self.paths[i]
    }

    /// Number of vertices on path `i`, including both terminals.
    pub fn path_len(&self, i: usize) -> usize {
        self.paths[i].len()
    }

    /// Vertex at 1-based position `j` of path `i`.
    pub fn vertex(&self, i: usize, j: usize) -> Vertex {
        self.paths[i][j - 1]
    }

    /// `(path, position)` of a non-terminal vertex, or `None` if it lies on no path.
    pub fn position_of(&self, v: Vertex) -> Option<(usize, usize)> {
        self.position_of.get(v).copied().flatten()
    }

    pub fn on_path(&self, v: Vertex) -> bool {
        self.position_of(v).is_some()
    }

    /// Start positions `a_i`.
    pub fn a(&self) -> &[usize] {
        &self.a
    }

    /// Goal positions `b_i`.
    pub fn b(&self) -> &[usize] {
        &self.b
    }

    pub fn l(&self, i: usize) -> usize {
        self.a[i].min(self.b[i])
    }

    pub fn r(&self, i: usize) -> usize {
        self.a[i].max(self.b[i])
    }

    /// `(l_i, r_i)` for every path; a shortest sequence keeps each token inside its window.
    pub fn windows(&self) -> Vec<(usize, usize)> {
        (0..self.len()).map(|i| (self.l(i), self.r(i))).collect()
    }

    /// +1 if the token on path `i` moves towards `t`, -1 if towards `s`, 0 if it stays.
    pub fn direction(&self, i: usize) -> isize {
        (self.b[i] as isize - self.a[i] as isize).signum()
    }

    pub fn start(&self) -> Configuration {
        Configuration {
            pos: self.a.clone(),
        }
    }

    pub fn goal(&self) -> Configuration {
        Configuration {
            pos: self.b.clone(),
        }
    }

    /// Positions of a minimum separator, one per path.
    pub fn locate(&self, set: &[Vertex]) -> Result<Configuration> {
        let mut pos = vec![0; self.len()];
        let mut hits = vec![0; self.len()];
        for &v in set {
            match self.position_of(v) {
                Some((i, j)) => {
                    pos[i] = j;
                    hits[i] += 1;
                }
                None => return Err(Error::SeparatorOffPath(v)),
            }
        }
        if let Some(i) = hits.iter().position(|&h| h != 1) {
            return Err(Error::NotOnePerPath {
                path: i,
                hits: hits[i],
            });
        }
        Ok(Configuration { pos })
    }

    /// The vertex set occupied by a configuration, sorted.
    pub fn vertices_of(&self, c: &Configuration) -> Vec<Vertex> {
        let mut vs: Vec<_> = c
            .pos
            .iter()
            .enumerate()
            .map(|(i, &j)| self.vertex(i, j))
            .collect();
        vs.sort_unstable();
        vs
    }
}

/// Extracts canonical paths from a maximum disjoint path family.
pub fn canonical_paths(instance: &Instance, dp: &DisjointPaths) -> Result<CanonicalPaths> {
    CanonicalPaths::new(instance, dp)
}

/// Token positions of a minimum separator.
pub fn locate_tokens(cp: &CanonicalPaths, set: &[Vertex]) -> Result<Configuration> {
    cp.locate(set)
}

pub fn windows(cp: &CanonicalPaths) -> Vec<(usize, usize)> {
    cp.windows()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::flow::max_disjoint_paths;

    fn cp_of(inst: &Instance) -> CanonicalPaths {
        canonical_paths(inst, &max_disjoint_paths(inst)).unwrap()
    }

    #[test]
    fn shortcut_removes_chord() {
        // s=1 x=2 y=3 z=4 t=5 with chord {x, z}
        let g = Graph::from_edges(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (2, 4)]).unwrap();
        let mut p = vec![1, 2, 3, 4, 5];
        assert!(shortcut(&g, &mut p));
        assert_eq!(p, vec![1, 2, 4, 5]);
        assert!(!shortcut(&g, &mut p));
    }

    #[test]
    fn fix_a_tokens_and_windows() {
        let inst = fixtures::fix_a();
        let cp = cp_of(&inst);
        assert_eq!(cp.paths(), &[vec![1, 2, 4, 6], vec![1, 3, 5, 6]]);
        assert_eq!(locate_tokens(&cp, inst.a()).unwrap().pos, vec![2, 2]);
        assert_eq!(locate_tokens(&cp, inst.b()).unwrap().pos, vec![3, 3]);
        assert_eq!(windows(&cp), vec![(2, 3), (2, 3)]);
        // {a1, a2} misses the second path
        assert_eq!(
            locate_tokens(&cp, &[2, 4]),
            Err(Error::NotOnePerPath { path: 0, hits: 2 })
        );
    }

    #[test]
    fn degenerate_window() {
        // s=1 v=2 w=3 t=4, A = B = {w}
        let g = Graph::from_edges(4, &[(1, 2), (2, 3), (3, 4)]).unwrap();
        let inst = Instance::new(g, 1, 4, vec![3], vec![3]).unwrap();
        assert_eq!(cp_of(&inst).windows(), vec![(3, 3)]);
    }

    #[test]
    fn gadget_paths_are_chordless() {
        let inst = fixtures::fix_b();
        let cp = cp_of(&inst);
        assert_eq!(cp.windows(), vec![(2, 4), (2, 4)]);
        let inst = fixtures::fix_c();
        let cp = cp_of(&inst);
        assert_eq!(cp.len(), 3);
        for (i, p) in cp.paths().iter().enumerate() {
            let v = i + 1;
            assert_eq!(p, &vec![1, 1 + v, 4 + v, 7 + v, 11]);
        }
    }
}
