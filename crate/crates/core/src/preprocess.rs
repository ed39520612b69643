//! Reduction rules for the token jumping model.
//!
//! Every rule maps an instance to an equivalent one whose vertex set is a subset of
//! the input's, so solutions on the reduced instance lift back through a plain
//! vertex renaming. Only [`trim_to_windows`] is valid for token sliding as well.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::canonical::{shortcut_with, CanonicalPaths};
use crate::error::Result;
use crate::flow::max_disjoint_paths;
use crate::graph::{Graph, Instance, Vertex};

/// Renaming from the vertices of a derived instance to those of its source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMap(Vec<Vertex>);

impl VertexMap {
    pub fn identity(n: usize) -> Self {
        VertexMap((0..=n).collect())
    }

    /// `origin[v]` is the source vertex of derived vertex `v`; slot 0 is ignored.
    pub fn from_origin(origin: Vec<Vertex>) -> Self {
        VertexMap(origin)
    }

    pub fn get(&self, v: Vertex) -> Vertex {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `(derived, source)` pairs in ascending derived order.
    pub fn pairs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.0.iter().copied().enumerate().skip(1)
    }

    /// Map from this map's domain to the source of `outer`, where `outer` maps
    /// this map's codomain further back.
    pub fn then(&self, outer: &VertexMap) -> VertexMap {
        VertexMap(
            self.0
                .iter()
                .enumerate()
                .map(|(i, &v)| if i == 0 { 0 } else { outer.get(v) })
                .collect(),
        )
    }
}

/// Output of a single rule.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub instance: Instance,
    pub paths: CanonicalPaths,
    pub map: VertexMap,
    pub changed: bool,
}

/// Output of [`remove_shared`].
#[derive(Debug, Clone)]
pub struct SharedRemoval {
    pub instance: Instance,
    pub map: VertexMap,
    /// Vertices of `A ∩ B`, in the input's ids; their tokens never move.
    pub fixed_tokens: Vec<Vertex>,
}

/// A fully preprocessed instance for the jumping model.
#[derive(Debug, Clone)]
pub struct ReducedInstance {
    pub instance: Instance,
    pub paths: CanonicalPaths,
    /// Reduced vertex -> vertex of the original instance.
    pub vertex_map: VertexMap,
    /// Original vertices of `A ∩ B`, deleted from the reduced graph.
    pub fixed_tokens: Vec<Vertex>,
}

impl ReducedInstance {
    pub fn k_reduced(&self) -> usize {
        self.instance.k()
    }

    pub fn original(&self, v: Vertex) -> Vertex {
        self.vertex_map.get(v)
    }
}

/// Mutable working copy shared by all rules. Vertex ids are those of the input instance.
struct Work {
    adj: Vec<BTreeSet<Vertex>>,
    alive: Vec<bool>,
    s: Vertex,
    t: Vertex,
    a: Vec<Vertex>,
    b: Vec<Vertex>,
    token: Vec<bool>,
    paths: Vec<Vec<Vertex>>,
}

impl Work {
    fn new(instance: &Instance, cp: &CanonicalPaths) -> Self {
        let n = instance.vertex_count();
        let g = instance.graph();
        let mut token = vec![false; n + 1];
        for &v in instance.a().iter().chain(instance.b()) {
            token[v] = true;
        }
        Work {
            adj: (0..=n)
                .map(|v| {
                    if v == 0 {
                        BTreeSet::new()
                    } else {
                        g.neighbors(v).iter().copied().collect()
                    }
                })
                .collect(),
            alive: (0..=n).map(|v| v > 0).collect(),
            s: instance.s(),
            t: instance.t(),
            a: instance.a().to_vec(),
            b: instance.b().to_vec(),
            token,
            paths: cp.paths().to_vec(),
        }
    }

    fn is_terminal(&self, v: Vertex) -> bool {
        v == self.s || v == self.t
    }

    fn add_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        debug_assert!(u != v && self.alive[u] && self.alive[v]);
        self.adj[u].insert(v) && self.adj[v].insert(u)
    }

    fn remove_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].remove(&v) && self.adj[v].remove(&u)
    }

    fn delete(&mut self, v: Vertex) {
        for w in std::mem::take(&mut self.adj[v]) {
            self.adj[w].remove(&v);
        }
        self.alive[v] = false;
    }

    /// Index of every non-terminal path vertex as `(path, index into the path vector)`.
    fn placement(&self) -> Vec<Option<(usize, usize)>> {
        let mut at = vec![None; self.adj.len()];
        for (i, p) in self.paths.iter().enumerate() {
            for (j, &v) in p.iter().enumerate().take(p.len() - 1).skip(1) {
                at[v] = Some((i, j));
            }
        }
        at
    }

    fn shortcut_paths(&mut self) -> bool {
        let mut changed = false;
        let adj = &self.adj;
        for path in &mut self.paths {
            while shortcut_with(path, |u, v| adj[u].contains(&v)) {
                changed = true;
            }
        }
        changed
    }

    /// Deletes path vertices outside the windows and reconnects the window ends to the terminals.
    fn trim(&mut self) -> bool {
        let mut changed = false;
        for i in 0..self.paths.len() {
            let path = self.paths[i].clone();
            let ends: Vec<usize> = (1..path.len() - 1)
                .filter(|&j| self.token[path[j]])
                .collect();
            let (l, r) = (ends[0], ends[ends.len() - 1]);
            if l == 1 && r == path.len() - 2 {
                continue;
            }
            for &v in path[1..l].iter().chain(&path[r + 1..path.len() - 1]) {
                self.delete(v);
            }
            self.add_edge(self.s, path[l]);
            self.add_edge(path[r], self.t);
            let mut kept = vec![self.s];
            kept.extend_from_slice(&path[l..=r]);
            kept.push(self.t);
            self.paths[i] = kept;
            changed = true;
        }
        changed
    }

    /// Replaces every component of off-path vertices by a clique on its path neighbours,
    /// shortcutting chords this creates, until every vertex lies on a path.
    fn contract(&mut self) -> bool {
        let mut changed = self.shortcut_paths();
        loop {
            let at = self.placement();
            let on = |v: Vertex| v == self.s || v == self.t || at[v].is_some();
            let off: Vec<Vertex> = (1..self.adj.len())
                .filter(|&v| self.alive[v] && !on(v))
                .collect();
            if off.is_empty() {
                return changed;
            }
            let mut seen = vec![false; self.adj.len()];
            let mut cliques = Vec::new();
            for &root in &off {
                if seen[root] {
                    continue;
                }
                seen[root] = true;
                let mut boundary = BTreeSet::new();
                let mut queue = VecDeque::from([root]);
                while let Some(x) = queue.pop_front() {
                    for &w in &self.adj[x] {
                        if on(w) {
                            boundary.insert(w);
                        } else if !seen[w] {
                            seen[w] = true;
                            queue.push_back(w);
                        }
                    }
                }
                cliques.push(boundary.into_iter().collect::<Vec<_>>());
            }
            for v in off {
                self.delete(v);
            }
            for clique in cliques {
                for (x, &u) in clique.iter().enumerate() {
                    for &v in &clique[x + 1..] {
                        debug_assert!(
                            !(self.is_terminal(u) && self.is_terminal(v)),
                            "s-t path avoiding all paths"
                        );
                        self.add_edge(u, v);
                    }
                }
            }
            changed = true;
            self.shortcut_paths();
        }
    }

    /// Drops middle edges to a foreign path and contracts non-token vertices of degree two.
    fn reduce(&mut self) -> bool {
        let mut changed = false;
        loop {
            let mut round = false;
            let at = self.placement();
            for v in 1..self.adj.len() {
                if !self.alive[v] || self.is_terminal(v) {
                    continue;
                }
                let own = at[v].map(|(i, _)| i);
                let mut by_path: BTreeMap<usize, Vec<(usize, Vertex)>> = BTreeMap::new();
                for &w in &self.adj[v] {
                    if let Some((i, j)) = at[w] {
                        if Some(i) != own {
                            by_path.entry(i).or_default().push((j, w));
                        }
                    }
                }
                for (_, mut nbrs) in by_path {
                    if nbrs.len() >= 3 {
                        nbrs.sort_unstable();
                        for &(_, w) in &nbrs[1..nbrs.len() - 1] {
                            self.remove_edge(v, w);
                        }
                        round = true;
                    }
                }
            }
            for i in 0..self.paths.len() {
                let mut j = 1;
                while j + 1 < self.paths[i].len() {
                    let v = self.paths[i][j];
                    if !self.token[v] && self.adj[v].len() == 2 {
                        let (prev, next) = (self.paths[i][j - 1], self.paths[i][j + 1]);
                        self.delete(v);
                        self.add_edge(prev, next);
                        self.paths[i].remove(j);
                        round = true;
                    } else {
                        j += 1;
                    }
                }
            }
            if !round {
                return changed;
            }
            changed = true;
        }
    }

    /// Compacts the surviving vertices, keeping their relative order.
    fn finish(self) -> (Instance, CanonicalPaths, VertexMap) {
        let mut new_id = vec![0; self.adj.len()];
        let mut origin = vec![0];
        for (v, id) in new_id.iter_mut().enumerate().skip(1) {
            if self.alive[v] {
                origin.push(v);
                *id = origin.len() - 1;
            }
        }
        let n = origin.len() - 1;
        let mut edges = Vec::new();
        for &u in &origin[1..] {
            for &w in &self.adj[u] {
                if w > u {
                    edges.push((new_id[u], new_id[w]));
                }
            }
        }
        let graph = Graph::from_edges(n, &edges).expect("working graph is simple");
        let relabel = |set: &[Vertex]| set.iter().map(|&v| new_id[v]).collect::<Vec<_>>();
        let instance = Instance::new(
            graph,
            new_id[self.s],
            new_id[self.t],
            relabel(&self.a),
            relabel(&self.b),
        )
        .expect("reduction rules preserve instance validity");
        let paths = self.paths.iter().map(|p| relabel(p)).collect();
        let cp = CanonicalPaths::from_chordless(&instance, paths)
            .expect("tokens stay on the canonical paths");
        (instance, cp, VertexMap::from_origin(origin))
    }
}

fn run_rule(
    instance: &Instance,
    cp: &CanonicalPaths,
    rule: impl FnOnce(&mut Work) -> bool,
) -> Reduction {
    let mut w = Work::new(instance, cp);
    let changed = rule(&mut w);
    let (instance, paths, map) = w.finish();
    Reduction {
        instance,
        paths,
        map,
        changed,
    }
}

/// Deletes canonical-path vertices outside `[l_i, r_i]` and adds the edges
/// `{s, u_{i,l_i}}` and `{u_{i,r_i}, t}`. Off-path vertices are kept.
pub fn trim_to_windows(instance: &Instance, cp: &CanonicalPaths) -> Reduction {
    run_rule(instance, cp, Work::trim)
}

/// Joins path vertices connected through off-path vertices and deletes the latter,
/// shortcutting new chords until every vertex is on a chordless canonical path.
pub fn contract_offpath(instance: &Instance, cp: &CanonicalPaths) -> Reduction {
    run_rule(instance, cp, Work::contract)
}

/// Bounds every vertex to two neighbours per foreign path and contracts interior
/// vertices of degree two that hold no token of `A` or `B`.
///
/// Expects every vertex to lie on a canonical path.
pub fn reduce_degrees(instance: &Instance, cp: &CanonicalPaths) -> Reduction {
    run_rule(instance, cp, Work::reduce)
}

/// Deletes every vertex of `A ∩ B`; the tokens there never move in a shortest sequence.
pub fn remove_shared(instance: &Instance) -> SharedRemoval {
    let shared: Vec<Vertex> = instance
        .a()
        .iter()
        .copied()
        .filter(|v| instance.b().contains(v))
        .collect();
    if shared.is_empty() {
        return SharedRemoval {
            instance: instance.clone(),
            map: VertexMap::identity(instance.vertex_count()),
            fixed_tokens: shared,
        };
    }
    let n = instance.vertex_count();
    let mut new_id = vec![0; n + 1];
    let mut origin = vec![0];
    for (v, id) in new_id.iter_mut().enumerate().skip(1) {
        if !shared.contains(&v) {
            origin.push(v);
            *id = origin.len() - 1;
        }
    }
    let edges: Vec<_> = instance
        .graph()
        .edges()
        .filter(|(u, v)| new_id[*u] != 0 && new_id[*v] != 0)
        .map(|(u, v)| (new_id[u], new_id[v]))
        .collect();
    let keep = |set: &[Vertex]| {
        set.iter()
            .filter(|v| new_id[**v] != 0)
            .map(|&v| new_id[v])
            .collect::<Vec<_>>()
    };
    let reduced = Instance::new(
        Graph::from_edges(origin.len() - 1, &edges).expect("subgraph is simple"),
        new_id[instance.s()],
        new_id[instance.t()],
        keep(instance.a()),
        keep(instance.b()),
    )
    .expect("removing shared tokens keeps the remaining sets minimum");
    SharedRemoval {
        instance: reduced,
        map: VertexMap::from_origin(origin),
        fixed_tokens: shared,
    }
}

/// Applies every jumping-model reduction to a joint fixpoint: shared tokens are removed
/// first, then window trimming, off-path contraction and degree reduction repeat until
/// none of them changes the instance.
pub fn preprocess_tj(instance: &Instance) -> Result<ReducedInstance> {
    let shared = remove_shared(instance);
    let cp = CanonicalPaths::new(&shared.instance, &max_disjoint_paths(&shared.instance))?;
    let mut w = Work::new(&shared.instance, &cp);
    while w.trim() | w.contract() | w.reduce() {}
    let (reduced, paths, map) = w.finish();
    Ok(ReducedInstance {
        instance: reduced,
        paths,
        vertex_map: map.then(&shared.map),
        fixed_tokens: shared.fixed_tokens,
    })
}

/// Window trimming alone, which is all the sliding model admits.
pub fn trim_for_sliding(instance: &Instance) -> Result<Reduction> {
    let cp = CanonicalPaths::new(instance, &max_disjoint_paths(instance))?;
    Ok(trim_to_windows(instance, &cp))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::generators::{vc_gadget, PlainGraph};

    fn cp_of(inst: &Instance) -> CanonicalPaths {
        CanonicalPaths::new(inst, &max_disjoint_paths(inst)).unwrap()
    }

    fn inst(
        n: usize,
        edges: &[(Vertex, Vertex)],
        s: Vertex,
        t: Vertex,
        a: &[Vertex],
        b: &[Vertex],
    ) -> Instance {
        Instance::new(
            Graph::from_edges(n, edges).unwrap(),
            s,
            t,
            a.to_vec(),
            b.to_vec(),
        )
        .unwrap()
    }

    #[test]
    fn trim_cuts_outside_window() {
        // s=1 x=2 a=3 m=4 b=5 y=6 t=7
        let i = inst(
            7,
            &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)],
            1,
            7,
            &[3],
            &[5],
        );
        let red = trim_to_windows(&i, &cp_of(&i));
        assert!(red.changed);
        assert_eq!(red.instance.vertex_count(), 5);
        let origin: Vec<_> = red.map.pairs().map(|(_, o)| o).collect();
        assert_eq!(origin, vec![1, 3, 4, 5, 7]);
        assert!(red.instance.graph().has_edge(1, 2));
        assert!(red.instance.graph().has_edge(4, 5));
        assert_eq!(red.paths.paths(), &[vec![1, 2, 3, 4, 5]]);
    }

    #[test]
    fn trim_collapses_degenerate_window() {
        let i = inst(5, &[(1, 2), (2, 3), (3, 4), (4, 5)], 1, 5, &[3], &[3]);
        let red = trim_to_windows(&i, &cp_of(&i));
        assert_eq!(red.paths.paths(), &[vec![1, 2, 3]]);
        assert_eq!(red.instance.a(), &[2]);
    }

    #[test]
    fn trim_leaves_full_windows() {
        for i in [fixtures::fix_a(), fixtures::fix_b()] {
            let red = trim_to_windows(&i, &cp_of(&i));
            assert!(!red.changed);
            assert_eq!(red.instance, i);
        }
    }

    #[test]
    fn contract_joins_through_offpath_vertex() {
        // paths s=1 a1=2 a2=4 t=6 and s=1 b1=3 b2=5 t=6, off-path w=7 between a1 and b2
        let i = inst(
            7,
            &[
                (1, 2),
                (1, 3),
                (2, 4),
                (3, 5),
                (4, 6),
                (5, 6),
                (2, 7),
                (7, 5),
            ],
            1,
            6,
            &[2, 3],
            &[4, 5],
        );
        let red = contract_offpath(&i, &cp_of(&i));
        assert!(red.changed);
        assert_eq!(red.instance.vertex_count(), 6);
        assert!(red.instance.graph().has_edge(2, 5));
    }

    #[test]
    fn contract_drops_pendant_component() {
        let i = inst(
            8,
            &[
                (1, 2),
                (1, 3),
                (2, 4),
                (3, 5),
                (4, 6),
                (5, 6),
                (2, 7),
                (7, 8),
            ],
            1,
            6,
            &[2, 3],
            &[4, 5],
        );
        let red = contract_offpath(&i, &cp_of(&i));
        assert_eq!(red.instance, fixtures::fix_a());
    }

    #[test]
    fn contract_shortcuts_new_chord() {
        // path s=1 2 3 4 5 t=6 (A at 2, B at 5) plus off-path w=7 joining 2 and 4:
        // the new edge {2,4} is a chord, so 3 leaves the path and is then contracted too
        let i = inst(
            7,
            &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 7), (7, 4)],
            1,
            6,
            &[2],
            &[5],
        );
        let red = contract_offpath(&i, &cp_of(&i));
        let origin: Vec<_> = red.map.pairs().map(|(_, o)| o).collect();
        assert_eq!(origin, vec![1, 2, 4, 5, 6]);
        assert_eq!(red.paths.paths(), &[vec![1, 2, 3, 4, 5]]);
    }

    #[test]
    fn middle_foreign_edge_dropped() {
        // path P: s=1, 2..8 (2 in A, 8 in B), t=9; path Q: s, 10, 11, 12, t with 11 adjacent
        // to positions 3, 5, 7 of P (vertices 3, 5, 7)
        let mut e = vec![
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 6),
            (6, 7),
            (7, 8),
            (8, 9),
            (1, 10),
            (10, 11),
            (11, 12),
            (12, 9),
        ];
        e.extend([(11, 3), (11, 5), (11, 7)]);
        let i = inst(12, &e, 1, 9, &[2, 10], &[8, 12]);
        let red = reduce_degrees(&i, &cp_of(&i));
        assert!(red.changed);
        let orig = |v| red.map.get(v);
        let g = red.instance.graph();
        let mid = red.map.pairs().find(|&(_, o)| o == 11).unwrap().0;
        let mut foreign: Vec<_> = g
            .neighbors(mid)
            .iter()
            .map(|&w| orig(w))
            .filter(|&w| w < 9)
            .collect();
        foreign.sort_unstable();
        assert_eq!(foreign, vec![3, 7]);
    }

    #[test]
    fn degree_two_vertex_contracted_but_tokens_kept() {
        // gadget on two vertices where vertex 2 is isolated: its middle vertex has degree two
        let (i, _) = vc_gadget(&PlainGraph::new(2, vec![]).unwrap(), 0);
        let red = reduce_degrees(&i, &cp_of(&i));
        assert!(red.changed);
        // both middle vertices go; s_v and t_v carry tokens and stay although of degree two
        assert_eq!(red.instance.vertex_count(), 6);
        for p in red.paths.paths() {
            assert_eq!(p.len(), 4);
        }
    }

    #[test]
    fn shared_tokens_removed() {
        // s-v-t with A = B = {v}
        let i = inst(3, &[(1, 2), (2, 3)], 1, 3, &[2], &[2]);
        let sr = remove_shared(&i);
        assert_eq!(sr.fixed_tokens, vec![2]);
        assert_eq!(sr.instance.k(), 0);
        let ri = preprocess_tj(&i).unwrap();
        assert_eq!(ri.k_reduced(), 0);
        assert_eq!(ri.instance.vertex_count(), 2);

        let sr = remove_shared(&fixtures::fix_a());
        assert!(sr.fixed_tokens.is_empty());
        assert_eq!(sr.instance, fixtures::fix_a());

        // three parallel paths s-x_i-y_i-t sharing the token of the last path
        let e = [
            (1, 2),
            (2, 5),
            (5, 8),
            (1, 3),
            (3, 6),
            (6, 8),
            (1, 4),
            (4, 7),
            (7, 8),
        ];
        let i = inst(8, &e, 1, 8, &[2, 3, 4], &[5, 6, 4]);
        let sr = remove_shared(&i);
        assert_eq!(sr.instance.k(), 2);
        assert_eq!(sr.fixed_tokens, vec![4]);
        assert_eq!(sr.instance.vertex_count(), 7);
    }

    #[test]
    fn fixtures_already_reduced() {
        for i in [fixtures::fix_a(), fixtures::fix_b(), fixtures::fix_dead()] {
            let ri = preprocess_tj(&i).unwrap();
            assert_eq!(ri.instance, i);
            assert!(ri.vertex_map.pairs().all(|(r, o)| r == o));
        }
    }
}
