//! Vertex-disjoint s-t paths via unit-capacity max-flow on the vertex-split digraph.

use std::collections::VecDeque;

use crate::graph::{Graph, Instance, Vertex};

/// A maximum family of pairwise internally disjoint s-t paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisjointPaths {
    /// Each path starts at `s` and ends at `t`.
    pub paths: Vec<Vec<Vertex>>,
}

impl DisjointPaths {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }
}

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: u32,
}

/// Residual network with paired arcs: arc `e ^ 1` is the reverse of arc `e`.
struct Network {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Network {
            arcs: Vec::new(),
            out: vec![Vec::new(); nodes],
        }
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: u32) {
        self.out[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap });
        self.out[to].push(self.arcs.len());
        self.arcs.push(Arc { to: from, cap: 0 });
    }

    /// One BFS augmentation of a single unit; false when no augmenting path is left.
    fn augment(&mut self, source: usize, sink: usize) -> bool {
        let mut via = vec![usize::MAX; self.out.len()];
        let mut seen = vec![false; self.out.len()];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            for &e in &self.out[x] {
                let arc = &self.arcs[e];
                if arc.cap > 0 && !seen[arc.to] {
                    seen[arc.to] = true;
                    via[arc.to] = e;
                    if arc.to == sink {
                        let mut y = sink;
                        while y != source {
                            let e = via[y];
                            self.arcs[e].cap -= 1;
                            self.arcs[e ^ 1].cap += 1;
                            y = self.arcs[e ^ 1].to;
                        }
                        return true;
                    }
                    queue.push_back(arc.to);
                }
            }
        }
        false
    }
}

fn node_in(v: Vertex) -> usize {
    2 * v
}

fn node_out(v: Vertex) -> usize {
    2 * v + 1
}

/// Computes a maximum set of internally disjoint s-t paths of `graph`.
///
/// Every internal vertex `v` becomes an arc `v_in -> v_out` of capacity one and each
/// edge `{u, v}` becomes the arcs `u_out -> v_in` and `v_out -> u_in`. Augmenting
/// paths are found breadth first. Paths are read off the flow by always stepping
/// to the smallest vertex id that still carries flow, so the result is deterministic.
///
/// `s` and `t` must not be adjacent.
pub fn disjoint_paths(graph: &Graph, s: Vertex, t: Vertex) -> Vec<Vec<Vertex>> {
    let n = graph.vertex_count();
    let mut net = Network::new(2 * n + 2);
    let mut split_arc = vec![usize::MAX; n + 1];
    for v in graph.vertices() {
        if v != s && v != t {
            split_arc[v] = net.arcs.len();
            net.add_arc(node_in(v), node_out(v), 1);
        }
    }
    for v in graph.vertices() {
        if v == t {
            continue;
        }
        for &w in graph.neighbors(v) {
            if w != s {
                net.add_arc(node_out(v), node_in(w), 1);
            }
        }
    }
    let (source, sink) = (node_out(s), node_in(t));
    while net.augment(source, sink) {}

    // flow[v] = successors w of v carrying one unit on v_out -> w_in, ascending
    let mut flow: Vec<Vec<Vertex>> = vec![Vec::new(); n + 1];
    for v in graph.vertices() {
        if v == t {
            continue;
        }
        for &e in &net.out[node_out(v)] {
            // forward edge arcs have even index and start at v_out
            if e % 2 == 0 && e != split_arc[v] && net.arcs[e].cap == 0 {
                flow[v].push(net.arcs[e].to / 2);
            }
        }
        flow[v].sort_unstable();
    }
    // opposite units on u->w and w->u cancel out
    for v in graph.vertices() {
        let succ = flow[v].clone();
        for w in succ {
            if let Some(pos) = flow[w].iter().position(|&x| x == v) {
                flow[w].remove(pos);
                let pos = flow[v].iter().position(|&x| x == w).expect("present");
                flow[v].remove(pos);
            }
        }
    }

    let mut paths = Vec::new();
    while !flow[s].is_empty() {
        let mut path = vec![s];
        let mut v = s;
        while v != t {
            let next = flow[v].remove(0);
            path.push(next);
            v = next;
        }
        paths.push(path);
    }
    paths
}

/// Maximum family of internally disjoint s-t paths of an instance.
pub fn max_disjoint_paths(instance: &Instance) -> DisjointPaths {
    DisjointPaths {
        paths: disjoint_paths(instance.graph(), instance.s(), instance.t()),
    }
}

/// Size of a minimum s-t separator, by Menger's theorem.
pub fn min_separator_size(instance: &Instance) -> usize {
    max_disjoint_paths(instance).len()
}
