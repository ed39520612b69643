//! Instance factories: the vertex cover gadget, its composition over several graphs,
//! seeded random instances, and a brute-force vertex cover.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, Instance, Vertex};
use crate::solvers::{separators_of_size, OracleOptions};

/// A plain simple graph, used as input to the gadget constructions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlainGraph {
    n: usize,
    // (u, v) with u < v, sorted
    edges: Vec<(Vertex, Vertex)>,
}

impl PlainGraph {
    pub fn new(n: usize, edges: Vec<(Vertex, Vertex)>) -> Result<Self> {
        let g = Graph::from_edges(n, &edges)?;
        Ok(PlainGraph {
            n,
            edges: g.edges().collect(),
        })
    }

    pub fn complete(n: usize) -> Self {
        let edges = (1..=n)
            .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
            .collect();
        PlainGraph { n, edges }
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs three vertices");
        let mut edges: Vec<_> = (1..n).map(|v| (v, v + 1)).collect();
        edges.push((1, n));
        edges.sort_unstable();
        PlainGraph { n, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    /// Reads `<n>` on the first line and one `u v` pair per following line.
    /// Blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let syntax = |line, msg: &str| Error::Syntax {
            line,
            msg: msg.into(),
        };
        let (no, head) = lines
            .next()
            .ok_or_else(|| syntax(1, "missing vertex count"))?;
        let n: usize = head
            .parse()
            .map_err(|_| syntax(no, "first line must be the vertex count"))?;
        let mut edges = Vec::new();
        for (no, line) in lines {
            let fields: Vec<_> = line.split_whitespace().collect();
            let [u, v] = fields.as_slice() else {
                return Err(syntax(no, "edge line must read `u v`"));
            };
            let u = u.parse().map_err(|_| syntax(no, "not a number"))?;
            let v = v.parse().map_err(|_| syntax(no, "not a number"))?;
            edges.push((u, v));
        }
        PlainGraph::new(n, edges)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// Builds the vertex cover gadget: every vertex `v` of `g` becomes the middle of a
/// path `s, s_v, v, t_v, t`, the edges of `g` join the middles, `A` is the set of
/// all `s_v` and `B` the set of all `t_v`. Returns the instance and the jump budget
/// `|V(g)| + kappa`, which it meets exactly when `g` has a vertex cover of size `kappa`.
///
/// Numbering: `s = 1`, `s_v = 1 + v`, `v -> 1 + n + v`, `t_v = 1 + 2n + v`, `t = 3n + 2`.
pub fn vc_gadget(g: &PlainGraph, kappa: usize) -> (Instance, usize) {
    let n = g.n;
    let (s, t) = (1, 3 * n + 2);
    let (start, mid, end) = (|v| 1 + v, |v| 1 + n + v, |v| 1 + 2 * n + v);
    let mut edges = Vec::with_capacity(4 * n + g.edges.len());
    for v in 1..=n {
        edges.extend([
            (s, start(v)),
            (start(v), mid(v)),
            (mid(v), end(v)),
            (end(v), t),
        ]);
    }
    edges.extend(g.edges.iter().map(|&(u, v)| (mid(u), mid(v))));
    let graph = Graph::from_edges(t, &edges).expect("gadget is simple");
    let inst = Instance::new(
        graph,
        s,
        t,
        (1..=n).map(start).collect(),
        (1..=n).map(end).collect(),
    )
    .expect("gadget separators are minimum");
    (inst, n + kappa)
}

/// Chains the vertex cover gadgets of `graphs` along `mu + 1` paths of `4r + 1`
/// vertices each and returns the instance with the budget `r (mu + 1 + kappa)`.
///
/// Graph `j` (1-based) sits on column `4j - 1` of the first `mu` paths. Between graphs
/// `j` and `j + 1`, column `4j + 1` of those paths is joined to columns `4j - 2`, `4j`
/// and `4j + 2` of the last path, which forces every token onto that column before
/// the last token advances. Column `4r - 2` of the last path is joined to the goal
/// vertices of the other paths.
///
/// Every input must have the same number of vertices and the same `kappa`. The budget
/// is met exactly when every graph has a cover of size `kappa`, provided none has a
/// smaller one.
///
/// Numbering: `s = 1`, then columns `2..=4r` with paths in order, then `t`.
pub fn cross_composition(inputs: &[(PlainGraph, usize)]) -> Result<(Instance, usize)> {
    let Some((first, kappa)) = inputs.first() else {
        return Err(Error::MismatchedSizes("no input graphs".into()));
    };
    let (mu, kappa) = (first.n, *kappa);
    if let Some((g, k)) = inputs.iter().find(|(g, k)| g.n != mu || *k != kappa) {
        return Err(Error::MismatchedSizes(format!(
            "expected {mu} vertices and kappa {kappa}, found {} vertices and kappa {k}",
            g.n
        )));
    }
    let r = inputs.len();
    let k = mu + 1;
    let last_col = 4 * r;
    let u = |i: usize, c: usize| 2 + (c - 2) * k + (i - 1);
    let (s, t) = (1, 2 + (last_col - 1) * k);

    let mut edges = Vec::new();
    for i in 1..=k {
        edges.push((s, u(i, 2)));
        edges.extend((2..last_col).map(|c| (u(i, c), u(i, c + 1))));
        edges.push((u(i, last_col), t));
    }
    for (j, (g, _)) in inputs.iter().enumerate() {
        let q = 4 * (j + 1) - 1;
        edges.extend(g.edges.iter().map(|&(a, b)| (u(a, q), u(b, q))));
    }
    for j in 1..r {
        for i in 1..=mu {
            edges.extend([4 * j - 2, 4 * j, 4 * j + 2].map(|c| (u(i, 4 * j + 1), u(k, c))));
        }
    }
    edges.extend((1..=mu).map(|i| (u(k, last_col - 2), u(i, last_col))));

    let graph = Graph::from_edges(t, &edges).expect("composition is simple");
    let a = (1..=k).map(|i| u(i, 2)).collect();
    let b = (1..=k).map(|i| u(i, last_col)).collect();
    let inst = Instance::new(graph, s, t, a, b).expect("end columns are minimum separators");
    Ok((inst, r * (k + kappa)))
}

/// `k` parallel paths of `path_len` vertices (terminals included) with a crossing edge
/// between each pair of vertices on different paths in adjacent columns, present with
/// probability `p`. `A` is the column after `s`, `B` the column before `t`.
///
/// Numbering: `s = 1`, interior columns in order with paths in order, then `t`.
pub fn random_layered(seed: u64, k: usize, path_len: usize, p: f64) -> Result<Instance> {
    assert!(
        k >= 1 && path_len >= 3,
        "need a path and an interior column"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cols = path_len - 2;
    let u = |i: usize, c: usize| 2 + c * k + i;
    let (s, t) = (1, 2 + cols * k);
    for _ in 0..100 {
        let mut edges = Vec::new();
        for i in 0..k {
            edges.push((s, u(i, 0)));
            edges.extend((0..cols - 1).map(|c| (u(i, c), u(i, c + 1))));
            edges.push((u(i, cols - 1), t));
        }
        for c in 0..cols.saturating_sub(1) {
            for i in 0..k {
                for j in 0..k {
                    if i != j && rng.gen_bool(p) {
                        edges.push((u(i, c), u(j, c + 1)));
                    }
                }
            }
        }
        let graph = Graph::from_edges(t, &edges).expect("layered graph is simple");
        let a = (0..k).map(|i| u(i, 0)).collect();
        let b = (0..k).map(|i| u(i, cols - 1)).collect();
        if let Ok(inst) = Instance::new(graph, s, t, a, b) {
            return Ok(inst);
        }
    }
    Err(Error::GenerationFailed(100))
}

/// A random graph on `n` vertices with edge probability `p`, terminals `1` and `n`,
/// and `A`, `B` drawn uniformly from all minimum separators. Graphs where the
/// terminals are adjacent or disconnected are redrawn.
pub fn random_instance(seed: u64, n: usize, p: f64) -> Result<Instance> {
    assert!(n >= 3, "need a vertex besides the terminals");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (s, t) = (1, n);
    for _ in 0..100 {
        let mut edges = Vec::new();
        for a in 1..=n {
            for b in a + 1..=n {
                if (a, b) != (s, t) && rng.gen_bool(p) {
                    edges.push((a, b));
                }
            }
        }
        let graph = Graph::from_edges(n, &edges).expect("random graph is simple");
        let k = crate::flow::disjoint_paths(&graph, s, t).len();
        if k == 0 {
            continue;
        }
        let seps = separators_of_size(&graph, s, t, k, &OracleOptions::default())?;
        let a = seps[rng.gen_range(0..seps.len())].clone();
        let b = seps[rng.gen_range(0..seps.len())].clone();
        return Instance::new(graph, s, t, a, b);
    }
    Err(Error::GenerationFailed(100))
}

/// Minimum vertex cover size by exhaustive search over all vertex subsets.
pub fn brute_vc(g: &PlainGraph) -> Result<usize> {
    const LIMIT: usize = 20;
    if g.n > LIMIT {
        return Err(Error::TooLarge {
            what: "vertex cover search vertices",
            size: g.n as u128,
            limit: LIMIT as u128,
        });
    }
    let masks: Vec<u32> = g
        .edges
        .iter()
        .map(|&(u, v)| (1 << (u - 1)) | (1 << (v - 1)))
        .collect();
    let best = (0u32..1 << g.n)
        .filter(|&set| masks.iter().all(|&e| set & e != 0))
        .map(u32::count_ones)
        .min()
        .expect("the full vertex set is a cover");
    Ok(best as usize)
}
