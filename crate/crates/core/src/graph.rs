//! Simple undirected graphs, reconfiguration instances and their text format.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result, SetName};
use crate::flow;

/// 1-based vertex id.
pub type Vertex = usize;

/// Finite simple undirected graph on the vertices `1..=n`.
///
/// Adjacency lists are kept sorted so that every traversal is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    // slot 0 is unused
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n + 1],
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and ids outside `1..=n`.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u == 0 || v == 0 || u > n || v > n {
                return Err(Error::InvalidGraph(format!(
                    "edge {{{u},{v}}} has an endpoint outside 1..={n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at {u}")));
            }
            g.adj[u].push(v);
            g.adj[v].push(u);
        }
        for v in 1..=n {
            g.adj[v].sort_unstable();
            if g.adj[v].windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidGraph(format!("duplicate edge at vertex {v}")));
            }
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len() - 1
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<Vertex> {
        1..=self.vertex_count()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Every edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices().flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&&v| v > u)
                .map(move |&v| (u, v))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// True if `t` is unreachable from `s` once the vertices flagged in `blocked` are removed.
    pub fn separates(&self, s: Vertex, t: Vertex, blocked: &[bool]) -> bool {
        let mut seen = vec![false; self.adj.len()];
        let mut queue = VecDeque::from([s]);
        seen[s] = true;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if w == t {
                    return false;
                }
                if !seen[w] && !blocked[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        true
    }
}

/// An instance of minimum separator reconfiguration: a graph, two non-adjacent
/// terminals and two minimum s-t separators `A` and `B` of equal size `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    graph: Graph,
    s: Vertex,
    t: Vertex,
    a: Vec<Vertex>,
    b: Vec<Vertex>,
}

impl Instance {
    /// Validates every instance invariant, including minimality of `A` and `B`.
    pub fn new(
        graph: Graph,
        s: Vertex,
        t: Vertex,
        mut a: Vec<Vertex>,
        mut b: Vec<Vertex>,
    ) -> Result<Self> {
        let n = graph.vertex_count();
        for v in [s, t] {
            if v == 0 || v > n {
                return Err(Error::InvalidSet(format!("terminal {v} outside 1..={n}")));
            }
        }
        if s == t {
            return Err(Error::InvalidSet("s and t coincide".into()));
        }
        if graph.has_edge(s, t) {
            return Err(Error::TerminalsAdjacent);
        }
        for (name, set) in [(SetName::A, &mut a), (SetName::B, &mut b)] {
            set.sort_unstable();
            if set.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidSet(format!("{name} lists a vertex twice")));
            }
            if let Some(&v) = set.iter().find(|&&v| v == 0 || v > n) {
                return Err(Error::InvalidSet(format!(
                    "{name} contains vertex {v} outside 1..={n}"
                )));
            }
            if set.contains(&s) || set.contains(&t) {
                return Err(Error::InvalidSet(format!("{name} contains a terminal")));
            }
        }
        if a.len() != b.len() {
            return Err(Error::InvalidSet(format!(
                "|A| = {} differs from |B| = {}",
                a.len(),
                b.len()
            )));
        }
        let inst = Instance { graph, s, t, a, b };
        for name in [SetName::A, SetName::B] {
            if !inst.is_separator(inst.set(name))? {
                return Err(Error::NotSeparator(name));
            }
        }
        let min = flow::disjoint_paths(&inst.graph, s, t).len();
        if inst.a.len() > min {
            // both sets have the same size, so report A
            return Err(Error::NotMinimum {
                which: SetName::A,
                size: inst.a.len(),
                min,
            });
        }
        Ok(inst)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn s(&self) -> Vertex {
        self.s
    }

    pub fn t(&self) -> Vertex {
        self.t
    }

    /// Sorted start separator.
    pub fn a(&self) -> &[Vertex] {
        &self.a
    }

    /// Sorted target separator.
    pub fn b(&self) -> &[Vertex] {
        &self.b
    }

    pub fn set(&self, name: SetName) -> &[Vertex] {
        match name {
            SetName::A => &self.a,
            SetName::B => &self.b,
        }
    }

    /// Size of the separators, which equals the minimum separator size.
    pub fn k(&self) -> usize {
        self.a.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn is_terminal(&self, v: Vertex) -> bool {
        v == self.s || v == self.t
    }

    /// Breadth-first check that `set` leaves no s-t path.
    pub fn is_separator(&self, set: &[Vertex]) -> Result<bool> {
        let mut blocked = vec![false; self.vertex_count() + 1];
        for &v in set {
            if v == 0 || v > self.vertex_count() {
                return Err(Error::InvalidSet(format!("vertex {v} outside the graph")));
            }
            if self.is_terminal(v) {
                return Err(Error::InvalidSet(format!("vertex {v} is a terminal")));
            }
            blocked[v] = true;
        }
        Ok(self.graph.separates(self.s, self.t, &blocked))
    }

    /// Parses the line-oriented instance format.
    ///
    /// ```text
    /// p msr <n> <m>
    /// e <u> <v>        (m lines)
    /// s <id>
    /// t <id>
    /// A <id> ...
    /// B <id> ...
    /// ```
    ///
    /// Blank lines and lines starting with `#` are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = Lines::new(text);

        let (no, fields) = lines.expect("p")?;
        if fields.first().copied() != Some("msr") || fields.len() != 3 {
            return Err(Error::Syntax {
                line: no,
                msg: "header must read `p msr <n> <m>`".into(),
            });
        }
        let n = number(no, fields[1])?;
        let m = number(no, fields[2])?;

        let mut edges = Vec::with_capacity(m);
        let mut seen = std::collections::HashSet::with_capacity(m);
        for _ in 0..m {
            let (no, fields) = lines.expect("e")?;
            if fields.len() != 2 {
                return Err(Error::Syntax {
                    line: no,
                    msg: "edge line must read `e <u> <v>`".into(),
                });
            }
            let (u, v) = (number(no, fields[0])?, number(no, fields[1])?);
            if u == 0 || v == 0 || u > n || v > n {
                return Err(Error::Syntax {
                    line: no,
                    msg: format!("edge endpoint outside 1..={n}"),
                });
            }
            if u == v {
                return Err(Error::Syntax {
                    line: no,
                    msg: format!("self-loop at {u}"),
                });
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::Syntax {
                    line: no,
                    msg: format!("duplicate edge {{{u},{v}}}"),
                });
            }
            edges.push((u, v));
        }
        let s = lines.single("s")?;
        let t = lines.single("t")?;
        let (no_a, a) = lines.expect("A")?;
        let a = a
            .iter()
            .map(|f| number(no_a, f))
            .collect::<Result<Vec<_>>>()?;
        let (no_b, b) = lines.expect("B")?;
        let b = b
            .iter()
            .map(|f| number(no_b, f))
            .collect::<Result<Vec<_>>>()?;
        if let Some((no, _)) = lines.next_line() {
            return Err(Error::Syntax {
                line: no,
                msg: "unexpected content after the `B` line".into(),
            });
        }

        let graph = Graph::from_edges(n, &edges).map_err(|e| Error::Syntax {
            line: 1,
            msg: e.to_string(),
        })?;
        Instance::new(graph, s, t, a, b)
    }

    /// Renders the instance in the format read by [`Instance::parse`].
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "p msr {} {}",
            self.vertex_count(),
            self.graph.edge_count()
        );
        for (u, v) in self.graph.edges() {
            let _ = writeln!(out, "e {u} {v}");
        }
        let _ = writeln!(out, "s {}", self.s);
        let _ = writeln!(out, "t {}", self.t);
        for (tag, set) in [("A", &self.a), ("B", &self.b)] {
            out.push_str(tag);
            for v in set.iter() {
                let _ = write!(out, " {v}");
            }
            out.push('\n');
        }
        out
    }
}

fn number(line: usize, field: &str) -> Result<usize> {
    field.parse().map_err(|_| Error::Syntax {
        line,
        msg: format!("not a number: `{field}`"),
    })
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            inner: text.lines().enumerate(),
            last: 0,
        }
    }

    fn next_line(&mut self) -> Option<(usize, &'a str)> {
        for (i, line) in self.inner.by_ref() {
            let line = line.trim();
            if !line.is_empty() && !line.starts_with('#') {
                self.last = i + 1;
                return Some((i + 1, line));
            }
        }
        None
    }

    fn expect(&mut self, tag: &str) -> Result<(usize, Vec<&'a str>)> {
        let Some((no, line)) = self.next_line() else {
            return Err(Error::Syntax {
                line: self.last + 1,
                msg: format!("missing `{tag}` line"),
            });
        };
        let mut fields = line.split_whitespace();
        let head = fields.next().unwrap_or_default();
        if head != tag {
            return Err(Error::Syntax {
                line: no,
                msg: format!("expected `{tag}` line, found `{head}`"),
            });
        }
        Ok((no, fields.collect()))
    }

    fn single(&mut self, tag: &str) -> Result<usize> {
        let (no, fields) = self.expect(tag)?;
        match fields.as_slice() {
            [v] => number(no, v),
            _ => Err(Error::Syntax {
                line: no,
                msg: format!("`{tag}` takes exactly one vertex"),
            }),
        }
    }
}
