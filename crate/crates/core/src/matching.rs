//! Maximum matching in general graphs (Edmonds' blossom algorithm).

use std::collections::VecDeque;

/// Maximum matching of the graph on `0..n` with the given edges. Returns `mate`,
/// where `mate[v]` is the partner of `v`, if any.
pub fn maximum_matching(n: usize, edges: &[(usize, usize)]) -> Vec<Option<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        if u != v {
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    let mut m = Blossom {
        adj,
        mate: vec![None; n],
        parent: vec![None; n],
        base: (0..n).collect(),
        used: vec![false; n],
    };
    for root in 0..n {
        if m.mate[root].is_none() {
            if let Some(end) = m.find_path(root) {
                m.augment(end);
            }
        }
    }
    m.mate
}

/// Number of edges in a maximum matching.
pub fn matching_size(n: usize, edges: &[(usize, usize)]) -> usize {
    maximum_matching(n, edges)
        .iter()
        .filter(|m| m.is_some())
        .count()
        / 2
}

struct Blossom {
    adj: Vec<Vec<usize>>,
    mate: Vec<Option<usize>>,
    parent: Vec<Option<usize>>,
    base: Vec<usize>,
    used: Vec<bool>,
}

impl Blossom {
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            match self.mate[a] {
                Some(m) => a = self.parent[m].expect("matched outer vertex has a tree parent"),
                None => break,
            }
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b].expect("path to root")].expect("tree parent");
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize, in_blossom: &mut [bool]) {
        while self.base[v] != b {
            let m = self.mate[v].expect("inner vertex is matched");
            in_blossom[self.base[v]] = true;
            in_blossom[self.base[m]] = true;
            self.parent[v] = Some(child);
            child = m;
            v = self.parent[m].expect("tree parent");
        }
    }

    /// Grows an alternating tree from `root`; returns the free vertex that ends an
    /// augmenting path, if one exists.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = None);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for x in 0..self.adj[v].len() {
                let to = self.adj[v][x];
                if self.base[v] == self.base[to] || self.mate[v] == Some(to) {
                    continue;
                }
                let outer = to == root || self.mate[to].is_some_and(|m| self.parent[m].is_some());
                if outer {
                    let b = self.lca(v, to);
                    let mut in_blossom = vec![false; n];
                    self.mark_path(v, b, to, &mut in_blossom);
                    self.mark_path(to, b, v, &mut in_blossom);
                    for i in 0..n {
                        if in_blossom[self.base[i]] {
                            self.base[i] = b;
                            if !self.used[i] {
                                self.used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to].is_none() {
                    self.parent[to] = Some(v);
                    match self.mate[to] {
                        None => return Some(to),
                        Some(m) => {
                            self.used[m] = true;
                            queue.push_back(m);
                        }
                    }
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        loop {
            let pv = self.parent[v].expect("augmenting path");
            let next = self.mate[pv];
            self.mate[v] = Some(pv);
            self.mate[pv] = Some(v);
            match next {
                Some(w) => v = w,
                None => return,
            }
        }
    }
}
