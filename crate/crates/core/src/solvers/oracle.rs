//! Exhaustive reference solver: every minimum separator is enumerated and the
//! reconfiguration graph on them is searched breadth first.

use std::collections::{HashMap, VecDeque};

use super::{label_moves, Model, Solution};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::graph::{Graph, Instance, Vertex};

/// Largest number of candidate subsets the oracle enumerates.
pub const SUBSET_LIMIT: u128 = 1_000_000;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OracleOptions {
    pub exec: Exec,
    /// Vertices no separator in the search may contain.
    pub forbidden: Vec<Vertex>,
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| {
        acc.saturating_mul((n - i) as u128) / (i as u128 + 1)
    })
}

fn combinations(items: &[Vertex], k: usize) -> Vec<Vec<Vertex>> {
    let n = items.len();
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        let Some(j) = (0..k).rev().find(|&j| idx[j] < n - k + j) else {
            return out;
        };
        idx[j] += 1;
        for x in j + 1..k {
            idx[x] = idx[x - 1] + 1;
        }
    }
}

fn candidates(graph: &Graph, s: Vertex, t: Vertex, forbidden: &[Vertex]) -> Vec<Vertex> {
    graph
        .vertices()
        .filter(|&v| v != s && v != t && !forbidden.contains(&v))
        .collect()
}

/// Every s-t separator of size `k` in `graph` avoiding `forbidden`, each sorted, in
/// lexicographic order. With `k` the minimum separator size these are exactly the
/// minimum separators.
pub fn separators_of_size(
    graph: &Graph,
    s: Vertex,
    t: Vertex,
    k: usize,
    opts: &OracleOptions,
) -> Result<Vec<Vec<Vertex>>> {
    let size = binomial(graph.vertex_count() - 2, k);
    if size > SUBSET_LIMIT {
        return Err(Error::TooLarge {
            what: "candidate separator subsets",
            size,
            limit: SUBSET_LIMIT,
        });
    }
    let pool = candidates(graph, s, t, &opts.forbidden);
    if pool.len() < k {
        return Ok(Vec::new());
    }
    let n = graph.vertex_count();
    Ok(opts.exec.filter(combinations(&pool, k), |set| {
        let mut blocked = vec![false; n + 1];
        for &v in set {
            blocked[v] = true;
        }
        graph.separates(s, t, &blocked)
    }))
}

/// Every minimum s-t separator of the instance avoiding `forbidden`.
pub fn all_minimum_separators(
    instance: &Instance,
    opts: &OracleOptions,
) -> Result<Vec<Vec<Vertex>>> {
    separators_of_size(
        instance.graph(),
        instance.s(),
        instance.t(),
        instance.k(),
        opts,
    )
}

/// Shortest sequence over all minimum separators, under either model.
pub fn oracle_bfs(instance: &Instance, model: Model) -> Result<Solution> {
    oracle_bfs_with(instance, model, &OracleOptions::default())
}

/// [`oracle_bfs`] restricted to separators that avoid `forbidden`.
pub fn oracle_bfs_forbidding(
    instance: &Instance,
    model: Model,
    forbidden: &[Vertex],
) -> Result<Solution> {
    oracle_bfs_with(
        instance,
        model,
        &OracleOptions {
            forbidden: forbidden.to_vec(),
            ..OracleOptions::default()
        },
    )
}

/// [`oracle_bfs`] with explicit execution strategy and forbidden vertices.
pub fn oracle_bfs_with(
    instance: &Instance,
    model: Model,
    opts: &OracleOptions,
) -> Result<Solution> {
    let separators = all_minimum_separators(instance, opts)?;
    let id: HashMap<&[Vertex], usize> = separators
        .iter()
        .enumerate()
        .map(|(i, s)| (s.as_slice(), i))
        .collect();
    let infeasible = Solution {
        model,
        shortest: true,
        moves: None,
        states_explored: separators.len() as u64,
    };
    let (Some(&start), Some(&goal)) = (id.get(instance.a()), id.get(instance.b())) else {
        return Ok(infeasible);
    };
    let g = instance.graph();
    let pool = candidates(g, instance.s(), instance.t(), &opts.forbidden);

    // node -> (predecessor, removed vertex, added vertex)
    let mut via: Vec<Option<(usize, Vertex, Vertex)>> = vec![None; separators.len()];
    let mut seen = vec![false; separators.len()];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    let mut next_set = Vec::with_capacity(instance.k());
    while let Some(x) = queue.pop_front() {
        if x == goal {
            break;
        }
        let set = &separators[x];
        for &v in set {
            let targets: &[Vertex] = match model {
                Model::Jump => &pool,
                Model::Slide => g.neighbors(v),
            };
            for &u in targets {
                if instance.is_terminal(u) || set.binary_search(&u).is_ok() {
                    continue;
                }
                next_set.clear();
                next_set.extend(set.iter().copied().filter(|&w| w != v));
                let at = next_set.partition_point(|&w| w < u);
                next_set.insert(at, u);
                if let Some(&y) = id.get(next_set.as_slice()) {
                    if !seen[y] {
                        seen[y] = true;
                        via[y] = Some((x, v, u));
                        queue.push_back(y);
                    }
                }
            }
        }
    }
    if !seen[goal] {
        return Ok(infeasible);
    }
    let mut pairs = Vec::new();
    let mut x = goal;
    while let Some((prev, v, u)) = via[x] {
        pairs.push((v, u));
        x = prev;
    }
    pairs.reverse();
    Ok(Solution {
        moves: Some(label_moves(instance, &pairs)?),
        ..infeasible
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(3, 0), 1);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(
            combinations(&[1, 2, 3], 2),
            vec![vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(combinations(&[1, 2], 0), vec![Vec::<Vertex>::new()]);
    }

    #[test]
    fn fixture_oracle() {
        let len = |i: &Instance, m| oracle_bfs(i, m).unwrap().length();
        assert_eq!(len(&fixtures::fix_a(), Model::Jump), Some(2));
        assert_eq!(len(&fixtures::fix_b(), Model::Jump), Some(3));
        assert_eq!(len(&fixtures::fix_b(), Model::Slide), Some(4));
        assert_eq!(len(&fixtures::fix_c(), Model::Jump), Some(5));
        assert_eq!(len(&fixtures::fix_dead(), Model::Jump), None);
        assert_eq!(len(&fixtures::fix_dead(), Model::Slide), None);
    }

    #[test]
    fn fix_a_separators() {
        let seps = all_minimum_separators(&fixtures::fix_a(), &OracleOptions::default()).unwrap();
        assert_eq!(seps, vec![vec![2, 3], vec![2, 5], vec![3, 4], vec![4, 5]]);
    }

    #[test]
    fn forbidding_a_start_vertex() {
        let sol = oracle_bfs_forbidding(&fixtures::fix_a(), Model::Jump, &[2]).unwrap();
        assert!(!sol.feasible());
    }

    #[test]
    fn guard() {
        // isolated vertices plus four parallel paths: C(78, 4) > 10^6
        let mut e = Vec::new();
        for i in 0..4 {
            e.push((1, 3 + i));
            e.push((3 + i, 2));
        }
        let g = crate::graph::Graph::from_edges(80, &e).unwrap();
        let inst = Instance::new(g, 1, 2, vec![3, 4, 5, 6], vec![3, 4, 5, 6]).unwrap();
        assert!(matches!(
            oracle_bfs(&inst, Model::Jump),
            Err(Error::TooLarge { .. })
        ));
    }
}
