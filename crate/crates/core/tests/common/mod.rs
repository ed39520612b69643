#![allow(dead_code)]

use msr_core::generators::{random_instance, random_layered};
use msr_core::graph::{Graph, Instance, Vertex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// One seeded instance with at most `max_n` vertices and `1 <= k <= max_k`: a random
/// graph with random minimum separators, or (every third seed) parallel paths with
/// random crossing edges. `None` if the draw misses the limits.
pub fn seeded_instance(seed: u64, max_n: usize, max_k: usize) -> Option<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let inst = if seed % 3 == 2 {
        let k = rng.gen_range(1..=max_k);
        let max_len = (max_n - 2) / k + 2;
        if max_len < 3 {
            return None;
        }
        let len = rng.gen_range(3..=max_len);
        random_layered(seed, k, len, rng.gen_range(0.1..0.6))
    } else {
        let n = rng.gen_range(5..=max_n);
        random_instance(seed, n, rng.gen_range(0.15..0.5))
    };
    inst.ok()
        .filter(|i| i.vertex_count() <= max_n && i.k() <= max_k)
}

/// `count` instances from consecutive seeds, see [`seeded_instance`].
pub fn corpus(count: usize, max_n: usize, max_k: usize, salt: u64) -> Vec<Instance> {
    let start = salt.wrapping_mul(1_000_003);
    (start..)
        .filter_map(|seed| seeded_instance(seed, max_n, max_k))
        .take(count)
        .collect()
}

/// Random graph on `n` vertices with terminals `1` and `n` kept non-adjacent.
pub fn random_graph(seed: u64, n: usize, p: f64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if (u, v) != (1, n) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Smallest s-t separator size by trying all subsets in ascending size order.
pub fn brute_min_separator(g: &Graph, s: Vertex, t: Vertex) -> usize {
    let inner: Vec<Vertex> = g.vertices().filter(|&v| v != s && v != t).collect();
    let m = inner.len();
    let mut best = m;
    for mask in 0u32..1 << m {
        let size = mask.count_ones() as usize;
        if size >= best {
            continue;
        }
        let mut blocked = vec![false; g.vertex_count() + 1];
        for (i, &v) in inner.iter().enumerate() {
            blocked[v] = mask >> i & 1 == 1;
        }
        if g.separates(s, t, &blocked) {
            best = size;
        }
    }
    best
}
