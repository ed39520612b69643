mod common;

use std::collections::HashSet;

use common::{brute_min_separator, random_graph, seeded_instance};
use msr_core::canonical::CanonicalPaths;
use msr_core::flow::{disjoint_paths, max_disjoint_paths};
use msr_core::kernel::{kernelize, KernelOutcome};
use msr_core::preprocess::preprocess_tj;
use msr_core::separator_check::is_config_separator;
use msr_core::solvers::{
    all_minimum_separators, oracle_bfs, solve_tj_feasible, solve_tj_shortest, solve_ts_shortest,
    tj_shortest_reduced, OracleOptions, SearchOptions,
};
use msr_core::{verify_sequence, Configuration, Exec, Instance, Model, Vertex, VertexSequence};
use proptest::prelude::*;

fn instance(max_n: usize, max_k: usize) -> impl Strategy<Value = Instance> {
    any::<u64>().prop_filter_map("draw outside limits", move |seed| {
        seeded_instance(seed, max_n, max_k)
    })
}

fn canonical(inst: &Instance) -> CanonicalPaths {
    CanonicalPaths::new(inst, &max_disjoint_paths(inst)).unwrap()
}

/// Reachability of `t` from `s` by a recursive search avoiding `removed`.
fn dfs_separates(inst: &Instance, removed: &[Vertex]) -> bool {
    fn go(inst: &Instance, v: Vertex, seen: &mut HashSet<Vertex>) {
        if !seen.insert(v) {
            return;
        }
        for &w in inst.graph().neighbors(v) {
            go(inst, w, seen);
        }
    }
    let mut seen: HashSet<Vertex> = removed.iter().copied().collect();
    go(inst, inst.s(), &mut seen);
    !seen.contains(&inst.t()) || removed.contains(&inst.t())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn flow_paths_are_disjoint_and_maximum(seed in any::<u64>(), n in 2usize..=11, p in 0.05f64..0.7) {
        let g = random_graph(seed, n, p);
        let paths = disjoint_paths(&g, 1, n);
        let mut used = HashSet::new();
        for path in &paths {
            prop_assert_eq!(path.first(), Some(&1));
            prop_assert_eq!(path.last(), Some(&n));
            for w in path.windows(2) {
                prop_assert!(g.has_edge(w[0], w[1]));
            }
            for &v in &path[1..path.len() - 1] {
                prop_assert!(used.insert(v), "vertex {} on two paths", v);
            }
        }
        prop_assert_eq!(paths.len(), brute_min_separator(&g, 1, n));
    }

    #[test]
    fn separator_test_matches_plain_search(inst in instance(14, 4), mask in any::<u32>()) {
        let removed: Vec<Vertex> = inst
            .graph()
            .vertices()
            .filter(|&v| !inst.is_terminal(v) && mask >> (v % 32) & 1 == 1)
            .collect();
        prop_assert_eq!(inst.is_separator(&removed).unwrap(), dfs_separates(&inst, &removed));
    }

    #[test]
    fn canonical_paths_are_chordless_and_hit_every_minimum_separator(inst in instance(14, 4)) {
        let cp = canonical(&inst);
        prop_assert_eq!(cp.len(), inst.k());
        for path in cp.paths() {
            for x in 0..path.len() {
                for y in x + 2..path.len() {
                    prop_assert!(!inst.graph().has_edge(path[x], path[y]), "chord in {:?}", path);
                }
            }
        }
        for sep in all_minimum_separators(&inst, &OracleOptions::default()).unwrap() {
            let c = cp.locate(&sep).unwrap();
            let mut back = cp.vertices_of(&c);
            back.sort_unstable();
            prop_assert_eq!(back, sep);
        }
    }

    #[test]
    fn preprocessing_reaches_its_postconditions(inst in instance(16, 5)) {
        let ri = preprocess_tj(&inst).unwrap();
        let red = &ri.instance;
        prop_assert_eq!(ri.k_reduced() + ri.fixed_tokens.len(), inst.k());
        prop_assert_eq!(ri.vertex_map.len(), red.vertex_count());
        for v in red.graph().vertices().filter(|&v| !red.is_terminal(v)) {
            let (i, p) = ri.paths.position_of(v).expect("every vertex on a path");
            prop_assert!((ri.paths.l(i)..=ri.paths.r(i)).contains(&p));
        }
        let mut originals: Vec<_> = ri.vertex_map.pairs().map(|(_, o)| o).collect();
        originals.sort_unstable();
        originals.dedup();
        prop_assert_eq!(originals.len(), red.vertex_count());
        let mapped: Vec<_> = red.a().iter().map(|&v| ri.original(v)).collect();
        prop_assert!(mapped.iter().all(|v| inst.a().contains(v)));

        let again = preprocess_tj(red).unwrap();
        prop_assert_eq!(again.instance.vertex_count(), red.vertex_count());
        prop_assert_eq!(again.instance.graph().edge_count(), red.graph().edge_count());
    }

    #[test]
    fn crossing_edges_decide_separation(inst in instance(18, 5), picks in proptest::collection::vec(any::<u16>(), 5)) {
        let ri = preprocess_tj(&inst).unwrap();
        let pos: Vec<usize> = ri
            .paths
            .windows()
            .iter()
            .zip(&picks)
            .map(|(&(l, r), &x)| l + x as usize % (r - l + 1))
            .collect();
        let c = Configuration { pos };
        let set = ri.paths.vertices_of(&c);
        prop_assert_eq!(is_config_separator(&ri, &c), ri.instance.is_separator(&set).unwrap());
    }

    #[test]
    fn solver_outputs_verify_and_match_the_oracle(inst in instance(16, 5)) {
        let jump = solve_tj_shortest(&inst, &SearchOptions::default()).unwrap();
        let greedy = solve_tj_feasible(&inst).unwrap();
        let slide = solve_ts_shortest(&inst).unwrap();
        prop_assert_eq!(jump.length(), oracle_bfs(&inst, Model::Jump).unwrap().length());
        prop_assert_eq!(slide.length(), oracle_bfs(&inst, Model::Slide).unwrap().length());
        prop_assert_eq!(greedy.feasible(), jump.feasible());
        if let (Some(g), Some(j)) = (greedy.length(), jump.length()) {
            prop_assert!(g >= j);
        }
        for sol in [&jump, &greedy, &slide] {
            if let Some(seq) = VertexSequence::from_solution(sol) {
                prop_assert!(verify_sequence(&inst, &seq).is_accept());
                if !seq.moves.is_empty() {
                    let mut cut = seq.clone();
                    cut.moves.pop();
                    prop_assert!(!verify_sequence(&inst, &cut).is_accept());
                }
            }
        }
    }

    #[test]
    fn execution_strategies_agree(inst in instance(18, 5)) {
        let ri = preprocess_tj(&inst).unwrap();
        let run = |exec| tj_shortest_reduced(&ri, &SearchOptions { exec, ..SearchOptions::default() }).unwrap();
        prop_assert_eq!(run(Exec::Sequential), run(Exec::Parallel));
        let seps = |exec| all_minimum_separators(&inst, &OracleOptions { exec, ..OracleOptions::default() }).unwrap();
        prop_assert_eq!(seps(Exec::Sequential), seps(Exec::Parallel));
    }

    #[test]
    fn kernel_answers_are_sound(inst in instance(16, 5), budget in 0usize..8) {
        let truth = oracle_bfs(&inst, Model::Jump).unwrap().length().is_some_and(|l| l <= budget);
        let answer = match kernelize(&inst, budget).unwrap() {
            KernelOutcome::DecidedYes => true,
            KernelOutcome::DecidedNo(_) => false,
            KernelOutcome::Kernel(ri, b) => {
                let (seq, _) = tj_shortest_reduced(&ri, &SearchOptions::default()).unwrap();
                seq.is_some_and(|s| s.len() <= b)
            }
        };
        prop_assert_eq!(answer, truth);
    }

    #[test]
    fn instance_text_round_trips(inst in instance(18, 5)) {
        prop_assert_eq!(Instance::parse(&inst.to_text()).unwrap(), inst);
    }
}
