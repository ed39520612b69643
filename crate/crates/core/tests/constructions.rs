use msr_core::canonical::CanonicalPaths;
use msr_core::flow::max_disjoint_paths;
use msr_core::generators::{brute_vc, cross_composition, vc_gadget, PlainGraph};
use msr_core::preprocess::preprocess_tj;
use msr_core::separator_check::unskippable_vertices;
use msr_core::solvers::{oracle_bfs, solve_tj_shortest, SearchOptions};
use msr_core::{fixtures, Model};

fn shortest(inst: &msr_core::Instance) -> Option<usize> {
    solve_tj_shortest(inst, &SearchOptions::default())
        .unwrap()
        .length()
}

#[test]
fn single_edge_gadget_is_the_two_path_fixture() {
    let (inst, budget) = vc_gadget(&PlainGraph::complete(2), 1);
    assert_eq!(inst, fixtures::fix_b());
    assert_eq!(budget, 3);
    assert_eq!(oracle_bfs(&inst, Model::Jump).unwrap().length(), Some(3));
}

#[test]
fn triangles_over_budget_compose_to_a_no_instance() {
    let k3 = PlainGraph::complete(3);
    let (inst, budget) = cross_composition(&[(k3.clone(), 1), (k3, 1)]).unwrap();
    // k = 4 tokens, so the budget is 2 * (4 + 1)
    assert_eq!((inst.k(), budget), (4, 10));
    assert!(!shortest(&inst).is_some_and(|l| l <= budget));
}

#[test]
fn composed_length_adds_up_per_input() {
    // with every vc >= kappa the optimum is r k plus the cover sizes
    let graphs = [
        PlainGraph::complete(3),
        PlainGraph::cycle(3),
        PlainGraph::new(3, vec![(1, 2)]).unwrap(),
        PlainGraph::new(3, vec![(1, 2), (2, 3)]).unwrap(),
    ];
    for g1 in &graphs {
        for g2 in &graphs {
            let inputs = [(g1.clone(), 1), (g2.clone(), 1)];
            let (inst, _) = cross_composition(&inputs).unwrap();
            let covers = brute_vc(g1).unwrap() + brute_vc(g2).unwrap();
            assert_eq!(shortest(&inst), Some(2 * inst.k() + covers));
        }
    }
}

#[test]
fn composed_paths_have_four_vertices_per_input_plus_one() {
    for r in 1..=3 {
        let (inst, _) = cross_composition(&vec![(PlainGraph::complete(2), 1); r]).unwrap();
        let cp = CanonicalPaths::new(&inst, &max_disjoint_paths(&inst)).unwrap();
        assert!(cp.paths().iter().all(|p| p.len() == 4 * r + 1));
    }
}

#[test]
fn synchronization_columns_are_unskippable() {
    let k2 = PlainGraph::complete(2);
    let inputs = vec![(k2, 1); 3];
    let (inst, _) = cross_composition(&inputs).unwrap();
    let k = inst.k();
    let u = |i: usize, c: usize| 2 + (c - 2) * k + (i - 1);
    let ri = preprocess_tj(&inst).unwrap();
    let found: Vec<_> = unskippable_vertices(&ri)
        .into_iter()
        .map(|v| ri.original(v))
        .collect();
    for j in 1..inputs.len() {
        for i in 1..k {
            let v = u(i, 4 * j + 1);
            assert!(found.contains(&v), "gadget vertex {v} not reported");
            let on_last = inst
                .graph()
                .neighbors(v)
                .iter()
                .filter(|&&w| w > 1 && w < inst.t() && (w - 2) % k == k - 1)
                .count();
            assert!(on_last >= 2);
        }
    }
}
