use super::{label_moves, lift, Model, Move, ReconfigSequence, Solution};
use crate::error::Result;
use crate::graph::Instance;
use crate::preprocess::{preprocess_tj, trim_for_sliding, ReducedInstance};
use crate::separator_check::CrossingEdgeIndex;

/// Shortest token sliding sequence, or infeasibility.
///
/// Works on the window-trimmed instance and repeatedly slides the first token (by path
/// index) whose forward slide keeps a separator. A stall before reaching `B` means no
/// sequence exists; otherwise the length is the total window width.
pub fn solve_ts_shortest(instance: &Instance) -> Result<Solution> {
    let red = trim_for_sliding(instance)?;
    let (inst, cp) = (&red.instance, &red.paths);
    let mut pos = cp.a().to_vec();
    let mut blocked = vec![false; inst.vertex_count() + 1];
    for (i, &p) in pos.iter().enumerate() {
        blocked[cp.vertex(i, p)] = true;
    }
    let mut moves = Vec::new();
    let mut checks = 0u64;
    'scan: loop {
        for (i, here) in pos.iter_mut().enumerate() {
            if *here == cp.b()[i] {
                continue;
            }
            let next = here
                .checked_add_signed(cp.direction(i))
                .expect("window inside the path");
            let (old, new) = (cp.vertex(i, *here), cp.vertex(i, next));
            blocked[old] = false;
            blocked[new] = true;
            checks += 1;
            if inst.graph().separates(inst.s(), inst.t(), &blocked) {
                moves.push(Move {
                    path: i,
                    from: *here,
                    to: next,
                    model: Model::Slide,
                });
                *here = next;
                continue 'scan;
            }
            blocked[new] = false;
            blocked[old] = true;
        }
        break;
    }
    let moves = if pos == cp.b() {
        let seq = ReconfigSequence {
            model: Model::Slide,
            moves,
        };
        let pairs: Vec<_> = seq
            .vertex_pairs(cp)
            .into_iter()
            .map(|(u, v)| (red.map.get(u), red.map.get(v)))
            .collect();
        Some(label_moves(instance, &pairs)?)
    } else {
        None
    };
    Ok(Solution {
        model: Model::Slide,
        shortest: true,
        moves,
        states_explored: checks,
    })
}

/// Greedy forward jumps on a reduced instance: the first path (by index) with a legal
/// forward jump moves, landing as far ahead as possible. Returns the sequence, if any,
/// and the number of configurations tested.
pub fn tj_greedy_reduced(ri: &ReducedInstance) -> (Option<ReconfigSequence>, u64) {
    let cp = &ri.paths;
    let index = CrossingEdgeIndex::new(&ri.instance, cp);
    let mut pos = cp.a().to_vec();
    let mut moves = Vec::new();
    let mut checks = 0u64;
    'scan: loop {
        for i in 0..cp.len() {
            let (from, goal) = (pos[i], cp.b()[i]);
            if from == goal {
                continue;
            }
            let landings: Vec<usize> = if goal > from {
                (from + 1..=goal).rev().collect()
            } else {
                (goal..from).collect()
            };
            for to in landings {
                pos[i] = to;
                checks += 1;
                if index.separates(&pos) {
                    moves.push(Move {
                        path: i,
                        from,
                        to,
                        model: Model::Jump,
                    });
                    continue 'scan;
                }
            }
            pos[i] = from;
        }
        break;
    }
    let done = pos == cp.b();
    (
        done.then_some(ReconfigSequence {
            model: Model::Jump,
            moves,
        }),
        checks,
    )
}

/// Some token jumping sequence, not necessarily shortest, or infeasibility.
pub fn solve_tj_feasible(instance: &Instance) -> Result<Solution> {
    let ri = preprocess_tj(instance)?;
    let (seq, checks) = tj_greedy_reduced(&ri);
    let moves = match seq {
        Some(seq) => Some(label_moves(instance, &lift(&ri, &seq))?),
        None => None,
    };
    Ok(Solution {
        model: Model::Jump,
        shortest: false,
        moves,
        states_explored: checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::Graph;

    #[test]
    fn sliding_fixtures() {
        assert_eq!(
            solve_ts_shortest(&fixtures::fix_a()).unwrap().length(),
            Some(2)
        );
        let b = solve_ts_shortest(&fixtures::fix_b()).unwrap();
        assert_eq!(b.length(), Some(4));
        assert!(b.shortest);
        assert!(!solve_ts_shortest(&fixtures::fix_dead()).unwrap().feasible());
    }

    #[test]
    fn sliding_same_sets() {
        let i = fixtures::fix_a();
        let same = Instance::new(i.graph().clone(), 1, 6, vec![2, 3], vec![2, 3]).unwrap();
        assert_eq!(solve_ts_shortest(&same).unwrap().length(), Some(0));
    }

    #[test]
    fn sliding_moves_use_original_ids() {
        // s=1 x=2 a=3 m=4 b=5 y=6 t=7: trimming drops x and y, moves must still say 3 -> 4 -> 5
        let g = Graph::from_edges(7, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)]).unwrap();
        let i = Instance::new(g, 1, 7, vec![3], vec![5]).unwrap();
        let moves = solve_ts_shortest(&i).unwrap().moves.unwrap();
        let pairs: Vec<_> = moves.iter().map(|m| (m.from, m.to)).collect();
        assert_eq!(pairs, vec![(3, 4), (4, 5)]);
    }

    #[test]
    fn greedy_jumping_fixtures() {
        let a = solve_tj_feasible(&fixtures::fix_a()).unwrap();
        assert_eq!(a.length(), Some(2));
        assert!(!a.shortest);
        let b = solve_tj_feasible(&fixtures::fix_b()).unwrap();
        assert!(b.length().unwrap() <= 4);
        assert!(!solve_tj_feasible(&fixtures::fix_dead()).unwrap().feasible());
    }
}
