use std::collections::HashMap;

use super::{label_moves, lift, Model, Move, ReconfigSequence, Solution};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::graph::Instance;
use crate::preprocess::{preprocess_tj, ReducedInstance};
use crate::separator_check::CrossingEdgeIndex;

pub const DEFAULT_MAX_STATES: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Largest state space the search may enter.
    pub max_states: u64,
    pub exec: Exec,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            max_states: DEFAULT_MAX_STATES,
            exec: Exec::default(),
        }
    }
}

/// Mixed-radix encoding of the per-path offsets from the start positions.
struct Codec {
    start: Vec<usize>,
    dir: Vec<isize>,
    width: Vec<u64>,
    stride: Vec<u64>,
}

impl Codec {
    fn offset(&self, state: u64, i: usize) -> u64 {
        state / self.stride[i] % (self.width[i] + 1)
    }

    fn position(&self, i: usize, offset: u64) -> usize {
        self.start[i]
            .checked_add_signed(self.dir[i] * offset as isize)
            .expect("offset inside the window")
    }

    fn positions(&self, state: u64) -> Vec<usize> {
        (0..self.start.len())
            .map(|i| self.position(i, self.offset(state, i)))
            .collect()
    }

    fn goal(&self) -> u64 {
        self.width
            .iter()
            .zip(&self.stride)
            .map(|(w, s)| w * s)
            .sum()
    }
}

/// Breadth-first search over forward-only configurations inside the windows of a
/// reduced instance. Returns a shortest jump sequence, if any, and the number of
/// configurations reached.
///
/// Each layer is expanded with `opts.exec` and merged in frontier order, so the
/// result does not depend on the strategy.
pub fn tj_shortest_reduced(
    ri: &ReducedInstance,
    opts: &SearchOptions,
) -> Result<(Option<ReconfigSequence>, u64)> {
    let cp = &ri.paths;
    let k = cp.len();
    let width: Vec<u64> = (0..k)
        .map(|i| cp.a()[i].abs_diff(cp.b()[i]) as u64)
        .collect();
    let states: u128 = width.iter().map(|&w| u128::from(w) + 1).product();
    if states > u128::from(opts.max_states) {
        return Err(Error::StateSpaceExceeded {
            states,
            cap: opts.max_states,
        });
    }
    let mut stride = vec![1u64; k];
    for i in 1..k {
        stride[i] = stride[i - 1] * (width[i - 1] + 1);
    }
    let codec = Codec {
        start: cp.a().to_vec(),
        dir: (0..k).map(|i| cp.direction(i)).collect(),
        width,
        stride,
    };
    let index = CrossingEdgeIndex::new(&ri.instance, cp);
    let goal = codec.goal();

    // state -> (predecessor, moved path)
    let mut parent: HashMap<u64, (u64, usize)> = HashMap::from([(0, (u64::MAX, usize::MAX))]);
    let mut frontier = vec![0u64];
    while !frontier.is_empty() && !parent.contains_key(&goal) {
        let expanded = opts.exec.map(&frontier, |&state| {
            let mut pos = codec.positions(state);
            let mut next = Vec::new();
            for i in 0..k {
                let (here, saved) = (codec.offset(state, i), pos[i]);
                for o in here + 1..=codec.width[i] {
                    let child = state + (o - here) * codec.stride[i];
                    if parent.contains_key(&child) {
                        continue;
                    }
                    pos[i] = codec.position(i, o);
                    if index.separates(&pos) {
                        next.push((child, i));
                    }
                }
                pos[i] = saved;
            }
            next
        });
        let mut layer = Vec::new();
        for (&state, children) in frontier.iter().zip(expanded) {
            for (child, i) in children {
                parent.entry(child).or_insert_with(|| {
                    layer.push(child);
                    (state, i)
                });
            }
        }
        frontier = layer;
    }
    let explored = parent.len() as u64;
    if !parent.contains_key(&goal) {
        return Ok((None, explored));
    }
    let mut moves = Vec::new();
    let mut state = goal;
    while state != 0 {
        let (prev, i) = parent[&state];
        let from = codec.position(i, codec.offset(prev, i));
        let to = codec.position(i, codec.offset(state, i));
        moves.push(Move {
            path: i,
            from,
            to,
            model: Model::Jump,
        });
        state = prev;
    }
    moves.reverse();
    Ok((
        Some(ReconfigSequence {
            model: Model::Jump,
            moves,
        }),
        explored,
    ))
}

/// Shortest token jumping sequence, or infeasibility, by exact search on the
/// preprocessed instance.
pub fn solve_tj_shortest(instance: &Instance, opts: &SearchOptions) -> Result<Solution> {
    let ri = preprocess_tj(instance)?;
    let (seq, explored) = tj_shortest_reduced(&ri, opts)?;
    let moves = match seq {
        Some(seq) => Some(label_moves(instance, &lift(&ri, &seq))?),
        None => None,
    };
    Ok(Solution {
        model: Model::Jump,
        shortest: true,
        moves,
        states_explored: explored,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn shortest(inst: &Instance) -> Option<usize> {
        solve_tj_shortest(inst, &SearchOptions::default())
            .unwrap()
            .length()
    }

    #[test]
    fn fixture_lengths() {
        assert_eq!(shortest(&fixtures::fix_a()), Some(2));
        assert_eq!(shortest(&fixtures::fix_b()), Some(3));
        assert_eq!(shortest(&fixtures::fix_c()), Some(5));
        assert_eq!(shortest(&fixtures::fix_dead()), None);
    }

    #[test]
    fn strategies_agree() {
        let ri = preprocess_tj(&fixtures::fix_c()).unwrap();
        let seq = SearchOptions {
            exec: Exec::Sequential,
            ..SearchOptions::default()
        };
        let par = SearchOptions {
            exec: Exec::Parallel,
            ..SearchOptions::default()
        };
        assert_eq!(
            tj_shortest_reduced(&ri, &seq).unwrap(),
            tj_shortest_reduced(&ri, &par).unwrap()
        );
    }

    #[test]
    fn state_cap() {
        let opts = SearchOptions {
            max_states: 8,
            ..SearchOptions::default()
        };
        // three windows of width two: 27 states
        let err = solve_tj_shortest(&fixtures::fix_c(), &opts).unwrap_err();
        assert_eq!(err, Error::StateSpaceExceeded { states: 27, cap: 8 });
        assert!(err.is_resource_guard());
    }

    #[test]
    fn moves_are_forward_and_in_window() {
        let ri = preprocess_tj(&fixtures::fix_c()).unwrap();
        let (seq, _) = tj_shortest_reduced(&ri, &SearchOptions::default()).unwrap();
        for m in seq.unwrap().moves {
            let (l, r) = (ri.paths.l(m.path), ri.paths.r(m.path));
            assert!((l..=r).contains(&m.from) && (l..=r).contains(&m.to));
            assert_eq!(
                (m.to as isize - m.from as isize).signum(),
                ri.paths.direction(m.path)
            );
        }
    }
}
