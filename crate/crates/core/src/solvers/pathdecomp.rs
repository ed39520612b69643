use std::collections::BTreeSet;

use super::ReconfigSequence;
use crate::error::{Error, Result};
use crate::graph::{Instance, Vertex};
use crate::preprocess::ReducedInstance;

/// Bags of a path decomposition of the graph minus its terminals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathDecomposition {
    pub bags: Vec<Vec<Vertex>>,
}

impl PathDecomposition {
    /// Largest bag size minus one.
    pub fn width(&self) -> usize {
        self.bags
            .iter()
            .map(Vec::len)
            .max()
            .unwrap_or(0)
            .saturating_sub(1)
    }

    /// Checks the structural contract against `instance`: bags of at most `k + 1`
    /// vertices, the first bag `A` and the last `B`, every non-terminal vertex in one
    /// contiguous run of bags, and every edge between non-terminals inside some bag.
    pub fn check(&self, instance: &Instance) -> std::result::Result<(), String> {
        let (first, last) = match (self.bags.first(), self.bags.last()) {
            (Some(f), Some(l)) => (f, l),
            _ => return Err("no bags".into()),
        };
        if first.as_slice() != instance.a() {
            return Err(format!("first bag {first:?} is not A"));
        }
        if last.as_slice() != instance.b() {
            return Err(format!("last bag {last:?} is not B"));
        }
        if let Some(bag) = self.bags.iter().find(|b| b.len() > instance.k() + 1) {
            return Err(format!("bag {bag:?} exceeds k + 1 = {}", instance.k() + 1));
        }
        let n = instance.vertex_count();
        let mut runs: Vec<Option<(usize, usize)>> = vec![None; n + 1];
        for (x, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                if instance.is_terminal(v) {
                    return Err(format!("terminal {v} in bag {x}"));
                }
                runs[v] = match runs[v] {
                    None => Some((x, x)),
                    Some((start, end)) if end + 1 == x => Some((start, x)),
                    Some(_) => return Err(format!("vertex {v} leaves and re-enters at bag {x}")),
                };
            }
        }
        if let Some(v) = instance
            .graph()
            .vertices()
            .find(|&v| !instance.is_terminal(v) && runs[v].is_none())
        {
            return Err(format!("vertex {v} is in no bag"));
        }
        for (u, v) in instance.graph().edges() {
            if instance.is_terminal(u) || instance.is_terminal(v) {
                continue;
            }
            let (ru, rv) = (runs[u].expect("covered"), runs[v].expect("covered"));
            if ru.1 < rv.0 || rv.1 < ru.0 {
                return Err(format!("edge {{{u},{v}}} in no bag"));
            }
        }
        Ok(())
    }
}

/// Turns a forward jump sequence on a reduced instance into a path decomposition of
/// width `k`: each jump over positions `q..l` of a path sweeps a window of two
/// consecutive path vertices across the skipped stretch, next to the other tokens.
pub fn pathdecomp_from_solution(
    ri: &ReducedInstance,
    seq: &ReconfigSequence,
) -> Result<PathDecomposition> {
    let cp = &ri.paths;
    let mut pos = cp.a().to_vec();
    let mut bags: Vec<Vec<Vertex>> = vec![ri.instance.a().to_vec()];
    let push = |bag: BTreeSet<Vertex>, bags: &mut Vec<Vec<Vertex>>| {
        let bag: Vec<_> = bag.into_iter().collect();
        if bags.last() != Some(&bag) {
            bags.push(bag);
        }
    };
    for (step, m) in seq.moves.iter().enumerate() {
        let dir = cp.direction(m.path);
        let forward = m.from == pos[m.path]
            && m.to != m.from
            && (m.to as isize - m.from as isize).signum() == dir;
        let within = (cp.l(m.path)..=cp.r(m.path)).contains(&m.to);
        if !forward || !within {
            return Err(Error::NotForward { step: step + 1 });
        }
        let rest: BTreeSet<Vertex> = pos
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != m.path)
            .map(|(i, &p)| cp.vertex(i, p))
            .collect();
        let mut p = m.from;
        while p != m.to {
            let q = p.checked_add_signed(dir).expect("inside the window");
            let mut bag = rest.clone();
            bag.insert(cp.vertex(m.path, p));
            bag.insert(cp.vertex(m.path, q));
            push(bag, &mut bags);
            p = q;
        }
        let mut bag = rest;
        bag.insert(cp.vertex(m.path, m.to));
        push(bag, &mut bags);
        pos[m.path] = m.to;
    }
    Ok(PathDecomposition { bags })
}
