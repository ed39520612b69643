//! Replays a claimed reconfiguration sequence on the full graph.
//!
//! Separation is checked with a search of its own, so a defect in the solvers'
//! fast separator test cannot hide here.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Instance, Vertex};
use crate::solvers::{Model, Solution};

/// A move sequence by vertex ids, as stored in sequence files.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSequence {
    pub model: Model,
    pub moves: Vec<(Vertex, Vertex)>,
}

impl VertexSequence {
    /// Moves of a feasible solution; `None` if it has none.
    pub fn from_solution(sol: &Solution) -> Option<Self> {
        let moves = sol.moves.as_ref()?.iter().map(|m| (m.from, m.to)).collect();
        Some(VertexSequence {
            model: sol.model,
            moves,
        })
    }

    /// Parses `model slide|jump` followed by one `<from> <to>` line per move.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let syntax = |line, msg: String| Error::Syntax { line, msg };
        let (no, head) = lines
            .next()
            .ok_or_else(|| syntax(1, "missing `model` line".into()))?;
        let model = match head.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["model", m] => m.parse().map_err(|e| syntax(no, e))?,
            _ => return Err(syntax(no, "header must read `model slide|jump`".into())),
        };
        let mut moves = Vec::new();
        for (no, line) in lines {
            let fields: Vec<_> = line.split_whitespace().collect();
            let [from, to] = fields.as_slice() else {
                return Err(syntax(no, "move line must read `<from> <to>`".into()));
            };
            let num = |f: &str| {
                f.parse::<Vertex>()
                    .map_err(|_| syntax(no, format!("not a number: `{f}`")))
            };
            moves.push((num(from)?, num(to)?));
        }
        Ok(VertexSequence { model, moves })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("model {}\n", self.model);
        for (from, to) in &self.moves {
            let _ = writeln!(out, "{from} {to}");
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Accept,
    /// `step` is the 1-based move that fails, or the number of moves if only the
    /// final set is wrong.
    Reject {
        step: usize,
        reason: String,
    },
}

impl Verdict {
    pub fn is_accept(&self) -> bool {
        matches!(self, Verdict::Accept)
    }
}

/// Depth-first search for a path from `s` to `t` that avoids `occupied`.
fn s_t_connected(instance: &Instance, occupied: &[bool]) -> bool {
    let g = instance.graph();
    let mut visited = vec![false; g.vertex_count() + 1];
    let mut stack = vec![instance.s()];
    visited[instance.s()] = true;
    while let Some(v) = stack.pop() {
        if v == instance.t() {
            return true;
        }
        for &w in g.neighbors(v) {
            if !visited[w] && !occupied[w] {
                visited[w] = true;
                stack.push(w);
            }
        }
    }
    false
}

/// Accepts iff every move is a legal move of the sequence's model, every
/// intermediate set is a minimum separator and the last set is `B`.
pub fn verify_sequence(instance: &Instance, seq: &VertexSequence) -> Verdict {
    let n = instance.vertex_count();
    let mut occupied = vec![false; n + 1];
    for &v in instance.a() {
        occupied[v] = true;
    }
    let reject = |step, reason: String| Verdict::Reject { step, reason };
    for (x, &(from, to)) in seq.moves.iter().enumerate() {
        let step = x + 1;
        for v in [from, to] {
            if v == 0 || v > n {
                return reject(step, format!("vertex {v} is not in the graph"));
            }
        }
        if !occupied[from] {
            return reject(step, format!("no token on {from}"));
        }
        if occupied[to] {
            return reject(step, format!("{to} already holds a token"));
        }
        if instance.is_terminal(to) {
            return reject(step, format!("{to} is a terminal"));
        }
        if seq.model == Model::Slide && !instance.graph().neighbors(from).contains(&to) {
            return reject(step, format!("{from} and {to} are not adjacent"));
        }
        occupied[from] = false;
        occupied[to] = true;
        if s_t_connected(instance, &occupied) {
            return reject(step, "the set no longer separates s from t".into());
        }
    }
    let last: Vec<Vertex> = (1..=n).filter(|&v| occupied[v]).collect();
    if last != instance.b() {
        return reject(
            seq.moves.len(),
            format!("final set {last:?} differs from B"),
        );
    }
    Verdict::Accept
}
