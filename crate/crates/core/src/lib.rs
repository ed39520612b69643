//! Reconfiguration of minimum s-t vertex separators.
//!
//! Tokens sit on the vertices of a minimum separator `A` and must be moved one at a
//! time onto another minimum separator `B` so that every intermediate set is again a
//! minimum separator. Under token sliding a token moves to a neighbouring vertex;
//! under token jumping it may move anywhere.
//!
//! The crate provides instance parsing and validation, canonical paths, the
//! reductions for the jumping model, greedy and exact solvers, a brute-force oracle,
//! a kernel for the jump budget, gadget generators and an independent verifier.

pub mod canonical;
pub mod error;
pub mod exec;
pub mod fixtures;
pub mod flow;
pub mod generators;
pub mod graph;
pub mod kernel;
pub mod matching;
pub mod preprocess;
pub mod separator_check;
pub mod solvers;
pub mod verify;

pub use canonical::{CanonicalPaths, Configuration};
pub use error::{Error, Result, SetName};
pub use exec::Exec;
pub use graph::{Graph, Instance, Vertex};
pub use kernel::{kernelize, KernelOutcome};
pub use preprocess::{preprocess_tj, ReducedInstance, VertexMap};
pub use solvers::{Model, Solution, VertexMove};
pub use verify::{verify_sequence, Verdict, VertexSequence};
