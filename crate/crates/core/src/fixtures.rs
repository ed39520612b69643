//! Small hand-built instances used throughout the tests and examples.
//!
//! Vertex numbering follows the generators: `s` first, then path vertices column by
//! column, then `t`.

use crate::generators::{self, PlainGraph};
use crate::graph::Instance;

/// Two parallel paths `s-a1-a2-t` and `s-b1-b2-t`, `A = {a1, b1}`, `B = {a2, b2}`.
pub const FIX_A: &str = "\
# two parallel paths: s=1 a1=2 b1=3 a2=4 b2=5 t=6
p msr 6 6
e 1 2
e 1 3
e 2 4
e 3 5
e 4 6
e 5 6
s 1
t 6
A 2 3
B 4 5
";

/// Same paths as [`FIX_A`] plus the crossing edges `{x1, y2}` and `{x2, y1}`;
/// every first jump opens an s-t path, so the instance is infeasible.
pub const FIX_DEAD: &str = "\
# s=1 x1=2 y1=3 x2=4 y2=5 t=6
p msr 6 8
e 1 2
e 1 3
e 2 4
e 3 5
e 4 6
e 5 6
e 2 5
e 3 4
s 1
t 6
A 2 3
B 4 5
";

pub fn fix_a() -> Instance {
    Instance::parse(FIX_A).expect("fixture is valid")
}

/// Vertex-cover gadget on a single edge.
pub fn fix_b() -> Instance {
    generators::vc_gadget(&PlainGraph::complete(2), 1).0
}

/// Vertex-cover gadget on a triangle.
pub fn fix_c() -> Instance {
    generators::vc_gadget(&PlainGraph::complete(3), 2).0
}

pub fn fix_dead() -> Instance {
    Instance::parse(FIX_DEAD).expect("fixture is valid")
}
