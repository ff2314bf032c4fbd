//! Diagrams used by the examples and the acceptance suite.
//!
//! Table knots are signed Gauss codes from the Rolfsen table; `5_2_long`
//! and `t6_2` are written directly in the JSON format.

use crate::diagram::{
    from_signed_gauss, parse_diagram, ClosedDiagram, Diagram, LongDiagram, TangleDiagram,
};

pub const TREFOIL_GAUSS: &str = include_str!("../fixtures/3_1.gauss");
pub const KNOT_5_2_GAUSS: &str = include_str!("../fixtures/5_2.gauss");
pub const KNOT_6_3_GAUSS: &str = include_str!("../fixtures/6_3.gauss");
pub const KNOT_9_42_GAUSS: &str = include_str!("../fixtures/9_42.gauss");
/// A long 5_2 whose longitude reads `{x1, x̄4, x2, x̄5, x3, x̄2, x4, x̄1, x5, x̄3}`.
pub const KNOT_5_2_LONG_JSON: &str = include_str!("../fixtures/5_2_long.json");
/// The 6-crossing 2-strand tangle contained in 6_2.
pub const TANGLE_6_2_JSON: &str = include_str!("../fixtures/t6_2.json");
/// A non-realizable closed code with a (Q, q, x) separating its breakings.
pub const VIRTUAL_WITNESS_JSON: &str = include_str!("../fixtures/virtual_witness.json");

fn closed(code: &str) -> ClosedDiagram {
    match from_signed_gauss(code).expect("fixture parses") {
        Diagram::Closed(c) => c,
        other => panic!("fixture is {}, expected closed", other.kind()),
    }
}

pub fn trefoil() -> ClosedDiagram {
    closed(TREFOIL_GAUSS)
}

pub fn knot_5_2() -> ClosedDiagram {
    closed(KNOT_5_2_GAUSS)
}

pub fn knot_6_3() -> ClosedDiagram {
    closed(KNOT_6_3_GAUSS)
}

pub fn knot_9_42() -> ClosedDiagram {
    closed(KNOT_9_42_GAUSS)
}

pub fn knot_5_2_long() -> LongDiagram {
    match parse_diagram(KNOT_5_2_LONG_JSON).expect("fixture parses") {
        Diagram::Long(d) => d,
        other => panic!("fixture is {}, expected long", other.kind()),
    }
}

pub fn tangle_6_2() -> TangleDiagram {
    match parse_diagram(TANGLE_6_2_JSON).expect("fixture parses") {
        Diagram::Tangle(t) => t,
        other => panic!("fixture is {}, expected tangle", other.kind()),
    }
}
