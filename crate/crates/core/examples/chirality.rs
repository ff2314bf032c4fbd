//! Shows that 5_2 and 9_42 are chiral by comparing the formal sums of a
//! diagram and its mirror image.
//!
//! ```text
//! cargo run --release --example chirality
//! ```

use knot_quandles::coloring::InvariantQuery;
use knot_quandles::diagram::break_at;
use knot_quandles::fixtures;
use knot_quandles::obstruction::chirality_test;
use knot_quandles::{FiniteQuandle, LongDiagram};

fn report(name: &str, d: &LongDiagram, spec: &str, basepoint: &str, act_on: &str) {
    let q = FiniteQuandle::from_spec(spec).expect("quandle builds");
    let query = InvariantQuery::parse(&q, basepoint, act_on).expect("elements exist");
    let verdict = chirality_test(d, &q, &query);
    println!("{name} over {spec} ({} elements), q = {basepoint}, x = {act_on}", q.len());
    for line in verdict.render(&q).lines() {
        println!("  {line}");
    }
}

fn main() {
    report("5_2", &fixtures::knot_5_2_long(), "conjclass:S5:(1,2)(3,4,5)", "(1,2)(3,4,5)", "(1,2,3)(4,5)");
    let d = break_at(&fixtures::knot_9_42(), 1).expect("arc exists");
    report("9_42", &d, "conjgroup:A5", "(1,2,3)", "(2,3,4)");
}
