//! Compares the tangle sums of the 6_2 tangle with the formal sum of 6_3
//! over A_6, and checks that the tangle is never obstructed from the long
//! knot obtained by joining its own strands.

use knot_quandles::coloring::{colorings_tangle_boundary_mono, InvariantQuery};
use knot_quandles::diagram::break_at;
use knot_quandles::fixtures;
use knot_quandles::obstruction::tangle_embedding_obstruction;
use knot_quandles::FiniteQuandle;

fn main() {
    let q = FiniteQuandle::from_spec("conjgroup:A6").expect("A6 builds");
    let query = InvariantQuery::parse(&q, "(1,2,3,4)(5,6)", "(1,2,3,4,5)").expect("elements exist");
    let t = fixtures::tangle_6_2();
    let k = break_at(&fixtures::knot_6_3(), 1).expect("arc exists");

    let colorings = colorings_tangle_boundary_mono(&t, &q, query.basepoint);
    println!("boundary-monochromatic colorings of T: {}", colorings.len());

    println!("T against 6_3:");
    for line in tangle_embedding_obstruction(&t, &k, &q, &query).render(&q).lines() {
        println!("  {line}");
    }
    println!("T against its own closure:");
    for line in tangle_embedding_obstruction(&t, &t.join_strands(), &q, &query).render(&q).lines() {
        println!("  {line}");
    }
}
