//! Long knots can be concatenated. For classical knots the order does not
//! matter; this prints both orders for the trefoil and 5_2.

use knot_quandles::coloring::InvariantQuery;
use knot_quandles::diagram::break_at;
use knot_quandles::fixtures;
use knot_quandles::obstruction::connected_sum_commutativity;
use knot_quandles::FiniteQuandle;

fn main() {
    let q = FiniteQuandle::from_spec("conjclass:S5:(1,2)(3,4,5)").expect("quandle builds");
    let query = InvariantQuery::parse(&q, "(1,2)(3,4,5)", "(1,2,3)(4,5)").expect("elements exist");
    let trefoil = break_at(&fixtures::trefoil(), 1).expect("arc exists");
    let v = connected_sum_commutativity(&trefoil, &fixtures::knot_5_2_long(), &q, &query);
    println!("{}", v.render(&q));
}
