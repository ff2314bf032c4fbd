//! Lists the colorings of the 5_2 long diagram by the conjugacy class of
//! (1,2)(3,4,5) in S_5, with the colored longitude of each.

use knot_quandles::coloring::colorings_long;
use knot_quandles::fixtures;
use knot_quandles::longitude::{colored_longitude, symbolic_longitude};
use knot_quandles::FiniteQuandle;

fn main() {
    let q = FiniteQuandle::from_spec("conjclass:S5:(1,2)(3,4,5)").expect("quandle builds");
    let d = fixtures::knot_5_2_long();
    let base = q.element("(1,2)(3,4,5)").expect("element exists");
    let x = q.element("(1,2,3)(4,5)").expect("element exists");
    println!("longitude: {}", symbolic_longitude(&d));
    for z in colorings_long(&d, &q, base) {
        let phi = colored_longitude(&d, &q, &z).expect("coloring is valid");
        let arcs: Vec<&str> = z.arcs().iter().map(|&c| q.label(c)).collect();
        println!("{}  ϕ(x) = {}", arcs.join(" "), q.label(phi.apply(x)));
    }
}
