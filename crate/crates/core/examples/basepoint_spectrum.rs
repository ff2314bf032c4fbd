//! Breaks a closed diagram at every arc and prints the formal sum of each
//! long diagram. For classical knots all sums agree; the recorded virtual
//! witness has two different ones.

use knot_quandles::coloring::InvariantQuery;
use knot_quandles::diagram::{parse_diagram, Diagram};
use knot_quandles::fixtures;
use knot_quandles::obstruction::nonclassical_by_basepoints;
use knot_quandles::{ClosedDiagram, FiniteQuandle};

fn show(name: &str, c: &ClosedDiagram, q: &FiniteQuandle, query: &InvariantQuery) {
    let v = nonclassical_by_basepoints(c, q, query);
    println!("{name}: {}", v.kind.as_str());
    for (arc, sum) in &v.sums {
        println!("  {arc}: {}", sum.render(q));
    }
}

fn main() {
    let w: serde_json::Value = serde_json::from_str(fixtures::VIRTUAL_WITNESS_JSON).expect("witness is JSON");
    let Diagram::Closed(witness) = parse_diagram(&w["diagram"].to_string()).expect("witness parses") else {
        panic!("witness is not a closed diagram");
    };
    let q = FiniteQuandle::from_spec(w["quandle"].as_str().unwrap()).expect("quandle builds");
    let query = InvariantQuery::parse(&q, w["basepoint"].as_str().unwrap(), w["act_on"].as_str().unwrap())
        .expect("elements exist");

    show("trefoil", &fixtures::trefoil(), &q, &query);
    show(&format!("virtual {}", w["gauss"].as_str().unwrap()), &witness, &q, &query);
}
