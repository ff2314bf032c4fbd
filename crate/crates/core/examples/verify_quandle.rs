//! Builds a few quandles and checks the axioms: exhaustively for small ones,
//! by sampling for A_6.

use knot_quandles::quandle::{verify_axioms, verify_axioms_sampled};
use knot_quandles::FiniteQuandle;

fn main() {
    for spec in ["trivial:4", "dihedral:5", "conjclass:S5:(1,2)(3,4,5)", "conjgroup:A5"] {
        let q = FiniteQuandle::from_spec(spec).expect("quandle builds");
        let r = verify_axioms(&q);
        println!("{spec}: {} elements, {} triples, holds = {}", q.len(), r.triples_checked, r.holds());
    }
    let a6 = FiniteQuandle::from_spec("conjgroup:A6").expect("A6 builds");
    let r = verify_axioms_sampled(&a6, 1_000_000, 1);
    println!("conjgroup:A6: {} elements, {} sampled triples, holds = {}", a6.len(), r.triples_checked, r.holds());
}
