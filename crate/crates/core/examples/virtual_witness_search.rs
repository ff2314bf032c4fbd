//! Searches small closed Gauss codes for a non-classical virtual knot that
//! is detected by breaking it at different arcs.
//!
//! Grid, in search order:
//! * codes with 1 to 4 crossings, every over-arc assignment and sign
//!   pattern, keeping only codes that violate the even-interlacing
//!   condition (so they have no planar realization);
//! * the quandles in `QUANDLES`, all of at most 24 elements;
//! * every basepoint `q` and probe `x` in the quandle.
//!
//! The first hit is printed as JSON in the format of
//! `fixtures/virtual_witness.json`. If the whole grid is exhausted the
//! program says so and exits with status 1.
//!
//! ```text
//! cargo run --release --example virtual_witness_search > crates/core/fixtures/virtual_witness.json
//! ```

use knot_quandles::coloring::InvariantQuery;
use knot_quandles::diagram::{serialize_diagram, to_signed_gauss, ClosedDiagram, Diagram, Sign};
use knot_quandles::obstruction::basepoint_spectrum;
use knot_quandles::FiniteQuandle;
use serde_json::{json, Value};

const QUANDLES: &[&str] = &[
    "dihedral:3",
    "dihedral:4",
    "dihedral:5",
    "conjgroup:S3",
    "conjclass:S4:(1,2)",
    "conjclass:S4:(1,2,3)",
    "conjclass:S4:(1,2,3,4)",
    "conjclass:A4:(1,2,3)",
    "conjgroup:A4",
    "conjclass:S5:(1,2)",
    "conjclass:A5:(1,2,3,4,5)",
    "conjclass:S5:(1,2)(3,4,5)",
    "conjgroup:S4",
];

/// Token sequence of the canonical code: over-passages of arc `a` (by
/// crossing number), then the under-passage ending arc `a`.
fn token_crossings(c: &ClosedDiagram) -> Vec<usize> {
    let mut seq = Vec::new();
    for arc in 1..=c.arcs() {
        seq.extend((0..c.crossings()).filter(|&i| c.over_arc()[i] == arc));
        seq.push(arc - 1);
    }
    seq
}

/// Gauss's parity condition: in a planar code every crossing is
/// interlaced with an even number of others.
fn has_odd_interlacing(c: &ClosedDiagram) -> bool {
    let seq = token_crossings(c);
    (0..c.crossings()).any(|k| {
        let pos: Vec<usize> = seq.iter().enumerate().filter(|&(_, &x)| x == k).map(|(p, _)| p).collect();
        let inside = &seq[pos[0] + 1..pos[1]];
        (0..c.crossings())
            .filter(|&j| j != k && inside.iter().filter(|&&x| x == j).count() == 1)
            .count()
            % 2
            == 1
    })
}

fn codes(n: usize) -> impl Iterator<Item = ClosedDiagram> {
    let assignments = n.pow(n as u32);
    (0..assignments).flat_map(move |mut a| {
        let over: Vec<usize> = (0..n)
            .map(|_| {
                let v = a % n + 1;
                a /= n;
                v
            })
            .collect();
        (0..1u32 << n).map(move |mask| {
            let signs = (0..n)
                .map(|i| if mask >> i & 1 == 1 { Sign::Negative } else { Sign::Positive })
                .collect();
            ClosedDiagram::new(over.clone(), signs).expect("in range")
        })
    })
}

fn search() -> Option<Value> {
    let quandles: Vec<(&str, FiniteQuandle)> = QUANDLES
        .iter()
        .map(|s| (*s, FiniteQuandle::from_spec(s).expect("grid quandle builds")))
        .collect();
    for n in 1..=4 {
        for c in codes(n).filter(has_odd_interlacing) {
            for (spec, q) in &quandles {
                for base in 0..q.len() {
                    for probe in 0..q.len() {
                        let query = InvariantQuery::new(q, base, probe).unwrap();
                        let spectrum = basepoint_spectrum(&c, q, &query);
                        if spectrum.windows(2).any(|w| w[0] != w[1]) {
                            let wrapped = Diagram::Closed(c.clone());
                            return Some(json!({
                                "diagram": serde_json::from_str::<Value>(&serialize_diagram(&wrapped)).unwrap(),
                                "gauss": to_signed_gauss(&wrapped).unwrap(),
                                "quandle": spec,
                                "basepoint": q.label(base),
                                "act_on": q.label(probe),
                                "spectrum": spectrum.iter().map(|s| s.to_json(q)).collect::<Vec<_>>(),
                            }));
                        }
                    }
                }
            }
        }
    }
    None
}

fn main() {
    match search() {
        Some(witness) => println!("{}", serde_json::to_string_pretty(&witness).unwrap()),
        None => {
            eprintln!("no witness in the grid: codes with <= 4 crossings, quandles {QUANDLES:?}");
            std::process::exit(1);
        }
    }
}
