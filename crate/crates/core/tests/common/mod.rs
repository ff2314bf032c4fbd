//! Oracles shared by the integration tests. They use only the raw quandle
//! tables and the diagram data, never the library's search or evaluation
//! code.

#![allow(dead_code)]

use knot_quandles::diagram::{LongDiagram, Sign};
use knot_quandles::{Automorphism, ClosedDiagram, Coloring, FiniteQuandle};

/// `x_{i+1} = x_i * x_{o(i)}` for `v = +1`, `*̄` for `v = −1`.
fn step(q: &FiniteQuandle, input: usize, over: usize, sign: Sign) -> usize {
    match sign {
        Sign::Positive => q.star(input, over),
        Sign::Negative => q.barstar(input, over),
    }
}

pub fn relations_hold(over: &[usize], sign: &[Sign], q: &FiniteQuandle, colors: &[usize], closed: bool) -> bool {
    let n = over.len();
    (0..n).all(|i| {
        let next = if closed { (i + 1) % n } else { i + 1 };
        step(q, colors[i], colors[over[i] - 1], sign[i]) == colors[next]
    })
}

/// Every assignment of colors to the arcs, filtered by the crossing relations.
pub fn brute_force_long(d: &LongDiagram, q: &FiniteQuandle, basepoint: usize) -> Vec<Vec<usize>> {
    let arcs = d.arcs();
    let total = q.len().pow(arcs as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut c = code;
        let colors: Vec<usize> = (0..arcs)
            .map(|_| {
                let v = c % q.len();
                c /= q.len();
                v
            })
            .collect();
        if colors[0] == basepoint && relations_hold(d.over_arc(), d.sign(), q, &colors, false) {
            out.push(colors);
        }
    }
    out.sort();
    out
}

pub fn brute_force_closed(c: &ClosedDiagram, q: &FiniteQuandle, basepoint: usize) -> Vec<Vec<usize>> {
    let arcs = c.arcs();
    let total = q.len().pow(arcs as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut k = code;
        let colors: Vec<usize> = (0..arcs)
            .map(|_| {
                let v = k % q.len();
                k /= q.len();
                v
            })
            .collect();
        if colors[0] == basepoint && relations_hold(c.over_arc(), c.sign(), q, &colors, true) {
            out.push(colors);
        }
    }
    out.sort();
    out
}

pub fn arcs_of(colorings: &[Coloring]) -> Vec<Vec<usize>> {
    let mut v: Vec<Vec<usize>> = colorings.iter().map(|z| z.arcs().to_vec()).collect();
    v.sort();
    v
}

/// Colored longitude evaluated letter by letter straight from the tables.
pub fn longitude_by_hand(d: &LongDiagram, q: &FiniteQuandle, colors: &[usize], x: usize) -> usize {
    let mut y = x;
    for (i, (&o, &s)) in d.over_arc().iter().zip(d.sign()).enumerate() {
        let (own, over) = (colors[i], colors[o - 1]);
        y = match s {
            Sign::Positive => q.star(q.barstar(y, own), over),
            Sign::Negative => q.barstar(q.star(y, own), over),
        };
    }
    y
}

/// Colored longitude as an explicit composition of translation maps.
pub fn longitude_by_translations(d: &LongDiagram, q: &FiniteQuandle, colors: &[usize]) -> Automorphism {
    let mut f = Automorphism::identity(q.len());
    for (i, (&o, &s)) in d.over_arc().iter().zip(d.sign()).enumerate() {
        let own_barred = s == Sign::Positive;
        f = f.compose(&q.translation(colors[i], own_barred).unwrap());
        f = f.compose(&q.translation(colors[o - 1], !own_barred).unwrap());
    }
    f
}

/// Gauss's parity test on a closed code: some crossing is interlaced with
/// an odd number of others, so the code has no planar diagram.
pub fn has_odd_interlacing(c: &ClosedDiagram) -> bool {
    let mut seq = Vec::new();
    for arc in 1..=c.arcs() {
        seq.extend((0..c.crossings()).filter(|&i| c.over_arc()[i] == arc));
        seq.push(arc - 1);
    }
    (0..c.crossings()).any(|k| {
        let pos: Vec<usize> = (0..seq.len()).filter(|&p| seq[p] == k).collect();
        let inside = &seq[pos[0] + 1..pos[1]];
        (0..c.crossings())
            .filter(|&j| j != k && inside.iter().filter(|&&x| x == j).count() == 1)
            .count()
            % 2
            == 1
    })
}

pub fn s5_class() -> FiniteQuandle {
    FiniteQuandle::from_spec("conjclass:S5:(1,2)(3,4,5)").unwrap()
}
