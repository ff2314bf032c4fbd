//! Quandle longitudes, colored longitudes, and their formal sums.
//!
//! For a long diagram with under-passages `1..n`, the longitude word reads
//! `x_1, x_{o(1)}, x_2, x_{o(2)}, …, x_n, x_{o(n)}`. In each pair the arc
//! letter is applied with `*̄` and the over-arc letter with `*` when
//! `v(i) = +1`, and the other way round when `v(i) = −1`. Evaluating the
//! word on a coloring gives an automorphism of the quandle.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::coloring::{
    check_long_coloring, colorings_long, colorings_tangle_boundary_mono, is_coloring_tangle,
    Coloring, InvariantQuery,
};
use crate::diagram::{LongDiagram, Sign, TangleDiagram};
use crate::error::{Error, Result};
use crate::quandle::{Automorphism, FiniteQuandle, Letter, QuandleWord};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArcLetter {
    /// 1-based arc.
    pub arc: usize,
    pub barred: bool,
}

/// The uncolored longitude word of a long diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicLongitude {
    pub letters: Vec<ArcLetter>,
}

impl fmt::Display for SymbolicLongitude {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            let bar = if l.barred { "\u{0304}" } else { "" };
            write!(f, "x{bar}{}", l.arc)?;
        }
        f.write_str("}")
    }
}

fn letter_pair(arc: usize, over: usize, sign: Sign) -> [(usize, bool); 2] {
    let barred = sign == Sign::Positive;
    [(arc, barred), (over, !barred)]
}

pub fn symbolic_longitude(d: &LongDiagram) -> SymbolicLongitude {
    let letters = d
        .over_arc()
        .iter()
        .zip(d.sign())
        .enumerate()
        .flat_map(|(i, (&o, &s))| letter_pair(i + 1, o, s))
        .map(|(arc, barred)| ArcLetter { arc, barred })
        .collect();
    SymbolicLongitude { letters }
}

/// The longitude word with each arc replaced by its color.
pub fn colored_word(d: &LongDiagram, z: &Coloring) -> QuandleWord {
    QuandleWord::new(
        symbolic_longitude(d)
            .letters
            .iter()
            .map(|l| Letter::new(z.color(l.arc), l.barred))
            .collect(),
    )
}

/// `ϕ_ζ`, built as the composition of translations along the colored word.
pub fn colored_longitude(d: &LongDiagram, q: &FiniteQuandle, z: &Coloring) -> Result<Automorphism> {
    check_long_coloring(d, q, z)?;
    colored_word(d, z).to_automorphism(q)
}

/// `Φ_Q^q`: the multiset of colored longitudes, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomorphismFamily {
    members: Vec<Automorphism>,
}

impl AutomorphismFamily {
    pub fn new(mut members: Vec<Automorphism>) -> Self {
        members.sort();
        AutomorphismFamily { members }
    }

    pub fn members(&self) -> &[Automorphism] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, f: &Automorphism) -> bool {
        self.members.binary_search(f).is_ok()
    }

    /// `Σ_ϕ ϕ(x)`.
    pub fn formal_sum(&self, x: usize) -> FormalSum {
        self.members.iter().map(|f| f.apply(x)).collect()
    }
}

pub fn longitude_family(d: &LongDiagram, q: &FiniteQuandle, basepoint: usize) -> AutomorphismFamily {
    let colorings = colorings_long(d, q, basepoint);
    AutomorphismFamily::new(
        colorings
            .par_iter()
            .map(|z| colored_word(d, z).to_automorphism(q).expect("colors are in range"))
            .collect(),
    )
}

/// `S_F^x(D)`: evaluates every colored longitude word on the probe.
pub fn formal_sum(d: &LongDiagram, q: &FiniteQuandle, query: &InvariantQuery) -> FormalSum {
    colorings_long(d, q, query.basepoint)
        .iter()
        .map(|z| q.eval_word_unchecked(query.probe, &colored_word(d, z)))
        .collect()
}

/// A formal sum of quandle elements with nonnegative integer coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FormalSum {
    coefficients: BTreeMap<usize, u64>,
}

impl FormalSum {
    pub fn new() -> Self {
        FormalSum::default()
    }

    pub fn add(&mut self, element: usize, count: u64) {
        if count > 0 {
            *self.coefficients.entry(element).or_insert(0) += count;
        }
    }

    pub fn coefficient(&self, element: usize) -> u64 {
        self.coefficients.get(&element).copied().unwrap_or(0)
    }

    /// Sum of all coefficients.
    pub fn mass(&self) -> u64 {
        self.coefficients.values().sum()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.coefficients.iter().map(|(&e, &c)| (e, c))
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Coefficientwise `self ≤ other`.
    pub fn is_included_in(&self, other: &FormalSum) -> bool {
        self.terms().all(|(e, c)| c <= other.coefficient(e))
    }

    /// Terms by descending coefficient, ties in element order.
    pub fn sorted_terms(&self) -> Vec<(usize, u64)> {
        let mut terms: Vec<(usize, u64)> = self.terms().collect();
        terms.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        terms
    }

    /// Renders as e.g. `6 · (1,2,4)(3,5) + (1,2,3)(4,5)`; the empty sum is `0`.
    pub fn render(&self, q: &FiniteQuandle) -> String {
        if self.is_empty() {
            return "0".to_string();
        }
        self.sorted_terms()
            .into_iter()
            .map(|(e, c)| match c {
                1 => q.label(e).to_string(),
                _ => format!("{c} · {}", q.label(e)),
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// `{label: coefficient}`.
    pub fn to_json(&self, q: &FiniteQuandle) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> = self
            .terms()
            .map(|(e, c)| (q.label(e).to_string(), serde_json::Value::from(c)))
            .collect();
        serde_json::Value::Object(map)
    }

    /// Parses `{label: coefficient}` back against `q`.
    pub fn from_json(value: &serde_json::Value, q: &FiniteQuandle) -> Result<FormalSum> {
        let map = value
            .as_object()
            .ok_or_else(|| Error::Json("formal sum must be an object".into()))?;
        let mut sum = FormalSum::new();
        for (label, c) in map {
            let c = c
                .as_u64()
                .ok_or_else(|| Error::Json(format!("coefficient of {label} is not a count")))?;
            sum.add(q.element(label)?, c);
        }
        Ok(sum)
    }
}

impl FromIterator<usize> for FormalSum {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut sum = FormalSum::new();
        for e in iter {
            sum.add(e, 1);
        }
        sum
    }
}

pub fn sum_equal(a: &FormalSum, b: &FormalSum) -> bool {
    a == b
}

pub fn sum_included(a: &FormalSum, b: &FormalSum) -> bool {
    a.is_included_in(b)
}

pub fn sum_render(a: &FormalSum, q: &FiniteQuandle) -> String {
    a.render(q)
}

/// The two pieces of a colored longitude contributed by the strands of a
/// tangle, each read along its strand.
pub fn tangle_longitude_parts(
    t: &TangleDiagram,
    q: &FiniteQuandle,
    z: &Coloring,
) -> Result<(QuandleWord, QuandleWord)> {
    if !is_coloring_tangle(t, q, z) {
        return Err(Error::ColoringMismatch("not a coloring of this tangle".into()));
    }
    let strands = z.strands();
    let part = |s: usize| {
        QuandleWord::new(
            t.strands()[s]
                .crossings
                .iter()
                .enumerate()
                .flat_map(|(j, c)| {
                    let over = strands[c.over_strand - 1][c.over_arc - 1];
                    letter_pair(strands[s][j], over, c.sign)
                })
                .map(|(e, barred)| Letter::new(e, barred))
                .collect(),
        )
    };
    Ok((part(0), part(1)))
}

/// `(S_1^x, S_2^x)`: sums of `(ϕ¹·ϕ²)(x)` and `(ϕ²·ϕ¹)(x)` over the
/// boundary-monochromatic colorings.
pub fn tangle_sums(
    t: &TangleDiagram,
    q: &FiniteQuandle,
    query: &InvariantQuery,
) -> (FormalSum, FormalSum) {
    let mut s1 = FormalSum::new();
    let mut s2 = FormalSum::new();
    for z in colorings_tangle_boundary_mono(t, q, query.basepoint) {
        let (w1, w2) = tangle_longitude_parts(t, q, &z).expect("enumerated colorings are valid");
        s1.add(q.eval_word_unchecked(query.probe, &w1.concat(&w2)), 1);
        s2.add(q.eval_word_unchecked(query.probe, &w2.concat(&w1)), 1);
    }
    (s1, s2)
}
