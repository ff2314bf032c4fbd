//! Gauss-code level diagrams.
//!
//! A diagram is recorded as its under-passages in traversal order. Arcs run
//! between consecutive under-passages and are numbered from 1; under-passage
//! `i` of a strand separates arc `i` from arc `i + 1`. Each under-passage
//! stores the arc passing over it and a sign `v = ±1`: for `v = +1` the
//! outgoing arc is colored `in * over`, for `v = −1` it is `in *̄ over`.
//!
//! No planarity check is ever made, so virtual diagrams are represented by
//! the same types (virtual crossings simply do not appear).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "i8", into = "i8")]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    /// Whether the outgoing under-arc is `in *̄ over`.
    pub fn is_barred(self) -> bool {
        self == Sign::Negative
    }

    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

impl TryFrom<i8> for Sign {
    type Error = String;
    fn try_from(v: i8) -> std::result::Result<Self, Self::Error> {
        match v {
            1 => Ok(Sign::Positive),
            -1 => Ok(Sign::Negative),
            _ => Err(format!("sign must be 1 or -1, got {v}")),
        }
    }
}

impl From<Sign> for i8 {
    fn from(s: Sign) -> i8 {
        match s {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }
}

/// Relation between the crossing sign written in signed Gauss codes
/// (right-handed = `+`) and the coloring sign `v` stored in diagrams.
pub const GAUSS_SIGN_TO_V: Sign = Sign::Positive;

/// A long knot diagram with `n` under-passages and arcs `1..=n+1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LongDiagram {
    over_arc: Vec<usize>,
    sign: Vec<Sign>,
}

impl LongDiagram {
    pub fn new(over_arc: Vec<usize>, sign: Vec<Sign>) -> Result<Self> {
        let d = LongDiagram { over_arc, sign };
        d.validate()?;
        Ok(d)
    }

    pub fn unknot() -> Self {
        LongDiagram {
            over_arc: Vec::new(),
            sign: Vec::new(),
        }
    }

    fn validate(&self) -> Result<()> {
        validate_strand(&self.over_arc, &self.sign, self.over_arc.len() + 1)
    }

    pub fn crossings(&self) -> usize {
        self.over_arc.len()
    }

    pub fn arcs(&self) -> usize {
        self.over_arc.len() + 1
    }

    /// 1-based over-arc of each under-passage.
    pub fn over_arc(&self) -> &[usize] {
        &self.over_arc
    }

    pub fn sign(&self) -> &[Sign] {
        &self.sign
    }

    pub fn mirror(&self) -> LongDiagram {
        LongDiagram {
            over_arc: self.over_arc.clone(),
            sign: self.sign.iter().map(|s| s.flip()).collect(),
        }
    }

    /// Joins the last arc to the first.
    pub fn close(&self) -> Result<ClosedDiagram> {
        close_long(self)
    }
}

/// A closed knot diagram with `n ≥ 1` under-passages and arcs `1..=n`;
/// under-passage `n` leads back into arc 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClosedDiagram {
    over_arc: Vec<usize>,
    sign: Vec<Sign>,
}

impl ClosedDiagram {
    pub fn new(over_arc: Vec<usize>, sign: Vec<Sign>) -> Result<Self> {
        let d = ClosedDiagram { over_arc, sign };
        d.validate()?;
        Ok(d)
    }

    fn validate(&self) -> Result<()> {
        if self.over_arc.is_empty() {
            return Err(Error::InvalidDiagram(
                "closed diagrams need at least one crossing".into(),
            ));
        }
        validate_strand(&self.over_arc, &self.sign, self.over_arc.len())
    }

    pub fn crossings(&self) -> usize {
        self.over_arc.len()
    }

    pub fn arcs(&self) -> usize {
        self.over_arc.len()
    }

    pub fn over_arc(&self) -> &[usize] {
        &self.over_arc
    }

    pub fn sign(&self) -> &[Sign] {
        &self.sign
    }

    pub fn mirror(&self) -> ClosedDiagram {
        ClosedDiagram {
            over_arc: self.over_arc.clone(),
            sign: self.sign.iter().map(|s| s.flip()).collect(),
        }
    }

    pub fn break_at(&self, arc: usize) -> Result<LongDiagram> {
        break_at(self, arc)
    }
}

fn validate_strand(over_arc: &[usize], sign: &[Sign], arcs: usize) -> Result<()> {
    if over_arc.len() != sign.len() {
        return Err(Error::InvalidDiagram(format!(
            "{} over-arcs but {} signs",
            over_arc.len(),
            sign.len()
        )));
    }
    if let Some((i, &a)) = over_arc
        .iter()
        .enumerate()
        .find(|&(_, &a)| a == 0 || a > arcs)
    {
        return Err(Error::InvalidDiagram(format!(
            "crossing {} has over-arc {a}, expected 1..={arcs}",
            i + 1
        )));
    }
    Ok(())
}

/// An under-passage of a tangle strand; `over_strand` and `over_arc` are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TangleCrossing {
    pub over_strand: usize,
    pub over_arc: usize,
    pub sign: Sign,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TangleStrand {
    pub crossings: Vec<TangleCrossing>,
}

impl TangleStrand {
    pub fn arcs(&self) -> usize {
        self.crossings.len() + 1
    }
}

/// A 2-strand tangle (two inputs, two outputs). Strand `s` has arcs
/// `1..=n_s+1` in traversal order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TangleDiagram {
    strands: Vec<TangleStrand>,
}

impl TangleDiagram {
    pub fn new(strands: Vec<TangleStrand>) -> Result<Self> {
        let t = TangleDiagram { strands };
        t.validate()?;
        Ok(t)
    }

    pub fn crossingless() -> Self {
        TangleDiagram {
            strands: vec![TangleStrand::default(), TangleStrand::default()],
        }
    }

    fn validate(&self) -> Result<()> {
        if self.strands.len() != 2 {
            return Err(Error::InvalidDiagram(format!(
                "tangles have 2 strands, got {}",
                self.strands.len()
            )));
        }
        for (s, strand) in self.strands.iter().enumerate() {
            for (j, c) in strand.crossings.iter().enumerate() {
                let target = self.strands.get(c.over_strand.wrapping_sub(1)).ok_or_else(|| {
                    Error::InvalidDiagram(format!(
                        "strand {} crossing {} references strand {}",
                        s + 1,
                        j + 1,
                        c.over_strand
                    ))
                })?;
                if c.over_arc == 0 || c.over_arc > target.arcs() {
                    return Err(Error::InvalidDiagram(format!(
                        "strand {} crossing {} references arc {} of strand {}",
                        s + 1,
                        j + 1,
                        c.over_arc,
                        c.over_strand
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn strands(&self) -> &[TangleStrand] {
        &self.strands
    }

    pub fn mirror(&self) -> TangleDiagram {
        TangleDiagram {
            strands: self
                .strands
                .iter()
                .map(|s| TangleStrand {
                    crossings: s
                        .crossings
                        .iter()
                        .map(|c| TangleCrossing {
                            sign: c.sign.flip(),
                            ..*c
                        })
                        .collect(),
                })
                .collect(),
        }
    }

    /// The long diagram obtained by joining the end of strand 1 to the start
    /// of strand 2 with a crossingless arc. The tangle embeds in it.
    pub fn join_strands(&self) -> LongDiagram {
        let n1 = self.strands[0].crossings.len();
        // strand 1 arcs keep their numbers, strand 2 arc a becomes n1 + a
        let global = |c: &TangleCrossing| match c.over_strand {
            1 => c.over_arc,
            _ => n1 + c.over_arc,
        };
        let (over_arc, sign) = self
            .strands
            .iter()
            .flat_map(|s| s.crossings.iter())
            .map(|c| (global(c), c.sign))
            .unzip();
        LongDiagram { over_arc, sign }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Diagram {
    Long(LongDiagram),
    Closed(ClosedDiagram),
    Tangle(TangleDiagram),
}

impl Diagram {
    pub fn mirror(&self) -> Diagram {
        match self {
            Diagram::Long(d) => Diagram::Long(d.mirror()),
            Diagram::Closed(d) => Diagram::Closed(d.mirror()),
            Diagram::Tangle(t) => Diagram::Tangle(t.mirror()),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Diagram::Long(_) => "long",
            Diagram::Closed(_) => "closed",
            Diagram::Tangle(_) => "tangle",
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            Diagram::Long(d) => d.validate(),
            Diagram::Closed(d) => d.validate(),
            Diagram::Tangle(t) => t.validate(),
        }
    }
}

/// Parses the JSON diagram format and validates all index ranges.
pub fn parse_diagram(text: &str) -> Result<Diagram> {
    let d: Diagram = serde_json::from_str(text)?;
    d.validate()?;
    Ok(d)
}

pub fn serialize_diagram(d: &Diagram) -> String {
    serde_json::to_string(d).expect("plain data serializes")
}

/// Reads either the JSON format or a signed Gauss code.
pub fn parse_diagram_any(text: &str) -> Result<Diagram> {
    if text.trim_start().starts_with('{') {
        parse_diagram(text)
    } else {
        from_signed_gauss(text)
    }
}

/// Breaks a closed diagram so that closed arc `arc` becomes the initial arc.
///
/// The break point is taken right after the under-passage that ends the
/// previous arc, so over-passages carried by the broken arc land on long
/// arc 1. The final long arc `n+1` carries no over-passages.
pub fn break_at(c: &ClosedDiagram, arc: usize) -> Result<LongDiagram> {
    let n = c.crossings();
    if arc == 0 || arc > n {
        return Err(Error::InvalidDiagram(format!(
            "break arc {arc} out of range 1..={n}"
        )));
    }
    let shift = arc - 1;
    let relabel = |a: usize| (a - 1 + n - shift) % n + 1;
    let (over_arc, sign) = (0..n)
        .map(|k| {
            let i = (shift + k) % n;
            (relabel(c.over_arc[i]), c.sign[i])
        })
        .unzip();
    Ok(LongDiagram { over_arc, sign })
}

/// Identifies arcs `n+1` and `1`.
pub fn close_long(d: &LongDiagram) -> Result<ClosedDiagram> {
    let n = d.crossings();
    if n == 0 {
        return Err(Error::InvalidDiagram(
            "the 0-crossing long unknot has no closed diagram".into(),
        ));
    }
    Ok(ClosedDiagram {
        over_arc: d
            .over_arc
            .iter()
            .map(|&a| if a == n + 1 { 1 } else { a })
            .collect(),
        sign: d.sign.clone(),
    })
}

/// Connected sum of long diagrams: `a` followed by `b`.
pub fn concat(a: &LongDiagram, b: &LongDiagram) -> LongDiagram {
    let shift = a.crossings();
    LongDiagram {
        over_arc: a
            .over_arc
            .iter()
            .copied()
            .chain(b.over_arc.iter().map(|&o| o + shift))
            .collect(),
        sign: a.sign.iter().chain(&b.sign).copied().collect(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Passage {
    Over,
    Under,
}

/// Parses a signed Gauss code such as `O1- U2- O3- U1- O2- U3-`, or
/// `long: U1- O1-` for a long diagram.
///
/// Crossings are renumbered by the order of their under-passages. Token
/// signs are crossing handedness and are converted with [`GAUSS_SIGN_TO_V`].
pub fn from_signed_gauss(text: &str) -> Result<Diagram> {
    let trimmed = text.trim();
    let (long, body) = match trimmed.strip_prefix("long:") {
        Some(rest) => (true, rest),
        None => (false, trimmed),
    };

    let mut tokens = Vec::new();
    for tok in body.split_whitespace() {
        let mut chars = tok.chars();
        let passage = match chars.next() {
            Some('O') | Some('o') => Passage::Over,
            Some('U') | Some('u') => Passage::Under,
            _ => return Err(Error::GaussCode(format!("bad token {tok:?}"))),
        };
        let rest: String = chars.collect();
        let (label, sign) = if let Some(l) = rest.strip_suffix('+') {
            (l, Sign::Positive)
        } else if let Some(l) = rest.strip_suffix('-').or_else(|| rest.strip_suffix('−')) {
            (l, Sign::Negative)
        } else {
            return Err(Error::GaussCode(format!("token {tok:?} lacks a sign")));
        };
        if label.is_empty() || !label.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(Error::GaussCode(format!("bad crossing label in {tok:?}")));
        }
        tokens.push((passage, label.to_string(), sign));
    }
    if tokens.is_empty() && !long {
        return Err(Error::GaussCode("empty closed code".into()));
    }

    // crossing number = order of the under-passage
    let mut crossing_of = std::collections::HashMap::new();
    let mut under_count = 0;
    for (passage, label, _) in &tokens {
        if *passage == Passage::Under {
            if crossing_of.contains_key(label.as_str()) {
                return Err(Error::GaussCode(format!("label {label} has two under-passages")));
            }
            under_count += 1;
            crossing_of.insert(label.as_str(), under_count);
        }
    }
    let n = under_count;
    let mut over_arc = vec![0usize; n];
    let mut sign = vec![None::<Sign>; n];
    let mut under_sign = vec![Sign::Positive; n];
    let mut arc = 1;
    for (passage, label, s) in &tokens {
        let c = *crossing_of
            .get(label.as_str())
            .ok_or_else(|| Error::GaussCode(format!("label {label} has no under-passage")))?;
        match passage {
            Passage::Under => {
                under_sign[c - 1] = *s;
                arc += 1;
            }
            Passage::Over => {
                if sign[c - 1].is_some() {
                    return Err(Error::GaussCode(format!("label {label} has two over-passages")));
                }
                sign[c - 1] = Some(*s);
                over_arc[c - 1] = if !long && arc > n { 1 } else { arc };
            }
        }
    }
    let mut signs = Vec::with_capacity(n);
    for c in 0..n {
        let s = sign[c].ok_or_else(|| {
            Error::GaussCode(format!("crossing {} has no over-passage", c + 1))
        })?;
        if s != under_sign[c] {
            return Err(Error::GaussCode(format!(
                "crossing {} has mismatched signs",
                c + 1
            )));
        }
        signs.push(s.times(GAUSS_SIGN_TO_V));
    }
    if long {
        Ok(Diagram::Long(LongDiagram::new(over_arc, signs)?))
    } else {
        Ok(Diagram::Closed(ClosedDiagram::new(over_arc, signs)?))
    }
}

/// Canonical signed Gauss code: crossing labels are under-passage order,
/// and the over-passages carried by an arc are listed by increasing label
/// before the under-passage ending that arc.
pub fn to_signed_gauss(d: &Diagram) -> Result<String> {
    let (over_arc, sign, arcs, long) = match d {
        Diagram::Long(d) => (d.over_arc(), d.sign(), d.arcs(), true),
        Diagram::Closed(d) => (d.over_arc(), d.sign(), d.arcs(), false),
        Diagram::Tangle(_) => {
            return Err(Error::GaussCode("tangles have no single Gauss code".into()))
        }
    };
    let sym = |s: Sign| if s.times(GAUSS_SIGN_TO_V) == Sign::Positive { '+' } else { '-' };
    let mut tokens = Vec::new();
    for arc in 1..=arcs {
        for (c, _) in over_arc.iter().enumerate().filter(|&(_, &a)| a == arc) {
            tokens.push(format!("O{}{}", c + 1, sym(sign[c])));
        }
        if arc <= sign.len() {
            tokens.push(format!("U{}{}", arc, sym(sign[arc - 1])));
        }
    }
    let body = tokens.join(" ");
    Ok(if long {
        if body.is_empty() {
            "long:".to_string()
        } else {
            format!("long: {body}")
        }
    } else {
        body
    })
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize_diagram(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    use Sign::{Negative as N, Positive as P};

    const FIG3_52: &str = r#"{"kind":"long","over_arc":[4,5,2,1,3],"sign":[-1,-1,-1,-1,-1]}"#;

    fn fig3() -> LongDiagram {
        match parse_diagram(FIG3_52).unwrap() {
            Diagram::Long(d) => d,
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn json_examples() {
        let unknot = parse_diagram(r#"{"kind":"long","over_arc":[],"sign":[]}"#).unwrap();
        assert_eq!(unknot, Diagram::Long(LongDiagram::unknot()));
        let d = fig3();
        assert_eq!(d.over_arc(), &[4, 5, 2, 1, 3]);
        assert_eq!(serialize_diagram(&Diagram::Long(d)), FIG3_52);

        let t62 = r#"{"kind":"tangle","strands":[{"crossings":[{"over_strand":2,"over_arc":3,"sign":-1},{"over_strand":2,"over_arc":4,"sign":-1},{"over_strand":2,"over_arc":2,"sign":-1}]},{"crossings":[{"over_strand":1,"over_arc":3,"sign":-1},{"over_strand":1,"over_arc":4,"sign":-1},{"over_strand":1,"over_arc":2,"sign":-1}]}]}"#;
        let t = parse_diagram(t62).unwrap();
        assert_eq!(serialize_diagram(&t), t62);
    }

    #[test]
    fn json_errors() {
        for bad in [
            r#"{"kind":"long","over_arc":[3],"sign":[1]}"#,
            r#"{"kind":"long","over_arc":[0],"sign":[1]}"#,
            r#"{"kind":"long","over_arc":[1],"sign":[2]}"#,
            r#"{"kind":"long","over_arc":[1,1],"sign":[1]}"#,
            r#"{"kind":"closed","over_arc":[],"sign":[]}"#,
            r#"{"kind":"closed","over_arc":[2],"sign":[1]}"#,
            r#"{"kind":"spiral","over_arc":[],"sign":[]}"#,
            r#"{"kind":"tangle","strands":[{"crossings":[]}]}"#,
            r#"{"kind":"tangle","strands":[{"crossings":[{"over_strand":2,"over_arc":2,"sign":1}]},{"crossings":[]}]}"#,
            r#"{"kind":"long""#,
        ] {
            assert!(parse_diagram(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn mirror_examples() {
        let d = fig3();
        let m = d.mirror();
        assert_eq!(m.over_arc(), &[4, 5, 2, 1, 3]);
        assert_eq!(m.sign(), &[P; 5]);
        assert_eq!(m.mirror(), d);
        assert_eq!(LongDiagram::unknot().mirror(), LongDiagram::unknot());
        let t = TangleDiagram::crossingless();
        assert_eq!(t.mirror(), t);
    }

    #[test]
    fn close_and_break() {
        let d = fig3();
        let c = d.close().unwrap();
        assert_eq!(c.crossings(), 5);
        assert_eq!(c.over_arc(), &[4, 5, 2, 1, 3]);
        assert_eq!(break_at(&c, 1).unwrap(), d);
        assert!(close_long(&LongDiagram::unknot()).is_err());
        assert!(break_at(&c, 0).is_err());
        assert!(break_at(&c, 6).is_err());

        for r in 1..=5 {
            let long = break_at(&c, r).unwrap();
            assert_eq!(long.crossings(), 5);
            assert_eq!(long.arcs(), 6);
            let closed = long.close().unwrap();
            // cyclic rotation of the original: crossing k of the new code is
            // crossing r+k-1 of the old, and arcs are relabeled the same way
            for k in 0..5 {
                let i = (r - 1 + k) % 5;
                assert_eq!(closed.sign()[k], c.sign()[i]);
                assert_eq!((closed.over_arc()[k] - 1 + r - 1) % 5 + 1, c.over_arc()[i]);
            }
        }
    }

    #[test]
    fn break_sends_broken_arc_to_one() {
        let c = ClosedDiagram::new(vec![2, 3, 2], vec![P, P, P]).unwrap();
        assert_eq!(break_at(&c, 2).unwrap().over_arc(), &[2, 1, 1]);
    }

    #[test]
    fn concat_examples() {
        let d = fig3();
        let u = LongDiagram::unknot();
        assert_eq!(concat(&d, &u), d);
        assert_eq!(concat(&u, &d), d);
        let dd = concat(&d, &d);
        assert_eq!(dd.crossings(), 10);
        assert_eq!(dd.arcs(), 11);
        assert_eq!(dd.over_arc(), &[4, 5, 2, 1, 3, 9, 10, 7, 6, 8]);
        let k = LongDiagram::new(vec![2], vec![N]).unwrap();
        assert_eq!(concat(&concat(&d, &k), &d), concat(&d, &concat(&k, &d)));
    }

    #[test]
    fn signed_gauss_examples() {
        let kink = from_signed_gauss("long: U1- O1-").unwrap();
        assert_eq!(
            kink,
            Diagram::Long(LongDiagram::new(vec![2], vec![N.times(GAUSS_SIGN_TO_V)]).unwrap())
        );
        assert_eq!(from_signed_gauss("long:").unwrap(), Diagram::Long(LongDiagram::unknot()));

        let trefoil = from_signed_gauss("O1- U2- O3- U1- O2- U3-").unwrap();
        let Diagram::Closed(c) = &trefoil else { panic!() };
        assert_eq!(c.crossings(), 3);
        // U2 is crossing 1, U1 crossing 2, U3 crossing 3
        assert_eq!(c.over_arc(), &[3, 1, 2]);
        let canon = to_signed_gauss(&trefoil).unwrap();
        assert_eq!(from_signed_gauss(&canon).unwrap(), trefoil);
        assert_eq!(to_signed_gauss(&from_signed_gauss(&canon).unwrap()).unwrap(), canon);
    }

    #[test]
    fn signed_gauss_errors() {
        for bad in [
            "",
            "O1+ U1- O2+ U2+",
            "O1+ U1+ O1+",
            "U1+ U1+",
            "O1+ U2+ O2+",
            "O1+",
            "X1+ U1+",
            "O1 U1",
        ] {
            assert!(from_signed_gauss(bad).is_err(), "{bad:?}");
        }
    }

    fn arb_long() -> impl Strategy<Value = LongDiagram> {
        (0usize..8).prop_flat_map(|n| {
            (
                proptest::collection::vec(1..=n + 1, n),
                proptest::collection::vec(any::<bool>(), n),
            )
                .prop_map(|(o, s)| {
                    LongDiagram::new(o, s.into_iter().map(|b| if b { P } else { N }).collect())
                        .unwrap()
                })
        })
    }

    proptest! {
        #[test]
        fn mirror_is_involution(d in arb_long()) {
            prop_assert_eq!(d.mirror().mirror(), d);
        }

        #[test]
        fn gauss_round_trip(d in arb_long()) {
            let wrapped = Diagram::Long(d);
            let code = to_signed_gauss(&wrapped).unwrap();
            prop_assert_eq!(&from_signed_gauss(&code).unwrap(), &wrapped);
            let json = serialize_diagram(&wrapped);
            prop_assert_eq!(parse_diagram(&json).unwrap(), wrapped);
        }

        #[test]
        fn concat_associative(a in arb_long(), b in arb_long(), c in arb_long()) {
            let left = serialize_diagram(&Diagram::Long(concat(&concat(&a, &b), &c)));
            let right = serialize_diagram(&Diagram::Long(concat(&a, &concat(&b, &c))));
            prop_assert_eq!(left, right);
        }

        #[test]
        fn closed_gauss_round_trip(d in arb_long()) {
            if let Ok(c) = d.close() {
                let wrapped = Diagram::Closed(c);
                let code = to_signed_gauss(&wrapped).unwrap();
                prop_assert_eq!(from_signed_gauss(&code).unwrap(), wrapped);
            }
        }
    }
}
