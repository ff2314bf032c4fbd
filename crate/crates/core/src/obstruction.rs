//! One-sided decision procedures built on the formal sums: chirality,
//! tangle embedding obstructions, and two detectors for non-classical
//! virtual knots. None of them can certify the opposite conclusion.

use serde_json::{json, Map, Value};

use crate::coloring::{colorings_tangle_boundary_mono, InvariantQuery};
use crate::diagram::{break_at, concat, ClosedDiagram, Diagram, LongDiagram, TangleDiagram};
use crate::error::{Error, Result};
use crate::longitude::{
    formal_sum, longitude_family, sum_included, tangle_longitude_parts, tangle_sums, FormalSum,
};
use crate::quandle::FiniteQuandle;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerdictKind {
    /// The compared invariants differ.
    Distinct,
    /// Neither tangle sum is included in the knot's sum.
    Obstructed,
    Inconclusive,
}

impl VerdictKind {
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictKind::Distinct => "distinct",
            VerdictKind::Obstructed => "obstructed",
            VerdictKind::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Test {
    Chirality,
    TangleEmbedding,
    Basepoints,
    ConnectedSum,
}

/// Outcome of a test together with the sums that decided it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub kind: VerdictKind,
    pub test: Test,
    pub query: InvariantQuery,
    pub sums: Vec<(String, FormalSum)>,
    /// Connected-sum test only: whether the two longitude families differ.
    pub families_differ: Option<bool>,
}

impl Verdict {
    fn decide(test: Test, sums: &[(String, FormalSum)], families_differ: Option<bool>) -> VerdictKind {
        let distinct = |yes: bool| {
            if yes {
                VerdictKind::Distinct
            } else {
                VerdictKind::Inconclusive
            }
        };
        match test {
            Test::Chirality | Test::Basepoints => {
                distinct(sums.windows(2).any(|w| w[0].1 != w[1].1))
            }
            Test::ConnectedSum => {
                distinct(sums[0].1 != sums[1].1 || families_differ.unwrap_or(false))
            }
            Test::TangleEmbedding => {
                let knot = &sums[2].1;
                if !sum_included(&sums[0].1, knot) && !sum_included(&sums[1].1, knot) {
                    VerdictKind::Obstructed
                } else {
                    VerdictKind::Inconclusive
                }
            }
        }
    }

    fn new(
        test: Test,
        query: InvariantQuery,
        sums: Vec<(String, FormalSum)>,
        families_differ: Option<bool>,
    ) -> Verdict {
        Verdict {
            kind: Verdict::decide(test, &sums, families_differ),
            test,
            query,
            sums,
            families_differ,
        }
    }

    /// Re-derives the verdict from the stored sums alone.
    pub fn recheck(&self) -> bool {
        Verdict::decide(self.test, &self.sums, self.families_differ) == self.kind
    }

    pub fn sum(&self, name: &str) -> Option<&FormalSum> {
        self.sums.iter().find(|(n, _)| n == name).map(|(_, s)| s)
    }

    /// `{verdict, sums, query}`.
    pub fn to_json(&self, q: &FiniteQuandle) -> Value {
        let sums: Map<String, Value> = self
            .sums
            .iter()
            .map(|(name, s)| (name.clone(), s.to_json(q)))
            .collect();
        let mut out = json!({
            "verdict": self.kind.as_str(),
            "sums": sums,
            "query": {
                "basepoint": q.label(self.query.basepoint),
                "act_on": q.label(self.query.probe),
            },
        });
        if let Some(differ) = self.families_differ {
            out["families_differ"] = Value::from(differ);
        }
        out
    }

    pub fn render(&self, q: &FiniteQuandle) -> String {
        let mut lines = vec![format!("verdict: {}", self.kind.as_str())];
        for (name, s) in &self.sums {
            lines.push(format!("{name}: {}", s.render(q)));
        }
        if let Some(differ) = self.families_differ {
            lines.push(format!("families differ: {differ}"));
        }
        lines.join("\n")
    }
}

/// The long diagram used for a knot: long diagrams as given, closed ones
/// broken at arc 1.
pub fn long_form(d: &Diagram) -> Result<LongDiagram> {
    match d {
        Diagram::Long(d) => Ok(d.clone()),
        Diagram::Closed(c) => break_at(c, 1),
        Diagram::Tangle(_) => Err(Error::InvalidDiagram("expected a knot, got a tangle".into())),
    }
}

/// Compares `S_F^x` of `d` and of its mirror image. `Distinct` means `d`
/// is chiral.
pub fn chirality_test(d: &LongDiagram, q: &FiniteQuandle, query: &InvariantQuery) -> Verdict {
    let sums = vec![
        ("knot".to_string(), formal_sum(d, q, query)),
        ("mirror".to_string(), formal_sum(&d.mirror(), q, query)),
    ];
    Verdict::new(Test::Chirality, *query, sums, None)
}

/// `Obstructed` when neither `S_1^x(T)` nor `S_2^x(T)` is included in
/// `S_F^x(K)`, which shows that `T` does not embed in `K`.
pub fn tangle_embedding_obstruction(
    t: &TangleDiagram,
    k: &LongDiagram,
    q: &FiniteQuandle,
    query: &InvariantQuery,
) -> Verdict {
    let (s1, s2) = tangle_sums(t, q, query);
    let sums = vec![
        ("S1".to_string(), s1),
        ("S2".to_string(), s2),
        ("knot".to_string(), formal_sum(k, q, query)),
    ];
    Verdict::new(Test::TangleEmbedding, *query, sums, None)
}

/// Family-level form of the embedding criterion: for every
/// boundary-monochromatic coloring, `ϕ¹·ϕ²` or `ϕ²·ϕ¹` must occur among
/// the colored longitudes of `k`. Returns `false` when some coloring has
/// neither, which obstructs the embedding.
///
/// Experimental: it assumes the tangle colorings extend to colorings of
/// `k` by the trivial extension, which is only guaranteed when `T` really
/// sits inside the given diagram of `k`.
pub fn tangle_family_check(
    t: &TangleDiagram,
    k: &LongDiagram,
    q: &FiniteQuandle,
    basepoint: usize,
) -> bool {
    let family = longitude_family(k, q, basepoint);
    colorings_tangle_boundary_mono(t, q, basepoint).iter().all(|z| {
        let (w1, w2) = tangle_longitude_parts(t, q, z).expect("enumerated colorings are valid");
        [w1.concat(&w2), w2.concat(&w1)].iter().any(|w| {
            family.contains(&w.to_automorphism(q).expect("colors are in range"))
        })
    })
}

/// `S_F^x` of the long diagram obtained by breaking at each arc in turn.
pub fn basepoint_spectrum(c: &ClosedDiagram, q: &FiniteQuandle, query: &InvariantQuery) -> Vec<FormalSum> {
    (1..=c.arcs())
        .map(|r| formal_sum(&break_at(c, r).expect("arc in range"), q, query))
        .collect()
}

/// `Distinct` when two breakings of `c` give different sums, which shows
/// that `c` is a non-classical virtual knot.
pub fn nonclassical_by_basepoints(c: &ClosedDiagram, q: &FiniteQuandle, query: &InvariantQuery) -> Verdict {
    let sums = basepoint_spectrum(c, q, query)
        .into_iter()
        .enumerate()
        .map(|(r, s)| (format!("arc {}", r + 1), s))
        .collect();
    Verdict::new(Test::Basepoints, *query, sums, None)
}

/// Compares `K1 # K2` with `K2 # K1` by formal sums and by longitude
/// families. `Distinct` shows that `K1` and `K2` are different and both
/// non-classical.
pub fn connected_sum_commutativity(
    k1: &LongDiagram,
    k2: &LongDiagram,
    q: &FiniteQuandle,
    query: &InvariantQuery,
) -> Verdict {
    let ab = concat(k1, k2);
    let ba = concat(k2, k1);
    let sums = vec![
        ("K1#K2".to_string(), formal_sum(&ab, q, query)),
        ("K2#K1".to_string(), formal_sum(&ba, q, query)),
    ];
    let differ = longitude_family(&ab, q, query.basepoint) != longitude_family(&ba, q, query.basepoint);
    Verdict::new(Test::ConnectedSum, *query, sums, Some(differ))
}
