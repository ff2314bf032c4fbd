//! Enumeration of quandle colorings with a fixed basepoint color.
//!
//! Every diagram kind is lowered to a list of crossing relations
//! `out = in *^ε over` over a flat arc numbering, plus pinned arcs. The
//! search walks the relations in traversal order. When a relation's input
//! or over-arc has no color yet, it branches over all colors for that arc;
//! otherwise the output arc is forced, or checked if already colored.

use rayon::prelude::*;
use serde::Serialize;

use crate::diagram::{ClosedDiagram, LongDiagram, TangleDiagram};
use crate::error::{Error, Result};
use crate::quandle::FiniteQuandle;

/// Arc colors, one sequence per strand (a single strand for knots).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Coloring {
    strands: Vec<Vec<usize>>,
}

impl Coloring {
    pub fn new(strands: Vec<Vec<usize>>) -> Self {
        Coloring { strands }
    }

    pub fn strands(&self) -> &[Vec<usize>] {
        &self.strands
    }

    /// Colors of the first strand.
    pub fn arcs(&self) -> &[usize] {
        &self.strands[0]
    }

    /// Color of 1-based arc `arc` on the first strand.
    pub fn color(&self, arc: usize) -> usize {
        self.strands[0][arc - 1]
    }

    pub fn is_monochromatic(&self) -> bool {
        let first = self.strands[0].first().copied();
        self.strands.iter().flatten().all(|&c| Some(c) == first)
    }

    pub fn labels(&self, q: &FiniteQuandle) -> Vec<Vec<String>> {
        self.strands
            .iter()
            .map(|s| s.iter().map(|&c| q.label(c).to_string()).collect())
            .collect()
    }
}

/// Basepoint color `q` and probe element `x`, both as element indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct InvariantQuery {
    pub basepoint: usize,
    pub probe: usize,
}

impl InvariantQuery {
    pub fn new(q: &FiniteQuandle, basepoint: usize, probe: usize) -> Result<Self> {
        Ok(InvariantQuery {
            basepoint: q.check_index(basepoint)?,
            probe: q.check_index(probe)?,
        })
    }

    /// Resolves element strings (cycle notation for conjugation quandles).
    pub fn parse(q: &FiniteQuandle, basepoint: &str, probe: &str) -> Result<Self> {
        Ok(InvariantQuery {
            basepoint: q.element(basepoint)?,
            probe: q.element(probe)?,
        })
    }
}

#[derive(Clone, Copy, Debug)]
struct Relation {
    input: usize,
    over: usize,
    output: usize,
    barred: bool,
}

const UNSET: u32 = u32::MAX;

#[derive(Clone, Debug)]
struct Problem {
    strand_lengths: Vec<usize>,
    relations: Vec<Relation>,
    pinned: Vec<(usize, usize)>,
}

impl Problem {
    fn arcs(&self) -> usize {
        self.strand_lengths.iter().sum()
    }

    fn long(d: &LongDiagram) -> Problem {
        let relations = (0..d.crossings())
            .map(|i| Relation {
                input: i,
                over: d.over_arc()[i] - 1,
                output: i + 1,
                barred: d.sign()[i].is_barred(),
            })
            .collect();
        Problem {
            strand_lengths: vec![d.arcs()],
            relations,
            pinned: Vec::new(),
        }
    }

    fn closed(c: &ClosedDiagram) -> Problem {
        let n = c.crossings();
        let relations = (0..n)
            .map(|i| Relation {
                input: i,
                over: c.over_arc()[i] - 1,
                output: (i + 1) % n,
                barred: c.sign()[i].is_barred(),
            })
            .collect();
        Problem {
            strand_lengths: vec![n],
            relations,
            pinned: Vec::new(),
        }
    }

    fn tangle(t: &TangleDiagram) -> Problem {
        let lengths: Vec<usize> = t.strands().iter().map(|s| s.arcs()).collect();
        let offsets: Vec<usize> = lengths
            .iter()
            .scan(0, |acc, &l| {
                let o = *acc;
                *acc += l;
                Some(o)
            })
            .collect();
        let mut relations = Vec::new();
        for (s, strand) in t.strands().iter().enumerate() {
            for (j, c) in strand.crossings.iter().enumerate() {
                relations.push(Relation {
                    input: offsets[s] + j,
                    over: offsets[c.over_strand - 1] + c.over_arc - 1,
                    output: offsets[s] + j + 1,
                    barred: c.sign.is_barred(),
                });
            }
        }
        Problem {
            strand_lengths: lengths,
            relations,
            pinned: Vec::new(),
        }
    }

    fn pin(mut self, arc: usize, color: usize) -> Problem {
        self.pinned.push((arc, color));
        self
    }

    fn solve(&self, q: &FiniteQuandle) -> Vec<Coloring> {
        let mut assignment = vec![UNSET; self.arcs()];
        for &(arc, color) in &self.pinned {
            if assignment[arc] != UNSET && assignment[arc] != color as u32 {
                return Vec::new();
            }
            assignment[arc] = color as u32;
        }
        let mut found = Vec::new();
        self.search(q, &mut assignment, &mut found, true);
        let mut colorings: Vec<Coloring> = found.into_iter().map(|a| self.split(&a)).collect();
        colorings.sort();
        colorings
    }

    /// Applies every relation in both directions until nothing changes.
    /// Newly set arcs are appended to `forced`; returns `false` on a
    /// contradiction.
    fn propagate(&self, q: &FiniteQuandle, assignment: &mut [u32], forced: &mut Vec<usize>) -> bool {
        let mut changed = true;
        while changed {
            changed = false;
            for r in &self.relations {
                if assignment[r.over] == UNSET {
                    continue;
                }
                let over = assignment[r.over] as usize;
                let (from, to, barred) = match (assignment[r.input], assignment[r.output]) {
                    (UNSET, UNSET) => continue,
                    (i, UNSET) => (i, r.output, r.barred),
                    (UNSET, o) => (o, r.input, !r.barred),
                    (i, o) => {
                        if q.act(i as usize, over, r.barred) as u32 != o {
                            return false;
                        }
                        continue;
                    }
                };
                assignment[to] = q.act(from as usize, over, barred) as u32;
                forced.push(to);
                changed = true;
            }
        }
        true
    }

    /// Next arc to branch on: an unset over-arc next to a colored strand
    /// arc if there is one, else any unset arc touched by a relation.
    fn branch_arc(&self, assignment: &[u32]) -> Option<usize> {
        let unset = |a: usize| assignment[a] == UNSET;
        self.relations
            .iter()
            .find(|r| unset(r.over) && (!unset(r.input) || !unset(r.output)))
            .map(|r| r.over)
            .or_else(|| {
                self.relations
                    .iter()
                    .flat_map(|r| [r.over, r.input, r.output])
                    .find(|&a| unset(a))
            })
    }

    fn search(&self, q: &FiniteQuandle, assignment: &mut Vec<u32>, found: &mut Vec<Vec<u32>>, parallel: bool) {
        let mut forced = Vec::new();
        if self.propagate(q, assignment, &mut forced) {
            match self.branch_arc(assignment) {
                Some(arc) => self.branch(q, arc, assignment, found, parallel),
                None if assignment.iter().all(|&c| c != UNSET) => found.push(assignment.clone()),
                // arcs touched by no relation (isolated strands) are free
                None => self.fill_free(q, assignment, found),
            }
        }
        for a in forced {
            assignment[a] = UNSET;
        }
    }

    fn branch(
        &self,
        q: &FiniteQuandle,
        arc: usize,
        assignment: &mut Vec<u32>,
        found: &mut Vec<Vec<u32>>,
        parallel: bool,
    ) {
        if parallel && q.len() > 1 {
            let results: Vec<Vec<Vec<u32>>> = (0..q.len())
                .into_par_iter()
                .map(|c| {
                    let mut local = assignment.clone();
                    local[arc] = c as u32;
                    let mut out = Vec::new();
                    self.search(q, &mut local, &mut out, false);
                    out
                })
                .collect();
            found.extend(results.into_iter().flatten());
        } else {
            for c in 0..q.len() {
                assignment[arc] = c as u32;
                self.search(q, assignment, found, false);
            }
            assignment[arc] = UNSET;
        }
    }

    fn fill_free(&self, q: &FiniteQuandle, assignment: &mut Vec<u32>, found: &mut Vec<Vec<u32>>) {
        match assignment.iter().position(|&c| c == UNSET) {
            None => found.push(assignment.clone()),
            Some(arc) => {
                for c in 0..q.len() {
                    assignment[arc] = c as u32;
                    self.fill_free(q, assignment, found);
                }
                assignment[arc] = UNSET;
            }
        }
    }

    fn split(&self, flat: &[u32]) -> Coloring {
        let mut strands = Vec::with_capacity(self.strand_lengths.len());
        let mut start = 0;
        for &len in &self.strand_lengths {
            strands.push(flat[start..start + len].iter().map(|&c| c as usize).collect());
            start += len;
        }
        Coloring { strands }
    }
}

/// `Col(D, Q, q)`: colorings of a long diagram whose first arc is `q`.
/// The last arc is not constrained.
pub fn colorings_long(d: &LongDiagram, q: &FiniteQuandle, basepoint: usize) -> Vec<Coloring> {
    Problem::long(d).pin(0, basepoint).solve(q)
}

/// Colorings of a closed diagram with arc 1 colored `basepoint`.
pub fn colorings_closed(c: &ClosedDiagram, q: &FiniteQuandle, basepoint: usize) -> Vec<Coloring> {
    colorings_closed_at(c, q, 1, basepoint)
}

/// Colorings of a closed diagram with the 1-based arc `arc` colored `color`.
pub fn colorings_closed_at(
    c: &ClosedDiagram,
    q: &FiniteQuandle,
    arc: usize,
    color: usize,
) -> Vec<Coloring> {
    Problem::closed(c).pin(arc - 1, color).solve(q)
}

/// `Col_Q^q(D_T)`: tangle colorings in which the first and last arcs of
/// both strands are colored `basepoint`.
pub fn colorings_tangle_boundary_mono(
    t: &TangleDiagram,
    q: &FiniteQuandle,
    basepoint: usize,
) -> Vec<Coloring> {
    let problem = Problem::tangle(t);
    let mut pins = Vec::new();
    let mut offset = 0;
    for &len in &problem.strand_lengths {
        pins.push(offset);
        pins.push(offset + len - 1);
        offset += len;
    }
    pins.into_iter()
        .fold(problem, |p, arc| p.pin(arc, basepoint))
        .solve(q)
}

fn relation_holds(q: &FiniteQuandle, input: usize, over: usize, output: usize, barred: bool) -> bool {
    let expected = if barred { q.barstar(input, over) } else { q.star(input, over) };
    expected == output
}

/// Re-checks every crossing relation of a long diagram.
pub fn is_coloring_long(d: &LongDiagram, q: &FiniteQuandle, colors: &[usize]) -> bool {
    colors.len() == d.arcs()
        && colors.iter().all(|&c| c < q.len())
        && d.over_arc().iter().zip(d.sign()).enumerate().all(|(i, (&o, s))| {
            relation_holds(q, colors[i], colors[o - 1], colors[i + 1], s.is_barred())
        })
}

/// Re-checks every crossing relation of a closed diagram, including the
/// wrap-around at the last crossing.
pub fn is_coloring_closed(c: &ClosedDiagram, q: &FiniteQuandle, colors: &[usize]) -> bool {
    let n = c.crossings();
    colors.len() == n
        && colors.iter().all(|&x| x < q.len())
        && c.over_arc().iter().zip(c.sign()).enumerate().all(|(i, (&o, s))| {
            relation_holds(q, colors[i], colors[o - 1], colors[(i + 1) % n], s.is_barred())
        })
}

pub fn is_coloring_tangle(t: &TangleDiagram, q: &FiniteQuandle, coloring: &Coloring) -> bool {
    let strands = coloring.strands();
    strands.len() == t.strands().len()
        && t.strands().iter().zip(strands).all(|(s, colors)| {
            colors.len() == s.arcs()
                && colors.iter().all(|&x| x < q.len())
                && s.crossings.iter().enumerate().all(|(j, c)| {
                    let over = strands[c.over_strand - 1][c.over_arc - 1];
                    relation_holds(q, colors[j], over, colors[j + 1], c.sign.is_barred())
                })
        })
}

pub(crate) fn check_long_coloring(d: &LongDiagram, q: &FiniteQuandle, z: &Coloring) -> Result<()> {
    if z.strands().len() != 1 || !is_coloring_long(d, q, z.arcs()) {
        return Err(Error::ColoringMismatch(
            "not a coloring of this long diagram".into(),
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{parse_diagram, Diagram, Sign, TangleCrossing, TangleStrand};

    /// Every assignment of colors to `arcs` arcs, filtered by `accept`.
    fn brute_force(size: usize, arcs: usize, accept: impl Fn(&[usize]) -> bool) -> Vec<Vec<usize>> {
        let total = size.pow(arcs as u32);
        let mut out = Vec::new();
        for mut code in 0..total {
            let mut colors = vec![0; arcs];
            for slot in colors.iter_mut().rev() {
                *slot = code % size;
                code /= size;
            }
            if accept(&colors) {
                out.push(colors);
            }
        }
        out
    }

    fn long_trefoil() -> LongDiagram {
        LongDiagram::new(vec![3, 1, 2], vec![Sign::Positive; 3]).unwrap()
    }

    #[test]
    fn unknot_has_one_coloring() {
        let q = FiniteQuandle::dihedral(5).unwrap();
        let cs = colorings_long(&LongDiagram::unknot(), &q, 3);
        assert_eq!(cs, vec![Coloring::new(vec![vec![3]])]);
    }

    #[test]
    fn long_trefoil_matches_brute_force() {
        let d3 = FiniteQuandle::dihedral(3).unwrap();
        let d = long_trefoil();
        for base in 0..3 {
            let fast: Vec<Vec<usize>> = colorings_long(&d, &d3, base)
                .into_iter()
                .map(|c| c.arcs().to_vec())
                .collect();
            let slow = brute_force(3, 4, |c| c[0] == base && is_coloring_long(&d, &d3, c));
            assert_eq!(fast, slow);
            assert_eq!(fast.len(), 3);
        }
    }

    #[test]
    fn closed_trefoil() {
        let d3 = FiniteQuandle::dihedral(3).unwrap();
        let c = long_trefoil().close().unwrap();
        let cs = colorings_closed(&c, &d3, 0);
        assert_eq!(cs.len(), 3);
        assert!(cs.iter().any(Coloring::is_monochromatic));
        let slow = brute_force(3, 3, |x| x[0] == 0 && is_coloring_closed(&c, &d3, x));
        let fast: Vec<Vec<usize>> = cs.iter().map(|c| c.arcs().to_vec()).collect();
        assert_eq!(fast, slow);
    }

    #[test]
    fn crossingless_tangle() {
        let q = FiniteQuandle::from_spec("conjclass:S4:(1,2)").unwrap();
        let cs = colorings_tangle_boundary_mono(&TangleDiagram::crossingless(), &q, 2);
        assert_eq!(cs, vec![Coloring::new(vec![vec![2], vec![2]])]);
    }

    #[test]
    fn tangle_matches_brute_force() {
        // a clasp: each strand passes under the other twice
        let c = |s, a, sign| TangleCrossing {
            over_strand: s,
            over_arc: a,
            sign,
        };
        let t = TangleDiagram::new(vec![
            TangleStrand {
                crossings: vec![c(2, 2, Sign::Positive), c(2, 3, Sign::Negative)],
            },
            TangleStrand {
                crossings: vec![c(1, 1, Sign::Negative), c(1, 2, Sign::Positive)],
            },
        ])
        .unwrap();
        for q in [FiniteQuandle::dihedral(3).unwrap(), FiniteQuandle::dihedral(5).unwrap()] {
            for base in 0..q.len() {
                let fast: Vec<Coloring> = colorings_tangle_boundary_mono(&t, &q, base);
                let slow: Vec<Coloring> = brute_force(q.len(), 6, |x| {
                    let z = Coloring::new(vec![x[..3].to_vec(), x[3..].to_vec()]);
                    [x[0], x[2], x[3], x[5]].iter().all(|&b| b == base)
                        && is_coloring_tangle(&t, &q, &z)
                })
                .into_iter()
                .map(|x| Coloring::new(vec![x[..3].to_vec(), x[3..].to_vec()]))
                .collect();
                assert_eq!(fast, slow);
                assert!(fast.iter().any(Coloring::is_monochromatic));
            }
        }
    }

    #[test]
    fn closed_counts_agree_with_broken_counts() {
        let q = FiniteQuandle::dihedral(5).unwrap();
        let d = match parse_diagram(r#"{"kind":"long","over_arc":[4,5,2,1,3],"sign":[-1,-1,-1,-1,-1]}"#)
            .unwrap()
        {
            Diagram::Long(d) => d,
            _ => unreachable!(),
        };
        let c = d.close().unwrap();
        for r in 1..=5 {
            for base in 0..q.len() {
                let closed = colorings_closed_at(&c, &q, r, base).len();
                let broken = colorings_long(&c.break_at(r).unwrap(), &q, base).len();
                assert_eq!(closed, broken);
            }
        }
    }

    #[test]
    fn coloring_mismatch_detected() {
        let q = FiniteQuandle::dihedral(3).unwrap();
        let d = long_trefoil();
        assert!(check_long_coloring(&d, &q, &Coloring::new(vec![vec![0, 1, 2, 1]])).is_err());
        assert!(check_long_coloring(&d, &q, &Coloring::new(vec![vec![0, 0]])).is_err());
        assert!(check_long_coloring(&d, &q, &Coloring::new(vec![vec![0; 4]])).is_ok());
    }
}
