//! Permutations of `{1..m}`, cycle notation, and breadth-first group and
//! conjugacy-class enumeration for the small groups used as coloring quandles.
//!
//! Composition convention: `a.compose(&b)` applies `a` first, so
//! `i ↦ b(a(i))`. Conjugation `a.conjugate(&b)` is the product `b⁻¹ a b`
//! under this convention, i.e. `i ↦ b(a(b⁻¹(i)))`.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// A bijection of `{1..degree}`, stored 0-based.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from 1-based images, e.g. `[2, 1, 4, 5, 3]`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        let mut zero_based = Vec::with_capacity(degree);
        for &p in images {
            if p == 0 || p > degree {
                return Err(Error::PointOutOfRange { point: p, degree });
            }
            if seen[p - 1] {
                return Err(Error::RepeatedPoint(p));
            }
            seen[p - 1] = true;
            zero_based.push(p - 1);
        }
        Ok(Permutation { images: zero_based })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 1-based image sequence.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&p| p + 1).collect()
    }

    /// Image of the 1-based point `point`.
    pub fn apply(&self, point: usize) -> usize {
        self.images[point - 1] + 1
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        parse_cycles(text, degree)
    }

    /// `self` first, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        self.check_degree(other)?;
        Ok(self.then(other))
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &p) in self.images.iter().enumerate() {
            images[p] = i;
        }
        Permutation { images }
    }

    /// `b⁻¹ a b` where `a = self`.
    pub fn conjugate(&self, b: &Permutation) -> Result<Permutation> {
        self.check_degree(b)?;
        Ok(self.conjugate_unchecked(b))
    }

    pub(crate) fn conjugate_unchecked(&self, b: &Permutation) -> Permutation {
        let mut images = vec![0; self.degree()];
        // b⁻¹ a b sends b(i) to b(a(i))
        for (i, &ai) in self.images.iter().enumerate() {
            images[b.images[i]] = b.images[ai];
        }
        Permutation { images }
    }

    fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&p| other.images[p]).collect(),
        }
    }

    fn check_degree(&self, other: &Permutation) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(())
    }

    /// Disjoint cycles (1-based), each starting at its least point and
    /// ordered by least point; fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut cycles = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.images[p];
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Sorted cycle lengths including fixed points.
    pub fn cycle_type(&self) -> Vec<usize> {
        let moved: usize = self.cycles().iter().map(Vec::len).sum();
        let mut lengths: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lengths.extend(std::iter::repeat_n(1, self.degree() - moved));
        lengths.sort_unstable();
        lengths
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

/// Parses a product of disjoint cycles such as `(1,2)(3,4,5)`; `()` is the
/// identity. Whitespace is ignored.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
    let syntax = |reason: &str| Error::CycleSyntax {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(syntax("empty input"));
    }

    let mut images: Vec<usize> = (0..degree).collect();
    let mut used = vec![false; degree];
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| syntax("expected '('"))?;
        let close = body.find(')').ok_or_else(|| syntax("unclosed cycle"))?;
        let inner = &body[..close];
        rest = &body[close + 1..];
        if inner.is_empty() {
            continue;
        }
        let mut cycle = Vec::new();
        for token in inner.split(',') {
            let point: usize = token
                .parse()
                .map_err(|_| syntax(&format!("bad point {token:?}")))?;
            if point == 0 || point > degree {
                return Err(Error::PointOutOfRange { point, degree });
            }
            if used[point - 1] {
                return Err(Error::RepeatedPoint(point));
            }
            used[point - 1] = true;
            cycle.push(point - 1);
        }
        for (k, &p) in cycle.iter().enumerate() {
            images[p] = cycle[(k + 1) % cycle.len()];
        }
    }
    Ok(Permutation { images })
}

pub fn print_cycles(p: &Permutation) -> String {
    p.to_string()
}

/// A duplicate-free set of permutations of one degree, kept in
/// lexicographic order of image sequences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementSet {
    degree: usize,
    members: Vec<Permutation>,
}

impl ElementSet {
    pub fn new(degree: usize, members: impl IntoIterator<Item = Permutation>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for p in members {
            if p.degree() != degree {
                return Err(Error::DegreeMismatch(degree, p.degree()));
            }
            set.insert(p);
        }
        Ok(ElementSet {
            degree,
            members: set.into_iter().collect(),
        })
    }

    /// Parses `;`-separated cycle strings and infers the degree from the
    /// largest point mentioned.
    pub fn parse_generators(text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(';').map(str::trim).filter(|s| !s.is_empty()).collect();
        if parts.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let degree = parts
            .iter()
            .flat_map(|s| s.split(|c: char| !c.is_ascii_digit()))
            .filter_map(|t| t.parse::<usize>().ok())
            .max()
            .unwrap_or(1)
            .max(1);
        let gens = parts
            .iter()
            .map(|s| parse_cycles(s, degree))
            .collect::<Result<Vec<_>>>()?;
        ElementSet::new(degree, gens)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Permutation] {
        &self.members
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.members.binary_search(p).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Permutation> {
        self.members.iter()
    }
}

impl<'a> IntoIterator for &'a ElementSet {
    type Item = &'a Permutation;
    type IntoIter = std::slice::Iter<'a, Permutation>;
    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// Generators `(1,2)` and `(1,2,…,n)` of the symmetric group.
pub fn symmetric_generators(n: usize) -> ElementSet {
    let mut gens = vec![Permutation::identity(n)];
    if n >= 2 {
        let mut swap = Permutation::identity(n);
        swap.images.swap(0, 1);
        let cycle = Permutation {
            images: (0..n).map(|i| (i + 1) % n).collect(),
        };
        gens = vec![swap, cycle];
    }
    ElementSet::new(n, gens).expect("uniform degree")
}

/// Generators `(1,2,k)`, `k = 3..n`, of the alternating group.
pub fn alternating_generators(n: usize) -> ElementSet {
    let mut gens = vec![Permutation::identity(n)];
    for k in 2..n {
        let mut images: Vec<usize> = (0..n).collect();
        images[0] = 1;
        images[1] = k;
        images[k] = 0;
        gens.push(Permutation { images });
    }
    ElementSet::new(n, gens).expect("uniform degree")
}

/// The group generated by `gens`: breadth-first closure under right
/// multiplication by generators and their inverses, starting from the identity.
pub fn close_under_generators(gens: &ElementSet) -> Result<ElementSet> {
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let steps: Vec<Permutation> = gens
        .iter()
        .flat_map(|g| [g.clone(), g.inverse()])
        .collect();
    let identity = Permutation::identity(gens.degree());
    let mut seen: HashSet<Permutation> = HashSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(p) = queue.pop_front() {
        for s in &steps {
            let next = p.then(s);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    ElementSet::new(gens.degree(), seen)
}

/// Orbit of `g` under conjugation by the group generated by `gens`.
pub fn conjugacy_class(g: &Permutation, gens: &ElementSet) -> Result<ElementSet> {
    if g.degree() != gens.degree() {
        return Err(Error::DegreeMismatch(g.degree(), gens.degree()));
    }
    let steps: Vec<Permutation> = gens
        .iter()
        .flat_map(|h| [h.clone(), h.inverse()])
        .collect();
    let mut seen: HashSet<Permutation> = HashSet::from([g.clone()]);
    let mut queue = VecDeque::from([g.clone()]);
    while let Some(p) = queue.pop_front() {
        for s in &steps {
            let next = p.conjugate_unchecked(s);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    ElementSet::new(g.degree(), seen)
}
