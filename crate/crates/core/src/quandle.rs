//! Finite quandles as operation tables.
//!
//! Elements are identified by index; labels are for display and for
//! resolving user-supplied element strings. Both `*` and its inverse
//! operation `*̄` are stored.

use std::collections::HashMap;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{
    alternating_generators, close_under_generators, conjugacy_class, parse_cycles,
    symmetric_generators, ElementSet, Permutation,
};

/// Conjugation quandles above this size are refused (two tables of
/// `size²` entries each).
pub const MAX_QUANDLE_SIZE: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteQuandle {
    labels: Vec<String>,
    degree: Option<usize>,
    size: usize,
    star: Vec<u32>,
    barstar: Vec<u32>,
    index: HashMap<String, usize>,
}

/// On-disk form: `{degree, labels, star, barstar}`.
#[derive(Serialize, Deserialize)]
struct QuandleFile {
    degree: Option<usize>,
    labels: Vec<String>,
    star: Vec<Vec<usize>>,
    barstar: Vec<Vec<usize>>,
}

impl FiniteQuandle {
    /// Builds a quandle from raw tables. Table shapes and label uniqueness
    /// are checked; the axioms are not (see [`verify_axioms`]).
    pub fn from_tables(
        labels: Vec<String>,
        degree: Option<usize>,
        star: Vec<Vec<usize>>,
        barstar: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let size = labels.len();
        if size == 0 {
            return Err(Error::InvalidQuandle("no elements".into()));
        }
        let flatten = |name: &str, table: Vec<Vec<usize>>| -> Result<Vec<u32>> {
            if table.len() != size || table.iter().any(|row| row.len() != size) {
                return Err(Error::InvalidQuandle(format!("{name} table is not {size}x{size}")));
            }
            let flat: Vec<u32> = table.into_iter().flatten().map(|v| v as u32).collect();
            if let Some(&bad) = flat.iter().find(|&&v| v as usize >= size) {
                return Err(Error::InvalidQuandle(format!("{name} entry {bad} out of range")));
            }
            Ok(flat)
        };
        let star = flatten("star", star)?;
        let barstar = flatten("barstar", barstar)?;
        let mut index = HashMap::with_capacity(size);
        for (i, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::InvalidQuandle(format!("duplicate label {label:?}")));
            }
        }
        Ok(FiniteQuandle {
            labels,
            degree,
            size,
            star,
            barstar,
            index,
        })
    }

    /// Conjugation quandle on a conjugation-closed set of permutations:
    /// `a * b = b⁻¹ab`, `a *̄ b = bab⁻¹`.
    pub fn from_conjugation(elements: &ElementSet) -> Result<Self> {
        let size = elements.len();
        if size > MAX_QUANDLE_SIZE {
            return Err(Error::QuandleTooLarge {
                size,
                limit: MAX_QUANDLE_SIZE,
            });
        }
        let members = elements.members();
        let position: HashMap<&Permutation, usize> =
            members.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let inverses: Vec<Permutation> = members.iter().map(Permutation::inverse).collect();
        let lookup = |a: &Permutation, b: &Permutation, c: Permutation| -> Result<usize> {
            position
                .get(&c)
                .copied()
                .ok_or_else(|| Error::NotConjugationClosed {
                    a: a.to_string(),
                    b: b.to_string(),
                })
        };
        let mut star = vec![vec![0; size]; size];
        let mut barstar = vec![vec![0; size]; size];
        for (i, a) in members.iter().enumerate() {
            for (j, b) in members.iter().enumerate() {
                star[i][j] = lookup(a, b, a.conjugate_unchecked(b))?;
                barstar[i][j] = lookup(a, b, a.conjugate_unchecked(&inverses[j]))?;
            }
        }
        let labels = members.iter().map(Permutation::to_string).collect();
        FiniteQuandle::from_tables(labels, Some(elements.degree()), star, barstar)
    }

    /// `i * j = 2j − i mod n`; involutory, so both tables coincide.
    pub fn dihedral(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidQuandle("dihedral quandle needs n >= 1".into()));
        }
        let star: Vec<Vec<usize>> = (0..n)
            .map(|i| (0..n).map(|j| (2 * j + n - i) % n).collect())
            .collect();
        let labels = (0..n).map(|i| i.to_string()).collect();
        FiniteQuandle::from_tables(labels, None, star.clone(), star)
    }

    /// `x * y = x`.
    pub fn trivial(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidQuandle("trivial quandle needs n >= 1".into()));
        }
        let star: Vec<Vec<usize>> = (0..n).map(|i| vec![i; n]).collect();
        let labels = (0..n).map(|i| i.to_string()).collect();
        FiniteQuandle::from_tables(labels, None, star.clone(), star)
    }

    /// Parses a quandle spec string:
    ///
    /// * `conjclass:<group>:<element>`: conjugacy class of `<element>`
    /// * `conjgroup:<group>`: the whole group under conjugation
    /// * `dihedral:<n>`, `trivial:<n>`
    /// * `file:<path>`: a serialized quandle
    ///
    /// `<group>` is one of `S3..S8`, `A3..A8`, or `gens:<perm>;<perm>;...`.
    pub fn from_spec(spec: &str) -> Result<Self> {
        let bad = || Error::QuandleSpec(spec.to_string());
        let (kind, rest) = spec.split_once(':').ok_or_else(bad)?;
        match kind {
            "dihedral" => FiniteQuandle::dihedral(rest.trim().parse().map_err(|_| bad())?),
            "trivial" => FiniteQuandle::trivial(rest.trim().parse().map_err(|_| bad())?),
            "conjgroup" => {
                let group = close_under_generators(&group_generators(rest)?)?;
                FiniteQuandle::from_conjugation(&group)
            }
            "conjclass" => {
                let (group, element) = rest.rsplit_once(':').ok_or_else(bad)?;
                let gens = group_generators(group)?;
                let g = parse_cycles(element, gens.degree())?;
                FiniteQuandle::from_conjugation(&conjugacy_class(&g, &gens)?)
            }
            "file" => {
                let text = std::fs::read_to_string(rest)
                    .map_err(|e| Error::QuandleSpec(format!("{rest}: {e}")))?;
                FiniteQuandle::from_json(&text)
            }
            _ => Err(bad()),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: QuandleFile = serde_json::from_str(text)?;
        FiniteQuandle::from_tables(file.labels, file.degree, file.star, file.barstar)
    }

    pub fn to_json(&self) -> String {
        let table = |t: &[u32]| -> Vec<Vec<usize>> {
            t.chunks(self.size)
                .map(|row| row.iter().map(|&v| v as usize).collect())
                .collect()
        };
        let file = QuandleFile {
            degree: self.degree,
            labels: self.labels.clone(),
            star: table(&self.star),
            barstar: table(&self.barstar),
        };
        serde_json::to_string(&file).expect("plain data serializes")
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    /// Permutation degree for conjugation quandles.
    pub fn degree(&self) -> Option<usize> {
        self.degree
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// Resolves an element string. For conjugation quandles any valid cycle
    /// notation is accepted and canonicalized first.
    pub fn element(&self, text: &str) -> Result<usize> {
        let key = match self.degree {
            Some(degree) => parse_cycles(text, degree)?.to_string(),
            None => text.trim().to_string(),
        };
        self.index
            .get(&key)
            .copied()
            .ok_or_else(|| Error::UnknownElement(text.to_string()))
    }

    pub fn check_index(&self, index: usize) -> Result<usize> {
        if index < self.size {
            Ok(index)
        } else {
            Err(Error::ElementOutOfRange {
                index,
                size: self.size,
            })
        }
    }

    #[inline]
    pub fn star(&self, i: usize, j: usize) -> usize {
        self.star[i * self.size + j] as usize
    }

    #[inline]
    pub fn barstar(&self, i: usize, j: usize) -> usize {
        self.barstar[i * self.size + j] as usize
    }

    /// `i * j`, or `i *̄ j` when `barred`.
    #[inline]
    pub fn act(&self, i: usize, j: usize, barred: bool) -> usize {
        if barred {
            self.barstar(i, j)
        } else {
            self.star(i, j)
        }
    }

    /// The translation `f_q(x) = x * q`, or `x *̄ q` when `barred`.
    pub fn translation(&self, q: usize, barred: bool) -> Result<Automorphism> {
        self.check_index(q)?;
        Ok(Automorphism {
            images: (0..self.size).map(|x| self.act(x, q, barred)).collect(),
        })
    }

    /// Left-normed evaluation `start *^{ε1} a1 *^{ε2} a2 …`.
    pub fn eval_word(&self, start: usize, word: &QuandleWord) -> Result<usize> {
        self.check_index(start)?;
        for letter in &word.letters {
            self.check_index(letter.element)?;
        }
        Ok(self.eval_word_unchecked(start, word))
    }

    pub(crate) fn eval_word_unchecked(&self, start: usize, word: &QuandleWord) -> usize {
        word.letters
            .iter()
            .fold(start, |acc, l| self.act(acc, l.element, l.barred))
    }

    /// Bijective and `f(x * y) = f(x) * f(y)` for all pairs.
    pub fn is_automorphism(&self, images: &[usize]) -> bool {
        if images.len() != self.size {
            return false;
        }
        let mut seen = vec![false; self.size];
        for &v in images {
            if v >= self.size || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        (0..self.size).all(|i| {
            (0..self.size).all(|j| images[self.star(i, j)] == self.star(images[i], images[j]))
        })
    }

    /// Bijectivity plus the homomorphism identity on `samples` random pairs.
    pub fn is_automorphism_sampled(&self, images: &[usize], samples: usize, seed: u64) -> bool {
        if images.len() != self.size {
            return false;
        }
        let mut seen = vec![false; self.size];
        for &v in images {
            if v >= self.size || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        let mut rng = StdRng::seed_from_u64(seed);
        (0..samples).all(|_| {
            let i = rng.random_range(0..self.size);
            let j = rng.random_range(0..self.size);
            images[self.star(i, j)] == self.star(images[i], images[j])
        })
    }
}

fn group_generators(group: &str) -> Result<ElementSet> {
    let group = group.trim();
    if let Some(gens) = group.strip_prefix("gens:") {
        return ElementSet::parse_generators(gens);
    }
    let bad = || Error::QuandleSpec(group.to_string());
    let (family, n) = group.split_at_checked(1).ok_or_else(bad)?;
    let n: usize = n.parse().map_err(|_| bad())?;
    if !(3..=8).contains(&n) {
        return Err(bad());
    }
    match family {
        "S" => Ok(symmetric_generators(n)),
        "A" => Ok(alternating_generators(n)),
        _ => Err(bad()),
    }
}

/// A letter of a left-normed word: apply `element` with `*`, or with `*̄`
/// when `barred`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub element: usize,
    pub barred: bool,
}

impl Letter {
    pub fn new(element: usize, barred: bool) -> Self {
        Letter { element, barred }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QuandleWord {
    pub letters: Vec<Letter>,
}

impl QuandleWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        QuandleWord { letters }
    }

    /// `self · other`.
    pub fn concat(&self, other: &QuandleWord) -> QuandleWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        QuandleWord { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The automorphism `x ↦ eval_word(x, self)`, built by composing
    /// translations.
    pub fn to_automorphism(&self, q: &FiniteQuandle) -> Result<Automorphism> {
        self.letters
            .iter()
            .try_fold(Automorphism::identity(q.len()), |acc, l| {
                Ok(acc.compose(&q.translation(l.element, l.barred)?))
            })
    }
}

/// A quandle automorphism as its image table.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Automorphism {
    images: Vec<usize>,
}

impl Automorphism {
    pub fn identity(size: usize) -> Self {
        Automorphism {
            images: (0..size).collect(),
        }
    }

    pub fn new(q: &FiniteQuandle, images: Vec<usize>) -> Result<Self> {
        if !q.is_automorphism(&images) {
            return Err(Error::InvalidQuandle("not an automorphism".into()));
        }
        Ok(Automorphism { images })
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self` first, then `other`, matching word concatenation.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            images: self.images.iter().map(|&v| other.images[v]).collect(),
        }
    }
}

pub fn compose_automorphisms(f: &Automorphism, g: &Automorphism) -> Automorphism {
    f.compose(g)
}

/// First violation found for each axiom, if any.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub size: usize,
    /// `i` with `i * i != i`.
    pub idempotence: Option<usize>,
    /// `(i, j)` with `(i * j) *̄ j != i` or `(i *̄ j) * j != i`.
    pub right_invertibility: Option<(usize, usize)>,
    /// `(i, j, k)` with `(i * j) * k != (i * k) * (j * k)`.
    pub distributivity: Option<(usize, usize, usize)>,
    /// Number of distributivity triples checked.
    pub triples_checked: u64,
}

impl AxiomReport {
    pub fn holds(&self) -> bool {
        self.idempotence.is_none()
            && self.right_invertibility.is_none()
            && self.distributivity.is_none()
    }
}

fn check_q1_q2(q: &FiniteQuandle, report: &mut AxiomReport) {
    let n = q.len();
    report.size = n;
    report.idempotence = (0..n).find(|&i| q.star(i, i) != i);
    report.right_invertibility = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find(|&(i, j)| q.barstar(q.star(i, j), j) != i || q.star(q.barstar(i, j), j) != i);
}

fn distributes(q: &FiniteQuandle, i: usize, j: usize, k: usize) -> bool {
    q.star(q.star(i, j), k) == q.star(q.star(i, k), q.star(j, k))
}

/// Exhaustive check of idempotence, right invertibility and right
/// self-distributivity.
pub fn verify_axioms(q: &FiniteQuandle) -> AxiomReport {
    let mut report = AxiomReport::default();
    check_q1_q2(q, &mut report);
    let n = q.len();
    'outer: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                report.triples_checked += 1;
                if !distributes(q, i, j, k) {
                    report.distributivity = Some((i, j, k));
                    break 'outer;
                }
            }
        }
    }
    report
}

/// As [`verify_axioms`], but self-distributivity is checked on `samples`
/// random triples.
pub fn verify_axioms_sampled(q: &FiniteQuandle, samples: u64, seed: u64) -> AxiomReport {
    let mut report = AxiomReport::default();
    check_q1_q2(q, &mut report);
    let mut rng = StdRng::seed_from_u64(seed);
    let n = q.len();
    for _ in 0..samples {
        let (i, j, k) = (
            rng.random_range(0..n),
            rng.random_range(0..n),
            rng.random_range(0..n),
        );
        report.triples_checked += 1;
        if !distributes(q, i, j, k) {
            report.distributivity = Some((i, j, k));
            break;
        }
    }
    report
}
