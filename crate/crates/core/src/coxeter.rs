//! Coxeter systems encoded as weighted graphs, and words over their
//! generators.
//!
//! Generators are addressed by a dense index (declaration order). Names are
//! presentation only; every lexicographic tie-break in the crate uses the
//! index order.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

/// Generator index into a [`CoxeterGraph`].
pub type Gen = u8;

/// Order of the product `st` for two generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Bond {
    Finite(u32),
    Infinite,
}

impl Bond {
    pub fn finite(self) -> Option<u32> {
        match self {
            Bond::Finite(m) => Some(m),
            Bond::Infinite => None,
        }
    }
}

impl fmt::Display for Bond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bond::Finite(m) => write!(f, "{m}"),
            Bond::Infinite => f.write_str("inf"),
        }
    }
}

/// A Coxeter graph: generators plus the bonds with `m(s,t) >= 3`.
///
/// Pairs missing from the bond map commute (`m = 2`); `m(s,s) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterGraph {
    names: Vec<String>,
    bonds: BTreeMap<(Gen, Gen), Bond>,
    // Dense copy of the bond matrix; `None` is m = inf.
    table: Vec<Option<u32>>,
}

impl CoxeterGraph {
    /// Builds and validates a graph from generator names and named bonds.
    pub fn new<S: AsRef<str>>(generators: &[S], bonds: &[(S, S, Bond)]) -> Result<Self> {
        let names: Vec<String> = generators.iter().map(|s| s.as_ref().to_owned()).collect();
        if names.len() > Gen::MAX as usize {
            return Err(Error::TooManyGenerators(names.len()));
        }
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(Error::DuplicateGenerator(name.clone()));
            }
        }
        let lookup = |name: &str| -> Result<Gen> {
            names
                .iter()
                .position(|n| n == name)
                .map(|i| i as Gen)
                .ok_or_else(|| Error::UnknownGenerator(name.to_owned()))
        };
        let mut map = BTreeMap::new();
        for (a, b, bond) in bonds {
            let (a, b) = (a.as_ref(), b.as_ref());
            let (i, j) = (lookup(a)?, lookup(b)?);
            if i == j {
                return Err(Error::SelfBond(a.to_owned()));
            }
            if let Bond::Finite(m) = bond {
                if *m < 3 {
                    return Err(Error::InvalidBond {
                        a: a.to_owned(),
                        b: b.to_owned(),
                        label: m.to_string(),
                    });
                }
            }
            let key = (i.min(j), i.max(j));
            if map.insert(key, *bond).is_some() {
                return Err(Error::DuplicateBond {
                    a: a.to_owned(),
                    b: b.to_owned(),
                });
            }
        }
        Ok(Self::from_parts(names, map))
    }

    fn from_parts(names: Vec<String>, bonds: BTreeMap<(Gen, Gen), Bond>) -> Self {
        let n = names.len();
        let mut table = vec![Some(2); n * n];
        for i in 0..n {
            table[i * n + i] = Some(1);
        }
        for (&(i, j), bond) in &bonds {
            let (i, j) = (i as usize, j as usize);
            table[i * n + j] = bond.finite();
            table[j * n + i] = bond.finite();
        }
        CoxeterGraph {
            names,
            bonds,
            table,
        }
    }

    /// Parses the canonical JSON graph document.
    pub fn from_json(text: &str) -> Result<Self> {
        let spec: GraphSpec =
            serde_json::from_str(text).map_err(|e| Error::MalformedGraph(e.to_string()))?;
        spec.build()
    }

    pub fn to_spec(&self) -> GraphSpec {
        GraphSpec {
            generators: self.names.clone(),
            bonds: self
                .bonds
                .iter()
                .map(|(&(i, j), bond)| {
                    let label = match bond {
                        Bond::Finite(m) => Value::from(*m),
                        Bond::Infinite => Value::from("inf"),
                    };
                    (self.name(i).to_owned(), self.name(j).to_owned(), label)
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_spec()).expect("graph spec serializes")
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, s: Gen) -> &str {
        &self.names[s as usize]
    }

    pub fn index_of(&self, name: &str) -> Result<Gen> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| i as Gen)
            .ok_or_else(|| Error::UnknownGenerator(name.to_owned()))
    }

    pub fn generators(&self) -> impl Iterator<Item = Gen> {
        0..self.rank() as Gen
    }

    /// Stored bonds (`m >= 3`), keyed by index pairs with the smaller first.
    pub fn bonds(&self) -> &BTreeMap<(Gen, Gen), Bond> {
        &self.bonds
    }

    fn check(&self, s: Gen) -> Result<()> {
        if (s as usize) < self.rank() {
            Ok(())
        } else {
            Err(Error::GeneratorOutOfRange {
                index: s as usize,
                rank: self.rank(),
            })
        }
    }

    /// `m(s,t)`: 1 on the diagonal, 2 for unbonded pairs.
    pub fn m(&self, s: Gen, t: Gen) -> Result<Bond> {
        self.check(s)?;
        self.check(t)?;
        Ok(match self.m_raw(s, t) {
            Some(m) => Bond::Finite(m),
            None => Bond::Infinite,
        })
    }

    #[inline]
    pub(crate) fn m_raw(&self, s: Gen, t: Gen) -> Option<u32> {
        self.table[s as usize * self.rank() + t as usize]
    }

    /// True iff `s != t` and `m(s,t) = 2`.
    pub fn commutes(&self, s: Gen, t: Gen) -> Result<bool> {
        self.check(s)?;
        self.check(t)?;
        Ok(self.commute_raw(s, t))
    }

    #[inline]
    pub(crate) fn commute_raw(&self, s: Gen, t: Gen) -> bool {
        self.m_raw(s, t) == Some(2)
    }

    /// Generators bonded to `s`.
    pub fn neighbors(&self, s: Gen) -> Vec<Gen> {
        self.generators()
            .filter(|&t| t != s && !self.commute_raw(s, t))
            .collect()
    }

    /// The graph restricted to `subset`, keeping inherited bonds.
    /// Generators keep their names; indices follow the original order.
    pub fn induced_subgraph(&self, subset: &[Gen]) -> Result<CoxeterGraph> {
        for &s in subset {
            self.check(s)?;
        }
        let mut keep: Vec<Gen> = subset.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let names = keep.iter().map(|&s| self.name(s).to_owned()).collect();
        let mut bonds = BTreeMap::new();
        for (a, &s) in keep.iter().enumerate() {
            for (b, &t) in keep.iter().enumerate().skip(a + 1) {
                if let Some(bond) = self.bonds.get(&(s, t)) {
                    bonds.insert((a as Gen, b as Gen), *bond);
                }
            }
        }
        Ok(Self::from_parts(names, bonds))
    }

    /// Parses a word.
    ///
    /// Accepted forms: whitespace-separated generator names (`"s3 s1 s2"`),
    /// or a single compact token. In a compact token each character is a
    /// generator name when all names are single characters; otherwise each
    /// digit `d` names the generator `s<d>` if one exists, else the
    /// generator with index `d` (only when rank <= 10).
    pub fn parse_word(&self, input: &str) -> Result<Word> {
        let tokens: Vec<&str> = input.split_whitespace().collect();
        let err = |reason: String| Error::WordParse {
            input: input.to_owned(),
            reason,
        };
        if tokens.is_empty() {
            return Ok(Word::empty());
        }
        if tokens.len() > 1 || self.index_of(tokens[0]).is_ok() {
            let letters = tokens
                .iter()
                .map(|t| self.index_of(t))
                .collect::<Result<Vec<_>>>()
                .map_err(|e| err(e.to_string()))?;
            return Ok(Word(letters));
        }
        let token = tokens[0];
        if matches!(token, "e" | "1" | "()") && self.index_of(token).is_err() {
            return Ok(Word::empty());
        }
        if self.names.iter().all(|n| n.chars().count() == 1) {
            let letters = token
                .chars()
                .map(|c| self.index_of(c.encode_utf8(&mut [0; 4])))
                .collect::<Result<Vec<_>>>()
                .map_err(|e| err(e.to_string()))?;
            return Ok(Word(letters));
        }
        if !token.chars().all(|c| c.is_ascii_digit()) {
            return Err(err(format!("unknown generator `{token}`")));
        }
        let mut letters = Vec::with_capacity(token.len());
        for c in token.chars() {
            let d = c
                .to_digit(10)
                .ok_or_else(|| err(format!("unexpected character `{c}`")))?;
            let s = match self.index_of(&format!("s{d}")) {
                Ok(s) => s,
                Err(_) if (d as usize) < self.rank() && self.rank() <= 10 => d as Gen,
                Err(_) => return Err(err(format!("no generator for digit {d}"))),
            };
            letters.push(s);
        }
        Ok(Word(letters))
    }

    /// Whitespace form of a word, `"e"` for the identity.
    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "e".to_owned();
        }
        w.letters()
            .iter()
            .map(|&s| self.name(s))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        w.letters().iter().try_for_each(|&s| self.check(s))
    }
}

/// The on-disk graph document: `generators` and `bonds`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphSpec {
    pub generators: Vec<String>,
    #[serde(default)]
    pub bonds: Vec<(String, String, Value)>,
}

impl GraphSpec {
    pub fn build(&self) -> Result<CoxeterGraph> {
        let bonds = self
            .bonds
            .iter()
            .map(|(a, b, label)| {
                let bad = || Error::InvalidBond {
                    a: a.clone(),
                    b: b.clone(),
                    label: label.to_string(),
                };
                let bond = match label {
                    Value::String(s) if matches!(s.as_str(), "inf" | "infinity" | "∞") => {
                        Bond::Infinite
                    }
                    Value::String(s) => Bond::Finite(s.parse::<u32>().map_err(|_| bad())?),
                    Value::Number(n) => Bond::Finite(
                        n.as_u64()
                            .and_then(|m| u32::try_from(m).ok())
                            .ok_or_else(bad)?,
                    ),
                    _ => return Err(bad()),
                };
                Ok((a.clone(), b.clone(), bond))
            })
            .collect::<Result<Vec<_>>>()?;
        CoxeterGraph::new(&self.generators, &bonds)
    }
}

/// A word over the generators; the empty word is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Gen>);

impl Word {
    pub fn new(letters: Vec<Gen>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Gen] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Gen> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Distinct letters, sorted by index.
    pub fn support(&self) -> Vec<Gen> {
        let mut s = self.0.clone();
        s.sort_unstable();
        s.dedup();
        s
    }

    /// The word read backwards; the inverse element since generators are
    /// involutions.
    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn power(&self, k: usize) -> Word {
        Word(self.0.repeat(k))
    }

    /// Cyclic shift moving the first `k` letters to the end.
    pub fn rotated(&self, k: usize) -> Word {
        if self.0.is_empty() {
            return Word::empty();
        }
        let k = k % self.0.len();
        let mut v = self.0[k..].to_vec();
        v.extend_from_slice(&self.0[..k]);
        Word(v)
    }

    /// True iff two adjacent letters coincide.
    pub fn has_square(&self) -> bool {
        self.0.windows(2).any(|p| p[0] == p[1])
    }

    /// Shortlex comparison; words are ordered by length, then by letters.
    pub fn shortlex_cmp(&self, other: &Word) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl From<Vec<Gen>> for Word {
    fn from(v: Vec<Gen>) -> Self {
        Word(v)
    }
}

impl From<&[Gen]> for Word {
    fn from(v: &[Gen]) -> Self {
        Word(v.to_vec())
    }
}

/// Generators appearing in `w`.
pub fn support(w: &Word) -> Vec<Gen> {
    w.support()
}
