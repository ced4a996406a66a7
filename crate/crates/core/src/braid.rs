//! Word problem by braid-move search.
//!
//! Tits' solution: a word is reduced iff no word reachable from it by braid
//! moves has two equal adjacent letters. Matsumoto: the reduced words of an
//! element form a single braid orbit.

use std::collections::HashSet;

use crate::coxeter::{CoxeterGraph, Gen, Word};
use crate::error::{Error, Result};
use crate::search::closure;

pub const DEFAULT_ORBIT_CAP: usize = 2_000_000;

/// Which braid relations a move generator may apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Moves {
    /// Every relation `<s,t>_m = <t,s>_m` with finite `m`.
    All,
    /// Only commutations (`m = 2`).
    Short,
}

/// Calls `emit` once per word obtained from `w` by one braid move.
pub(crate) fn for_each_braid_move(
    g: &CoxeterGraph,
    w: &[Gen],
    moves: Moves,
    mut emit: impl FnMut(Vec<Gen>),
) {
    if w.len() < 2 {
        return;
    }
    for i in 0..w.len() - 1 {
        let (a, b) = (w[i], w[i + 1]);
        if a == b {
            continue;
        }
        let Some(m) = g.m_raw(a, b) else { continue };
        let m = m as usize;
        if (moves == Moves::Short && m != 2) || i + m > w.len() {
            continue;
        }
        let alternates = (0..m).all(|k| w[i + k] == if k % 2 == 0 { a } else { b });
        if !alternates {
            continue;
        }
        let mut next = w.to_vec();
        for k in 0..m {
            next[i + k] = if k % 2 == 0 { b } else { a };
        }
        emit(next);
    }
}

/// Closure of a word under single braid moves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidOrbit {
    pub origin: Word,
    /// Sorted members, all of the origin's length.
    pub words: Vec<Word>,
    /// The cap was hit; `words` is then only part of the orbit.
    pub truncated: bool,
}

fn orbit_of(g: &CoxeterGraph, w: &Word, moves: Moves, cap: usize) -> (Vec<Word>, bool) {
    let c = closure(
        [w.clone()],
        cap,
        |u: &Word, out| for_each_braid_move(g, u.letters(), moves, |v| out.push(Word::new(v))),
        |_| false,
    );
    let mut words = c.items;
    words.sort_unstable();
    (words, c.truncated)
}

pub fn braid_orbit(g: &CoxeterGraph, w: &Word, cap: usize) -> BraidOrbit {
    let (words, truncated) = orbit_of(g, w, Moves::All, cap.max(1));
    BraidOrbit {
        origin: w.clone(),
        words,
        truncated,
    }
}

/// Full braid orbit or an `OrbitCapExceeded` error.
pub(crate) fn complete_orbit(
    g: &CoxeterGraph,
    w: &Word,
    moves: Moves,
    cap: usize,
) -> Result<Vec<Word>> {
    match orbit_of(g, w, moves, cap) {
        (_, true) => Err(Error::OrbitCapExceeded { cap }),
        (words, false) => Ok(words),
    }
}

pub fn is_reduced(g: &CoxeterGraph, w: &Word, cap: usize) -> Result<bool> {
    g.check_word(w)?;
    if w.has_square() {
        return Ok(false);
    }
    let c = closure(
        [w.clone()],
        cap,
        |u: &Word, out| for_each_braid_move(g, u.letters(), Moves::All, |v| out.push(Word::new(v))),
        Word::has_square,
    );
    match (c.hit, c.truncated) {
        (Some(_), _) => Ok(false),
        (None, true) => Err(Error::OrbitCapExceeded { cap }),
        (None, false) => Ok(true),
    }
}

/// Shortlex-least reduced word of an element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalForm {
    pub word: Word,
    pub length: usize,
}

impl NormalForm {
    fn of_orbit(orbit: &[Word]) -> Self {
        let word = orbit.iter().min().cloned().unwrap_or_default();
        NormalForm {
            length: word.len(),
            word,
        }
    }
}

/// Reduces `w` one letter at a time.
///
/// The running prefix is kept as the full set `R(u)` of its reduced words;
/// appending `s` shortens `u` iff some member of `R(u)` ends in `s`
/// (exchange condition), in which case that letter is cancelled.
pub fn normal_form(g: &CoxeterGraph, w: &Word, cap: usize) -> Result<NormalForm> {
    g.check_word(w)?;
    let mut orbit = vec![Word::empty()];
    for &s in w.letters() {
        orbit = multiply_by_generator(g, &orbit, s, cap)?;
    }
    Ok(NormalForm::of_orbit(&orbit))
}

/// `R(us)` from `R(u)`.
pub(crate) fn multiply_by_generator(
    g: &CoxeterGraph,
    orbit: &[Word],
    s: Gen,
    cap: usize,
) -> Result<Vec<Word>> {
    let next = match orbit.iter().find(|u| u.letters().last() == Some(&s)) {
        Some(u) => Word::from(&u.letters()[..u.len() - 1]),
        None => {
            let mut v = orbit[0].letters().to_vec();
            v.push(s);
            Word::new(v)
        }
    };
    complete_orbit(g, &next, Moves::All, cap)
}

/// Right descents of a reduced word: generators `s` with `l(ws) < l(w)`.
pub fn right_descents(g: &CoxeterGraph, w: &Word, cap: usize) -> Result<Vec<Gen>> {
    let words = reduced_words(g, w, cap)?;
    let mut d: Vec<Gen> = words
        .iter()
        .filter_map(|u| u.letters().last().copied())
        .collect();
    d.sort_unstable();
    d.dedup();
    Ok(d)
}

/// `R(w)`: every reduced word for the element of the reduced word `w`.
pub fn reduced_words(g: &CoxeterGraph, w: &Word, cap: usize) -> Result<Vec<Word>> {
    if !is_reduced(g, w, cap)? {
        return Err(Error::NotReduced(g.format_word(w)));
    }
    complete_orbit(g, w, Moves::All, cap)
}

/// The commutativity class of any word (closure under commutations).
pub fn commutativity_class(g: &CoxeterGraph, w: &Word, cap: usize) -> Result<Vec<Word>> {
    g.check_word(w)?;
    complete_orbit(g, w, Moves::Short, cap)
}

/// Partition of `R(w)` into commutativity classes, ordered by least member.
pub fn commutativity_classes(g: &CoxeterGraph, w: &Word, cap: usize) -> Result<Vec<Vec<Word>>> {
    let all = reduced_words(g, w, cap)?;
    let mut seen: HashSet<Word> = HashSet::with_capacity(all.len());
    let mut classes = Vec::new();
    for u in &all {
        if seen.contains(u) {
            continue;
        }
        let class = complete_orbit(g, u, Moves::Short, cap)?;
        seen.extend(class.iter().cloned());
        classes.push(class);
    }
    Ok(classes)
}

pub fn multiply(g: &CoxeterGraph, u: &Word, v: &Word, cap: usize) -> Result<NormalForm> {
    normal_form(g, &u.concat(v), cap)
}

pub fn inverse(w: &Word) -> Word {
    w.reversed()
}

/// Normal form of `v^-1 w v`.
pub fn conjugate(g: &CoxeterGraph, v: &Word, w: &Word, cap: usize) -> Result<NormalForm> {
    normal_form(g, &v.reversed().concat(w).concat(v), cap)
}

/// `l(w^k)`.
pub fn power_length(g: &CoxeterGraph, w: &Word, k: usize, cap: usize) -> Result<usize> {
    Ok(normal_form(g, &w.power(k), cap)?.length)
}

/// Every element of length at most `max_len`, each given by its full set of
/// reduced words. Ordered by length, then normal form.
pub fn elements_up_to(g: &CoxeterGraph, max_len: usize, cap: usize) -> Result<Vec<Vec<Word>>> {
    let mut all = vec![vec![Word::empty()]];
    let mut layer = all.clone();
    for _ in 0..max_len {
        let mut next: Vec<Vec<Word>> = Vec::new();
        let mut seen: HashSet<Word> = HashSet::new();
        for orbit in &layer {
            for s in g.generators() {
                if orbit.iter().any(|u| u.letters().last() == Some(&s)) {
                    continue;
                }
                let mut v = orbit[0].letters().to_vec();
                v.push(s);
                let v = Word::new(v);
                if seen.contains(&v) {
                    continue;
                }
                let child = complete_orbit(g, &v, Moves::All, cap)?;
                seen.extend(child.iter().cloned());
                next.push(child);
            }
        }
        next.sort_by(|a, b| a[0].cmp(&b[0]));
        all.extend(next.iter().cloned());
        layer = next;
        if layer.is_empty() {
            break;
        }
    }
    Ok(all)
}
