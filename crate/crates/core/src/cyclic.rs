//! Cyclic words, cyclic and toric reducedness, cyclic commutativity classes
//! and toric heaps.

use std::collections::HashSet;
use std::fmt;

use crate::braid::{
    complete_orbit, for_each_braid_move, is_reduced, reduced_words, Moves, NormalForm,
};
use crate::coxeter::{CoxeterGraph, Gen, Word};
use crate::error::{Error, Result};
use crate::heap::{occurrence_map, positions_of, word_orientation};
use crate::search::closure;
use crate::toric::{ToricPoset, MAX_TOTAL_EXTENSION_VERTICES};

/// Rotation class of a word, held by its least rotation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicWord {
    canonical: Word,
}

impl CyclicWord {
    pub fn new(w: &Word) -> Self {
        let canonical = (0..w.len().max(1))
            .map(|k| w.rotated(k))
            .min()
            .unwrap_or_default();
        CyclicWord { canonical }
    }

    pub fn canonical(&self) -> &Word {
        &self.canonical
    }

    pub fn len(&self) -> usize {
        self.canonical.len()
    }

    pub fn is_empty(&self) -> bool {
        self.canonical.is_empty()
    }

    /// Distinct rotations, starting from the canonical one.
    pub fn rotations(&self) -> Vec<Word> {
        let w = &self.canonical;
        let mut out = vec![w.clone()];
        for k in 1..w.len() {
            let r = w.rotated(k);
            if r == *w {
                break;
            }
            out.push(r);
        }
        out
    }

    /// Some rotation has two equal adjacent letters.
    pub fn has_cyclic_square(&self) -> bool {
        let l = self.canonical.letters();
        l.len() >= 2 && (self.canonical.has_square() || l[0] == l[l.len() - 1])
    }

    pub fn display<'a>(&'a self, g: &'a CoxeterGraph) -> impl fmt::Display + 'a {
        DisplayCyclic { g, w: self }
    }
}

struct DisplayCyclic<'a> {
    g: &'a CoxeterGraph,
    w: &'a CyclicWord,
}

impl fmt::Display for DisplayCyclic<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.w.is_empty() {
            return f.write_str("[]");
        }
        write!(f, "[{}]", self.g.format_word(&self.w.canonical))
    }
}

pub fn cyclic_word(w: &Word) -> CyclicWord {
    CyclicWord::new(w)
}

pub fn rotations(cw: &CyclicWord) -> Vec<Word> {
    cw.rotations()
}

fn cyclic_moves(g: &CoxeterGraph, cw: &CyclicWord, moves: Moves, out: &mut Vec<CyclicWord>) {
    for r in cw.rotations() {
        for_each_braid_move(g, r.letters(), moves, |v| {
            out.push(CyclicWord::new(&Word::new(v)))
        });
    }
}

fn cyclic_closure(
    g: &CoxeterGraph,
    w: &Word,
    moves: Moves,
    cap: usize,
) -> crate::search::Closure<CyclicWord> {
    closure(
        [CyclicWord::new(w)],
        cap,
        |cw: &CyclicWord, out| cyclic_moves(g, cw, moves, out),
        |_| false,
    )
}

/// Every rotation of `w` is reduced.
pub fn is_cyclically_reduced_word(g: &CoxeterGraph, w: &Word, cap: usize) -> Result<bool> {
    g.check_word(w)?;
    for r in CyclicWord::new(w).rotations() {
        if !is_reduced(g, &r, cap)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// First rotation of `w` that is not reduced.
pub fn non_reduced_rotation(g: &CoxeterGraph, w: &Word, cap: usize) -> Result<Option<Word>> {
    for k in 0..w.len() {
        let r = w.rotated(k);
        if !is_reduced(g, &r, cap)? {
            return Ok(Some(r));
        }
    }
    Ok(None)
}

/// Every reduced word of the element is cyclically reduced.
pub fn is_cyclically_reduced_element(g: &CoxeterGraph, w: &Word, cap: usize) -> Result<bool> {
    for u in reduced_words(g, w, cap)? {
        if !is_cyclically_reduced_word(g, &u, cap)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Outcome of the toric reducedness search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ToricReduction {
    Reduced,
    /// Cyclic words from `[w]` to one with a cyclically adjacent equal pair,
    /// each obtained from the previous by one braid move on some rotation.
    Refuted(Vec<CyclicWord>),
}

/// Searches the closure of `[w]` under rotations and braid moves for a
/// word with two cyclically adjacent equal letters.
pub fn toric_reduction(g: &CoxeterGraph, w: &Word, cap: usize) -> Result<ToricReduction> {
    g.check_word(w)?;
    let c = closure(
        [CyclicWord::new(w)],
        cap,
        |cw: &CyclicWord, out| cyclic_moves(g, cw, Moves::All, out),
        CyclicWord::has_cyclic_square,
    );
    match (c.hit, c.truncated) {
        (Some(hit), _) => Ok(ToricReduction::Refuted(
            c.path_to(hit).into_iter().cloned().collect(),
        )),
        (None, true) => Err(Error::OrbitCapExceeded { cap }),
        (None, false) => Ok(ToricReduction::Reduced),
    }
}

pub fn is_torically_reduced(g: &CoxeterGraph, w: &Word, cap: usize) -> Result<bool> {
    Ok(toric_reduction(g, w, cap)? == ToricReduction::Reduced)
}

fn require_torically_reduced(g: &CoxeterGraph, w: &Word, cap: usize) -> Result<()> {
    if is_torically_reduced(g, w, cap)? {
        Ok(())
    } else {
        Err(Error::NotToricallyReduced(g.format_word(w)))
    }
}

/// `R_tor([w])`: closure of `[w]` under cyclic braid moves. Sorted.
pub fn rtor_cyclic_class(g: &CoxeterGraph, w: &Word, cap: usize) -> Result<Vec<CyclicWord>> {
    require_torically_reduced(g, w, cap)?;
    let c = cyclic_closure(g, w, Moves::All, cap);
    if c.truncated {
        return Err(Error::OrbitCapExceeded { cap });
    }
    let mut v = c.items;
    v.sort_unstable();
    Ok(v)
}

/// `C_tor([w])`: closure of `[w]` under rotations and commutations. Sorted.
pub fn ctor_class(g: &CoxeterGraph, w: &Word, cap: usize) -> Result<Vec<CyclicWord>> {
    g.check_word(w)?;
    let c = cyclic_closure(g, w, Moves::Short, cap);
    if c.truncated {
        return Err(Error::OrbitCapExceeded { cap });
    }
    let mut v = c.items;
    v.sort_unstable();
    Ok(v)
}

/// `R_tor([w])` split into cyclic commutativity classes, ordered by least member.
pub fn cyclic_decomposition(
    g: &CoxeterGraph,
    w: &Word,
    cap: usize,
) -> Result<Vec<Vec<CyclicWord>>> {
    let all = rtor_cyclic_class(g, w, cap)?;
    let mut seen = HashSet::with_capacity(all.len());
    let mut classes = Vec::new();
    for cw in &all {
        if seen.contains(cw) {
            continue;
        }
        let class = ctor_class(g, cw.canonical(), cap)?;
        seen.extend(class.iter().cloned());
        classes.push(class);
    }
    Ok(classes)
}

/// Every linear word in `R_tor(w)`: all rotations of the cyclic words. Sorted.
pub fn rtor_words(g: &CoxeterGraph, w: &Word, cap: usize) -> Result<Vec<Word>> {
    let mut words: Vec<Word> = rtor_cyclic_class(g, w, cap)?
        .iter()
        .flat_map(CyclicWord::rotations)
        .collect();
    words.sort_unstable();
    words.dedup();
    Ok(words)
}

/// A group element in `[w]` with the words of `R_tor(w)` spelling it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToricElement {
    pub element: NormalForm,
    pub words: Vec<Word>,
}

/// The elements torically equivalent to `w`, ordered by normal form.
///
/// `R_tor(w)` is closed under braid moves, so it splits into whole braid
/// orbits, one per element.
pub fn torically_equivalent_elements(
    g: &CoxeterGraph,
    w: &Word,
    cap: usize,
) -> Result<Vec<ToricElement>> {
    let words = rtor_words(g, w, cap)?;
    let mut seen = HashSet::with_capacity(words.len());
    let mut out = Vec::new();
    for u in &words {
        if seen.contains(u) {
            continue;
        }
        let orbit = complete_orbit(g, u, Moves::All, cap)?;
        seen.extend(orbit.iter().cloned());
        let nf = orbit[0].clone();
        out.push(ToricElement {
            element: NormalForm {
                length: nf.len(),
                word: nf,
            },
            words: orbit,
        });
    }
    out.sort_by(|a, b| a.element.cmp(&b.element));
    Ok(out)
}

/// Toric heap of a word: the toric poset of `(G_w, w_w)` labeled by letters.
#[derive(Debug, Clone)]
pub struct ToricHeap {
    graph: CoxeterGraph,
    word: Word,
    toric: ToricPoset,
}

pub fn toric_heap_of_word(g: &CoxeterGraph, w: &Word) -> Result<ToricHeap> {
    g.check_word(w)?;
    Ok(ToricHeap {
        graph: g.clone(),
        word: w.clone(),
        toric: ToricPoset::new(word_orientation(g, w)),
    })
}

impl ToricHeap {
    pub fn coxeter_graph(&self) -> &CoxeterGraph {
        &self.graph
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn toric(&self) -> &ToricPoset {
        &self.toric
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// `L_tor`: total toric extensions read through the labels. Sorted.
    pub fn ltor(&self, cap: usize) -> Result<Vec<CyclicWord>> {
        let labels = self.word.letters();
        let mut out: Vec<CyclicWord> = self
            .toric
            .total_toric_extensions(cap)?
            .iter()
            .map(|order| CyclicWord::new(&Word::new(order.iter().map(|&p| labels[p]).collect())))
            .collect();
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }
}

impl ToricHeap {
    /// Directed edges of the toric Hasse diagram of the underlying toric
    /// poset. Uses the total-extension criterion up to the size it
    /// supports, the local toric-path rule beyond.
    pub fn toric_hasse_edges(&self, cap: usize) -> Result<Vec<(usize, usize)>> {
        let t = if self.len() <= MAX_TOTAL_EXTENSION_VERTICES {
            self.toric.toric_hasse(cap)?
        } else {
            self.toric.toric_hasse_local()
        };
        Ok(t.representative().directed_edges())
    }
}

pub fn ltor(t: &ToricHeap, cap: usize) -> Result<Vec<CyclicWord>> {
    t.ltor(cap)
}

/// Whether two toric heaps are isomorphic as labeled toric posets.
///
/// The occurrences of a generator form a toric chain, and an isomorphism
/// keeps its cyclic order. So candidates are the occurrence alignments
/// shifted cyclically, independently for each generator.
pub fn toric_heaps_isomorphic(t1: &ToricHeap, t2: &ToricHeap, cap: usize) -> Result<bool> {
    if t1.graph != t2.graph {
        return Err(Error::GraphMismatch(
            "toric heaps over different Coxeter graphs".into(),
        ));
    }
    let a = t1.word.letters();
    let b = t2.word.letters();
    if occurrence_map(a, b).is_none() {
        return Ok(false);
    }
    let gens: Vec<Gen> = t1.word.support();
    let occ_a: Vec<Vec<usize>> = gens.iter().map(|&s| positions_of(a, s)).collect();
    let occ_b: Vec<Vec<usize>> = gens.iter().map(|&s| positions_of(b, s)).collect();
    let rep = t1.toric.representative();
    let mut shift = vec![0usize; gens.len()];
    let mut perm = vec![0usize; a.len()];
    loop {
        for (i, (pa, pb)) in occ_a.iter().zip(&occ_b).enumerate() {
            for (j, &p) in pa.iter().enumerate() {
                perm[p] = pb[(j + shift[i]) % pb.len()];
            }
        }
        if t2.toric.contains(&rep.relabeled(&perm), cap)? {
            return Ok(true);
        }
        // Next combination of shifts.
        let mut i = 0;
        while i < shift.len() {
            shift[i] += 1;
            if shift[i] < occ_a[i].len() {
                break;
            }
            shift[i] = 0;
            i += 1;
        }
        if i == shift.len() {
            return Ok(false);
        }
    }
}
