//! Heaps of words: the labeled poset of letter positions.
//!
//! Positions `i < j` are joined by an edge when their letters do not commute
//! (equal letters included), and every such edge points forward. The heap
//! order is reachability along these edges.

use std::sync::Arc;

use crate::coxeter::{CoxeterGraph, Gen, Word};
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::toric::{AcyclicOrientation, SimpleGraph};

/// Heap of a word over a Coxeter graph. Positions are 0-based internally.
#[derive(Debug, Clone)]
pub struct Heap {
    graph: CoxeterGraph,
    word: Word,
    orientation: AcyclicOrientation,
    poset: Poset,
}

/// The graph `G_w` on letter positions.
pub fn word_graph(g: &CoxeterGraph, w: &Word) -> SimpleGraph {
    let l = w.letters();
    let mut edges = Vec::new();
    for i in 0..l.len() {
        for j in i + 1..l.len() {
            if !g.commute_raw(l[i], l[j]) {
                edges.push((i, j));
            }
        }
    }
    SimpleGraph::new(l.len(), &edges).expect("positions are in range")
}

/// `G_w` with every edge oriented from the earlier position to the later.
pub fn word_orientation(g: &CoxeterGraph, w: &Word) -> AcyclicOrientation {
    let graph = Arc::new(word_graph(g, w));
    let rank: Vec<usize> = (0..w.len()).collect();
    AcyclicOrientation::from_ranking(graph, &rank)
}

pub fn heap_of_word(g: &CoxeterGraph, w: &Word) -> Result<Heap> {
    g.check_word(w)?;
    let orientation = word_orientation(g, w);
    let poset = orientation.poset();
    Ok(Heap {
        graph: g.clone(),
        word: w.clone(),
        orientation,
        poset,
    })
}

impl Heap {
    pub fn coxeter_graph(&self) -> &CoxeterGraph {
        &self.graph
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn label(&self, pos: usize) -> Gen {
        self.word.letters()[pos]
    }

    pub fn labels(&self) -> &[Gen] {
        self.word.letters()
    }

    pub fn orientation(&self) -> &AcyclicOrientation {
        &self.orientation
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn less(&self, i: usize, j: usize) -> bool {
        self.poset.less(i, j)
    }

    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        self.poset.hasse_edges()
    }

    pub fn closure_edges(&self) -> Vec<(usize, usize)> {
        self.poset.closure_edges()
    }

    pub fn is_chain(&self, subset: &[usize]) -> Result<bool> {
        self.poset.is_chain(subset)
    }

    /// Labeled linear extensions, as words in shortlex order.
    pub fn linear_extensions(&self, cap: usize) -> Result<Vec<Word>> {
        let mut words: Vec<Word> = self
            .poset
            .linear_extensions(cap)?
            .into_iter()
            .map(|ext| Word::new(ext.iter().map(|&p| self.label(p)).collect()))
            .collect();
        words.sort_unstable();
        Ok(words)
    }

    /// Positions carrying `s`, in increasing order.
    pub fn occurrences(&self, s: Gen) -> Vec<usize> {
        positions_of(self.labels(), s)
    }
}

pub(crate) fn positions_of(labels: &[Gen], s: Gen) -> Vec<usize> {
    labels
        .iter()
        .enumerate()
        .filter(|&(_, &x)| x == s)
        .map(|(i, _)| i)
        .collect()
}

/// Maps the k-th occurrence of each letter of `a` to the k-th occurrence of
/// the same letter in `b`; `None` if the letter multisets differ.
pub(crate) fn occurrence_map(a: &[Gen], b: &[Gen]) -> Option<Vec<usize>> {
    if a.len() != b.len() {
        return None;
    }
    let width = a
        .iter()
        .chain(b)
        .map(|&x| x as usize + 1)
        .max()
        .unwrap_or(0);
    let mut slots: Vec<Vec<usize>> = vec![Vec::new(); width];
    for (j, &x) in b.iter().enumerate().rev() {
        slots[x as usize].push(j);
    }
    a.iter().map(|&x| slots[x as usize].pop()).collect()
}

/// Whether two heaps over the same Coxeter graph are isomorphic as labeled
/// posets. Occurrences of a generator form a chain, so the occurrence map is
/// the only candidate isomorphism.
pub fn heaps_isomorphic(h1: &Heap, h2: &Heap) -> Result<bool> {
    if h1.graph != h2.graph {
        return Err(Error::GraphMismatch(
            "heaps over different Coxeter graphs".into(),
        ));
    }
    let Some(map) = occurrence_map(h1.labels(), h2.labels()) else {
        return Ok(false);
    };
    let n = h1.len();
    Ok((0..n).all(|i| (0..n).all(|j| h1.less(i, j) == h2.less(map[i], map[j]))))
}
