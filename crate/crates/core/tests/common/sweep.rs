//! Exhaustive sweeps over the reduced-word corpora. Each returns the
//! violations it found; an empty list means the property held everywhere.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::sync::{Arc, OnceLock};

use toriheap::{
    all_acyclic_orientations, classify, commutativity_class, commutativity_classes, ctor_class,
    cyclic_decomposition, heap_of_word, is_cyclically_reduced_word, is_faux_cfc, is_tfc,
    is_torically_reduced, normal_form, odd_braid_obstruction, reduced_words, rtor_cyclic_class,
    rtor_words, toric_classes, toric_heap_of_word, tutte, CoxeterGraph, CyclicWord, Gen,
    SimpleGraph, Word,
};

use super::{corpus_systems, tutte_by_subsets, Cayley, CAP};

pub struct System {
    pub name: &'static str,
    pub g: CoxeterGraph,
    pub max_len: usize,
    pub cayley: Cayley,
    pub words: Vec<Word>,
    /// Reduced words grouped by element, keyed on the oracle matrix.
    pub elements: HashMap<Vec<i64>, Vec<Word>>,
}

impl System {
    pub fn oracle_reduced_words(&self, w: &Word) -> &[Word] {
        &self.elements[&self.cayley.element_key(w)]
    }

    pub fn oracle_fc(&self, w: &Word) -> bool {
        let h = heap_of_word(&self.g, w).unwrap();
        h.linear_extensions(CAP).unwrap().len() == self.oracle_reduced_words(w).len()
    }

    pub fn is_coxeter_word(&self, w: &Word) -> bool {
        let mut s = w.letters().to_vec();
        s.sort_unstable();
        s.dedup();
        w.len() == self.g.rank() && s.len() == w.len()
    }
}

pub fn systems() -> &'static [System] {
    static SYSTEMS: OnceLock<Vec<System>> = OnceLock::new();
    SYSTEMS.get_or_init(|| {
        corpus_systems()
            .into_iter()
            .map(|(name, g, max_len)| {
                let cayley = Cayley::new(&g, 64);
                let cayley = if cayley.complete {
                    cayley
                } else {
                    Cayley::new(&g, max_len)
                };
                let words = cayley.reduced_word_corpus(max_len);
                let mut elements: HashMap<Vec<i64>, Vec<Word>> = HashMap::new();
                for w in &words {
                    elements
                        .entry(cayley.element_key(w))
                        .or_default()
                        .push(w.clone());
                }
                for v in elements.values_mut() {
                    v.sort();
                }
                System {
                    name,
                    g,
                    max_len,
                    cayley,
                    words,
                    elements,
                }
            })
            .collect()
    })
}

pub fn system(name: &str) -> &'static System {
    systems().iter().find(|s| s.name == name).unwrap()
}

#[derive(Debug, Default)]
pub struct Violations {
    pub count: usize,
    pub checked: usize,
    pub samples: Vec<String>,
}

impl Violations {
    pub fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.count += 1;
            if self.samples.len() < 5 {
                self.samples.push(msg());
            }
        }
    }

    pub fn ok(&self) -> bool {
        self.count == 0 && self.checked > 0
    }

    pub fn summary(&self) -> String {
        format!(
            "{} checks, {} violations {:?}",
            self.checked, self.count, self.samples
        )
    }

    pub fn merge(&mut self, other: Violations) {
        self.count += other.count;
        self.checked += other.checked;
        for s in other.samples {
            if self.samples.len() < 5 {
                self.samples.push(s);
            }
        }
    }
}

fn sorted(mut v: Vec<Word>) -> Vec<Word> {
    v.sort();
    v
}

/// Normal forms agree across each element's reduced words, match oracle
/// lengths and reduced-word sets, and commutativity classes partition R(w).
pub fn matsumoto(sys: &System) -> Violations {
    let g = &sys.g;
    let mut v = Violations::default();
    for w in &sys.words {
        let f = |m: &str| format!("{} {}: {m}", sys.name, g.format_word(w));
        let nf = normal_form(g, w, CAP).unwrap();
        v.check(nf.length == w.len(), || f("length"));
        v.check(normal_form(g, &nf.word, CAP).unwrap() == nf, || {
            f("idempotence")
        });
        let r = reduced_words(g, w, CAP).unwrap();
        v.check(r == sys.oracle_reduced_words(w), || {
            f("R(w) differs from oracle")
        });
        v.check(r.iter().all(|u| u.len() == w.len()), || f("orbit length"));
        let least = r.iter().min_by(|a, b| a.shortlex_cmp(b)).unwrap();
        v.check(&nf.word == least, || {
            f("normal form is not the least reduced word")
        });
        v.check(
            r.iter().all(|u| normal_form(g, u, CAP).unwrap() == nf),
            || f("normal forms differ"),
        );
        let classes = commutativity_classes(g, w, CAP).unwrap();
        let mut union: Vec<Word> = classes.iter().flatten().cloned().collect();
        let total = union.len();
        union.sort();
        union.dedup();
        v.check(
            classes.iter().all(|c| !c.is_empty()) && total == union.len() && union == r,
            || f("commutativity classes do not partition R(w)"),
        );
    }
    v
}

/// L(H(w)) = C(w), and w is FC exactly when R(w) = L(H(w)).
pub fn stembridge(sys: &System) -> Violations {
    let g = &sys.g;
    let mut v = Violations::default();
    for w in &sys.words {
        let f = |m: &str| format!("{} {}: {m}", sys.name, g.format_word(w));
        let ext = heap_of_word(g, w).unwrap().linear_extensions(CAP).unwrap();
        let class = sorted(commutativity_class(g, w, CAP).unwrap());
        v.check(ext == class, || f("L(H(w)) != C(w)"));
        let fc = commutativity_classes(g, w, CAP).unwrap().len() == 1;
        v.check(fc == (ext == sys.oracle_reduced_words(w)), || {
            f("FC criterion")
        });
    }
    v
}

/// Closure of `[w]` under rotations and commuting swaps, by direct search.
pub fn oracle_ctor(g: &CoxeterGraph, w: &Word) -> Vec<CyclicWord> {
    oracle_cyclic_closure(g, w, false).0
}

/// Closure of `[w]` under rotations and all braid moves, and whether some
/// member has two cyclically adjacent equal letters.
pub fn oracle_cyclic_closure(g: &CoxeterGraph, w: &Word, long: bool) -> (Vec<CyclicWord>, bool) {
    let canon = |l: &[Gen]| -> Vec<Gen> {
        (0..l.len().max(1))
            .map(|k| {
                let mut r = l.to_vec();
                r.rotate_left(k % l.len().max(1));
                r
            })
            .min()
            .unwrap()
    };
    let square = |l: &[Gen]| (0..l.len()).any(|i| l.len() > 1 && l[i] == l[(i + 1) % l.len()]);
    let start = canon(w.letters());
    let mut seen: HashSet<Vec<Gen>> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    let mut hit = false;
    while let Some(cur) = queue.pop_front() {
        hit |= square(&cur);
        let n = cur.len();
        for k in 0..n {
            let mut r = cur.clone();
            r.rotate_left(k);
            for i in 0..n.saturating_sub(1) {
                let (a, b) = (r[i], r[i + 1]);
                if a == b {
                    continue;
                }
                let m = match g.m(a, b).unwrap() {
                    toriheap::Bond::Finite(m) => m as usize,
                    toriheap::Bond::Infinite => continue,
                };
                if (!long && m != 2) || i + m > n {
                    continue;
                }
                if !(0..m).all(|j| r[i + j] == if j % 2 == 0 { a } else { b }) {
                    continue;
                }
                let mut next = r.clone();
                for j in 0..m {
                    next[i + j] = if j % 2 == 0 { b } else { a };
                }
                let c = canon(&next);
                if seen.insert(c.clone()) {
                    queue.push_back(c);
                }
            }
        }
    }
    let mut out: Vec<CyclicWord> = seen
        .into_iter()
        .map(|l| CyclicWord::new(&Word::new(l)))
        .collect();
    out.sort();
    (out, hit)
}

/// L_tor(T(w)) from total toric extensions agrees with C_tor([w]) from the
/// library search and from the direct search, for torically reduced w.
pub fn toric_extensions_match_classes(sys: &System) -> Violations {
    let g = &sys.g;
    let mut v = Violations::default();
    for w in &sys.words {
        if !is_torically_reduced(g, w, CAP).unwrap() {
            continue;
        }
        let f = |m: &str| format!("{} {}: {m}", sys.name, g.format_word(w));
        let l = toric_heap_of_word(g, w).unwrap().ltor(CAP).unwrap();
        let c = ctor_class(g, w, CAP).unwrap();
        v.check(l == c, || f("L_tor != C_tor"));
        v.check(c == oracle_ctor(g, w), || {
            f("C_tor differs from direct search")
        });
    }
    v
}

/// TFC holds exactly when R_tor([w]) = L_tor(T(u)) for every, equivalently
/// some, u in R_tor(w).
pub fn tfc_equivalence(sys: &System) -> Violations {
    let g = &sys.g;
    let mut v = Violations::default();
    let mut ltor_cache: HashMap<Word, Vec<CyclicWord>> = HashMap::new();
    for w in &sys.words {
        if !is_torically_reduced(g, w, CAP).unwrap() {
            continue;
        }
        let f = |m: &str| format!("{} {}: {m}", sys.name, g.format_word(w));
        let tfc = is_tfc(g, w, CAP).unwrap();
        let class = rtor_cyclic_class(g, w, CAP).unwrap();
        let mut every = true;
        let mut some = false;
        for u in rtor_words(g, w, CAP).unwrap() {
            let l = ltor_cache
                .entry(u.clone())
                .or_insert_with(|| toric_heap_of_word(g, &u).unwrap().ltor(CAP).unwrap());
            let eq = *l == class;
            every &= eq;
            some |= eq;
        }
        v.check(tfc == every, || f("TFC vs every u"));
        v.check(tfc == some, || f("TFC vs some u"));
    }
    v
}

/// Coxeter => FC and CFC; CFC => FC and TFC; faux CFC = TFC minus CFC;
/// verdicts consistent with counts; CFC agrees with a direct oracle.
pub fn inclusions(sys: &System) -> Violations {
    let g = &sys.g;
    let mut v = Violations::default();
    for w in &sys.words {
        let f = |m: &str| format!("{} {}: {m}", sys.name, g.format_word(w));
        let r = classify(g, w, CAP).unwrap();
        let c = &r.counts;
        v.check(r.reduced, || f("corpus word not reduced"));
        if sys.is_coxeter_word(w) {
            v.check(r.fc && r.cfc, || f("Coxeter element not CFC"));
        }
        v.check(!r.cfc || r.fc, || f("CFC but not FC"));
        v.check(!r.cfc || r.tfc, || f("CFC but not TFC"));
        v.check(r.faux_cfc == (r.tfc && !r.cfc), || f("faux CFC"));
        v.check(!r.tfc || r.torically_reduced, || {
            f("TFC but not torically reduced")
        });
        v.check(r.fc == (c.commutativity_classes == Some(1)), || {
            f("fc vs counts")
        });
        v.check(r.tfc == (c.cyclic_commutativity_classes == Some(1)), || {
            f("tfc vs counts")
        });
        v.check(
            c.reduced_words == Some(sys.oracle_reduced_words(w).len()),
            || f("reduced word count"),
        );
        let oracle_cfc = sys.oracle_reduced_words(w).iter().all(|u| {
            (0..u.len()).all(|k| {
                let rot = u.rotated(k);
                sys.cayley.is_reduced(&rot) && sys.oracle_fc(&rot)
            })
        });
        v.check(r.cfc == oracle_cfc, || f("CFC differs from oracle"));
        v.check(r.faux_cfc == is_faux_cfc(g, w, CAP).unwrap(), || {
            f("report vs is_faux_cfc")
        });
    }
    v
}

/// Corpus words that are faux CFC.
pub fn faux_cfc_members(sys: &System) -> Vec<Word> {
    sys.words
        .iter()
        .filter(|w| is_faux_cfc(&sys.g, w, CAP).unwrap())
        .cloned()
        .collect()
}

/// Every faux-CFC corpus member has no odd-bond braid shape in R_tor.
pub fn odd_braid_condition(sys: &System) -> Violations {
    let mut v = Violations::default();
    for w in faux_cfc_members(sys) {
        v.check(!odd_braid_obstruction(&sys.g, &w, CAP).unwrap(), || {
            format!("{} {}", sys.name, sys.g.format_word(&w))
        });
    }
    v
}

/// Torically reduced words are cyclically reduced, as words and elements.
pub fn toric_implies_cyclic(sys: &System) -> (Violations, Vec<Word>) {
    let g = &sys.g;
    let mut v = Violations::default();
    let mut converse_failures = Vec::new();
    for w in &sys.words {
        let tor = is_torically_reduced(g, w, CAP).unwrap();
        let word_cyc = is_cyclically_reduced_word(g, w, CAP).unwrap();
        let elem_cyc = sys
            .oracle_reduced_words(w)
            .iter()
            .all(|u| (0..u.len()).all(|k| sys.cayley.is_reduced(&u.rotated(k))));
        let (_, square) = oracle_cyclic_closure(g, w, true);
        let f = |m: &str| format!("{} {}: {m}", sys.name, g.format_word(w));
        v.check(tor == !square, || {
            f("toric reducedness differs from direct search")
        });
        v.check(!tor || word_cyc, || {
            f("torically but not cyclically reduced word")
        });
        v.check(!tor || elem_cyc, || {
            f("torically but not cyclically reduced element")
        });
        if elem_cyc && !tor {
            converse_failures.push(w.clone());
        }
    }
    (v, converse_failures)
}

/// R_tor([w]) splits into disjoint cyclic commutativity classes.
pub fn decompositions(sys: &System) -> Violations {
    let g = &sys.g;
    let mut v = Violations::default();
    for w in &sys.words {
        if !is_torically_reduced(g, w, CAP).unwrap() {
            continue;
        }
        let all = rtor_cyclic_class(g, w, CAP).unwrap();
        let parts = cyclic_decomposition(g, w, CAP).unwrap();
        let flat: Vec<CyclicWord> = parts.iter().flatten().cloned().collect();
        let set: BTreeSet<CyclicWord> = flat.iter().cloned().collect();
        v.check(
            flat.len() == set.len() && set.into_iter().collect::<Vec<_>>() == all,
            || format!("{} {}", sys.name, g.format_word(w)),
        );
    }
    v
}

/// |Acyc(G)| = T(2,0) and the number of toric classes is T(1,0), with the
/// Tutte values checked against the subset expansion.
pub fn tutte_counts(graphs: &[Arc<SimpleGraph>]) -> Violations {
    let mut v = Violations::default();
    for g in graphs {
        let f = |m: &str| format!("{:?}: {m}", g.edges());
        let t20 = tutte(g, 2, 0).unwrap();
        let t10 = tutte(g, 1, 0).unwrap();
        v.check(t20 == tutte_by_subsets(g, 2, 0), || {
            f("T(2,0) vs subset expansion")
        });
        v.check(t10 == tutte_by_subsets(g, 1, 0), || {
            f("T(1,0) vs subset expansion")
        });
        let acyc = all_acyclic_orientations(g).unwrap();
        v.check(acyc.len() as i128 == t20, || f("|Acyc| != T(2,0)"));
        let classes = toric_classes(g, CAP).unwrap();
        v.check(classes.len() as i128 == t10, || f("classes != T(1,0)"));
    }
    v
}

/// T_{K_n}(2,0) = n! and T_{K_n}(1,0) = (n-1)!.
pub fn complete_graph_counts(max_n: usize) -> Violations {
    let mut v = Violations::default();
    let mut fact: i128 = 1;
    for n in 1..=max_n {
        let prev = fact;
        fact *= n as i128;
        let k = SimpleGraph::complete(n);
        v.check(tutte(&k, 2, 0).unwrap() == fact, || format!("K{n} T(2,0)"));
        v.check(tutte(&k, 1, 0).unwrap() == prev, || format!("K{n} T(1,0)"));
        let k = Arc::new(k);
        v.check(
            all_acyclic_orientations(&k).unwrap().len() as i128 == fact,
            || format!("K{n} |Acyc|"),
        );
        v.check(
            toric_classes(&k, CAP).unwrap().len() as i128 == prev,
            || format!("K{n} classes"),
        );
    }
    v
}

/// Skeletons of the corpus systems plus every graph on at most four vertices.
pub fn corpus_graphs() -> Vec<Arc<SimpleGraph>> {
    let mut out: Vec<Arc<SimpleGraph>> = systems()
        .iter()
        .map(|s| toriheap::classify::skeleton(&s.g))
        .collect();
    for g in [super::c4_affine(), super::e6_affine(), super::star_graph()] {
        out.push(toriheap::classify::skeleton(&g));
    }
    for n in 1..=4 {
        out.extend(super::all_graphs(n));
    }
    for n in 3..=6 {
        out.push(Arc::new(SimpleGraph::cycle(n)));
        out.push(Arc::new(SimpleGraph::path(n)));
    }
    out
}
