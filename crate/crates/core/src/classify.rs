//! FC / CFC / TFC / faux-CFC verdicts, Coxeter elements and conjugacy, and
//! probes for open questions.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use crate::braid::{
    commutativity_classes, elements_up_to, is_reduced, multiply_by_generator, normal_form,
    reduced_words,
};
use crate::coxeter::{Bond, CoxeterGraph, Gen, Word};
use crate::cyclic::{
    cyclic_decomposition, is_cyclically_reduced_word, non_reduced_rotation, rtor_words,
    toric_reduction, torically_equivalent_elements, CyclicWord, ToricReduction,
};
use crate::error::{Error, Result};
use crate::poset::DEFAULT_EXTENSION_CAP;
use crate::toric::{
    all_acyclic_orientations, flip_path, toric_classes, AcyclicOrientation, SimpleGraph,
};

/// `R(w)` has a single commutativity class.
pub fn is_fc(g: &CoxeterGraph, w: &Word, cap: usize) -> Result<bool> {
    Ok(commutativity_classes(g, w, cap)?.len() == 1)
}

/// A rotation of a reduced word of `w` that is not reduced or not FC.
pub fn cfc_witness(g: &CoxeterGraph, w: &Word, cap: usize) -> Result<Option<Word>> {
    let mut fc_known: HashMap<Word, bool> = HashMap::new();
    for u in reduced_words(g, w, cap)? {
        for k in 0..u.len() {
            let r = u.rotated(k);
            let fc = match fc_known.get(&r) {
                Some(&v) => v,
                None => {
                    if !is_reduced(g, &r, cap)? {
                        return Ok(Some(r));
                    }
                    let classes = commutativity_classes(g, &r, cap)?;
                    let fc = classes.len() == 1;
                    for c in classes {
                        fc_known.extend(c.into_iter().map(|x| (x, fc)));
                    }
                    fc
                }
            };
            if !fc {
                return Ok(Some(r));
            }
        }
    }
    Ok(None)
}

/// Every rotation of every reduced word of `w` is reduced and FC.
pub fn is_cfc(g: &CoxeterGraph, w: &Word, cap: usize) -> Result<bool> {
    Ok(cfc_witness(g, w, cap)?.is_none())
}

/// Torically reduced with a single cyclic commutativity class.
pub fn is_tfc(g: &CoxeterGraph, w: &Word, cap: usize) -> Result<bool> {
    if toric_reduction(g, w, cap)? != ToricReduction::Reduced {
        return Ok(false);
    }
    Ok(cyclic_decomposition(g, w, cap)?.len() == 1)
}

pub fn is_faux_cfc(g: &CoxeterGraph, w: &Word, cap: usize) -> Result<bool> {
    Ok(is_tfc(g, w, cap)? && !is_cfc(g, w, cap)?)
}

/// Class sizes behind a classification; absent when undefined for the word.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Counts {
    pub reduced_words: Option<usize>,
    pub commutativity_classes: Option<usize>,
    pub cyclic_words: Option<usize>,
    pub cyclic_commutativity_classes: Option<usize>,
    pub toric_words: Option<usize>,
    pub toric_elements: Option<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Witnesses {
    pub normal_form: Word,
    /// A rotation of the input word that is not reduced.
    pub non_reduced_rotation: Option<Word>,
    /// A rotation of some reduced word that is not reduced or not FC.
    pub cfc_failure: Option<Word>,
    /// Braid/rotation path to a cyclic word with a repeated adjacent letter.
    pub toric_refutation: Option<Vec<CyclicWord>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub word: Word,
    pub reduced: bool,
    /// Every reduced word of the element is cyclically reduced.
    pub cyclically_reduced: bool,
    /// Every rotation of the input word is reduced.
    pub cyclically_reduced_word: bool,
    pub torically_reduced: bool,
    pub fc: bool,
    pub cfc: bool,
    pub tfc: bool,
    pub faux_cfc: bool,
    pub counts: Counts,
    pub witnesses: Witnesses,
}

pub fn classify(g: &CoxeterGraph, w: &Word, cap: usize) -> Result<ClassificationReport> {
    g.check_word(w)?;
    let nf = normal_form(g, w, cap)?;
    let reduced = nf.length == w.len();
    let non_reduced_rotation = non_reduced_rotation(g, w, cap)?;
    let toric = toric_reduction(g, w, cap)?;
    let torically_reduced = toric == ToricReduction::Reduced;
    let mut counts = Counts::default();
    let mut witnesses = Witnesses {
        normal_form: nf.word,
        non_reduced_rotation: non_reduced_rotation.clone(),
        cfc_failure: None,
        toric_refutation: match toric {
            ToricReduction::Refuted(path) => Some(path),
            ToricReduction::Reduced => None,
        },
    };
    let (mut fc, mut cfc, mut tfc, mut cyclically_reduced) = (false, false, false, false);
    if reduced {
        let words = reduced_words(g, w, cap)?;
        counts.reduced_words = Some(words.len());
        let classes = commutativity_classes(g, w, cap)?;
        counts.commutativity_classes = Some(classes.len());
        fc = classes.len() == 1;
        cyclically_reduced = true;
        for u in &words {
            if !is_cyclically_reduced_word(g, u, cap)? {
                cyclically_reduced = false;
                break;
            }
        }
        witnesses.cfc_failure = cfc_witness(g, w, cap)?;
        cfc = witnesses.cfc_failure.is_none();
    }
    if torically_reduced {
        let decomposition = cyclic_decomposition(g, w, cap)?;
        counts.cyclic_words = Some(decomposition.iter().map(Vec::len).sum());
        counts.cyclic_commutativity_classes = Some(decomposition.len());
        counts.toric_words = Some(rtor_words(g, w, cap)?.len());
        counts.toric_elements = Some(torically_equivalent_elements(g, w, cap)?.len());
        tfc = decomposition.len() == 1;
    }
    Ok(ClassificationReport {
        word: w.clone(),
        reduced,
        cyclically_reduced,
        cyclically_reduced_word: non_reduced_rotation.is_none(),
        torically_reduced,
        fc,
        cfc,
        tfc,
        faux_cfc: tfc && !cfc,
        counts,
        witnesses,
    })
}

/// Partial check of `l(w^k) = k l(w)` for `k <= k_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogarithmicProbe {
    pub k_max: usize,
    pub length: usize,
    /// `l(w^k)` for `k = 1, 2, ...` up to the violation or `k_max`.
    pub power_lengths: Vec<usize>,
    /// First `k` with `l(w^k) < k l(w)`.
    pub violation: Option<usize>,
}

pub fn logarithmic_probe(
    g: &CoxeterGraph,
    w: &Word,
    k_max: usize,
    cap: usize,
) -> Result<LogarithmicProbe> {
    if !is_reduced(g, w, cap)? {
        return Err(Error::NotReduced(g.format_word(w)));
    }
    let mut orbit = vec![Word::empty()];
    let mut power_lengths = Vec::with_capacity(k_max);
    let mut violation = None;
    for k in 1..=k_max {
        for &s in w.letters() {
            orbit = multiply_by_generator(g, &orbit, s, cap)?;
        }
        let l = orbit[0].len();
        power_lengths.push(l);
        if l < k * w.len() {
            violation = Some(k);
            break;
        }
    }
    Ok(LogarithmicProbe {
        k_max,
        length: w.len(),
        power_lengths,
        violation,
    })
}

/// The Coxeter graph as a simple graph on generator indices.
pub fn skeleton(g: &CoxeterGraph) -> Arc<SimpleGraph> {
    let edges: Vec<(usize, usize)> = g
        .bonds()
        .keys()
        .map(|&(a, b)| (a as usize, b as usize))
        .collect();
    Arc::new(SimpleGraph::new(g.rank(), &edges).expect("bonds reference generators"))
}

fn check_coxeter_word(g: &CoxeterGraph, c: &Word) -> Result<()> {
    g.check_word(c)?;
    let mut seen = c.letters().to_vec();
    seen.sort_unstable();
    if seen.len() != g.rank() || seen.iter().enumerate().any(|(i, &s)| s as usize != i) {
        return Err(Error::NotACoxeterWord(g.format_word(c)));
    }
    Ok(())
}

/// Orients each bond `{s, t}` as `s -> t` when `s` comes first in `c`.
pub fn coxeter_to_orientation(g: &CoxeterGraph, c: &Word) -> Result<AcyclicOrientation> {
    check_coxeter_word(g, c)?;
    let mut rank = vec![0; g.rank()];
    for (i, &s) in c.letters().iter().enumerate() {
        rank[s as usize] = i;
    }
    Ok(AcyclicOrientation::from_ranking(skeleton(g), &rank))
}

/// Lexicographically least linear extension of the orientation, as a word.
pub fn orientation_to_coxeter(g: &CoxeterGraph, o: &AcyclicOrientation) -> Result<Word> {
    if *o.graph() != *skeleton(g) {
        return Err(Error::GraphMismatch(
            "orientation is not over the Coxeter graph".into(),
        ));
    }
    let n = g.rank();
    let mut indeg = vec![0usize; n];
    let arcs = o.directed_edges();
    for &(_, b) in &arcs {
        indeg[b] += 1;
    }
    let mut used = vec![false; n];
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .find(|&v| !used[v] && indeg[v] == 0)
            .expect("acyclic");
        used[v] = true;
        out.push(v as Gen);
        for &(a, b) in &arcs {
            if a == v {
                indeg[b] -= 1;
            }
        }
    }
    Ok(Word::new(out))
}

/// A Coxeter element: its orientation, least word and every word for it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterElement {
    pub word: Word,
    pub orientation: AcyclicOrientation,
    pub words: Vec<Word>,
}

/// All Coxeter elements, one per acyclic orientation, ordered by least word.
pub fn coxeter_elements(g: &CoxeterGraph) -> Result<Vec<CoxeterElement>> {
    let mut out = Vec::new();
    for o in all_acyclic_orientations(&skeleton(g))? {
        let mut words: Vec<Word> = o
            .poset()
            .linear_extensions(DEFAULT_EXTENSION_CAP)?
            .into_iter()
            .map(|ext| Word::new(ext.into_iter().map(|v| v as Gen).collect()))
            .collect();
        words.sort_unstable();
        out.push(CoxeterElement {
            word: words[0].clone(),
            orientation: o,
            words,
        });
    }
    out.sort_by(|a, b| a.word.cmp(&b.word));
    Ok(out)
}

/// Conjugacy classes of Coxeter elements, read off the toric classes of
/// the Coxeter graph. Each element is given by its least word.
pub fn coxeter_conjugacy_classes(g: &CoxeterGraph, cap: usize) -> Result<Vec<Vec<Word>>> {
    let mut classes = toric_classes(&skeleton(g), cap)?
        .iter()
        .map(|class| {
            let mut words = class
                .iter()
                .map(|o| orientation_to_coxeter(g, o))
                .collect::<Result<Vec<_>>>()?;
            words.sort_unstable();
            Ok(words)
        })
        .collect::<Result<Vec<_>>>()?;
    classes.sort();
    Ok(classes)
}

/// A word `v` with `v^-1 c1 v = c2`, built from the source/sink flips
/// joining the two orientations; `None` if they are not toric-equivalent.
pub fn coxeter_conjugator(
    g: &CoxeterGraph,
    c1: &Word,
    c2: &Word,
    cap: usize,
) -> Result<Option<Word>> {
    let o1 = coxeter_to_orientation(g, c1)?;
    let o2 = coxeter_to_orientation(g, c2)?;
    Ok(flip_path(&o1, &o2, cap)?.map(|vs| Word::new(vs.into_iter().map(|v| v as Gen).collect())))
}

fn odd_braid_factor_in(g: &CoxeterGraph, w: &[Gen]) -> bool {
    (0..w.len().saturating_sub(1)).any(|i| {
        let (a, b) = (w[i], w[i + 1]);
        match g.m_raw(a, b) {
            Some(m) if m >= 3 && m % 2 == 1 && a != b => {
                let m = m as usize;
                i + m <= w.len() && (0..m).all(|k| w[i + k] == if k % 2 == 0 { a } else { b })
            }
            _ => false,
        }
    })
}

/// A word of `R_tor(w)` containing `<s,t>_m` with odd `m >= 3`, if any.
pub fn odd_braid_witness(g: &CoxeterGraph, w: &Word, cap: usize) -> Result<Option<Word>> {
    Ok(rtor_words(g, w, cap)?
        .into_iter()
        .find(|u| odd_braid_factor_in(g, u.letters())))
}

pub fn odd_braid_obstruction(g: &CoxeterGraph, w: &Word, cap: usize) -> Result<bool> {
    Ok(odd_braid_witness(g, w, cap)?.is_some())
}

/// The alternating word `s t s t ...` of length `m`.
pub fn alternating(s: Gen, t: Gen, m: usize) -> Word {
    Word::new((0..m).map(|k| if k % 2 == 0 { s } else { t }).collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TfcConstruction {
    pub word: Word,
    pub tfc: bool,
    pub faux_cfc: bool,
}

/// Builds `w = <s,t>_m u` for an even endpoint `s` with neighbour `t` and a
/// CFC word `u` avoiding both, and classifies it.
pub fn tfc_constructor(
    g: &CoxeterGraph,
    s: Gen,
    t: Gen,
    u: &Word,
    cap: usize,
) -> Result<TfcConstruction> {
    g.check_word(&Word::new(vec![s, t]))?;
    g.check_word(u)?;
    if g.neighbors(s) != [t] {
        return Err(Error::NotAnEndpoint(g.name(s).to_owned()));
    }
    let m = match g.m(s, t)? {
        Bond::Finite(m) if m % 2 == 0 => m as usize,
        _ => {
            return Err(Error::OddSpoke {
                s: g.name(s).to_owned(),
                t: g.name(t).to_owned(),
            })
        }
    };
    if u.letters().iter().any(|&x| x == s || x == t) {
        return Err(Error::WordUsesSpoke(g.format_word(u)));
    }
    if !is_reduced(g, u, cap)? || !is_cfc(g, u, cap)? {
        return Err(Error::NotCfc(g.format_word(u)));
    }
    let word = alternating(s, t, m).concat(u);
    if !is_reduced(g, &word, cap)? {
        return Err(Error::NotReduced(g.format_word(&word)));
    }
    let tfc = is_tfc(g, &word, cap)?;
    Ok(TfcConstruction {
        faux_cfc: tfc && !is_cfc(g, &word, cap)?,
        word,
        tfc,
    })
}

/// Three-way verdict for a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TfcKind {
    Cfc,
    FauxCfc,
    NotTfc,
}

impl TfcKind {
    pub fn of(g: &CoxeterGraph, w: &Word, cap: usize) -> Result<Self> {
        if !is_tfc(g, w, cap)? {
            return Ok(TfcKind::NotTfc);
        }
        Ok(if is_cfc(g, w, cap)? {
            TfcKind::Cfc
        } else {
            TfcKind::FauxCfc
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            TfcKind::Cfc => "cfc",
            TfcKind::FauxCfc => "fauxCfc",
            TfcKind::NotTfc => "notTfc",
        }
    }
}

pub const PROBE_NOTE: &str = "empirical probe of an open conjecture; evidence only, not a proof";

/// One instance of the shortening conjecture: if `<s,t>_m u` is faux CFC
/// and `u` is torically reduced, then `<s,t>_{m-2} u` should be TFC.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureProbe {
    /// Rotation of the input word that has the shape `<s,t>_m u`.
    pub rotation: usize,
    pub word: Word,
    pub s: Gen,
    pub t: Gen,
    pub m: usize,
    pub u: Word,
    pub word_faux_cfc: bool,
    pub u_torically_reduced: bool,
    pub shortened: Word,
    pub shortened_kind: TfcKind,
    /// Hypothesis holds.
    pub applies: bool,
    /// Not a counterexample: the hypothesis fails or the shortened word is TFC.
    pub consistent: bool,
    pub note: &'static str,
}

/// First rotation of `w` starting with a full alternating factor `<s,t>_m`.
pub fn braid_shape(g: &CoxeterGraph, w: &Word) -> Option<(usize, Gen, Gen, usize)> {
    (0..w.len()).find_map(|k| {
        let r = w.rotated(k);
        let l = r.letters();
        if l.len() < 2 || l[0] == l[1] {
            return None;
        }
        let m = g.m_raw(l[0], l[1])? as usize;
        (m >= 3 && m <= l.len() && alternating(l[0], l[1], m).letters() == &l[..m])
            .then_some((k, l[0], l[1], m))
    })
}

pub fn conjecture_probe(g: &CoxeterGraph, w: &Word, cap: usize) -> Result<ConjectureProbe> {
    g.check_word(w)?;
    let (rotation, s, t, m) =
        braid_shape(g, w).ok_or_else(|| Error::ShapeMismatch(g.format_word(w)))?;
    let word = w.rotated(rotation);
    let u = Word::from(&word.letters()[m..]);
    let word_faux_cfc = is_faux_cfc(g, &word, cap)?;
    let u_torically_reduced = toric_reduction(g, &u, cap)? == ToricReduction::Reduced;
    let shortened = alternating(s, t, m - 2).concat(&u);
    let shortened_kind = TfcKind::of(g, &shortened, cap)?;
    let applies = word_faux_cfc && u_torically_reduced;
    Ok(ConjectureProbe {
        rotation,
        word,
        s,
        t,
        m,
        u,
        word_faux_cfc,
        u_torically_reduced,
        shortened,
        shortened_kind,
        applies,
        consistent: !applies || shortened_kind != TfcKind::NotTfc,
        note: PROBE_NOTE,
    })
}

/// Positive definiteness of the Gram matrix `-cos(pi / m(s,t))`, the
/// classical criterion for a Coxeter group to be finite.
pub fn is_finite_type(g: &CoxeterGraph) -> bool {
    let n = g.rank();
    let mut a = vec![0f64; n * n];
    for i in 0..n {
        for j in 0..n {
            a[i * n + j] = match g.m_raw(i as Gen, j as Gen) {
                Some(m) => -(std::f64::consts::PI / m as f64).cos(),
                None => -1.0,
            };
        }
    }
    // Cholesky; a non-positive pivot means not positive definite.
    for j in 0..n {
        let d = a[j * n + j] - (0..j).map(|k| a[j * n + k] * a[j * n + k]).sum::<f64>();
        if d <= 1e-9 {
            return false;
        }
        let d = d.sqrt();
        a[j * n + j] = d;
        for i in j + 1..n {
            let v = a[i * n + j] - (0..j).map(|k| a[i * n + k] * a[j * n + k]).sum::<f64>();
            a[i * n + j] = v / d;
        }
    }
    true
}

/// Connected components of the Coxeter graph restricted to `subset`.
pub fn components(g: &CoxeterGraph, subset: &[Gen]) -> Vec<Vec<Gen>> {
    let mut rest: Vec<Gen> = subset.to_vec();
    rest.sort_unstable();
    rest.dedup();
    let mut out = Vec::new();
    while let Some(start) = rest.first().copied() {
        let mut comp = vec![start];
        let mut i = 0;
        while i < comp.len() {
            let x = comp[i];
            for &y in &rest {
                if !comp.contains(&y) && !g.commute_raw(x, y) {
                    comp.push(y);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        rest.retain(|y| !comp.contains(y));
        out.push(comp);
    }
    out
}

/// Every component of the parabolic subgroup on `subset` is infinite.
pub fn only_infinite_components(g: &CoxeterGraph, subset: &[Gen]) -> bool {
    !subset.is_empty()
        && components(g, subset)
            .iter()
            .all(|c| !is_finite_type(&g.induced_subgraph(c).expect("subset of generators")))
}

/// A torically reduced conjugate that is not torically equivalent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CvmtCandidate {
    pub element: Word,
    pub conjugate: Word,
    pub conjugator: Word,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CvmtProbe {
    pub max_length: usize,
    pub conjugator_radius: usize,
    /// Torically reduced elements with only infinite components in their support.
    pub elements_examined: usize,
    pub conjugates_examined: usize,
    pub candidates: Vec<CvmtCandidate>,
    pub note: &'static str,
}

/// Searches for torically reduced elements whose support has only infinite
/// components and that are conjugate (by a word of length at most
/// `radius`) to a torically reduced element outside their toric class.
pub fn cvmt_probe(
    g: &CoxeterGraph,
    max_length: usize,
    radius: usize,
    cap: usize,
) -> Result<CvmtProbe> {
    let elements = elements_up_to(g, max_length, cap)?;
    let conjugators: Vec<Word> = elements_up_to(g, radius, cap)?
        .into_iter()
        .map(|orbit| orbit[0].clone())
        .collect();
    let mut probe = CvmtProbe {
        max_length,
        conjugator_radius: radius,
        elements_examined: 0,
        conjugates_examined: 0,
        candidates: Vec::new(),
        note: PROBE_NOTE,
    };
    let mut done: HashSet<Word> = HashSet::new();
    for orbit in &elements {
        let w = &orbit[0];
        if done.contains(w) || !only_infinite_components(g, &w.support()) {
            continue;
        }
        if toric_reduction(g, w, cap)? != ToricReduction::Reduced {
            continue;
        }
        let class: HashSet<Word> = rtor_words(g, w, cap)?.into_iter().collect();
        for e in torically_equivalent_elements(g, w, cap)? {
            done.insert(e.element.word);
        }
        probe.elements_examined += 1;
        for v in &conjugators {
            let c = crate::braid::conjugate(g, v, w, cap)?.word;
            probe.conjugates_examined += 1;
            if class.contains(&c) || toric_reduction(g, &c, cap)? != ToricReduction::Reduced {
                continue;
            }
            probe.candidates.push(CvmtCandidate {
                element: w.clone(),
                conjugate: c,
                conjugator: v.clone(),
            });
        }
    }
    Ok(probe)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::DEFAULT_ORBIT_CAP as CAP;

    fn graph(gens: &[&str], bonds: &[(&str, &str, u32)]) -> CoxeterGraph {
        let b: Vec<_> = bonds
            .iter()
            .map(|&(a, b, m)| (a, b, Bond::Finite(m)))
            .collect();
        CoxeterGraph::new(gens, &b).unwrap()
    }

    fn b2() -> CoxeterGraph {
        graph(&["s1", "s2", "s3"], &[("s1", "s2", 4), ("s2", "s3", 3)])
    }

    fn a3_affine() -> CoxeterGraph {
        graph(
            &["s1", "s2", "s3", "s4"],
            &[
                ("s1", "s2", 3),
                ("s2", "s3", 3),
                ("s3", "s4", 3),
                ("s1", "s4", 3),
            ],
        )
    }

    fn w(g: &CoxeterGraph, s: &str) -> Word {
        g.parse_word(s).unwrap()
    }

    #[test]
    fn running_example_report() {
        let g = b2();
        let r = classify(&g, &w(&g, "s3 s1 s2 s1 s2"), CAP).unwrap();
        assert!(r.reduced && r.torically_reduced && r.tfc && r.faux_cfc);
        assert!(!r.fc && !r.cfc);
        assert_eq!(r.counts.reduced_words, Some(3));
        assert_eq!(r.counts.commutativity_classes, Some(2));
        assert_eq!(r.counts.cyclic_words, Some(2));
        assert_eq!(r.counts.cyclic_commutativity_classes, Some(1));
        assert_eq!(r.counts.toric_words, Some(10));
        assert_eq!(r.counts.toric_elements, Some(4));
    }

    #[test]
    fn fc_verdicts() {
        let h3 = graph(&["s1", "s2", "s3"], &[("s1", "s2", 5), ("s2", "s3", 3)]);
        assert!(is_fc(&h3, &w(&h3, "s3 s1 s2 s1 s2"), CAP).unwrap());
        let g = b2();
        assert!(!is_fc(&g, &w(&g, "s3 s1 s2 s1 s2"), CAP).unwrap());
        assert!(is_fc(&g, &w(&g, "s2 s1 s3"), CAP).unwrap());
    }

    #[test]
    fn coxeter_bijection() {
        let g = a3_affine();
        let c1 = w(&g, "s1 s2 s3 s4");
        let o = coxeter_to_orientation(&g, &c1).unwrap();
        assert_eq!(o.directed_edges(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert_eq!(orientation_to_coxeter(&g, &o).unwrap(), c1);
        assert!(matches!(
            coxeter_to_orientation(&g, &w(&g, "s1 s2 s3")),
            Err(Error::NotACoxeterWord(_))
        ));
        let els = coxeter_elements(&g).unwrap();
        assert_eq!(els.len(), 14);
        assert_eq!(els.iter().map(|e| e.words.len()).sum::<usize>(), 24);
        let sizes: Vec<usize> = coxeter_conjugacy_classes(&g, CAP)
            .unwrap()
            .iter()
            .map(Vec::len)
            .collect();
        let mut sorted = sizes.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![4, 4, 6]);
    }

    #[test]
    fn conjugators_conjugate() {
        let g = a3_affine();
        let c2 = w(&g, "s1 s3 s2 s4");
        let target = w(&g, "s3 s1 s4 s2");
        let v = coxeter_conjugator(&g, &c2, &target, CAP).unwrap().unwrap();
        let lhs = crate::braid::conjugate(&g, &v, &c2, CAP).unwrap();
        assert_eq!(lhs, normal_form(&g, &target, CAP).unwrap());
        assert_eq!(
            coxeter_conjugator(&g, &c2, &w(&g, "s1 s2 s3 s4"), CAP).unwrap(),
            None
        );
    }

    #[test]
    fn small_conjugacy_partitions() {
        let a2 = graph(&["s1", "s2"], &[("s1", "s2", 3)]);
        assert_eq!(
            coxeter_conjugacy_classes(&a2, CAP).unwrap(),
            vec![vec![w(&a2, "s1 s2"), w(&a2, "s2 s1")]]
        );
        let a1 = graph(&["s1"], &[]);
        assert_eq!(
            coxeter_conjugacy_classes(&a1, CAP).unwrap(),
            vec![vec![w(&a1, "s1")]]
        );
    }

    #[test]
    fn logarithmic() {
        let c2 = graph(&["s0", "s1", "s2"], &[("s0", "s1", 4), ("s1", "s2", 4)]);
        let p = logarithmic_probe(&c2, &w(&c2, "s0 s1 s0 s1 s2"), 2, CAP).unwrap();
        assert_eq!(p.violation, Some(2));
        assert_eq!(p.power_lengths, vec![5, 8]);
        let a1 = graph(&["s"], &[]);
        assert_eq!(
            logarithmic_probe(&a1, &w(&a1, "s"), 2, CAP)
                .unwrap()
                .violation,
            Some(2)
        );
        let a2 = graph(
            &["s0", "s1", "s2"],
            &[("s0", "s1", 3), ("s1", "s2", 3), ("s0", "s2", 3)],
        );
        let p = logarithmic_probe(&a2, &w(&a2, "s0 s1 s2"), 4, CAP).unwrap();
        assert_eq!(p.violation, None);
        assert_eq!(p.power_lengths, vec![3, 6, 9, 12]);
    }

    #[test]
    fn odd_braids() {
        let g = b2();
        assert!(!odd_braid_obstruction(&g, &w(&g, "s3 s1 s2 s1 s2"), CAP).unwrap());
        let a2 = graph(
            &["s0", "s1", "s2"],
            &[("s0", "s1", 3), ("s1", "s2", 3), ("s0", "s2", 3)],
        );
        assert!(odd_braid_obstruction(&a2, &w(&a2, "s2 s0 s1 s0"), CAP).unwrap());
        assert!(!odd_braid_obstruction(&g, &Word::empty(), CAP).unwrap());
    }

    #[test]
    fn constructor() {
        let g = b2();
        let c = tfc_constructor(&g, 0, 1, &w(&g, "s3"), CAP).unwrap();
        assert_eq!(c.word, w(&g, "s1 s2 s1 s2 s3"));
        assert!(c.tfc && c.faux_cfc);
        assert_eq!(
            tfc_constructor(&g, 0, 1, &w(&g, "s1"), CAP)
                .unwrap_err()
                .kind(),
            "WordUsesSpoke"
        );
        assert_eq!(
            tfc_constructor(&g, 1, 2, &w(&g, "s1"), CAP)
                .unwrap_err()
                .kind(),
            "NotAnEndpoint"
        );
        assert_eq!(
            tfc_constructor(&g, 2, 1, &w(&g, "s1"), CAP)
                .unwrap_err()
                .kind(),
            "OddSpoke"
        );
    }

    #[test]
    fn finite_type_detection() {
        assert!(is_finite_type(&b2()));
        assert!(is_finite_type(&graph(
            &["a", "b", "c"],
            &[("a", "b", 5), ("b", "c", 3)]
        )));
        assert!(!is_finite_type(&a3_affine()));
        assert!(!is_finite_type(&graph(
            &["a", "b", "c"],
            &[("a", "b", 4), ("b", "c", 4)]
        )));
        assert!(!is_finite_type(
            &CoxeterGraph::new(&["a", "b"], &[("a", "b", Bond::Infinite)]).unwrap()
        ));
        assert_eq!(components(&b2(), &[0, 2]), vec![vec![0], vec![2]]);
    }
}
