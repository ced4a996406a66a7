//! JSON bodies for each subcommand. Letter positions are 1-based, as in DOT.

use serde_json::{json, Value};
use toriheap::classify::{is_finite_type, skeleton};
use toriheap::dot::{heap_dot as render_heap, orientation_dot, toric_heap_dot};
use toriheap::{AcyclicOrientation, CoxeterGraph, CyclicWord, Result, Word};

pub const SCHEMA_VERSION: u32 = 1;

fn words(g: &CoxeterGraph, ws: &[Word]) -> Value {
    ws.iter().map(|w| g.format_word(w)).collect()
}

fn cyclic(g: &CoxeterGraph, cs: &[CyclicWord]) -> Value {
    cs.iter().map(|c| c.display(g).to_string()).collect()
}

fn positions(edges: &[(usize, usize)]) -> Value {
    let mut e = edges.to_vec();
    e.sort_unstable();
    e.iter().map(|&(a, b)| json!([a + 1, b + 1])).collect()
}

fn orientation(g: &CoxeterGraph, o: &AcyclicOrientation) -> Value {
    let arcs: Value = o
        .directed_edges()
        .iter()
        .map(|&(a, b)| json!([g.names()[a], g.names()[b]]))
        .collect();
    json!({ "bits": o.bitstring(), "arcs": arcs })
}

pub fn graph_summary(g: &CoxeterGraph) -> Value {
    json!({
        "rank": g.rank(),
        "generators": g.names(),
        "bonds": g.to_spec().bonds,
        "finiteType": is_finite_type(g),
    })
}

pub fn orientations(g: &CoxeterGraph) -> Result<Value> {
    let all = toriheap::all_acyclic_orientations(&skeleton(g))?;
    Ok(json!({
        "count": all.len(),
        "orientations": all.iter().map(|o| orientation(g, o)).collect::<Value>(),
    }))
}

pub fn orientations_dot(g: &CoxeterGraph) -> Result<String> {
    let names = g.names().to_vec();
    Ok(toriheap::all_acyclic_orientations(&skeleton(g))?
        .iter()
        .map(|o| orientation_dot(o, &names))
        .collect())
}

pub fn toric_classes(g: &CoxeterGraph, cap: usize) -> Result<Value> {
    let classes = toriheap::toric_classes(&skeleton(g), cap)?;
    Ok(json!({
        "count": classes.len(),
        "sizes": classes.iter().map(Vec::len).collect::<Vec<_>>(),
        "classes": classes
            .iter()
            .map(|c| c.iter().map(|o| orientation(g, o)).collect::<Value>())
            .collect::<Value>(),
    }))
}

pub fn tutte(g: &CoxeterGraph, x: i64, y: i64) -> Result<Value> {
    let t = toriheap::tutte(&skeleton(g), x, y)?;
    let value = match i64::try_from(t) {
        Ok(v) => json!(v),
        Err(_) => json!(t.to_string()),
    };
    Ok(json!({ "x": x, "y": y, "value": value }))
}

pub fn reduce(g: &CoxeterGraph, w: &Word, cap: usize) -> Result<Value> {
    let nf = toriheap::normal_form(g, w, cap)?;
    Ok(json!({
        "normalForm": g.format_word(&nf.word),
        "length": nf.length,
        "reduced": nf.length == w.len(),
    }))
}

pub fn reduced_words(g: &CoxeterGraph, w: &Word, cap: usize) -> Result<Value> {
    let ws = toriheap::reduced_words(g, w, cap)?;
    Ok(json!({ "count": ws.len(), "words": words(g, &ws) }))
}

pub fn comm_classes(g: &CoxeterGraph, w: &Word, cap: usize) -> Result<Value> {
    let classes = toriheap::commutativity_classes(g, w, cap)?;
    Ok(json!({
        "count": classes.len(),
        "sizes": classes.iter().map(Vec::len).collect::<Vec<_>>(),
        "classes": classes.iter().map(|c| words(g, c)).collect::<Value>(),
    }))
}

pub fn classify(g: &CoxeterGraph, w: &Word, cap: usize) -> Result<Value> {
    let r = toriheap::classify(g, w, cap)?;
    let c = &r.counts;
    let wit = &r.witnesses;
    Ok(json!({
        "word": g.format_word(&r.word),
        "reduced": r.reduced,
        "cyclicallyReduced": r.cyclically_reduced,
        "cyclicallyReducedWord": r.cyclically_reduced_word,
        "toricallyReduced": r.torically_reduced,
        "fc": r.fc,
        "cfc": r.cfc,
        "tfc": r.tfc,
        "fauxCfc": r.faux_cfc,
        "counts": {
            "reducedWords": c.reduced_words,
            "commutativityClasses": c.commutativity_classes,
            "cyclicWords": c.cyclic_words,
            "cyclicCommutativityClasses": c.cyclic_commutativity_classes,
            "toricWords": c.toric_words,
            "toricElements": c.toric_elements,
        },
        "witnesses": {
            "normalForm": g.format_word(&wit.normal_form),
            "nonReducedRotation": wit.non_reduced_rotation.as_ref().map(|u| g.format_word(u)),
            "cfcFailure": wit.cfc_failure.as_ref().map(|u| g.format_word(u)),
            "toricRefutation": wit.toric_refutation.as_ref().map(|p| cyclic(g, p)),
        },
    }))
}

pub fn logarithmic(g: &CoxeterGraph, w: &Word, k: usize, cap: usize) -> Result<Value> {
    let p = toriheap::logarithmic_probe(g, w, k, cap)?;
    Ok(json!({
        "length": p.length,
        "kMax": p.k_max,
        "powerLengths": p.power_lengths,
        "violation": p.violation,
        "holdsUpToK": p.violation.is_none(),
        "note": "a result without violation is checked only up to kMax",
    }))
}

pub fn conjecture(g: &CoxeterGraph, w: &Word, cap: usize) -> Result<Value> {
    let p = toriheap::conjecture_probe(g, w, cap)?;
    Ok(json!({
        "rotation": p.rotation,
        "word": g.format_word(&p.word),
        "s": g.name(p.s),
        "t": g.name(p.t),
        "m": p.m,
        "u": g.format_word(&p.u),
        "wordFauxCfc": p.word_faux_cfc,
        "uToricallyReduced": p.u_torically_reduced,
        "shortened": g.format_word(&p.shortened),
        "shortenedKind": p.shortened_kind.name(),
        "applies": p.applies,
        "consistent": p.consistent,
        "note": p.note,
    }))
}

pub fn rtor(g: &CoxeterGraph, w: &Word, cap: usize) -> Result<Value> {
    let class = toriheap::rtor_cyclic_class(g, w, cap)?;
    Ok(json!({ "count": class.len(), "cyclicWords": cyclic(g, &class) }))
}

pub fn ctor(g: &CoxeterGraph, w: &Word, cap: usize) -> Result<Value> {
    let class = toriheap::ctor_class(g, w, cap)?;
    Ok(json!({ "count": class.len(), "cyclicWords": cyclic(g, &class) }))
}

pub fn decompose(g: &CoxeterGraph, w: &Word, cap: usize) -> Result<Value> {
    let classes = toriheap::cyclic_decomposition(g, w, cap)?;
    Ok(json!({
        "count": classes.len(),
        "sizes": classes.iter().map(Vec::len).collect::<Vec<_>>(),
        "classes": classes.iter().map(|c| cyclic(g, c)).collect::<Value>(),
    }))
}

pub fn elements(g: &CoxeterGraph, w: &Word, cap: usize) -> Result<Value> {
    let words_all = toriheap::rtor_words(g, w, cap)?;
    let els = toriheap::torically_equivalent_elements(g, w, cap)?;
    Ok(json!({
        "wordCount": words_all.len(),
        "count": els.len(),
        "elements": els
            .iter()
            .map(|e| json!({
                "normalForm": g.format_word(&e.element.word),
                "words": words(g, &e.words),
            }))
            .collect::<Value>(),
    }))
}

fn nodes(g: &CoxeterGraph, w: &Word) -> Value {
    w.letters()
        .iter()
        .enumerate()
        .map(|(i, &s)| json!({ "pos": i + 1, "label": g.name(s) }))
        .collect()
}

pub fn heap(g: &CoxeterGraph, w: &Word) -> Result<Value> {
    let h = toriheap::heap_of_word(g, w)?;
    Ok(json!({
        "nodes": nodes(g, w),
        "hasse": positions(&h.hasse_edges()),
        "order": positions(&h.closure_edges()),
    }))
}

pub fn heap_dot(g: &CoxeterGraph, w: &Word) -> Result<String> {
    Ok(render_heap(&toriheap::heap_of_word(g, w)?))
}

pub fn linexts(g: &CoxeterGraph, w: &Word, cap: usize) -> Result<Value> {
    let exts = toriheap::heap_of_word(g, w)?.linear_extensions(cap)?;
    Ok(json!({ "count": exts.len(), "words": words(g, &exts) }))
}

pub fn toric_heap(g: &CoxeterGraph, w: &Word, ext_cap: usize, class_cap: usize) -> Result<Value> {
    let t = toriheap::toric_heap_of_word(g, w)?;
    Ok(json!({
        "nodes": nodes(g, w),
        "representative": positions(&t.toric().representative().directed_edges()),
        "classSize": t.toric().class(class_cap)?.len(),
        "hasse": positions(&t.toric_hasse_edges(ext_cap)?),
        "closure": positions(&t.toric().toric_closure_arcs()),
    }))
}

pub fn toric_dot(g: &CoxeterGraph, w: &Word, cap: usize) -> Result<String> {
    toric_heap_dot(&toriheap::toric_heap_of_word(g, w)?, cap)
}

pub fn ltor(g: &CoxeterGraph, w: &Word, cap: usize) -> Result<Value> {
    let l = toriheap::toric_heap_of_word(g, w)?.ltor(cap)?;
    Ok(json!({ "count": l.len(), "cyclicWords": cyclic(g, &l) }))
}

pub fn toric_hasse(g: &CoxeterGraph, w: &Word, cap: usize) -> Result<Value> {
    let t = toriheap::toric_heap_of_word(g, w)?;
    Ok(json!({ "nodes": nodes(g, w), "edges": positions(&t.toric_hasse_edges(cap)?) }))
}

pub fn toric_closure(g: &CoxeterGraph, w: &Word) -> Result<Value> {
    let t = toriheap::toric_heap_of_word(g, w)?;
    Ok(json!({ "nodes": nodes(g, w), "arcs": positions(&t.toric().toric_closure_arcs()) }))
}

pub fn coxeter_elements(g: &CoxeterGraph) -> Result<Value> {
    let els = toriheap::coxeter_elements(g)?;
    Ok(json!({
        "count": els.len(),
        "wordCount": els.iter().map(|e| e.words.len()).sum::<usize>(),
        "elements": els
            .iter()
            .map(|e| json!({
                "word": g.format_word(&e.word),
                "orientation": orientation(g, &e.orientation),
                "words": words(g, &e.words),
            }))
            .collect::<Value>(),
    }))
}

pub fn conjugacy(g: &CoxeterGraph, cap: usize) -> Result<Value> {
    let classes = toriheap::coxeter_conjugacy_classes(g, cap)?;
    Ok(json!({
        "count": classes.len(),
        "sizes": classes.iter().map(Vec::len).collect::<Vec<_>>(),
        "classes": classes.iter().map(|c| words(g, c)).collect::<Value>(),
    }))
}
