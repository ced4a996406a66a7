//! Graphviz output for heaps, toric heaps and orientations.
//!
//! Nodes are named `pos1, pos2, ...` after 1-based letter positions (or
//! vertex indices for orientations) and emitted in order.

use std::fmt::Write;

use crate::cyclic::ToricHeap;
use crate::error::Result;
use crate::heap::Heap;
use crate::toric::AcyclicOrientation;

fn render(name: &str, labels: &[String], edges: &[(usize, usize)], prefix: &str) -> String {
    let mut out = format!("digraph {name} {{\n");
    for (i, l) in labels.iter().enumerate() {
        let _ = writeln!(
            out,
            "  {prefix}{} [label=\"{}\"];",
            i + 1,
            l.replace('"', "\\\"")
        );
    }
    let mut edges = edges.to_vec();
    edges.sort_unstable();
    for (a, b) in edges {
        let _ = writeln!(out, "  {prefix}{} -> {prefix}{};", a + 1, b + 1);
    }
    out.push_str("}\n");
    out
}

fn heap_labels(g: &crate::coxeter::CoxeterGraph, letters: &[crate::coxeter::Gen]) -> Vec<String> {
    letters.iter().map(|&s| g.name(s).to_owned()).collect()
}

/// Hasse diagram of a heap.
pub fn heap_dot(h: &Heap) -> String {
    render(
        "heap",
        &heap_labels(h.coxeter_graph(), h.labels()),
        &h.hasse_edges(),
        "pos",
    )
}

/// Toric Hasse diagram of a toric heap.
pub fn toric_heap_dot(t: &ToricHeap, cap: usize) -> Result<String> {
    Ok(render(
        "toric_heap",
        &heap_labels(t.coxeter_graph(), t.word().letters()),
        &t.toric_hasse_edges(cap)?,
        "pos",
    ))
}

/// An acyclic orientation; vertices are labeled by their 1-based index
/// when `labels` is empty.
pub fn orientation_dot(o: &AcyclicOrientation, labels: &[String]) -> String {
    let default: Vec<String>;
    let labels = if labels.is_empty() {
        default = (1..=o.vertex_count()).map(|i| i.to_string()).collect();
        &default
    } else {
        labels
    };
    render("orientation", labels, &o.directed_edges(), "v")
}
