//! Acyclic orientations, source-to-sink equivalence and toric posets.
//!
//! A toric poset over a graph is an equivalence class of acyclic
//! orientations under flipping sources into sinks. Everything here is
//! combinatorial: classes are materialized by breadth-first search.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::search::closure;

pub const DEFAULT_CLASS_CAP: usize = 1_000_000;
/// Largest edge count accepted by exhaustive orientation enumeration.
pub const MAX_ENUMERATION_EDGES: usize = 24;
/// Largest vertex count accepted when enumerating cyclic orderings.
pub const MAX_TOTAL_EXTENSION_VERTICES: usize = 10;
/// Largest edge count accepted by the Tutte evaluator.
pub const MAX_TUTTE_EDGES: usize = 24;

/// Simple undirected graph on `0..n` with edges stored as sorted pairs `u < v`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    // For each vertex, (edge index, neighbour).
    incident: Vec<Vec<(usize, usize)>>,
}

impl SimpleGraph {
    /// Builds a graph; duplicate edges are merged, loops rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut norm = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::VertexOutOfRange {
                    index: a.max(b),
                    len: n,
                });
            }
            if a == b {
                return Err(Error::MalformedGraph(format!("loop at vertex {a}")));
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        norm.dedup();
        let mut incident = vec![Vec::new(); n];
        for (i, &(u, v)) in norm.iter().enumerate() {
            incident[u].push((i, v));
            incident[v].push((i, u));
        }
        Ok(SimpleGraph {
            n,
            edges: norm,
            incident,
        })
    }

    pub fn edgeless(n: usize) -> Self {
        SimpleGraph::new(n, &[]).unwrap()
    }

    pub fn path(n: usize) -> Self {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        SimpleGraph::new(n, &e).unwrap()
    }

    pub fn cycle(n: usize) -> Self {
        let mut e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        if n >= 3 {
            e.push((0, n - 1));
        }
        SimpleGraph::new(n, &e).unwrap()
    }

    pub fn complete(n: usize) -> Self {
        let e: Vec<_> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        SimpleGraph::new(n, &e).unwrap()
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order (sorted, `u < v`).
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        let key = (a.min(b), a.max(b));
        self.edges.binary_search(&key).ok()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edge_index(a, b).is_some()
    }

    /// Incident edges of `v` as (edge index, other endpoint).
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.incident[v]
    }

    pub fn without_edge(&self, idx: usize) -> SimpleGraph {
        let mut e = self.edges.clone();
        e.remove(idx);
        SimpleGraph::new(self.n, &e).unwrap()
    }

    /// True iff every edge of `self` is an edge of `other` on the same vertices.
    pub fn is_subgraph_of(&self, other: &SimpleGraph) -> bool {
        self.n == other.n && self.edges.iter().all(|&(u, v)| other.has_edge(u, v))
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph({}, {:?})", self.n, self.edges)
    }
}

/// An acyclic orientation; bit `i` set means edge `i = (u, v)` points `u -> v`.
#[derive(Clone)]
pub struct AcyclicOrientation {
    graph: Arc<SimpleGraph>,
    dirs: Bits,
}

impl PartialEq for AcyclicOrientation {
    fn eq(&self, other: &Self) -> bool {
        self.dirs == other.dirs
            && (Arc::ptr_eq(&self.graph, &other.graph) || self.graph == other.graph)
    }
}

impl Eq for AcyclicOrientation {}

impl std::hash::Hash for AcyclicOrientation {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.dirs.hash(state);
    }
}

impl fmt::Debug for AcyclicOrientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.directed_edges())
    }
}

fn is_acyclic(g: &SimpleGraph, dirs: &Bits) -> bool {
    let mut indeg = vec![0usize; g.n];
    for (i, &(u, v)) in g.edges.iter().enumerate() {
        indeg[if dirs.get(i) { v } else { u }] += 1;
    }
    let mut ready: Vec<usize> = (0..g.n).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(x) = ready.pop() {
        seen += 1;
        for &(e, y) in &g.incident[x] {
            if head_of(g, dirs, e) == y {
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    ready.push(y);
                }
            }
        }
    }
    seen == g.n
}

#[inline]
fn head_of(g: &SimpleGraph, dirs: &Bits, e: usize) -> usize {
    let (u, v) = g.edges[e];
    if dirs.get(e) {
        v
    } else {
        u
    }
}

#[inline]
fn is_source_in(g: &SimpleGraph, dirs: &Bits, v: usize) -> bool {
    g.incident[v].iter().all(|&(e, _)| head_of(g, dirs, e) != v)
}

#[inline]
fn is_sink_in(g: &SimpleGraph, dirs: &Bits, v: usize) -> bool {
    g.incident[v].iter().all(|&(e, _)| head_of(g, dirs, e) == v)
}

fn flipped(g: &SimpleGraph, dirs: &Bits, v: usize) -> Bits {
    let mut d = dirs.clone();
    for &(e, _) in &g.incident[v] {
        d.toggle(e);
    }
    d
}

impl AcyclicOrientation {
    /// Orientation from per-edge bits (canonical edge order).
    pub fn from_bits(graph: Arc<SimpleGraph>, dirs: Bits) -> Result<Self> {
        if dirs.len() != graph.edge_count() {
            return Err(Error::GraphMismatch(format!(
                "{} direction bits for {} edges",
                dirs.len(),
                graph.edge_count()
            )));
        }
        if !is_acyclic(&graph, &dirs) {
            return Err(Error::NotAcyclic);
        }
        Ok(AcyclicOrientation { graph, dirs })
    }

    /// Orientation of `graph` given by a list of directed edges covering it.
    pub fn from_directed(graph: Arc<SimpleGraph>, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut dirs = Bits::new(graph.edge_count());
        let mut covered = vec![false; graph.edge_count()];
        for &(a, b) in arcs {
            let e = graph.edge_index(a, b).ok_or_else(|| {
                Error::GraphMismatch(format!("{a} -> {b} is not an edge of the graph"))
            })?;
            covered[e] = true;
            dirs.set(e, a < b);
        }
        if covered.iter().any(|c| !c) {
            return Err(Error::GraphMismatch("not every edge is oriented".into()));
        }
        Self::from_bits(graph, dirs)
    }

    /// Graph with all edges directed by `arcs`.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let graph = Arc::new(SimpleGraph::new(n, arcs)?);
        Self::from_directed(graph, arcs)
    }

    /// Orientation `u -> v` whenever `key[u] < key[v]` (keys distinct on edges).
    pub fn from_ranking(graph: Arc<SimpleGraph>, key: &[usize]) -> Self {
        let mut dirs = Bits::new(graph.edge_count());
        for (i, &(u, v)) in graph.edges.iter().enumerate() {
            dirs.set(i, key[u] < key[v]);
        }
        AcyclicOrientation { graph, dirs }
    }

    /// Parses a bitstring over the canonical edge order.
    pub fn from_bitstring(graph: Arc<SimpleGraph>, s: &str) -> Result<Self> {
        let mut dirs = Bits::new(s.chars().count());
        for (i, c) in s.chars().enumerate() {
            match c {
                '1' => dirs.set(i, true),
                '0' => {}
                _ => return Err(Error::MalformedGraph(format!("bad direction bit {c:?}"))),
            }
        }
        Self::from_bits(graph, dirs)
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn shared_graph(&self) -> &Arc<SimpleGraph> {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.n
    }

    pub fn bits(&self) -> &Bits {
        &self.dirs
    }

    pub fn bitstring(&self) -> String {
        self.dirs.to_string()
    }

    /// Directed edges in canonical edge order.
    pub fn directed_edges(&self) -> Vec<(usize, usize)> {
        self.graph
            .edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| if self.dirs.get(i) { (u, v) } else { (v, u) })
            .collect()
    }

    /// Direction of the edge `{a, b}`: `Some(true)` iff it points `a -> b`.
    pub fn points(&self, a: usize, b: usize) -> Option<bool> {
        let e = self.graph.edge_index(a, b)?;
        Some(self.dirs.get(e) == (a < b))
    }

    pub fn is_source(&self, v: usize) -> bool {
        is_source_in(&self.graph, &self.dirs, v)
    }

    pub fn is_sink(&self, v: usize) -> bool {
        is_sink_in(&self.graph, &self.dirs, v)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.graph.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                index: v,
                len: self.graph.n,
            })
        }
    }

    /// Turns the source `v` into a sink.
    pub fn flip_source(&self, v: usize) -> Result<Self> {
        self.check_vertex(v)?;
        if !self.is_source(v) {
            return Err(Error::NotASource(v));
        }
        Ok(self.flip_unchecked(v))
    }

    /// Turns the sink `v` into a source.
    pub fn flip_sink(&self, v: usize) -> Result<Self> {
        self.check_vertex(v)?;
        if !self.is_sink(v) {
            return Err(Error::NotASink(v));
        }
        Ok(self.flip_unchecked(v))
    }

    fn flip_unchecked(&self, v: usize) -> Self {
        AcyclicOrientation {
            graph: self.graph.clone(),
            dirs: flipped(&self.graph, &self.dirs, v),
        }
    }

    /// The orientation restricted to a subgraph on the same vertices.
    pub fn restrict(&self, sub: &Arc<SimpleGraph>) -> Result<Self> {
        if !sub.is_subgraph_of(&self.graph) {
            return Err(Error::GraphMismatch("not a subgraph".into()));
        }
        let mut dirs = Bits::new(sub.edge_count());
        for (i, &(u, v)) in sub.edges.iter().enumerate() {
            let e = self.graph.edge_index(u, v).unwrap();
            dirs.set(i, self.dirs.get(e));
        }
        Ok(AcyclicOrientation {
            graph: sub.clone(),
            dirs,
        })
    }

    /// Same graph with vertices renamed by `perm` (vertex `i` becomes `perm[i]`).
    pub fn relabeled(&self, perm: &[usize]) -> Self {
        let arcs: Vec<_> = self
            .directed_edges()
            .into_iter()
            .map(|(a, b)| (perm[a], perm[b]))
            .collect();
        Self::from_arcs(self.graph.n, &arcs).expect("relabeling keeps acyclicity")
    }

    pub fn poset(&self) -> Poset {
        Poset::from_orientation(self)
    }

    /// Clockwise minus counterclockwise edges along the cycle `0 -> 1 -> ... -> n-1 -> 0`.
    pub fn cycle_imbalance(&self) -> i64 {
        let n = self.graph.n;
        (0..n)
            .filter_map(|i| self.points(i, (i + 1) % n))
            .map(|fwd| if fwd { 1 } else { -1 })
            .sum()
    }
}

/// Every acyclic orientation of `g`, sorted by bitstring.
pub fn all_acyclic_orientations(g: &Arc<SimpleGraph>) -> Result<Vec<AcyclicOrientation>> {
    let e = g.edge_count();
    if e > MAX_ENUMERATION_EDGES {
        return Err(Error::TooLarge {
            what: "edges for orientation enumeration",
            limit: MAX_ENUMERATION_EDGES,
            actual: e,
        });
    }
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << e) {
        let mut dirs = Bits::new(e);
        for i in 0..e {
            dirs.set(i, mask >> i & 1 == 1);
        }
        if is_acyclic(g, &dirs) {
            out.push(AcyclicOrientation {
                graph: g.clone(),
                dirs,
            });
        }
    }
    out.sort_by_cached_key(|o| o.bitstring());
    Ok(out)
}

/// Each source-to-sink or sink-to-source flip of `dirs`, paired with the vertex.
fn flips(g: &SimpleGraph, dirs: &Bits, mut emit: impl FnMut(usize, Bits)) {
    for v in 0..g.n {
        if g.incident[v].is_empty() {
            continue;
        }
        if is_source_in(g, dirs, v) || is_sink_in(g, dirs, v) {
            emit(v, flipped(g, dirs, v));
        }
    }
}

fn class_bits(o: &AcyclicOrientation, cap: usize) -> Result<Vec<Bits>> {
    let g = &o.graph;
    let c = closure(
        [o.dirs.clone()],
        cap,
        |d: &Bits, out| flips(g, d, |_, b| out.push(b)),
        |_| false,
    );
    if c.truncated {
        return Err(Error::ClassCapExceeded { cap });
    }
    Ok(c.items)
}

/// The toric equivalence class of `o`, sorted by bitstring.
pub fn toric_class(o: &AcyclicOrientation, cap: usize) -> Result<Vec<AcyclicOrientation>> {
    let mut out: Vec<_> = class_bits(o, cap)?
        .into_iter()
        .map(|dirs| AcyclicOrientation {
            graph: o.graph.clone(),
            dirs,
        })
        .collect();
    out.sort_by_cached_key(|o| o.bitstring());
    Ok(out)
}

/// Partition of `Acyc(g)` into toric classes, ordered by least member.
pub fn toric_classes(g: &Arc<SimpleGraph>, cap: usize) -> Result<Vec<Vec<AcyclicOrientation>>> {
    let all = all_acyclic_orientations(g)?;
    let mut seen: HashSet<Bits> = HashSet::with_capacity(all.len());
    let mut classes = Vec::new();
    for o in &all {
        if seen.contains(&o.dirs) {
            continue;
        }
        let class = toric_class(o, cap)?;
        seen.extend(class.iter().map(|c| c.dirs.clone()));
        classes.push(class);
    }
    Ok(classes)
}

/// Sequence of flipped vertices turning `from` into `to`, if they are equivalent.
pub fn flip_path(
    from: &AcyclicOrientation,
    to: &AcyclicOrientation,
    cap: usize,
) -> Result<Option<Vec<usize>>> {
    if from.graph != to.graph {
        return Err(Error::GraphMismatch(
            "orientations of different graphs".into(),
        ));
    }
    let g = &from.graph;
    let c = closure(
        [from.dirs.clone()],
        cap,
        |d: &Bits, out| flips(g, d, |_, b| out.push(b)),
        |d| *d == to.dirs,
    );
    let Some(hit) = c.hit else {
        return if c.truncated {
            Err(Error::ClassCapExceeded { cap })
        } else {
            Ok(None)
        };
    };
    let path = c.path_to(hit);
    let mut verts = Vec::with_capacity(path.len());
    for pair in path.windows(2) {
        let v = (0..g.n)
            .find(|&v| !g.incident[v].is_empty() && flipped(g, pair[0], v) == *pair[1])
            .expect("consecutive class members differ by one flip");
        verts.push(v);
    }
    Ok(Some(verts))
}

/// Tutte polynomial `T_G(x, y)` by deletion-contraction.
pub fn tutte(g: &SimpleGraph, x: i64, y: i64) -> Result<i128> {
    if g.edge_count() > MAX_TUTTE_EDGES {
        return Err(Error::TooLarge {
            what: "edges for the Tutte evaluator",
            limit: MAX_TUTTE_EDGES,
            actual: g.edge_count(),
        });
    }
    let n = g.n;
    let mut mult = vec![0u8; n * n];
    for &(u, v) in &g.edges {
        mult[u * n + v] = 1;
        mult[v * n + u] = 1;
    }
    let mut memo = HashMap::new();
    Ok(tutte_rec(n, mult, x as i128, y as i128, &mut memo))
}

fn tutte_rec(n: usize, mult: Vec<u8>, x: i128, y: i128, memo: &mut HashMap<Vec<u8>, i128>) -> i128 {
    let Some(pos) = mult.iter().position(|&k| k > 0) else {
        return 1;
    };
    if let Some(&v) = memo.get(&mult) {
        return v;
    }
    let (u, v) = (pos / n, pos % n);
    let k = mult[pos] as u32;

    let mut deleted = mult.clone();
    deleted[u * n + v] = 0;
    deleted[v * n + u] = 0;
    let bridge = !connected(n, &deleted, u, v);

    // Contract v into u; the other parallel copies become loops.
    let mut contracted = deleted.clone();
    for w in 0..n {
        let add = contracted[v * n + w];
        if add > 0 {
            contracted[u * n + w] += add;
            contracted[w * n + u] += add;
            contracted[v * n + w] = 0;
            contracted[w * n + v] = 0;
        }
    }
    let t_contracted = tutte_rec(n, contracted, x, y, memo);
    let loops: i128 = (1..k).map(|j| y.pow(j)).sum();
    let first = if bridge {
        x * t_contracted
    } else {
        tutte_rec(n, deleted, x, y, memo) + t_contracted
    };
    let value = first + loops * t_contracted;
    memo.insert(mult, value);
    value
}

fn connected(n: usize, mult: &[u8], a: usize, b: usize) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![a];
    seen[a] = true;
    while let Some(x) = stack.pop() {
        if x == b {
            return true;
        }
        for y in 0..n {
            if mult[x * n + y] > 0 && !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    false
}

/// True iff `seq` is a directed path `i1 -> ... -> ik` in `o` whose closing
/// edge `i1 -> ik` is present as well. Sequences of length 0 and 1 qualify.
pub fn is_toric_directed_path(o: &AcyclicOrientation, seq: &[usize]) -> Result<bool> {
    for &v in seq {
        o.check_vertex(v)?;
    }
    let mut distinct = seq.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != seq.len() {
        return Ok(false);
    }
    if seq.len() < 2 {
        return Ok(true);
    }
    let steps = seq.windows(2).all(|p| o.points(p[0], p[1]) == Some(true));
    Ok(steps && o.points(seq[0], seq[seq.len() - 1]) == Some(true))
}

/// Whether `subset` lies on a toric directed path of `o`.
///
/// Equivalently: `subset` is a chain of the poset of `o` and some edge
/// `a -> b` has every member between `a` and `b`.
pub fn lies_on_toric_path(o: &AcyclicOrientation, poset: &Poset, subset: &[usize]) -> Result<bool> {
    for &v in subset {
        o.check_vertex(v)?;
    }
    let mut c = subset.to_vec();
    c.sort_unstable();
    c.dedup();
    if c.len() < 2 {
        return Ok(true);
    }
    if !poset.is_chain(&c)? {
        return Ok(false);
    }
    let le = |a: usize, b: usize| a == b || poset.less(a, b);
    Ok(o.directed_edges()
        .into_iter()
        .any(|(a, b)| c.iter().all(|&x| le(a, x) && le(x, b))))
}

/// A toric poset: an orientation class held by a representative, with the
/// class materialized lazily.
pub struct ToricPoset {
    rep: AcyclicOrientation,
    poset: OnceLock<Poset>,
    class: OnceLock<HashSet<Bits>>,
}

impl Clone for ToricPoset {
    fn clone(&self) -> Self {
        ToricPoset {
            rep: self.rep.clone(),
            poset: self.poset.clone(),
            class: self.class.clone(),
        }
    }
}

impl fmt::Debug for ToricPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ToricPoset[{:?}]", self.rep)
    }
}

impl ToricPoset {
    pub fn new(rep: AcyclicOrientation) -> Self {
        ToricPoset {
            rep,
            poset: OnceLock::new(),
            class: OnceLock::new(),
        }
    }

    pub fn representative(&self) -> &AcyclicOrientation {
        &self.rep
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.rep.graph
    }

    pub fn shared_graph(&self) -> &Arc<SimpleGraph> {
        &self.rep.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.rep.graph.n
    }

    fn poset(&self) -> &Poset {
        self.poset.get_or_init(|| self.rep.poset())
    }

    fn class_set(&self, cap: usize) -> Result<&HashSet<Bits>> {
        if let Some(c) = self.class.get() {
            return Ok(c);
        }
        let set: HashSet<Bits> = class_bits(&self.rep, cap)?.into_iter().collect();
        Ok(self.class.get_or_init(|| set))
    }

    /// Class members, sorted by bitstring.
    pub fn class(&self, cap: usize) -> Result<Vec<AcyclicOrientation>> {
        let mut v: Vec<_> = self
            .class_set(cap)?
            .iter()
            .map(|d| AcyclicOrientation {
                graph: self.rep.graph.clone(),
                dirs: d.clone(),
            })
            .collect();
        v.sort_by_cached_key(|o| o.bitstring());
        Ok(v)
    }

    /// Whether `o` is a representative of this toric poset.
    pub fn contains(&self, o: &AcyclicOrientation, cap: usize) -> Result<bool> {
        if *o.graph != *self.rep.graph {
            return Ok(false);
        }
        Ok(self.class_set(cap)?.contains(&o.dirs))
    }

    /// Same graph and same class.
    pub fn same_as(&self, other: &ToricPoset, cap: usize) -> Result<bool> {
        self.contains(&other.rep, cap)
    }

    pub fn is_toric_chain(&self, subset: &[usize]) -> Result<bool> {
        lies_on_toric_path(&self.rep, self.poset(), subset)
    }

    /// Non-edges implied by toric transitivity, oriented as in the representative.
    pub fn toric_closure_arcs(&self) -> Vec<(usize, usize)> {
        let n = self.vertex_count();
        let p = self.poset();
        let mut arcs = self.rep.directed_edges();
        for i in 0..n {
            for j in i + 1..n {
                if self.rep.graph.has_edge(i, j) {
                    continue;
                }
                if lies_on_toric_path(&self.rep, p, &[i, j]).unwrap() {
                    arcs.push(if p.less(i, j) { (i, j) } else { (j, i) });
                }
            }
        }
        arcs
    }

    /// The toric transitive closure, as a toric poset over the enlarged graph.
    pub fn toric_closure(&self) -> ToricPoset {
        let arcs = self.toric_closure_arcs();
        ToricPoset::new(
            AcyclicOrientation::from_arcs(self.vertex_count(), &arcs)
                .expect("closure arcs follow the order"),
        )
    }

    /// Toric Hasse diagram: drops, greedily in canonical edge order, every
    /// edge whose removal leaves the set of total toric extensions unchanged
    /// and keeps its endpoints a toric chain. Extension sets alone cannot see
    /// bridges: every orientation of a forest is one class with all cyclic
    /// orders as extensions.
    pub fn toric_hasse(&self, cap: usize) -> Result<ToricPoset> {
        let target = self.total_toric_extensions(cap)?;
        let mut current = self.rep.clone();
        let mut idx = 0;
        while idx < current.graph.edge_count() {
            let (a, b) = current.graph.edges[idx];
            let smaller = Arc::new(current.graph.without_edge(idx));
            let candidate = ToricPoset::new(current.restrict(&smaller)?);
            if candidate.is_toric_chain(&[a, b])?
                && candidate.total_toric_extensions(cap)? == target
            {
                current = candidate.rep;
            } else {
                idx += 1;
            }
        }
        Ok(ToricPoset::new(current))
    }

    /// Toric Hasse diagram by the local rule: an edge `{a, b}` is dropped when
    /// `a` and `b` still lie on a toric directed path without it.
    pub fn toric_hasse_local(&self) -> ToricPoset {
        let mut current = self.rep.clone();
        let mut idx = 0;
        while idx < current.graph.edge_count() {
            let (a, b) = current.graph.edges[idx];
            let smaller = Arc::new(current.graph.without_edge(idx));
            let reduced = current.restrict(&smaller).unwrap();
            let p = reduced.poset();
            if lies_on_toric_path(&reduced, &p, &[a, b]).unwrap() {
                current = reduced;
            } else {
                idx += 1;
            }
        }
        ToricPoset::new(current)
    }

    /// Whether `self` (over `G'`) is a toric extension of `smaller` (over `G`).
    ///
    /// Restricting any representative of `self` to `G` lands in one class,
    /// since a source in `G'` stays a source in `G`; so checking one
    /// representative decides the existential condition.
    pub fn extends(&self, smaller: &ToricPoset, cap: usize) -> Result<bool> {
        if self.vertex_count() != smaller.vertex_count() {
            return Err(Error::GraphMismatch(format!(
                "{} vertices against {}",
                self.vertex_count(),
                smaller.vertex_count()
            )));
        }
        if !smaller.graph().is_subgraph_of(self.graph()) {
            return Err(Error::GraphMismatch(
                "edges of the smaller toric poset are not all present".into(),
            ));
        }
        let r = self.rep.restrict(smaller.shared_graph())?;
        smaller.contains(&r, cap)
    }

    /// Every cyclic ordering of the vertices (rotated so vertex 0 leads)
    /// whose total toric order extends this toric poset. Sorted.
    pub fn total_toric_extensions(&self, cap: usize) -> Result<Vec<Vec<usize>>> {
        let n = self.vertex_count();
        if n > MAX_TOTAL_EXTENSION_VERTICES {
            return Err(Error::TooLarge {
                what: "vertices for total toric extensions",
                limit: MAX_TOTAL_EXTENSION_VERTICES,
                actual: n,
            });
        }
        if n == 0 {
            return Ok(vec![Vec::new()]);
        }
        let class = self.class_set(cap)?;
        let g = &self.rep.graph;
        let mut out = Vec::new();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut pos = vec![0usize; n];
        permute_tail(&mut perm, 1, &mut |p| {
            for (i, &v) in p.iter().enumerate() {
                pos[v] = i;
            }
            let mut d = Bits::new(g.edge_count());
            for (i, &(u, v)) in g.edges.iter().enumerate() {
                d.set(i, pos[u] < pos[v]);
            }
            if class.contains(&d) {
                out.push(p.to_vec());
            }
        });
        out.sort_unstable();
        Ok(out)
    }
}

/// Calls `f` on every permutation of `perm[k..]`, leaving `perm[..k]` fixed.
fn permute_tail(perm: &mut [usize], k: usize, f: &mut impl FnMut(&[usize])) {
    if k >= perm.len() {
        f(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute_tail(perm, k + 1, f);
        perm.swap(k, i);
    }
}

/// Rotation of a cyclic ordering that starts at its least vertex.
pub fn canonical_cyclic_order(order: &[usize]) -> Vec<usize> {
    match order.iter().enumerate().min_by_key(|&(_, v)| *v) {
        None => Vec::new(),
        Some((i, _)) => order[i..].iter().chain(&order[..i]).copied().collect(),
    }
}

/// The total toric poset on `K_n` given by a cyclic ordering.
pub fn total_toric_order(order: &[usize]) -> ToricPoset {
    let n = order.len();
    let mut rank = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    ToricPoset::new(AcyclicOrientation::from_ranking(
        Arc::new(SimpleGraph::complete(n)),
        &rank,
    ))
}
