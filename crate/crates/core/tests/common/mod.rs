#![allow(dead_code)]

use std::collections::HashMap;
use std::sync::Arc;

use toriheap::{AcyclicOrientation, Bond, CoxeterGraph, Gen, SimpleGraph, Word};

pub const CAP: usize = 2_000_000;

pub fn graph(gens: &[&str], bonds: &[(&str, &str, u32)]) -> CoxeterGraph {
    let b: Vec<_> = bonds
        .iter()
        .map(|&(a, b, m)| {
            (
                a,
                b,
                if m == 0 {
                    Bond::Infinite
                } else {
                    Bond::Finite(m)
                },
            )
        })
        .collect();
    CoxeterGraph::new(gens, &b).unwrap()
}

/// s1 -4- s2 -3- s3.
pub fn b2() -> CoxeterGraph {
    graph(&["s1", "s2", "s3"], &[("s1", "s2", 4), ("s2", "s3", 3)])
}

pub fn a3() -> CoxeterGraph {
    graph(&["s1", "s2", "s3"], &[("s1", "s2", 3), ("s2", "s3", 3)])
}

pub fn h3() -> CoxeterGraph {
    graph(&["s1", "s2", "s3"], &[("s1", "s2", 5), ("s2", "s3", 3)])
}

pub fn a2_affine() -> CoxeterGraph {
    graph(
        &["s0", "s1", "s2"],
        &[("s0", "s1", 3), ("s1", "s2", 3), ("s0", "s2", 3)],
    )
}

pub fn a3_affine() -> CoxeterGraph {
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

pub fn c2_affine() -> CoxeterGraph {
    graph(&["s0", "s1", "s2"], &[("s0", "s1", 4), ("s1", "s2", 4)])
}

pub fn c3_affine() -> CoxeterGraph {
    graph(
        &["s0", "s1", "s2", "s3"],
        &[("s0", "s1", 4), ("s1", "s2", 3), ("s2", "s3", 4)],
    )
}

pub fn c4_affine() -> CoxeterGraph {
    graph(
        &["s0", "s1", "s2", "s3", "s4"],
        &[
            ("s0", "s1", 4),
            ("s1", "s2", 3),
            ("s2", "s3", 3),
            ("s3", "s4", 4),
        ],
    )
}

pub fn e6_affine() -> CoxeterGraph {
    graph(
        &["s0", "s1", "s2", "s3", "s4", "s5", "s6"],
        &[
            ("s1", "s2", 3),
            ("s2", "s3", 3),
            ("s3", "s4", 3),
            ("s4", "s5", 3),
            ("s3", "s6", 3),
            ("s6", "s0", 3),
        ],
    )
}

/// s -4- t, t -3- a, t -3- b, a -4- b.
pub fn star_graph() -> CoxeterGraph {
    graph(
        &["s", "t", "a", "b"],
        &[("s", "t", 4), ("t", "a", 3), ("t", "b", 3), ("a", "b", 4)],
    )
}

/// The systems swept exhaustively, with their word-length bounds.
pub fn corpus_systems() -> Vec<(&'static str, CoxeterGraph, usize)> {
    vec![
        ("B2", b2(), 8),
        ("A3", a3(), 8),
        ("H3", h3(), 8),
        ("A2~", a2_affine(), 8),
        ("A3~", a3_affine(), 6),
    ]
}

pub fn word(g: &CoxeterGraph, s: &str) -> Word {
    g.parse_word(s).unwrap()
}

pub fn names(g: &CoxeterGraph, words: &[Word]) -> Vec<String> {
    words.iter().map(|w| g.format_word(w)).collect()
}

/// Lengths from the geometric representation: each generator acts as a
/// reflection for the form `B(s,t) = -cos(pi/m(s,t))`; a ball of the
/// Cayley graph is explored breadth first, keyed on rounded matrices.
pub struct Cayley {
    n: usize,
    refl: Vec<Vec<f64>>,
    dist: HashMap<Vec<i64>, usize>,
    pub radius: usize,
    pub complete: bool,
}

fn key(m: &[f64]) -> Vec<i64> {
    m.iter().map(|x| (x * 1e6).round() as i64).collect()
}

fn mul(n: usize, a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut c = vec![0.0; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x == 0.0 {
                continue;
            }
            for j in 0..n {
                c[i * n + j] += x * b[k * n + j];
            }
        }
    }
    c
}

impl Cayley {
    pub fn new(g: &CoxeterGraph, radius: usize) -> Self {
        let n = g.rank();
        let form = |s: usize, t: usize| -> f64 {
            if s == t {
                return 1.0;
            }
            match g.m(s as Gen, t as Gen).unwrap() {
                Bond::Finite(m) => -(std::f64::consts::PI / m as f64).cos(),
                Bond::Infinite => -1.0,
            }
        };
        let refl: Vec<Vec<f64>> = (0..n)
            .map(|s| {
                let mut m = vec![0.0; n * n];
                for j in 0..n {
                    m[j * n + j] = 1.0;
                    m[s * n + j] -= 2.0 * form(s, j);
                }
                m
            })
            .collect();
        let mut id = vec![0.0; n * n];
        for i in 0..n {
            id[i * n + i] = 1.0;
        }
        let mut dist = HashMap::new();
        dist.insert(key(&id), 0);
        let mut frontier = vec![id];
        let mut r = 0;
        while r < radius && !frontier.is_empty() {
            r += 1;
            let mut next = Vec::new();
            for m in &frontier {
                for s in &refl {
                    let p = mul(n, m, s);
                    let k = key(&p);
                    if let std::collections::hash_map::Entry::Vacant(e) = dist.entry(k) {
                        e.insert(r);
                        next.push(p);
                    }
                }
            }
            frontier = next;
        }
        Cayley {
            n,
            refl,
            dist,
            radius,
            complete: frontier.is_empty(),
        }
    }

    pub fn size(&self) -> usize {
        self.dist.len()
    }

    pub fn matrix(&self, w: &Word) -> Vec<f64> {
        let n = self.n;
        let mut m = vec![0.0; n * n];
        for i in 0..n {
            m[i * n + i] = 1.0;
        }
        for &s in w.letters() {
            m = mul(n, &m, &self.refl[s as usize]);
        }
        m
    }

    pub fn element_key(&self, w: &Word) -> Vec<i64> {
        key(&self.matrix(w))
    }

    /// Length of the element of `w`; needs `|w| <= radius` in infinite groups.
    pub fn length(&self, w: &Word) -> usize {
        *self
            .dist
            .get(&self.element_key(w))
            .expect("element inside the explored ball")
    }

    pub fn is_reduced(&self, w: &Word) -> bool {
        self.length(w) == w.len()
    }

    /// All reduced words of length at most `max_len`.
    pub fn reduced_word_corpus(&self, max_len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        let mut layer = vec![Word::empty()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &layer {
                for s in 0..self.n as Gen {
                    let mut v = w.letters().to_vec();
                    v.push(s);
                    let v = Word::new(v);
                    if self.is_reduced(&v) {
                        next.push(v);
                    }
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    /// Keys of all group elements (finite groups only).
    pub fn elements(&self) -> Vec<Vec<i64>> {
        assert!(self.complete);
        self.dist.keys().cloned().collect()
    }
}

/// Conjugacy class of the element of `w` in a finite group, by brute force
/// over every group element, represented by words of the explored ball.
pub fn conjugacy_class_keys(c: &Cayley, all_words: &[Word], w: &Word) -> Vec<Vec<i64>> {
    let target = c.matrix(w);
    let mut keys: Vec<Vec<i64>> = all_words
        .iter()
        .map(|v| {
            let m = c.matrix(v);
            let inv = c.matrix(&v.reversed());
            key(&mul(c.n, &mul(c.n, &inv, &target), &m))
        })
        .collect();
    keys.sort();
    keys.dedup();
    keys
}

/// Tutte polynomial by the subset expansion
/// `sum_A (x-1)^(r(E)-r(A)) (y-1)^(|A|-r(A))`.
pub fn tutte_by_subsets(g: &SimpleGraph, x: i64, y: i64) -> i128 {
    let e = g.edges();
    let n = g.vertex_count();
    let rank = |mask: u64| -> u32 {
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        let mut r = 0;
        for (i, &(u, v)) in e.iter().enumerate() {
            if mask >> i & 1 == 1 {
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                if a != b {
                    parent[a] = b;
                    r += 1;
                }
            }
        }
        r
    };
    let full = rank((1u64 << e.len()) - 1);
    let mut total: i128 = 0;
    for mask in 0u64..(1u64 << e.len()) {
        let r = rank(mask);
        let size = mask.count_ones();
        total += ((x - 1) as i128).pow(full - r) * ((y - 1) as i128).pow(size - r);
    }
    total
}

/// Every toric directed path of `o`, by exhaustive path search.
pub fn toric_directed_paths(o: &AcyclicOrientation) -> Vec<Vec<usize>> {
    let n = o.vertex_count();
    let mut out: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    fn extend(o: &AcyclicOrientation, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *path.last().unwrap();
        for v in 0..o.vertex_count() {
            if o.points(last, v) == Some(true) {
                path.push(v);
                if o.points(path[0], v) == Some(true) {
                    out.push(path.clone());
                }
                extend(o, path, out);
                path.pop();
            }
        }
    }
    for v in 0..n {
        extend(o, &mut vec![v], &mut out);
    }
    out
}

/// Toric chain by search over all toric directed paths.
pub fn is_toric_chain_brute(paths: &[Vec<usize>], subset: &[usize]) -> bool {
    subset.is_empty() || paths.iter().any(|p| subset.iter().all(|x| p.contains(x)))
}

/// All bijections of `0..labels.len()` preserving labels.
pub fn label_preserving_bijections(from: &[Gen], to: &[Gen]) -> Vec<Vec<usize>> {
    let m = from.len();
    let mut out = Vec::new();
    fn go(
        i: usize,
        from: &[Gen],
        to: &[Gen],
        used: &mut Vec<bool>,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == from.len() {
            out.push(cur.clone());
            return;
        }
        for j in 0..to.len() {
            if !used[j] && to[j] == from[i] {
                used[j] = true;
                cur.push(j);
                go(i + 1, from, to, used, cur, out);
                cur.pop();
                used[j] = false;
            }
        }
    }
    if to.len() == m {
        go(0, from, to, &mut vec![false; m], &mut Vec::new(), &mut out);
    }
    out
}

/// Every simple graph on `n` vertices (`n <= 5`).
pub fn all_graphs(n: usize) -> Vec<Arc<SimpleGraph>> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    (0u32..(1 << pairs.len()))
        .map(|mask| {
            let e: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            Arc::new(SimpleGraph::new(n, &e).unwrap())
        })
        .collect()
}
pub mod sweep;
