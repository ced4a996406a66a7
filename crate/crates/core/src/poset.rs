//! Finite posets stored as strict reachability relations.

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::toric::AcyclicOrientation;

pub const DEFAULT_EXTENSION_CAP: usize = 1_000_000;

/// A strict partial order on `0..n`; `below[i]` holds every `j` with `i < j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    above: Vec<Bits>,
}

impl Poset {
    /// Transitive closure of the digraph `edges`; errors if it has a cycle.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut succ = vec![Vec::new(); n];
        let mut indeg = vec![0usize; n];
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::VertexOutOfRange {
                    index: a.max(b),
                    len: n,
                });
            }
            succ[a].push(b);
            indeg[b] += 1;
        }
        let mut order = Vec::with_capacity(n);
        let mut ready: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        while let Some(v) = ready.pop() {
            order.push(v);
            for &w in &succ[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    ready.push(w);
                }
            }
        }
        if order.len() != n {
            return Err(Error::NotAcyclic);
        }
        let mut above = vec![Bits::new(n); n];
        for &v in order.iter().rev() {
            let mut row = Bits::new(n);
            for &w in &succ[v] {
                row.set(w, true);
                row.union_with(&above[w]);
            }
            above[v] = row;
        }
        Ok(Poset { n, above })
    }

    pub fn from_orientation(o: &AcyclicOrientation) -> Self {
        Self::from_edges(o.vertex_count(), &o.directed_edges())
            .expect("acyclic orientation has no directed cycle")
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// `i < j` strictly.
    #[inline]
    pub fn less(&self, i: usize, j: usize) -> bool {
        self.above[i].get(j)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        i == j || self.less(i, j) || self.less(j, i)
    }

    /// Every strict relation `(i, j)`, sorted.
    pub fn closure_edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|i| self.above[i].ones().map(move |j| (i, j)))
            .collect()
    }

    /// Cover relations, sorted.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        self.closure_edges()
            .into_iter()
            .filter(|&(i, j)| !self.above[i].ones().any(|k| self.less(k, j)))
            .collect()
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                index: v,
                len: self.n,
            })
        }
    }

    /// True iff `subset` is totally ordered.
    pub fn is_chain(&self, subset: &[usize]) -> Result<bool> {
        for &v in subset {
            self.check(v)?;
        }
        Ok(subset
            .iter()
            .enumerate()
            .all(|(a, &i)| subset[a + 1..].iter().all(|&j| self.comparable(i, j))))
    }

    /// Every linear extension as a sequence of elements, lexicographic.
    pub fn linear_extensions(&self, cap: usize) -> Result<Vec<Vec<usize>>> {
        let mut below_count = vec![0usize; self.n];
        for (_, j) in self.hasse_edges() {
            below_count[j] += 1;
        }
        let covers: Vec<Vec<usize>> = (0..self.n)
            .map(|i| {
                self.hasse_edges()
                    .into_iter()
                    .filter(|&(a, _)| a == i)
                    .map(|(_, b)| b)
                    .collect()
            })
            .collect();
        let mut out = Vec::new();
        let mut prefix = Vec::with_capacity(self.n);
        let mut used = vec![false; self.n];
        self.extend(
            &covers,
            &mut below_count,
            &mut used,
            &mut prefix,
            &mut out,
            cap,
        )?;
        Ok(out)
    }

    fn extend(
        &self,
        covers: &[Vec<usize>],
        below: &mut [usize],
        used: &mut [bool],
        prefix: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        cap: usize,
    ) -> Result<()> {
        if prefix.len() == self.n {
            if out.len() >= cap {
                return Err(Error::ExtensionCapExceeded { cap });
            }
            out.push(prefix.clone());
            return Ok(());
        }
        for v in 0..self.n {
            if used[v] || below[v] != 0 {
                continue;
            }
            used[v] = true;
            prefix.push(v);
            for &w in &covers[v] {
                below[w] -= 1;
            }
            self.extend(covers, below, used, prefix, out, cap)?;
            for &w in &covers[v] {
                below[w] += 1;
            }
            prefix.pop();
            used[v] = false;
        }
        Ok(())
    }
}
