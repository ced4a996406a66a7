//! Breadth-first closure of a seed set under a move generator.

use std::collections::HashMap;
use std::hash::Hash;

pub(crate) struct Closure<T> {
    /// Members in discovery order.
    pub items: Vec<T>,
    /// Index of the member each item was discovered from.
    pub parent: Vec<Option<usize>>,
    /// First member satisfying the stop predicate, if any.
    pub hit: Option<usize>,
    /// Set when the cap was reached before the closure was complete.
    pub truncated: bool,
}

impl<T> Closure<T> {
    /// Members along the discovery path from a seed to `idx`.
    pub fn path_to(&self, mut idx: usize) -> Vec<&T> {
        let mut path = vec![&self.items[idx]];
        while let Some(p) = self.parent[idx] {
            path.push(&self.items[p]);
            idx = p;
        }
        path.reverse();
        path
    }
}

pub(crate) fn closure<T, N, S>(
    seeds: impl IntoIterator<Item = T>,
    cap: usize,
    mut expand: N,
    mut stop: S,
) -> Closure<T>
where
    T: Clone + Eq + Hash,
    N: FnMut(&T, &mut Vec<T>),
    S: FnMut(&T) -> bool,
{
    let mut index: HashMap<T, usize> = HashMap::new();
    let mut out = Closure {
        items: Vec::new(),
        parent: Vec::new(),
        hit: None,
        truncated: false,
    };
    let mut push = |item: T, parent: Option<usize>, out: &mut Closure<T>| -> bool {
        if index.contains_key(&item) {
            return false;
        }
        if out.items.len() >= cap {
            out.truncated = true;
            return true;
        }
        let idx = out.items.len();
        index.insert(item.clone(), idx);
        out.items.push(item);
        out.parent.push(parent);
        if stop(&out.items[idx]) {
            out.hit = Some(idx);
            return true;
        }
        false
    };
    for seed in seeds {
        if push(seed, None, &mut out) {
            return out;
        }
    }
    let mut buf = Vec::new();
    let mut head = 0;
    while head < out.items.len() {
        buf.clear();
        expand(&out.items[head], &mut buf);
        for next in buf.drain(..) {
            if push(next, Some(head), &mut out) {
                return out;
            }
        }
        head += 1;
    }
    out
}
