//! Hypergraph girth in its two forms: the sparsity condition on edge sets
//! and the enumeration of short (Berge-type) cycles.

use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::hypergraph::UniformHypergraph;

/// Outcome of a sparsity-girth query for a fixed `g`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GirthVerdict {
    pub g: usize,
    pub satisfied: bool,
    /// Smallest violating edge set (fewest edges, then lexicographically
    /// least identifiers). `None` when satisfied.
    pub witness: Option<Vec<usize>>,
    /// Vertices spanned by the witness.
    pub witness_span: Option<usize>,
}

/// Checks that every set of `h'` edges, `2 <= h' < g`, spans at least
/// `(k - 1) h' + 1` vertices.
///
/// At the smallest violating size every violating set is connected in the
/// intersection graph (otherwise one component already violates with fewer
/// edges), so only connected edge sets are examined.
pub fn sparsity_girth(hg: &UniformHypergraph, g: usize) -> Result<GirthVerdict> {
    if g < 2 {
        return Err(invalid("girth threshold g must be at least 2"));
    }
    let k = hg.uniformity();
    if k < 2 {
        return Err(invalid("sparsity girth needs uniformity at least 2"));
    }
    let m = hg.edge_count();
    let adjacency = intersection_graph(hg);
    let mut stamp = vec![0u32; hg.num_vertices()];
    let mut generation = 0u32;
    for size in 2..g.min(m + 1) {
        let limit = (k - 1) * size;
        let mut best: Option<(Vec<usize>, usize)> = None;
        for_each_connected_set(&adjacency, size, |set| {
            generation += 1;
            let mut span = 0;
            for &e in set {
                for &v in hg.edge(e) {
                    if stamp[v] != generation {
                        stamp[v] = generation;
                        span += 1;
                    }
                }
            }
            if span <= limit {
                let mut sorted = set.to_vec();
                sorted.sort_unstable();
                if best.as_ref().is_none_or(|(b, _)| sorted < *b) {
                    best = Some((sorted, span));
                }
            }
        });
        if let Some((witness, span)) = best {
            return Ok(GirthVerdict { g, satisfied: false, witness: Some(witness), witness_span: Some(span) });
        }
    }
    Ok(GirthVerdict { g, satisfied: true, witness: None, witness_span: None })
}

/// Edge `a` is adjacent to edge `b` when they share a vertex.
fn intersection_graph(hg: &UniformHypergraph) -> Vec<Vec<usize>> {
    let inc = hg.incidence();
    let m = hg.edge_count();
    let mut adj = vec![Vec::new(); m];
    for (a, list) in adj.iter_mut().enumerate() {
        for &v in hg.edge(a) {
            list.extend(inc[v].iter().copied().filter(|&b| b != a));
        }
        list.sort_unstable();
        list.dedup();
    }
    adj
}

/// Enumerates every connected vertex set of exactly `size` vertices once
/// (the ESU scheme: each set is grown from its smallest vertex through
/// exclusive neighbourhoods).
fn for_each_connected_set(adj: &[Vec<usize>], size: usize, mut f: impl FnMut(&[usize])) {
    fn grow(
        adj: &[Vec<usize>],
        size: usize,
        root: usize,
        set: &mut Vec<usize>,
        ext: Vec<usize>,
        near: &mut [u32],
        f: &mut dyn FnMut(&[usize]),
    ) {
        if set.len() == size {
            f(set);
            return;
        }
        let mut ext = ext;
        while let Some(w) = ext.pop() {
            let mut next = ext.clone();
            let mut marked = Vec::new();
            for &u in &adj[w] {
                if u > root && near[u] == 0 {
                    next.push(u);
                    marked.push(u);
                }
            }
            for &u in &marked {
                near[u] += 1;
            }
            near[w] += 1;
            set.push(w);
            grow(adj, size, root, set, next, near, f);
            set.pop();
            near[w] -= 1;
            for &u in &marked {
                near[u] -= 1;
            }
        }
    }
    // near[u] > 0 iff u is in the current set or adjacent to it.
    let mut near = vec![0u32; adj.len()];
    for root in 0..adj.len() {
        let mut set = vec![root];
        near[root] += 1;
        let mut ext = Vec::new();
        for &u in &adj[root] {
            near[u] += 1;
            if u > root {
                ext.push(u);
            }
        }
        grow(adj, size, root, &mut set, ext, &mut near, &mut f);
        near[root] -= 1;
        for &u in &adj[root] {
            near[u] -= 1;
        }
    }
}

/// One short cycle: `edges` in cyclic order (a 2-cycle lists both edges).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperCycle {
    pub len: usize,
    pub edges: Vec<usize>,
}

/// All cycles shorter than `g`, with counts `X_j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleReport {
    pub g: usize,
    pub cycles: Vec<HyperCycle>,
    /// `counts[j]` is `X_j`; indices below 2 are always zero.
    pub counts: Vec<u64>,
}

impl CycleReport {
    pub fn count(&self, j: usize) -> u64 {
        self.counts.get(j).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.cycles.len() as u64
    }

    /// `(j, X_j)` for `2 <= j < g`.
    pub fn summary(&self) -> Vec<(usize, u64)> {
        (2..self.g).map(|j| (j, self.count(j))).collect()
    }
}

/// Enumerates 2-cycles (edge pairs sharing at least two vertices) and
/// `j`-cycles for `3 <= j < g`.
///
/// A `j`-cycle is a cyclic edge sequence where consecutive edges meet in
/// exactly one vertex, non-consecutive edges are disjoint and the meeting
/// points are distinct. Each is reported once, starting from its smallest
/// edge identifier with the second edge smaller than the last.
pub fn enumerate_short_cycles(hg: &UniformHypergraph, g: usize) -> Result<CycleReport> {
    if hg.uniformity() < 2 {
        return Err(invalid("cycles need uniformity at least 2"));
    }
    let mut report = CycleReport { g, cycles: Vec::new(), counts: vec![0; g.max(2)] };
    if g <= 2 {
        return Ok(report);
    }
    let inc = hg.incidence();
    let m = hg.edge_count();

    let mut shared = vec![0usize; m];
    for a in 0..m {
        for &v in hg.edge(a) {
            for &b in &inc[v] {
                if b > a {
                    shared[b] += 1;
                }
            }
        }
        for &v in hg.edge(a) {
            for &b in &inc[v] {
                if b > a {
                    if shared[b] >= 2 {
                        report.cycles.push(HyperCycle { len: 2, edges: vec![a, b] });
                        report.counts[2] += 1;
                    }
                    shared[b] = 0;
                }
            }
        }
    }

    if g > 3 {
        let mut search = CycleSearch {
            hg,
            inc: &inc,
            cover: vec![0u32; hg.num_vertices()],
            seen: vec![0u32; m],
            generation: 0,
            seq: Vec::with_capacity(g),
            found: Vec::new(),
        };
        for len in 3..g {
            for first in 0..m {
                search.seq.clear();
                search.push(first);
                search.extend(len);
                search.pop();
            }
            let found = core::mem::take(&mut search.found);
            report.counts[len] = found.len() as u64;
            report.cycles.extend(found.into_iter().map(|edges| HyperCycle { len, edges }));
        }
    }
    Ok(report)
}

struct CycleSearch<'a> {
    hg: &'a UniformHypergraph,
    inc: &'a [Vec<usize>],
    /// Number of sequence edges containing each vertex.
    cover: Vec<u32>,
    seen: Vec<u32>,
    generation: u32,
    seq: Vec<usize>,
    found: Vec<Vec<usize>>,
}

impl CycleSearch<'_> {
    fn push(&mut self, e: usize) {
        for &v in self.hg.edge(e) {
            self.cover[v] += 1;
        }
        self.seq.push(e);
    }

    fn pop(&mut self) {
        let e = self.seq.pop().expect("non-empty sequence");
        for &v in self.hg.edge(e) {
            self.cover[v] -= 1;
        }
    }

    /// Covered vertices of `f`, as `(vertex, in_last, in_first)`; `None` if
    /// more than `limit` vertices of `f` are covered.
    fn touches(&self, f: usize, limit: usize) -> Option<Vec<(usize, bool, bool)>> {
        let last = *self.seq.last().unwrap();
        let first = self.seq[0];
        let mut out = Vec::new();
        for &v in self.hg.edge(f) {
            if self.cover[v] > 0 {
                if out.len() == limit {
                    return None;
                }
                let in_last = self.hg.edge(last).binary_search(&v).is_ok();
                let in_first = self.hg.edge(first).binary_search(&v).is_ok();
                out.push((v, in_last, in_first));
            }
        }
        Some(out)
    }

    fn extend(&mut self, len: usize) {
        let first = self.seq[0];
        let last = *self.seq.last().unwrap();
        let closing = self.seq.len() + 1 == len;
        self.generation += 1;
        let mut candidates = Vec::new();
        for &v in self.hg.edge(last) {
            for &f in &self.inc[v] {
                if f > first && self.seen[f] != self.generation {
                    self.seen[f] = self.generation;
                    candidates.push(f);
                }
            }
        }
        candidates.sort_unstable();
        for f in candidates {
            if self.seq.contains(&f) {
                continue;
            }
            if closing {
                // Exactly one new point on the last edge, one on the first,
                // each covered by that edge alone.
                if f <= self.seq[1] {
                    continue;
                }
                let Some(t) = self.touches(f, 2) else { continue };
                let ok = t.len() == 2
                    && t.iter().filter(|&&(v, l, _)| l && self.cover[v] == 1).count() == 1
                    && t.iter().filter(|&&(v, _, s)| s && self.cover[v] == 1).count() == 1;
                if ok {
                    let mut cyc = self.seq.clone();
                    cyc.push(f);
                    self.found.push(cyc);
                }
            } else {
                let Some(t) = self.touches(f, 1) else { continue };
                if t.len() == 1 && t[0].1 && self.cover[t[0].0] == 1 {
                    self.push(f);
                    self.extend(len);
                    self.pop();
                }
            }
        }
    }
}
