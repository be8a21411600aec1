//! Uniform hypergraphs and the three systems of copies: `C_k`'s and `K_k`'s
//! of a graph (over its edge identifiers) and `AP_k`'s of a set of integers.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::graph::Graph;

/// What the hypergraph vertices `0..N` stand for.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Labels {
    /// Vertex `i` is the integer `start + i`.
    Range { start: u64 },
    /// Vertex `i` is `values[i]` (strictly increasing).
    Values(Vec<u64>),
    /// Vertex `i` is the base-graph edge `edges[i]`.
    GraphEdges(Vec<(usize, usize)>),
}

/// An `h`-uniform hypergraph on vertices `0..num_vertices`.
///
/// Edges are stored sorted (each tuple ascending, the list lexicographic and
/// duplicate free) in a flat buffer of stride `h`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UniformHypergraph {
    h: usize,
    num_vertices: usize,
    flat: Vec<usize>,
    labels: Labels,
}

impl UniformHypergraph {
    /// Validates and canonicalises an edge list over integer vertices
    /// `0..num_vertices`.
    pub fn new(h: usize, num_vertices: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        Self::with_labels(h, num_vertices, edges, Labels::Range { start: 0 })
    }

    pub fn with_labels(
        h: usize,
        num_vertices: usize,
        edges: Vec<Vec<usize>>,
        labels: Labels,
    ) -> Result<Self> {
        if h == 0 {
            return Err(invalid("uniformity must be at least 1"));
        }
        match &labels {
            Labels::Values(v) if v.len() != num_vertices => {
                return Err(invalid("label count differs from vertex count"))
            }
            Labels::GraphEdges(e) if e.len() != num_vertices => {
                return Err(invalid("label count differs from vertex count"))
            }
            _ => {}
        }
        let mut sorted = Vec::with_capacity(edges.len());
        for mut e in edges {
            if e.len() != h {
                return Err(Error::InvalidEdge(format!("{e:?} does not have {h} vertices")));
            }
            e.sort_unstable();
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidEdge(format!("{e:?} repeats a vertex")));
            }
            if let Some(&v) = e.last() {
                if v >= num_vertices {
                    return Err(Error::VertexOutOfRange { vertex: v, n: num_vertices });
                }
            }
            sorted.push(e);
        }
        sorted.sort_unstable();
        sorted.dedup();
        let flat = sorted.into_iter().flatten().collect();
        Ok(UniformHypergraph { h, num_vertices, flat, labels })
    }

    pub fn uniformity(&self) -> usize {
        self.h
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn edge_count(&self) -> usize {
        self.flat.len() / self.h
    }

    pub fn edge(&self, i: usize) -> &[usize] {
        &self.flat[i * self.h..(i + 1) * self.h]
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = &[usize]> + '_ {
        self.flat.chunks_exact(self.h)
    }

    pub fn labels(&self) -> &Labels {
        &self.labels
    }

    /// Integer label of vertex `v` (`Range` and `Values` labellings).
    pub fn int_label(&self, v: usize) -> Option<u64> {
        match &self.labels {
            Labels::Range { start } => Some(start + v as u64),
            Labels::Values(vals) => vals.get(v).copied(),
            Labels::GraphEdges(_) => None,
        }
    }

    /// For each vertex, the identifiers of the edges containing it.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.num_vertices];
        for (i, e) in self.edges().enumerate() {
            for &v in e {
                inc[v].push(i);
            }
        }
        inc
    }

    /// `d(J)`: the number of edges containing every vertex of `set`.
    pub fn degree_of(&self, set: &[usize]) -> usize {
        self.edges().filter(|e| set.iter().all(|v| e.binary_search(v).is_ok())).count()
    }

    /// Number of distinct vertices covered by the given edges.
    pub fn span(&self, edge_ids: &[usize]) -> usize {
        let mut vs: Vec<usize> = edge_ids.iter().flat_map(|&i| self.edge(i).iter().copied()).collect();
        vs.sort_unstable();
        vs.dedup();
        vs.len()
    }

    /// Deletes the vertices in `removed` together with every edge meeting
    /// them; remaining vertices are renumbered in order, keeping labels.
    pub fn remove_vertices(&self, removed: &[usize]) -> UniformHypergraph {
        let mut gone = vec![false; self.num_vertices];
        for &v in removed {
            gone[v] = true;
        }
        let mut new_id = vec![usize::MAX; self.num_vertices];
        let mut next = 0;
        for v in 0..self.num_vertices {
            if !gone[v] {
                new_id[v] = next;
                next += 1;
            }
        }
        let keep = |v: &usize| !gone[*v];
        let labels = match &self.labels {
            Labels::Range { start } => Labels::Values(
                (0..self.num_vertices).filter(keep).map(|v| start + v as u64).collect(),
            ),
            Labels::Values(vals) => {
                Labels::Values((0..self.num_vertices).filter(keep).map(|v| vals[v]).collect())
            }
            Labels::GraphEdges(es) => {
                Labels::GraphEdges((0..self.num_vertices).filter(keep).map(|v| es[v]).collect())
            }
        };
        let mut flat = Vec::new();
        for e in self.edges() {
            if e.iter().all(keep) {
                flat.extend(e.iter().map(|&v| new_id[v]));
            }
        }
        // Renumbering is monotone, so the canonical order survives.
        UniformHypergraph { h: self.h, num_vertices: next, flat, labels }
    }
}

/// Which pattern a system of copies collects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CopyKind {
    Cycle,
    Clique,
    Ap,
}

/// Ground object hosting the copies.
#[derive(Debug, Clone, Copy)]
pub enum CopyBase<'a> {
    Graph(&'a Graph),
    /// The interval `[N] = {1, ..., N}`.
    Interval(usize),
}

/// The system of copies of `C_k`, `K_k` or `AP_k` in `base`.
///
/// Cycle and clique systems live on the edge identifiers of the base graph;
/// the AP system lives on `1..=N`. Patterns that do not fit give an empty
/// hypergraph.
pub fn system_of_copies(kind: CopyKind, base: CopyBase<'_>, k: usize) -> Result<UniformHypergraph> {
    match (kind, base) {
        (CopyKind::Cycle, CopyBase::Graph(g)) => cycle_system(g, k),
        (CopyKind::Clique, CopyBase::Graph(g)) => clique_system(g, k),
        (CopyKind::Ap, CopyBase::Interval(n)) => ap_system(n, k),
        (kind, _) => Err(invalid(format!("{kind:?} copies need a matching base object"))),
    }
}

/// All `k`-cycles of `g`, each as its set of edge identifiers.
pub fn cycle_system(g: &Graph, k: usize) -> Result<UniformHypergraph> {
    if k < 3 {
        return Err(invalid("cycles need k >= 3"));
    }
    let mut out = Vec::new();
    for_each_cycle(g, k, |cyc| {
        let mut ids: Vec<usize> = (0..k)
            .map(|i| g.edge_id(cyc[i], cyc[(i + 1) % k]).expect("cycle edge exists"))
            .collect();
        ids.sort_unstable();
        out.push(ids);
    });
    UniformHypergraph::with_labels(k, g.edge_count(), out, Labels::GraphEdges(g.edges().to_vec()))
}

/// Number of `k`-cycles (as subgraphs) of `g`.
pub fn count_cycles(g: &Graph, k: usize) -> u64 {
    let mut c = 0;
    if k >= 3 {
        for_each_cycle(g, k, |_| c += 1);
    }
    c
}

/// Calls `f` once per `k`-cycle of `g` with its vertex sequence. The sequence
/// starts at the smallest vertex and its second vertex is smaller than its
/// last, which fixes one representative per rotation/reflection class.
pub(crate) fn for_each_cycle(g: &Graph, k: usize, mut f: impl FnMut(&[usize])) {
    let n = g.n();
    let mut path = Vec::with_capacity(k);
    let mut on_path = vec![false; n];
    fn extend(
        g: &Graph,
        k: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        f: &mut dyn FnMut(&[usize]),
    ) {
        let start = path[0];
        let last = *path.last().unwrap();
        if path.len() == k {
            if path[1] < last && g.has_edge(last, start) {
                f(path);
            }
            return;
        }
        for &w in g.neighbors(last) {
            if w > start && !on_path[w] {
                on_path[w] = true;
                path.push(w);
                extend(g, k, path, on_path, f);
                path.pop();
                on_path[w] = false;
            }
        }
    }
    for s in 0..n {
        path.clear();
        path.push(s);
        on_path[s] = true;
        extend(g, k, &mut path, &mut on_path, &mut f);
        on_path[s] = false;
    }
}

/// All `k`-cliques of `g` (vertex sets, ascending), in lexicographic order.
pub(crate) fn for_each_clique(g: &Graph, k: usize, mut f: impl FnMut(&[usize])) {
    fn extend(g: &Graph, k: usize, cur: &mut Vec<usize>, cand: &[usize], f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for (i, &v) in cand.iter().enumerate() {
            if cand.len() - i < k - cur.len() {
                break;
            }
            let next: Vec<usize> = cand[i + 1..].iter().copied().filter(|&w| g.has_edge(v, w)).collect();
            cur.push(v);
            extend(g, k, cur, &next, f);
            cur.pop();
        }
    }
    let all: Vec<usize> = (0..g.n()).collect();
    extend(g, k, &mut Vec::with_capacity(k), &all, &mut f);
}

/// All `K_k`'s of `g`, each as its `C(k, 2)` edge identifiers.
pub fn clique_system(g: &Graph, k: usize) -> Result<UniformHypergraph> {
    if k < 2 {
        return Err(invalid("cliques need k >= 2"));
    }
    let mut out = Vec::new();
    for_each_clique(g, k, |c| {
        let mut ids = Vec::with_capacity(k * (k - 1) / 2);
        for i in 0..k {
            for j in i + 1..k {
                ids.push(g.edge_id(c[i], c[j]).expect("clique edge exists"));
            }
        }
        out.push(ids);
    });
    UniformHypergraph::with_labels(k * (k - 1) / 2, g.edge_count(), out, Labels::GraphEdges(g.edges().to_vec()))
}

/// All `k`-term arithmetic progressions in `[n]`; vertex `i` is the integer `i + 1`.
pub fn ap_system(n: usize, k: usize) -> Result<UniformHypergraph> {
    if k < 2 {
        return Err(invalid("progressions need k >= 2"));
    }
    let mut out = Vec::new();
    for a in 0..n {
        let mut d = 1;
        while a + (k - 1) * d < n {
            out.push((0..k).map(|i| a + i * d).collect());
            d += 1;
        }
    }
    UniformHypergraph::with_labels(k, n, out, Labels::Range { start: 1 })
}

/// All `k`-term arithmetic progressions inside the set `values`.
pub fn ap_system_on(values: &[u64], k: usize) -> Result<UniformHypergraph> {
    if k < 2 {
        return Err(invalid("progressions need k >= 2"));
    }
    let mut vals = values.to_vec();
    vals.sort_unstable();
    vals.dedup();
    let mut out = Vec::new();
    for i in 0..vals.len() {
        for j in i + 1..vals.len() {
            let d = vals[j] - vals[i];
            let mut edge = vec![i, j];
            let mut next = vals[j];
            while edge.len() < k {
                next += d;
                match vals.binary_search(&next) {
                    Ok(idx) => edge.push(idx),
                    Err(_) => break,
                }
            }
            if edge.len() == k {
                out.push(edge);
            }
        }
    }
    let n = vals.len();
    UniformHypergraph::with_labels(k, n, out, Labels::Values(vals))
}

/// `sum_{i=1}^{N-k+1} floor((N - i) / (k - 1))`, the number of `AP_k`'s in `[N]`.
pub fn ap_count_formula(n: u64, k: u64) -> u64 {
    if k < 2 || n < k {
        return 0;
    }
    (1..=n - k + 1).map(|i| (n - i) / (k - 1)).sum()
}

/// Degree statistics of a hypergraph for `j = 1..=h`.
///
/// `d_j(v)` is the largest `d(J)` over `j`-sets `J` containing `v`;
/// `avg[j-1]` is its average over all vertices and `max[j-1]` its maximum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeStats {
    pub h: usize,
    pub num_vertices: usize,
    pub edge_count: usize,
    pub avg: Vec<BigRational>,
    pub max: Vec<u64>,
}

impl DegreeStats {
    pub fn avg_d(&self, j: usize) -> &BigRational {
        &self.avg[j - 1]
    }

    pub fn max_d(&self, j: usize) -> u64 {
        self.max[j - 1]
    }
}

/// Exact degree statistics by enumerating every `j`-subset of every edge.
pub fn degree_stats(hg: &UniformHypergraph) -> Result<DegreeStats> {
    let n = hg.num_vertices();
    if n == 0 {
        return Err(Error::EmptyUniverse);
    }
    let h = hg.uniformity();
    let mut avg = Vec::with_capacity(h);
    let mut max = Vec::with_capacity(h);
    for j in 1..=h {
        let (a, m) = j_degree(hg, j)?;
        avg.push(a);
        max.push(m);
    }
    Ok(DegreeStats { h, num_vertices: n, edge_count: hg.edge_count(), avg, max })
}

/// The average and maximum of `d_j(v)` for a single `j` in `1..=h`.
pub fn j_degree(hg: &UniformHypergraph, j: usize) -> Result<(BigRational, u64)> {
    let n = hg.num_vertices();
    if n == 0 {
        return Err(Error::EmptyUniverse);
    }
    let h = hg.uniformity();
    if j == 0 || j > h {
        return Err(invalid(format!("j must lie in 1..={h}")));
    }
    let mut per_vertex = vec![0u64; n];
    if j == 1 {
        for e in hg.edges() {
            for &v in e {
                per_vertex[v] += 1;
            }
        }
    } else if j == 2 {
        // Co-degrees of v with every other vertex, from v's incident edges.
        let inc = hg.incidence();
        let mut co = vec![0u64; n];
        for v in 0..n {
            let mut best = 0;
            for &e in &inc[v] {
                for &u in hg.edge(e) {
                    if u != v {
                        co[u] += 1;
                        best = best.max(co[u]);
                    }
                }
            }
            for &e in &inc[v] {
                for &u in hg.edge(e) {
                    co[u] = 0;
                }
            }
            per_vertex[v] = best;
        }
    } else {
        let mut flat = Vec::new();
        for e in hg.edges() {
            crate::combin::for_each_combination(h, j, |idx| {
                flat.extend(idx.iter().map(|&i| e[i]));
                true
            });
        }
        let set = |i: usize| &flat[i * j..(i + 1) * j];
        let mut order: Vec<usize> = (0..flat.len() / j).collect();
        order.sort_unstable_by(|&a, &b| set(a).cmp(set(b)));
        let mut i = 0;
        while i < order.len() {
            let mut end = i + 1;
            while end < order.len() && set(order[end]) == set(order[i]) {
                end += 1;
            }
            let c = (end - i) as u64;
            for &v in set(order[i]) {
                per_vertex[v] = per_vertex[v].max(c);
            }
            i = end;
        }
    }
    let total: u64 = per_vertex.iter().sum();
    let avg = BigRational::new(BigUint::from(total).into(), BigUint::from(n).into());
    Ok((avg, per_vertex.iter().copied().max().unwrap_or(0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn ratio(a: i64, b: i64) -> BigRational {
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn triangles_of_k4() {
        let h = system_of_copies(CopyKind::Cycle, CopyBase::Graph(&Graph::complete(4)), 3).unwrap();
        assert_eq!(h.uniformity(), 3);
        assert_eq!(h.num_vertices(), 6);
        assert_eq!(h.edge_count(), 4);
    }

    #[test]
    fn ap_system_of_five() {
        let h = system_of_copies(CopyKind::Ap, CopyBase::Interval(5), 3).unwrap();
        let labelled: Vec<Vec<u64>> =
            h.edges().map(|e| e.iter().map(|&v| h.int_label(v).unwrap()).collect()).collect();
        let mut expected = vec![vec![1, 2, 3], vec![2, 3, 4], vec![3, 4, 5], vec![1, 3, 5]];
        expected.sort();
        assert_eq!(labelled, expected);
    }

    #[test]
    fn clique_system_of_k5() {
        let h = clique_system(&Graph::complete(5), 3).unwrap();
        assert_eq!((h.uniformity(), h.num_vertices(), h.edge_count()), (3, 10, 10));
    }

    #[test]
    fn oversized_patterns_give_empty_systems() {
        assert_eq!(cycle_system(&Graph::complete(3), 4).unwrap().edge_count(), 0);
        assert_eq!(clique_system(&Graph::complete(3), 4).unwrap().edge_count(), 0);
        assert_eq!(ap_system(2, 3).unwrap().edge_count(), 0);
    }

    #[test]
    fn mismatched_base_is_rejected() {
        assert!(system_of_copies(CopyKind::Ap, CopyBase::Graph(&Graph::complete(3)), 3).is_err());
        assert!(system_of_copies(CopyKind::Cycle, CopyBase::Interval(5), 3).is_err());
    }

    #[test]
    fn ap_counts() {
        assert_eq!(ap_count_formula(5, 3), 4);
        assert_eq!(ap_count_formula(9, 3), 16);
        for k in 3..8 {
            assert_eq!(ap_count_formula(k, k), 1);
        }
        assert_eq!(ap_count_formula(2, 3), 0);
    }

    #[test]
    fn ap_on_set_matches_interval() {
        let vals: Vec<u64> = (1..=20).collect();
        let a = ap_system_on(&vals, 4).unwrap();
        let b = ap_system(20, 4).unwrap();
        assert_eq!(a.edge_count(), b.edge_count());
        let on_gaps = ap_system_on(&[1, 2, 4, 7, 10], 3).unwrap();
        // 1,4,7 and 4,7,10
        assert_eq!(on_gaps.edge_count(), 2);
    }

    #[test]
    fn clique_degrees_in_k6() {
        let h = clique_system(&Graph::complete(6), 3).unwrap();
        let s = degree_stats(&h).unwrap();
        assert_eq!(s.avg_d(1), &ratio(4, 1));
        assert_eq!(s.max_d(1), 4);
        assert_eq!(s.max_d(3), 1);
    }

    #[test]
    fn ap_degrees_in_nine() {
        let h = ap_system(9, 3).unwrap();
        let s = degree_stats(&h).unwrap();
        assert_eq!(s.avg_d(1), &ratio(16, 3));
        assert!(s.avg_d(1) >= &ratio(9, 2));
        assert!(s.max_d(2) <= 3);
    }

    #[test]
    fn single_edge_degrees() {
        let h = UniformHypergraph::new(3, 3, vec![vec![2, 0, 1]]).unwrap();
        let s = degree_stats(&h).unwrap();
        for j in 1..=3 {
            assert_eq!(s.avg_d(j), &ratio(1, 1));
            assert_eq!(s.max_d(j), 1);
        }
        assert_eq!(h.degree_of(&[0, 2]), 1);
        assert_eq!(h.degree_of(&[]), 1);
    }

    #[test]
    fn empty_universe_is_an_error() {
        let h = UniformHypergraph::new(3, 0, vec![]).unwrap();
        assert_eq!(degree_stats(&h), Err(Error::EmptyUniverse));
    }

    #[test]
    fn invalid_edges_are_rejected() {
        assert!(UniformHypergraph::new(3, 5, vec![vec![0, 1]]).is_err());
        assert!(UniformHypergraph::new(3, 5, vec![vec![0, 1, 1]]).is_err());
        assert!(UniformHypergraph::new(3, 5, vec![vec![0, 1, 5]]).is_err());
    }

    #[test]
    fn edges_are_canonical() {
        let h = UniformHypergraph::new(2, 4, vec![vec![3, 1], vec![0, 2], vec![1, 3]]).unwrap();
        let es: Vec<_> = h.edges().collect();
        assert_eq!(es, vec![&[0, 2][..], &[1, 3][..]]);
    }

    #[test]
    fn removing_vertices_drops_incident_edges() {
        let h = ap_system(5, 3).unwrap();
        let s = h.remove_vertices(&[0]);
        assert_eq!(s.num_vertices(), 4);
        assert_eq!(s.edge_count(), 2);
        assert_eq!(s.int_label(0), Some(2));
    }
}
