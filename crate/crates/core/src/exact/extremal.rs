//! `ex(n; C_3, ..., C_m)` by branch and bound.

use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::budget::{Meter, SearchBudget};
use crate::error::{invalid, Result};
use crate::graph::Graph;

/// Best graph found by [`extremal_ex`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Extremal {
    Exact {
        max_edges: usize,
        #[serde(serialize_with = "ser_graph", deserialize_with = "de_graph")]
        witness: Graph,
        nodes: u64,
    },
    /// Budget exhausted; the true maximum is at least `max_edges`.
    LowerBoundOnly {
        max_edges: usize,
        #[serde(serialize_with = "ser_graph", deserialize_with = "de_graph")]
        witness: Graph,
        nodes: u64,
    },
}

impl Extremal {
    pub fn max_edges(&self) -> usize {
        match self {
            Extremal::Exact { max_edges, .. } | Extremal::LowerBoundOnly { max_edges, .. } => *max_edges,
        }
    }

    pub fn witness(&self) -> &Graph {
        match self {
            Extremal::Exact { witness, .. } | Extremal::LowerBoundOnly { witness, .. } => witness,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Extremal::Exact { .. })
    }
}

#[derive(Serialize, Deserialize)]
struct GraphWire {
    n: usize,
    edges: Vec<(usize, usize)>,
}

fn ser_graph<S: serde::Serializer>(g: &Graph, ser: S) -> core::result::Result<S::Ok, S::Error> {
    GraphWire { n: g.n(), edges: g.edges().to_vec() }.serialize(ser)
}

fn de_graph<'de, D: serde::Deserializer<'de>>(de: D) -> core::result::Result<Graph, D::Error> {
    let w = GraphWire::deserialize(de)?;
    Graph::from_edges(w.n, &w.edges).map_err(serde::de::Error::custom)
}

struct Search<'a> {
    n: usize,
    m: usize,
    pairs: Vec<(usize, usize)>,
    adj: Vec<u64>,
    deg: Vec<usize>,
    chosen: Vec<usize>,
    best: Vec<usize>,
    meter: &'a mut Meter,
}

impl Search<'_> {
    /// Whether `u` and `v` are at distance at least `m` (so a new edge
    /// closes no cycle of length at most `m`).
    fn far(&self, u: usize, v: usize) -> bool {
        let mut seen = 1u64 << u;
        let mut frontier = seen;
        for _ in 1..self.m {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let w = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[w];
            }
            next &= !seen;
            if next & (1u64 << v) != 0 {
                return false;
            }
            if next == 0 {
                return true;
            }
            seen |= next;
            frontier = next;
        }
        true
    }

    /// Vertex `u`'s degree is final once its last pair `(u, n-1)` is decided.
    fn degree_order_ok(&self, idx: usize) -> bool {
        let (u, v) = self.pairs[idx];
        if v != self.n - 1 || u == 0 {
            return true;
        }
        self.deg[u] <= self.deg[u - 1]
    }

    fn run(&mut self, idx: usize) -> bool {
        if !self.meter.tick() {
            return false;
        }
        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
        }
        if idx == self.pairs.len() || self.chosen.len() + (self.pairs.len() - idx) <= self.best.len() {
            return true;
        }
        let (u, v) = self.pairs[idx];
        if self.far(u, v) {
            self.adj[u] |= 1 << v;
            self.adj[v] |= 1 << u;
            self.deg[u] += 1;
            self.deg[v] += 1;
            self.chosen.push(idx);
            let ok = !self.degree_order_ok(idx) || self.run(idx + 1);
            self.chosen.pop();
            self.adj[u] &= !(1 << v);
            self.adj[v] &= !(1 << u);
            self.deg[u] -= 1;
            self.deg[v] -= 1;
            if !ok {
                return false;
            }
        }
        if self.degree_order_ok(idx) {
            return self.run(idx + 1);
        }
        true
    }
}

/// Maximum edge count of an `n`-vertex graph with no cycle of length
/// `3..=m` (girth above `m`).
///
/// Pairs are decided in lexicographic order; an edge is added only when its
/// endpoints are at distance at least `m`. Branches are cut when the
/// remaining pairs cannot beat the best graph, and every graph is searched
/// only in vertex orders with non-increasing degrees.
pub fn extremal_ex(n: usize, m: usize, budget: &SearchBudget) -> Result<Extremal> {
    if n > 64 {
        return Err(invalid("extremal search supports at most 64 vertices"));
    }
    if m < 3 {
        return Err(invalid("forbidden cycle lengths must be 3..=m with m >= 3"));
    }
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    let mut meter = budget.meter();
    let mut s = Search {
        n,
        m,
        pairs,
        adj: alloc::vec![0; n],
        deg: alloc::vec![0; n],
        chosen: Vec::new(),
        best: Vec::new(),
        meter: &mut meter,
    };
    let complete = s.run(0);
    let edges: Vec<(usize, usize)> = s.best.iter().map(|&i| s.pairs[i]).collect();
    let witness = Graph::from_edges(n, &edges)?;
    let max_edges = edges.len();
    let nodes = meter.nodes();
    Ok(if complete {
        Extremal::Exact { max_edges, witness, nodes }
    } else {
        Extremal::LowerBoundOnly { max_edges, witness, nodes }
    })
}
