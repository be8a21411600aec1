//! Vertex colourings of hypergraphs, the exhaustive proper-colouring search
//! and the arrowing decision built on it.

use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::budget::{Meter, SearchBudget};
use crate::error::{invalid, Error, Result};
use crate::hypergraph::{system_of_copies, CopyBase, CopyKind, UniformHypergraph};

/// Total map from hypergraph vertices to colours `1..=num_colours`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Colouring {
    pub num_colours: u32,
    pub colours: Vec<u32>,
}

impl Colouring {
    pub fn new(num_colours: u32, colours: Vec<u32>) -> Result<Colouring> {
        let c = Colouring { num_colours, colours };
        c.check_range()?;
        Ok(c)
    }

    pub fn constant(len: usize, colour: u32, num_colours: u32) -> Colouring {
        Colouring { num_colours, colours: vec![colour; len] }
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    pub fn colour(&self, v: usize) -> u32 {
        self.colours[v]
    }

    /// Sizes of the colour classes, index `c - 1` for colour `c`.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.num_colours as usize];
        for &c in &self.colours {
            sizes[c as usize - 1] += 1;
        }
        sizes
    }

    /// Applies a permutation of colours (`perm[c - 1]` is the new colour of `c`).
    pub fn permuted(&self, perm: &[u32]) -> Colouring {
        Colouring {
            num_colours: self.num_colours,
            colours: self.colours.iter().map(|&c| perm[c as usize - 1]).collect(),
        }
    }

    fn check_range(&self) -> Result<()> {
        for (v, &c) in self.colours.iter().enumerate() {
            if c == 0 || c > self.num_colours {
                return Err(Error::ColourOutOfRange { vertex: v, colour: c, max: self.num_colours });
            }
        }
        Ok(())
    }
}

/// `true` iff no edge of `hg` is monochromatic under `c`.
pub fn verify_colouring(hg: &UniformHypergraph, c: &Colouring) -> Result<bool> {
    if c.len() != hg.num_vertices() {
        return Err(Error::PartialColouring { expected: hg.num_vertices(), got: c.len() });
    }
    c.check_range()?;
    Ok(hg.edges().all(|e| {
        let first = c.colour(e[0]);
        e.iter().any(|&v| c.colour(v) != first)
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum ColouringOutcome {
    /// A proper colouring with at most `r` colours.
    Proper { witness: Colouring },
    /// Exhaustive search found no proper `r`-colouring.
    Uncolourable,
    BudgetExceeded,
}

/// Result of [`colouring_search`] with the number of nodes visited.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColouringSearch {
    pub outcome: ColouringOutcome,
    pub nodes: u64,
}

/// Backtracking search for a proper `r`-colouring.
///
/// Vertices are coloured in index order. A vertex may only open the next
/// unused colour, so each colouring is explored once up to permutation of
/// colours (the first branching vertex always gets colour 1). Each edge keeps
/// per-colour counts, and an assignment fails as soon as one edge becomes
/// monochromatic.
pub fn colouring_search(hg: &UniformHypergraph, r: u32, budget: &SearchBudget) -> Result<ColouringSearch> {
    let mut meter = budget.meter();
    let outcome = colouring_search_metered(hg, r, &mut meter)?;
    Ok(ColouringSearch { outcome, nodes: meter.nodes() })
}

pub(crate) fn colouring_search_metered(
    hg: &UniformHypergraph,
    r: u32,
    meter: &mut Meter,
) -> Result<ColouringOutcome> {
    if r == 0 {
        return Err(invalid("colour count r must be at least 1"));
    }
    let n = hg.num_vertices();
    let h = hg.uniformity();
    let rr = r as usize;
    let inc = hg.incidence();
    let mut counts = vec![0u32; hg.edge_count() * rr];
    // colour[v] is 0-based; UNSET while unassigned.
    const UNSET: u32 = u32::MAX;
    let mut colour = vec![UNSET; n];
    // max_used[v]: number of colours opened by vertices before v.
    let mut opened = vec![0u32; n + 1];

    let assign = |v: usize, c: u32, counts: &mut [u32]| -> bool {
        let mut ok = true;
        for &e in &inc[v] {
            let slot = &mut counts[e * rr + c as usize];
            *slot += 1;
            if *slot as usize == h {
                ok = false;
            }
        }
        ok
    };
    let unassign = |v: usize, c: u32, counts: &mut [u32]| {
        for &e in &inc[v] {
            counts[e * rr + c as usize] -= 1;
        }
    };

    let mut v = 0usize;
    loop {
        if v == n {
            let witness = Colouring { num_colours: r, colours: colour.iter().map(|&c| c + 1).collect() };
            return Ok(ColouringOutcome::Proper { witness });
        }
        let limit = (opened[v] + 1).min(r);
        let start = if colour[v] == UNSET { 0 } else {
            unassign(v, colour[v], &mut counts);
            colour[v] + 1
        };
        let mut placed = false;
        for c in start..limit {
            if !meter.tick() {
                return Ok(ColouringOutcome::BudgetExceeded);
            }
            colour[v] = c;
            if assign(v, c, &mut counts) {
                placed = true;
                break;
            }
            unassign(v, c, &mut counts);
        }
        if placed {
            opened[v + 1] = opened[v].max(colour[v] + 1);
            v += 1;
        } else {
            colour[v] = UNSET;
            if v == 0 {
                return Ok(ColouringOutcome::Uncolourable);
            }
            v -= 1;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum ArrowOutcome {
    Arrows,
    NotArrows { witness: Colouring },
    BudgetExceeded,
}

impl ArrowOutcome {
    pub(crate) fn from_colouring(o: ColouringOutcome) -> ArrowOutcome {
        match o {
            ColouringOutcome::Proper { witness } => ArrowOutcome::NotArrows { witness },
            ColouringOutcome::Uncolourable => ArrowOutcome::Arrows,
            ColouringOutcome::BudgetExceeded => ArrowOutcome::BudgetExceeded,
        }
    }
}

/// Decides `base -> (F)_r` for `F` the `k`-cycle, `K_k` or `AP_k`: every
/// `r`-colouring has a monochromatic copy iff the system of copies has no
/// proper `r`-colouring.
pub fn arrows(
    base: CopyBase<'_>,
    kind: CopyKind,
    k: usize,
    r: u32,
    budget: &SearchBudget,
) -> Result<ArrowOutcome> {
    let system = system_of_copies(kind, base, k)?;
    let mut meter = budget.meter();
    arrows_in(&system, r, &mut meter)
}

pub(crate) fn arrows_in(system: &UniformHypergraph, r: u32, meter: &mut Meter) -> Result<ArrowOutcome> {
    Ok(ArrowOutcome::from_colouring(colouring_search_metered(system, r, meter)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::hypergraph::{ap_system, clique_system, cycle_system};

    fn unlimited() -> SearchBudget {
        SearchBudget::UNLIMITED
    }

    #[test]
    fn verify_basic_cases() {
        let h = UniformHypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap();
        assert!(!verify_colouring(&h, &Colouring::constant(3, 1, 2)).unwrap());
        assert!(verify_colouring(&h, &Colouring::new(2, vec![1, 1, 2]).unwrap()).unwrap());
        let empty = UniformHypergraph::new(3, 4, vec![]).unwrap();
        assert!(verify_colouring(&empty, &Colouring::constant(4, 1, 1)).unwrap());
    }

    #[test]
    fn verify_rejects_partial_or_out_of_range() {
        let h = UniformHypergraph::new(2, 3, vec![vec![0, 1]]).unwrap();
        assert!(matches!(
            verify_colouring(&h, &Colouring::constant(2, 1, 2)),
            Err(Error::PartialColouring { .. })
        ));
        let bad = Colouring { num_colours: 2, colours: vec![1, 3, 1] };
        assert!(matches!(verify_colouring(&h, &bad), Err(Error::ColourOutOfRange { .. })));
    }

    #[test]
    fn k33_split_into_hexagon_and_matching() {
        let g = Graph::complete_bipartite(3, 3);
        // hexagon 0-3-1-4-2-5-0, matching 0-4, 1-5, 2-3
        let hexagon = [(0, 3), (1, 3), (1, 4), (2, 4), (2, 5), (0, 5)];
        let colours = g
            .edges()
            .iter()
            .map(|e| if hexagon.contains(e) { 1 } else { 2 })
            .collect();
        let h = cycle_system(&g, 4).unwrap();
        assert_eq!(h.edge_count(), 9);
        assert!(verify_colouring(&h, &Colouring::new(2, colours).unwrap()).unwrap());
    }

    #[test]
    fn single_edge_is_two_colourable() {
        let h = UniformHypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap();
        let s = colouring_search(&h, 2, &unlimited()).unwrap();
        match s.outcome {
            ColouringOutcome::Proper { witness } => assert!(verify_colouring(&h, &witness).unwrap()),
            other => panic!("{other:?}"),
        }
        let one = colouring_search(&h, 1, &unlimited()).unwrap();
        assert_eq!(one.outcome, ColouringOutcome::Uncolourable);
    }

    #[test]
    fn van_der_waerden_three_two() {
        let nine = colouring_search(&ap_system(9, 3).unwrap(), 2, &unlimited()).unwrap();
        assert_eq!(nine.outcome, ColouringOutcome::Uncolourable);
        let eight = ap_system(8, 3).unwrap();
        match colouring_search(&eight, 2, &unlimited()).unwrap().outcome {
            ColouringOutcome::Proper { witness } => assert!(verify_colouring(&eight, &witness).unwrap()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn first_vertex_gets_colour_one() {
        let h = ap_system(8, 3).unwrap();
        if let ColouringOutcome::Proper { witness } = colouring_search(&h, 2, &unlimited()).unwrap().outcome {
            assert_eq!(witness.colour(0), 1);
        }
    }

    #[test]
    fn budget_is_never_a_verdict() {
        let h = ap_system(9, 3).unwrap();
        let s = colouring_search(&h, 2, &SearchBudget::nodes(5)).unwrap();
        assert_eq!(s.outcome, ColouringOutcome::BudgetExceeded);
    }

    #[test]
    fn arrowing_triangles() {
        let six = arrows(CopyBase::Graph(&Graph::complete(6)), CopyKind::Clique, 3, 2, &unlimited()).unwrap();
        assert_eq!(six, ArrowOutcome::Arrows);
        let k5 = Graph::complete(5);
        match arrows(CopyBase::Graph(&k5), CopyKind::Clique, 3, 2, &unlimited()).unwrap() {
            ArrowOutcome::NotArrows { witness } => {
                let sys = clique_system(&k5, 3).unwrap();
                assert!(verify_colouring(&sys, &witness).unwrap());
                // both classes are 5-cycles
                assert_eq!(witness.class_sizes(), vec![5, 5]);
                for c in 1..=2 {
                    let class = k5.edge_subgraph((0..10).filter(|&i| witness.colour(i) == c));
                    assert_eq!(class.girth(), crate::graph::Girth::Finite(5));
                }
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn one_colour_arrows_any_host_of_the_pattern() {
        let g = Graph::cycle(5);
        let out = arrows(CopyBase::Graph(&g), CopyKind::Cycle, 5, 1, &unlimited()).unwrap();
        assert_eq!(out, ArrowOutcome::Arrows);
    }

    #[test]
    fn zero_colours_is_invalid() {
        let h = ap_system(5, 3).unwrap();
        assert!(colouring_search(&h, 0, &unlimited()).is_err());
    }
}
