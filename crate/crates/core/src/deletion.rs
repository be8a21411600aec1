//! Deleting vertices to destroy every short hypergraph cycle.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::girth::{enumerate_short_cycles, sparsity_girth, CycleReport};
use crate::hypergraph::UniformHypergraph;

/// Result of a successful deletion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Deletion {
    /// Deleted vertices of the input, in the order chosen.
    pub removed: Vec<usize>,
    /// The input without `removed` and without every edge meeting it.
    pub survivor: UniformHypergraph,
    /// Short cycles of the input.
    pub report: CycleReport,
}

/// Greedily deletes the vertex lying on the most remaining short cycles
/// (ties to the smallest index) until none is left, then re-verifies the
/// survivor's girth. Fails with [`Error::CapExceeded`] if more than `cap`
/// vertices would be needed.
pub fn delete_short_cycles(hg: &UniformHypergraph, g: usize, cap: usize) -> Result<Deletion> {
    let report = enumerate_short_cycles(hg, g)?;
    let n = hg.num_vertices();
    // Vertices on each cycle: the union of its edges.
    let mut on_vertex: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (ci, c) in report.cycles.iter().enumerate() {
        let mut vs: Vec<usize> = c.edges.iter().flat_map(|&e| hg.edge(e).iter().copied()).collect();
        vs.sort_unstable();
        vs.dedup();
        for v in vs {
            on_vertex[v].push(ci);
        }
    }
    let mut alive = vec![true; report.cycles.len()];
    let mut cover: Vec<usize> = on_vertex.iter().map(Vec::len).collect();
    let mut left = report.cycles.len();
    let mut removed = Vec::new();
    while left > 0 {
        let (best, _) = cover
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
            .expect("a live cycle has vertices");
        if removed.len() == cap {
            return Err(Error::CapExceeded { cap, partial: removed });
        }
        removed.push(best);
        for &ci in &on_vertex[best] {
            if alive[ci] {
                alive[ci] = false;
                left -= 1;
                let c = &report.cycles[ci];
                let mut vs: Vec<usize> = c.edges.iter().flat_map(|&e| hg.edge(e).iter().copied()).collect();
                vs.sort_unstable();
                vs.dedup();
                for v in vs {
                    cover[v] -= 1;
                }
            }
        }
    }
    let mut sorted = removed.clone();
    sorted.sort_unstable();
    let survivor = hg.remove_vertices(&sorted);
    let verdict = sparsity_girth(&survivor, g)?;
    if !verdict.satisfied {
        return Err(Error::Postcondition(format!(
            "survivor violates girth {g} with edges {:?}",
            verdict.witness.unwrap_or_default()
        )));
    }
    Ok(Deletion { removed, survivor, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::Labels;

    fn hg(h: usize, n: usize, edges: &[&[usize]]) -> UniformHypergraph {
        UniformHypergraph::new(h, n, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    #[test]
    fn nothing_to_delete() {
        let h = hg(3, 7, &[&[0, 1, 2], &[2, 3, 4], &[4, 5, 6]]);
        let d = delete_short_cycles(&h, 4, 0).unwrap();
        assert!(d.removed.is_empty());
        assert_eq!(d.survivor.edge_count(), 3);
    }

    #[test]
    fn two_cycle_tie_breaks_low() {
        // {1,2,3}, {1,3,5} with labels starting at 1.
        let h = UniformHypergraph::with_labels(3, 5, vec![vec![0, 1, 2], vec![0, 2, 4]], Labels::Range { start: 1 })
            .unwrap();
        let d = delete_short_cycles(&h, 3, 1).unwrap();
        assert_eq!(d.removed, vec![0]);
        assert_eq!(h.int_label(0), Some(1));
        assert_eq!(d.survivor.edge_count(), 0);
        assert!(enumerate_short_cycles(&d.survivor, 3).unwrap().is_empty());
    }

    #[test]
    fn cap_exceeded_reports_partial() {
        // Two disjoint 2-cycles need two deletions.
        let h = hg(3, 8, &[&[0, 1, 2], &[0, 1, 3], &[4, 5, 6], &[4, 5, 7]]);
        match delete_short_cycles(&h, 3, 1) {
            Err(Error::CapExceeded { cap: 1, partial }) => assert_eq!(partial, vec![0]),
            other => panic!("{other:?}"),
        }
        let d = delete_short_cycles(&h, 3, 2).unwrap();
        assert_eq!(d.removed, vec![0, 4]);
    }

    #[test]
    fn greedy_prefers_shared_vertex() {
        // Vertex 3 lies on both 2-cycles.
        let h = hg(3, 7, &[&[0, 1, 3], &[0, 1, 2], &[3, 4, 5], &[3, 4, 6]]);
        let d = delete_short_cycles(&h, 3, 1).unwrap();
        assert_eq!(d.removed.len(), 1);
    }
}
