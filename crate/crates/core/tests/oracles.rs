//! Cross-checks of the kernels against naive, independently written oracles.

use std::collections::BTreeSet;

use girthram_core::bounds::{cycles_in_complete, expected_short_cycle_counts, CycleKind};
use girthram_core::colouring::ColouringOutcome;
use girthram_core::exact::{extremal_ex, ramsey_decide, RamseyKind};
use girthram_core::hypergraph::ap_system;
use girthram_core::*;
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Number of `j`-cycles in `K_n`: injective vertex sequences modulo rotation
/// and reflection.
fn brute_cycles_in_complete(n: usize, j: usize) -> u64 {
    fn rec(n: usize, j: usize, used: &mut Vec<bool>, len: usize) -> u64 {
        if len == j {
            return 1;
        }
        let mut total = 0;
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                total += rec(n, j, used, len + 1);
                used[v] = false;
            }
        }
        total
    }
    rec(n, j, &mut vec![false; n], 0) / (2 * j as u64)
}

fn brute_ap(n: u64, k: u64) -> u64 {
    let mut c = 0;
    for a in 1..=n {
        let mut d = 1;
        while a + (k - 1) * d <= n {
            c += 1;
            d += 1;
        }
    }
    c
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

fn fact(n: u64) -> u64 {
    (1..=n).product()
}

/// Proper `r`-colourings by trying all `r^N` assignments.
fn naive_colourable(hg: &UniformHypergraph, r: u32) -> bool {
    let n = hg.num_vertices();
    let mut c = vec![0u32; n];
    loop {
        if hg.edges().all(|e| e.iter().any(|&v| c[v] != c[e[0]])) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            c[i] += 1;
            if c[i] < r {
                break;
            }
            c[i] = 0;
            i += 1;
        }
    }
}

fn span(hg: &UniformHypergraph, ids: &[usize]) -> usize {
    ids.iter().flat_map(|&i| hg.edge(i).iter().copied()).collect::<BTreeSet<_>>().len()
}

/// Every edge subset of size `2..g`, in order of size then lexicographic.
fn subset_girth(hg: &UniformHypergraph, g: usize) -> Option<Vec<usize>> {
    fn first(hg: &UniformHypergraph, size: usize, from: usize, ids: &mut Vec<usize>) -> bool {
        if ids.len() == size {
            return span(hg, ids) <= (hg.uniformity() - 1) * size;
        }
        for e in from..hg.edge_count() {
            ids.push(e);
            if first(hg, size, e + 1, ids) {
                return true;
            }
            ids.pop();
        }
        false
    }
    for size in 2..g {
        let mut ids = Vec::new();
        if first(hg, size, 0, &mut ids) {
            return Some(ids);
        }
    }
    None
}

/// Short cycles by trying every edge sequence; canonical form is the
/// lexicographically least rotation/reflection.
fn brute_short_cycles(hg: &UniformHypergraph, g: usize) -> Vec<u64> {
    let m = hg.edge_count();
    let mut counts = vec![0u64; g.max(2)];
    let inter = |a: usize, b: usize| -> Vec<usize> {
        hg.edge(a).iter().copied().filter(|v| hg.edge(b).contains(v)).collect()
    };
    for a in 0..m {
        for b in a + 1..m {
            if g > 2 && inter(a, b).len() >= 2 {
                counts[2] += 1;
            }
        }
    }
    for j in 3..g {
        let mut seen = BTreeSet::new();
        let mut seq = Vec::new();
        fn extend(
            j: usize,
            m: usize,
            seq: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if seq.len() == j {
                out.push(seq.clone());
                return;
            }
            for e in 0..m {
                if !seq.contains(&e) {
                    seq.push(e);
                    extend(j, m, seq, out);
                    seq.pop();
                }
            }
        }
        let mut all = Vec::new();
        extend(j, m, &mut seq, &mut all);
        for s in all {
            let mut points = Vec::new();
            let mut ok = true;
            for i in 0..j {
                for l in i + 1..j {
                    let consecutive = l == i + 1 || (i == 0 && l == j - 1);
                    let x = inter(s[i], s[l]);
                    if consecutive {
                        if x.len() != 1 {
                            ok = false;
                        } else {
                            points.push(x[0]);
                        }
                    } else if !x.is_empty() {
                        ok = false;
                    }
                }
            }
            let distinct: BTreeSet<_> = points.iter().collect();
            if !ok || distinct.len() != j {
                continue;
            }
            let mut forms = Vec::new();
            for rot in 0..j {
                let r: Vec<usize> = (0..j).map(|i| s[(i + rot) % j]).collect();
                let mut rev = r.clone();
                rev.reverse();
                forms.push(r);
                forms.push(rev);
            }
            seen.insert(forms.into_iter().min().unwrap());
        }
        counts[j] = seen.len() as u64;
    }
    counts
}

#[test]
fn cycle_counts_in_complete_graphs() {
    for n in 3..=8usize {
        let kn = Graph::complete(n);
        for j in 3..=n {
            let formula = fact(j as u64 - 1) / 2 * binom(n as u64, j as u64);
            assert_eq!(brute_cycles_in_complete(n, j), formula, "K_{n}, j={j}");
            let sys = system_of_copies(CopyKind::Cycle, CopyBase::Graph(&kn), j).unwrap();
            assert_eq!(sys.edge_count() as u64, formula, "K_{n}, j={j}");
            assert_eq!(cycles_in_complete(n as u64, j as u64), BigUint::from(formula));
        }
    }
}

#[test]
fn expectation_matches_weighted_enumeration() {
    let p = BigRational::new(1.into(), 7.into());
    for n in 3..=8u64 {
        let list = expected_short_cycle_counts(CycleKind::Graph, n, &p, 9, 0, 96).unwrap();
        let mut total = BigRational::zero();
        for e in &list {
            let mut pj = BigRational::one();
            for _ in 0..e.j {
                pj *= &p;
            }
            let want = BigRational::from_integer(brute_cycles_in_complete(n as usize, e.j as usize).into()) * pj;
            assert_eq!(e.exact.as_ref().unwrap(), &want);
            total += want;
        }
        let sum: BigRational = list.iter().map(|e| e.exact.clone().unwrap()).sum();
        assert_eq!(sum, total);
    }
}

#[test]
fn ap_counts_and_degrees() {
    for n in 1..=500u64 {
        for k in 3..=5u64 {
            let formula = ap_count_formula(n, k);
            assert_eq!(formula, brute_ap(n, k), "N={n} k={k}");
            if n as usize >= k as usize {
                let sys = ap_system(n as usize, k as usize).unwrap();
                assert_eq!(sys.edge_count() as u64, formula);
                let (d1, _) = j_degree(&sys, 1).unwrap();
                let (_, max_d2) = j_degree(&sys, 2).unwrap();
                assert!(max_d2 <= binom(k, 2), "N={n} k={k}");
                if n >= 6 {
                    let holds = d1 >= BigRational::new((n as i64).into(), 2.into());
                    // d_1 >= N/2 only sets in once N is large compared with k.
                    let expected = match k {
                        3 => true,
                        4 => n >= 12,
                        _ => n >= 20,
                    };
                    assert_eq!(holds, expected, "N={n} k={k}");
                }
            }
        }
    }
}

#[test]
fn clique_system_degree_identity() {
    for n in 2..=12usize {
        let kn = Graph::complete(n);
        for k in 2..=5usize.min(n) {
            let sys = system_of_copies(CopyKind::Clique, CopyBase::Graph(&kn), k).unwrap();
            let st = degree_stats(&sys).unwrap();
            let want = binom(n as u64 - 2, k as u64 - 2);
            assert_eq!(st.avg_d(1), &BigRational::from_integer(want.into()), "n={n} k={k}");
            assert_eq!(st.max_d(1), want);
        }
    }
}

#[test]
fn spec_examples_for_copies() {
    let k4 = Graph::complete(4);
    let tri = system_of_copies(CopyKind::Cycle, CopyBase::Graph(&k4), 3).unwrap();
    assert_eq!((tri.edge_count(), tri.uniformity(), tri.num_vertices()), (4, 3, 6));
    let ap = ap_system(5, 3).unwrap();
    let labelled: Vec<Vec<u64>> =
        ap.edges().map(|e| e.iter().map(|&v| ap.int_label(v).unwrap()).collect()).collect();
    let mut got = labelled.clone();
    got.sort();
    assert_eq!(got, vec![vec![1, 2, 3], vec![1, 3, 5], vec![2, 3, 4], vec![3, 4, 5]]);
    assert_eq!(ap_count_formula(9, 3), 16);
    let k5 = Graph::complete(5);
    let cl = system_of_copies(CopyKind::Clique, CopyBase::Graph(&k5), 3).unwrap();
    assert_eq!((cl.edge_count(), cl.num_vertices()), (10, 10));
}

#[test]
fn k4_triangle_two_cycles_from_oracle() {
    let k4 = Graph::complete(4);
    let tri = system_of_copies(CopyKind::Cycle, CopyBase::Graph(&k4), 3).unwrap();
    let want = brute_short_cycles(&tri, 3);
    let got = enumerate_short_cycles(&tri, 3).unwrap();
    assert_eq!(got.count(2), want[2]);
}

#[test]
fn petersen_girth_by_bfs_oracle() {
    let p = Graph::petersen();
    assert_eq!((p.n(), p.edge_count()), (10, 15));
    let mut best = usize::MAX;
    for s in 0..p.n() {
        let mut dist = vec![usize::MAX; p.n()];
        let mut parent = vec![usize::MAX; p.n()];
        dist[s] = 0;
        let mut q = std::collections::VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for &w in p.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    assert_eq!(best, 5);
    assert_eq!(p.girth(), Girth::Finite(5));
}

#[test]
fn colouring_search_matches_naive_oracle() {
    let cases: Vec<(UniformHypergraph, u32)> = vec![
        (ap_system(8, 3).unwrap(), 2),
        (ap_system(9, 3).unwrap(), 2),
        (ap_system(12, 4).unwrap(), 2),
        (system_of_copies(CopyKind::Clique, CopyBase::Graph(&Graph::complete(5)), 3).unwrap(), 2),
        (system_of_copies(CopyKind::Clique, CopyBase::Graph(&Graph::complete(6)), 3).unwrap(), 2),
        (system_of_copies(CopyKind::Cycle, CopyBase::Graph(&Graph::complete(5)), 4).unwrap(), 2),
    ];
    for (hg, r) in cases {
        let naive = naive_colourable(&hg, r);
        match colouring_search(&hg, r, &SearchBudget::UNLIMITED).unwrap().outcome {
            ColouringOutcome::Proper { witness } => {
                assert!(naive);
                assert!(verify_colouring(&hg, &witness).unwrap());
            }
            ColouringOutcome::Uncolourable => assert!(!naive),
            ColouringOutcome::BudgetExceeded => unreachable!(),
        }
    }
}

#[test]
fn k33_hexagon_and_matching_is_c4_free() {
    let k33 = Graph::complete_bipartite(3, 3);
    let sys = system_of_copies(CopyKind::Cycle, CopyBase::Graph(&k33), 4).unwrap();
    // Parts {0,1,2} and {3,4,5}; matching i -- i+3, hexagon on the rest.
    let colours: Vec<u32> = k33.edges().iter().map(|&(u, v)| if v == u + 3 { 2 } else { 1 }).collect();
    let c = Colouring::new(2, colours).unwrap();
    assert!(verify_colouring(&sys, &c).unwrap());
}

#[test]
fn small_ramsey_witnesses() {
    match ramsey_decide(RamseyKind::Clique, 3, 2, 5, &SearchBudget::UNLIMITED).unwrap() {
        ArrowOutcome::NotArrows { witness } => {
            let k5 = Graph::complete(5);
            let sys = system_of_copies(CopyKind::Clique, CopyBase::Graph(&k5), 3).unwrap();
            assert!(verify_colouring(&sys, &witness).unwrap());
            // Each colour class is a 5-cycle.
            for col in 1..=2 {
                let keep = (0..10).filter(|&e| witness.colour(e) == col);
                let sub = k5.edge_subgraph(keep);
                assert_eq!(sub.edge_count(), 5);
                assert!((0..5).all(|v| sub.degree(v) == 2));
                assert_eq!(sub.girth(), Girth::Finite(5));
            }
        }
        other => panic!("{other:?}"),
    }
    assert_eq!(ramsey_decide(RamseyKind::Cycle, 4, 2, 6, &SearchBudget::UNLIMITED).unwrap(), ArrowOutcome::Arrows);
    match ramsey_decide(RamseyKind::Cycle, 4, 2, 5, &SearchBudget::UNLIMITED).unwrap() {
        ArrowOutcome::NotArrows { witness } => {
            let sys = system_of_copies(CopyKind::Cycle, CopyBase::Graph(&Graph::complete(5)), 4).unwrap();
            assert!(verify_colouring(&sys, &witness).unwrap());
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn extremal_matches_subset_enumeration() {
    // Every edge subset of K_n with girth above m, for n <= 6.
    for n in 3..=6usize {
        let kn = Graph::complete(n);
        let pairs = kn.edges().to_vec();
        for m in 3..=5usize {
            let mut best = 0;
            for mask in 0u32..(1 << pairs.len()) {
                let sel: Vec<_> = (0..pairs.len()).filter(|i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
                if sel.len() > best && Graph::from_edges(n, &sel).unwrap().girth().at_least(m + 1) {
                    best = sel.len();
                }
            }
            let e = extremal_ex(n, m, &SearchBudget::UNLIMITED).unwrap();
            assert!(e.is_exact());
            assert_eq!(e.max_edges(), best, "n={n} m={m}");
            assert!(e.witness().girth().at_least(m + 1));
        }
    }
    assert_eq!(extremal_ex(3, 3, &SearchBudget::UNLIMITED).unwrap().max_edges(), 2);
}

#[test]
fn girth_and_cycles_match_oracles_on_fixed_cases() {
    let a = UniformHypergraph::new(3, 6, vec![vec![0, 1, 2], vec![0, 2, 4]]).unwrap();
    let v = sparsity_girth(&a, 3).unwrap();
    assert!(!v.satisfied);
    assert_eq!(v.witness, Some(vec![0, 1]));
    assert_eq!(enumerate_short_cycles(&a, 3).unwrap().count(2), 1);
    let tri = UniformHypergraph::new(3, 6, vec![vec![0, 1, 2], vec![2, 3, 4], vec![4, 5, 0]]).unwrap();
    assert!(sparsity_girth(&tri, 3).unwrap().satisfied);
    assert!(!sparsity_girth(&tri, 4).unwrap().satisfied);
    let rep = enumerate_short_cycles(&tri, 4).unwrap();
    assert_eq!((rep.count(2), rep.count(3)), (0, 1));
    assert_eq!(brute_short_cycles(&tri, 4), vec![0, 0, 0, 1]);
    assert_eq!(subset_girth(&tri, 4), Some(vec![0, 1, 2]));
}

#[test]
fn random_hypergraphs_girth_agreement() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
    let mut disagreements = Vec::new();
    for _ in 0..300 {
        let nv = rng.gen_range(3..=12usize);
        let m = rng.gen_range(0..=8usize);
        let edges: Vec<Vec<usize>> = (0..m)
            .map(|_| {
                let mut e = BTreeSet::new();
                while e.len() < 3 {
                    e.insert(rng.gen_range(0..nv));
                }
                e.into_iter().collect()
            })
            .collect();
        let Ok(hg) = UniformHypergraph::new(3, nv, edges) else { continue };
        let g = rng.gen_range(2..=5usize);
        let verdict = sparsity_girth(&hg, g).unwrap();
        let oracle = subset_girth(&hg, g);
        assert_eq!(verdict.witness, oracle);
        assert_eq!(verdict.satisfied, oracle.is_none());
        let rep = enumerate_short_cycles(&hg, g).unwrap();
        let brute = brute_short_cycles(&hg, g);
        for j in 2..g {
            assert_eq!(rep.count(j), brute[j], "j={j}");
        }
        if !rep.is_empty() {
            assert!(!verdict.satisfied);
        }
        if rep.is_empty() != verdict.satisfied {
            disagreements.push(hg);
        }
    }
    // Definitional gap between the two girth notions: recorded, not asserted.
    eprintln!("cycle-vs-sparsity disagreements: {}", disagreements.len());
}
