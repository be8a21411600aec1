//! Seeded samplers for `G(n, p)` and `[N]_p`.
//!
//! Every sampler draws from ChaCha20 seeded with `seed_from_u64`, visiting
//! the candidate pairs (lexicographic) or integers (ascending) in order and
//! drawing one Bernoulli variate each.

use alloc::vec::Vec;

use rand::distributions::{Bernoulli, Distribution, Uniform};
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use serde::Serialize;

use crate::colouring::Colouring;
use crate::error::{invalid, Result};
use crate::graph::Graph;

/// Identifier of the generator and seeding scheme, recorded in every output.
pub const PRNG_ID: &str = "chacha20/rand_chacha-0.3/seed_from_u64";

/// The generator used by every sampler.
pub fn rng(seed: u64) -> ChaCha20Rng {
    ChaCha20Rng::seed_from_u64(seed)
}

fn bernoulli(p: f64) -> Result<Bernoulli> {
    Bernoulli::new(p).map_err(|_| invalid("p must lie in [0, 1]"))
}

/// `G(n, p)`: each pair `{u, v}` independently with probability `p`.
pub fn sample_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    let dist = bernoulli(p)?;
    let mut rng = rng(seed);
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if dist.sample(&mut rng) {
                pairs.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &pairs)
}

/// `[N]_p`: each of `1..=N` independently with probability `p`, ascending.
pub fn sample_subset(n: u64, p: f64, seed: u64) -> Result<Vec<u64>> {
    let dist = bernoulli(p)?;
    let mut rng = rng(seed);
    Ok((1..=n).filter(|_| dist.sample(&mut rng)).collect())
}

/// A uniformly random colouring of `len` vertices with colours `1..=colours`.
pub fn random_colouring(len: usize, colours: u32, seed: u64) -> Result<Colouring> {
    if colours == 0 {
        return Err(invalid("need at least one colour"));
    }
    let dist = Uniform::new_inclusive(1, colours);
    let mut rng = rng(seed);
    Colouring::new(colours, (0..len).map(|_| dist.sample(&mut rng)).collect())
}

/// Outcome of girth rejection sampling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rejection {
    /// The first accepted graph and the number of draws it took.
    Accepted { graph: Graph, tries: u64 },
    /// No accepted graph within the allowed draws.
    Failure { tries: u64 },
}

/// Seeds used by the `i`-th draw of a rejection run.
pub fn draw_seed(seed: u64, i: u64) -> u64 {
    seed.wrapping_add(i)
}

/// Draws `G(n, p)` with seeds `seed, seed+1, ...` until the girth is at least
/// `k`.
pub fn rejection_sample_girth(n: usize, p: f64, k: usize, seed: u64, max_tries: u64) -> Result<Rejection> {
    if k < 4 {
        return Err(invalid("k must be at least 4"));
    }
    for i in 0..max_tries {
        let g = sample_gnp(n, p, draw_seed(seed, i))?;
        if g.girth().at_least(k) {
            return Ok(Rejection::Accepted { graph: g, tries: i + 1 });
        }
    }
    Ok(Rejection::Failure { tries: max_tries })
}

/// Monte Carlo estimate of `P(girth(G(n,p)) >= k)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GirthEstimate {
    pub samples: u64,
    pub successes: u64,
    pub rate: f64,
    pub std_error: f64,
}

pub fn estimate_girth_probability(n: usize, p: f64, k: usize, seed: u64, samples: u64) -> Result<GirthEstimate> {
    let mut successes = 0;
    for i in 0..samples {
        if sample_gnp(n, p, draw_seed(seed, i))?.girth().at_least(k) {
            successes += 1;
        }
    }
    let rate = if samples == 0 { 0.0 } else { successes as f64 / samples as f64 };
    let var = rate * (1.0 - rate) / samples.max(1) as f64;
    Ok(GirthEstimate { samples, successes, rate, std_error: libm::sqrt(var) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_colourings() {
        let c = random_colouring(500, 3, 9).unwrap();
        assert_eq!(c, random_colouring(500, 3, 9).unwrap());
        assert!(c.class_sizes().iter().all(|&s| s > 100));
        assert!(random_colouring(5, 0, 1).is_err());
    }

    #[test]
    fn extremes() {
        assert_eq!(sample_gnp(7, 0.0, 3).unwrap().edge_count(), 0);
        assert_eq!(sample_gnp(7, 1.0, 3).unwrap(), Graph::complete(7));
        assert!(sample_subset(10, 0.0, 1).unwrap().is_empty());
        assert_eq!(sample_subset(10, 1.0, 1).unwrap(), (1..=10).collect::<Vec<_>>());
        assert!(sample_gnp(3, 1.5, 0).is_err());
    }

    #[test]
    fn same_seed_same_graph() {
        assert_eq!(sample_gnp(40, 0.3, 99).unwrap(), sample_gnp(40, 0.3, 99).unwrap());
        assert_ne!(sample_gnp(40, 0.3, 99).unwrap(), sample_gnp(40, 0.3, 100).unwrap());
    }

    #[test]
    fn rejection_cases() {
        match rejection_sample_girth(10, 0.0, 5, 1, 1).unwrap() {
            Rejection::Accepted { tries, .. } => assert_eq!(tries, 1),
            other => panic!("{other:?}"),
        }
        assert_eq!(rejection_sample_girth(5, 1.0, 4, 1, 10).unwrap(), Rejection::Failure { tries: 10 });
        assert!(rejection_sample_girth(5, 0.5, 3, 1, 10).is_err());
    }
}
