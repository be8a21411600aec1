//! One seeded trial of a desk-scale construction and batch summaries.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::format;

use serde::{Deserialize, Serialize};

use crate::bounds::params::Theorem;
use crate::budget::SearchBudget;
use crate::colouring::{colouring_search, ColouringOutcome};
use crate::deletion::delete_short_cycles;
use crate::error::{invalid, Error, Result};
use crate::girth::enumerate_short_cycles;
use crate::hypergraph::{ap_system_on, clique_system, count_cycles, cycle_system};
use crate::sampling::{draw_seed, sample_gnp, sample_subset};

/// Default fraction `c` in the deletion cap `floor(c * p * |positions|)`.
pub const DEFAULT_CAP_FRACTION: f64 = 0.1;

/// Configuration of a batch of trials.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialConfig {
    pub theorem: Theorem,
    pub n: u64,
    pub p: f64,
    pub k: usize,
    /// Girth target for the hypergraph kinds; the cycles kind uses `k`.
    pub g: usize,
    pub r: u32,
    pub seed: u64,
    pub trials: u64,
    pub node_budget: Option<u64>,
    /// Deletion cap; `None` uses [`TrialConfig::default_cap`].
    pub cap: Option<u64>,
}

impl TrialConfig {
    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.p) {
            return Err(invalid("p must lie in [0, 1]"));
        }
        if self.n == 0 {
            return Err(invalid("n must be at least 1"));
        }
        if self.k < 3 || (self.theorem == Theorem::Cycles && self.k < 4) {
            return Err(invalid("k too small for this theorem"));
        }
        if self.theorem != Theorem::Cycles && self.g < 2 {
            return Err(invalid("g must be at least 2"));
        }
        if self.r == 0 {
            return Err(invalid("r must be at least 1"));
        }
        Ok(())
    }

    /// `floor(0.1 * p * n)` for ap, `floor(0.1 * p * C(n,2))` for cliques.
    pub fn default_cap(&self) -> u64 {
        let positions = match self.theorem {
            Theorem::Cliques => (self.n * self.n.saturating_sub(1) / 2) as f64,
            _ => self.n as f64,
        };
        libm::floor(DEFAULT_CAP_FRACTION * self.p * positions) as u64
    }

    pub fn effective_cap(&self) -> u64 {
        self.cap.unwrap_or_else(|| self.default_cap())
    }

    pub fn trial_seed(&self, index: u64) -> u64 {
        draw_seed(self.seed, index)
    }
}

/// `c * n^(-a/b)` with the construction's exponent.
pub fn scaled_p(theorem: Theorem, n: u64, k: usize, c: f64) -> f64 {
    let (a, b) = theorem.p_exponent(k as u64);
    (c * libm::pow(n as f64, -(a as f64) / b as f64)).clamp(0.0, 1.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleCount {
    pub j: usize,
    pub count: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchResult {
    /// The object arrows the pattern (no proper colouring exists).
    Arrows,
    NotArrows,
    BudgetExceeded,
    /// No search ran (girth failed or deletion failed).
    Skipped,
}

/// Outcome of one trial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub index: u64,
    pub seed: u64,
    /// Edges of the sampled graph, or elements of the sampled set.
    pub sample_size: u64,
    /// Hyperedges of the system of copies (before deletion).
    pub system_edges: u64,
    /// Short-cycle counts: graph cycles `3 <= j < k` (cycles kind) or
    /// hypergraph cycles `2 <= j < g`.
    pub cycle_counts: Vec<CycleCount>,
    /// Deleted vertices; `None` when no deletion ran.
    pub deleted: Option<u64>,
    /// Girth target met (after deletion, re-verified).
    pub girth_ok: bool,
    pub search: SearchResult,
    pub search_nodes: u64,
    pub error: Option<String>,
}

impl TrialRecord {
    fn blank(index: u64, seed: u64) -> TrialRecord {
        TrialRecord {
            index,
            seed,
            sample_size: 0,
            system_edges: 0,
            cycle_counts: Vec::new(),
            deleted: None,
            girth_ok: false,
            search: SearchResult::Skipped,
            search_nodes: 0,
            error: None,
        }
    }

    /// The construction step succeeded: girth holds (after deletion).
    pub fn succeeded(&self) -> bool {
        self.girth_ok && self.error.is_none()
    }
}

fn budget(cfg: &TrialConfig) -> SearchBudget {
    match cfg.node_budget {
        Some(n) => SearchBudget::nodes(n),
        None => SearchBudget::UNLIMITED,
    }
}

fn search(rec: &mut TrialRecord, hg: &crate::hypergraph::UniformHypergraph, cfg: &TrialConfig) -> Result<()> {
    let s = colouring_search(hg, cfg.r, &budget(cfg))?;
    rec.search_nodes = s.nodes;
    rec.search = match s.outcome {
        ColouringOutcome::Proper { .. } => SearchResult::NotArrows,
        ColouringOutcome::Uncolourable => SearchResult::Arrows,
        ColouringOutcome::BudgetExceeded => SearchResult::BudgetExceeded,
    };
    Ok(())
}

fn trial_body(cfg: &TrialConfig, rec: &mut TrialRecord) -> Result<()> {
    let seed = rec.seed;
    match cfg.theorem {
        Theorem::Cycles => {
            let g = sample_gnp(cfg.n as usize, cfg.p, seed)?;
            rec.sample_size = g.edge_count() as u64;
            rec.cycle_counts = (3..cfg.k).map(|j| CycleCount { j, count: count_cycles(&g, j) }).collect();
            rec.girth_ok = g.girth().at_least(cfg.k);
            if rec.girth_ok {
                let hg = cycle_system(&g, cfg.k)?;
                rec.system_edges = hg.edge_count() as u64;
                search(rec, &hg, cfg)?;
            }
        }
        Theorem::Ap | Theorem::Cliques => {
            let hg = if cfg.theorem == Theorem::Ap {
                let set = sample_subset(cfg.n, cfg.p, seed)?;
                rec.sample_size = set.len() as u64;
                ap_system_on(&set, cfg.k)?
            } else {
                let g = sample_gnp(cfg.n as usize, cfg.p, seed)?;
                rec.sample_size = g.edge_count() as u64;
                clique_system(&g, cfg.k)?
            };
            rec.system_edges = hg.edge_count() as u64;
            let cap = cfg.effective_cap() as usize;
            match delete_short_cycles(&hg, cfg.g, cap) {
                Ok(d) => {
                    rec.cycle_counts = counts(&d.report);
                    rec.deleted = Some(d.removed.len() as u64);
                    rec.girth_ok = true;
                    search(rec, &d.survivor, cfg)?;
                }
                Err(Error::CapExceeded { partial, .. }) => {
                    rec.cycle_counts = counts(&enumerate_short_cycles(&hg, cfg.g)?);
                    rec.deleted = Some(partial.len() as u64);
                    rec.error = Some(format!("deletion cap {cap} exceeded"));
                }
                Err(e) => return Err(e),
            }
        }
    }
    Ok(())
}

fn counts(report: &crate::girth::CycleReport) -> Vec<CycleCount> {
    report.summary().into_iter().map(|(j, count)| CycleCount { j, count }).collect()
}

/// Runs trial `index`; failures are recorded, never propagated.
pub fn run_trial(cfg: &TrialConfig, index: u64) -> TrialRecord {
    let mut rec = TrialRecord::blank(index, cfg.trial_seed(index));
    if let Err(e) = trial_body(cfg, &mut rec) {
        rec.error = Some(e.to_string());
        rec.girth_ok = false;
    }
    rec
}

/// Aggregates over a batch.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialSummary {
    pub trials: u64,
    pub successes: u64,
    pub success_rate: f64,
    pub arrows: u64,
    pub budget_exceeded: u64,
    pub errors: u64,
    /// Mean count per cycle length.
    pub mean_cycle_counts: Vec<MeanCount>,
    pub mean_deleted: Option<f64>,
    pub mean_sample_size: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeanCount {
    pub j: usize,
    pub mean: f64,
    pub std_error: f64,
}

pub fn summarize(records: &[TrialRecord]) -> TrialSummary {
    let t = records.len() as u64;
    let tf = t.max(1) as f64;
    let successes = records.iter().filter(|r| r.succeeded()).count() as u64;
    let mut js: Vec<usize> = records.iter().flat_map(|r| r.cycle_counts.iter().map(|c| c.j)).collect();
    js.sort_unstable();
    js.dedup();
    let mean_cycle_counts = js
        .into_iter()
        .map(|j| {
            let vals: Vec<f64> = records
                .iter()
                .map(|r| r.cycle_counts.iter().find(|c| c.j == j).map_or(0.0, |c| c.count as f64))
                .collect();
            let mean = vals.iter().sum::<f64>() / tf;
            let var = if vals.len() > 1 {
                vals.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (vals.len() - 1) as f64
            } else {
                0.0
            };
            MeanCount { j, mean, std_error: libm::sqrt(var / tf) }
        })
        .collect();
    let deleted: Vec<u64> = records.iter().filter_map(|r| r.deleted).collect();
    TrialSummary {
        trials: t,
        successes,
        success_rate: if t == 0 { 0.0 } else { successes as f64 / t as f64 },
        arrows: records.iter().filter(|r| r.search == SearchResult::Arrows).count() as u64,
        budget_exceeded: records.iter().filter(|r| r.search == SearchResult::BudgetExceeded).count() as u64,
        errors: records.iter().filter(|r| r.error.is_some()).count() as u64,
        mean_cycle_counts,
        mean_deleted: if deleted.is_empty() {
            None
        } else {
            Some(deleted.iter().sum::<u64>() as f64 / deleted.len() as f64)
        },
        mean_sample_size: records.iter().map(|r| r.sample_size as f64).sum::<f64>() / tf,
    }
}

/// Runs all trials sequentially in index order.
pub fn run_trials(cfg: &TrialConfig) -> Result<(Vec<TrialRecord>, TrialSummary)> {
    cfg.validate()?;
    let records: Vec<TrialRecord> = (0..cfg.trials).map(|i| run_trial(cfg, i)).collect();
    let summary = summarize(&records);
    Ok((records, summary))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(theorem: Theorem) -> TrialConfig {
        TrialConfig {
            theorem,
            n: 60,
            p: 0.05,
            k: 4,
            g: 4,
            r: 2,
            seed: 11,
            trials: 5,
            node_budget: Some(100_000),
            cap: None,
        }
    }

    #[test]
    fn zero_trials() {
        let mut c = cfg(Theorem::Ap);
        c.trials = 0;
        let (recs, s) = run_trials(&c).unwrap();
        assert!(recs.is_empty());
        assert_eq!(s.trials, 0);
        assert_eq!(s.success_rate, 0.0);
    }

    #[test]
    fn reproducible() {
        for th in [Theorem::Cycles, Theorem::Ap, Theorem::Cliques] {
            let c = cfg(th);
            assert_eq!(run_trials(&c).unwrap().0, run_trials(&c).unwrap().0);
        }
    }

    #[test]
    fn default_caps() {
        let mut c = cfg(Theorem::Ap);
        c.n = 2000;
        c.p = scaled_p(Theorem::Ap, 2000, 3, 0.5);
        c.k = 3;
        assert_eq!(c.default_cap(), 2);
        let mut d = cfg(Theorem::Cliques);
        d.n = 10;
        d.p = 0.5;
        assert_eq!(d.default_cap(), 2);
    }

    #[test]
    fn errors_are_recorded() {
        let mut c = cfg(Theorem::Cliques);
        c.p = 1.0;
        c.n = 8;
        c.k = 3;
        c.cap = Some(0);
        let r = run_trial(&c, 0);
        assert!(r.error.is_some());
        assert!(!r.succeeded());
    }
}
