//! Node and wall-clock limits for the exhaustive searches.

#[cfg(feature = "std")]
use core::time::Duration;

/// Limits for one search. Exceeding either limit yields a budget-exceeded
/// outcome, never a verdict.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchBudget {
    pub node_limit: Option<u64>,
    /// Wall-clock limit; only available with the `std` feature.
    #[cfg(feature = "std")]
    pub time_limit: Option<Duration>,
}

impl SearchBudget {
    pub const UNLIMITED: SearchBudget = SearchBudget {
        node_limit: None,
        #[cfg(feature = "std")]
        time_limit: None,
    };

    pub fn nodes(limit: u64) -> Self {
        SearchBudget { node_limit: Some(limit), ..Self::UNLIMITED }
    }

    pub fn meter(&self) -> Meter {
        Meter::new(*self)
    }
}

#[cfg(feature = "std")]
const CLOCK_STRIDE: u64 = 4096;

/// Running node counter shared by every phase of a search.
#[derive(Debug, Clone)]
pub struct Meter {
    budget: SearchBudget,
    nodes: u64,
    exhausted: bool,
    #[cfg(feature = "std")]
    started: std::time::Instant,
}

impl Meter {
    pub fn new(budget: SearchBudget) -> Self {
        Meter {
            budget,
            nodes: 0,
            exhausted: false,
            #[cfg(feature = "std")]
            started: std::time::Instant::now(),
        }
    }

    /// Counts one node. Returns `false` once the budget is spent.
    #[inline]
    pub fn tick(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        self.nodes += 1;
        if let Some(limit) = self.budget.node_limit {
            if self.nodes > limit {
                self.exhausted = true;
                return false;
            }
        }
        #[cfg(feature = "std")]
        if self.nodes.is_multiple_of(CLOCK_STRIDE) {
            if let Some(limit) = self.budget.time_limit {
                if self.started.elapsed() > limit {
                    self.exhausted = true;
                    return false;
                }
            }
        }
        true
    }

    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    pub fn exhausted(&self) -> bool {
        self.exhausted
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn node_limit_is_strict() {
        let mut m = SearchBudget::nodes(3).meter();
        assert!(m.tick() && m.tick() && m.tick());
        assert!(!m.tick());
        assert!(m.exhausted());
        assert!(!m.tick());
    }

    #[test]
    fn unlimited_never_exhausts() {
        let mut m = SearchBudget::UNLIMITED.meter();
        for _ in 0..10_000 {
            assert!(m.tick());
        }
        assert_eq!(m.nodes(), 10_000);
    }
}
