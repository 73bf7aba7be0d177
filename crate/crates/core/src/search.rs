use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::Instant;

use serde::Serialize;

/// Limits on a single exhaustive search.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub max_seconds: f64,
}

impl SearchBudget {
    pub fn new(max_nodes: u64, max_seconds: f64) -> Self {
        assert!(max_nodes > 0, "node budget must be positive");
        assert!(max_seconds > 0.0, "time budget must be positive");
        SearchBudget {
            max_nodes,
            max_seconds,
        }
    }

    pub fn nodes(max_nodes: u64) -> Self {
        SearchBudget::new(max_nodes, 3600.0)
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget::new(1_000_000_000, 600.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchStatus {
    Found,
    ExhaustedNone,
    Inconclusive,
}

/// Result of a budgeted search. `witness` is present iff `status` is
/// [`SearchStatus::Found`].
#[derive(Debug, Clone, PartialEq)]
pub struct SearchOutcome<T> {
    status: SearchStatus,
    witness: Option<T>,
    pub nodes_explored: u64,
}

impl<T> SearchOutcome<T> {
    pub fn found(witness: T, nodes_explored: u64) -> Self {
        SearchOutcome {
            status: SearchStatus::Found,
            witness: Some(witness),
            nodes_explored,
        }
    }

    pub fn exhausted(nodes_explored: u64) -> Self {
        SearchOutcome {
            status: SearchStatus::ExhaustedNone,
            witness: None,
            nodes_explored,
        }
    }

    pub fn inconclusive(nodes_explored: u64) -> Self {
        SearchOutcome {
            status: SearchStatus::Inconclusive,
            witness: None,
            nodes_explored,
        }
    }

    pub fn status(&self) -> SearchStatus {
        self.status
    }

    pub fn witness(&self) -> Option<&T> {
        self.witness.as_ref()
    }

    pub fn into_witness(self) -> Option<T> {
        self.witness
    }

    pub fn is_found(&self) -> bool {
        self.status == SearchStatus::Found
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> SearchOutcome<U> {
        SearchOutcome {
            status: self.status,
            witness: self.witness.map(f),
            nodes_explored: self.nodes_explored,
        }
    }
}

/// Node counter with a budget. Shared by reference across rayon workers.
#[derive(Debug)]
pub(crate) struct Meter {
    nodes: AtomicU64,
    max_nodes: u64,
    max_seconds: f64,
    start: Instant,
    exhausted: AtomicBool,
}

impl Meter {
    pub fn new(budget: SearchBudget) -> Self {
        Meter {
            nodes: AtomicU64::new(0),
            max_nodes: budget.max_nodes,
            max_seconds: budget.max_seconds,
            start: Instant::now(),
            exhausted: AtomicBool::new(false),
        }
    }

    /// Counts one node. Returns false once the budget is spent.
    #[inline]
    pub fn tick(&self) -> bool {
        if self.exhausted.load(Ordering::Relaxed) {
            return false;
        }
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if n > self.max_nodes
            || (n & 0x3ff == 0 && self.start.elapsed().as_secs_f64() > self.max_seconds)
        {
            self.exhausted.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }

    pub fn is_exhausted(&self) -> bool {
        self.exhausted.load(Ordering::Relaxed)
    }

    pub fn nodes(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed).min(self.max_nodes)
    }
}
