//! Resource limits and cooperative cancellation.
//!
//! Every potentially exponential operation takes a [`Budget`]. Exceeding a
//! limit is reported as [`Error::BudgetExceeded`], never as a panic or abort.

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Shared flag polled by long-running conversions.
#[derive(Debug, Clone, Default)]
pub struct CancelToken(Arc<AtomicBool>);

impl CancelToken {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cancel(&self) {
        self.0.store(true, Ordering::SeqCst);
    }

    pub fn is_cancelled(&self) -> bool {
        self.0.load(Ordering::Relaxed)
    }
}

#[derive(Debug, Clone)]
pub struct Budget {
    /// Largest automaton (in states) any single construction may produce.
    pub max_states: usize,
    /// Longest word enumerated by the language oracles.
    pub max_len: usize,
    /// Largest number of words an enumeration may hold.
    pub max_words: usize,
    /// Largest RPN size explored by the minimal-regex search.
    pub max_size: usize,
    /// Largest number of candidate expressions the minimal-regex search may examine.
    pub max_candidates: usize,
    /// Largest number of shared expression nodes created during state elimination.
    pub max_expr_nodes: usize,
    cancel: CancelToken,
    deadline: Option<Instant>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_states: 1_000_000,
            max_len: 16,
            max_words: 2_000_000,
            max_size: 9,
            max_candidates: 5_000_000,
            max_expr_nodes: 5_000_000,
            cancel: CancelToken::new(),
            deadline: None,
        }
    }
}

impl Budget {
    pub fn with_cancel(mut self, token: CancelToken) -> Self {
        self.cancel = token;
        self
    }

    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.deadline = Some(Instant::now() + limit);
        self
    }

    pub fn with_max_states(mut self, max_states: usize) -> Self {
        self.max_states = max_states;
        self
    }

    pub fn cancel_token(&self) -> &CancelToken {
        &self.cancel
    }

    /// Checks cancellation and the wall-clock deadline.
    pub fn poll(&self) -> Result<()> {
        if self.cancel.is_cancelled() {
            return Err(Error::Cancelled);
        }
        if let Some(deadline) = self.deadline {
            if Instant::now() >= deadline {
                return Err(Error::Cancelled);
            }
        }
        Ok(())
    }

    pub fn check_states(&self, states: usize) -> Result<()> {
        if states > self.max_states {
            return Err(Error::BudgetExceeded {
                what: "automaton states",
                limit: self.max_states,
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_is_observed() {
        let budget = Budget::default();
        assert!(budget.poll().is_ok());
        budget.cancel_token().cancel();
        assert_eq!(budget.poll(), Err(Error::Cancelled));
    }

    #[test]
    fn state_limit() {
        let budget = Budget::default().with_max_states(10);
        assert!(budget.check_states(10).is_ok());
        assert!(budget.check_states(11).unwrap_err().is_budget());
    }
}
