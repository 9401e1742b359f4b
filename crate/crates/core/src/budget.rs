use std::cell::Cell;

use crate::error::Error;

/// Default node-expansion cap for exponential searches.
pub const DEFAULT_NODE_BUDGET: u64 = 20_000_000;

/// Environment variable that overrides [`DEFAULT_NODE_BUDGET`].
pub const BUDGET_ENV: &str = "CONTRACT_LAB_BUDGET";

/// Node-expansion cap shared by the backtracking searches.
///
/// A budget is consumed through [`Budget::tick`]; once the cap is passed the
/// search stops and reports [`Outcome::Exhausted`] rather than a negative answer.
#[derive(Debug, Clone)]
pub struct Budget {
    limit: u64,
    used: Cell<u64>,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: Cell::new(0) }
    }

    pub fn unlimited() -> Self {
        Budget::new(u64::MAX)
    }

    /// Default budget, honouring `CONTRACT_LAB_BUDGET` when it parses.
    pub fn from_env() -> Self {
        let limit = std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_NODE_BUDGET);
        Budget::new(limit)
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn used(&self) -> u64 {
        self.used.get()
    }

    /// Fresh budget with the same cap.
    pub fn fresh(&self) -> Self {
        Budget::new(self.limit)
    }

    /// Records one node expansion; returns `false` once the cap is exceeded.
    #[inline]
    pub fn tick(&self) -> bool {
        let used = self.used.get() + 1;
        self.used.set(used);
        used <= self.limit
    }

    pub fn exhausted(&self) -> bool {
        self.used.get() > self.limit
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::from_env()
    }
}

/// Result of a budgeted search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome<T> {
    Found(T),
    Absent,
    Exhausted,
}

impl<T> Outcome<T> {
    pub fn is_found(&self) -> bool {
        matches!(self, Outcome::Found(_))
    }

    pub fn is_exhausted(&self) -> bool {
        matches!(self, Outcome::Exhausted)
    }

    pub fn found(self) -> Option<T> {
        match self {
            Outcome::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Outcome<U> {
        match self {
            Outcome::Found(t) => Outcome::Found(f(t)),
            Outcome::Absent => Outcome::Absent,
            Outcome::Exhausted => Outcome::Exhausted,
        }
    }

    /// Collapses to `Option`, turning exhaustion into an error.
    pub fn into_result(self, budget: &Budget) -> Result<Option<T>, Error> {
        match self {
            Outcome::Found(t) => Ok(Some(t)),
            Outcome::Absent => Ok(None),
            Outcome::Exhausted => Err(Error::BudgetExhausted(budget.used())),
        }
    }
}
