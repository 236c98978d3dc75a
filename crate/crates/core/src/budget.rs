//! Resource budgets for enumeration, sieving and nets.
//!
//! Defaults can be overridden through the `DIRECTIONS_BUDGET` environment
//! variable, either as a bare integer (the tuple budget) or as a comma list
//! of `key=value` pairs with keys `tuples`, `elements` and `net`.

use crate::error::{Error, Result};

pub const BUDGET_ENV: &str = "DIRECTIONS_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of ordered tuples an exhaustive enumeration may visit.
    pub tuples: u64,
    /// Maximum ground-set bound `N` that may be materialized.
    pub elements: u64,
    /// Maximum number of points in a sphere net.
    pub net_points: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            tuples: 20_000_000,
            elements: 1 << 28,
            net_points: 4_000_000,
        }
    }
}

impl Budget {
    /// Defaults, overridden by `DIRECTIONS_BUDGET` when set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(BUDGET_ENV) {
            Ok(spec) => Self::default().with_overrides(&spec),
            Err(_) => Ok(Self::default()),
        }
    }

    pub fn with_overrides(mut self, spec: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad {BUDGET_ENV} value {spec:?}"));
        let spec = spec.trim();
        if let Ok(n) = spec.parse::<u64>() {
            self.tuples = n;
            return Ok(self);
        }
        for part in spec.split(',') {
            let (key, value) = part.split_once('=').ok_or_else(bad)?;
            let value: u64 = value.trim().parse().map_err(|_| bad())?;
            match key.trim() {
                "tuples" => self.tuples = value,
                "elements" => self.elements = value,
                "net" => self.net_points = value,
                _ => return Err(bad()),
            }
        }
        Ok(self)
    }
}
