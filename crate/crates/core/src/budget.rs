//! Size limits for the brute-force layers.
//!
//! Ambient dimensions grow like `d^r` (tensor space) or faster (the graded
//! pieces of `F_W(V)`), so every construction that materializes a basis is
//! checked against a [`Budget`] first.

use crate::error::{Error, Result};

/// Environment variable that overrides [`Budget::DEFAULT_AMBIENT`].
pub const BUDGET_ENV: &str = "STABLEREP_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Largest ambient vector-space dimension any construction may allocate.
    pub ambient: usize,
    /// Largest `|λ|` for which a Specht module is built inside `Q[Σ_r]`.
    pub specht_weight: usize,
    /// Largest `p` for exhaustive labeled-partition enumeration.
    pub enumeration: usize,
}

impl Budget {
    pub const DEFAULT_AMBIENT: usize = 20_000;
    pub const DEFAULT_SPECHT_WEIGHT: usize = 6;
    pub const DEFAULT_ENUMERATION: usize = 8;

    pub fn with_ambient(ambient: usize) -> Self {
        Budget {
            ambient,
            ..Budget::default()
        }
    }

    /// Default budget, with the ambient cap taken from `STABLEREP_BUDGET`
    /// when that variable holds a valid integer.
    pub fn from_env() -> Self {
        match std::env::var(BUDGET_ENV).ok().and_then(|v| v.trim().parse().ok()) {
            Some(ambient) => Budget::with_ambient(ambient),
            None => Budget::default(),
        }
    }

    pub fn check_ambient(&self, what: &str, size: usize) -> Result<()> {
        if size > self.ambient {
            return Err(Error::SizeBudgetExceeded {
                what: what.to_string(),
                size,
                budget: self.ambient,
            });
        }
        Ok(())
    }

    pub fn check_specht(&self, weight: usize) -> Result<()> {
        if weight > self.specht_weight {
            return Err(Error::SizeBudgetExceeded {
                what: "Specht module weight".to_string(),
                size: weight,
                budget: self.specht_weight,
            });
        }
        Ok(())
    }

    pub fn check_enumeration(&self, p: usize) -> Result<()> {
        if p > self.enumeration {
            return Err(Error::SizeBudgetExceeded {
                what: "labeled partition enumeration".to_string(),
                size: p,
                budget: self.enumeration,
            });
        }
        Ok(())
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            ambient: Self::DEFAULT_AMBIENT,
            specht_weight: Self::DEFAULT_SPECHT_WEIGHT,
            enumeration: Self::DEFAULT_ENUMERATION,
        }
    }
}

/// `base^exp`, or `None` on overflow.
pub(crate) fn checked_pow(base: usize, exp: usize) -> Option<usize> {
    let mut acc: usize = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}
