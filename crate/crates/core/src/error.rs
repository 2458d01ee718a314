use thiserror::Error;

/// Errors shared by every module: malformed input shapes and aborted
/// enumerations.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("search space of {candidates} candidates exceeds the size guard of {max}")]
    SizeGuard { candidates: u64, max: u64 },
}

impl Error {
    pub fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }

    pub fn is_size_guard(&self) -> bool {
        matches!(self, Error::SizeGuard { .. })
    }
}

/// Bound on the raw candidate count of any brute-force enumeration.
/// Enumerations abort with [`Error::SizeGuard`] instead of running
/// unboundedly past it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeGuard {
    pub max_candidates: u64,
}

pub const DEFAULT_MAX_CANDIDATES: u64 = 10_000_000;

impl Default for SizeGuard {
    fn default() -> Self {
        SizeGuard {
            max_candidates: DEFAULT_MAX_CANDIDATES,
        }
    }
}

impl SizeGuard {
    pub fn new(max_candidates: u64) -> Self {
        SizeGuard { max_candidates }
    }

    /// Checks a raw search-space size against the bound.
    pub fn admit(&self, candidates: u64) -> Result<(), Error> {
        if candidates > self.max_candidates {
            Err(Error::SizeGuard {
                candidates,
                max: self.max_candidates,
            })
        } else {
            Ok(())
        }
    }

    /// Saturating product of per-slot candidate counts, checked against the
    /// bound.
    pub fn admit_product(&self, factors: impl IntoIterator<Item = u64>) -> Result<u64, Error> {
        let mut total: u64 = 1;
        for f in factors {
            total = total.saturating_mul(f);
            self.admit(total)?;
        }
        Ok(total)
    }
}
