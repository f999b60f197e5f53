use super::sieve::{estimate_prime_count, primes_up_to, SieveConfig};
use crate::error::{Error, Result};

/// Immutable, sieve-backed list of every prime up to `limit`.
///
/// Counting queries are answered by binary search over the sorted list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeTable {
    limit: u64,
    primes: Vec<u64>,
}

impl PrimeTable {
    pub fn build(limit: u64) -> Result<Self> {
        Self::build_with(limit, &SieveConfig::default())
    }

    pub fn build_with(limit: u64, config: &SieveConfig) -> Result<Self> {
        if limit < 2 {
            return Err(Error::InvalidArgument(format!(
                "prime table limit must be at least 2, got {limit}"
            )));
        }
        let bytes = Self::estimated_bytes(limit, config.segment_size);
        if bytes > config.max_memory {
            return Err(Error::ResourceLimit(format!(
                "a prime table up to {limit} needs about {bytes} bytes (budget {})",
                config.max_memory
            )));
        }
        Ok(PrimeTable {
            limit,
            primes: primes_up_to(limit, config.segment_size),
        })
    }

    /// Rough memory footprint of a table, including one sieve segment.
    pub fn estimated_bytes(limit: u64, segment_size: usize) -> u64 {
        estimate_prime_count(limit) * 8 + segment_size as u64
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    fn check(&self, x: u64) -> Result<()> {
        if x > self.limit {
            Err(Error::OutOfRange {
                value: x,
                limit: self.limit,
            })
        } else {
            Ok(())
        }
    }

    /// pi(x) without the range check; callers guarantee `x <= limit`.
    #[inline]
    pub(crate) fn pi_unchecked(&self, x: u64) -> u64 {
        self.primes.partition_point(|&p| p <= x) as u64
    }

    /// The prime counting function pi(x).
    pub fn pi(&self, x: u64) -> Result<u64> {
        self.check(x)?;
        Ok(self.pi_unchecked(x))
    }

    /// Number of primes p with lo < p < hi.
    pub fn count_primes_open(&self, lo: u64, hi: u64) -> Result<u64> {
        if lo > hi {
            return Err(Error::InvalidArgument(format!("empty range ({lo}, {hi})")));
        }
        self.check(hi)?;
        if hi <= lo + 1 {
            return Ok(0);
        }
        Ok(self.pi_unchecked(hi - 1) - self.pi_unchecked(lo))
    }

    /// Number of primes p with lo <= p <= hi.
    pub fn count_primes_closed(&self, lo: u64, hi: u64) -> Result<u64> {
        if lo > hi {
            return Err(Error::InvalidArgument(format!("empty range [{lo}, {hi}]")));
        }
        self.check(hi)?;
        let below = if lo == 0 { 0 } else { self.pi_unchecked(lo - 1) };
        Ok(self.pi_unchecked(hi) - below)
    }

    /// The n-th prime, 1-based (`nth_prime(1) == 2`).
    pub fn nth_prime(&self, n: u64) -> Result<u64> {
        if n == 0 {
            return Err(Error::InvalidArgument("prime index is 1-based".into()));
        }
        self.primes
            .get((n - 1) as usize)
            .copied()
            .ok_or_else(|| Error::ResourceLimit(format!("p_{n} lies beyond the table limit {}", self.limit)))
    }

    pub fn is_prime(&self, n: u64) -> Result<bool> {
        self.check(n)?;
        Ok(self.primes.binary_search(&n).is_ok())
    }

    /// Primes in the half-open range (lo, hi].
    pub fn primes_in(&self, lo: u64, hi: u64) -> Result<&[u64]> {
        self.check(hi)?;
        let a = self.pi_unchecked(lo) as usize;
        let b = self.pi_unchecked(hi) as usize;
        Ok(&self.primes[a.min(b)..b])
    }
}
