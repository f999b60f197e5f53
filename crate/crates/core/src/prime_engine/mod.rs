//! Exact prime infrastructure: sieving, counting, primality and primorials.

mod miller_rabin;
mod primorial;
mod sieve;
mod table;

pub use miller_rabin::{is_prime, next_prime};
pub use primorial::{primorial_segment, product};
pub use sieve::{estimate_prime_count, for_each_prime_in, primes_up_to, SieveConfig};
pub use table::PrimeTable;

/// Anything that can answer "where is the next prime" for interval scans.
///
/// `PrimeTable` answers from the sieve; `MillerRabin` answers for any `u64`.
pub trait PrimeSource: Sync {
    /// Smallest prime strictly greater than `n`, if this source can see it.
    fn next_prime_after(&self, n: u64) -> Option<u64>;

    /// Largest value this source can answer about.
    fn reach(&self) -> u64;

    /// True when (lo, hi) holds at least `m` primes.
    fn has_primes_open(&self, lo: u64, hi: u64, m: u64) -> Option<bool> {
        let mut cur = lo;
        for _ in 0..m {
            if hi <= cur + 1 {
                return Some(false);
            }
            if hi - 1 > self.reach() {
                return None;
            }
            cur = self.next_prime_after(cur)?;
            if cur >= hi {
                return Some(false);
            }
        }
        Some(true)
    }
}

/// Primality by deterministic Miller-Rabin over the whole `u64` range.
#[derive(Debug, Clone, Copy, Default)]
pub struct MillerRabin;

impl PrimeSource for MillerRabin {
    fn next_prime_after(&self, n: u64) -> Option<u64> {
        next_prime(n)
    }

    fn reach(&self) -> u64 {
        u64::MAX
    }
}

impl PrimeSource for PrimeTable {
    fn next_prime_after(&self, n: u64) -> Option<u64> {
        let i = self.pi_unchecked(n.min(self.limit())) as usize;
        self.primes().get(i).copied()
    }

    fn reach(&self) -> u64 {
        self.limit()
    }

    fn has_primes_open(&self, lo: u64, hi: u64, m: u64) -> Option<bool> {
        if hi > self.limit() {
            return None;
        }
        Some(self.count_primes_open(lo, hi).ok()? >= m)
    }
}
