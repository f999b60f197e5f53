//! Segmented sieve of Eratosthenes.

use num_integer::Roots;

/// Sizing knobs for sieving and table construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SieveConfig {
    /// Integers covered by one sieve segment.
    pub segment_size: usize,
    /// Upper bound in bytes on the memory a `PrimeTable` may occupy.
    pub max_memory: u64,
}

impl Default for SieveConfig {
    fn default() -> Self {
        SieveConfig {
            segment_size: 1 << 18,
            max_memory: 4 << 30,
        }
    }
}

/// Plain sieve for the small base primes.
fn simple_sieve(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        primes.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    primes
}

/// Calls `emit` for every prime in `[lo, hi]`, in increasing order.
pub fn for_each_prime_in(lo: u64, hi: u64, segment_size: usize, mut emit: impl FnMut(u64)) {
    if hi < 2 || lo > hi {
        return;
    }
    let lo = lo.max(2);
    let base = simple_sieve(hi.sqrt());
    let seg = segment_size.max(64) as u64;
    let mut marks = vec![false; seg as usize];

    let mut start = lo;
    loop {
        let end = start.saturating_add(seg - 1).min(hi);
        let len = (end - start + 1) as usize;
        marks[..len].fill(false);
        for &p in &base {
            if p * p > end {
                break;
            }
            let first = (p * p).max(start.div_ceil(p) * p);
            let mut j = first;
            while j <= end {
                marks[(j - start) as usize] = true;
                j += p;
            }
        }
        for (i, &composite) in marks[..len].iter().enumerate() {
            if !composite {
                emit(start + i as u64);
            }
        }
        if end == hi {
            break;
        }
        start = end + 1;
    }
}

pub fn primes_up_to(limit: u64, segment_size: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(estimate_prime_count(limit) as usize);
    for_each_prime_in(2, limit, segment_size, |p| out.push(p));
    out
}

/// Upper estimate of pi(x), used only for capacity planning.
pub fn estimate_prime_count(x: u64) -> u64 {
    if x < 17 {
        return 7;
    }
    let xf = x as f64;
    // pi(x) < 1.25506 x / ln x for x > 1
    (1.25506 * xf / xf.ln()).ceil() as u64
}
