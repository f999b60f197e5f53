//! The gap statistic a(k): least n > 1 with (kn, (k+1)n) prime-free, or 0
//! when no such n exists.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::nk::is_certified;
use crate::error::{Error, Result};
use crate::prime_engine::{MillerRabin, PrimeSource, PrimeTable, SieveConfig};
use crate::ramanujan::{descent_bound, CERTIFIED_K};
use crate::ratio::Ratio;

/// Default n_max, four times the largest a(k) observed.
pub const DEFAULT_N_MAX: u64 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum GapOutcome {
    /// (k a, (k+1) a) holds no prime, and every smaller n > 1 does.
    Gap { a_k: u64 },
    /// Every x >= bound has a prime in (kx/(k+1), x]; every n below
    /// `checked_up_to + 1` was checked directly.
    CertifiedZero { bound: u64, checked_up_to: u64 },
    /// No gap up to the scan limit and no certificate: an anomaly.
    NoGapFound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapReport {
    pub k: u64,
    pub outcome: GapOutcome,
    pub scan_limit: u64,
}

impl GapReport {
    /// a(k) as tabulated: 0 for certified k, `None` for anomalies.
    pub fn a_value(&self) -> Option<u64> {
        match self.outcome {
            GapOutcome::Gap { a_k } => Some(a_k),
            GapOutcome::CertifiedZero { .. } => Some(0),
            GapOutcome::NoGapFound => None,
        }
    }

    pub fn is_anomaly(&self) -> bool {
        matches!(self.outcome, GapOutcome::NoGapFound)
    }
}

fn reach_error(k: u64, n: u64) -> Error {
    Error::ResourceLimit(format!(
        "primality for ({}, {}) is beyond the prime source",
        k * n,
        (k + 1) * n
    ))
}

/// Least n in [2, n_max] with no prime in (kn, (k+1)n).
pub fn gap_least_n<S: PrimeSource + ?Sized>(source: &S, k: u64, n_max: u64) -> Result<Option<u64>> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    for n in 2..=n_max {
        let lo = k.checked_mul(n).ok_or_else(|| reach_error(k, n))?;
        let hi = lo.checked_add(n).ok_or_else(|| reach_error(k, n))?;
        match source.has_primes_open(lo, hi, 1) {
            Some(true) => {}
            Some(false) => return Ok(Some(n)),
            None => return Err(reach_error(k, n)),
        }
    }
    Ok(None)
}

/// Table limit needed to certify every k in the certified set.
pub fn certify_required_limit(k: u64) -> Result<u64> {
    descent_bound(Ratio::interval(k)?, 1)
}

/// Proves a(k) = 0: beyond the bound B every x = (k+1)n has a prime in
/// (kn, (k+1)n] and (k+1)n is composite, so the open interval holds it; the
/// finitely many n below ceil(B/(k+1)) are checked one by one.
pub fn certify_no_gap(table: &PrimeTable, k: u64) -> Result<GapReport> {
    if !is_certified(k) {
        return Err(Error::NotCertified { k });
    }
    let bound = certify_required_limit(k)?;
    let n_end = bound.div_ceil(k + 1);
    for n in 2..n_end {
        if table.count_primes_open(k * n, (k + 1) * n)? == 0 {
            return Err(Error::CertificationFailed {
                k,
                lo: k * n,
                hi: (k + 1) * n,
            });
        }
    }
    Ok(GapReport {
        k,
        outcome: GapOutcome::CertifiedZero {
            bound,
            checked_up_to: n_end.saturating_sub(1),
        },
        scan_limit: n_end.saturating_sub(1),
    })
}

/// Re-checks a report with an independent prime source.
pub fn verify_report<S: PrimeSource + ?Sized>(source: &S, report: &GapReport) -> Result<bool> {
    let k = report.k;
    let has_prime = |n: u64| {
        source
            .has_primes_open(k * n, (k + 1) * n, 1)
            .ok_or_else(|| reach_error(k, n))
    };
    match report.outcome {
        GapOutcome::Gap { a_k } => {
            if a_k < 2 || has_prime(a_k)? {
                return Ok(false);
            }
            for n in 2..a_k {
                if !has_prime(n)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        GapOutcome::CertifiedZero { bound, checked_up_to } => {
            if !is_certified(k)
                || bound < certify_required_limit(k)?
                || checked_up_to + 1 < bound.div_ceil(k + 1)
            {
                return Ok(false);
            }
            for n in 2..=checked_up_to {
                if !has_prime(n)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        GapOutcome::NoGapFound => Ok(false),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanConfig {
    pub n_max: u64,
    /// Worker threads; `None` uses the global rayon pool.
    pub jobs: Option<usize>,
    pub sieve: SieveConfig,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            n_max: DEFAULT_N_MAX,
            jobs: None,
            sieve: SieveConfig::default(),
        }
    }
}

fn scan_one<S: PrimeSource + ?Sized>(
    source: &S,
    certs: &PrimeTable,
    k: u64,
    n_max: u64,
) -> Result<GapReport> {
    if is_certified(k) {
        return certify_no_gap(certs, k);
    }
    let outcome = match gap_least_n(source, k, n_max)? {
        Some(a_k) => GapOutcome::Gap { a_k },
        None => GapOutcome::NoGapFound,
    };
    Ok(GapReport {
        k,
        outcome,
        scan_limit: n_max,
    })
}

/// One report per k in [k_min, k_max], in k order whatever the thread count.
pub fn theorem1_scan(k_min: u64, k_max: u64, config: &ScanConfig) -> Result<Vec<GapReport>> {
    if k_min == 0 || k_min > k_max {
        return Err(Error::InvalidArgument(format!("bad k range [{k_min}, {k_max}]")));
    }
    if config.n_max < 2 {
        return Err(Error::InvalidArgument("n_max must be at least 2".into()));
    }

    let cert_limit = CERTIFIED_K
        .iter()
        .filter(|&&k| (k_min..=k_max).contains(&k))
        .map(|&k| certify_required_limit(k))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .max()
        .unwrap_or(2);
    let certs = PrimeTable::build_with(cert_limit, &config.sieve)?;

    let reach = (k_max + 1)
        .checked_mul(config.n_max)
        .ok_or_else(|| Error::ResourceLimit("scan range exceeds u64".into()))?;
    let sieve_fits = PrimeTable::estimated_bytes(reach, config.sieve.segment_size) <= config.sieve.max_memory;

    let run = || -> Result<Vec<GapReport>> {
        let ks: Vec<u64> = (k_min..=k_max).collect();
        if sieve_fits {
            let table = PrimeTable::build_with(reach.max(2), &config.sieve)?;
            ks.par_iter()
                .map(|&k| scan_one(&table, &certs, k, config.n_max))
                .collect()
        } else {
            ks.par_iter()
                .map(|&k| scan_one(&MillerRabin, &certs, k, config.n_max))
                .collect()
        }
    };

    match config.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map_err(|e| Error::ResourceLimit(format!("thread pool: {e}")))?
            .install(run),
        None => run(),
    }
}
