//! N_k(m): least N such that (kn, (k+1)n) holds at least m primes for all n >= N.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::prime_engine::{PrimeSource, PrimeTable};
use crate::ramanujan::{descent_bound, sequence, Kind, CERTIFIED_K};
use crate::ratio::Ratio;

/// How the reported value of N_k(m) is pinned down.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NkMethod {
    /// R ≡ 1 (mod k+1): N = (R + k)/(k + 1).
    Formula31,
    /// R ≡ 2 (mod k+1): N = (R + k - 1)/(k + 1).
    Formula32,
    /// k = 1: N = (R + 1)/2.
    Formula4,
    /// k = 2: N = ceil(R/3).
    Formula35,
    /// Finite descent only; no closed form applies.
    Descent,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NkResult {
    pub k: u64,
    pub m: u64,
    pub value: u64,
    pub method: NkMethod,
}

pub fn is_certified(k: u64) -> bool {
    CERTIFIED_K.contains(&k)
}

/// Primes in (kn, (k+1)n), or in [kn, (k+1)n] when `closed` is set.
pub fn interval_count(table: &PrimeTable, k: u64, n: u64, closed: bool) -> Result<u64> {
    let (lo, hi) = (k * n, (k + 1) * n);
    if closed {
        table.count_primes_closed(lo, hi)
    } else {
        table.count_primes_open(lo, hi)
    }
}

/// ceil(R_{(k+1)/k}(m) / (k+1)).
pub fn nk_upper(table: &PrimeTable, k: u64, m: u64) -> Result<u64> {
    if m < 2 {
        return Err(Error::InvalidArgument(
            "the ceil(R/(k+1)) bound is stated for m >= 2".into(),
        ));
    }
    let r = *sequence(table, Kind::Ramanujan, Ratio::interval(k)?, m)?
        .last()
        .expect("m >= 2");
    Ok(r.div_ceil(k + 1))
}

/// Closed form for N_k(m) in terms of R = R_{(k+1)/k}(m), open intervals.
///
/// Only values >= 2 are returned: below that the n > 1 floor decides, which
/// is exactly the m = 1 case for unrestricted primes.
pub fn closed_form(k: u64, r: u64) -> Option<(u64, NkMethod)> {
    let (value, method) = if k == 1 {
        (r.div_ceil(2), NkMethod::Formula4)
    } else if k == 2 {
        (r.div_ceil(3), NkMethod::Formula35)
    } else {
        match r % (k + 1) {
            1 => ((r + k) / (k + 1), NkMethod::Formula31),
            2 => ((r + k - 1) / (k + 1), NkMethod::Formula32),
            _ => return None,
        }
    };
    (value >= 2).then_some((value, method))
}

/// One more than the largest n below `start` whose interval holds fewer than
/// m primes; the floor (2 open, 1 closed) if none does. Scans downward.
pub fn descend(table: &PrimeTable, k: u64, m: u64, start: u64, closed: bool) -> Result<u64> {
    let floor = if closed { 1 } else { 2 };
    let mut n = start;
    while n > floor {
        n -= 1;
        if interval_count(table, k, n, closed)? < m {
            return Ok(n + 1);
        }
    }
    Ok(floor)
}

/// The same descent, but using a prime source that can only step to the
/// next prime. With q_1 < ... < q_m the first m primes above k n, every
/// n' in (q_m/(k+1), n] is covered at once, so the scan jumps by a factor of
/// about k/(k+1) per step.
pub fn descend_by_jumps<S: PrimeSource + ?Sized>(source: &S, k: u64, m: u64, top: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be positive".into()));
    }
    let mut n = top;
    while n >= 2 {
        let lo = k
            .checked_mul(n)
            .ok_or_else(|| Error::ResourceLimit("interval exceeds u64".into()))?;
        let hi = lo + n;
        let mut q = lo;
        for _ in 0..m {
            q = source
                .next_prime_after(q)
                .ok_or_else(|| Error::ResourceLimit(format!("no prime visible after {q}")))?;
            if q >= hi {
                return Ok(n + 1);
            }
        }
        n = q / (k + 1);
    }
    Ok(2)
}

/// Bound below which the open descent must look, for any m >= 1.
fn open_start(r: u64, k: u64) -> u64 {
    r.div_ceil(k + 1).max(2)
}

fn finish(k: u64, m: u64, r: u64, value: u64, closed: bool) -> Result<NkResult> {
    let method = if closed { None } else { closed_form(k, r) };
    let method = match method {
        Some((formula, method)) => {
            if formula != value {
                return Err(Error::BoundViolation(format!(
                    "N_{k}({m}): descent gives {value}, {method:?} gives {formula}"
                )));
            }
            method
        }
        None => NkMethod::Descent,
    };
    if !closed && m == 1 && is_certified(k) && value != 2 {
        return Err(Error::BoundViolation(format!("N_{k}(1) = {value}, expected 2")));
    }
    Ok(NkResult { k, m, value, method })
}

fn require_certified(k: u64) -> Result<()> {
    if is_certified(k) {
        Ok(())
    } else {
        Err(Error::NotCertified { k })
    }
}

/// Table limit needed by `nk_sequence` for the first `m_max` values.
pub fn nk_required_limit(k: u64, m_max: u64) -> Result<u64> {
    let bound = descent_bound(Ratio::interval(k)?, m_max)?;
    bound
        .checked_add(k + 1)
        .ok_or_else(|| Error::ResourceLimit("table limit exceeds u64".into()))
}

/// Exact N_k(m) for the certified k, descent cross-checked with closed forms.
pub fn nk_number(table: &PrimeTable, k: u64, m: u64) -> Result<NkResult> {
    nk_number_with(table, k, m, false)
}

pub fn nk_number_with(table: &PrimeTable, k: u64, m: u64, closed: bool) -> Result<NkResult> {
    Ok(*nk_sequence(table, k, m, closed)?.last().expect("m >= 1"))
}

/// First `m_max` values N_k(1), ..., N_k(m_max).
pub fn nk_sequence(table: &PrimeTable, k: u64, m_max: u64, closed: bool) -> Result<Vec<NkResult>> {
    require_certified(k)?;
    if m_max == 0 {
        return Err(Error::InvalidArgument("m must be positive".into()));
    }
    let rs = sequence(table, Kind::Ramanujan, Ratio::interval(k)?, m_max)?;
    let mut out = Vec::with_capacity(rs.len());
    for (i, &r) in rs.iter().enumerate() {
        let m = i as u64 + 1;
        let value = descend(table, k, m, open_start(r, k), closed)?;
        out.push(finish(k, m, r, value, closed)?);
    }
    Ok(out)
}

/// N_k(m) for any k, given a caller-proven `n_bound` such that every
/// n >= n_bound already has at least m primes in its interval.
pub fn nk_number_bounded(table: &PrimeTable, k: u64, m: u64, n_bound: u64, closed: bool) -> Result<u64> {
    if m == 0 || k == 0 {
        return Err(Error::InvalidArgument("k and m must be positive".into()));
    }
    descend(table, k, m, n_bound.max(2), closed)
}

/// A bound usable with `nk_number_bounded` for any k, from the explicit
/// theta bound for R_{(k+1)/k}(m).
pub fn proven_n_bound(k: u64, m: u64) -> Result<u64> {
    Ok(open_start(descent_bound(Ratio::interval(k)?, m)?, k))
}
