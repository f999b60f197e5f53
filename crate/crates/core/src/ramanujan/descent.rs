//! R_v(m) and C_v(m) by a single forward sweep below a proven bound.
//!
//! For every x in [2, B) the sweep computes c(x), the largest m for which x
//! already satisfies the defining inequality. The term for m is then one more
//! than the last x with c(x) < m.

use num_bigint::BigUint;
use num_traits::Pow;
use serde::{Deserialize, Serialize};

use super::bound::{descent_bound, upper_bound_x};
use crate::error::{Error, Result};
use crate::prime_engine::{primorial_segment, PrimeTable};
use crate::ratio::Ratio;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    /// pi(x) - pi(x/v) >= m
    Ramanujan,
    /// theta(x) - theta(x/v) >= m ln x
    Chebyshev,
}

/// Ties closer than this are settled with exact integer arithmetic.
const LOG_TIE_WINDOW: f64 = 1e-6;

/// Table limit needed to compute the first `m_max` terms.
pub fn required_limit(v: Ratio, m_max: u64) -> Result<u64> {
    descent_bound(v, m_max)
}

/// Prefix sums of ln p with Neumaier compensation.
fn theta_prefix(primes: &[u64]) -> Vec<f64> {
    let mut out = Vec::with_capacity(primes.len() + 1);
    let (mut sum, mut comp) = (0.0f64, 0.0f64);
    out.push(0.0);
    for &p in primes {
        let term = (p as f64).ln();
        let t = sum + term;
        if sum.abs() >= term.abs() {
            comp += (sum - t) + term;
        } else {
            comp += (term - t) + sum;
        }
        sum = t;
        out.push(sum + comp);
    }
    out
}

/// Largest c with prod_{x/v < p <= x} p >= x^c, decided exactly near ties.
fn chebyshev_level(table: &PrimeTable, v: Ratio, x: u64, theta_diff: f64, cap: u64) -> Result<u64> {
    let lx = (x as f64).ln();
    let q = theta_diff / lx;
    let r = q.round();
    if (theta_diff - r * lx).abs() >= LOG_TIE_WINDOW || r > cap as f64 {
        return Ok((q.floor().max(0.0) as u64).min(cap));
    }
    let r = r as u64;
    let product = primorial_segment(table, v.floor_div(x), x)?;
    let power: BigUint = BigUint::from(x).pow(r as u32);
    Ok(if product >= power { r } else { r.saturating_sub(1) })
}

/// Both prime pointers advance monotonically as x grows.
struct Window<'a> {
    primes: &'a [u64],
    v: Ratio,
    hi: usize,
    lo: usize,
}

impl<'a> Window<'a> {
    fn new(primes: &'a [u64], v: Ratio) -> Self {
        Window {
            primes,
            v,
            hi: 0,
            lo: 0,
        }
    }

    /// Index range of the primes in (floor(x/v), x].
    fn advance(&mut self, x: u64) -> (usize, usize) {
        while self.hi < self.primes.len() && self.primes[self.hi] <= x {
            self.hi += 1;
        }
        let y = self.v.floor_div(x);
        while self.lo < self.primes.len() && self.primes[self.lo] <= y {
            self.lo += 1;
        }
        (self.lo, self.hi)
    }
}

/// First `m_max` terms of the R or C sequence for ratio v.
pub fn sequence(table: &PrimeTable, kind: Kind, v: Ratio, m_max: u64) -> Result<Vec<u64>> {
    if m_max == 0 {
        return Err(Error::InvalidArgument("m_max must be positive".into()));
    }
    let bound = descent_bound(v, m_max)?;
    if table.limit() < bound - 1 {
        return Err(Error::ResourceLimit(format!(
            "descent for v = {v}, m <= {m_max} needs primes up to {}, table stops at {}",
            bound - 1,
            table.limit()
        )));
    }

    let primes = table.primes();
    let theta = match kind {
        Kind::Chebyshev => theta_prefix(primes),
        Kind::Ramanujan => Vec::new(),
    };

    // last_at[c] = last x with level exactly c (levels >= m_max are never needed)
    let mut last_at = vec![0u64; m_max as usize];
    last_at[0] = 1;
    let mut window = Window::new(primes, v);
    for x in 2..bound {
        let (lo, hi) = window.advance(x);
        let level = match kind {
            Kind::Ramanujan => (hi - lo) as u64,
            Kind::Chebyshev => chebyshev_level(table, v, x, theta[hi] - theta[lo], m_max)?,
        };
        if level < m_max {
            last_at[level as usize] = x;
        }
    }

    let mut out = Vec::with_capacity(m_max as usize);
    let mut last_deficient = 0u64;
    for m in 1..=m_max {
        last_deficient = last_deficient.max(last_at[(m - 1) as usize]);
        let term = last_deficient + 1;
        let own_bound = descent_bound(v, m)?;
        if term > own_bound {
            return Err(Error::BoundViolation(format!(
                "{kind:?} term {m} for v = {v} exceeds its bound {own_bound}"
            )));
        }
        if !table.is_prime(term)? {
            return Err(Error::BoundViolation(format!(
                "{kind:?} term {m} for v = {v} is {term}, which is not prime"
            )));
        }
        out.push(term);
    }
    Ok(out)
}

/// R_v(m): least integer with pi(x) - pi(x/v) >= m for every x >= R_v(m).
pub fn ramanujan_number(table: &PrimeTable, v: Ratio, m: u64) -> Result<u64> {
    Ok(*sequence(table, Kind::Ramanujan, v, m)?.last().expect("m >= 1"))
}

/// C_v(m): least integer with theta(x) - theta(x/v) >= m ln x for every x >= C_v(m).
pub fn chebyshev_number(table: &PrimeTable, v: Ratio, m: u64) -> Result<u64> {
    Ok(*sequence(table, Kind::Chebyshev, v, m)?.last().expect("m >= 1"))
}

/// pi(x) - pi(floor(x/v)).
pub fn ramanujan_count(table: &PrimeTable, v: Ratio, x: u64) -> Result<u64> {
    Ok(table.pi(x)? - table.pi(v.floor_div(x))?)
}

/// Exact test of theta(x) - theta(x/v) >= m ln x.
pub fn chebyshev_holds(table: &PrimeTable, v: Ratio, x: u64, m: u64) -> Result<bool> {
    let m = u32::try_from(m).map_err(|_| Error::InvalidArgument("m too large".into()))?;
    Ok(primorial_segment(table, v.floor_div(x), x)? >= BigUint::from(x).pow(m))
}

/// True when every term stays at or below its published-form bound.
pub fn published_bound_respected(terms: &[u64], v: Ratio) -> Result<bool> {
    for (i, &t) in terms.iter().enumerate() {
        if t > upper_bound_x(v, i as u64 + 1)? {
            return Ok(false);
        }
    }
    Ok(true)
}
