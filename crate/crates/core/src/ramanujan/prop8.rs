//! Bounds of the form R_{(k+1)/k}(m) <= p_{tm} and C_{(k+1)/k}(m-1) <= p_{tm}.

use serde::{Deserialize, Serialize};

use super::bound::descent_bound;
use super::descent::{sequence, Kind};
use crate::error::{Error, Result};
use crate::prime_engine::PrimeTable;
use crate::ratio::Ratio;

/// The k for which every (kn, (k+1)n), n > 1, holds a prime.
pub const CERTIFIED_K: [u64; 6] = [1, 2, 3, 5, 9, 14];

pub fn prop8_t(k: u64) -> Result<u64> {
    match k {
        1 => Ok(3),
        2 => Ok(4),
        3 => Ok(6),
        5 => Ok(11),
        9 => Ok(31),
        14 => Ok(32),
        _ => Err(Error::InvalidArgument(format!(
            "no p_(tm) bound is tabulated for k = {k}"
        ))),
    }
}

/// Left-hand side of the sufficient condition
/// (ln tm + ln ln tm + 1) / (ln tm (1 - 3.965 / ln^2(tm ln tm))),
/// or `None` while the correction factor is not positive.
pub fn analytic_lhs(t: u64, m: u64) -> Option<f64> {
    let n = (t * m) as f64;
    let l = n.ln();
    if l <= 0.0 {
        return None;
    }
    let corr = 1.0 - 3.965 / (n * l).ln().powi(2);
    if corr <= 0.0 || !corr.is_finite() {
        return None;
    }
    Some((l + l.ln() + 1.0) / (l * corr))
}

fn analytic_holds(k: u64, t: u64, m: u64) -> bool {
    analytic_lhs(t, m).is_some_and(|lhs| lhs <= t as f64 / (k + 1) as f64)
}

/// Least m from which the analytic condition holds.
///
/// Writing u = ln(tm), the left side is (1 + (ln u + 1)/u) / (1 - 3.965/(u + ln u)^2):
/// the numerator falls and the denominator rises with u, so once the condition
/// holds it keeps holding and a binary search is exact.
pub fn analytic_m0(k: u64) -> Result<u64> {
    let t = prop8_t(k)?;
    let mut hi = 1u64;
    while !analytic_holds(k, t, hi) {
        hi = hi
            .checked_mul(2)
            .ok_or_else(|| Error::ResourceLimit("m0 search overflow".into()))?;
    }
    let mut lo = 1u64;
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if analytic_holds(k, t, mid) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok(lo)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prop8Violation {
    pub m: u64,
    pub kind: Kind,
    pub value: u64,
    pub p_tm: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prop8Report {
    pub k: u64,
    pub t: u64,
    pub m_max: u64,
    pub analytic_m0: u64,
    pub violations: Vec<Prop8Violation>,
    pub all_hold: bool,
}

/// Table limit needed by `verify_prop8`.
pub fn prop8_required_limit(k: u64, m_max: u64) -> Result<u64> {
    let t = prop8_t(k)?;
    let v = Ratio::interval(k)?;
    let n = t * m_max;
    // p_n < n (ln n + ln ln n) for n >= 6
    let nf = (n.max(6)) as f64;
    let p_n = (nf * (nf.ln() + nf.ln().ln())).ceil() as u64 + 16;
    Ok(descent_bound(v, m_max)?.max(p_n))
}

pub fn verify_prop8(table: &PrimeTable, k: u64, m_max: u64) -> Result<Prop8Report> {
    if m_max < 2 {
        return Err(Error::InvalidArgument("m_max must be at least 2".into()));
    }
    let t = prop8_t(k)?;
    let v = Ratio::interval(k)?;
    let r = sequence(table, Kind::Ramanujan, v, m_max)?;
    let c = sequence(table, Kind::Chebyshev, v, m_max - 1)?;

    let mut violations = Vec::new();
    for m in 1..=m_max {
        let p_tm = table.nth_prime(t * m)?;
        let rv = r[(m - 1) as usize];
        if rv > p_tm {
            violations.push(Prop8Violation {
                m,
                kind: Kind::Ramanujan,
                value: rv,
                p_tm,
            });
        }
        if m >= 2 {
            let cv = c[(m - 2) as usize];
            if cv > p_tm {
                violations.push(Prop8Violation {
                    m,
                    kind: Kind::Chebyshev,
                    value: cv,
                    p_tm,
                });
            }
        }
    }
    Ok(Prop8Report {
        k,
        t,
        m_max,
        analytic_m0: analytic_m0(k)?,
        all_hold: violations.is_empty(),
        violations,
    })
}

/// pi(x) - pi(x/2) > (x/6 - 3 sqrt x) / ln x.
pub fn ramanujan_inequality_holds(table: &PrimeTable, x: u64) -> Result<bool> {
    let count = table.pi(x)? - table.pi(x / 2)?;
    let xf = x as f64;
    Ok(count as f64 > (xf / 6.0 - 3.0 * xf.sqrt()) / xf.ln())
}

/// First x in (lo, hi] where the inequality fails, if any.
pub fn ramanujan_inequality_counterexample(table: &PrimeTable, lo: u64, hi: u64) -> Result<Option<u64>> {
    for x in lo + 1..=hi {
        if !ramanujan_inequality_holds(table, x)? {
            return Ok(Some(x));
        }
    }
    Ok(None)
}
