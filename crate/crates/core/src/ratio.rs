use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An exact reduced ratio `num/den > 1`, such as v = (k+1)/k.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawRatio", into = "RawRatio")]
pub struct Ratio {
    num: u64,
    den: u64,
}

#[derive(Serialize, Deserialize)]
struct RawRatio {
    num: u64,
    den: u64,
}

impl TryFrom<RawRatio> for Ratio {
    type Error = Error;

    fn try_from(raw: RawRatio) -> Result<Self> {
        Ratio::new(raw.num, raw.den)
    }
}

impl From<Ratio> for RawRatio {
    fn from(r: Ratio) -> Self {
        RawRatio {
            num: r.num,
            den: r.den,
        }
    }
}

impl Ratio {
    /// Requires `num > den >= 1` and `gcd(num, den) == 1`.
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        if num <= den {
            return Err(Error::InvalidArgument(format!(
                "{num}/{den} is not greater than 1"
            )));
        }
        if num.gcd(&den) != 1 {
            return Err(Error::InvalidArgument(format!(
                "{num}/{den} is not in lowest terms"
            )));
        }
        Ok(Ratio { num, den })
    }

    /// Reduces `num/den` first; still requires the value to exceed 1.
    pub fn reduced(num: u64, den: u64) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        let g = num.gcd(&den);
        Ratio::new(num / g, den / g)
    }

    /// v = (k+1)/k.
    pub fn interval(k: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidArgument("k must be positive".into()));
        }
        Ratio::new(k + 1, k)
    }

    pub fn integer(n: u64) -> Result<Self> {
        Ratio::new(n, 1)
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// floor(x / v) = floor(x * den / num), exact.
    #[inline]
    pub fn floor_div(&self, x: u64) -> u64 {
        ((x as u128 * self.den as u128) / self.num as u128) as u64
    }

    /// ceil(x * v), saturating at `u64::MAX`.
    pub fn ceil_mul(&self, x: u64) -> u64 {
        let p = x as u128 * self.num as u128;
        let q = p.div_ceil(self.den as u128);
        q.min(u64::MAX as u128) as u64
    }

    /// floor(x * v), saturating at `u64::MAX`.
    pub fn floor_mul(&self, x: u64) -> u64 {
        let q = x as u128 * self.num as u128 / self.den as u128;
        q.min(u64::MAX as u128) as u64
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for Ratio {
    type Err = Error;

    /// Accepts `P` or `P/Q`; the fraction must already be reduced.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("cannot parse ratio {s:?}; expected P or P/Q"));
        let (num, den) = match s.trim().split_once('/') {
            Some((p, q)) => (
                p.trim().parse().map_err(|_| bad())?,
                q.trim().parse().map_err(|_| bad())?,
            ),
            None => (s.trim().parse().map_err(|_| bad())?, 1),
        };
        Ratio::new(num, den)
    }
}
