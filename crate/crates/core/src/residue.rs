//! Primes restricted to one residue class ("P-primes"), and the
//! small-interval chaining method that bounds their Ramanujan numbers.
//!
//! A small-interval theorem says every (x, s x] with x >= x0 holds a P-prime,
//! where s = 1 + 1/delta. Chaining m such intervals from y = x/v covers
//! (x/v, s^m x/v], which sits inside (x/v, x] whenever s^m < v. So for
//! x >= ceil(x0 v) the count pi_P(x) - pi_P(x/v) is at least m, and a finite
//! descent below that point gives R_v^(P)(m) exactly.

use std::cmp::Ordering;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Pow;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intervals::{closed_form, descend_by_jumps};
use crate::prime_engine::{PrimeSource, PrimeTable};
use crate::ratio::Ratio;

/// Primes p with p ≡ residue (mod modulus).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ResidueClass {
    modulus: u64,
    residue: u64,
}

impl ResidueClass {
    pub fn new(modulus: u64, residue: u64) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidArgument("modulus must be at least 2".into()));
        }
        if residue >= modulus {
            return Err(Error::InvalidArgument(format!(
                "residue {residue} is not reduced mod {modulus}"
            )));
        }
        if residue.gcd(&modulus) != 1 {
            return Err(Error::InvalidArgument(format!(
                "{residue} mod {modulus} holds at most one prime"
            )));
        }
        Ok(ResidueClass { modulus, residue })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    #[inline]
    pub fn contains(&self, n: u64) -> bool {
        n % self.modulus == self.residue
    }
}

/// For every x >= x0, the interval (x, step * x] holds a P-prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmallIntervalTheorem {
    pub x0: u64,
    /// 1 + 1/delta.
    pub step: Ratio,
}

impl SmallIntervalTheorem {
    pub fn new(x0: u64, step: Ratio) -> Result<Self> {
        if x0 < 2 {
            return Err(Error::InvalidArgument("x0 must be at least 2".into()));
        }
        Ok(SmallIntervalTheorem { x0, step })
    }

    /// From delta = num/den > 0: step = 1 + den/num.
    pub fn from_delta(x0: u64, delta_num: u64, delta_den: u64) -> Result<Self> {
        if delta_num == 0 || delta_den == 0 {
            return Err(Error::InvalidArgument("delta must be positive".into()));
        }
        let num = delta_num
            .checked_add(delta_den)
            .ok_or_else(|| Error::InvalidArgument("delta overflows".into()))?;
        Self::new(x0, Ratio::reduced(num, delta_num)?)
    }

    /// All primes: (x, (1 + 1/28313999) x) holds a prime for x > 10726905419.
    pub fn ramare_saouter() -> Self {
        Self::from_delta(10_726_905_420, 28_313_999, 1).expect("valid constants")
    }

    /// Primes ≡ 1 (mod 3): (x, 1.048 x) holds one for x >= 106706.
    pub fn cullinan_hajir() -> Self {
        Self::new(106_706, Ratio::new(131, 125).expect("valid constants")).expect("valid constants")
    }

    pub fn delta(&self) -> f64 {
        self.step.den() as f64 / (self.step.num() - self.step.den()) as f64
    }
}

/// Decides step^m < v: logarithms with a rigorous error margin first, exact
/// big-integer powers only when the margin cannot separate the two sides.
fn power_below(step: Ratio, m: u64, v: Ratio) -> Result<bool> {
    if m == 0 {
        return Ok(true);
    }
    let ln_step = ((step.num() - step.den()) as f64 / step.den() as f64).ln_1p();
    let ln_v = ((v.num() - v.den()) as f64 / v.den() as f64).ln_1p();
    let lhs = m as f64 * ln_step;
    // a few ulps for each logarithm, the quotient and the product
    let slack = 8.0 * f64::EPSILON * (lhs.abs() + ln_v.abs());
    if lhs < ln_v - slack {
        return Ok(true);
    }
    if lhs > ln_v + slack {
        return Ok(false);
    }

    let bits = 64 - step.num().leading_zeros() as u64;
    if m.saturating_mul(bits) > 1 << 24 {
        return Err(Error::ResourceLimit(format!(
            "cannot separate step^{m} from v = {v} without {}-bit arithmetic",
            m * bits
        )));
    }
    let m = m as u32;
    // (a/b)^m < c/d  <=>  a^m d < b^m c
    let lhs = BigUint::from(step.num()).pow(m) * v.den();
    let rhs = BigUint::from(step.den()).pow(m) * v.num();
    Ok(lhs.cmp(&rhs) == Ordering::Less)
}

/// Largest m with step^m < v: how many chained intervals fit in (x/v, x].
pub fn capacity(v: Ratio, thm: &SmallIntervalTheorem) -> Result<u64> {
    let ln_step = ((thm.step.num() - thm.step.den()) as f64 / thm.step.den() as f64).ln_1p();
    let ln_v = ((v.num() - v.den()) as f64 / v.den() as f64).ln_1p();
    let mut m = (ln_v / ln_step).floor().max(0.0) as u64;
    while m > 0 && !power_below(thm.step, m, v)? {
        m -= 1;
    }
    while power_below(thm.step, m + 1, v)? {
        m += 1;
    }
    Ok(m)
}

/// Sorted P-primes from a table, for repeated pi_P queries.
#[derive(Debug, Clone)]
pub struct ResidueCounter {
    class: ResidueClass,
    limit: u64,
    primes: Vec<u64>,
}

impl ResidueCounter {
    pub fn new(table: &PrimeTable, class: ResidueClass) -> Self {
        ResidueCounter {
            class,
            limit: table.limit(),
            primes: table
                .primes()
                .iter()
                .copied()
                .filter(|&p| class.contains(p))
                .collect(),
        }
    }

    pub fn class(&self) -> ResidueClass {
        self.class
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn pi(&self, x: u64) -> Result<u64> {
        if x > self.limit {
            return Err(Error::OutOfRange {
                value: x,
                limit: self.limit,
            });
        }
        Ok(self.primes.partition_point(|&p| p <= x) as u64)
    }

    /// P-primes in (lo, hi).
    pub fn count_open(&self, lo: u64, hi: u64) -> Result<u64> {
        if hi <= lo + 1 {
            self.pi(hi)?;
            return Ok(0);
        }
        Ok(self.pi(hi - 1)? - self.pi(lo)?)
    }
}

/// pi_P(x): number of P-primes not exceeding x.
pub fn pi_p(table: &PrimeTable, class: ResidueClass, x: u64) -> Result<u64> {
    if x > table.limit() {
        return Err(Error::OutOfRange {
            value: x,
            limit: table.limit(),
        });
    }
    Ok(table
        .primes_in(0, x)?
        .iter()
        .filter(|&&p| class.contains(p))
        .count() as u64)
}

/// ceil(x0 v): past this point the chaining argument applies.
pub fn chaining_bound(v: Ratio, thm: &SmallIntervalTheorem) -> u64 {
    v.ceil_mul(thm.x0)
}

fn check_capacity(v: Ratio, m: u64, thm: &SmallIntervalTheorem) -> Result<()> {
    let cap = capacity(v, thm)?;
    if m > cap {
        return Err(Error::CapacityExceeded { m, capacity: cap });
    }
    Ok(())
}

/// First `m_max` (v, P)-Ramanujan numbers.
pub fn sequence_p(
    table: &PrimeTable,
    class: ResidueClass,
    v: Ratio,
    m_max: u64,
    thm: &SmallIntervalTheorem,
) -> Result<Vec<u64>> {
    if m_max == 0 {
        return Err(Error::InvalidArgument("m must be positive".into()));
    }
    check_capacity(v, m_max, thm)?;
    let bound = chaining_bound(v, thm);
    if table.limit() < bound - 1 {
        return Err(Error::ResourceLimit(format!(
            "the P-prime descent needs primes up to {}, table stops at {}",
            bound - 1,
            table.limit()
        )));
    }

    let counter = ResidueCounter::new(table, class);
    let ps = counter.primes();
    let mut last_at = vec![0u64; m_max as usize];
    last_at[0] = 1;
    let (mut hi, mut lo) = (0usize, 0usize);
    for x in 2..bound {
        while hi < ps.len() && ps[hi] <= x {
            hi += 1;
        }
        let y = v.floor_div(x);
        while lo < ps.len() && ps[lo] <= y {
            lo += 1;
        }
        let level = (hi - lo) as u64;
        if level < m_max {
            last_at[level as usize] = x;
        }
    }

    let mut out = Vec::with_capacity(m_max as usize);
    let mut last = 0u64;
    for m in 1..=m_max {
        last = last.max(last_at[(m - 1) as usize]);
        let term = last + 1;
        if !class.contains(term) || !table.is_prime(term)? {
            return Err(Error::BoundViolation(format!(
                "(v, P)-Ramanujan term {m} is {term}, which is not a P-prime"
            )));
        }
        out.push(term);
    }
    Ok(out)
}

pub fn ramanujan_number_p(
    table: &PrimeTable,
    class: ResidueClass,
    v: Ratio,
    m: u64,
    thm: &SmallIntervalTheorem,
) -> Result<u64> {
    Ok(*sequence_p(table, class, v, m, thm)?.last().expect("m >= 1"))
}

/// N_k^(P)(1..=m_max): thresholds for P-primes in (kn, (k+1)n).
pub fn nk_sequence_p(
    table: &PrimeTable,
    class: ResidueClass,
    k: u64,
    m_max: u64,
    thm: &SmallIntervalTheorem,
) -> Result<Vec<u64>> {
    let rs = sequence_p(table, class, Ratio::interval(k)?, m_max, thm)?;
    let counter = ResidueCounter::new(table, class);
    let mut out = Vec::with_capacity(rs.len());
    for (i, &r) in rs.iter().enumerate() {
        let m = i as u64 + 1;
        let start = r.div_ceil(k + 1).max(2);
        let mut value = 2;
        for n in (2..start).rev() {
            if counter.count_open(k * n, (k + 1) * n)? < m {
                value = n + 1;
                break;
            }
        }
        if let Some((formula, method)) = closed_form(k, r) {
            if formula != value {
                return Err(Error::BoundViolation(format!(
                    "N_{k}^(P)({m}): descent gives {value}, {method:?} gives {formula}"
                )));
            }
        }
        out.push(value);
    }
    Ok(out)
}

pub fn nk_number_p(
    table: &PrimeTable,
    class: ResidueClass,
    k: u64,
    m: u64,
    thm: &SmallIntervalTheorem,
) -> Result<u64> {
    Ok(*nk_sequence_p(table, class, k, m, thm)?.last().expect("m >= 1"))
}

/// N_k(m) for unrestricted primes and any k, by descent from ceil(x0/k).
pub fn nk_small_interval<S: PrimeSource + ?Sized>(
    source: &S,
    k: u64,
    m: u64,
    thm: &SmallIntervalTheorem,
) -> Result<u64> {
    if k == 0 || m == 0 {
        return Err(Error::InvalidArgument("k and m must be positive".into()));
    }
    check_capacity(Ratio::interval(k)?, m, thm)?;
    descend_by_jumps(source, k, m, thm.x0.div_ceil(k) - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intervals::{nk_sequence, theorem1_scan, ScanConfig};
    use crate::prime_engine::MillerRabin;
    use std::sync::OnceLock;

    fn table() -> &'static PrimeTable {
        static T: OnceLock<PrimeTable> = OnceLock::new();
        T.get_or_init(|| PrimeTable::build(250_000).unwrap())
    }

    fn class(q: u64, r: u64) -> ResidueClass {
        ResidueClass::new(q, r).unwrap()
    }

    fn two() -> Ratio {
        Ratio::integer(2).unwrap()
    }

    #[test]
    fn class_validation() {
        assert!(ResidueClass::new(3, 0).is_err());
        assert!(ResidueClass::new(4, 2).is_err());
        assert!(ResidueClass::new(4, 5).is_err());
        assert!(ResidueClass::new(1, 0).is_err());
        assert!(class(4, 3).contains(7));
    }

    #[test]
    fn pi_p_small() {
        assert_eq!(pi_p(table(), class(3, 1), 7).unwrap(), 1);
        assert_eq!(pi_p(table(), class(3, 2), 11).unwrap(), 3);
        assert_eq!(pi_p(table(), class(4, 1), 13).unwrap(), 2);
        assert!(pi_p(table(), class(4, 1), 250_001).is_err());
    }

    #[test]
    fn pi_p_classes_partition_pi() {
        for q in [3u64, 4, 5, 8, 12] {
            let classes: Vec<_> = (0..q).filter(|r| r.gcd(&q) == 1).map(|r| class(q, r)).collect();
            for x in [1u64, 2, 10, 97, 1_000, 54_321] {
                let total: u64 = classes.iter().map(|&c| pi_p(table(), c, x).unwrap()).sum();
                let divisors = table()
                    .primes_in(0, x)
                    .unwrap()
                    .iter()
                    .filter(|&&p| q % p == 0)
                    .count() as u64;
                assert_eq!(total, table().pi(x).unwrap() - divisors, "q={q} x={x}");
            }
        }
    }

    #[test]
    fn capacities() {
        let ch = SmallIntervalTheorem::cullinan_hajir();
        assert_eq!(capacity(two(), &ch).unwrap(), 14);
        // 2^(1/3) is irrational; 29/23 sits just above it, so step^3 > 2 > step^2
        let cube_root = SmallIntervalTheorem::new(2, Ratio::new(29, 23).unwrap()).unwrap();
        assert_eq!(capacity(two(), &cube_root).unwrap(), 2);
        // exact boundary: step^2 == v is not strictly below
        let sq = SmallIntervalTheorem::new(2, Ratio::new(3, 2).unwrap()).unwrap();
        assert_eq!(capacity(Ratio::new(9, 4).unwrap(), &sq).unwrap(), 1);
        assert!(power_below(Ratio::new(3, 2).unwrap(), 1, Ratio::new(9, 4).unwrap()).unwrap());
        assert!(!power_below(Ratio::new(3, 2).unwrap(), 2, Ratio::new(9, 4).unwrap()).unwrap());
    }

    #[test]
    fn ramare_saouter_capacity() {
        let rs = SmallIntervalTheorem::ramare_saouter();
        let cap = capacity(Ratio::interval(14).unwrap(), &rs).unwrap();
        // ln(15/14) / ln(1 + 1/28313999) = 1953464.13 (50-digit arithmetic)
        assert_eq!(cap, 1_953_464);
    }

    #[test]
    fn delta_round_trip() {
        let rs = SmallIntervalTheorem::ramare_saouter();
        assert_eq!(rs.step, Ratio::new(28_314_000, 28_313_999).unwrap());
        assert!((rs.delta() - 28_313_999.0).abs() < 1e-6);
        let ch = SmallIntervalTheorem::from_delta(106_706, 125, 6).unwrap();
        assert_eq!(ch, SmallIntervalTheorem::cullinan_hajir());
        assert!(SmallIntervalTheorem::from_delta(100, 0, 1).is_err());
    }

    #[test]
    fn p_ramanujan_sequences() {
        let ch = SmallIntervalTheorem::cullinan_hajir();
        assert_eq!(
            sequence_p(table(), class(3, 1), two(), 14, &ch).unwrap(),
            [7, 31, 43, 67, 97, 103, 151, 163, 181, 223, 229, 271, 331, 337]
        );
        assert_eq!(
            sequence_p(table(), class(3, 2), two(), 6, &ch).unwrap(),
            [11, 23, 47, 59, 83, 107]
        );
        assert_eq!(
            sequence_p(table(), class(4, 3), two(), 5, &ch).unwrap(),
            [7, 23, 47, 67, 71]
        );
        assert!(matches!(
            sequence_p(table(), class(3, 1), two(), 15, &ch),
            Err(Error::CapacityExceeded { m: 15, capacity: 14 })
        ));
    }

    #[test]
    fn p_thresholds() {
        let ch = SmallIntervalTheorem::cullinan_hajir();
        assert_eq!(
            nk_sequence_p(table(), class(3, 1), 1, 5, &ch).unwrap(),
            [4, 16, 22, 34, 49]
        );
        assert_eq!(
            nk_sequence_p(table(), class(3, 2), 1, 5, &ch).unwrap(),
            [6, 12, 24, 30, 42]
        );
        assert_eq!(
            nk_sequence_p(table(), class(4, 3), 1, 5, &ch).unwrap(),
            [4, 12, 24, 34, 36]
        );
        // k = 2 goes through ceil(R/3); only 8 terms fit under 1.048^m < 3/2
        let k2 = nk_sequence_p(table(), class(3, 1), 2, 8, &ch).unwrap();
        assert_eq!(k2.len(), 8);
        assert!(k2.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn chaining_intervals_fit() {
        // exact rationals as (numerator, denominator) BigUint pairs
        type Q = (BigUint, BigUint);
        let lt = |a: &Q, b: &Q| &a.0 * &b.1 < &b.0 * &a.1;
        let le = |a: &Q, b: &Q| &a.0 * &b.1 <= &b.0 * &a.1;
        for (v, thm) in [
            (two(), SmallIntervalTheorem::cullinan_hajir()),
            (Ratio::new(3, 2).unwrap(), SmallIntervalTheorem::cullinan_hajir()),
            (
                Ratio::new(4, 3).unwrap(),
                SmallIntervalTheorem::new(25, Ratio::new(6, 5).unwrap()).unwrap(),
            ),
        ] {
            let m = capacity(v, &thm).unwrap();
            let x = chaining_bound(v, &thm);
            let x_q: Q = (BigUint::from(x), BigUint::from(1u32));
            let mut y: Q = (BigUint::from(x) * v.den(), BigUint::from(v.num()));
            let x0: Q = (BigUint::from(thm.x0), BigUint::from(1u32));
            assert!(le(&x0, &y));
            let start = y.clone();
            let mut prev_hi: Option<Q> = None;
            for _ in 0..m {
                let hi: Q = (&y.0 * thm.step.num(), &y.1 * thm.step.den());
                if let Some(p) = &prev_hi {
                    assert!(le(p, &y), "overlap");
                }
                assert!(le(&start, &y) && lt(&y, &hi));
                assert!(le(&hi, &x_q), "chain leaves (x/v, x]");
                prev_hi = Some(hi.clone());
                y = hi;
            }
        }
    }

    #[test]
    fn small_interval_route_matches_descent() {
        let rs = SmallIntervalTheorem::ramare_saouter();
        let direct: Vec<u64> = nk_sequence(table(), 2, 5, false)
            .unwrap()
            .iter()
            .map(|r| r.value)
            .collect();
        for m in 2..=5 {
            assert_eq!(
                nk_small_interval(&MillerRabin, 2, m, &rs).unwrap(),
                direct[m as usize - 1]
            );
        }
        assert_eq!(nk_small_interval(&MillerRabin, 14, 1, &rs).unwrap(), 2);
    }

    #[test]
    fn small_interval_route_for_uncertified_k() {
        let rs = SmallIntervalTheorem::ramare_saouter();
        let n = nk_small_interval(&MillerRabin, 4, 1, &rs).unwrap();
        // direct scan: the last prime-free (4n, 5n) sits just below n
        let gaps = theorem1_scan(4, 4, &ScanConfig::default()).unwrap();
        assert_eq!(gaps[0].a_value(), Some(2));
        assert!(n > 2);
        assert_eq!(table().count_primes_open(4 * (n - 1), 5 * (n - 1)).unwrap(), 0);
        for j in n..n + 5_000 {
            assert!(table().count_primes_open(4 * j, 5 * j).unwrap() >= 1);
        }
    }
}
