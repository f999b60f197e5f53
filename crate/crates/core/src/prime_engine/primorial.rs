use num_bigint::BigUint;
use num_traits::One;

use super::table::PrimeTable;
use crate::error::{Error, Result};

/// Balanced product tree; keeps operand sizes even so the big multiplications stay cheap.
pub fn product(values: &[u64]) -> BigUint {
    match values.len() {
        0 => BigUint::one(),
        1 => BigUint::from(values[0]),
        2 => BigUint::from(values[0] as u128 * values[1] as u128),
        n => {
            let (l, r) = values.split_at(n / 2);
            product(l) * product(r)
        }
    }
}

/// Product of all primes p with lo < p <= hi.
pub fn primorial_segment(table: &PrimeTable, lo: u64, hi: u64) -> Result<BigUint> {
    if lo > hi {
        return Err(Error::InvalidArgument(format!("empty range ({lo}, {hi}]")));
    }
    Ok(product(table.primes_in(lo, hi)?))
}
