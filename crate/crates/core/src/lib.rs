//! Primes in the intervals (kn, (k+1)n).
//!
//! * [`prime_engine`]: sieve-backed prime tables, deterministic 64-bit
//!   primality and primorial products.
//! * [`ramanujan`]: generalized Ramanujan numbers R_v(m) and Chebyshev
//!   numbers C_v(m), found by descent from explicit theta-function bounds.
//! * [`intervals`]: N_k(m), the least n beyond which (kn, (k+1)n) always holds
//!   at least m primes, and the gap statistic a(k).
//! * [`residue`]: the same questions restricted to primes in one residue class.

pub mod error;
pub mod intervals;
pub mod prime_engine;
pub mod ramanujan;
pub mod ratio;
pub mod residue;

pub use error::{Error, Result};
pub use prime_engine::{is_prime, PrimeTable};
pub use ratio::Ratio;
