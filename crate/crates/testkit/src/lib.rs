//! Reference data and brute-force oracles for testing `kninterval`.
//!
//! Fixtures are published sequences kept verbatim as text files. The oracles
//! recount primes by trial division and deliberately share nothing with the
//! library's sieve.

mod fixtures;
mod oracle;

pub use fixtures::{all, fixture, Fixture};
pub use oracle::{is_prime_trial, oracle_n, oracle_n_with, oracle_r, prime_count_trial};
