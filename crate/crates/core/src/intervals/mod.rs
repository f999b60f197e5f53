//! Primes in (kn, (k+1)n): the thresholds N_k(m) and the gap statistic a(k).

mod gaps;
mod nk;

pub use gaps::{
    certify_no_gap, certify_required_limit, gap_least_n, theorem1_scan, verify_report, GapOutcome, GapReport,
    ScanConfig, DEFAULT_N_MAX,
};
pub use nk::{
    closed_form, descend, descend_by_jumps, interval_count, is_certified, nk_number, nk_number_bounded,
    nk_number_with, nk_required_limit, nk_sequence, nk_upper, proven_n_bound, NkMethod, NkResult,
};
