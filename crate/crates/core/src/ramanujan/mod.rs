//! Generalized Ramanujan numbers R_v(m) and Chebyshev numbers C_v(m).

mod bound;
mod descent;
mod prop8;

pub use bound::{descent_bound, solve_bound, upper_bound_x, BoundForm, DusartRegime, DusartTable, MIN_BOUND};
pub use descent::{
    chebyshev_holds, chebyshev_number, published_bound_respected, ramanujan_count, ramanujan_number,
    required_limit, sequence, Kind,
};
pub use prop8::{
    analytic_lhs, analytic_m0, prop8_required_limit, prop8_t, ramanujan_inequality_counterexample,
    ramanujan_inequality_holds, verify_prop8, Prop8Report, Prop8Violation, CERTIFIED_K,
};
