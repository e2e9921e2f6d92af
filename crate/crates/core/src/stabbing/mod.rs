//! Balanced capacitated interval stabbing and the Monroe reduction onto it.

mod dp;
mod instance;
mod lif;
mod monroe;

pub use dp::{solve_max_bal_1rs, MAX_TABLE_ENTRIES};
pub use instance::{brute_force_stabbing, check_cover, Interval, StabbingCover, StabbingInstance, BRUTE_MAX_INTERVALS, BRUTE_MAX_LINES};
pub use lif::normalize_lif;
pub use monroe::{
    complete_assignment, decide_monroe_threshold_sp, reduce_m_mw_sp, solve_minimax_m_mw_sp, solve_monroe_sum_sp,
    MonroeReduction,
};
