//! Single-peaked profiles: axis recognition and polynomial CC solvers.

mod axis;
mod dp;
mod greedy;

pub use axis::{check_compatible, check_single_troughed, detect_axis, representation_interval, RepresentationInterval, SocietalAxis};
pub use dp::{solve_cc_sum_sp, solve_cc_sum_sp_with_stats, DpStats};
pub use greedy::solve_cc_minimax_sp;
