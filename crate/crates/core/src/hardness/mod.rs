//! Reductions from hitting set, cubic vertex cover and restricted exact
//! 3-cover, with brute-force deciders for the source problems.

mod gen;
mod sets;

pub use gen::{gen_hs_approval, gen_hs_borda, gen_rx3c_monroe, gen_vc_minimax, rx3c_cover_assignment, vote_from_trough, HS_BORDA_CAP};
pub use sets::{
    brute_balanced_vertex_cover, brute_exact_3_cover, brute_hitting_set, HittingSetInstance, RX3CInstance,
    BRUTE_HS_MAX_UNIVERSE, BRUTE_X3C_MAX_N,
};
