//! Exact counting: permutations by pinnacle set, the weighted sum `qₙ(P)`,
//! admissible pinnacle orderings and the number of distinct ordering counts.

mod alpha;
mod kernel;
mod orders;
mod permutations;
mod weighted;

pub use alpha::{alpha, AlphaMode, ALPHA_CEILING_MAX_K};
pub use kernel::{homogeneous, homogeneous_consecutive, run_weight};
pub use orders::{
    is_admissible, is_admissible_ordering, is_maximally_admissible, maximal_dyck_type, order_count,
    order_count_via_motzkin, CeilingProfile, ORDER_MOTZKIN_MAX_K,
};
pub use permutations::{
    count_pinnacle, count_via_dyck_sum, count_via_motzkin_sum, dyck_runs, dyck_weight,
    DYCK_SUM_MAX_K, MOTZKIN_SUM_MAX_N,
};
pub use weighted::{
    q_by_subsets, q_meander, q_recurrence, MeanderMode, MEANDER_ENUM_MAX_K, SUBSET_MAX_K,
};
