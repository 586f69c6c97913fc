//! Exact enumeration of permutations by pinnacle set.
//!
//! A pinnacle of `π ∈ 𝔖ₙ` is a value `π_i` with `π_{i−1} < π_i > π_{i+1}`.
//! This crate counts `|𝔖ₙ(P)|` in time polynomial in `|P|` and `log n`,
//! evaluates the weighted sum `qₙ(P)`, counts and lists admissible
//! pinnacle orderings, computes `α_k`, and generates `𝔖ₙ(P)` lazily. Every
//! fast routine has a slower independent route and a brute-force oracle
//! to check it against.
//!
//! ```
//! use pinnacle_core::{count_pinnacle, PinnacleProblem};
//!
//! let prob = PinnacleProblem::new(7, [3, 5, 7]).unwrap();
//! assert_eq!(count_pinnacle(&prob).to_string(), "8");
//! ```

pub mod counting;
pub mod error;
pub mod exact;
pub mod generation;
pub mod lattice;
pub mod oracle;
pub mod permutation;
pub mod problem;

pub use counting::{
    alpha, count_pinnacle, count_via_dyck_sum, count_via_motzkin_sum, dyck_weight, is_admissible,
    is_admissible_ordering, is_maximally_admissible, maximal_dyck_type, order_count,
    order_count_via_motzkin, q_by_subsets, q_meander, q_recurrence, AlphaMode, CeilingProfile,
    MeanderMode,
};
pub use error::{Error, Result};
pub use exact::ExactCount;
pub use generation::{
    construct_from_choices, generate_all, list_admissible_orderings, Choice, ChoiceSequence,
    PinnacleGenerator, Side,
};
pub use lattice::{enumerate_motzkin, is_compatible, LatticePath, PathEnumerator, Step};
pub use oracle::{brute_count, brute_orderings, cross_check, BruteForceReport, Mismatch};
pub use permutation::{all_permutations, CyclicPermutation, Permutation};
pub use problem::PinnacleProblem;
