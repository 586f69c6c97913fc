use std::collections::HashSet;

use pinnacle_core::{
    count_pinnacle, count_via_dyck_sum, count_via_motzkin_sum, generate_all, is_admissible,
    order_count, order_count_via_motzkin, q_by_subsets, q_meander, q_recurrence, ExactCount,
    MeanderMode, PinnacleProblem,
};
use proptest::prelude::*;

/// `n` in `lo..=hi` and a random subset of `[n]` with at most `max_k` values.
fn instance(lo: usize, hi: usize, max_k: usize) -> impl Strategy<Value = PinnacleProblem> {
    (lo..=hi).prop_flat_map(move |n| {
        proptest::sample::subsequence((1..=n).collect::<Vec<_>>(), 0..=max_k.min(n))
            .prop_map(move |p| PinnacleProblem::new(n, p).unwrap())
    })
}

/// Sets without `1` that are far enough apart to have permutations.
fn realizable(lo: usize, hi: usize, max_k: usize) -> impl Strategy<Value = PinnacleProblem> {
    instance(lo, hi, max_k).prop_filter("empty class", |p| !count_pinnacle(p).is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn recurrence_matches_motzkin_sum(prob in instance(1, 16, 6)) {
        prop_assert_eq!(count_pinnacle(&prob), count_via_motzkin_sum(&prob).unwrap());
    }

    #[test]
    fn recurrence_matches_dyck_sum(prob in instance(1, 80, 8)) {
        prop_assert_eq!(count_pinnacle(&prob), count_via_dyck_sum(&prob).unwrap());
    }

    #[test]
    fn q_routes_agree(prob in instance(1, 60, 8)) {
        let q = q_recurrence(&prob);
        prop_assert_eq!(&q, &q_meander(&prob, MeanderMode::Table).unwrap());
        prop_assert_eq!(&q, &q_meander(&prob, MeanderMode::Enumerate).unwrap());
        prop_assert_eq!(&q, &q_by_subsets(&prob).unwrap());
    }

    #[test]
    fn q_bounds_the_count(prob in instance(1, 60, 8)) {
        let scaled = ExactCount::from(count_pinnacle(&prob).into_inner() << prob.k());
        prop_assert!(q_recurrence(&prob) >= scaled);
    }

    #[test]
    fn order_routes_agree(prob in instance(3, 40, 10).prop_filter("inadmissible", |p| p.k() > 0 && is_admissible(p))) {
        let rec = order_count(&prob).unwrap();
        prop_assert_eq!(&rec, &order_count_via_motzkin(&prob).unwrap());
        let factorial: u64 = (1..=prob.k() as u64).product();
        prop_assert!(rec <= factorial);
    }

    #[test]
    fn generation_is_exact(prob in realizable(1, 10, 4)) {
        let mut seen = HashSet::new();
        for pi in generate_all(&prob) {
            prop_assert_eq!(pi.pinnacle_set(), prob.pinnacles().to_vec());
            prop_assert!(seen.insert(pi));
        }
        prop_assert_eq!(count_pinnacle(&prob), seen.len() as u64);
    }
}

#[test]
fn count_scales_with_fixed_set() {
    // Values above every pinnacle only add room, never remove it.
    let mut last = ExactCount::zero();
    for n in 7..40 {
        let c = count_pinnacle(&PinnacleProblem::new(n, [7, 5, 3]).unwrap());
        assert!(c > last);
        last = c;
    }
}
