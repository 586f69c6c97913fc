//! `|𝔖ₙ(P)|` three ways: the valley-prefix recurrence, the sum over
//! Motzkin paths with forced up steps, and the sum over Dyck types.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::kernel::{factorial, height_prefactor, run_weight_signed_gap, PowerCache};
use crate::error::{Error, Result};
use crate::exact::ExactCount;
use crate::lattice::{enumerate_motzkin, LatticePath, PathEnumerator, Step};
use crate::problem::PinnacleProblem;

/// Largest `n` accepted by [`count_via_motzkin_sum`].
pub const MOTZKIN_SUM_MAX_N: usize = 30;
/// Largest `k` accepted by [`count_via_dyck_sum`].
pub const DYCK_SUM_MAX_K: usize = 12;

/// Number of permutations of `[n]` whose pinnacle set is exactly `P`.
///
/// Runs the recurrence over valley Dyck prefixes, `c(0,0) = 1` and
/// `c(i+1, j) = Σ_{j' ≤ j} f(j − j', i − j' + 1, g_{i+1}) · c(i, j')`, then
/// scales `c(k, k)` by `2^{n−1−2k}`.
///
/// Expanding `f` as an alternating sum of powers `x^g` and grouping by the
/// base `x = i + 2 − y` turns each step into a finite difference, one big
/// product per base, and a binomial sum, all on `a(i, j) = j! · c(i, j)`:
///
/// `a(i+1, j) = Σ_y C(j, y) (i+2−y)^g Σ_{j'} (−1)^{y−j'} C(y, j') π(i−j'+1) a(i, j')`
///
/// with `π(ℓ) = [ℓ=0] + ℓ(ℓ+1)`. That is `O(k²)` multiplications by powers
/// and `O(k³)` additions, plus `O(k² log n)` for the powers themselves.
pub fn count_pinnacle(prob: &PinnacleProblem) -> ExactCount {
    let n = prob.n();
    let k = prob.k();
    if k == 0 {
        return ExactCount::pow2(n - 1);
    }
    if prob.contains(1) || n < 2 * k + 1 {
        return ExactCount::zero();
    }
    let gaps = prob.gap_sequence();
    let mut cache = PowerCache::new(k + 1);
    // a[j] = j! · c(i, j)
    let mut a = vec![BigInt::one()];
    for i in 0..k {
        let powers = cache.powers(gaps[i + 1] as u32);
        let mut v: Vec<BigInt> = a
            .iter()
            .enumerate()
            .map(|(jp, x)| x * BigInt::from(height_prefactor(i - jp + 1)))
            .collect();
        v.push(BigInt::zero());
        forward_differences(&mut v);
        for (y, x) in v.iter_mut().enumerate() {
            if !x.is_zero() {
                *x *= BigInt::from_biguint(Sign::Plus, powers[i + 2 - y].clone());
            }
        }
        binomial_sums(&mut v);
        a = v;
    }
    let top = a.swap_remove(k);
    let (c, rem) = top.div_rem(&BigInt::from(factorial(k)));
    debug_assert!(rem.is_zero());
    let c = c.to_biguint().expect("counts are nonnegative");
    (c << (n - 1 - 2 * k)).into()
}

/// `v[y] ← Σ_{t ≤ y} (−1)^{y−t} C(y, t) v[t]`, in place.
fn forward_differences(v: &mut [BigInt]) {
    for r in 1..v.len() {
        for t in (r..v.len()).rev() {
            let (lo, hi) = v.split_at_mut(t);
            hi[0] -= &lo[t - 1];
        }
    }
}

/// `v[j] ← Σ_{y ≤ j} C(j, y) v[y]`, in place; inverse of
/// [`forward_differences`].
fn binomial_sums(v: &mut [BigInt]) {
    for r in (1..v.len()).rev() {
        for t in r..v.len() {
            let (lo, hi) = v.split_at_mut(t);
            hi[0] += &lo[t - 1];
        }
    }
}

/// `Σ_M w(M)` over Motzkin paths of length `n − 1` whose up steps sit
/// exactly at positions `n + 1 − p`, `p ∈ P`.
pub fn count_via_motzkin_sum(prob: &PinnacleProblem) -> Result<ExactCount> {
    let n = prob.n();
    if n > MOTZKIN_SUM_MAX_N {
        return Err(Error::GuardExceeded {
            what: "n",
            value: n,
            limit: MOTZKIN_SUM_MAX_N,
        });
    }
    let ups: Vec<usize> = prob.pinnacles().iter().map(|&p| n + 1 - p).collect();
    enumerate_motzkin(n - 1, &ups)
        .map(|m| m.motzkin_weight())
        .sum()
}

/// Down-run lengths `d_i` and heights `ℓ_i` of a Dyck path, for
/// `0 ≤ i ≤ k`: `ℓ_i` is the height reached by the `i`-th up step and `d_i`
/// the number of down steps following it (`d_0 = ℓ_0 = 0`).
pub fn dyck_runs(d: &LatticePath) -> Result<Vec<(usize, usize)>> {
    if !d.is_dyck() {
        return Err(Error::WrongPathClass { expected: "Dyck" });
    }
    let mut runs = vec![(0usize, 0usize)];
    let mut height = 0;
    for s in d.steps() {
        match s {
            Step::Up => {
                height += 1;
                runs.push((0, height));
            }
            Step::Down => {
                height -= 1;
                runs.last_mut().unwrap().0 += 1;
            }
            Step::Horizontal => unreachable!(),
        }
    }
    Ok(runs)
}

/// Reduced Dyck-type weight `Π_{i=0}^{k} f(d_i, ℓ_i, g_i)`.
///
/// The number of permutations in `𝔖ₙ(P)` with Dyck type `d` is
/// `2^{n−1−2k}` times this value.
pub fn dyck_weight(prob: &PinnacleProblem, d: &LatticePath) -> Result<ExactCount> {
    let runs = dyck_runs(d)?;
    if runs.len() != prob.k() + 1 {
        return Err(Error::SizeMismatch {
            what: "Dyck path up steps",
            expected: prob.k(),
            found: runs.len() - 1,
        });
    }
    let gaps = prob.gap_sequence();
    let mut w = BigUint::from(1u8);
    for (&(downs, height), &gap) in runs.iter().zip(&gaps) {
        w *= run_weight_signed_gap(downs, height, gap);
        if w.is_zero() {
            break;
        }
    }
    Ok(w.into())
}

/// `2^{n−1−2k} Σ_D w(D)` over all Dyck paths with `k` up steps.
pub fn count_via_dyck_sum(prob: &PinnacleProblem) -> Result<ExactCount> {
    let (n, k) = (prob.n(), prob.k());
    if k > DYCK_SUM_MAX_K {
        return Err(Error::GuardExceeded {
            what: "k",
            value: k,
            limit: DYCK_SUM_MAX_K,
        });
    }
    let total: ExactCount = PathEnumerator::dyck(k)
        .map(|d| dyck_weight(prob, &d))
        .sum::<Result<ExactCount>>()?;
    if total.is_zero() {
        return Ok(total);
    }
    // A nonzero sum forces Σ g_i ≥ k, so the exponent is nonnegative.
    Ok((total.into_inner() << (n - 1 - 2 * k)).into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::kernel::RunWeights;
    use crate::permutation::all_permutations;

    fn prob(n: usize, p: &[usize]) -> PinnacleProblem {
        PinnacleProblem::new(n, p.iter().copied()).unwrap()
    }

    /// The recurrence as written, one run weight per `(j, j')` pair.
    fn direct_recurrence(prob: &PinnacleProblem) -> ExactCount {
        let (n, k) = (prob.n(), prob.k());
        if k == 0 {
            return ExactCount::pow2(n - 1);
        }
        if prob.contains(1) || n < 2 * k + 1 {
            return ExactCount::zero();
        }
        let gaps = prob.gap_sequence();
        let mut cache = PowerCache::new(k + 1);
        let mut row = vec![BigUint::one()];
        for i in 0..k {
            let weights = RunWeights::new(gaps[i + 1], i + 1, &mut cache);
            row = (0..=i + 1)
                .map(|j| {
                    (0..=j.min(i))
                        .map(|jp| weights.get(j - jp, i - jp + 1) * &row[jp])
                        .sum()
                })
                .collect();
        }
        (row.swap_remove(k) << (n - 1 - 2 * k)).into()
    }

    #[test]
    fn difference_passes_are_inverse() {
        let orig: Vec<BigInt> = [5, -3, 8, 0, 13, 2]
            .iter()
            .map(|&x| BigInt::from(x))
            .collect();
        let mut v = orig.clone();
        forward_differences(&mut v);
        assert_eq!(v[1], BigInt::from(-8));
        assert_eq!(v[2], BigInt::from(19));
        binomial_sums(&mut v);
        assert_eq!(v, orig);
    }

    #[test]
    fn grouped_recurrence_matches_direct() {
        for n in 1..=40 {
            for k in 0..=(n - 1) / 2 {
                let pr = PinnacleProblem::spread(n, k).unwrap();
                assert_eq!(count_pinnacle(&pr), direct_recurrence(&pr), "{pr}");
            }
        }
        let pr = prob(300, &[290, 250, 249, 200, 120, 119, 118, 60, 33, 20, 9, 4]);
        assert_eq!(count_pinnacle(&pr), direct_recurrence(&pr));
        for pr in PinnacleProblem::all_subsets(11) {
            assert_eq!(count_pinnacle(&pr), direct_recurrence(&pr), "{pr}");
        }
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(count_pinnacle(&prob(3, &[3])), 2u64);
        assert_eq!(count_pinnacle(&prob(7, &[7, 5, 3])), 8u64);
        assert_eq!(count_pinnacle(&prob(5, &[4, 3])), 0u64);
        assert_eq!(count_pinnacle(&prob(4, &[4])), 12u64);
        assert_eq!(count_pinnacle(&prob(1, &[])), 1u64);
        assert_eq!(count_pinnacle(&prob(2, &[])), 2u64);
        assert_eq!(count_pinnacle(&prob(1, &[1])), 0u64);
        assert_eq!(count_pinnacle(&prob(2, &[2])), 0u64);
        for n in 1..=20 {
            assert_eq!(count_pinnacle(&prob(n, &[])), ExactCount::pow2(n - 1));
        }
    }

    #[test]
    fn large_reference_value() {
        let p = prob(
            100,
            &[
                97, 94, 85, 79, 68, 67, 63, 48, 43, 38, 25, 24, 23, 18, 13, 8, 3,
            ],
        );
        let expected: ExactCount = "2056053437771952757776669166927111145600807102338938271866967172893700954435942350990874234585088000"
            .parse()
            .unwrap();
        assert_eq!(count_pinnacle(&p), expected);
        let smaller = prob(60, &[58, 51, 44, 40, 31, 27, 19, 12, 9, 5]);
        assert_eq!(
            count_via_dyck_sum(&smaller).unwrap(),
            count_pinnacle(&smaller)
        );
    }

    #[test]
    fn motzkin_sum_examples() {
        assert_eq!(count_via_motzkin_sum(&prob(3, &[3])).unwrap(), 2u64);
        assert_eq!(count_via_motzkin_sum(&prob(7, &[7, 5, 3])).unwrap(), 8u64);
        assert_eq!(count_via_motzkin_sum(&prob(9, &[])).unwrap(), 256u64);
        assert!(matches!(
            count_via_motzkin_sum(&prob(31, &[])),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn dyck_weight_examples() {
        let ud: LatticePath = "UD".parse().unwrap();
        assert_eq!(dyck_weight(&prob(3, &[3]), &ud).unwrap(), 2u64);
        let uudd: LatticePath = "UUDD".parse().unwrap();
        assert_eq!(dyck_weight(&prob(5, &[4, 3]), &uudd).unwrap(), 0u64);
        assert!(matches!(
            dyck_weight(&prob(5, &[3]), &uudd),
            Err(Error::SizeMismatch { .. })
        ));
        assert!(dyck_weight(&prob(5, &[3]), &"UHD".parse().unwrap()).is_err());
    }

    #[test]
    fn dyck_runs_of_example() {
        let d: LatticePath = "UUDUDD".parse().unwrap();
        assert_eq!(dyck_runs(&d).unwrap(), vec![(0, 0), (0, 1), (1, 2), (2, 2)]);
    }

    #[test]
    fn three_routes_agree_with_brute_force() {
        for n in 1..=8 {
            let mut counts = std::collections::HashMap::<Vec<usize>, u64>::new();
            for p in all_permutations(n) {
                *counts.entry(p.pinnacle_set()).or_default() += 1;
            }
            for pr in PinnacleProblem::all_subsets(n) {
                let brute = counts.get(pr.pinnacles()).copied().unwrap_or(0);
                assert_eq!(count_pinnacle(&pr), brute, "{pr}");
                assert_eq!(count_via_motzkin_sum(&pr).unwrap(), brute, "{pr}");
                assert_eq!(count_via_dyck_sum(&pr).unwrap(), brute, "{pr}");
            }
        }
    }

    #[test]
    fn dyck_sum_matches_for_medium_sizes() {
        for n in 9..=12 {
            for pr in PinnacleProblem::all_subsets(n).filter(|p| p.k() <= 4) {
                let rec = count_pinnacle(&pr);
                assert_eq!(count_via_motzkin_sum(&pr).unwrap(), rec, "{pr}");
                assert_eq!(count_via_dyck_sum(&pr).unwrap(), rec, "{pr}");
            }
        }
    }

    #[test]
    fn partition_of_factorial() {
        let mut fact = BigUint::from(1u8);
        for n in 1..=10usize {
            fact *= n;
            let total: ExactCount = PinnacleProblem::all_subsets(n)
                .map(|p| count_pinnacle(&p))
                .sum();
            assert_eq!(total.into_inner(), fact, "n = {n}");
        }
    }

    #[test]
    fn lower_bound() {
        for k in 1..=6 {
            let n = 2 * k + 1;
            let pins: Vec<usize> = (1..=k).map(|i| 2 * i + 1).collect();
            assert_eq!(count_pinnacle(&prob(n, &pins)), ExactCount::pow2(n - k - 1));
        }
        for n in 1..=10 {
            for pr in PinnacleProblem::all_subsets(n) {
                let c = count_pinnacle(&pr);
                if !c.is_zero() {
                    assert!(c >= ExactCount::pow2(n - pr.k() - 1), "{pr}");
                }
            }
        }
    }
}
