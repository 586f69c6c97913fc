//! Admissible pinnacle orderings.
//!
//! An ordering `σ ∈ 𝔖_k` is admissible for `P` when some permutation with
//! pinnacle set `P` shows its pinnacles in the order `p_{σ(1)}, …, p_{σ(k)}`.
//! Everything here is driven by the ceiling profile of `P`, the up-step
//! heights of its maximal Dyck type.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::ExactCount;
use crate::lattice::{is_compatible, LatticePath, PathEnumerator, Step};
use crate::permutation::Permutation;
use crate::problem::PinnacleProblem;

/// Largest `k` accepted by [`order_count_via_motzkin`].
pub const ORDER_MOTZKIN_MAX_K: usize = 20;

/// Whether some permutation of `[n]` has pinnacle set `P`:
/// `p_i ≥ 3 + 2(k − i)` for every `1 ≤ i ≤ k`.
pub fn is_admissible(prob: &PinnacleProblem) -> bool {
    let k = prob.k();
    prob.pinnacles()
        .iter()
        .enumerate()
        .all(|(idx, &p)| p >= 3 + 2 * (k - idx - 1))
}

/// Starting heights `ℓ₁, …, ℓ_k` of the up steps of a Dyck path, with
/// `ℓ₁ = 0` and `ℓ_i ≤ ℓ_{i−1} + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CeilingProfile {
    heights: Vec<usize>,
}

impl CeilingProfile {
    pub fn new(heights: Vec<usize>) -> Result<Self> {
        if heights.first().is_some_and(|&h| h != 0) {
            return Err(Error::InvalidArgument("profile must start at 0".into()));
        }
        if heights.windows(2).any(|w| w[1] > w[0] + 1) {
            return Err(Error::InvalidArgument(
                "profile rises by more than one".into(),
            ));
        }
        Ok(Self { heights })
    }

    /// `ℓ_i = min(ℓ_{i−1} + 1, p_i − 3 − 2(k − i))`. Assumes admissibility.
    fn of_admissible(prob: &PinnacleProblem) -> Self {
        let k = prob.k();
        let mut heights = Vec::with_capacity(k);
        for (idx, &p) in prob.pinnacles().iter().enumerate() {
            let cap = p - 3 - 2 * (k - idx - 1);
            let h = match heights.last() {
                None => 0,
                Some(&prev) => cap.min(prev + 1),
            };
            heights.push(h);
        }
        Self { heights }
    }

    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    pub fn len(&self) -> usize {
        self.heights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heights.is_empty()
    }

    /// The Dyck path whose `i`-th up step starts at `ℓ_i`.
    pub fn dyck_path(&self) -> LatticePath {
        let mut steps = Vec::with_capacity(2 * self.heights.len());
        let mut h = 0;
        for &target in &self.heights {
            steps.extend(std::iter::repeat(Step::Down).take(h - target));
            steps.push(Step::Up);
            h = target + 1;
        }
        steps.extend(std::iter::repeat(Step::Down).take(h));
        LatticePath::new(steps)
    }

    /// Total weight of Motzkin paths of length `k − 1` under this ceiling:
    /// `b(0,0) = 1`,
    /// `b(i+1, j) = b(i, j−1) + 2(j+1) b(i, j) + (j+1)(j+2) b(i, j+1)`,
    /// with `b(i, j) = 0` above `ℓ_{i+1}` for `i ≤ k − 2`; the count is
    /// `b(k−1, 0)`.
    pub fn order_count(&self) -> ExactCount {
        let k = self.heights.len();
        if k == 0 {
            return ExactCount::zero();
        }
        let mut row = vec![BigUint::from(1u8)];
        for i in 0..k - 1 {
            // Row i + 1 is capped at ℓ_{i+2} unless it is the last one.
            let cap = if i + 2 < k {
                self.heights[i + 1]
            } else {
                row.len()
            };
            let next: Vec<BigUint> = (0..=cap)
                .map(|j| {
                    let mut v = BigUint::zero();
                    if j >= 1 {
                        if let Some(b) = row.get(j - 1) {
                            v += b;
                        }
                    }
                    if let Some(b) = row.get(j) {
                        v += b * (2 * (j + 1));
                    }
                    if let Some(b) = row.get(j + 1) {
                        v += b * ((j + 1) * (j + 2));
                    }
                    v
                })
                .collect();
            row = next;
        }
        row.swap_remove(0).into()
    }
}

fn require_ordering_input(prob: &PinnacleProblem) -> Result<()> {
    if prob.k() == 0 {
        return Err(Error::EmptyPinnacleSet);
    }
    if !is_admissible(prob) {
        return Err(Error::Inadmissible {
            pinnacles: prob.pinnacles().to_vec(),
        });
    }
    Ok(())
}

/// The ceiling profile of the maximal Dyck type of an admissible, nonempty `P`.
pub fn maximal_dyck_type(prob: &PinnacleProblem) -> Result<CeilingProfile> {
    require_ordering_input(prob)?;
    Ok(CeilingProfile::of_admissible(prob))
}

/// `|𝒪(P)|` by the ceiling recurrence, in `O(k²)` operations.
pub fn order_count(prob: &PinnacleProblem) -> Result<ExactCount> {
    Ok(maximal_dyck_type(prob)?.order_count())
}

/// `|𝒪(P)|` as the weighted sum over Motzkin paths of length `k − 1`
/// compatible with the maximal Dyck type.
pub fn order_count_via_motzkin(prob: &PinnacleProblem) -> Result<ExactCount> {
    let profile = maximal_dyck_type(prob)?;
    let k = prob.k();
    if k > ORDER_MOTZKIN_MAX_K {
        return Err(Error::GuardExceeded {
            what: "k",
            value: k,
            limit: ORDER_MOTZKIN_MAX_K,
        });
    }
    let ceiling = profile.dyck_path();
    let mut total = ExactCount::zero();
    for m in PathEnumerator::motzkin(k - 1) {
        if is_compatible(&m, &ceiling, k)? {
            total = total + m.motzkin_weight()?;
        }
    }
    Ok(total)
}

/// Whether `σ` is an admissible ordering of `P`: the Motzkin type of the
/// cyclic completion of its complement fits under the maximal Dyck type.
pub fn is_admissible_ordering(sigma: &Permutation, prob: &PinnacleProblem) -> Result<bool> {
    let profile = maximal_dyck_type(prob)?;
    if sigma.len() != prob.k() {
        return Err(Error::SizeMismatch {
            what: "ordering size",
            expected: prob.k(),
            found: sigma.len(),
        });
    }
    let m = sigma.complement().cyclic_completion().motzkin_type();
    is_compatible(&m, &profile.dyck_path(), prob.k())
}

/// Whether every ordering in `𝔖_k` is admissible:
/// `p_i ≥ min(2k − i + 2, 3(k + 1 − i))` for `2 ≤ i ≤ k − 1`.
/// Inadmissible sets have no orderings and report `false`.
pub fn is_maximally_admissible(prob: &PinnacleProblem) -> bool {
    if !is_admissible(prob) {
        return false;
    }
    let k = prob.k();
    (2..k).all(|i| prob.boundary(i) >= (2 * k + 2 - i).min(3 * (k + 1 - i)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tight(p: &[usize]) -> PinnacleProblem {
        PinnacleProblem::tight(p.iter().copied()).unwrap()
    }

    #[test]
    fn admissibility_examples() {
        assert!(is_admissible(&PinnacleProblem::new(3, [3]).unwrap()));
        assert!(is_admissible(&PinnacleProblem::new(9, [3]).unwrap()));
        assert!(!is_admissible(&PinnacleProblem::new(5, [4, 3]).unwrap()));
        assert!(is_admissible(&PinnacleProblem::new(5, []).unwrap()));
        assert!(!is_admissible(&PinnacleProblem::new(5, [2]).unwrap()));
    }

    #[test]
    fn maximal_dyck_type_examples() {
        let p = maximal_dyck_type(&tight(&[5, 3])).unwrap();
        assert_eq!(p.heights(), &[0, 0]);
        assert_eq!(p.dyck_path().to_string(), "UDUD");
        let p = maximal_dyck_type(&tight(&[8, 6, 5])).unwrap();
        assert_eq!(p.heights(), &[0, 1, 2]);
        assert_eq!(p.dyck_path().to_string(), "UUUDDD");
        for k in 1..=6 {
            let pins: Vec<usize> = (1..=k).map(|i| 2 * i + 1).collect();
            let p = maximal_dyck_type(&tight(&pins)).unwrap();
            assert!(p.heights().iter().all(|&h| h == 0));
        }
        assert!(matches!(
            maximal_dyck_type(&tight(&[4, 3])),
            Err(Error::Inadmissible { .. })
        ));
        assert_eq!(
            maximal_dyck_type(&PinnacleProblem::new(4, []).unwrap()),
            Err(Error::EmptyPinnacleSet)
        );
    }

    #[test]
    fn order_count_examples() {
        assert_eq!(order_count(&tight(&[5, 3])).unwrap(), 2u64);
        assert_eq!(order_count(&tight(&[7, 5, 3])).unwrap(), 4u64);
        assert_eq!(order_count(&tight(&[8, 6, 5])).unwrap(), 6u64);
        assert_eq!(order_count(&tight(&[3])).unwrap(), 1u64);
        assert_eq!(order_count(&tight(&[9])).unwrap(), 1u64);
        assert_eq!(order_count_via_motzkin(&tight(&[7, 5, 3])).unwrap(), 4u64);
        assert_eq!(order_count_via_motzkin(&tight(&[5, 3])).unwrap(), 2u64);
    }

    #[test]
    fn maximally_admissible_sets_reach_factorial() {
        // p_i = 3(k + 1 − i) satisfies the criterion for every i.
        for k in 1..=9 {
            let pins: Vec<usize> = (1..=k).map(|i| 3 * (k + 1 - i)).collect();
            let p = tight(&pins);
            assert!(is_maximally_admissible(&p));
            let fact: u64 = (1..=k as u64).product();
            assert_eq!(order_count(&p).unwrap(), fact);
            assert_eq!(order_count_via_motzkin(&p).unwrap(), fact);
        }
    }

    #[test]
    fn ordering_membership_examples() {
        let sigma: Permutation = "231".parse().unwrap();
        assert!(is_admissible_ordering(&sigma, &tight(&[8, 6, 5])).unwrap());
        let sigma: Permutation = "213".parse().unwrap();
        assert!(!is_admissible_ordering(&sigma, &tight(&[7, 5, 3])).unwrap());
        let one: Permutation = "1".parse().unwrap();
        assert!(is_admissible_ordering(&one, &tight(&[4])).unwrap());
        assert!(is_admissible_ordering(&one, &tight(&[7, 5, 3])).is_err());
    }

    #[test]
    fn maximal_admissibility_examples() {
        assert!(is_maximally_admissible(&tight(&[5, 3])));
        assert!(is_maximally_admissible(&tight(&[8, 6, 5])));
        assert!(!is_maximally_admissible(&tight(&[7, 5, 3])));
        assert!(!is_maximally_admissible(&tight(&[4, 3])));
    }

    #[test]
    fn profile_validation() {
        assert!(CeilingProfile::new(vec![1]).is_err());
        assert!(CeilingProfile::new(vec![0, 2]).is_err());
        let p = CeilingProfile::new(vec![0, 1, 1, 0]).unwrap();
        assert!(p.dyck_path().is_dyck());
        assert_eq!(p.dyck_path().up_step_heights(), vec![0, 1, 1, 0]);
    }
}
