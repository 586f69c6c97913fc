//! The weighted sum `qₙ(P) = Σ_{Q ⊆ P} 2^{|Q|} |𝔖ₙ(Q)|`.
//!
//! Three evaluators: the subset sum itself, an integer recurrence over valley
//! Motzkin prefixes, and the closed sum over Dyck meanders (by enumeration
//! or by a height-indexed table). The value `1` never contributes a
//! pinnacle, so the last two drop it from `P` before evaluating.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::kernel::{PowerCache, RunWeights};
use super::permutations::count_pinnacle;
use crate::error::{Error, Result};
use crate::exact::ExactCount;
use crate::lattice::PathEnumerator;
use crate::problem::PinnacleProblem;

/// Largest `k` accepted by [`q_by_subsets`].
pub const SUBSET_MAX_K: usize = 20;
/// Largest `k` accepted by [`q_meander`] in enumeration mode.
pub const MEANDER_ENUM_MAX_K: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MeanderMode {
    /// List every meander and add up its weight.
    Enumerate,
    /// Sweep a table indexed by the current height.
    Table,
}

/// `Σ_{Q ⊆ P} 2^{|Q|} · |𝔖ₙ(Q)|`, straight from the definition.
pub fn q_by_subsets(prob: &PinnacleProblem) -> Result<ExactCount> {
    if prob.k() > SUBSET_MAX_K {
        return Err(Error::GuardExceeded {
            what: "k",
            value: prob.k(),
            limit: SUBSET_MAX_K,
        });
    }
    Ok(prob
        .subproblems()
        .map(|q| (count_pinnacle(&q).into_inner() << q.k()).into())
        .sum())
}

/// `qₙ(P)` from the recurrence on `A(i, j) = 2^i a(i, j)`:
///
/// `A(i+1, j) = 2^{i+1} [i+1 = j] + Σ_{i' ≤ i} Σ_{j' ≤ j−i+i'} 2^{i−i'}
/// f(i'−j'−i+j, i'−j'+1, p_{i'+1} − p_{i+2} − 1) A(i', j')`,
///
/// with `A(0,0) = 1` and `qₙ(P) = 2^{n−1−k} A(k, k)`.
pub fn q_recurrence(prob: &PinnacleProblem) -> ExactCount {
    let prob = prob.without_one();
    let (n, k) = (prob.n(), prob.k());
    if k == 0 {
        return ExactCount::pow2(n - 1);
    }
    let mut cache = PowerCache::new(k + 2);
    let mut tables: HashMap<i64, RunWeights> = HashMap::new();
    // table[i][j] = A(i, j) for j ≤ i
    let mut table: Vec<Vec<BigUint>> = vec![vec![BigUint::one()]];
    for i in 0..k {
        let mut next = Vec::with_capacity(i + 2);
        for j in 0..=i + 1 {
            let mut acc = if j == i + 1 {
                BigUint::one() << (i + 1)
            } else {
                BigUint::zero()
            };
            for (ip, prev) in table.iter().enumerate() {
                // j' runs up to j − i + i', and A(i', j') vanishes for j' > i'.
                let Some(top) = (j + ip).checked_sub(i) else {
                    continue;
                };
                let gap = prob.boundary(ip + 1) as i64 - prob.boundary(i + 2) as i64 - 1;
                let weights = tables
                    .entry(gap)
                    .or_insert_with(|| RunWeights::new(gap, k + 1, &mut cache));
                for (jp, a) in prev.iter().enumerate().take(top.min(ip) + 1) {
                    if a.is_zero() {
                        continue;
                    }
                    let downs = ip - jp + j - i;
                    let f = weights.get(downs, ip - jp + 1);
                    if !f.is_zero() {
                        acc += (f * a) << (i - ip);
                    }
                }
            }
            next.push(acc);
        }
        table.push(next);
    }
    let top = table.swap_remove(k).swap_remove(k);
    (top << (n - 1 - k)).into()
}

/// `qₙ(P) = 2^{n−k−1} Σ_r Π_{m=0}^{k} (r_m + 1)^{p_m − p_{m+1}}` over Dyck
/// meanders `r` of length `k`.
pub fn q_meander(prob: &PinnacleProblem, mode: MeanderMode) -> Result<ExactCount> {
    let prob = prob.without_one();
    let (n, k) = (prob.n(), prob.k());
    let exponents: Vec<u32> = (0..=k)
        .map(|m| (prob.boundary(m) - prob.boundary(m + 1)) as u32)
        .collect();
    let sum = match mode {
        MeanderMode::Enumerate => {
            if k > MEANDER_ENUM_MAX_K {
                return Err(Error::GuardExceeded {
                    what: "k",
                    value: k,
                    limit: MEANDER_ENUM_MAX_K,
                });
            }
            let mut cache = PowerCache::new(k + 1);
            let powers: Vec<_> = exponents.iter().map(|&e| cache.powers(e)).collect();
            PathEnumerator::meanders(k)
                .map(|path| {
                    let heights = path.heights().expect("meanders stay nonnegative");
                    heights
                        .iter()
                        .zip(&powers)
                        .fold(BigUint::one(), |w, (&r, pw)| w * &pw[r + 1])
                })
                .sum::<BigUint>()
        }
        MeanderMode::Table => {
            // by_height[h] = total weight of meander prefixes ending at h
            let mut by_height = vec![BigUint::one()];
            for (m, &e) in exponents.iter().enumerate() {
                for (h, w) in by_height.iter_mut().enumerate() {
                    if !w.is_zero() {
                        *w *= BigUint::from(h + 1).pow(e);
                    }
                }
                if m < k {
                    let mut next = vec![BigUint::zero(); by_height.len() + 1];
                    for (h, w) in by_height.into_iter().enumerate() {
                        if w.is_zero() {
                            continue;
                        }
                        if h > 0 {
                            next[h - 1] += &w;
                        }
                        next[h + 1] += w;
                    }
                    by_height = next;
                }
            }
            by_height.into_iter().sum()
        }
    };
    Ok((sum << (n - k - 1)).into())
}
