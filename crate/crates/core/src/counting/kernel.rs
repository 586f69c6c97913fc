//! Homogeneous symmetric polynomials at consecutive integers and the
//! run weight built from them.

use std::collections::HashMap;
use std::rc::Rc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::ExactCount;

/// `h_m(x_1, …, x_k)`, the sum of all monomials of degree `m`.
pub fn homogeneous(m: usize, xs: &[BigInt]) -> BigInt {
    // row[t] holds h_t over the variables seen so far.
    let mut row = vec![BigInt::zero(); m + 1];
    row[0] = BigInt::one();
    for x in xs {
        for t in 1..=m {
            let add = x * &row[t - 1];
            row[t] += add;
        }
    }
    row.swap_remove(m)
}

/// `h_m(top, top − 1, …, top − count + 1)`.
pub fn homogeneous_consecutive(m: usize, top: i64, count: usize) -> BigInt {
    let xs: Vec<BigInt> = (0..count as i64).map(|i| BigInt::from(top - i)).collect();
    homogeneous(m, &xs)
}

/// `[ℓ=0] + ℓ(ℓ+1)`.
pub(crate) fn height_prefactor(height: usize) -> BigUint {
    if height == 0 {
        BigUint::one()
    } else {
        BigUint::from(height) * BigUint::from(height + 1)
    }
}

pub(crate) fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// Weight of a run of `gap` steps that starts at `height` right after an up
/// step and contains `downs` down steps:
/// `([ℓ=0] + ℓ(ℓ+1)) · h_{g−d}(ℓ+1, ℓ, …, ℓ−d+1)`, and `0` when `d > g`.
///
/// Evaluated as `Σ_m (−1)^m C(d,m) (ℓ+1−m)^g / d!`, with `0^0 = 1`.
/// Requires `downs ≤ height + 1` so that every argument is nonnegative.
pub fn run_weight(downs: usize, height: usize, gap: usize) -> Result<ExactCount> {
    if downs > height + 1 {
        return Err(Error::InvalidArgument(format!(
            "run with {downs} down steps cannot start at height {height}"
        )));
    }
    Ok(run_weight_signed_gap(downs, height, gap as i64).into())
}

pub(crate) fn run_weight_signed_gap(downs: usize, height: usize, gap: i64) -> BigUint {
    if gap < 0 || downs as i64 > gap {
        return BigUint::zero();
    }
    let g = gap as u32;
    let mut sum = BigInt::zero();
    let mut binom = BigInt::one();
    for m in 0..=downs {
        let base = BigInt::from((height + 1 - m) as u64);
        let term = &binom * base.pow(g);
        if m % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        binom = binom * (downs - m) / (m + 1);
    }
    let sum = sum.to_biguint().expect("alternating sum is nonnegative");
    height_prefactor(height) * exact_div(sum, &factorial(downs))
}

fn exact_div(num: BigUint, den: &BigUint) -> BigUint {
    let (q, r) = num.div_rem(den);
    assert!(r.is_zero(), "inexact division in run weight");
    q
}

/// `x^gap` for `x = 0, …, max_base`, one vector per distinct gap value.
#[derive(Debug)]
pub(crate) struct PowerCache {
    max_base: usize,
    by_gap: HashMap<u32, Rc<Vec<BigUint>>>,
}

impl PowerCache {
    pub(crate) fn new(max_base: usize) -> Self {
        Self {
            max_base,
            by_gap: HashMap::new(),
        }
    }

    pub(crate) fn powers(&mut self, gap: u32) -> Rc<Vec<BigUint>> {
        let max_base = self.max_base;
        self.by_gap
            .entry(gap)
            .or_insert_with(|| Rc::new((0..=max_base).map(|x| BigUint::from(x).pow(gap)).collect()))
            .clone()
    }
}

/// All run weights for one gap value and heights `0..=max_height`.
///
/// The alternating sums are the backward differences of `x ↦ x^g` at
/// `x = ℓ + 1`, so they come out of a difference table instead of being
/// summed term by term.
#[derive(Debug, Clone)]
pub(crate) struct RunWeights {
    // rows[ℓ][d] for d ≤ ℓ + 1
    rows: Vec<Vec<BigUint>>,
}

impl RunWeights {
    pub(crate) fn new(gap: i64, max_height: usize, cache: &mut PowerCache) -> Self {
        let mut rows: Vec<Vec<BigUint>> = (0..=max_height)
            .map(|h| vec![BigUint::zero(); h + 2])
            .collect();
        if gap < 0 {
            return Self { rows };
        }
        let powers = cache.powers(gap as u32);
        assert!(powers.len() >= max_height + 2);
        let mut diff: Vec<BigUint> = powers[..max_height + 2].to_vec();
        let mut fact = BigUint::one();
        let max_downs = (max_height + 1).min(gap as usize);
        for d in 0..=max_downs {
            if d > 0 {
                // diff[x] becomes the d-th backward difference at x, for x ≥ d.
                for x in (d..=max_height + 1).rev() {
                    let lower = diff[x - 1].clone();
                    diff[x] -= lower;
                }
                fact *= d;
            }
            for (h, row) in rows.iter_mut().enumerate().skip(d.saturating_sub(1)) {
                row[d] = height_prefactor(h) * exact_div(diff[h + 1].clone(), &fact);
            }
        }
        Self { rows }
    }

    pub(crate) fn get(&self, downs: usize, height: usize) -> &BigUint {
        &self.rows[height][downs]
    }
}
