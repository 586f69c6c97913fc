//! `α_k`: how many distinct values `|𝒪(P)|` takes over admissible `P`
//! with `|P| = k`.

use std::collections::HashSet;

use super::orders::{is_admissible, order_count};
use crate::error::{Error, Result};
use crate::exact::ExactCount;
use crate::problem::PinnacleProblem;

/// Largest `k` for ceiling mode; every ordering count is at most `k!`,
/// which fits in `u128` up to here.
pub const ALPHA_CEILING_MAX_K: usize = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlphaMode {
    /// Walk every ceiling profile and run the ordering recurrence under it.
    Ceiling,
    /// Evaluate `|𝒪(P)|` for every admissible `P ⊆ [2k + 1]` of size `k`.
    Oracle,
}

pub fn alpha(k: usize, mode: AlphaMode) -> Result<ExactCount> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let distinct = match mode {
        AlphaMode::Ceiling => {
            if k > ALPHA_CEILING_MAX_K {
                return Err(Error::GuardExceeded {
                    what: "k",
                    value: k,
                    limit: ALPHA_CEILING_MAX_K,
                });
            }
            ceiling_values(k).len()
        }
        AlphaMode::Oracle => oracle_values(k)?.len(),
    };
    Ok(distinct.into())
}

/// Distinct ordering counts over all ceiling profiles of length `k`.
///
/// Only `ℓ₁, …, ℓ_{k−1}` influence the count, so the last height is never
/// branched on. Rows above the remaining length cannot return to zero and
/// are cut, which keeps every stored value at most `k!`.
fn ceiling_values(k: usize) -> HashSet<u128> {
    let mut seen = HashSet::new();
    if k == 1 {
        seen.insert(1);
        return seen;
    }
    // rows[i] = b(i, ·); row 0 sits under ℓ₁ = 0.
    let mut rows: Vec<Vec<u128>> = vec![vec![1]];
    let mut heights = vec![0usize];
    descend(k, &mut rows, &mut heights, &mut seen);
    seen
}

fn step_row(row: &[u128], cap: usize) -> Vec<u128> {
    (0..=cap)
        .map(|j| {
            let down = if j >= 1 {
                row.get(j - 1).copied().unwrap_or(0)
            } else {
                0
            };
            let flat = row.get(j).map_or(0, |&b| b * (2 * (j as u128 + 1)));
            let up = row
                .get(j + 1)
                .map_or(0, |&b| b * ((j as u128 + 1) * (j as u128 + 2)));
            down + flat + up
        })
        .collect()
}

fn descend(
    k: usize,
    rows: &mut Vec<Vec<u128>>,
    heights: &mut Vec<usize>,
    seen: &mut HashSet<u128>,
) {
    let i = rows.len() - 1;
    if i == k - 2 {
        // Last row is uncapped; only b(k−1, 0) matters.
        let row = &rows[i];
        seen.insert(2 * row[0] + 2 * row.get(1).copied().unwrap_or(0));
        return;
    }
    let prev = *heights.last().unwrap();
    let reach = k - 1 - (i + 1);
    for next_height in 0..=prev + 1 {
        let cap = next_height.min(reach);
        let row = step_row(&rows[i], cap);
        rows.push(row);
        heights.push(next_height);
        descend(k, rows, heights, seen);
        rows.pop();
        heights.pop();
    }
}

fn oracle_values(k: usize) -> Result<HashSet<ExactCount>> {
    let n = 2 * k + 1;
    let mut seen = HashSet::new();
    let mut combo: Vec<usize> = (0..k).collect();
    loop {
        let prob = PinnacleProblem::new(n, combo.iter().map(|&i| i + 1))?;
        if is_admissible(&prob) {
            seen.insert(order_count(&prob)?);
        }
        // Next k-subset of {0, …, n−1} in lexicographic order.
        let Some(pos) = (0..k).rev().find(|&t| combo[t] < n - k + t) else {
            break;
        };
        combo[pos] += 1;
        for t in pos + 1..k {
            combo[t] = combo[t - 1] + 1;
        }
    }
    Ok(seen)
}
