//! Brute-force references and the cross-check harness.
//!
//! Everything here scans `𝔖ₙ` in full. The scan groups permutations by
//! pinnacle set, by pinnacle ordering and by the Motzkin type of their
//! cyclic completion, and [`cross_check`] compares those groups with every
//! fast route in the crate.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::counting::{
    count_pinnacle, count_via_motzkin_sum, is_admissible, is_maximally_admissible,
    maximal_dyck_type, order_count, order_count_via_motzkin, q_by_subsets, q_meander, q_recurrence,
    MeanderMode,
};
use crate::error::{Error, Result};
use crate::exact::ExactCount;
use crate::generation::list_admissible_orderings;
use crate::lattice::{LatticePath, PathEnumerator};
use crate::permutation::{all_permutations, Permutation};
use crate::problem::PinnacleProblem;

/// Largest `n` scanned by [`brute_count`] and [`cross_check`].
pub const BRUTE_MAX_N: usize = 10;
/// Largest `p₁` accepted by [`brute_orderings`].
pub const BRUTE_ORDERINGS_MAX: usize = 9;

fn guard(what: &'static str, value: usize, limit: usize) -> Result<()> {
    if value > limit {
        return Err(Error::GuardExceeded { what, value, limit });
    }
    Ok(())
}

/// `|𝔖ₙ(P)|` by scanning all of `𝔖ₙ`.
pub fn brute_count(prob: &PinnacleProblem) -> Result<ExactCount> {
    guard("n", prob.n(), BRUTE_MAX_N)?;
    let count = all_permutations(prob.n())
        .filter(|p| p.pinnacle_set() == prob.pinnacles())
        .count();
    Ok(ExactCount::from(count as u64))
}

/// `{ord(π) : π ∈ 𝔖_{p₁}(P)}`. Larger `n` gives no new orderings.
pub fn brute_orderings(pinnacles: &[usize]) -> Result<BTreeSet<Permutation>> {
    let prob = PinnacleProblem::tight(pinnacles.iter().copied())?;
    guard("p1", prob.n(), BRUTE_ORDERINGS_MAX)?;
    Ok(all_permutations(prob.n())
        .filter(|p| p.pinnacle_set() == prob.pinnacles())
        .map(|p| p.pinnacle_ordering())
        .collect())
}

/// What a full scan of `𝔖ₙ` sees.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LevelScan {
    pub n: usize,
    /// `|𝔖ₙ(P)|` for every `P` that occurs, keyed by decreasing `P`.
    pub counts: BTreeMap<Vec<usize>, u64>,
    /// Orderings seen for each `P` with `p₁ = n`.
    pub orderings: BTreeMap<Vec<usize>, BTreeSet<Permutation>>,
    /// Number of permutations whose cyclic completion has each Motzkin type.
    pub motzkin_classes: BTreeMap<LatticePath, u64>,
    /// Permutations whose Dyck type climbs above the ceiling profile of
    /// their pinnacle set.
    pub dominance_violations: Vec<Permutation>,
}

impl LevelScan {
    fn merge(mut self, other: LevelScan) -> LevelScan {
        for (p, c) in other.counts {
            *self.counts.entry(p).or_default() += c;
        }
        for (p, s) in other.orderings {
            self.orderings.entry(p).or_default().extend(s);
        }
        for (m, c) in other.motzkin_classes {
            *self.motzkin_classes.entry(m).or_default() += c;
        }
        self.dominance_violations.extend(other.dominance_violations);
        self.dominance_violations.sort();
        self
    }

    fn record(&mut self, pi: Permutation) {
        let pins = pi.pinnacle_set();
        let m = pi.cyclic_completion().motzkin_type();
        if !pins.is_empty() {
            let dominated = PinnacleProblem::new(self.n, pins.iter().copied())
                .and_then(|prob| maximal_dyck_type(&prob))
                .map(|ceiling| {
                    let starts = m.dyck_compression().up_step_heights();
                    starts.iter().zip(ceiling.heights()).all(|(h, c)| h <= c)
                })
                .unwrap_or(false);
            if !dominated {
                self.dominance_violations.push(pi.clone());
            }
        }
        if pins.first() == Some(&self.n) {
            self.orderings
                .entry(pins.clone())
                .or_default()
                .insert(pi.pinnacle_ordering());
        }
        *self.counts.entry(pins).or_default() += 1;
        *self.motzkin_classes.entry(m).or_default() += 1;
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }
}

/// Scans `𝔖ₙ`, split by first letter across threads.
pub fn scan_level(n: usize) -> Result<LevelScan> {
    guard("n", n, BRUTE_MAX_N)?;
    let empty = LevelScan {
        n,
        ..Default::default()
    };
    if n == 0 {
        return Ok(empty);
    }
    let parts: Vec<LevelScan> = (1..=n)
        .into_par_iter()
        .map(|first| {
            let rest: Vec<usize> = (1..=n).filter(|&v| v != first).collect();
            let mut scan = LevelScan {
                n,
                ..Default::default()
            };
            for tail in all_permutations(n - 1) {
                let mut word = Vec::with_capacity(n);
                word.push(first);
                word.extend(tail.as_slice().iter().map(|&i| rest[i - 1]));
                scan.record(Permutation::from_vec_unchecked(word));
            }
            scan
        })
        .collect();
    Ok(parts.into_iter().fold(empty, LevelScan::merge))
}

/// One disagreement, with enough data to reproduce it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub n: usize,
    pub pinnacles: Vec<usize>,
    pub check: String,
    pub method_a: &'static str,
    pub method_b: &'static str,
    pub value_a: String,
    pub value_b: String,
}

impl std::fmt::Display for Mismatch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} n={} P={:?}: {}={} but {}={}",
            self.check,
            self.n,
            self.pinnacles,
            self.method_a,
            self.value_a,
            self.method_b,
            self.value_b
        )
    }
}

/// Result of [`cross_check`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BruteForceReport {
    pub max_n: usize,
    pub levels: Vec<LevelScan>,
    /// Number of `(n, P)` instances compared.
    pub instances: usize,
    pub mismatches: Vec<Mismatch>,
}

impl BruteForceReport {
    pub fn is_ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

struct Checker<'a> {
    n: usize,
    pinnacles: &'a [usize],
    out: Vec<Mismatch>,
}

impl Checker<'_> {
    fn compare<T: PartialEq + std::fmt::Display>(
        &mut self,
        check: &str,
        a: (&'static str, &T),
        b: (&'static str, &T),
    ) {
        if a.1 != b.1 {
            self.out.push(Mismatch {
                n: self.n,
                pinnacles: self.pinnacles.to_vec(),
                check: check.to_string(),
                method_a: a.0,
                method_b: b.0,
                value_a: a.1.to_string(),
                value_b: b.1.to_string(),
            });
        }
    }

    fn compare_result(
        &mut self,
        check: &str,
        a: (&'static str, &ExactCount),
        b: (&'static str, Result<ExactCount>),
    ) {
        let value_b = match b.1 {
            Ok(v) if &v == a.1 => return,
            Ok(v) => v.to_string(),
            Err(e) => format!("error: {e}"),
        };
        self.out.push(Mismatch {
            n: self.n,
            pinnacles: self.pinnacles.to_vec(),
            check: check.to_string(),
            method_a: a.0,
            method_b: b.0,
            value_a: a.1.to_string(),
            value_b,
        });
    }
}

fn check_instance<F>(scan: &LevelScan, prob: &PinnacleProblem, counter: &F) -> Vec<Mismatch>
where
    F: Fn(&PinnacleProblem) -> ExactCount,
{
    let n = prob.n();
    let mut c = Checker {
        n,
        pinnacles: prob.pinnacles(),
        out: Vec::new(),
    };
    let brute = |q: &PinnacleProblem| {
        ExactCount::from(scan.counts.get(q.pinnacles()).copied().unwrap_or(0))
    };
    let scanned = brute(prob);

    let fast = counter(prob);
    c.compare("count", ("brute", &scanned), ("rec", &fast));
    c.compare_result(
        "count",
        ("brute", &scanned),
        ("motzkin-sum", count_via_motzkin_sum(prob)),
    );

    let q_brute: ExactCount = prob
        .subproblems()
        .map(|q| (brute(&q).into_inner() << q.k()).into())
        .sum();
    c.compare_result("q", ("brute", &q_brute), ("subset", q_by_subsets(prob)));
    c.compare("q", ("brute", &q_brute), ("rec", &q_recurrence(prob)));
    c.compare_result(
        "q",
        ("brute", &q_brute),
        ("meander-enum", q_meander(prob, MeanderMode::Enumerate)),
    );
    c.compare_result(
        "q",
        ("brute", &q_brute),
        ("meander-dp", q_meander(prob, MeanderMode::Table)),
    );

    if prob.k() > 0 && prob.pinnacles()[0] == n {
        let seen = scan
            .orderings
            .get(prob.pinnacles())
            .cloned()
            .unwrap_or_default();
        let seen_count = ExactCount::from(seen.len() as u64);
        if is_admissible(prob) {
            c.compare_result(
                "orders",
                ("brute", &seen_count),
                ("recurrence", order_count(prob)),
            );
            c.compare_result(
                "orders",
                ("brute", &seen_count),
                ("motzkin-sum", order_count_via_motzkin(prob)),
            );
            let listed: BTreeSet<Permutation> = list_admissible_orderings(prob)
                .map(|it| it.collect())
                .unwrap_or_default();
            let show = |s: &BTreeSet<Permutation>| {
                s.iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            c.compare(
                "orders",
                ("brute", &show(&seen)),
                ("filter", &show(&listed)),
            );
            let factorial: ExactCount = (1..=prob.k() as u64).product::<u64>().into();
            let full = seen_count == factorial;
            c.compare(
                "maximal-admissibility",
                ("brute-is-full", &full),
                ("criterion", &is_maximally_admissible(prob)),
            );
        } else {
            c.compare(
                "orders",
                ("brute", &seen_count),
                ("admissibility", &ExactCount::zero()),
            );
        }
    }
    c.out
}

/// Compares every fast route against the scan for all `P ⊆ [n]`, `n ≤ max_n`.
pub fn cross_check(max_n: usize) -> Result<BruteForceReport> {
    cross_check_with(max_n, count_pinnacle)
}

/// [`cross_check`] with the main counting routine swapped out, so the
/// harness itself can be tested against a broken counter.
pub fn cross_check_with<F>(max_n: usize, counter: F) -> Result<BruteForceReport>
where
    F: Fn(&PinnacleProblem) -> ExactCount + Sync,
{
    guard("max_n", max_n, BRUTE_MAX_N)?;
    let mut report = BruteForceReport {
        max_n,
        ..Default::default()
    };
    for n in 1..=max_n {
        let scan = scan_level(n)?;
        let problems: Vec<PinnacleProblem> = PinnacleProblem::all_subsets(n).collect();
        report.instances += problems.len();
        let found: Vec<Vec<Mismatch>> = problems
            .par_iter()
            .map(|prob| check_instance(&scan, prob, &counter))
            .collect();
        report.mismatches.extend(found.into_iter().flatten());

        let factorial: u64 = (1..=n as u64).product();
        let total = scan.total();
        if total != factorial {
            report.mismatches.push(Mismatch {
                n,
                pinnacles: Vec::new(),
                check: "total".into(),
                method_a: "sum-over-sets",
                method_b: "factorial",
                value_a: total.to_string(),
                value_b: factorial.to_string(),
            });
        }
        for m in PathEnumerator::motzkin(n - 1) {
            let size = scan.motzkin_classes.get(&m).copied().unwrap_or(0);
            let weight = m.motzkin_weight()?;
            if weight != size {
                report.mismatches.push(Mismatch {
                    n,
                    pinnacles: Vec::new(),
                    check: format!("class-size {m}"),
                    method_a: "brute",
                    method_b: "weight",
                    value_a: size.to_string(),
                    value_b: weight.to_string(),
                });
            }
        }
        for pi in &scan.dominance_violations {
            report.mismatches.push(Mismatch {
                n,
                pinnacles: pi.pinnacle_set(),
                check: format!("dyck-dominance {pi}"),
                method_a: "dyck-type",
                method_b: "ceiling",
                value_a: pi
                    .cyclic_completion()
                    .motzkin_type()
                    .dyck_compression()
                    .to_string(),
                value_b: "exceeded".into(),
            });
        }
        report.levels.push(scan);
    }
    Ok(report)
}
