//! Lattice paths over the closed alphabet `U`/`H`/`D`, their weights, and
//! lexicographic enumeration.
//!
//! Path classes (Motzkin, Dyck, prefixes) are predicates on a single
//! [`LatticePath`] type rather than separate types.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::ExactCount;

/// One step of a lattice path. Ordered `Up < Horizontal < Down`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Up,
    Horizontal,
    Down,
}

impl Step {
    pub const ALL: [Step; 3] = [Step::Up, Step::Horizontal, Step::Down];

    pub fn delta(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Horizontal => 0,
            Step::Down => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Horizontal => 'H',
            Step::Down => 'D',
        }
    }

    fn bit(self) -> u8 {
        match self {
            Step::Up => 1,
            Step::Horizontal => 2,
            Step::Down => 4,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(steps: Vec<Step>) -> Self {
        Self { steps }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn into_steps(self) -> Vec<Step> {
        self.steps
    }

    pub fn count(&self, step: Step) -> usize {
        self.steps.iter().filter(|&&s| s == step).count()
    }

    /// Heights before each step followed by the final height, or `None` if
    /// the path goes below zero.
    pub fn heights(&self) -> Option<Vec<usize>> {
        let mut h = 0i64;
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        out.push(0);
        for s in &self.steps {
            h += s.delta();
            if h < 0 {
                return None;
            }
            out.push(h as usize);
        }
        Some(out)
    }

    /// Signed final height.
    pub fn final_height(&self) -> i64 {
        self.steps.iter().map(|s| s.delta()).sum()
    }

    fn first_dip(&self) -> Option<usize> {
        let mut h = 0i64;
        for (i, s) in self.steps.iter().enumerate() {
            h += s.delta();
            if h < 0 {
                return Some(i + 1);
            }
        }
        None
    }

    /// Never below zero (a prefix of some Motzkin path).
    pub fn is_motzkin_prefix(&self) -> bool {
        self.first_dip().is_none()
    }

    pub fn is_motzkin(&self) -> bool {
        self.is_motzkin_prefix() && self.final_height() == 0
    }

    /// Never below zero and free of horizontal steps.
    pub fn is_dyck_prefix(&self) -> bool {
        self.is_motzkin_prefix() && !self.steps.contains(&Step::Horizontal)
    }

    pub fn is_dyck(&self) -> bool {
        self.is_dyck_prefix() && self.final_height() == 0
    }

    /// Removes every horizontal step.
    pub fn dyck_compression(&self) -> LatticePath {
        Self::new(
            self.steps
                .iter()
                .copied()
                .filter(|&s| s != Step::Horizontal)
                .collect(),
        )
    }

    /// Starting height of each up step, in order.
    pub fn up_step_heights(&self) -> Vec<usize> {
        let mut h = 0usize;
        let mut out = Vec::new();
        for s in &self.steps {
            match s {
                Step::Up => {
                    out.push(h);
                    h += 1;
                }
                Step::Horizontal => {}
                Step::Down => h = h.saturating_sub(1),
            }
        }
        out
    }

    /// Product of step weights: up `1`, horizontal at height `ℓ` is
    /// `2(ℓ+1)`, down from `ℓ` is `ℓ(ℓ+1)`. Defined for prefixes too.
    pub fn motzkin_weight(&self) -> Result<ExactCount> {
        if let Some(step) = self.first_dip() {
            return Err(Error::BelowAxis { step });
        }
        let mut w = BigUint::one();
        let mut h: u64 = 0;
        for s in &self.steps {
            match s {
                Step::Up => h += 1,
                Step::Horizontal => w *= 2 * (h + 1),
                Step::Down => {
                    w *= h * (h + 1);
                    h -= 1;
                }
            }
        }
        Ok(w.into())
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.symbol())?;
        }
        Ok(())
    }
}

impl FromStr for LatticePath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c.to_ascii_uppercase() {
                'U' => Ok(Step::Up),
                'H' => Ok(Step::Horizontal),
                'D' => Ok(Step::Down),
                _ => Err(Error::InvalidArgument(format!("unknown step {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }
}

/// Whether the Motzkin path `m` (length `k − 1`) is compatible with the
/// Dyck path `d` (with `k` up steps): for every `1 ≤ i ≤ k − 1`, step `i` of
/// `m` starts no higher than the `i`-th up step of `d`.
pub fn is_compatible(m: &LatticePath, d: &LatticePath, k: usize) -> Result<bool> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    if m.len() != k - 1 {
        return Err(Error::SizeMismatch {
            what: "Motzkin path length",
            expected: k - 1,
            found: m.len(),
        });
    }
    if !m.is_motzkin() {
        return Err(Error::WrongPathClass {
            expected: "Motzkin",
        });
    }
    if !d.is_dyck() {
        return Err(Error::WrongPathClass { expected: "Dyck" });
    }
    let ceiling = d.up_step_heights();
    if ceiling.len() != k {
        return Err(Error::SizeMismatch {
            what: "Dyck up steps",
            expected: k,
            found: ceiling.len(),
        });
    }
    let starts = m.heights().expect("checked Motzkin");
    Ok(starts.iter().zip(&ceiling).take(k - 1).all(|(a, b)| a <= b))
}

/// Backtracking enumerator of paths with a per-position set of allowed
/// steps, in lexicographic order `U < H < D`.
///
/// Paths never go below zero; when `closed` is set they must also end at
/// height zero.
#[derive(Clone, Debug)]
pub struct PathEnumerator {
    allowed: Vec<u8>,
    closed: bool,
    // Suffix counts used to prune branches that cannot return to zero.
    forced_ups_after: Vec<usize>,
    downs_after: Vec<usize>,
    steps: Vec<Step>,
    height: i64,
    started: bool,
    done: bool,
}

impl PathEnumerator {
    fn new(allowed: Vec<u8>, closed: bool) -> Self {
        let len = allowed.len();
        let mut forced_ups_after = vec![0; len + 1];
        let mut downs_after = vec![0; len + 1];
        for i in (0..len).rev() {
            forced_ups_after[i] = forced_ups_after[i + 1] + usize::from(allowed[i] == 1);
            downs_after[i] = downs_after[i + 1] + usize::from(allowed[i] & 4 != 0);
        }
        Self {
            allowed,
            closed,
            forced_ups_after,
            downs_after,
            steps: Vec::with_capacity(len),
            height: 0,
            started: false,
            done: false,
        }
    }

    /// Motzkin paths of `length` whose up steps are exactly at the given
    /// 1-based positions. Positions outside `[1, length]` give an empty stream.
    pub fn motzkin_with_ups(length: usize, up_positions: &[usize]) -> Self {
        let mut allowed = vec![Step::Horizontal.bit() | Step::Down.bit(); length];
        let mut valid = true;
        for &p in up_positions {
            if p == 0 || p > length {
                valid = false;
            } else {
                allowed[p - 1] = Step::Up.bit();
            }
        }
        let mut e = Self::new(allowed, true);
        e.done = !valid;
        e
    }

    /// Every Motzkin path of `length`.
    pub fn motzkin(length: usize) -> Self {
        Self::new(vec![7; length], true)
    }

    /// Every Dyck path with `half_length` up steps.
    pub fn dyck(half_length: usize) -> Self {
        Self::new(
            vec![Step::Up.bit() | Step::Down.bit(); 2 * half_length],
            true,
        )
    }

    /// Every `±1` path of `length` from zero that stays nonnegative, ending anywhere.
    pub fn meanders(length: usize) -> Self {
        Self::new(vec![Step::Up.bit() | Step::Down.bit(); length], false)
    }

    fn feasible(&self, pos: usize, height_after: i64) -> bool {
        if height_after < 0 {
            return false;
        }
        if !self.closed {
            return true;
        }
        height_after + self.forced_ups_after[pos + 1] as i64 <= self.downs_after[pos + 1] as i64
    }

    fn choice_after(&self, pos: usize, after: Option<Step>) -> Option<Step> {
        Step::ALL
            .into_iter()
            .filter(|&s| after.map_or(true, |a| s > a))
            .find(|&s| {
                self.allowed[pos] & s.bit() != 0 && self.feasible(pos, self.height + s.delta())
            })
    }

    fn push(&mut self, s: Step) {
        self.height += s.delta();
        self.steps.push(s);
    }

    fn backtrack(&mut self) -> bool {
        while let Some(last) = self.steps.pop() {
            self.height -= last.delta();
            if let Some(s) = self.choice_after(self.steps.len(), Some(last)) {
                self.push(s);
                return true;
            }
        }
        false
    }

    fn fill(&mut self) -> bool {
        while self.steps.len() < self.allowed.len() {
            match self.choice_after(self.steps.len(), None) {
                Some(s) => self.push(s),
                None => {
                    if !self.backtrack() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl Iterator for PathEnumerator {
    type Item = LatticePath;

    fn next(&mut self) -> Option<LatticePath> {
        if self.done {
            return None;
        }
        let ok = if self.started {
            self.backtrack() && self.fill()
        } else {
            self.started = true;
            self.fill()
        };
        if ok {
            Some(LatticePath::new(self.steps.clone()))
        } else {
            self.done = true;
            None
        }
    }
}

/// Motzkin paths of `length` with up steps exactly at the given 1-based
/// positions, in lexicographic order.
pub fn enumerate_motzkin(length: usize, forced_up_positions: &[usize]) -> PathEnumerator {
    PathEnumerator::motzkin_with_ups(length, forced_up_positions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn path(s: &str) -> LatticePath {
        s.parse().unwrap()
    }

    fn words(len: usize) -> impl Iterator<Item = LatticePath> {
        (0..3usize.pow(len as u32)).map(move |mut code| {
            let mut steps = vec![Step::Up; len];
            for i in (0..len).rev() {
                steps[i] = Step::ALL[code % 3];
                code /= 3;
            }
            LatticePath::new(steps)
        })
    }

    #[test]
    fn weights() {
        assert_eq!(LatticePath::empty().motzkin_weight().unwrap(), 1);
        assert_eq!(path("H").motzkin_weight().unwrap(), 2);
        assert_eq!(path("UHD").motzkin_weight().unwrap(), 8);
        assert_eq!(path("UU").motzkin_weight().unwrap(), 1);
        assert_eq!(
            path("HD").motzkin_weight(),
            Err(Error::BelowAxis { step: 2 })
        );
    }

    #[test]
    fn compression() {
        assert!(path("HHH").dyck_compression().is_empty());
        assert_eq!(path("UHD").dyck_compression(), path("UD"));
        assert_eq!(path("UHDHUD").dyck_compression(), path("UDUD"));
    }

    #[test]
    fn classification() {
        assert!(path("UHD").is_motzkin());
        assert!(!path("UHD").is_dyck());
        assert!(path("UUDD").is_dyck());
        assert!(path("UUD").is_dyck_prefix());
        assert!(!path("DU").is_motzkin_prefix());
        assert!(LatticePath::empty().is_dyck());
    }

    #[test]
    fn compatibility_examples() {
        assert!(is_compatible(&LatticePath::empty(), &path("UD"), 1).unwrap());
        assert!(!is_compatible(&path("UD"), &path("UDUDUD"), 3).unwrap());
        assert!(is_compatible(&path("HH"), &path("UDUDUD"), 3).unwrap());
        assert!(is_compatible(&path("UD"), &path("UUUDDD"), 3).unwrap());
        assert!(is_compatible(&path("H"), &path("UDUD"), 3).is_err());
        assert!(is_compatible(&path("HH"), &path("UDUD"), 3).is_err());
    }

    #[test]
    fn forced_enumeration_examples() {
        let got: Vec<String> = enumerate_motzkin(2, &[1]).map(|p| p.to_string()).collect();
        assert_eq!(got, ["UD"]);
        let got: Vec<String> = enumerate_motzkin(2, &[]).map(|p| p.to_string()).collect();
        assert_eq!(got, ["HH"]);
        let got: Vec<String> = enumerate_motzkin(4, &[1, 3])
            .map(|p| p.to_string())
            .collect();
        assert_eq!(got, ["UDUD"]);
        assert_eq!(enumerate_motzkin(3, &[4]).count(), 0);
        assert_eq!(enumerate_motzkin(0, &[]).count(), 1);
    }

    #[test]
    fn forced_enumeration_matches_word_filter() {
        for len in 0..=7 {
            for mask in 0u32..(1 << len) {
                let ups: Vec<usize> = (0..len)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| i + 1)
                    .collect();
                let expected: Vec<LatticePath> = words(len)
                    .filter(|p| p.is_motzkin())
                    .filter(|p| {
                        p.steps()
                            .iter()
                            .enumerate()
                            .all(|(i, s)| (*s == Step::Up) == ups.contains(&(i + 1)))
                    })
                    .collect();
                let got: Vec<LatticePath> = enumerate_motzkin(len, &ups).collect();
                assert_eq!(got, expected, "len {len} ups {ups:?}");
            }
        }
    }

    #[test]
    fn class_enumerators_match_word_filter() {
        for len in 0..=8 {
            let motzkin: Vec<_> = words(len).filter(|p| p.is_motzkin()).collect();
            assert_eq!(PathEnumerator::motzkin(len).collect::<Vec<_>>(), motzkin);
            let meanders: Vec<_> = words(len).filter(|p| p.is_dyck_prefix()).collect();
            assert_eq!(PathEnumerator::meanders(len).collect::<Vec<_>>(), meanders);
        }
        let motzkin_numbers = [1, 1, 2, 4, 9, 21, 51, 127, 323];
        for (len, m) in motzkin_numbers.iter().enumerate() {
            assert_eq!(PathEnumerator::motzkin(len).count(), *m);
        }
        let catalan = [1, 1, 2, 5, 14, 42, 132];
        for (k, c) in catalan.iter().enumerate() {
            let all: Vec<_> = PathEnumerator::dyck(k).collect();
            assert_eq!(all.len(), *c);
            assert!(all.windows(2).all(|w| w[0] < w[1]));
            assert!(all.iter().all(|d| d.is_dyck() && d.len() == 2 * k));
        }
    }

    fn arb_motzkin() -> impl Strategy<Value = LatticePath> {
        proptest::collection::vec(0usize..3, 0..24).prop_map(|raw| {
            let mut h = 0;
            let mut steps: Vec<Step> = raw
                .into_iter()
                .map(|i| match Step::ALL[i] {
                    Step::Down if h == 0 => Step::Horizontal,
                    s => {
                        h += s.delta();
                        s
                    }
                })
                .collect();
            steps.extend(std::iter::repeat(Step::Down).take(h as usize));
            LatticePath::new(steps)
        })
    }

    proptest! {
        #[test]
        fn weight_lower_bound(m in arb_motzkin()) {
            // Every non-up factor is at least 2.
            let w = m.motzkin_weight().unwrap();
            let non_up = m.len() - m.count(Step::Up);
            prop_assert!(w >= ExactCount::pow2(non_up));
        }

        #[test]
        fn compression_keeps_ups(m in arb_motzkin()) {
            prop_assert!(m.is_motzkin());
            let d = m.dyck_compression();
            prop_assert!(d.is_dyck());
            prop_assert_eq!(d.count(Step::Up), m.count(Step::Up));
        }
    }
}
