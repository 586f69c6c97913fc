//! Permutations in one-line notation and their cyclic completions.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lattice::{LatticePath, Step};

/// A permutation of `[n]` in one-line notation. The empty permutation is allowed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    word: Vec<usize>,
}

fn check_bijection(word: &[usize]) -> Result<()> {
    let n = word.len();
    let mut seen = vec![false; n + 1];
    for &v in word {
        if v == 0 || v > n {
            return Err(Error::InvalidPermutation(format!(
                "entry {v} outside [1, {n}]"
            )));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::InvalidPermutation(format!("entry {v} repeated")));
        }
    }
    Ok(())
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        check_bijection(&word)?;
        Ok(Self { word })
    }

    pub(crate) fn from_vec_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(check_bijection(&word).is_ok());
        Self { word }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            word: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.word
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.word
    }

    /// Values `π_i` with `π_{i-1} < π_i > π_{i+1}`, in decreasing order.
    pub fn pinnacle_set(&self) -> Vec<usize> {
        let mut pins: Vec<usize> = self
            .word
            .windows(3)
            .filter(|w| w[0] < w[1] && w[1] > w[2])
            .map(|w| w[1])
            .collect();
        pins.sort_unstable_by(|a, b| b.cmp(a));
        pins
    }

    /// Appends `n+1`; the result is already in canonical rotation.
    pub fn cyclic_completion(&self) -> CyclicPermutation {
        let mut word = Vec::with_capacity(self.word.len() + 1);
        word.extend_from_slice(&self.word);
        word.push(self.word.len() + 1);
        CyclicPermutation { word }
    }

    /// `i ↦ n + 1 − π(i)`.
    pub fn complement(&self) -> Permutation {
        let n = self.word.len();
        Self {
            word: self.word.iter().map(|&v| n + 1 - v).collect(),
        }
    }

    /// The order in which the pinnacles appear, indexed by rank in the
    /// decreasing pinnacle list: entry `t` is `r` when the `t`-th pinnacle
    /// from the left is the `r`-th largest.
    pub fn pinnacle_ordering(&self) -> Permutation {
        let pins = self.pinnacle_set();
        let word = self
            .word
            .windows(3)
            .filter(|w| w[0] < w[1] && w[1] > w[2])
            .map(|w| pins.iter().position(|&p| p == w[1]).unwrap() + 1)
            .collect();
        Self { word }
    }

    /// Advances to the lexicographic successor in place; returns `false`
    /// (leaving the word reset to the identity) after the last permutation.
    pub fn next_lex(&mut self) -> bool {
        let w = &mut self.word;
        let n = w.len();
        if n < 2 {
            return false;
        }
        let mut i = n - 1;
        while i > 0 && w[i - 1] > w[i] {
            i -= 1;
        }
        if i == 0 {
            w.reverse();
            return false;
        }
        let mut j = n - 1;
        while w[j] < w[i - 1] {
            j -= 1;
        }
        w.swap(i - 1, j);
        w[i..].reverse();
        true
    }
}

/// Iterates over all permutations of `[n]` in lexicographic order.
pub fn all_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    let mut current = Some(Permutation::identity(n));
    std::iter::from_fn(move || {
        let out = current.take()?;
        let mut next = out.clone();
        if next.next_lex() {
            current = Some(next);
        }
        Some(out)
    })
}

impl fmt::Display for Permutation {
    /// Digits are concatenated when every entry is a single digit, and
    /// space-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.word.len() < 10;
        for (i, v) in self.word.iter().enumerate() {
            if i > 0 && !compact {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `"231"`, `"2 3 1"` or `"2,3,1"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let word: Vec<usize> = if s.contains(|c: char| c == ',' || c.is_whitespace()) {
            s.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse()
                        .map_err(|_| Error::InvalidPermutation(format!("bad entry {t:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::InvalidPermutation(format!("bad entry {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        Self::new(word)
    }
}

/// A cyclic permutation of `[m]`, stored rotated so that `m` comes last.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicPermutation {
    word: Vec<usize>,
}

impl CyclicPermutation {
    /// Builds the cyclic class of `word`, rotating it into canonical form.
    pub fn new(mut word: Vec<usize>) -> Result<Self> {
        check_bijection(&word)?;
        if word.is_empty() {
            return Err(Error::InvalidPermutation(
                "cyclic permutation must be nonempty".into(),
            ));
        }
        let m = word.len();
        let at = word.iter().position(|&v| v == m).unwrap();
        word.rotate_left(at + 1);
        Ok(Self { word })
    }

    /// Number of elements, `n + 1` for the completion of `π ∈ 𝔖ₙ`.
    pub fn size(&self) -> usize {
        self.word.len()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.word
    }

    /// Drops the trailing maximum, inverting [`Permutation::cyclic_completion`].
    pub fn truncate(&self) -> Permutation {
        Permutation::from_vec_unchecked(self.word[..self.word.len() - 1].to_vec())
    }

    /// Values larger than both cyclic neighbours, in decreasing order.
    pub fn cyclic_pinnacles(&self) -> Vec<usize> {
        let m = self.word.len();
        if m < 2 {
            return Vec::new();
        }
        let mut pins: Vec<usize> = (0..m)
            .filter(|&i| {
                let v = self.word[i];
                v > self.word[(i + m - 1) % m] && v > self.word[(i + 1) % m]
            })
            .map(|i| self.word[i])
            .collect();
        pins.sort_unstable_by(|a, b| b.cmp(a));
        pins
    }

    /// Number of maximal cyclic runs of entries `≥ level`.
    pub fn segment_count(&self, level: usize) -> Result<usize> {
        let m = self.word.len();
        if level < 2 || level > m {
            return Err(Error::LevelOutOfRange { level, max: m });
        }
        Ok((0..m)
            .filter(|&i| self.word[i] >= level && self.word[(i + m - 1) % m] < level)
            .count())
    }

    /// The Motzkin type: the path of length `m − 2` whose `i`-th step is
    /// `s_{m−i} − s_{m+1−i}`.
    ///
    /// Computed by inserting values `m−1, …, 2` and counting how many
    /// cyclic neighbours are already present, which gives the same
    /// increments as the segment counts.
    pub fn motzkin_type(&self) -> LatticePath {
        let m = self.word.len();
        if m <= 2 {
            return LatticePath::empty();
        }
        let mut pos = vec![0; m + 1];
        for (i, &v) in self.word.iter().enumerate() {
            pos[v] = i;
        }
        let steps = (2..m)
            .rev()
            .map(|v| {
                let i = pos[v];
                let left = self.word[(i + m - 1) % m] > v;
                let right = self.word[(i + 1) % m] > v;
                match (left, right) {
                    (false, false) => Step::Up,
                    (true, true) => Step::Down,
                    _ => Step::Horizontal,
                }
            })
            .collect();
        LatticePath::new(steps)
    }
}

impl fmt::Display for CyclicPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.word.len() < 10;
        for (i, v) in self.word.iter().enumerate() {
            if i > 0 && !compact {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn cyc(s: &str) -> CyclicPermutation {
        CyclicPermutation::new(perm(s).into_vec()).unwrap()
    }

    #[test]
    fn pinnacle_sets() {
        assert_eq!(perm("46352817").pinnacle_set(), vec![8, 6, 5]);
        assert!(perm("123").pinnacle_set().is_empty());
        assert_eq!(perm("132").pinnacle_set(), vec![3]);
        assert!(perm("1").pinnacle_set().is_empty());
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![1, 3]).is_err());
        assert!("12a".parse::<Permutation>().is_err());
    }

    #[test]
    fn parses_separated_forms() {
        assert_eq!(perm("2 3 1"), perm("231"));
        assert_eq!(perm("2,3,1"), perm("231"));
        let long = Permutation::identity(11);
        assert_eq!(long.to_string(), "1 2 3 4 5 6 7 8 9 10 11");
        assert_eq!(perm(&long.to_string()), long);
    }

    #[test]
    fn cyclic_completion_examples() {
        assert_eq!(
            perm("2413").cyclic_completion().as_slice(),
            &[2, 4, 1, 3, 5]
        );
        assert_eq!(perm("1").cyclic_completion().as_slice(), &[1, 2]);
        let c = perm("321").cyclic_completion();
        assert_eq!(c.as_slice(), &[3, 2, 1, 4]);
        assert_eq!(c.cyclic_pinnacles(), vec![4]);
    }

    #[test]
    fn canonical_rotation() {
        let a = CyclicPermutation::new(vec![4, 2, 1, 3, 5]).unwrap();
        let b = CyclicPermutation::new(vec![3, 5, 4, 2, 1]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.as_slice(), &[4, 2, 1, 3, 5]);
    }

    #[test]
    fn segment_counts() {
        let c = cyc("435281679");
        assert_eq!(c.segment_count(4).unwrap(), 3);
        assert_eq!(c.segment_count(9).unwrap(), 1);
        assert_eq!(c.segment_count(2).unwrap(), 1);
        assert_eq!(cyc("24135").segment_count(3).unwrap(), 2);
        assert!(c.segment_count(1).is_err());
        assert!(c.segment_count(10).is_err());
    }

    #[test]
    fn motzkin_type_examples() {
        assert!(cyc("12").motzkin_type().is_empty());
        assert_eq!(cyc("1324").motzkin_type().to_string(), "UD");
        assert_eq!(cyc("1234").motzkin_type().to_string(), "HH");
    }

    #[test]
    fn complement_examples() {
        assert_eq!(perm("231").complement(), perm("213"));
        assert_eq!(perm("1").complement(), perm("1"));
    }

    #[test]
    fn pinnacle_ordering_examples() {
        assert_eq!(perm("46352817").pinnacle_ordering(), perm("231"));
        assert_eq!(perm("132").pinnacle_ordering(), perm("1"));
        assert_eq!(perm("13254").pinnacle_ordering(), perm("21"));
        assert!(perm("1234").pinnacle_ordering().is_empty());
    }

    #[test]
    fn lexicographic_enumeration() {
        let all: Vec<String> = all_permutations(3).map(|p| p.to_string()).collect();
        assert_eq!(all, ["123", "132", "213", "231", "312", "321"]);
        assert_eq!(all_permutations(0).count(), 1);
        assert_eq!(all_permutations(6).count(), 720);
    }

    fn segment_oracle(c: &CyclicPermutation) -> LatticePath {
        let m = c.size();
        let heights: Vec<usize> = (2..=m).rev().map(|l| c.segment_count(l).unwrap()).collect();
        let steps = heights
            .windows(2)
            .take(m.saturating_sub(2))
            .map(|w| match w[1] as i64 - w[0] as i64 {
                1 => Step::Up,
                0 => Step::Horizontal,
                -1 => Step::Down,
                d => panic!("increment {d}"),
            })
            .collect();
        LatticePath::new(steps)
    }

    #[test]
    fn motzkin_type_matches_segment_counts_exhaustively() {
        for n in 1..=7 {
            for p in all_permutations(n) {
                let c = p.cyclic_completion();
                let m = c.motzkin_type();
                assert_eq!(m, segment_oracle(&c), "{p}");
                assert!(m.is_motzkin());
                assert_eq!(m.len(), n - 1);
                let ups: Vec<usize> = m
                    .steps()
                    .iter()
                    .enumerate()
                    .filter(|(_, s)| **s == Step::Up)
                    .map(|(i, _)| n - i)
                    .collect();
                let mut pins = c.cyclic_pinnacles();
                pins.retain(|&v| v <= n);
                assert_eq!(ups, pins, "{p}");
                let mut expect = p.pinnacle_set();
                expect.insert(0, n + 1);
                assert_eq!(c.cyclic_pinnacles(), expect);
                assert_eq!(m.dyck_compression().len(), 2 * p.pinnacle_set().len());
            }
        }
    }

    fn arb_perm(max: usize) -> impl Strategy<Value = Permutation> {
        (1..=max)
            .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|w| Permutation::new(w).unwrap())
    }

    proptest! {
        #[test]
        fn complement_is_involution(p in arb_perm(12)) {
            prop_assert_eq!(p.complement().complement(), p);
        }

        #[test]
        fn completion_round_trips(p in arb_perm(12)) {
            let c = p.cyclic_completion();
            prop_assert_eq!(c.truncate(), p.clone());
            prop_assert_eq!(CyclicPermutation::new(c.as_slice().to_vec()).unwrap(), c);
        }
    }
}
