use std::fmt;

use crate::error::{Error, Result};

/// An ambient size `n` together with a pinnacle list `p₁ > p₂ > … > p_k`
/// drawn from `[n]`.
///
/// The list is only checked for being a set inside `[n]`; it need not be
/// admissible.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PinnacleProblem {
    n: usize,
    pinnacles: Vec<usize>,
}

impl PinnacleProblem {
    /// Accepts the pinnacles in any order.
    pub fn new(n: usize, pinnacles: impl IntoIterator<Item = usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyAmbient);
        }
        let mut pins: Vec<usize> = pinnacles.into_iter().collect();
        pins.sort_unstable_by(|a, b| b.cmp(a));
        if let Some(w) = pins.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicatePinnacle { value: w[0] });
        }
        if let Some(&value) = pins.iter().find(|&&p| p == 0 || p > n) {
            return Err(Error::PinnacleOutOfRange { value, n });
        }
        Ok(Self { n, pinnacles: pins })
    }

    /// A problem with `n = p₁`, the smallest ambient size holding `pinnacles`.
    pub fn tight(pinnacles: impl IntoIterator<Item = usize>) -> Result<Self> {
        let pins: Vec<usize> = pinnacles.into_iter().collect();
        let n = pins.iter().copied().max().ok_or(Error::EmptyPinnacleSet)?;
        Self::new(n, pins)
    }

    /// `k` pinnacles spread evenly over `[n]`: `p_i = ⌊n(k+1−i)/(k+1)⌋`.
    ///
    /// Admissible whenever `n ≥ 2k + 3`.
    pub fn spread(n: usize, k: usize) -> Result<Self> {
        let pins = (1..=k).map(|i| n * (k + 1 - i) / (k + 1));
        Self::new(n, pins)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.pinnacles.len()
    }

    /// Pinnacles in decreasing order.
    pub fn pinnacles(&self) -> &[usize] {
        &self.pinnacles
    }

    /// `p_i` for `0 ≤ i ≤ k + 1`, with `p₀ = n + 1` and `p_{k+1} = 1`.
    pub fn boundary(&self, i: usize) -> usize {
        match i {
            0 => self.n + 1,
            i if i <= self.k() => self.pinnacles[i - 1],
            i if i == self.k() + 1 => 1,
            _ => panic!("boundary index {i} outside [0, {}]", self.k() + 1),
        }
    }

    pub fn contains(&self, value: usize) -> bool {
        self.pinnacles.contains(&value)
    }

    /// `g_i = p_i − p_{i+1} − 1` for `0 ≤ i ≤ k`. Nonnegative unless
    /// `1 ∈ P`, in which case the last gap is `−1`.
    pub fn gap_sequence(&self) -> Vec<i64> {
        (0..=self.k())
            .map(|i| self.boundary(i) as i64 - self.boundary(i + 1) as i64 - 1)
            .collect()
    }

    /// The same `n` with a different pinnacle list.
    pub fn with_pinnacles(&self, pinnacles: impl IntoIterator<Item = usize>) -> Result<Self> {
        Self::new(self.n, pinnacles)
    }

    /// Drops the value `1`, which can never be a pinnacle.
    pub(crate) fn without_one(&self) -> Self {
        Self {
            n: self.n,
            pinnacles: self.pinnacles.iter().copied().filter(|&p| p != 1).collect(),
        }
    }

    /// Every subset of the pinnacle list, as problems over the same `n`.
    pub fn subproblems(&self) -> impl Iterator<Item = PinnacleProblem> + '_ {
        let k = self.k();
        (0u64..1 << k).map(move |mask| Self {
            n: self.n,
            pinnacles: (0..k)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| self.pinnacles[i])
                .collect(),
        })
    }

    /// Every pinnacle list drawn from `[n]`.
    pub fn all_subsets(n: usize) -> impl Iterator<Item = PinnacleProblem> {
        assert!((1..64).contains(&n));
        (0u64..1 << n).map(move |mask| Self {
            n,
            pinnacles: (1..=n).rev().filter(|v| mask >> (v - 1) & 1 == 1).collect(),
        })
    }
}

impl fmt::Display for PinnacleProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}, P={{", self.n)?;
        for (i, p) in self.pinnacles.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}
