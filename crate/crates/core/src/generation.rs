//! Building permutations from Motzkin paths and exhaustive generation of
//! `𝔖ₙ(P)`.
//!
//! Values `n, n−1, …, 2` are inserted into a pool of segments that starts
//! as the single segment `n+1`. An up step opens a new segment, a
//! horizontal step attaches the value to one end of a segment, and a down
//! step glues two segments around it. Segments are kept in creation order,
//! and a glued segment is appended at the end of the pool. When one
//! segment is left, `1` closes the cycle at its right end.

use crate::counting::{is_admissible, maximal_dyck_type};
use crate::error::{Error, Result};
use crate::lattice::{is_compatible, LatticePath, Step};
use crate::permutation::{all_permutations, Permutation};
use crate::problem::PinnacleProblem;

/// Largest `k` accepted by [`list_admissible_orderings`].
pub const LIST_ORDERINGS_MAX_K: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Left,
    Right,
}

/// The construction choice made at one step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Choice {
    /// Up step: the value starts its own segment.
    Open,
    /// Horizontal step: the value joins one end of a segment.
    Attach { segment: usize, side: Side },
    /// Down step: builds `left · value · right` from two distinct segments.
    Join { left: usize, right: usize },
}

impl Choice {
    /// Number of choices for `step` taken from height `height`.
    fn radix(step: Step, height: usize) -> usize {
        match step {
            Step::Up => 1,
            Step::Horizontal => 2 * (height + 1),
            Step::Down => height * (height + 1),
        }
    }

    /// The `index`-th choice in lexicographic order.
    fn from_index(step: Step, height: usize, index: usize) -> Choice {
        match step {
            Step::Up => Choice::Open,
            Step::Horizontal => Choice::Attach {
                segment: index / 2,
                side: if index % 2 == 0 {
                    Side::Left
                } else {
                    Side::Right
                },
            },
            Step::Down => {
                let left = index / height;
                let r = index % height;
                Choice::Join {
                    left,
                    right: if r < left { r } else { r + 1 },
                }
            }
        }
    }
}

/// One [`Choice`] per step of a Motzkin path.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChoiceSequence {
    choices: Vec<Choice>,
}

impl ChoiceSequence {
    pub fn new(choices: Vec<Choice>) -> Self {
        Self { choices }
    }

    pub fn choices(&self) -> &[Choice] {
        &self.choices
    }

    /// Checks that every choice fits its step and the segment count there.
    pub fn validate(&self, m: &LatticePath) -> Result<()> {
        if self.choices.len() != m.len() {
            return Err(Error::SizeMismatch {
                what: "choice sequence length",
                expected: m.len(),
                found: self.choices.len(),
            });
        }
        let heights = m.heights().ok_or(Error::WrongPathClass {
            expected: "Motzkin",
        })?;
        for (i, (&step, choice)) in m.steps().iter().zip(&self.choices).enumerate() {
            let segments = heights[i] + 1;
            let bad = |reason: String| {
                Err(Error::InvalidChoice {
                    step: i + 1,
                    reason,
                })
            };
            match (step, *choice) {
                (Step::Up, Choice::Open) => {}
                (Step::Horizontal, Choice::Attach { segment, .. }) => {
                    if segment >= segments {
                        return bad(format!("segment {segment} of {segments}"));
                    }
                }
                (Step::Down, Choice::Join { left, right }) => {
                    if left >= segments || right >= segments || left == right {
                        return bad(format!("pair ({left}, {right}) of {segments}"));
                    }
                }
                (s, c) => return bad(format!("{c:?} does not fit step {}", s.symbol())),
            }
        }
        Ok(())
    }

    /// Every valid choice sequence for `m`, in lexicographic order.
    pub fn all(m: &LatticePath) -> Result<ChoiceSequences> {
        if !m.is_motzkin() {
            return Err(Error::WrongPathClass {
                expected: "Motzkin",
            });
        }
        let heights = m.heights().unwrap();
        let radices = m
            .steps()
            .iter()
            .zip(&heights)
            .map(|(&s, &h)| Choice::radix(s, h))
            .collect();
        Ok(ChoiceSequences {
            steps: m.steps().to_vec(),
            heights,
            odometer: Odometer::new(radices),
        })
    }
}

/// Mixed-radix counter, most significant digit first.
#[derive(Clone, Debug)]
struct Odometer {
    radices: Vec<usize>,
    digits: Vec<usize>,
    exhausted: bool,
}

impl Odometer {
    fn new(radices: Vec<usize>) -> Self {
        let exhausted = radices.contains(&0);
        Self {
            digits: vec![0; radices.len()],
            radices,
            exhausted,
        }
    }

    fn advance(&mut self) {
        for i in (0..self.digits.len()).rev() {
            self.digits[i] += 1;
            if self.digits[i] < self.radices[i] {
                return;
            }
            self.digits[i] = 0;
        }
        self.exhausted = true;
    }
}

/// Iterator returned by [`ChoiceSequence::all`].
#[derive(Clone, Debug)]
pub struct ChoiceSequences {
    steps: Vec<Step>,
    heights: Vec<usize>,
    odometer: Odometer,
}

impl Iterator for ChoiceSequences {
    type Item = ChoiceSequence;

    fn next(&mut self) -> Option<ChoiceSequence> {
        if self.odometer.exhausted {
            return None;
        }
        let choices = self
            .steps
            .iter()
            .zip(&self.heights)
            .zip(&self.odometer.digits)
            .map(|((&s, &h), &d)| Choice::from_index(s, h, d))
            .collect();
        self.odometer.advance();
        Some(ChoiceSequence { choices })
    }
}

/// Segment pool over values `1..=n+1`, stored as singly linked runs.
/// A `next` entry of `0` marks the tail of a segment.
#[derive(Clone, Debug)]
struct SegmentPool {
    n: usize,
    next: Vec<usize>,
    segments: Vec<(usize, usize)>,
}

impl SegmentPool {
    fn new(n: usize) -> Self {
        Self {
            n,
            next: vec![0; n + 2],
            segments: vec![(n + 1, n + 1)],
        }
    }

    fn reset(&mut self) {
        self.next[self.n + 1] = 0;
        self.segments.clear();
        self.segments.push((self.n + 1, self.n + 1));
    }

    fn apply(&mut self, value: usize, choice: Choice) {
        match choice {
            Choice::Open => {
                self.next[value] = 0;
                self.segments.push((value, value));
            }
            Choice::Attach { segment, side } => {
                let (head, tail) = &mut self.segments[segment];
                match side {
                    Side::Left => {
                        self.next[value] = *head;
                        *head = value;
                    }
                    Side::Right => {
                        self.next[*tail] = value;
                        self.next[value] = 0;
                        *tail = value;
                    }
                }
            }
            Choice::Join { left, right } => {
                let (lh, lt) = self.segments[left];
                let (rh, rt) = self.segments[right];
                self.next[lt] = value;
                self.next[value] = rh;
                self.segments.remove(left.max(right));
                self.segments.remove(left.min(right));
                self.segments.push((lh, rt));
            }
        }
    }

    /// Closes the last segment with `1`, rotates `n + 1` to the end and
    /// drops it: the word is everything after `n + 1`, then `1`, then
    /// everything before `n + 1`.
    fn close(&self) -> Permutation {
        debug_assert_eq!(self.segments.len(), 1);
        let top = self.n + 1;
        let (head, _) = self.segments[0];
        let mut word = Vec::with_capacity(self.n);
        let mut v = self.next[top];
        while v != 0 {
            word.push(v);
            v = self.next[v];
        }
        word.push(1);
        v = head;
        while v != top {
            word.push(v);
            v = self.next[v];
        }
        Permutation::from_vec_unchecked(word)
    }

    fn build(&mut self, choices: impl Iterator<Item = Choice>) -> Permutation {
        self.reset();
        for (i, c) in choices.enumerate() {
            self.apply(self.n - i, c);
        }
        self.close()
    }
}

/// The permutation of `[n]` obtained by running `choices` along the
/// Motzkin path `m` of length `n − 1`. Its cyclic completion has Motzkin
/// type `m`, and distinct choice sequences give distinct permutations.
pub fn construct_from_choices(
    m: &LatticePath,
    choices: &ChoiceSequence,
    n: usize,
) -> Result<Permutation> {
    if n == 0 {
        return Err(Error::EmptyAmbient);
    }
    if !m.is_motzkin() {
        return Err(Error::WrongPathClass {
            expected: "Motzkin",
        });
    }
    if m.len() != n - 1 {
        return Err(Error::SizeMismatch {
            what: "Motzkin path length",
            expected: n - 1,
            found: m.len(),
        });
    }
    choices.validate(m)?;
    Ok(SegmentPool::new(n).build(choices.choices.iter().copied()))
}

/// Down counts `d_1, …, d_k` of Dyck paths whose every run fits its gap
/// (`d_i ≤ g_i`), i.e. exactly the Dyck types with nonzero weight, in
/// lexicographic order of the path words.
#[derive(Clone, Debug)]
struct ViableDyck {
    k: usize,
    gaps: Vec<i64>,
    gap_suffix: Vec<i64>,
    downs: Vec<usize>,
    started: bool,
    done: bool,
}

impl ViableDyck {
    fn new(gaps: Vec<i64>) -> Self {
        let k = gaps.len() - 1;
        let mut gap_suffix = vec![0; k + 2];
        for i in (0..=k).rev() {
            gap_suffix[i] = gap_suffix[i + 1] + gaps[i].max(0);
        }
        let done = gaps.iter().any(|&g| g < 0);
        Self {
            k,
            gaps,
            gap_suffix,
            downs: Vec::with_capacity(k),
            started: false,
            done,
        }
    }

    /// Height right after the up step that opens run `downs.len() + 1`.
    fn height_after_next_up(&self) -> usize {
        self.downs.len() + 1 - self.downs.iter().sum::<usize>()
    }

    /// Smallest admissible down count `≥ from` for the next run.
    fn choose(&self, from: usize) -> Option<usize> {
        let i = self.downs.len() + 1;
        let height = self.height_after_next_up();
        let gap = self.gaps[i] as usize;
        if i == self.k {
            return (from <= height && height <= gap).then_some(height);
        }
        let max = height.min(gap);
        (from..=max).find(|&d| {
            let left = (height - d + self.k - i) as i64;
            left <= self.gap_suffix[i + 1]
        })
    }

    fn backtrack(&mut self) -> bool {
        while let Some(last) = self.downs.pop() {
            if let Some(d) = self.choose(last + 1) {
                self.downs.push(d);
                return true;
            }
        }
        false
    }

    fn fill(&mut self) -> bool {
        while self.downs.len() < self.k {
            match self.choose(0) {
                Some(d) => self.downs.push(d),
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

impl Iterator for ViableDyck {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
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
            Some(self.downs.clone())
        } else {
            self.done = true;
            None
        }
    }
}

/// Advances a sorted `d`-subset of `0..g` to its lexicographic successor.
fn next_subset(subset: &mut [usize], g: usize) -> bool {
    let d = subset.len();
    let Some(pos) = (0..d).rev().find(|&t| subset[t] < g - d + t) else {
        return false;
    };
    subset[pos] += 1;
    for t in pos + 1..d {
        subset[t] = subset[t - 1] + 1;
    }
    true
}

/// Lazy stream over `𝔖ₙ(P)`, returned by [`generate_all`].
pub struct PinnacleGenerator {
    gaps: Vec<i64>,
    dyck: ViableDyck,
    // Positions of the down steps inside each run, for the current Dyck type.
    placements: Vec<Vec<usize>>,
    steps: Vec<Step>,
    heights: Vec<usize>,
    odometer: Option<Odometer>,
    pool: SegmentPool,
}

impl PinnacleGenerator {
    fn new(prob: &PinnacleProblem) -> Self {
        let gaps = prob.gap_sequence();
        Self {
            dyck: ViableDyck::new(gaps.clone()),
            gaps,
            placements: Vec::new(),
            steps: Vec::with_capacity(prob.n()),
            heights: Vec::with_capacity(prob.n()),
            odometer: None,
            pool: SegmentPool::new(prob.n()),
        }
    }

    fn rebuild_path(&mut self) {
        self.steps.clear();
        for (i, run) in self.placements.iter().enumerate() {
            if i > 0 {
                self.steps.push(Step::Up);
            }
            let start = self.steps.len();
            self.steps
                .extend(std::iter::repeat(Step::Horizontal).take(self.gaps[i] as usize));
            for &p in run {
                self.steps[start + p] = Step::Down;
            }
        }
        self.heights.clear();
        let mut h = 0usize;
        for &s in &self.steps {
            self.heights.push(h);
            match s {
                Step::Up => h += 1,
                Step::Horizontal => {}
                Step::Down => h -= 1,
            }
        }
        let radices = self
            .steps
            .iter()
            .zip(&self.heights)
            .map(|(&s, &h)| Choice::radix(s, h))
            .collect();
        self.odometer = Some(Odometer::new(radices));
    }

    fn advance_placements(&mut self) -> bool {
        for i in (0..self.placements.len()).rev() {
            let g = self.gaps[i] as usize;
            if next_subset(&mut self.placements[i], g) {
                return true;
            }
            let d = self.placements[i].len();
            self.placements[i] = (0..d).collect();
        }
        false
    }
}

impl Iterator for PinnacleGenerator {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        loop {
            if let Some(odo) = &mut self.odometer {
                if !odo.exhausted {
                    let perm = self.pool.build(
                        self.steps
                            .iter()
                            .zip(&self.heights)
                            .zip(&odo.digits)
                            .map(|((&s, &h), &d)| Choice::from_index(s, h, d)),
                    );
                    odo.advance();
                    return Some(perm);
                }
                if self.advance_placements() {
                    self.rebuild_path();
                    continue;
                }
            }
            let downs = self.dyck.next()?;
            self.placements = std::iter::once(Vec::new())
                .chain(downs.iter().map(|&d| (0..d).collect()))
                .collect();
            self.rebuild_path();
        }
    }
}

/// Every permutation of `[n]` with pinnacle set `P`, each exactly once.
///
/// Order: viable Dyck types lexicographically, then the positions of the
/// down steps inside each gap (lexicographic subsets, first gap most
/// significant), then choice sequences lexicographically.
pub fn generate_all(prob: &PinnacleProblem) -> PinnacleGenerator {
    PinnacleGenerator::new(prob)
}

/// Admissible orderings of `P` in lexicographic order.
pub fn list_admissible_orderings(
    prob: &PinnacleProblem,
) -> Result<impl Iterator<Item = Permutation>> {
    let k = prob.k();
    let profile = maximal_dyck_type(prob)?;
    debug_assert!(is_admissible(prob));
    if k > LIST_ORDERINGS_MAX_K {
        return Err(Error::GuardExceeded {
            what: "k",
            value: k,
            limit: LIST_ORDERINGS_MAX_K,
        });
    }
    let ceiling = profile.dyck_path();
    Ok(all_permutations(k).filter(move |sigma| {
        let m = sigma.complement().cyclic_completion().motzkin_type();
        is_compatible(&m, &ceiling, k).expect("sizes match by construction")
    }))
}
