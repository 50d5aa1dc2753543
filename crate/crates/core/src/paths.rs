//! Explicit Dyck paths and the counting oracles built on them.
//!
//! Everything here is independent of the generating-function code: exhaustive
//! enumeration, a dynamic program over (height, previous step, occurrences),
//! and the two bijections that exchange peaks and valleys or strip the outer
//! arch of a path.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::gfcount::{stat_gf, StatKind};
use crate::{Error, PathErrorKind, Result};

/// Largest semilength [`enumerate`] accepts without an explicit override.
pub const DEFAULT_ENUMERATION_GUARD: usize = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Up,
    Down,
}

impl Step {
    fn delta(self) -> isize {
        match self {
            Step::Up => 1,
            Step::Down => -1,
        }
    }

    fn flip(self) -> Step {
        match self {
            Step::Up => Step::Down,
            Step::Down => Step::Up,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn empty() -> Self {
        DyckPath { steps: Vec::new() }
    }

    pub fn from_steps(steps: Vec<Step>) -> Result<Self> {
        let mut height = 0isize;
        for (index, s) in steps.iter().enumerate() {
            height += s.delta();
            if height < 0 {
                return Err(Error::InvalidPath { index, kind: PathErrorKind::BelowAxis });
            }
        }
        if height != 0 {
            return Err(Error::InvalidPath { index: steps.len(), kind: PathErrorKind::Unbalanced });
        }
        Ok(DyckPath { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Height after each step; `heights()[i]` is the height of the lattice
    /// point between step `i` and step `i + 1`.
    pub fn heights(&self) -> Vec<usize> {
        let mut h = 0usize;
        self.steps
            .iter()
            .map(|s| {
                match s {
                    Step::Up => h += 1,
                    Step::Down => h -= 1,
                }
                h
            })
            .collect()
    }

    /// Interior points at height `k` that are peaks (`Peak`) or valleys
    /// (`Valley`), as indices into [`heights`](Self::heights).
    pub fn sites(&self, kind: StatKind, k: usize) -> Vec<usize> {
        let (before, after) = match kind {
            StatKind::Peak => (Step::Up, Step::Down),
            StatKind::Valley => (Step::Down, Step::Up),
        };
        let heights = self.heights();
        self.steps
            .windows(2)
            .enumerate()
            .filter(|(i, w)| w[0] == before && w[1] == after && heights[*i] == k)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn count_at(&self, kind: StatKind, k: usize) -> usize {
        self.sites(kind, k).len()
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::Up => "U",
                Step::Down => "D",
            })?;
        }
        Ok(())
    }
}

/// Parses `U`/`D` (either case) or `(`/`)`, ignoring whitespace. The two
/// alphabets cannot be mixed. Error indices are character positions in `text`.
pub fn parse_path(text: &str) -> Result<DyckPath> {
    let mut steps = Vec::new();
    let mut letters: Option<bool> = None;
    let mut height = 0isize;
    let mut len = 0;
    for (index, ch) in text.chars().enumerate() {
        len = index + 1;
        if ch.is_whitespace() {
            continue;
        }
        let (step, is_letter) = match ch {
            'U' | 'u' => (Step::Up, true),
            'D' | 'd' => (Step::Down, true),
            '(' => (Step::Up, false),
            ')' => (Step::Down, false),
            _ => return Err(Error::InvalidPath { index, kind: PathErrorKind::Alien(ch) }),
        };
        if *letters.get_or_insert(is_letter) != is_letter {
            return Err(Error::InvalidPath { index, kind: PathErrorKind::Alien(ch) });
        }
        height += step.delta();
        if height < 0 {
            return Err(Error::InvalidPath { index, kind: PathErrorKind::BelowAxis });
        }
        steps.push(step);
    }
    if height != 0 {
        return Err(Error::InvalidPath { index: len, kind: PathErrorKind::Unbalanced });
    }
    Ok(DyckPath { steps })
}

/// Peak and valley counts of one path, keyed by height.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct StatProfile {
    pub peaks_by_height: BTreeMap<usize, usize>,
    pub valleys_by_height: BTreeMap<usize, usize>,
    pub max_height: usize,
}

impl StatProfile {
    pub fn at(&self, kind: StatKind, k: usize) -> usize {
        let map = match kind {
            StatKind::Peak => &self.peaks_by_height,
            StatKind::Valley => &self.valleys_by_height,
        };
        map.get(&k).copied().unwrap_or(0)
    }
}

impl fmt::Display for StatProfile {
    /// `peaks {2: 2} valleys {1: 1} max 2`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn map(f: &mut fmt::Formatter<'_>, m: &BTreeMap<usize, usize>) -> fmt::Result {
            f.write_str("{")?;
            for (i, (h, c)) in m.iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{h}: {c}")?;
            }
            f.write_str("}")
        }
        f.write_str("peaks ")?;
        map(f, &self.peaks_by_height)?;
        f.write_str(" valleys ")?;
        map(f, &self.valleys_by_height)?;
        write!(f, " max {}", self.max_height)
    }
}

pub fn statistics(p: &DyckPath) -> StatProfile {
    let heights = p.heights();
    let mut profile = StatProfile {
        max_height: heights.iter().copied().max().unwrap_or(0),
        ..StatProfile::default()
    };
    for (i, w) in p.steps.windows(2).enumerate() {
        let map = match (w[0], w[1]) {
            (Step::Up, Step::Down) => &mut profile.peaks_by_height,
            (Step::Down, Step::Up) => &mut profile.valleys_by_height,
            _ => continue,
        };
        *map.entry(heights[i]).or_insert(0) += 1;
    }
    profile
}

/// All Dyck paths of one semilength in lexicographic order (`U < D`).
#[derive(Clone, Debug)]
pub struct DyckPaths {
    n: usize,
    current: Option<Vec<Step>>,
}

impl DyckPaths {
    fn new(n: usize) -> Self {
        let mut first = vec![Step::Up; n];
        first.extend(core::iter::repeat_n(Step::Down, n));
        DyckPaths { n, current: Some(first) }
    }

    /// Successor in lexicographic order: the last `U` that can become `D`
    /// is flipped and everything after it is reset to `U^a D^b`.
    fn advance(steps: &mut [Step], n: usize) -> bool {
        let mut ups = 0usize;
        let mut downs = 0usize;
        let prefix: Vec<(usize, usize)> = steps
            .iter()
            .map(|s| {
                let before = (ups, downs);
                match s {
                    Step::Up => ups += 1,
                    Step::Down => downs += 1,
                }
                before
            })
            .collect();
        for i in (0..steps.len()).rev() {
            let (u, d) = prefix[i];
            if steps[i] == Step::Up && u > d {
                steps[i] = Step::Down;
                let rest_ups = n - u;
                for (j, slot) in steps[i + 1..].iter_mut().enumerate() {
                    *slot = if j < rest_ups { Step::Up } else { Step::Down };
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for DyckPaths {
    type Item = DyckPath;

    fn next(&mut self) -> Option<DyckPath> {
        let steps = self.current.as_mut()?;
        let out = DyckPath { steps: steps.clone() };
        if !Self::advance(steps, self.n) {
            self.current = None;
        }
        Some(out)
    }
}

/// Every path of semilength `n`, refusing `n` above [`DEFAULT_ENUMERATION_GUARD`].
pub fn enumerate(n: usize) -> Result<DyckPaths> {
    enumerate_with_guard(n, DEFAULT_ENUMERATION_GUARD)
}

pub fn enumerate_with_guard(n: usize, guard: usize) -> Result<DyckPaths> {
    if n > guard {
        return Err(Error::EnumerationGuard { n, guard });
    }
    Ok(DyckPaths::new(n))
}

/// Counts by occurrence number at height `k`; the last bucket collects every
/// path with `cap` or more occurrences.
fn dp_buckets(n: usize, k: usize, kind: StatKind, cap: usize) -> Vec<BigUint> {
    const UP: usize = 0;
    const DOWN: usize = 1;
    const START: usize = 2;
    let len = 2 * n;
    let top = n + 1;
    let buckets = cap + 1;
    let idx = |h: usize, last: usize, c: usize| (h * 3 + last) * buckets + c;
    let mut cur = vec![BigUint::zero(); top * 3 * buckets];
    cur[idx(0, START, 0)] = BigUint::one();
    for pos in 0..len {
        let mut next = vec![BigUint::zero(); top * 3 * buckets];
        let remaining = len - pos - 1;
        for h in 0..top {
            for last in 0..3 {
                for c in 0..buckets {
                    let ways = &cur[idx(h, last, c)];
                    if ways.is_zero() {
                        continue;
                    }
                    for step in [UP, DOWN] {
                        let nh = match step {
                            UP if h < n => h + 1,
                            DOWN if h > 0 => h - 1,
                            _ => continue,
                        };
                        if nh > remaining {
                            continue;
                        }
                        let hit = h == k
                            && match kind {
                                StatKind::Peak => last == UP && step == DOWN,
                                StatKind::Valley => last == DOWN && step == UP,
                            };
                        let nc = if hit { (c + 1).min(cap) } else { c };
                        let slot = idx(nh, step, nc);
                        next[slot] += ways;
                    }
                }
            }
        }
        cur = next;
    }
    (0..buckets)
        .map(|c| (0..3).map(|last| &cur[idx(0, last, c)]).sum())
        .collect()
}

/// Paths of semilength `n` with exactly `r` occurrences of `kind` at height `k`.
pub fn count_exact_dp(n: usize, k: usize, r: usize, kind: StatKind) -> BigUint {
    dp_buckets(n, k, kind, r + 1).swap_remove(r)
}

/// `result[r]` is the number of semilength-`n` paths with exactly `r`
/// occurrences, for `r = 0..=n`.
pub fn count_distribution_dp(n: usize, k: usize, kind: StatKind) -> Vec<BigUint> {
    let mut v = dp_buckets(n, k, kind, n + 1);
    v.truncate(n + 1);
    v
}

/// Paths of `n_steps` unit steps from height 0 to `end_height` inside `[0, k]`.
pub fn bounded_height_count(n_steps: usize, k: usize, end_height: usize) -> Result<BigUint> {
    if end_height > k {
        return Err(Error::EndHeightOutsideBand { end: end_height, band: k });
    }
    let mut cur = vec![BigUint::zero(); k + 1];
    cur[0] = BigUint::one();
    for _ in 0..n_steps {
        let mut next = vec![BigUint::zero(); k + 1];
        for h in 0..=k {
            if cur[h].is_zero() {
                continue;
            }
            if h < k {
                next[h + 1] += &cur[h];
            }
            if h > 0 {
                next[h - 1] += &cur[h];
            }
        }
        cur = next;
    }
    Ok(cur.swap_remove(end_height))
}

/// Positions rewritten by [`psi`]: peaks at height `k` and valleys at
/// height `k - 2`, classified on the original path.
pub fn exchange_sites(p: &DyckPath, k: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    if k < 2 {
        return Err(Error::HeightTooSmall { k, min: 2 });
    }
    Ok((p.sites(StatKind::Peak, k), p.sites(StatKind::Valley, k - 2)))
}

/// Lowers every peak at height `k` by two and raises every valley at height
/// `k - 2` by two, in one simultaneous pass. An involution for `k >= 2`.
pub fn psi(p: &DyckPath, k: usize) -> Result<DyckPath> {
    let (peaks, valleys) = exchange_sites(p, k)?;
    let mut steps = p.steps.clone();
    for i in peaks.into_iter().chain(valleys) {
        // A point's pattern uses steps i and i+1; distinct sites never share a
        // step because their heights differ by 2 while neighbours differ by 1.
        steps[i] = steps[i].flip();
        steps[i + 1] = steps[i + 1].flip();
    }
    Ok(DyckPath { steps })
}

/// Strips the outer arch of a path with no valley at height 0. The empty
/// path maps to `None`.
pub fn theta_forward(p: &DyckPath) -> Result<Option<DyckPath>> {
    if p.is_empty() {
        return Ok(None);
    }
    if p.count_at(StatKind::Valley, 0) > 0 {
        return Err(Error::ValleyAtZero);
    }
    Ok(Some(DyckPath { steps: p.steps[1..p.steps.len() - 1].to_vec() }))
}

/// Wraps a path in one outer arch, the inverse of [`theta_forward`].
pub fn theta_inverse(p: &DyckPath) -> DyckPath {
    let mut steps = Vec::with_capacity(p.steps.len() + 2);
    steps.push(Step::Up);
    steps.extend_from_slice(&p.steps);
    steps.push(Step::Down);
    DyckPath { steps }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountMethod {
    Enum,
    Dp,
    Gf,
}

/// Key order is `(n, k, r, kind)`.
pub type TableKey = (usize, usize, usize, StatKind);

/// Exact counts for every `n <= n_max`, `k <= k_max`, `r <= n` and both kinds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    pub n_max: usize,
    pub k_max: usize,
    entries: BTreeMap<TableKey, BigUint>,
}

impl CountTable {
    fn empty(n_max: usize, k_max: usize) -> Self {
        let mut entries = BTreeMap::new();
        for n in 0..=n_max {
            for k in 0..=k_max {
                for r in 0..=n {
                    for kind in StatKind::ALL {
                        entries.insert((n, k, r, kind), BigUint::zero());
                    }
                }
            }
        }
        CountTable { n_max, k_max, entries }
    }

    /// Zero for any `r > n` or key outside the table.
    pub fn get(&self, n: usize, k: usize, r: usize, kind: StatKind) -> BigUint {
        self.entries.get(&(n, k, r, kind)).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&TableKey, &BigUint)> {
        self.entries.iter()
    }

    pub fn total(&self, n: usize, k: usize, kind: StatKind) -> BigUint {
        (0..=n).map(|r| self.get(n, k, r, kind)).sum()
    }

    /// First key (in table order) where the two tables disagree.
    pub fn first_difference(&self, other: &CountTable) -> Option<(TableKey, BigUint, BigUint)> {
        self.entries
            .keys()
            .chain(other.entries.keys())
            .filter_map(|key| {
                let (a, b) = (self.get(key.0, key.1, key.2, key.3), other.get(key.0, key.1, key.2, key.3));
                (a != b).then_some((*key, a, b))
            })
            .min_by_key(|(key, _, _)| *key)
    }
}

pub fn build_table(n_max: usize, k_max: usize, method: CountMethod, guard: usize) -> Result<CountTable> {
    let mut table = CountTable::empty(n_max, k_max);
    match method {
        CountMethod::Enum => {
            if n_max > guard {
                return Err(Error::EnumerationGuard { n: n_max, guard });
            }
            for n in 0..=n_max {
                for p in enumerate_with_guard(n, guard)? {
                    let profile = statistics(&p);
                    for k in 0..=k_max {
                        for kind in StatKind::ALL {
                            let r = profile.at(kind, k);
                            *table.entries.get_mut(&(n, k, r, kind)).expect("r <= n") += 1u8;
                        }
                    }
                }
            }
        }
        CountMethod::Dp => {
            for n in 0..=n_max {
                for k in 0..=k_max {
                    for kind in StatKind::ALL {
                        for (r, c) in count_distribution_dp(n, k, kind).into_iter().enumerate() {
                            table.entries.insert((n, k, r, kind), c);
                        }
                    }
                }
            }
        }
        CountMethod::Gf => {
            for k in 0..=k_max {
                for kind in StatKind::ALL {
                    for r in 0..=n_max {
                        let gf = stat_gf(kind, k, r, n_max).as_integer_sequence()?;
                        for (n, c) in gf.into_iter().enumerate().skip(r) {
                            let c = c.to_biguint().expect("counts are nonnegative");
                            table.entries.insert((n, k, r, kind), c);
                        }
                    }
                }
            }
        }
    }
    Ok(table)
}
