//! Reduced words `(1, …, r)^{m-1} (1, …, last)` and the index alphabet `J`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("invalid word: rank {r}, cycles {m}, last letter {last} (need 1 <= m <= r, 1 <= last <= r)")]
    BadWord { r: u32, m: u32, last: u32 },
    #[error("position {k} out of range 1..={n}")]
    OutOfRange { k: usize, n: usize },
    #[error("letter {i} out of range 1..={r}")]
    BadLetter { i: u32, r: u32 },
    #[error("cannot parse index `{0}`")]
    BadIndex(String),
}

/// An element of `J = {1, …, r, r̄, …, 1̄}`, totally ordered as
/// `1 < 2 < … < r < r̄ < … < 2̄ < 1̄`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum JIndex {
    Plain(u32),
    Bar(u32),
}

impl JIndex {
    /// `|j| = |j̄| = j`.
    pub fn abs(self) -> u32 {
        match self {
            JIndex::Plain(j) | JIndex::Bar(j) => j,
        }
    }

    pub fn is_barred(self) -> bool {
        matches!(self, JIndex::Bar(_))
    }

    /// Zero-based rank in the total order for rank `r`.
    pub fn position(self, r: u32) -> usize {
        match self {
            JIndex::Plain(j) => (j - 1) as usize,
            JIndex::Bar(j) => (2 * r - j) as usize,
        }
    }

    pub fn from_position(p: usize, r: u32) -> JIndex {
        let p = p as u32;
        if p < r {
            JIndex::Plain(p + 1)
        } else {
            JIndex::Bar(2 * r - p)
        }
    }

    pub fn in_range(self, r: u32) -> bool {
        (1..=r).contains(&self.abs())
    }

    /// All `2r` indices in increasing order.
    pub fn all(r: u32) -> impl Iterator<Item = JIndex> {
        (0..2 * r as usize).map(move |p| JIndex::from_position(p, r))
    }
}

impl Ord for JIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        match (*self, *other) {
            (JIndex::Plain(a), JIndex::Plain(b)) => a.cmp(&b),
            (JIndex::Bar(a), JIndex::Bar(b)) => b.cmp(&a),
            (JIndex::Plain(_), JIndex::Bar(_)) => Ordering::Less,
            (JIndex::Bar(_), JIndex::Plain(_)) => Ordering::Greater,
        }
    }
}

impl PartialOrd for JIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Bars render as a trailing `b`: `3b` is `3̄`.
impl fmt::Display for JIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JIndex::Plain(j) => write!(f, "{j}"),
            JIndex::Bar(j) => write!(f, "{j}b"),
        }
    }
}

impl FromStr for JIndex {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || WordError::BadIndex(s.to_string());
        let (digits, barred) = match s.strip_suffix('b') {
            Some(d) => (d, true),
            None => (s, false),
        };
        let j: u32 = digits.parse().map_err(|_| bad())?;
        if j == 0 {
            return Err(bad());
        }
        Ok(if barred { JIndex::Bar(j) } else { JIndex::Plain(j) })
    }
}

/// Renders a tuple as `a,b,c`.
pub fn fmt_tuple(t: &[JIndex]) -> String {
    t.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

/// The word `(1, …, r)^{m-1} (1, …, last)`, a left factor of `(1, …, r)^r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CWord {
    r: u32,
    m: u32,
    last: u32,
}

impl CWord {
    pub fn new(r: u32, m: u32, last: u32) -> Result<CWord, WordError> {
        if r == 0 || m == 0 || m > r || last == 0 || last > r {
            return Err(WordError::BadWord { r, m, last });
        }
        Ok(CWord { r, m, last })
    }

    pub fn rank(&self) -> u32 {
        self.r
    }

    pub fn cycles(&self) -> u32 {
        self.m
    }

    pub fn last(&self) -> u32 {
        self.last
    }

    /// Word length `n = (m-1) r + last`.
    pub fn len(&self) -> usize {
        ((self.m - 1) * self.r + self.last) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn check(&self, k: usize) -> Result<(), WordError> {
        if k == 0 || k > self.len() {
            Err(WordError::OutOfRange { k, n: self.len() })
        } else {
            Ok(())
        }
    }

    /// `(cycle m', letter d)` of position `k`.
    pub fn locate(&self, k: usize) -> Result<(u32, u32), WordError> {
        self.check(k)?;
        let r = self.r as usize;
        let cycle = k.div_ceil(r);
        Ok((cycle as u32, (k - (cycle - 1) * r) as u32))
    }

    pub fn letter(&self, k: usize) -> Result<u32, WordError> {
        Ok(self.locate(k)?.1)
    }

    pub fn letters(&self) -> Vec<u32> {
        (1..=self.len()).map(|k| self.letter(k).expect("in range")).collect()
    }

    /// `(cycle, letter)` pairs in word order; these index the variables `Y[s,l]`.
    pub fn positions(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        (1..=self.len()).map(move |k| self.locate(k).expect("in range"))
    }

    /// Shortest prefix of length `>= k` ending in the letter of `k`.
    pub fn truncate_for(&self, k: usize) -> Result<CWord, WordError> {
        let (_, d) = self.locate(k)?;
        Ok(if self.last >= d {
            CWord { last: d, ..*self }
        } else {
            // the letter d last occurs in cycle m-1, which contains k
            CWord { m: self.m - 1, last: d, ..*self }
        })
    }

    /// Basis wedge `u_{<=k}(v_1 ∧ … ∧ v_d)` as a sorted `d`-tuple (sign +1).
    pub fn target_wedge(&self, k: usize) -> Result<Vec<JIndex>, WordError> {
        let (mp, d) = self.locate(k)?;
        Ok(target_tuple(self.r, mp, d))
    }
}

/// `(m'+1, …, m'+d)` when `m'+d <= r`, else `(m'+1, …, r, \overline{d-r+m'}, …, 1̄)`.
pub fn target_tuple(r: u32, mp: u32, d: u32) -> Vec<JIndex> {
    if mp + d <= r {
        (mp + 1..=mp + d).map(JIndex::Plain).collect()
    } else {
        let nbar = d + mp - r;
        (mp + 1..=r).map(JIndex::Plain).chain((1..=nbar).rev().map(JIndex::Bar)).collect()
    }
}

impl fmt::Display for CWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters: Vec<String> = self.letters().iter().map(ToString::to_string).collect();
        write!(f, "({})", letters.join(","))
    }
}
