use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// A standard generator `e_i` or `e*_i`.
///
/// The derived order compares the index first, so `e0 < e*0 < e1 < e*1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gen {
    pub index: usize,
    pub starred: bool,
}

impl Gen {
    pub fn e(index: usize) -> Self {
        Gen { index, starred: false }
    }

    pub fn estar(index: usize) -> Self {
        Gen { index, starred: true }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.starred {
            write!(f, "e*{}", self.index)
        } else {
            write!(f, "e{}", self.index)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("cannot parse word `{0}`")]
    Parse(String),
    #[error("letters {position} and {} are not alternating", position + 1)]
    NotAlternating { position: usize },
}

/// A product of standard generators, leftmost letter first. The empty word
/// is the identity and prints as `1`.
///
/// Words compare shortlex: shorter words first, then letter by letter in
/// [`Gen`] order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<Gen>);

impl Word {
    pub fn trivial() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Gen] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> Option<Gen> {
        self.0.last().copied()
    }

    /// Position of the first adjacent pair with equal starredness.
    pub fn alternation_defect(&self) -> Option<usize> {
        self.0.windows(2).position(|w| w[0].starred == w[1].starred)
    }

    pub fn is_alternating(&self) -> bool {
        self.alternation_defect().is_none()
    }

    pub fn has_distinct_indices(&self) -> bool {
        let mut seen: Vec<usize> = self.0.iter().map(|g| g.index).collect();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    pub fn max_index(&self) -> Option<usize> {
        self.0.iter().map(|g| g.index).max()
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, g) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Accepts `1` for the trivial word and letters such as `e2`, `e*1`, with
/// or without separating whitespace (`e2e*1` reads as two letters).
impl FromStr for Word {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || WordError::Parse(s.to_string());
        let t = s.trim();
        if t == "1" {
            return Ok(Word::trivial());
        }
        let bytes = t.as_bytes();
        let mut k = 0;
        let mut out = Vec::new();
        while k < bytes.len() {
            if bytes[k].is_ascii_whitespace() {
                k += 1;
                continue;
            }
            if bytes[k] != b'e' {
                return Err(bad());
            }
            k += 1;
            let starred = bytes.get(k) == Some(&b'*');
            if starred {
                k += 1;
            }
            let start = k;
            while k < bytes.len() && bytes[k].is_ascii_digit() {
                k += 1;
            }
            let digits = &t[start..k];
            if digits.is_empty() || (digits.len() > 1 && digits.starts_with('0')) {
                return Err(bad());
            }
            let index = digits.parse().map_err(|_| bad())?;
            out.push(Gen { index, starred });
        }
        if out.is_empty() {
            return Err(bad());
        }
        Ok(Word(out))
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `r` is between the ordered pair `i, j` when `i >= r > j` or `i <= r < j`.
pub fn is_between(r: usize, i: usize, j: usize) -> bool {
    (i >= r && r > j) || (i <= r && r < j)
}

/// Condition (i) at the middle of a window of three indices.
pub(crate) fn window3_ok(a: usize, b: usize, c: usize) -> bool {
    !is_between(b, a, c)
}

/// Condition (ii) on a window of four indices `u_{i-2}, u_{i-1}, u_i, u_{i+1}`.
pub(crate) fn window4_ok(a: usize, b: usize, c: usize, e: usize) -> bool {
    !is_between(b, a, e) || !is_between(c, a, e)
}

/// Whether an alternating word is zigzag:
///
/// 1. `u_i` is not between `u_{i-1}, u_{i+1}` for `2 <= i <= n-1`;
/// 2. at least one of `u_{i-1}, u_i` is not between `u_{i-2}, u_{i+1}` for
///    `3 <= i <= n-1`.
pub fn is_zz(w: &Word) -> Result<bool, WordError> {
    if let Some(position) = w.alternation_defect() {
        return Err(WordError::NotAlternating { position: position + 1 });
    }
    let ix: Vec<usize> = w.0.iter().map(|g| g.index).collect();
    let cond_i = ix.windows(3).all(|x| window3_ok(x[0], x[1], x[2]));
    let cond_ii = ix.windows(4).all(|x| window4_ok(x[0], x[1], x[2], x[3]));
    Ok(cond_i && cond_ii)
}

/// Nontrivial, zigzag, ends in `e*0`, indices mutually distinct.
pub fn is_feasible(w: &Word) -> bool {
    w.last() == Some(Gen::estar(0)) && w.has_distinct_indices() && is_zz(w) == Ok(true)
}
