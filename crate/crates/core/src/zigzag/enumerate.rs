use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::word::{window3_ok, window4_ok, Gen, Word};

/// Largest `d` accepted by [`enumerate_feasible`].
pub const MAX_FEASIBLE_D: usize = 12;
/// Largest `d` accepted by [`enumerate_zz`].
pub const MAX_ZZ_D: usize = 6;
/// Upper bound on the number of words [`enumerate_zz`] will produce.
pub const MAX_ZZ_WORDS: usize = 1 << 21;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("d = {d} exceeds the enumeration limit {max}")]
    DegreeTooLarge { d: usize, max: usize },
    #[error("excluded index {index} exceeds d = {d}")]
    IndexOutOfRange { index: usize, d: usize },
    #[error("more than {0} words; lower --max-len")]
    BudgetExhausted(usize),
}

/// Whether appending `g` to `w` keeps every window ending at `g` zigzag.
fn extends_right(w: &[Gen], g: Gen) -> bool {
    let n = w.len();
    if n >= 1 && w[n - 1].starred == g.starred {
        return false;
    }
    if n >= 2 && !window3_ok(w[n - 2].index, w[n - 1].index, g.index) {
        return false;
    }
    if n >= 3 && !window4_ok(w[n - 3].index, w[n - 2].index, w[n - 1].index, g.index) {
        return false;
    }
    true
}

/// Whether prepending `g` to `w` keeps every window starting at `g` zigzag.
fn extends_left(g: Gen, w: &[Gen]) -> bool {
    if w.first().is_some_and(|h| h.starred == g.starred) {
        return false;
    }
    if w.len() >= 2 && !window3_ok(g.index, w[0].index, w[1].index) {
        return false;
    }
    if w.len() >= 3 && !window4_ok(g.index, w[0].index, w[1].index, w[2].index) {
        return false;
    }
    true
}

/// All feasible words for `d`, in shortlex order.
///
/// Words are grown leftward from `e*0`. The zigzag conditions only look at
/// windows of three and four letters, so a prefix that fails can never be
/// repaired by further prepending and is dropped.
pub fn enumerate_feasible(d: usize) -> Result<Vec<Word>, EnumerationError> {
    if d > MAX_FEASIBLE_D {
        return Err(EnumerationError::DegreeTooLarge { d, max: MAX_FEASIBLE_D });
    }
    let mut out = Vec::new();
    // Stored reversed so that prepending is a push.
    let mut frontier = vec![vec![Gen::estar(0)]];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for rev in &frontier {
            let word: Vec<Gen> = rev.iter().rev().copied().collect();
            let starred = !word[0].starred;
            for index in 0..=d {
                if word.iter().any(|h| h.index == index) {
                    continue;
                }
                let g = Gen { index, starred };
                if extends_left(g, &word) {
                    let mut r = rev.clone();
                    r.push(g);
                    next.push(r);
                }
            }
            out.push(Word(word));
        }
        frontier = next;
    }
    out.sort();
    Ok(out)
}

/// Parameters for [`enumerate_zz`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZzQuery {
    pub d: usize,
    /// Omit `e_r`.
    pub exclude_r: Option<usize>,
    /// Omit `e*_s`.
    pub exclude_s: Option<usize>,
    /// Longest word produced. The result is a truncation of an infinite
    /// family whenever some letter pair can repeat.
    pub max_len: usize,
    pub include_trivial: bool,
}

impl ZzQuery {
    /// Length cap `2d + 2`, trivial word included, nothing excluded.
    pub fn new(d: usize) -> Self {
        ZzQuery { d, exclude_r: None, exclude_s: None, max_len: 2 * d + 2, include_trivial: true }
    }

    pub fn excluding(mut self, r: usize, s: usize) -> Self {
        self.exclude_r = Some(r);
        self.exclude_s = Some(s);
        self
    }

    fn allowed(&self) -> Vec<Gen> {
        let mut gens = Vec::new();
        for index in 0..=self.d {
            if self.exclude_r != Some(index) {
                gens.push(Gen::e(index));
            }
            if self.exclude_s != Some(index) {
                gens.push(Gen::estar(index));
            }
        }
        gens
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZzEnumeration {
    pub words: Vec<Word>,
    /// `counts[n]` is the number of words of length `n`.
    pub counts: Vec<usize>,
}

/// All zigzag words up to the length cap that avoid the excluded letters,
/// in shortlex order.
pub fn enumerate_zz(q: &ZzQuery) -> Result<ZzEnumeration, EnumerationError> {
    if q.d > MAX_ZZ_D {
        return Err(EnumerationError::DegreeTooLarge { d: q.d, max: MAX_ZZ_D });
    }
    for index in [q.exclude_r, q.exclude_s].into_iter().flatten() {
        if index > q.d {
            return Err(EnumerationError::IndexOutOfRange { index, d: q.d });
        }
    }
    let gens = q.allowed();
    let mut words: Vec<Word> = Vec::new();
    let mut counts = vec![0; q.max_len + 1];
    if q.include_trivial {
        words.push(Word::trivial());
        counts[0] = 1;
    }
    // Extending a shortlex-sorted layer by sorted letters keeps it sorted.
    let mut layer: Vec<Vec<Gen>> = vec![Vec::new()];
    for len in 1..=q.max_len {
        let mut next = Vec::new();
        for w in &layer {
            for &g in &gens {
                if extends_right(w, g) {
                    if words.len() + next.len() >= MAX_ZZ_WORDS {
                        return Err(EnumerationError::BudgetExhausted(MAX_ZZ_WORDS));
                    }
                    let mut v = w.clone();
                    v.push(g);
                    next.push(v);
                }
            }
        }
        counts[len] = next.len();
        words.extend(next.iter().cloned().map(Word));
        layer = next;
    }
    Ok(ZzEnumeration { words, counts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zigzag::word::{is_feasible, is_zz};
    use alloc::string::{String, ToString};

    fn texts(ws: &[Word]) -> Vec<String> {
        ws.iter().map(|w| w.to_string()).collect()
    }

    #[test]
    fn feasible_small() {
        assert_eq!(texts(&enumerate_feasible(0).unwrap()), ["e*0"]);
        assert_eq!(texts(&enumerate_feasible(1).unwrap()), ["e*0", "e1 e*0"]);
        assert_eq!(
            texts(&enumerate_feasible(2).unwrap()),
            ["e*0", "e1 e*0", "e2 e*0", "e*1 e2 e*0"]
        );
    }

    #[test]
    fn feasible_counts_are_powers_of_two() {
        for d in 0..=9 {
            let ws = enumerate_feasible(d).unwrap();
            assert_eq!(ws.len(), 1 << d, "d = {d}");
            assert!(ws.iter().all(is_feasible));
            assert!(ws.windows(2).all(|p| p[0] < p[1]));
        }
        assert!(enumerate_feasible(13).is_err());
    }

    #[test]
    fn zz_d0() {
        let all = enumerate_zz(&ZzQuery::new(0)).unwrap();
        // Only e0 e*0 e0 ... alternations, one word per length each way.
        assert_eq!(all.counts, [1, 2, 2]);
        let q = ZzQuery::new(0).excluding(0, 0);
        assert_eq!(texts(&enumerate_zz(&q).unwrap().words), ["1"]);
        let mut q = ZzQuery::new(0);
        q.exclude_s = Some(0);
        assert_eq!(texts(&enumerate_zz(&q).unwrap().words), ["1", "e0"]);
    }

    #[test]
    fn zz_d1_excluding_e0_es1() {
        let q = ZzQuery::new(1).excluding(0, 1);
        let out = enumerate_zz(&q).unwrap();
        assert_eq!(
            texts(&out.words[..6]),
            ["1", "e*0", "e1", "e*0 e1", "e1 e*0", "e*0 e1 e*0"]
        );
        assert_eq!(out.counts, [1, 2, 2, 2, 2]);
        assert!(out.words.iter().all(|w| is_zz(w) == Ok(true)));
        assert_eq!(enumerate_zz(&q).unwrap(), out);
    }

    #[test]
    fn zz_rejects_bad_input() {
        assert!(matches!(
            enumerate_zz(&ZzQuery::new(2).excluding(3, 0)),
            Err(EnumerationError::IndexOutOfRange { index: 3, d: 2 })
        ));
        assert!(enumerate_zz(&ZzQuery::new(7)).is_err());
        let mut q = ZzQuery::new(6);
        q.max_len = 40;
        assert_eq!(enumerate_zz(&q), Err(EnumerationError::BudgetExhausted(MAX_ZZ_WORDS)));
    }

    #[test]
    fn trivial_word_flag() {
        let mut q = ZzQuery::new(2);
        q.include_trivial = false;
        let out = enumerate_zz(&q).unwrap();
        assert_eq!(out.counts[0], 0);
        assert!(out.words.iter().all(|w| !w.is_empty()));
    }
}
