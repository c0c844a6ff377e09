use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::enumerate::enumerate_feasible;
use super::word::Word;
use crate::appendix::ModuleRealization;
use crate::polykit::Echelon;
use crate::report::Check;
use crate::scalars::Field;

/// Image of `φ` under a word: the rightmost letter acts first.
pub fn word_image<F: Field>(real: &ModuleRealization<F>, w: &Word) -> Option<Vec<F::Elem>> {
    let f = &real.field;
    let mut v = real.phi();
    for g in w.letters().iter().rev() {
        let family = if g.starred { &real.estar } else { &real.e };
        v = family.get(g.index)?.apply(f, &v);
    }
    Some(v)
}

#[derive(Debug, Clone)]
pub struct FeasibleRank {
    pub words: Vec<Word>,
    pub rank: usize,
    /// Words whose image lies in the span of the images of earlier words.
    pub dependent: Vec<Word>,
    pub checks: Vec<Check>,
}

/// Rank of the images of `φ` under the feasible words, which should be
/// `2^d`. A deficiency is reported through the checks, never as an error.
pub fn feasible_rank_test<F: Field>(real: &ModuleRealization<F>) -> FeasibleRank {
    let f = &real.field;
    let expected = 1usize << real.d;
    let words = match enumerate_feasible(real.d) {
        Ok(w) => w,
        Err(e) => {
            let checks = Vec::from([Check::fail("feasible/count", format!("{e}"))]);
            return FeasibleRank { words: Vec::new(), rank: 0, dependent: Vec::new(), checks };
        }
    };
    let mut span = Echelon::new(real.dim());
    let mut dependent = Vec::new();
    for w in &words {
        let img = word_image(real, w).expect("feasible indices are at most d");
        if !span.insert(f, img) {
            dependent.push(w.clone());
        }
    }
    let rank = span.rank();
    let mut checks = Vec::from([
        Check::new(
            "feasible/count",
            words.len() == expected,
            format!("{} words, expected {expected}", words.len()),
        ),
        Check::new("feasible/dimension", real.dim() == expected, format!("module dimension {}", real.dim())),
    ]);
    let detail = if dependent.is_empty() {
        format!("rank {rank} of {expected}")
    } else {
        let list: Vec<String> = dependent.iter().map(|w| format!("{w}")).collect();
        format!("rank {rank} of {expected}; dependent on earlier words: {}", list.join(", "))
    };
    checks.push(Check::new("feasible/rank", rank == expected, detail));
    FeasibleRank { words, rank, dependent, checks }
}
