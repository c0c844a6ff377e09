//! Zigzag words in the standard generators, feasible words, convex
//! spanning sequences, and the rank experiment on realized modules.
//!
//! The rank experiment checks linear independence of word images inside
//! one concrete module. Full rank there is evidence for the basis claims,
//! not a proof: it says nothing about relations that hold in the abstract
//! algebra but vanish on this module.

mod convex;
mod enumerate;
mod rank;
mod word;

pub use convex::{enumerate_convex_spanning, ConvexSequence};
pub use enumerate::{
    enumerate_feasible, enumerate_zz, EnumerationError, ZzEnumeration, ZzQuery, MAX_FEASIBLE_D,
    MAX_ZZ_D, MAX_ZZ_WORDS,
};
pub use rank::{feasible_rank_test, word_image, FeasibleRank};
pub use word::{is_between, is_feasible, is_zz, Gen, Word, WordError};
