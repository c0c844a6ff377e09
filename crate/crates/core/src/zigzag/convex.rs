use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

/// An integer sequence whose consecutive differences never increase:
/// `k_{i-1} − k_i >= k_i − k_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ConvexSequence {
    pub entries: Vec<i64>,
}

impl ConvexSequence {
    pub fn is_convex(entries: &[i64]) -> bool {
        entries.windows(3).all(|w| w[0] - w[1] >= w[1] - w[2])
    }

    /// The entries strictly between the first and the last.
    pub fn interior(&self) -> &[i64] {
        match self.entries.len() {
            0..=2 => &[],
            n => &self.entries[1..n - 1],
        }
    }

    /// Interior entries in tuple form, e.g. `(2,1)` or `()`.
    pub fn interior_text(&self) -> String {
        let mut s = String::from("(");
        for (k, x) in self.interior().iter().enumerate() {
            if k > 0 {
                s.push(',');
            }
            s.push_str(&alloc::format!("{x}"));
        }
        s.push(')');
        s
    }
}

impl fmt::Display for ConvexSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, x) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// All convex sequences `(r, k_1, ..., k_m, 0)` with
/// `r > k_1 > ... > k_m > 0` and `m >= 0`, ordered by the interior
/// `(k_1, ..., k_m)`: shorter first, then lexicographically. Empty for `r = 0`.
pub fn enumerate_convex_spanning(r: usize) -> Vec<ConvexSequence> {
    let mut out = Vec::new();
    if r == 0 {
        return out;
    }
    let mut stack = Vec::from([r as i64]);
    grow(&mut stack, i64::MAX, &mut out);
    out.sort_by(|a, b| {
        a.entries.len().cmp(&b.entries.len()).then_with(|| a.entries.cmp(&b.entries))
    });
    out
}

fn grow(stack: &mut Vec<i64>, max_step: i64, out: &mut Vec<ConvexSequence>) {
    let c = *stack.last().expect("nonempty");
    if c <= max_step {
        let mut entries = stack.clone();
        entries.push(0);
        out.push(ConvexSequence { entries });
    }
    for k in (1..c).rev() {
        let step = c - k;
        if step > max_step {
            break;
        }
        stack.push(k);
        grow(stack, step, out);
        stack.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn interiors(r: usize) -> Vec<String> {
        enumerate_convex_spanning(r).iter().map(ConvexSequence::interior_text).collect()
    }

    #[test]
    fn small_cases() {
        assert!(enumerate_convex_spanning(0).is_empty());
        assert_eq!(interiors(1), ["()"]);
        assert_eq!(interiors(2), ["()", "(1)"]);
        assert_eq!(interiors(3), ["()", "(1)", "(2,1)"]);
        assert_eq!(interiors(4), ["()", "(1)", "(2)", "(2,1)", "(3,2,1)"]);
    }

    #[test]
    fn predicate() {
        assert!(ConvexSequence::is_convex(&[3, 1, 0]));
        assert!(!ConvexSequence::is_convex(&[3, 2, 0]));
        assert!(ConvexSequence::is_convex(&[5]));
    }
}
