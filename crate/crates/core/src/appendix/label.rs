use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

/// A basis vector name: `phi`, or an alternating word in `l` and `r` with
/// positive exponents, such as `lr2l3r4`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label {
    letters: Vec<(Letter, u32)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    L,
    R,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelError(pub String);

impl fmt::Display for LabelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid basis label `{}`", self.0)
    }
}

impl Label {
    pub fn phi() -> Self {
        Label { letters: Vec::new() }
    }

    /// `r^h`; `r^0` is `phi`.
    pub fn r_power(h: u32) -> Self {
        if h == 0 {
            Label::phi()
        } else {
            Label { letters: alloc::vec![(Letter::R, h)] }
        }
    }

    /// `l^h r^i`; `l^0 r^i` is `r^i`.
    pub fn l_r(h: u32, i: u32) -> Self {
        let mut out = Label::r_power(i);
        if h > 0 {
            out.letters.insert(0, (Letter::L, h));
        }
        out
    }

    pub fn is_phi(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[(Letter, u32)] {
        &self.letters
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("phi");
        }
        for &(l, e) in &self.letters {
            f.write_str(match l {
                Letter::L => "l",
                Letter::R => "r",
            })?;
            if e > 1 {
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Label {
    type Err = LabelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "phi" {
            return Ok(Label::phi());
        }
        let bad = || LabelError(String::from(s));
        let b = s.as_bytes();
        let mut letters: Vec<(Letter, u32)> = Vec::new();
        let mut i = 0;
        while i < b.len() {
            let letter = match b[i] {
                b'l' => Letter::L,
                b'r' => Letter::R,
                _ => return Err(bad()),
            };
            if letters.last().is_some_and(|&(prev, _)| prev == letter) {
                return Err(bad());
            }
            i += 1;
            let start = i;
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            let exp = if start == i {
                1
            } else {
                let digits = &s[start..i];
                // Exponent 1 is written implicitly; leading zeros are not allowed.
                if digits.starts_with('0') || digits == "1" {
                    return Err(bad());
                }
                digits.parse().map_err(|_| bad())?
            };
            letters.push((letter, exp));
        }
        if letters.is_empty() {
            return Err(bad());
        }
        Ok(Label { letters })
    }
}
