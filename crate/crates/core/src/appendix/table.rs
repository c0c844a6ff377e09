use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::{self, Write};

use thiserror::Error;

use super::expr::{Expr, Var};
use super::label::Label;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Action {
    A,
    AStar,
}

impl Action {
    pub fn keyword(self) -> &'static str {
        match self {
            Action::A => "A",
            Action::AStar => "ASTAR",
        }
    }
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Action::A => "a",
            Action::AStar => "a*",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: Expr,
    pub target: Label,
}

/// `source ↦ Σ coeff · target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub source: Label,
    pub terms: Vec<Term>,
}

/// The action of `a` and `a*` on a labeled basis of dimension `2^d`.
///
/// The basis is split into row blocks `0..=d` of sizes `C(d, j)`. On block
/// `j`, `a` acts as `th j` plus terms in block `j+1`, and `a*` as `ths j`
/// plus terms in block `j−1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleTable {
    pub d: usize,
    pub blocks: Vec<Vec<Label>>,
    pub a: Vec<Entry>,
    pub astar: Vec<Entry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{0}")]
    Structure(String),
}

fn syntax<T>(line: usize, column: usize, message: impl Into<String>) -> Result<T, TableError> {
    Err(TableError::Syntax { line, column, message: message.into() })
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Lines with their 1-based numbers, comments and blank lines removed.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end()))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
}

fn parse_label(s: &str, line: usize, column: usize) -> Result<Label, TableError> {
    s.parse().or_else(|e: super::label::LabelError| syntax(line, column, e.to_string()))
}

/// Parses `[expr] * label` starting at byte `at` of `line_text`.
fn parse_term(line_text: &str, at: usize, line: usize, d: usize) -> Result<Term, TableError> {
    let rest = &line_text[at..];
    let lead = rest.len() - rest.trim_start().len();
    let open = at + lead;
    if !line_text[open..].starts_with('[') {
        return syntax(line, open + 1, "expected `[` before coefficient");
    }
    let Some(close_rel) = line_text[open..].find(']') else {
        return syntax(line, open + 1, "unterminated `[`");
    };
    let close = open + close_rel;
    let coeff = Expr::parse(&line_text[open + 1..close], d).or_else(|e| {
        syntax(line, open + 2 + e.offset, e.message)
    })?;
    let after = &line_text[close + 1..];
    let Some(star) = after.trim_start().strip_prefix('*') else {
        return syntax(line, close + 2, "expected `*` after coefficient");
    };
    let name = star.trim();
    let name_col = line_text.len() - star.trim_start().len() + 1;
    if name.is_empty() {
        return syntax(line, name_col, "expected basis label");
    }
    let target = parse_label(name, line, name_col)?;
    Ok(Term { coeff, target })
}

impl ModuleTable {
    pub fn basis(&self) -> impl Iterator<Item = &Label> {
        self.blocks.iter().flatten()
    }

    pub fn dim(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// Row block of a basis label.
    pub fn block_of(&self, l: &Label) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(l))
    }

    pub fn entries(&self, action: Action) -> &[Entry] {
        match action {
            Action::A => &self.a,
            Action::AStar => &self.astar,
        }
    }

    fn entries_mut(&mut self, action: Action) -> &mut Vec<Entry> {
        match action {
            Action::A => &mut self.a,
            Action::AStar => &mut self.astar,
        }
    }

    pub fn parse(text: &str) -> Result<ModuleTable, TableError> {
        let mut lines = content_lines(text).peekable();
        let mut next = |want: &str| -> Result<(usize, &str), TableError> {
            lines.next().ok_or_else(|| TableError::Syntax {
                line: text.lines().count() + 1,
                column: 1,
                message: format!("unexpected end of table, expected {want}"),
            })
        };

        let (ln, l) = next("format header")?;
        match l.strip_prefix("format ").map(str::trim) {
            Some(v) if v == FORMAT_VERSION.to_string() => {}
            Some(v) => return syntax(ln, 8, format!("unsupported format version `{v}`")),
            None => return syntax(ln, 1, "expected `format 1` header"),
        }
        let (ln, l) = next("`d N`")?;
        let d: usize = match l.strip_prefix("d ").map(|v| v.trim().parse()) {
            Some(Ok(d)) => d,
            _ => return syntax(ln, 1, "expected `d N`"),
        };
        let (ln, l) = next("BASIS")?;
        if l.trim() != "BASIS" {
            return syntax(ln, 1, "expected `BASIS`");
        }

        let mut blocks = Vec::new();
        let mut sections: [Vec<Entry>; 2] = [Vec::new(), Vec::new()];
        let mut section: Option<usize> = None;
        let mut seen_sections = 0;
        for (ln, l) in lines {
            let t = l.trim();
            if let Some(kw) = t.strip_prefix("ACTION ") {
                let idx = match kw.trim() {
                    "A" => 0,
                    "ASTAR" => 1,
                    other => return syntax(ln, 8, format!("unknown action `{other}`")),
                };
                if idx != seen_sections {
                    return syntax(ln, 1, "expected `ACTION A` then `ACTION ASTAR`");
                }
                seen_sections += 1;
                section = Some(idx);
                continue;
            }
            let Some(idx) = section else {
                let mut block = Vec::new();
                let mut col = 0;
                for word in l.split(' ') {
                    if !word.is_empty() {
                        block.push(parse_label(word, ln, col + 1)?);
                    }
                    col += word.len() + 1;
                }
                blocks.push(block);
                continue;
            };
            let entries = &mut sections[idx];
            if l.starts_with(' ') {
                let lead = l.len() - t.len();
                let Some(entry) = entries.last_mut() else {
                    return syntax(ln, lead + 1, "continuation line without an entry");
                };
                if !t.starts_with('+') {
                    return syntax(ln, lead + 1, "expected `+` on continuation line");
                }
                entry.terms.push(parse_term(l, lead + 1, ln, d)?);
            } else {
                let Some(colon) = l.find(':') else {
                    return syntax(ln, 1, "expected `label : term`");
                };
                let source = parse_label(l[..colon].trim(), ln, 1)?;
                let term = parse_term(l, colon + 1, ln, d)?;
                entries.push(Entry { source, terms: alloc::vec![term] });
            }
        }
        if seen_sections != 2 {
            return Err(TableError::Structure("missing ACTION section".to_string()));
        }
        let [a, astar] = sections;
        let table = ModuleTable { d, blocks, a, astar };
        table.check_structure()?;
        Ok(table)
    }

    /// Checks block sizes, label uniqueness, entry coverage and the block
    /// pattern of both actions.
    pub fn check_structure(&self) -> Result<(), TableError> {
        let d = self.d;
        let bad = |m: String| Err(TableError::Structure(m));
        if self.blocks.len() != d + 1 {
            return bad(format!("{} row blocks, expected {}", self.blocks.len(), d + 1));
        }
        for (j, b) in self.blocks.iter().enumerate() {
            if b.len() != binomial(d, j) {
                return bad(format!("block {j} has {} labels, expected {}", b.len(), binomial(d, j)));
            }
        }
        let basis: Vec<&Label> = self.basis().collect();
        for (k, l) in basis.iter().enumerate() {
            if basis[..k].contains(l) {
                return bad(format!("label {l} repeated"));
            }
        }
        for action in [Action::A, Action::AStar] {
            let entries = self.entries(action);
            if entries.len() != basis.len() {
                return bad(format!("{action}: {} entries for {} labels", entries.len(), basis.len()));
            }
            for (entry, &want) in entries.iter().zip(&basis) {
                if &entry.source != want {
                    return bad(format!("{action}: entry for {} where {want} expected", entry.source));
                }
                let j = self.block_of(want).expect("basis label");
                let diag = &entry.terms[0];
                let var = match action {
                    Action::A => Var::Theta(j),
                    Action::AStar => Var::ThetaStar(j),
                };
                if diag.target != entry.source || diag.coeff != Expr::Var(var) {
                    return bad(format!("{action}.{want}: first term must be {var} * {want}"));
                }
                for (k, t) in entry.terms.iter().enumerate().skip(1) {
                    let Some(tb) = self.block_of(&t.target) else {
                        return bad(format!("{action}.{want}: target {} not in basis", t.target));
                    };
                    let allowed = match action {
                        Action::A => j + 1,
                        Action::AStar => j.wrapping_sub(1),
                    };
                    if tb != allowed {
                        return bad(format!(
                            "{action}.{want}: target {} lies in block {tb}, expected {allowed}",
                            t.target
                        ));
                    }
                    if entry.terms[1..k].iter().any(|u| u.target == t.target) {
                        return bad(format!("{action}.{want}: target {} repeated", t.target));
                    }
                }
            }
        }
        Ok(())
    }

    /// Canonical text; [`ModuleTable::parse`] inverts it exactly.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "format {FORMAT_VERSION}");
        let _ = writeln!(s, "d {}", self.d);
        s.push_str("BASIS\n");
        for b in &self.blocks {
            let words: Vec<String> = b.iter().map(ToString::to_string).collect();
            s.push_str(&words.join(" "));
            s.push('\n');
        }
        for action in [Action::A, Action::AStar] {
            let _ = writeln!(s, "ACTION {}", action.keyword());
            for e in self.entries(action) {
                for (k, t) in e.terms.iter().enumerate() {
                    if k == 0 {
                        let _ = write!(s, "{} : ", e.source);
                    } else {
                        s.push_str("    + ");
                    }
                    let _ = writeln!(s, "[{}] * {}", t.coeff, t.target);
                }
            }
        }
        s
    }

    /// `v1+fnv1a:<hash>` over the canonical text.
    pub fn asset_version(&self) -> String {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in self.to_text().bytes() {
            h ^= u64::from(b);
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
        format!("v{FORMAT_VERSION}+fnv1a:{h:016x}")
    }

    /// Every `(action, entry, term)` position, in table order.
    pub fn term_positions(&self) -> Vec<(Action, usize, usize)> {
        let mut out = Vec::new();
        for action in [Action::A, Action::AStar] {
            for (i, e) in self.entries(action).iter().enumerate() {
                for k in 0..e.terms.len() {
                    out.push((action, i, k));
                }
            }
        }
        out
    }

    /// A copy with one coefficient negated.
    pub fn with_negated_term(&self, action: Action, entry: usize, term: usize) -> ModuleTable {
        let mut t = self.clone();
        let c = &mut t.entries_mut(action)[entry].terms[term].coeff;
        *c = Expr::Neg(alloc::boxed::Box::new(c.clone()));
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const D1: &str = "format 1\nd 1\nBASIS\nphi\nr\nACTION A\nphi : [th0] * phi\n    + [1] * r\n\
                      r : [th1] * r\nACTION ASTAR\nphi : [ths0] * phi\nr : [ths1] * r\n    + [y1] * phi\n";

    #[test]
    fn round_trip() {
        let t = ModuleTable::parse(D1).unwrap();
        assert_eq!(t.to_text(), D1);
        assert_eq!(t.dim(), 2);
        assert!(t.asset_version().starts_with("v1+fnv1a:"));
    }

    #[test]
    fn errors_carry_positions() {
        let bad = D1.replace("[y1]", "[y1 + y2]");
        match ModuleTable::parse(&bad).unwrap_err() {
            TableError::Syntax { line, column, message } => {
                assert_eq!(line, 13);
                assert_eq!(column, 13);
                assert!(message.contains("`y2`"));
            }
            e => panic!("{e}"),
        }
        let bad = D1.replace("[1] * r", "[1] * r2");
        assert!(matches!(ModuleTable::parse(&bad), Err(TableError::Structure(_))));
        let bad = D1.replace("format 1", "format 2");
        assert!(matches!(ModuleTable::parse(&bad), Err(TableError::Syntax { line: 1, .. })));
        let bad = D1.replace("phi : [th0]", "phi : [th1]");
        assert!(matches!(ModuleTable::parse(&bad), Err(TableError::Structure(_))));
    }

    #[test]
    fn comments_and_blank_lines_ignored() {
        let text = D1.replace("BASIS\n", "# basis follows\n\nBASIS\n");
        assert_eq!(ModuleTable::parse(&text).unwrap(), ModuleTable::parse(D1).unwrap());
    }

    #[test]
    fn binomials() {
        assert_eq!((0..=5).map(|k| binomial(5, k)).collect::<Vec<_>>(), [1, 5, 10, 10, 5, 1]);
    }
}
