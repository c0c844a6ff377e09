use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::params::SpecializationContext;
use crate::scalars::{Field, ScalarError};

/// A named scalar that a coefficient may mention.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    /// `thN`
    Theta(usize),
    /// `thsN`
    ThetaStar(usize),
    /// `yN`, `1 <= N <= d`
    Y(usize),
    Beta,
    /// `epsN`, `0 <= N <= d−2`
    Eps(usize),
}

impl Var {
    fn parse(name: &str, d: usize) -> Option<Var> {
        if name == "beta" {
            return (d >= 3).then_some(Var::Beta);
        }
        let split = name.find(|c: char| c.is_ascii_digit())?;
        let (head, digits) = name.split_at(split);
        if digits.len() > 1 && digits.starts_with('0') {
            return None;
        }
        let n: usize = digits.parse().ok()?;
        match head {
            "th" if n <= d => Some(Var::Theta(n)),
            "ths" if n <= d => Some(Var::ThetaStar(n)),
            "y" if (1..=d).contains(&n) => Some(Var::Y(n)),
            "eps" if n + 2 <= d => Some(Var::Eps(n)),
            _ => None,
        }
    }

    pub fn value<'c, E: Clone>(&self, ctx: &'c SpecializationContext<E>) -> &'c E {
        match *self {
            Var::Theta(i) => &ctx.theta[i],
            Var::ThetaStar(i) => &ctx.theta_star[i],
            Var::Y(i) => ctx.y(i),
            Var::Beta => ctx.beta.as_ref().expect("β present for d >= 3"),
            Var::Eps(i) => &ctx.epsilon[i],
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Theta(i) => write!(f, "th{i}"),
            Var::ThetaStar(i) => write!(f, "ths{i}"),
            Var::Y(i) => write!(f, "y{i}"),
            Var::Beta => f.write_str("beta"),
            Var::Eps(i) => write!(f, "eps{i}"),
        }
    }
}

/// Coefficient expression tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(u64),
    Var(Var),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExprError {
    /// Byte offset into the parsed text.
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(u64),
    Name(String),
    Op(u8),
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>, ExprError> {
    let b = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i];
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            let v = s[start..i].parse().map_err(|_| ExprError {
                offset: start,
                message: format!("integer literal `{}` out of range", &s[start..i]),
            })?;
            out.push((start, Tok::Int(v)));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < b.len() && b[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push((start, Tok::Name(s[start..i].to_string())));
        } else if b"+-*/^()".contains(&c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            let ch = s[i..].chars().next().unwrap_or('?');
            return Err(ExprError { offset: i, message: format!("unexpected character `{ch}`") });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [(usize, Tok)],
    pos: usize,
    end: usize,
    d: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn err<T>(&self, message: String) -> Result<T, ExprError> {
        Err(ExprError { offset: self.offset(), message })
    }

    fn eat(&mut self, op: u8) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(b'+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(b'-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat(b'*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat(b'/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        if self.eat(b'-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ExprError> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let negative = self.eat(b'-');
        match self.peek() {
            Some(&Tok::Int(n)) => {
                let Ok(n) = i32::try_from(n) else {
                    return self.err(format!("exponent {n} out of range"));
                };
                self.pos += 1;
                Ok(Expr::Pow(Box::new(base), if negative { -n } else { n }))
            }
            _ => self.err("expected integer exponent".to_string()),
        }
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(Expr::Int(n))
            }
            Some(Tok::Name(name)) => match Var::parse(&name, self.d) {
                Some(v) => {
                    self.pos += 1;
                    Ok(Expr::Var(v))
                }
                None => self.err(format!("unknown scalar name `{name}` for d = {}", self.d)),
            },
            Some(Tok::Op(b'(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return self.err("expected `)`".to_string());
                }
                Ok(e)
            }
            Some(Tok::Op(c)) => self.err(format!("unexpected `{}`", c as char)),
            None => self.err("unexpected end of expression".to_string()),
        }
    }
}

impl Expr {
    /// Parses a coefficient over the scalar names valid for diameter `d`.
    ///
    /// Grammar, loosest binding first:
    ///
    /// ```text
    /// expr  := term (('+' | '-') term)*
    /// term  := unary (('*' | '/') unary)*
    /// unary := '-' unary | power
    /// power := atom ('^' '-'? INT)?
    /// atom  := INT | NAME | '(' expr ')'
    /// ```
    pub fn parse(s: &str, d: usize) -> Result<Expr, ExprError> {
        let toks = lex(s)?;
        let mut p = Parser { toks: &toks, pos: 0, end: s.len(), d };
        let e = p.expr()?;
        if p.pos != toks.len() {
            return p.err("trailing input".to_string());
        }
        Ok(e)
    }

    pub fn evaluate<F: Field>(
        &self,
        f: &F,
        ctx: &SpecializationContext<F::Elem>,
    ) -> Result<F::Elem, ScalarError> {
        Ok(match self {
            Expr::Int(n) => {
                let v = i64::try_from(*n).map_err(|_| ScalarError::Parse(n.to_string()))?;
                f.from_i64(v)
            }
            Expr::Var(v) => v.value(ctx).clone(),
            Expr::Neg(a) => f.neg(&a.evaluate(f, ctx)?),
            Expr::Add(a, b) => f.add(&a.evaluate(f, ctx)?, &b.evaluate(f, ctx)?),
            Expr::Sub(a, b) => f.sub(&a.evaluate(f, ctx)?, &b.evaluate(f, ctx)?),
            Expr::Mul(a, b) => f.mul(&a.evaluate(f, ctx)?, &b.evaluate(f, ctx)?),
            Expr::Div(a, b) => f.div(&a.evaluate(f, ctx)?, &b.evaluate(f, ctx)?)?,
            Expr::Pow(a, e) => f.pow(&a.evaluate(f, ctx)?, i64::from(*e))?,
        })
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            Expr::Int(_) | Expr::Var(_) => 5,
        }
    }

    fn write_child(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

/// Canonical text: minimal parentheses, spaces around binary `+` and `-`
/// only.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.precedence();
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Var(v) => write!(f, "{v}"),
            Expr::Neg(a) => {
                f.write_str("-")?;
                a.write_child(f, p)
            }
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                let op = match self {
                    Expr::Add(..) => " + ",
                    Expr::Sub(..) => " - ",
                    Expr::Mul(..) => "*",
                    _ => "/",
                };
                a.write_child(f, p)?;
                f.write_str(op)?;
                b.write_child(f, p + 1)
            }
            Expr::Pow(a, e) => {
                a.write_child(f, 5)?;
                write!(f, "^{e}")
            }
        }
    }
}
