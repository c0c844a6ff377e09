//! Exact scalar fields.
//!
//! Every higher module is written against [`Field`], a context object that
//! owns the arithmetic of its element type. Two implementations exist:
//! [`RationalField`] (arbitrary-precision rationals, bit-exact) and
//! [`PrimeField`] (residues modulo a prime below 2^63, fast). Checking a
//! rational-function identity at random points of a large prime field gives
//! Schwartz–Zippel confidence; checking over the rationals removes the
//! false-positive probability at the chosen point.

mod prime;
mod rational;
mod sample;

use alloc::string::String;
use core::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use prime::{is_prime_u64, PrimeField, Residue, DEFAULT_PRIME};
pub use rational::{Rational, RationalField};
pub use sample::{derive_seed, Sampler, RNG_ALGORITHM};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} is too large (must be below 2^63)")]
    PrimeTooLarge(u64),
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
    #[error("denominator of {0} is not invertible in the active field")]
    NotRepresentable(String),
    #[error("field too small: need {needed} distinct values but only {available} are available")]
    FieldTooSmall { needed: u64, available: u64 },
    #[error("sampling budget of {0} draws exhausted")]
    BudgetExhausted(usize),
}

/// Which coefficient field a run uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldKind {
    /// The rationals (`qq` on the command line).
    Qq,
    /// A prime field (`fp` on the command line).
    Fp,
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Qq => f.write_str("qq"),
            FieldKind::Fp => f.write_str("fp"),
        }
    }
}

/// Identifies a coefficient field plus the seed used to sample from it.
///
/// Two runs with equal specs and the same request sequence draw identical
/// samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub kind: FieldKind,
    /// Present exactly when `kind` is [`FieldKind::Fp`].
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prime: Option<u64>,
    pub seed: u64,
}

impl FieldSpec {
    pub fn rationals(seed: u64) -> Self {
        FieldSpec { kind: FieldKind::Qq, prime: None, seed }
    }

    /// Fails unless `prime` passes the deterministic primality test.
    pub fn prime_field(prime: u64, seed: u64) -> Result<Self, ScalarError> {
        PrimeField::new(prime)?;
        Ok(FieldSpec { kind: FieldKind::Fp, prime: Some(prime), seed })
    }

    /// Field identity without the seed, as echoed into reports.
    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor { kind: self.kind, prime: self.prime, rng: String::from(RNG_ALGORITHM) }
    }
}

/// The field echo recorded in every report: kind, prime and the PRNG
/// algorithm identifier needed to replay a run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub kind: FieldKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prime: Option<u64>,
    pub rng: String,
}

impl FieldDescriptor {
    /// Same field, regardless of the RNG tag.
    pub fn same_field(&self, other: &FieldDescriptor) -> bool {
        self.kind == other.kind && self.prime == other.prime
    }
}

/// An exact field. Elements are plain values; all arithmetic goes through
/// the field object so that runtime parameters (the prime) stay in one place.
pub trait Field: Clone + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + fmt::Debug + Send + Sync;

    fn kind(&self) -> FieldKind;
    /// `Some(p)` for a prime field, `None` for the rationals.
    fn prime(&self) -> Option<u64>;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    /// Maps a rational into the field; fails when the denominator is not
    /// invertible (prime fields only).
    fn from_rational(&self, q: &Rational) -> Result<Self::Elem, ScalarError>;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, ScalarError>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// One uniformly drawn element (prime field) or a random element of
    /// bounded height (rationals).
    fn random<R: rand_core::RngCore + ?Sized>(&self, rng: &mut R) -> Self::Elem;
    /// Number of elements [`Field::random`] can produce, if finite.
    fn sample_space(&self) -> Option<u64>;

    /// Text form: `p/q` or `p` for rationals, the decimal residue otherwise.
    fn format(&self, a: &Self::Elem) -> String;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, ScalarError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// `a^e` for any integer exponent; negative exponents need `a != 0`.
    fn pow(&self, a: &Self::Elem, e: i64) -> Result<Self::Elem, ScalarError> {
        let base = if e < 0 { self.inv(a)? } else { a.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = self.one();
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &sq);
            }
            k >>= 1;
            if k > 0 {
                sq = self.mul(&sq, &sq);
            }
        }
        Ok(acc)
    }

    /// Σ a_i·b_i. Prime fields override this with lazy reduction.
    fn dot<'a, I>(&self, pairs: I) -> Self::Elem
    where
        I: Iterator<Item = (&'a Self::Elem, &'a Self::Elem)>,
        Self::Elem: 'a,
    {
        let mut acc = self.zero();
        for (a, b) in pairs {
            if self.is_zero(a) || self.is_zero(b) {
                continue;
            }
            acc = self.add(&acc, &self.mul(a, b));
        }
        acc
    }

    /// Parses the text form produced by [`Field::format`] (and, for prime
    /// fields, any rational `p/q` whose denominator is invertible).
    fn parse(&self, s: &str) -> Result<Self::Elem, ScalarError> {
        let q: Rational = s.parse()?;
        self.from_rational(&q)
    }

    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor { kind: self.kind(), prime: self.prime(), rng: String::from(RNG_ALGORITHM) }
    }
}

/// Binary operation selector for [`field_op`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Exact arithmetic dispatch; division by zero is an error, never absorbed.
pub fn field_op<F: Field>(
    f: &F,
    a: &F::Elem,
    b: &F::Elem,
    op: FieldOp,
) -> Result<F::Elem, ScalarError> {
    Ok(match op {
        FieldOp::Add => f.add(a, b),
        FieldOp::Sub => f.sub(a, b),
        FieldOp::Mul => f.mul(a, b),
        FieldOp::Div => f.div(a, b)?,
    })
}
