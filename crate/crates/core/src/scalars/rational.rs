use alloc::string::{String, ToString};
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Field, FieldKind, ScalarError};

/// A rational number in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(pub BigRational);

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Result<Self, ScalarError> {
        if denom == 0 {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom))))
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Re-reduces the fraction; a no-op on values built through this type.
    pub fn normalized(&self) -> Self {
        Rational(BigRational::new(self.numer().clone(), self.denom().clone()))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let bad = || ScalarError::Parse(String::from(s));
        let (n, d) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Rational(BigRational::new(n, d)))
    }
}

/// The field of rationals.
///
/// Random elements are `n/m` with `|n| <= height` and `1 <= m <= max_denom`;
/// small heights keep exact matrix arithmetic on 32×32 operators tractable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalField {
    pub height: u32,
    pub max_denom: u32,
}

impl Default for RationalField {
    fn default() -> Self {
        RationalField { height: 40, max_denom: 5 }
    }
}

pub(crate) fn uniform_below<R: rand_core::RngCore + ?Sized>(rng: &mut R, n: u64) -> u64 {
    debug_assert!(n > 0);
    let zone = u64::MAX - (u64::MAX % n);
    loop {
        let v = rng.next_u64();
        if v < zone {
            return v % n;
        }
    }
}

impl Field for RationalField {
    type Elem = Rational;

    fn kind(&self) -> FieldKind {
        FieldKind::Qq
    }

    fn prime(&self) -> Option<u64> {
        None
    }

    fn zero(&self) -> Rational {
        Rational(BigRational::zero())
    }

    fn one(&self) -> Rational {
        Rational(BigRational::one())
    }

    fn from_i64(&self, v: i64) -> Rational {
        Rational::from_integer(v)
    }

    fn from_rational(&self, q: &Rational) -> Result<Rational, ScalarError> {
        Ok(q.clone())
    }

    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        Rational(&a.0 + &b.0)
    }

    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        Rational(&a.0 - &b.0)
    }

    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        Rational(&a.0 * &b.0)
    }

    fn neg(&self, a: &Rational) -> Rational {
        Rational(-&a.0)
    }

    fn inv(&self, a: &Rational) -> Result<Rational, ScalarError> {
        if a.0.is_zero() {
            Err(ScalarError::DivisionByZero)
        } else {
            Ok(Rational(a.0.recip()))
        }
    }

    fn is_zero(&self, a: &Rational) -> bool {
        a.0.is_zero()
    }

    fn is_one(&self, a: &Rational) -> bool {
        a.0.is_one()
    }

    fn random<R: rand_core::RngCore + ?Sized>(&self, rng: &mut R) -> Rational {
        let h = u64::from(self.height);
        let n = uniform_below(rng, 2 * h + 1) as i64 - h as i64;
        let m = 1 + uniform_below(rng, u64::from(self.max_denom.max(1))) as i64;
        Rational(BigRational::new(BigInt::from(n), BigInt::from(m)))
    }

    fn sample_space(&self) -> Option<u64> {
        None
    }

    fn format(&self, a: &Rational) -> String {
        a.to_string()
    }

    fn dot<'a, I>(&self, pairs: I) -> Rational
    where
        I: Iterator<Item = (&'a Rational, &'a Rational)>,
    {
        // Accumulate over a common denominator, reduce once at the end.
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for (a, b) in pairs {
            if a.0.is_zero() || b.0.is_zero() {
                continue;
            }
            let pn = a.0.numer() * b.0.numer();
            let pd = a.0.denom() * b.0.denom();
            if pd == den {
                num += pn;
            } else if pd.is_one() {
                num += pn * &den;
            } else {
                num = num * &pd + pn * &den;
                den *= pd;
            }
        }
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        Rational(BigRational::new(num, den))
    }
}
