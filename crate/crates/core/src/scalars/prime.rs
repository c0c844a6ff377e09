use alloc::string::{String, ToString};
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use super::rational::uniform_below;
use super::{Field, FieldKind, Rational, ScalarError};

/// 2^62 − 57, the largest prime below 2^62. Residues fit in 62 bits so
/// products fit in a `u128` and fifteen of them can be summed before
/// reducing.
pub const DEFAULT_PRIME: u64 = (1u64 << 62) - 57;

/// A residue `0 <= value < p` for the prime of the owning [`PrimeField`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Residue(pub u64);

impl fmt::Debug for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin; the first twelve prime bases are a proven
/// witness set for every 64-bit integer.
pub fn is_prime_u64(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, ScalarError> {
        if p >= 1 << 63 {
            return Err(ScalarError::PrimeTooLarge(p));
        }
        if !is_prime_u64(p) {
            return Err(ScalarError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce_bigint(&self, n: &BigInt) -> u64 {
        let r = n.mod_floor(&BigInt::from(self.p));
        r.to_u64().expect("residue below p")
    }
}

impl Field for PrimeField {
    type Elem = Residue;

    fn kind(&self) -> FieldKind {
        FieldKind::Fp
    }

    fn prime(&self) -> Option<u64> {
        Some(self.p)
    }

    fn zero(&self) -> Residue {
        Residue(0)
    }

    fn one(&self) -> Residue {
        Residue(1 % self.p)
    }

    fn from_i64(&self, v: i64) -> Residue {
        let m = self.p as i128;
        Residue((v as i128).rem_euclid(m) as u64)
    }

    fn from_rational(&self, q: &Rational) -> Result<Residue, ScalarError> {
        let n = self.reduce_bigint(q.numer());
        let d = self.reduce_bigint(q.denom());
        if d == 0 {
            return Err(ScalarError::NotRepresentable(q.to_string()));
        }
        let di = self.inv(&Residue(d))?;
        Ok(self.mul(&Residue(n), &di))
    }

    fn add(&self, a: &Residue, b: &Residue) -> Residue {
        let s = a.0 + b.0;
        Residue(if s >= self.p { s - self.p } else { s })
    }

    fn sub(&self, a: &Residue, b: &Residue) -> Residue {
        Residue(if a.0 >= b.0 { a.0 - b.0 } else { a.0 + self.p - b.0 })
    }

    fn mul(&self, a: &Residue, b: &Residue) -> Residue {
        Residue(mul_mod(a.0, b.0, self.p))
    }

    fn neg(&self, a: &Residue) -> Residue {
        Residue(if a.0 == 0 { 0 } else { self.p - a.0 })
    }

    fn inv(&self, a: &Residue) -> Result<Residue, ScalarError> {
        if a.0 == 0 {
            return Err(ScalarError::DivisionByZero);
        }
        // Extended Euclid on signed 128-bit values.
        let (mut r0, mut r1) = (self.p as i128, a.0 as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Ok(Residue(t0.rem_euclid(self.p as i128) as u64))
    }

    fn is_zero(&self, a: &Residue) -> bool {
        a.0 == 0
    }

    fn random<R: rand_core::RngCore + ?Sized>(&self, rng: &mut R) -> Residue {
        Residue(uniform_below(rng, self.p))
    }

    fn sample_space(&self) -> Option<u64> {
        Some(self.p)
    }

    fn format(&self, a: &Residue) -> String {
        a.0.to_string()
    }

    fn dot<'a, I>(&self, pairs: I) -> Residue
    where
        I: Iterator<Item = (&'a Residue, &'a Residue)>,
    {
        let m = self.p as u128;
        if self.p < 1 << 62 {
            // Products are below 2^124: a reduced accumulator plus fifteen of them
            // stays below 2^128.
            let mut acc: u128 = 0;
            let mut pending = 0u32;
            for (a, b) in pairs {
                acc += a.0 as u128 * b.0 as u128;
                pending += 1;
                if pending == 15 {
                    acc %= m;
                    pending = 0;
                }
            }
            Residue((acc % m) as u64)
        } else {
            let mut acc = 0u64;
            for (a, b) in pairs {
                acc = self.add(&Residue(acc), &self.mul(a, b)).0;
            }
            Residue(acc)
        }
    }

    fn parse(&self, s: &str) -> Result<Residue, ScalarError> {
        let q: Rational = s.parse()?;
        if q.numer().is_negative() || q.denom() != &BigInt::from(1) {
            return self.from_rational(&q);
        }
        // Plain residues may be written unreduced.
        Ok(Residue(self.reduce_bigint(q.numer())))
    }
}
