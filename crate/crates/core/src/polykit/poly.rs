use alloc::vec;
use alloc::vec::Vec;

use super::{Matrix, PolyError};
use crate::scalars::Field;

/// Dense univariate polynomial, lowest degree first. The coefficient vector
/// is empty for the zero polynomial and otherwise ends in a nonzero entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly<E> {
    coeffs: Vec<E>,
}

impl<E: Clone + PartialEq> UniPoly<E> {
    pub fn from_coeffs<F: Field<Elem = E>>(f: &F, mut coeffs: Vec<E>) -> Self {
        while coeffs.last().is_some_and(|c| f.is_zero(c)) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant<F: Field<Elem = E>>(f: &F, c: E) -> Self {
        UniPoly::from_coeffs(f, vec![c])
    }

    /// `λ − root`.
    pub fn linear<F: Field<Elem = E>>(f: &F, root: &E) -> Self {
        UniPoly::from_coeffs(f, vec![f.neg(root), f.one()])
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic<F: Field<Elem = E>>(&self, f: &F) -> bool {
        self.coeffs.last().is_some_and(|c| f.is_one(c))
    }

    pub fn add<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = f.zero();
        let c = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).unwrap_or(&zero);
                let b = other.coeffs.get(i).unwrap_or(&zero);
                f.add(a, b)
            })
            .collect();
        UniPoly::from_coeffs(f, c)
    }

    pub fn scale<F: Field<Elem = E>>(&self, f: &F, k: &E) -> Self {
        UniPoly::from_coeffs(f, self.coeffs.iter().map(|c| f.mul(c, k)).collect())
    }

    pub fn mul<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return UniPoly::zero();
        }
        let mut c = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] = f.add(&c[i + j], &f.mul(a, b));
            }
        }
        UniPoly::from_coeffs(f, c)
    }

    /// Horner evaluation.
    pub fn eval<F: Field<Elem = E>>(&self, f: &F, x: &E) -> E {
        self.coeffs.iter().rev().fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    /// `p(M)` by Horner's rule.
    pub fn eval_matrix<F: Field<Elem = E>>(&self, f: &F, m: &Matrix<E>) -> Matrix<E> {
        let n = m.rows();
        let mut acc = Matrix::zeros(f, n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(f, m).add(f, &Matrix::scalar(f, n, c));
        }
        acc
    }
}

/// The four product families attached to an eigenvalue sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyKind {
    /// `τ_i = Π_{j<i} (λ − θ_j)`
    Tau,
    /// `η_i = Π_{j<i} (λ − θ_{d−j})`
    Eta,
    /// `τ*_i`, built from the dual sequence.
    TauStar,
    /// `η*_i`, built from the dual sequence.
    EtaStar,
}

/// Roots of `τ_i` (or `τ*_i`) over `seq`: the first `i` entries.
pub fn tau<F: Field>(f: &F, i: usize, seq: &[F::Elem]) -> Result<UniPoly<F::Elem>, PolyError> {
    if i >= seq.len() {
        return Err(PolyError::IndexOutOfRange { index: i, d: seq.len().wrapping_sub(1) });
    }
    Ok(seq[..i]
        .iter()
        .fold(UniPoly::constant(f, f.one()), |acc, t| acc.mul(f, &UniPoly::linear(f, t))))
}

/// Roots of `η_i` (or `η*_i`) over `seq`: the last `i` entries.
pub fn eta<F: Field>(f: &F, i: usize, seq: &[F::Elem]) -> Result<UniPoly<F::Elem>, PolyError> {
    if i >= seq.len() {
        return Err(PolyError::IndexOutOfRange { index: i, d: seq.len().wrapping_sub(1) });
    }
    let d = seq.len() - 1;
    Ok((0..i).fold(UniPoly::constant(f, f.one()), |acc, j| {
        acc.mul(f, &UniPoly::linear(f, &seq[d - j]))
    }))
}

/// Builds `τ_i`, `η_i`, `τ*_i` or `η*_i`; unstarred kinds read `theta`,
/// starred kinds read `theta_star`.
pub fn build_poly<F: Field>(
    f: &F,
    kind: PolyKind,
    i: usize,
    theta: &[F::Elem],
    theta_star: &[F::Elem],
) -> Result<UniPoly<F::Elem>, PolyError> {
    match kind {
        PolyKind::Tau => tau(f, i, theta),
        PolyKind::Eta => eta(f, i, theta),
        PolyKind::TauStar => tau(f, i, theta_star),
        PolyKind::EtaStar => eta(f, i, theta_star),
    }
}

/// Checks `η_d = Σ_{i=0}^{d} η_{d−i}(θ_0)·τ_i` coefficient by coefficient.
pub fn eta_expansion_check<F: Field>(f: &F, theta: &[F::Elem]) -> Result<bool, PolyError> {
    if theta.is_empty() {
        return Err(PolyError::Empty);
    }
    super::check_distinct(f, theta)?;
    let d = theta.len() - 1;
    let lhs = eta(f, d, theta)?;
    let mut rhs = UniPoly::zero();
    for i in 0..=d {
        let c = eta(f, d - i, theta)?.eval(f, &theta[0]);
        rhs = rhs.add(f, &tau(f, i, theta)?.scale(f, &c));
    }
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::RationalField;

    fn ints(f: &RationalField, xs: &[i64]) -> Vec<crate::scalars::Rational> {
        xs.iter().map(|&x| f.from_i64(x)).collect()
    }

    #[test]
    fn tau_zero_is_one() {
        let q = RationalField::default();
        let p = build_poly(&q, PolyKind::Tau, 0, &ints(&q, &[5, 7]), &[]).unwrap();
        assert_eq!(p.coeffs(), &[q.one()]);
    }

    #[test]
    fn tau_two_at_three() {
        let q = RationalField::default();
        let th = ints(&q, &[0, 1, 2]);
        let p = tau(&q, 2, &th).unwrap();
        // λ(λ−1) = λ² − λ
        assert_eq!(p.coeffs(), ints(&q, &[0, -1, 1]).as_slice());
        assert_eq!(p.eval(&q, &q.from_i64(3)), q.from_i64(6));
    }

    #[test]
    fn eta_one_krawtchouk() {
        let q = RationalField::default();
        let th = ints(&q, &[3, 1, -1, -3]);
        let p = build_poly(&q, PolyKind::Eta, 1, &th, &[]).unwrap();
        assert_eq!(p.coeffs(), ints(&q, &[3, 1]).as_slice());
        let ps = build_poly(&q, PolyKind::EtaStar, 1, &[], &th).unwrap();
        assert_eq!(ps, p);
    }

    #[test]
    fn monic_with_exact_degree() {
        let q = RationalField::default();
        let th = ints(&q, &[4, -2, 9, 0, 1]);
        for i in 0..th.len() {
            for kind in [PolyKind::Tau, PolyKind::Eta, PolyKind::TauStar, PolyKind::EtaStar] {
                let p = build_poly(&q, kind, i, &th, &th).unwrap();
                assert_eq!(p.degree(), Some(i));
                assert!(p.is_monic(&q));
            }
        }
    }

    #[test]
    fn index_out_of_range() {
        let q = RationalField::default();
        assert!(matches!(
            tau(&q, 3, &ints(&q, &[1, 2, 3])),
            Err(PolyError::IndexOutOfRange { index: 3, d: 2 })
        ));
    }

    #[test]
    fn eta_expansion_small_cases() {
        let q = RationalField::default();
        assert!(eta_expansion_check(&q, &ints(&q, &[5])).unwrap());
        // η_1 = λ − 1; η_1(0)·τ_0 + η_0(0)·τ_1 = −1 + λ.
        assert!(eta_expansion_check(&q, &ints(&q, &[0, 1])).unwrap());
        assert!(eta_expansion_check(&q, &ints(&q, &[0, 1, 1])).is_err());
    }

    #[test]
    fn matrix_evaluation() {
        let q = RationalField::default();
        let m = Matrix::from_rows(vec![ints(&q, &[1, 1]), ints(&q, &[0, 2])]);
        // (λ−1)(λ−2) annihilates m.
        let p = tau(&q, 2, &ints(&q, &[1, 2, 7])).unwrap();
        assert!(p.eval_matrix(&q, &m).is_zero(&q));
    }
}
