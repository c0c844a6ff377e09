use alloc::vec::Vec;

use super::{check_distinct, Matrix, PolyError};
use crate::scalars::Field;

/// Checks `Π_i (A − θ_i I) = 0`, returning the rank of the product when it
/// does not vanish.
pub fn min_poly_check<F: Field>(
    f: &F,
    a: &Matrix<F::Elem>,
    theta: &[F::Elem],
) -> Result<(), PolyError> {
    let (prefix, _) = shifted_products(f, a, theta, false);
    let full = prefix.last().expect("prefix includes the identity");
    if full.is_zero(f) {
        Ok(())
    } else {
        Err(PolyError::MinimalPolynomial { rank: full.rank(f), dim: a.rows() })
    }
}

/// Prefix products `Π_{j<k}` and (optionally) suffix products `Π_{j>k}` of
/// the shifted operators `A − θ_j I`.
fn shifted_products<F: Field>(
    f: &F,
    a: &Matrix<F::Elem>,
    theta: &[F::Elem],
    with_suffix: bool,
) -> (Vec<Matrix<F::Elem>>, Vec<Matrix<F::Elem>>) {
    let n = a.rows();
    let shifted: Vec<_> = theta.iter().map(|t| a.shift(f, t)).collect();
    let mut prefix = Vec::with_capacity(theta.len() + 1);
    prefix.push(Matrix::identity(f, n));
    for s in &shifted {
        let next = prefix.last().expect("nonempty").mul(f, s);
        prefix.push(next);
    }
    let mut suffix = Vec::new();
    if with_suffix {
        // suffix[k] = Π_{j>k}; built right to left.
        suffix = alloc::vec![Matrix::identity(f, n); theta.len()];
        for k in (0..theta.len().saturating_sub(1)).rev() {
            suffix[k] = shifted[k + 1].mul(f, &suffix[k + 1]);
        }
    }
    (prefix, suffix)
}

/// Primitive idempotents `E_i = Π_{j≠i} (A − θ_j I)/(θ_i − θ_j)`.
///
/// The minimal-polynomial identity is checked before any idempotent is
/// formed.
pub fn lagrange_idempotents<F: Field>(
    f: &F,
    a: &Matrix<F::Elem>,
    theta: &[F::Elem],
) -> Result<Vec<Matrix<F::Elem>>, PolyError> {
    if !a.is_square() {
        return Err(PolyError::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    if theta.is_empty() {
        return Err(PolyError::Empty);
    }
    check_distinct(f, theta)?;
    let (prefix, suffix) = shifted_products(f, a, theta, true);
    let full = prefix.last().expect("nonempty");
    if !full.is_zero(f) {
        return Err(PolyError::MinimalPolynomial { rank: full.rank(f), dim: a.rows() });
    }
    let mut out = Vec::with_capacity(theta.len());
    for i in 0..theta.len() {
        let mut denom = f.one();
        for (j, t) in theta.iter().enumerate() {
            if j != i {
                denom = f.mul(&denom, &f.sub(&theta[i], t));
            }
        }
        let c = f.inv(&denom).expect("distinct eigenvalues");
        out.push(prefix[i].mul(f, &suffix[i]).scale(f, &c));
    }
    Ok(out)
}

/// Failure of one of the idempotent identities, as reported by
/// [`idempotent_identities`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdempotentFailure {
    Product { i: usize, j: usize },
    Completeness,
    Reconstruction,
}

/// Checks `E_iE_j = δ_ij E_i`, `Σ E_i = I` and `A = Σ θ_i E_i`.
pub fn idempotent_identities<F: Field>(
    f: &F,
    a: &Matrix<F::Elem>,
    theta: &[F::Elem],
    e: &[Matrix<F::Elem>],
) -> Vec<IdempotentFailure> {
    let n = a.rows();
    let mut failures = Vec::new();
    for (i, ei) in e.iter().enumerate() {
        for (j, ej) in e.iter().enumerate() {
            let p = ei.mul(f, ej);
            let ok = if i == j { &p == ei } else { p.is_zero(f) };
            if !ok {
                failures.push(IdempotentFailure::Product { i, j });
            }
        }
    }
    let mut sum = Matrix::zeros(f, n, n);
    let mut recon = Matrix::zeros(f, n, n);
    for (ei, t) in e.iter().zip(theta) {
        sum = sum.add(f, ei);
        recon = recon.add(f, &ei.scale(f, t));
    }
    if !sum.is_identity(f) {
        failures.push(IdempotentFailure::Completeness);
    }
    if &recon != a {
        failures.push(IdempotentFailure::Reconstruction);
    }
    failures
}
