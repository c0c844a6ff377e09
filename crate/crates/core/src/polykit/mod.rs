//! Polynomials in one variable and the idempotent calculus for operators
//! with a known split spectrum.

mod idempotent;
mod matrix;
mod poly;

use alloc::string::String;

use thiserror::Error;

use crate::scalars::Field;

pub use idempotent::{
    idempotent_identities, lagrange_idempotents, min_poly_check, IdempotentFailure,
};
pub use matrix::{solve, Echelon, Matrix, SparseColumns};
pub use poly::{build_poly, eta, eta_expansion_check, tau, PolyKind, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("index {index} out of range 0..={d}")]
    IndexOutOfRange { index: usize, d: usize },
    #[error("empty eigenvalue list")]
    Empty,
    #[error("eigenvalues {i} and {j} coincide ({value})")]
    Repeated { i: usize, j: usize, value: String },
    #[error("operator is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    #[error("product of shifted operators is nonzero: rank {rank} of {dim}")]
    MinimalPolynomial { rank: usize, dim: usize },
}

/// Fails on the first pair of equal entries.
pub fn check_distinct<F: Field>(f: &F, seq: &[F::Elem]) -> Result<(), PolyError> {
    for j in 0..seq.len() {
        for i in 0..j {
            if seq[i] == seq[j] {
                return Err(PolyError::Repeated { i, j, value: f.format(&seq[i]) });
            }
        }
    }
    Ok(())
}
