//! Parameter arrays, their admissibility conditions, and the evaluation
//! points ("contexts") at which module tables are specialized.

mod context;
mod validate;

use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalars::{Field, ScalarError};

pub use context::{derive_context, epsilon, random_admissible_context, SpecializationContext};
pub use validate::{condition, validate_parameter_array, ValidationResult};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("malformed parameter array: {0}")]
    Malformed(String),
    #[error("{which} entries {i} and {j} coincide")]
    NotDistinct { which: &'static str, i: usize, j: usize },
    #[error("not β-recurrent: {0}")]
    NotBetaRecurrent(String),
    #[error("guard violated: {0} = 0")]
    Guard(&'static str),
    #[error("no admissible context after {0} retries")]
    BudgetExhausted(usize),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// `(d; θ_0..θ_d; θ*_0..θ*_d; ζ_0..ζ_d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParameterArray<E> {
    pub d: usize,
    pub theta: Vec<E>,
    pub theta_star: Vec<E>,
    pub zeta: Vec<E>,
}

/// Wire form of a [`ParameterArray`], scalars as `"p/q"` strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawParameterArray {
    pub d: usize,
    pub theta: Vec<String>,
    pub theta_star: Vec<String>,
    pub zeta: Vec<String>,
}

impl<E: Clone> ParameterArray<E> {
    /// Checks that all three lists have `d + 1` entries.
    pub fn new(d: usize, theta: Vec<E>, theta_star: Vec<E>, zeta: Vec<E>) -> Result<Self, ParamError> {
        for (name, v) in [("theta", &theta), ("theta_star", &theta_star), ("zeta", &zeta)] {
            if v.len() != d + 1 {
                return Err(ParamError::Malformed(alloc::format!(
                    "{name} has {} entries, expected {}",
                    v.len(),
                    d + 1
                )));
            }
        }
        Ok(ParameterArray { d, theta, theta_star, zeta })
    }

    pub fn from_raw<F: Field<Elem = E>>(f: &F, raw: &RawParameterArray) -> Result<Self, ParamError> {
        let conv = |name: &str, v: &[String]| -> Result<Vec<E>, ParamError> {
            v.iter()
                .enumerate()
                .map(|(i, s)| {
                    f.parse(s).map_err(|e| ParamError::Malformed(alloc::format!("{name}[{i}]: {e}")))
                })
                .collect()
        };
        ParameterArray::new(
            raw.d,
            conv("theta", &raw.theta)?,
            conv("theta_star", &raw.theta_star)?,
            conv("zeta", &raw.zeta)?,
        )
    }

    pub fn to_raw<F: Field<Elem = E>>(&self, f: &F) -> RawParameterArray {
        let conv = |v: &[E]| v.iter().map(|x| f.format(x)).collect();
        RawParameterArray {
            d: self.d,
            theta: conv(&self.theta),
            theta_star: conv(&self.theta_star),
            zeta: conv(&self.zeta),
        }
    }
}

/// Ratios `(s_{i−2} − s_{i+1}) / (s_{i−1} − s_i)` for `2 ≤ i ≤ d−1`.
pub fn recurrence_ratios<F: Field>(f: &F, seq: &[F::Elem]) -> Result<Vec<F::Elem>, ScalarError> {
    let d = seq.len().saturating_sub(1);
    (2..d)
        .map(|i| f.div(&f.sub(&seq[i - 2], &seq[i + 1]), &f.sub(&seq[i - 1], &seq[i])))
        .collect()
}
