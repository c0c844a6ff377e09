use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

use super::label::Label;
use super::table::{binomial, Action, ModuleTable};
use crate::params::SpecializationContext;
use crate::polykit::{lagrange_idempotents, Matrix, PolyError};
use crate::scalars::{Field, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizeError {
    #[error("table has d = {table}, context has d = {context}")]
    DimensionMismatch { table: usize, context: usize },
    #[error("{action}.{entry}: coefficient of {target}: {error}")]
    Evaluation { action: String, entry: String, target: String, error: ScalarError },
    #[error("idempotents of {operator}: {error}")]
    Idempotents { operator: &'static str, error: PolyError },
    #[error("{operator}: eigenspace {i} has dimension {got}, expected {expected}")]
    EigenspaceDimension { operator: &'static str, i: usize, got: usize, expected: usize },
}

impl RealizeError {
    /// Short stable identifier for reports.
    pub fn check_id(&self) -> &'static str {
        match self {
            RealizeError::DimensionMismatch { .. } => "realize/dimension",
            RealizeError::Evaluation { .. } => "realize/evaluate",
            RealizeError::Idempotents { operator: "A", .. } => "realize/eq12",
            RealizeError::Idempotents { .. } => "realize/eq12*",
            RealizeError::EigenspaceDimension { .. } => "realize/shape",
        }
    }
}

/// A table evaluated at a context: exact matrices for `a`, `a*` and their
/// primitive idempotents. Matrices act on column vectors indexed by the
/// table basis.
#[derive(Debug, Clone)]
pub struct ModuleRealization<F: Field> {
    pub field: F,
    pub d: usize,
    pub ctx: SpecializationContext<F::Elem>,
    pub labels: Vec<Label>,
    pub a: Matrix<F::Elem>,
    pub astar: Matrix<F::Elem>,
    pub e: Vec<Matrix<F::Elem>>,
    pub estar: Vec<Matrix<F::Elem>>,
}

impl<F: Field> ModuleRealization<F> {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn index_of(&self, l: &Label) -> Option<usize> {
        self.labels.iter().position(|x| x == l)
    }

    /// Coordinate vector of a basis label.
    pub fn basis_vector(&self, l: &Label) -> Option<Vec<F::Elem>> {
        let i = self.index_of(l)?;
        let f = &self.field;
        Some((0..self.dim()).map(|k| if k == i { f.one() } else { f.zero() }).collect())
    }

    pub fn phi(&self) -> Vec<F::Elem> {
        self.basis_vector(&Label::phi()).expect("phi is a basis label")
    }
}

fn assemble<F: Field>(
    f: &F,
    table: &ModuleTable,
    action: Action,
    ctx: &SpecializationContext<F::Elem>,
    labels: &[Label],
) -> Result<Matrix<F::Elem>, RealizeError> {
    let n = labels.len();
    let mut m = Matrix::zeros(f, n, n);
    for (col, entry) in table.entries(action).iter().enumerate() {
        for t in &entry.terms {
            let row = labels.iter().position(|l| *l == t.target).expect("checked by parser");
            let v = t.coeff.evaluate(f, ctx).map_err(|error| RealizeError::Evaluation {
                action: format!("{action}"),
                entry: format!("{}", entry.source),
                target: format!("{}", t.target),
                error,
            })?;
            m.set(row, col, v);
        }
    }
    Ok(m)
}

/// Builds `A`, `A*` column by column and derives both idempotent families.
///
/// Fails if either minimal-polynomial identity fails or an eigenspace has
/// the wrong dimension, which is how transcription errors surface.
pub fn realize<F: Field>(
    f: &F,
    table: &ModuleTable,
    ctx: &SpecializationContext<F::Elem>,
) -> Result<ModuleRealization<F>, RealizeError> {
    if table.d != ctx.d {
        return Err(RealizeError::DimensionMismatch { table: table.d, context: ctx.d });
    }
    let labels: Vec<Label> = table.basis().cloned().collect();
    let a = assemble(f, table, Action::A, ctx, &labels)?;
    let astar = assemble(f, table, Action::AStar, ctx, &labels)?;
    let e = lagrange_idempotents(f, &a, &ctx.theta)
        .map_err(|error| RealizeError::Idempotents { operator: "A", error })?;
    let estar = lagrange_idempotents(f, &astar, &ctx.theta_star)
        .map_err(|error| RealizeError::Idempotents { operator: "A*", error })?;
    for (operator, family) in [("A", &e), ("A*", &estar)] {
        for (i, m) in family.iter().enumerate() {
            let got = m.rank(f);
            let expected = binomial(table.d, i);
            if got != expected {
                return Err(RealizeError::EigenspaceDimension { operator, i, got, expected });
            }
        }
    }
    Ok(ModuleRealization { field: f.clone(), d: table.d, ctx: ctx.clone(), labels, a, astar, e, estar })
}
