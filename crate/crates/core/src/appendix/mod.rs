//! Action tables of the explicit modules for `d <= 5`, their realization
//! as matrices at a specialization, and the relation checks run on them.
//!
//! # Table format
//!
//! ```text
//! format 1
//! d 1
//! BASIS
//! phi
//! r
//! ACTION A
//! phi : [th0] * phi
//!     + [1] * r
//! r : [th1] * r
//! ACTION ASTAR
//! phi : [ths0] * phi
//! r : [ths1] * r
//!     + [y1] * phi
//! ```
//!
//! One BASIS line per row block. Each entry lists the image of a basis
//! vector, diagonal term first; coefficients use the grammar of
//! [`Expr::parse`]. Lines starting with `#` are ignored.

mod expr;
mod label;
mod realize;
mod table;
mod verify;

pub use expr::{Expr, ExprError, Var};
pub use label::{Label, LabelError, Letter};
pub use realize::{realize, ModuleRealization, RealizeError};
pub use table::{binomial, Action, Entry, ModuleTable, TableError, Term, FORMAT_VERSION};
pub use verify::{mu_certificate, relation_checks, shape_check, triple_product_check};

/// Largest `d` with a bundled table.
pub const MAX_D: usize = 5;

const ASSETS: [&str; MAX_D + 1] = [
    include_str!("../../assets/d0.table"),
    include_str!("../../assets/d1.table"),
    include_str!("../../assets/d2.table"),
    include_str!("../../assets/d3.table"),
    include_str!("../../assets/d4.table"),
    include_str!("../../assets/d5.table"),
];

/// Text of the bundled table for `d`.
pub fn bundled_asset(d: usize) -> Option<&'static str> {
    ASSETS.get(d).copied()
}

/// Parses the bundled table for `d`, checking that it declares that `d`.
pub fn bundled_table(d: usize) -> Result<ModuleTable, TableError> {
    let text = bundled_asset(d)
        .ok_or_else(|| TableError::Structure(alloc::format!("no bundled table for d = {d}")))?;
    let t = ModuleTable::parse(text)?;
    if t.d != d {
        return Err(TableError::Structure(alloc::format!("table declares d = {}, expected {d}", t.d)));
    }
    Ok(t)
}
