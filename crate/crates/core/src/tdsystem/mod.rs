//! Tridiagonal systems built from parameter arrays.
//!
//! A valid parameter array `(θ, θ*, ζ)` is realized on the bundled module
//! for its `d` with `y_i := ζ_i`. The submodule generated by `φ` is then
//! checked against the tridiagonal-system axioms directly, and its
//! eigenvalue and split sequences are compared with the input.
//!
//! No quotient by a maximal submodule is formed. If the closure of `φ`
//! failed the axioms, that failure is reported as-is.

mod closure;
mod extract;
mod irreducible;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

use crate::appendix::{bundled_table, realize, ModuleRealization, ModuleTable, RealizeError, TableError};
use crate::params::{
    derive_context, random_admissible_context, validate_parameter_array, ParamError, ParameterArray,
    ValidationResult,
};
use crate::polykit::tau;
use crate::report::Check;
use crate::scalars::{Field, Sampler};

pub use closure::{restrict, submodule_closure};
pub use extract::{extract_on_subspace, extract_td_system, TdSystem, TdSystemReport};
pub use irreducible::{burnside_span_dim, irreducibility_check, sharp_cyclic_irreducible, BURNSIDE_MAX_DIM};

#[derive(Debug, Clone, Error)]
pub enum TdError {
    #[error("invalid parameter array: {}", failure_ids(.0))]
    Invalid(ValidationResult),
    #[error(transparent)]
    Param(#[from] ParamError),
    #[error(transparent)]
    Table(#[from] TableError),
    #[error(transparent)]
    Realize(#[from] RealizeError),
    #[error("g_{i} φ ≠ 0")]
    Annihilator { i: usize },
}

fn failure_ids(v: &ValidationResult) -> String {
    let ids: Vec<&str> = v.failures.iter().map(|(c, _)| c.as_str()).collect();
    ids.join(", ")
}

/// `g_i φ` for `1 <= i <= d`, where
/// `g_i = e*_0 τ_i(A) e*_0 − ζ_i / Π_{j=1}^{i}(θ*_0 − θ*_j) · e*_0`.
pub fn annihilator_images<F: Field>(
    real: &ModuleRealization<F>,
    zeta: &[F::Elem],
) -> Vec<Vec<F::Elem>> {
    let f = &real.field;
    let ctx = &real.ctx;
    let phi = real.phi();
    let base = real.estar[0].apply(f, &phi);
    let mut out = Vec::new();
    let mut denom = f.one();
    for i in 1..=real.d {
        denom = f.mul(&denom, &f.sub(&ctx.theta_star[0], &ctx.theta_star[i]));
        let scale = f.div(&zeta[i], &denom).expect("distinct dual eigenvalues");
        let t = tau(f, i, &ctx.theta).expect("i <= d").eval_matrix(f, &real.a);
        let lhs = real.estar[0].apply(f, &t.apply(f, &base));
        out.push(lhs.iter().zip(&base).map(|(x, y)| f.sub(x, &f.mul(&scale, y))).collect());
    }
    out
}

/// Validates `pa`, realizes `table` at `y := ζ`, and confirms `g_i φ = 0`.
pub fn construct_with_table<F: Field>(
    f: &F,
    table: &ModuleTable,
    pa: &ParameterArray<F::Elem>,
) -> Result<ModuleRealization<F>, TdError> {
    let v = validate_parameter_array(f, pa);
    if !v.passed {
        return Err(TdError::Invalid(v));
    }
    let ctx = derive_context(f, &pa.theta, &pa.theta_star, &pa.zeta[1..])?;
    let real = realize(f, table, &ctx)?;
    for (k, g) in annihilator_images(&real, &pa.zeta).iter().enumerate() {
        if g.iter().any(|x| !f.is_zero(x)) {
            return Err(TdError::Annihilator { i: k + 1 });
        }
    }
    Ok(real)
}

/// [`construct_with_table`] on the bundled table for `pa.d`.
pub fn construct_from_params<F: Field>(
    f: &F,
    pa: &ParameterArray<F::Elem>,
) -> Result<ModuleRealization<F>, TdError> {
    construct_with_table(f, &bundled_table(pa.d)?, pa)
}

const MAX_RETRIES: usize = 1000;

/// Draws an admissible context and uses its `y` as `ζ_1..ζ_d`, redrawing
/// until the array passes validation.
pub fn random_parameter_array<F: Field>(
    s: &mut Sampler<'_, F>,
    d: usize,
) -> Result<ParameterArray<F::Elem>, ParamError> {
    let f = s.field();
    for _ in 0..MAX_RETRIES {
        let ctx = random_admissible_context(s, d)?;
        let mut zeta = Vec::from([f.one()]);
        zeta.extend(ctx.y.iter().cloned());
        let pa = ParameterArray::new(d, ctx.theta, ctx.theta_star, zeta)?;
        if validate_parameter_array(f, &pa).passed {
            return Ok(pa);
        }
    }
    Err(ParamError::BudgetExhausted(MAX_RETRIES))
}

#[derive(Debug, Clone)]
pub struct RoundTrip<E> {
    pub closure_dim: usize,
    pub system: Option<TdSystem<E>>,
    pub checks: Vec<Check>,
}

fn same_sequence<F: Field>(f: &F, got: &[F::Elem], want: &[F::Elem]) -> (bool, String) {
    let show = |xs: &[F::Elem]| {
        let v: Vec<String> = xs.iter().map(|x| f.format(x)).collect();
        format!("({})", v.join(", "))
    };
    (got == want, format!("recovered {}, input {}", show(got), show(want)))
}

/// Construct, close `φ`, extract, and compare with the input array.
pub fn roundtrip_with_table<F: Field>(
    f: &F,
    table: &ModuleTable,
    pa: &ParameterArray<F::Elem>,
) -> RoundTrip<F::Elem> {
    let mut checks = Vec::new();
    let real = match construct_with_table(f, table, pa) {
        Ok(r) => r,
        Err(e) => {
            checks.push(Check::fail("tds/construct", format!("{e}")));
            return RoundTrip { closure_dim: 0, system: None, checks };
        }
    };
    checks.push(Check::pass("tds/construct", format!("realized in dimension {}", real.dim())));
    checks.push(Check::pass("tds/annihilator", format!("g_i φ = 0 for 1 ≤ i ≤ {}", pa.d)));

    let span = submodule_closure(f, &[&real.a, &real.astar], &[real.phi()]);
    let full = span.rank() == real.dim();
    checks.push(Check::pass(
        "tds/closure",
        format!(
            "closure of φ has dimension {} of {}{}",
            span.rank(),
            real.dim(),
            if full { "" } else { " (proper submodule)" }
        ),
    ));
    let sys = extract_on_subspace(&real, &span);
    checks.push(Check::new(
        "tds/axioms",
        sys.axioms_hold(),
        if sys.axioms_hold() { "all axioms hold".into() } else { sys.axiom_failures.join("; ") },
    ));
    let degenerate = if sys.diameter == pa.d { "" } else { " (degenerate parameter point)" };
    checks.push(Check::new(
        "tds/diameter",
        sys.diameter == pa.d,
        format!("δ = {}, d = {}{degenerate}", sys.diameter, pa.d),
    ));
    checks.push(Check::new("tds/sharp", sys.sharp, format!("ρ_0 = {}", sys.dual_shape.first().unwrap_or(&0))));
    checks.push(Check::new("tds/irreducible", sys.irreducible, format!("method {}", sys.irreducibility_method)));
    let symmetric = !sys.shape.is_empty()
        && sys.shape == sys.dual_shape
        && (0..sys.shape.len()).all(|i| sys.shape[i] == sys.shape[sys.shape.len() - 1 - i]);
    checks.push(Check::new("tds/shape", symmetric, format!("ρ = {:?}, ρ* = {:?}", sys.shape, sys.dual_shape)));
    let (ok, detail) = same_sequence(f, &sys.eigenvalues, &pa.theta);
    checks.push(Check::new("tds/eigenvalues", ok, detail));
    let (ok, detail) = same_sequence(f, &sys.dual_eigenvalues, &pa.theta_star);
    checks.push(Check::new("tds/dual-eigenvalues", ok, detail));
    let (ok, detail) = same_sequence(f, &sys.split, &pa.zeta);
    checks.push(Check::new("tds/split", ok, detail));
    RoundTrip { closure_dim: span.rank(), system: Some(sys), checks }
}

/// [`roundtrip_with_table`] on the bundled table for `pa.d`.
pub fn roundtrip<F: Field>(f: &F, pa: &ParameterArray<F::Elem>) -> RoundTrip<F::Elem> {
    match bundled_table(pa.d) {
        Ok(t) => roundtrip_with_table(f, &t, pa),
        Err(e) => RoundTrip {
            closure_dim: 0,
            system: None,
            checks: Vec::from([Check::fail("tds/construct", format!("{e}"))]),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{PrimeField, RationalField, DEFAULT_PRIME};

    fn q_array(th: &[i64], ths: &[i64], z: &[i64]) -> ParameterArray<crate::scalars::Rational> {
        let q = RationalField::default();
        let v = |xs: &[i64]| xs.iter().map(|&x| q.from_i64(x)).collect();
        ParameterArray::new(th.len() - 1, v(th), v(ths), v(z)).unwrap()
    }

    #[test]
    fn d1_hand_example() {
        let q = RationalField::default();
        let pa = q_array(&[1, -1], &[1, -1], &[1, 1]);
        let rt = roundtrip(&q, &pa);
        assert!(rt.checks.iter().all(|c| c.passed), "{:?}", rt.checks);
        let sys = rt.system.unwrap();
        assert_eq!(sys.diameter, 1);
        assert_eq!(sys.shape, [1, 1]);
        assert!(sys.sharp);
        assert_eq!(sys.split, pa.zeta);
        assert_eq!(rt.closure_dim, 2);
    }

    #[test]
    fn d0_trivial() {
        let q = RationalField::default();
        let pa = q_array(&[4], &[7], &[1]);
        let real = construct_from_params(&q, &pa).unwrap();
        assert_eq!(real.dim(), 1);
        let rt = roundtrip(&q, &pa);
        assert!(rt.checks.iter().all(|c| c.passed), "{:?}", rt.checks);
    }

    #[test]
    fn zero_zeta_d_rejected() {
        let q = RationalField::default();
        let pa = q_array(&[1, -1], &[1, -1], &[1, 0]);
        match construct_from_params(&q, &pa) {
            Err(TdError::Invalid(v)) => assert!(v.failed(crate::params::condition::ZETA_D)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn random_roundtrips_prime_field() {
        let f = PrimeField::new(DEFAULT_PRIME).unwrap();
        for d in 0..=5 {
            let mut s = Sampler::new(&f, 40 + d as u64);
            let pa = random_parameter_array(&mut s, d).unwrap();
            let rt = roundtrip(&f, &pa);
            assert!(rt.checks.iter().all(|c| c.passed), "d={d}: {:?}", rt.checks);
        }
    }

    #[test]
    fn swapped_eigenvalues_break_tridiagonality() {
        let f = PrimeField::new(DEFAULT_PRIME).unwrap();
        let mut s = Sampler::new(&f, 5);
        let pa = random_parameter_array(&mut s, 3).unwrap();
        let real = construct_from_params(&f, &pa).unwrap();
        let mut theta = pa.theta.clone();
        theta.swap(0, 1);
        let sys = extract_td_system(&f, &real.a, &real.astar, &theta, &pa.theta_star);
        assert!(sys.axiom_failures.iter().any(|m| m.starts_with("tridiagonal/A*")), "{:?}", sys.axiom_failures);
    }
}
