use alloc::format;
use alloc::vec::Vec;

use super::{recurrence_ratios, ParamError};
use crate::polykit::check_distinct;
use crate::scalars::{Field, Sampler, ScalarError};

/// Concrete values for every scalar an action table may mention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecializationContext<E> {
    pub d: usize,
    pub theta: Vec<E>,
    pub theta_star: Vec<E>,
    /// `y_1..y_d`, stored from index 0.
    pub y: Vec<E>,
    /// Present iff `d >= 3`.
    pub beta: Option<E>,
    /// `ε_0..ε_{d−2}`.
    pub epsilon: Vec<E>,
}

impl<E: Clone> SpecializationContext<E> {
    /// `y_i` for `1 <= i <= d`.
    pub fn y(&self, i: usize) -> &E {
        &self.y[i - 1]
    }

    /// The same context with `y` replaced, e.g. by `ζ_1..ζ_d`.
    pub fn with_y(&self, y: Vec<E>) -> Self {
        assert_eq!(y.len(), self.d);
        SpecializationContext { y, ..self.clone() }
    }
}

/// `ε_i = (θ_{i+1}−θ_{i+2})(θ*_{i+1}−θ*_{i+2}) − (θ_i−θ_{i+1})(θ*_i−θ*_{i+1})`.
pub fn epsilon<F: Field>(f: &F, theta: &[F::Elem], theta_star: &[F::Elem], i: usize) -> F::Elem {
    let step = |k: usize| {
        f.mul(&f.sub(&theta[k], &theta[k + 1]), &f.sub(&theta_star[k], &theta_star[k + 1]))
    };
    f.sub(&step(i + 1), &step(i))
}

fn check_guards<F: Field>(f: &F, d: usize, beta: &F::Elem) -> Result<(), ParamError> {
    let one = f.one();
    if d >= 3 && f.is_zero(&f.add(beta, &one)) {
        return Err(ParamError::Guard("β+1"));
    }
    if d >= 4 && f.is_zero(beta) {
        return Err(ParamError::Guard("β"));
    }
    if d == 5 && f.is_zero(&f.sub(&f.add(&f.mul(beta, beta), beta), &one)) {
        return Err(ParamError::Guard("β²+β−1"));
    }
    Ok(())
}

/// Builds a context from eigenvalue sequences and `y_1..y_d`, deriving `β`
/// and the `ε_i`.
pub fn derive_context<F: Field>(
    f: &F,
    theta: &[F::Elem],
    theta_star: &[F::Elem],
    y: &[F::Elem],
) -> Result<SpecializationContext<F::Elem>, ParamError> {
    if theta.is_empty() || theta.len() != theta_star.len() || y.len() + 1 != theta.len() {
        return Err(ParamError::Malformed(format!(
            "lengths θ={}, θ*={}, y={}",
            theta.len(),
            theta_star.len(),
            y.len()
        )));
    }
    let d = theta.len() - 1;
    let repeat = |which, seq: &[F::Elem]| {
        check_distinct(f, seq).map_err(|e| match e {
            crate::polykit::PolyError::Repeated { i, j, .. } => ParamError::NotDistinct { which, i, j },
            other => ParamError::Malformed(format!("{other}")),
        })
    };
    repeat("θ", theta)?;
    repeat("θ*", theta_star)?;

    let beta = if d >= 3 {
        let r = recurrence_ratios(f, theta)?;
        let rs = recurrence_ratios(f, theta_star)?;
        let c = r[0].clone();
        if let Some(k) = r.iter().position(|x| *x != c) {
            return Err(ParamError::NotBetaRecurrent(format!(
                "θ ratio at i={} is {}, at i=2 is {}",
                k + 2,
                f.format(&r[k]),
                f.format(&c)
            )));
        }
        if let Some(k) = rs.iter().position(|x| *x != c) {
            return Err(ParamError::NotBetaRecurrent(format!(
                "θ* ratio at i={} is {}, θ ratio is {}",
                k + 2,
                f.format(&rs[k]),
                f.format(&c)
            )));
        }
        let b = f.sub(&c, &f.one());
        check_guards(f, d, &b)?;
        Some(b)
    } else {
        None
    };
    let epsilon = (0..d.saturating_sub(1)).map(|i| epsilon(f, theta, theta_star, i)).collect();
    Ok(SpecializationContext {
        d,
        theta: theta.to_vec(),
        theta_star: theta_star.to_vec(),
        y: y.to_vec(),
        beta,
        epsilon,
    })
}

const MAX_RETRIES: usize = 1000;

/// Extends `s_0, s_1, s_2` by `s_{i+1} = s_{i−2} + (β+1)(s_i − s_{i−1})`.
fn extend<F: Field>(f: &F, beta: &F::Elem, start: Vec<F::Elem>, d: usize) -> Vec<F::Elem> {
    let b1 = f.add(beta, &f.one());
    let mut s = start;
    while s.len() < d + 1 {
        let i = s.len() - 1;
        let next = f.add(&s[i - 2], &f.mul(&b1, &f.sub(&s[i], &s[i - 1])));
        s.push(next);
    }
    s.truncate(d + 1);
    s
}

fn sample_sequence<F: Field>(
    s: &mut Sampler<'_, F>,
    d: usize,
    beta: Option<&F::Elem>,
) -> Result<Vec<F::Elem>, ScalarError> {
    match beta {
        None => s.sample_distinct(d + 1, &[]),
        Some(b) => {
            let start = s.sample_distinct(3, &[])?;
            Ok(extend(s.field(), b, start, d))
        }
    }
}

/// Rejection-samples a context satisfying every admissibility guard. For
/// `d >= 3`, `β` is drawn first and both sequences are generated by the
/// three-term recurrence. All `y_i` are nonzero.
pub fn random_admissible_context<F: Field>(
    s: &mut Sampler<'_, F>,
    d: usize,
) -> Result<SpecializationContext<F::Elem>, ParamError> {
    let f = s.field();
    for _ in 0..MAX_RETRIES {
        let beta = if d >= 3 {
            let b = s.sample();
            if check_guards(f, d, &b).is_err() {
                continue;
            }
            Some(b)
        } else {
            None
        };
        let theta = sample_sequence(s, d, beta.as_ref())?;
        let theta_star = sample_sequence(s, d, beta.as_ref())?;
        let y = (0..d).map(|_| s.sample_nonzero()).collect::<Result<Vec<_>, _>>()?;
        match derive_context(f, &theta, &theta_star, &y) {
            Ok(ctx) => return Ok(ctx),
            Err(ParamError::NotDistinct { .. } | ParamError::Guard(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(ParamError::BudgetExhausted(MAX_RETRIES))
}
