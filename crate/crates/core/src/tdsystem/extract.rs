use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::closure::restrict;
use super::irreducible::{irreducibility_check, sharp_cyclic_irreducible, BURNSIDE_MAX_DIM};
use crate::appendix::ModuleRealization;
use crate::polykit::{lagrange_idempotents, Echelon, Matrix};
use crate::scalars::Field;

/// A tridiagonal system read off a pair of operators, with every axiom
/// violation found along the way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TdSystem<E> {
    pub dim: usize,
    pub diameter: usize,
    /// First index of the supplied eigenvalue list that occurs.
    pub first: usize,
    /// First index of the supplied dual eigenvalue list that occurs.
    pub first_star: usize,
    pub eigenvalues: Vec<E>,
    pub dual_eigenvalues: Vec<E>,
    pub shape: Vec<usize>,
    pub dual_shape: Vec<usize>,
    /// Empty unless sharp.
    pub split: Vec<E>,
    pub sharp: bool,
    pub irreducible: bool,
    pub irreducibility_method: &'static str,
    pub axiom_failures: Vec<String>,
}

/// Serializable form of [`TdSystem`], scalars rendered as text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TdSystemReport {
    pub dim: usize,
    pub diameter: usize,
    pub eigenvalues: Vec<String>,
    pub dual_eigenvalues: Vec<String>,
    pub shape: Vec<usize>,
    pub dual_shape: Vec<usize>,
    pub split_sequence: Vec<String>,
    pub sharp: bool,
    pub irreducible: bool,
    pub irreducibility_method: String,
    pub axiom_failures: Vec<String>,
}

impl<E: Clone + PartialEq> TdSystem<E> {
    pub fn axioms_hold(&self) -> bool {
        self.axiom_failures.is_empty()
    }

    pub fn report<F: Field<Elem = E>>(&self, f: &F) -> TdSystemReport {
        let fmt = |xs: &[E]| xs.iter().map(|x| f.format(x)).collect();
        TdSystemReport {
            dim: self.dim,
            diameter: self.diameter,
            eigenvalues: fmt(&self.eigenvalues),
            dual_eigenvalues: fmt(&self.dual_eigenvalues),
            shape: self.shape.clone(),
            dual_shape: self.dual_shape.clone(),
            split_sequence: fmt(&self.split),
            sharp: self.sharp,
            irreducible: self.irreducible,
            irreducibility_method: self.irreducibility_method.into(),
            axiom_failures: self.axiom_failures.clone(),
        }
    }
}

/// Indices with nonzero idempotent, if they form an interval.
fn support_interval(ranks: &[usize]) -> Option<(usize, usize)> {
    let first = ranks.iter().position(|&r| r > 0)?;
    let last = ranks.iter().rposition(|&r| r > 0)?;
    ranks[first..=last].iter().all(|&r| r > 0).then_some((first, last))
}

/// Sandwich test `e_i m e_j = 0` for `|i − j| > 1`; returns the offending pairs.
fn sandwich_failures<F: Field>(
    f: &F,
    e: &[Matrix<F::Elem>],
    m: &Matrix<F::Elem>,
) -> Vec<(usize, usize)> {
    let mut bad = Vec::new();
    for (j, ej) in e.iter().enumerate() {
        let mej = m.mul(f, ej);
        for (i, ei) in e.iter().enumerate() {
            if i.abs_diff(j) > 1 && !ei.mul(f, &mej).is_zero(f) {
                bad.push((i, j));
            }
        }
    }
    bad
}

/// Reads a tridiagonal system off `a`, `astar` using the supplied orderings
/// of the candidate eigenvalues.
///
/// Both operators must be annihilated by the product of `x − θ_i` over the
/// supplied list (diagonalizable with eigenvalues among those given). The
/// occurring eigenvalues must form an interval of each list, of a common
/// length `δ + 1`. The sandwich conditions `E*_i A E*_j = 0` and
/// `E_i A* E_j = 0` for `|i − j| > 1` give tridiagonality. The split
/// sequence is defined by `E*_0 τ_i(A) E*_0 = ζ_i E*_0 / Π_{j=1}^{i}(θ*_0 − θ*_j)`,
/// indices relative to the support, with an empty product for `i = 0`.
pub fn extract_td_system<F: Field>(
    f: &F,
    a: &Matrix<F::Elem>,
    astar: &Matrix<F::Elem>,
    theta: &[F::Elem],
    theta_star: &[F::Elem],
) -> TdSystem<F::Elem> {
    let n = a.rows();
    let mut sys = TdSystem {
        dim: n,
        diameter: 0,
        first: 0,
        first_star: 0,
        eigenvalues: Vec::new(),
        dual_eigenvalues: Vec::new(),
        shape: Vec::new(),
        dual_shape: Vec::new(),
        split: Vec::new(),
        sharp: false,
        irreducible: false,
        irreducibility_method: "none",
        axiom_failures: Vec::new(),
    };
    if n == 0 {
        sys.axiom_failures.push("nonzero: the space is zero".into());
        return sys;
    }
    let e = match lagrange_idempotents(f, a, theta) {
        Ok(e) => e,
        Err(err) => {
            sys.axiom_failures.push(format!("diagonalizable/A: {err}"));
            return sys;
        }
    };
    let es = match lagrange_idempotents(f, astar, theta_star) {
        Ok(e) => e,
        Err(err) => {
            sys.axiom_failures.push(format!("diagonalizable/A*: {err}"));
            return sys;
        }
    };
    let ranks: Vec<usize> = e.iter().map(|m| m.rank(f)).collect();
    let ranks_star: Vec<usize> = es.iter().map(|m| m.rank(f)).collect();
    let (Some((r0, r1)), Some((t0, t1))) = (support_interval(&ranks), support_interval(&ranks_star))
    else {
        sys.axiom_failures
            .push(format!("support: eigenvalue ranks {ranks:?} and {ranks_star:?} are not intervals"));
        return sys;
    };
    if r1 - r0 != t1 - t0 {
        sys.axiom_failures.push(format!(
            "diameter: {} eigenvalues but {} dual eigenvalues occur",
            r1 - r0 + 1,
            t1 - t0 + 1
        ));
    }
    let e = &e[r0..=r1];
    let es = &es[t0..=t1];
    sys.diameter = r1 - r0;
    sys.first = r0;
    sys.first_star = t0;
    sys.eigenvalues = theta[r0..=r1].to_vec();
    sys.dual_eigenvalues = theta_star[t0..=t1].to_vec();
    sys.shape = ranks[r0..=r1].to_vec();
    sys.dual_shape = ranks_star[t0..=t1].to_vec();

    for (i, j) in sandwich_failures(f, e, astar) {
        sys.axiom_failures.push(format!("tridiagonal/A*: E_{i} A* E_{j} ≠ 0"));
    }
    for (i, j) in sandwich_failures(f, es, a) {
        sys.axiom_failures.push(format!("tridiagonal/A: E*_{i} A E*_{j} ≠ 0"));
    }

    sys.sharp = sys.dual_shape[0] == 1;
    if sys.sharp {
        match split_sequence(f, a, &sys.eigenvalues, &sys.dual_eigenvalues, &es[0]) {
            Ok(z) => sys.split = z,
            Err(i) => sys
                .axiom_failures
                .push(format!("split: E*_0 τ_{i}(A) E*_0 is not scalar on E*_0 V")),
        }
    }

    let (irreducible, method) = if n <= BURNSIDE_MAX_DIM && (f.prime().is_some() || n <= 8) {
        (irreducibility_check(f, a, astar), "burnside")
    } else if let Some(v) = sharp_cyclic_irreducible(f, a, astar, &es[0]) {
        (v, "sharp-cyclic")
    } else if n <= BURNSIDE_MAX_DIM {
        (irreducibility_check(f, a, astar), "burnside")
    } else {
        (false, "undetermined")
    };
    sys.irreducible = irreducible;
    sys.irreducibility_method = method;
    if !irreducible {
        sys.axiom_failures.push(format!("irreducible: {method} test failed"));
    }
    sys
}

fn split_sequence<F: Field>(
    f: &F,
    a: &Matrix<F::Elem>,
    theta: &[F::Elem],
    theta_star: &[F::Elem],
    e0star: &Matrix<F::Elem>,
) -> Result<Vec<F::Elem>, usize> {
    let n = a.rows();
    let v = (0..n)
        .map(|c| e0star.column(c))
        .find(|c| c.iter().any(|x| !f.is_zero(x)))
        .expect("rank one");
    let p = v.iter().position(|x| !f.is_zero(x)).expect("nonzero");
    let mut u = v.clone();
    let mut denom = f.one();
    let mut split = Vec::with_capacity(theta.len());
    for i in 0..theta.len() {
        if i > 0 {
            // u = τ_i(A) v, built one factor (A − θ_{i−1}) at a time.
            let au = a.apply(f, &u);
            u = au.iter().zip(&u).map(|(x, y)| f.sub(x, &f.mul(&theta[i - 1], y))).collect();
            denom = f.mul(&denom, &f.sub(&theta_star[0], &theta_star[i]));
        }
        let w = e0star.apply(f, &u);
        let c = f.div(&w[p], &v[p]).expect("pivot is nonzero");
        let proportional = w.iter().zip(&v).all(|(x, y)| *x == f.mul(&c, y));
        if !proportional {
            return Err(i);
        }
        split.push(f.mul(&c, &denom));
    }
    Ok(split)
}

/// [`extract_td_system`] on the restriction of a realization to an
/// invariant subspace, with the realization's eigenvalue orderings.
pub fn extract_on_subspace<F: Field>(
    real: &ModuleRealization<F>,
    sub: &Echelon<F::Elem>,
) -> TdSystem<F::Elem> {
    let f = &real.field;
    match (restrict(f, &real.a, sub), restrict(f, &real.astar, sub)) {
        (Some(a), Some(astar)) => extract_td_system(f, &a, &astar, &real.ctx.theta, &real.ctx.theta_star),
        _ => {
            let mut sys = extract_td_system(f, &Matrix::zeros(f, 0, 0), &Matrix::zeros(f, 0, 0), &[], &[]);
            sys.axiom_failures = Vec::from([String::from("invariance: subspace is not invariant")]);
            sys
        }
    }
}
