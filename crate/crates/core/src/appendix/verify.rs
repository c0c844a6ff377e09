use alloc::format;
use alloc::vec::Vec;

use super::label::Label;
use super::realize::ModuleRealization;
use super::table::binomial;
use crate::polykit::{eta, tau, Matrix};
use crate::report::Check;
use crate::scalars::Field;

/// Collects one summary check per family plus one failing check per
/// violated instance.
struct Family {
    id: &'static str,
    total: usize,
    failed: Vec<Check>,
}

impl Family {
    fn new(id: &'static str) -> Self {
        Family { id, total: 0, failed: Vec::new() }
    }

    fn record(&mut self, ok: bool, instance: impl FnOnce() -> (alloc::string::String, alloc::string::String)) {
        self.total += 1;
        if !ok {
            let (tag, detail) = instance();
            self.failed.push(Check::fail(format!("{}/{tag}", self.id), detail));
        }
    }

    fn finish(self, out: &mut Vec<Check>) {
        let bad = self.failed.len();
        out.push(Check::new(
            self.id,
            bad == 0,
            format!("{} of {} identities hold", self.total - bad, self.total),
        ));
        out.extend(self.failed);
    }
}

fn idempotent_family<F: Field>(
    f: &F,
    id5: &'static str,
    id6: &'static str,
    id7: &'static str,
    op: &Matrix<F::Elem>,
    theta: &[F::Elem],
    e: &[Matrix<F::Elem>],
    out: &mut Vec<Check>,
) {
    let n = op.rows();
    let mut fam = Family::new(id5);
    for (i, ei) in e.iter().enumerate() {
        for (j, ej) in e.iter().enumerate() {
            let p = ei.mul(f, ej);
            let ok = if i == j { &p == ei } else { p.is_zero(f) };
            fam.record(ok, || (format!("i{i}j{j}"), format!("product of idempotents {i} and {j}")));
        }
    }
    fam.finish(out);

    let mut fam = Family::new(id6);
    let sum = e.iter().fold(Matrix::zeros(f, n, n), |acc, m| acc.add(f, m));
    fam.record(sum.is_identity(f), || ("sum".into(), "idempotents do not sum to I".into()));
    fam.finish(out);

    let mut fam = Family::new(id7);
    let recon = e.iter().zip(theta).fold(Matrix::zeros(f, n, n), |acc, (m, t)| acc.add(f, &m.scale(f, t)));
    fam.record(&recon == op, || ("sum".into(), "Σ θ_i E_i differs from the operator".into()));
    fam.finish(out);
}

/// `left_i · op^k · right_j = 0` for `0 <= k < |i − j|`.
fn sandwich_family<F: Field>(
    f: &F,
    id: &'static str,
    op: &Matrix<F::Elem>,
    left: &[Matrix<F::Elem>],
    right: &[Matrix<F::Elem>],
    out: &mut Vec<Check>,
) {
    let d = left.len() - 1;
    let mut fam = Family::new(id);
    for (i, li) in left.iter().enumerate() {
        let mut lhs = li.clone();
        for k in 0..d {
            for (j, rj) in right.iter().enumerate() {
                if k < i.abs_diff(j) {
                    let ok = lhs.mul(f, rj).is_zero(f);
                    fam.record(ok, || (format!("i{i}j{j}k{k}"), format!("nonzero sandwich at power {k}")));
                }
            }
            if k + 1 < d {
                lhs = lhs.mul(f, op);
            }
        }
    }
    fam.finish(out);
}

/// Every defining relation of the algebra on a realized module:
/// `eq5`–`eq7` for both idempotent families (starred ids end in `*`),
/// `eq8` for `e*_i A^k e*_j` and `eq9` for `e_i A*^k e_j`.
pub fn relation_checks<F: Field>(real: &ModuleRealization<F>) -> Vec<Check> {
    let f = &real.field;
    let mut out = Vec::new();
    idempotent_family(f, "eq5", "eq6", "eq7", &real.a, &real.ctx.theta, &real.e, &mut out);
    idempotent_family(f, "eq5*", "eq6*", "eq7*", &real.astar, &real.ctx.theta_star, &real.estar, &mut out);
    sandwich_family(f, "eq8", &real.a, &real.estar, &real.estar, &mut out);
    sandwich_family(f, "eq9", &real.astar, &real.e, &real.e, &mut out);
    out
}

fn apply_shifted<F: Field>(f: &F, m: &Matrix<F::Elem>, c: &F::Elem, v: &[F::Elem]) -> Vec<F::Elem> {
    let mv = m.apply(f, v);
    mv.iter().zip(v).map(|(x, y)| f.sub(x, &f.mul(c, y))).collect()
}

/// The injectivity certificate: for `1 <= i <= d` the chains
/// `(A − θ_h)r^h = r^{h+1}`, `(A* − θ*_{i−h}) l^h r^i = l^{h+1} r^i`,
/// `(A* − θ*_1) l^{i−1} r^i = y_i φ`, and the resulting identity
/// `e*_0 τ_i(A) e*_0 φ = y_i φ / Π_{j=1}^{i} (θ*_0 − θ*_j)`.
pub fn mu_certificate<F: Field>(real: &ModuleRealization<F>) -> Vec<Check> {
    let f = &real.field;
    let ctx = &real.ctx;
    let mut out = Vec::new();
    let phi = real.phi();
    let vec_of = |l: &Label| real.basis_vector(l);

    let astar_phi = apply_shifted(f, &real.astar, &ctx.theta_star[0], &phi);
    let ok = astar_phi.iter().all(|x| f.is_zero(x)) && real.estar[0].apply(f, &phi) == phi;
    out.push(Check::new("mu/phi", ok, "A*φ = θ*_0 φ and e*_0 φ = φ"));
    if real.d == 0 {
        out.push(Check::pass("mu/vacuous", "d = 0: no indices to certify"));
        return out;
    }

    for i in 1..=real.d {
        let iu = i as u32;
        for h in 0..i {
            let id = format!("mu/i{i}/r{h}");
            let (Some(src), Some(dst)) = (vec_of(&Label::r_power(h as u32)), vec_of(&Label::r_power(h as u32 + 1)))
            else {
                out.push(Check::fail(id, "basis lacks a power of r"));
                continue;
            };
            let ok = apply_shifted(f, &real.a, &ctx.theta[h], &src) == dst;
            out.push(Check::new(id, ok, format!("(A − θ_{h}) r^{h} = r^{}", h + 1)));
        }
        for h in 0..i.saturating_sub(1) {
            let id = format!("mu/i{i}/l{h}");
            let (Some(src), Some(dst)) = (vec_of(&Label::l_r(h as u32, iu)), vec_of(&Label::l_r(h as u32 + 1, iu)))
            else {
                out.push(Check::fail(id, "basis lacks an l-chain label"));
                continue;
            };
            let ok = apply_shifted(f, &real.astar, &ctx.theta_star[i - h], &src) == dst;
            out.push(Check::new(id, ok, format!("(A* − θ*_{}) l^{h} r^{i} = l^{} r^{i}", i - h, h + 1)));
        }
        let id = format!("mu/i{i}/final");
        match vec_of(&Label::l_r(iu - 1, iu)) {
            Some(src) => {
                let want: Vec<_> = phi.iter().map(|x| f.mul(x, ctx.y(i))).collect();
                let ok = apply_shifted(f, &real.astar, &ctx.theta_star[1], &src) == want;
                out.push(Check::new(id, ok, format!("(A* − θ*_1) l^{} r^{i} = y_{i} φ", i - 1)));
            }
            None => out.push(Check::fail(id, "basis lacks the last l-chain label")),
        }

        let mut denom = f.one();
        for j in 1..=i {
            denom = f.mul(&denom, &f.sub(&ctx.theta_star[0], &ctx.theta_star[j]));
        }
        let scale = f.div(ctx.y(i), &denom).expect("distinct dual eigenvalues");
        let poly = tau(f, i, &ctx.theta).expect("i <= d");
        let tau_a = poly.eval_matrix(f, &real.a);
        let lhs = real.estar[0].apply(f, &tau_a.apply(f, &real.estar[0].apply(f, &phi)));
        let rhs: Vec<_> = phi.iter().map(|x| f.mul(x, &scale)).collect();
        out.push(Check::new(
            format!("mu/i{i}/target"),
            lhs == rhs,
            format!("e*_0 τ_{i}(A) e*_0 φ = y_{i}/Π_{{j=1..{i}}}(θ*_0 − θ*_j) φ"),
        ));
    }
    out
}

/// Ranks of the idempotents, with checks that both families have shape
/// `C(d, i)` and that the shape is symmetric and unimodal.
pub fn shape_check<F: Field>(real: &ModuleRealization<F>) -> (Vec<usize>, Vec<usize>, Vec<Check>) {
    let f = &real.field;
    let d = real.d;
    let ranks: Vec<usize> = real.e.iter().map(|m| m.rank(f)).collect();
    let ranks_star: Vec<usize> = real.estar.iter().map(|m| m.rank(f)).collect();
    let expected: Vec<usize> = (0..=d).map(|i| binomial(d, i)).collect();
    let mut out = Vec::new();
    out.push(Check::new("shape/e", ranks == expected, format!("ranks {ranks:?}, expected {expected:?}")));
    out.push(Check::new(
        "shape/e*",
        ranks_star == expected,
        format!("ranks {ranks_star:?}, expected {expected:?}"),
    ));
    let symmetric = ranks == ranks_star && (0..=d).all(|i| ranks[i] == ranks[d - i]);
    out.push(Check::new("shape/symmetric", symmetric, "ρ_i = ρ_{d−i} in both families"));
    let peak = d / 2;
    let unimodal = (0..peak).all(|i| ranks[i] <= ranks[i + 1]) && (peak..d).all(|i| ranks[i] >= ranks[i + 1]);
    out.push(Check::new("shape/unimodal", unimodal, "non-decreasing then non-increasing"));
    (ranks, ranks_star, out)
}

/// With `y := ζ`: `e*_0 e_0 e*_0 φ ≠ 0`, `e*_0 e_d e*_0 φ ≠ 0`, and
/// `e*_0 e_d e*_0 φ = τ_d(θ_d)^{-1} η*_d(θ*_0)^{-1} ζ_d φ`.
pub fn triple_product_check<F: Field>(real: &ModuleRealization<F>) -> Vec<Check> {
    let f = &real.field;
    let ctx = &real.ctx;
    let d = real.d;
    let phi = real.phi();
    let sandwich = |m: &Matrix<F::Elem>| real.estar[0].apply(f, &m.apply(f, &real.estar[0].apply(f, &phi)));
    let nonzero = |v: &[F::Elem]| v.iter().any(|x| !f.is_zero(x));
    let mut out = Vec::new();
    let v0 = sandwich(&real.e[0]);
    out.push(Check::new("triple/e0", nonzero(&v0), "e*_0 e_0 e*_0 φ ≠ 0"));
    let vd = sandwich(&real.e[d]);
    out.push(Check::new("triple/ed", nonzero(&vd), format!("e*_0 e_{d} e*_0 φ ≠ 0")));

    let zeta_d = if d == 0 { f.one() } else { ctx.y(d).clone() };
    let t = tau(f, d, &ctx.theta).expect("d in range").eval(f, &ctx.theta[d]);
    let es = eta(f, d, &ctx.theta_star).expect("d in range").eval(f, &ctx.theta_star[0]);
    let scale = f.div(&zeta_d, &f.mul(&t, &es)).expect("distinct eigenvalues");
    let want: Vec<_> = phi.iter().map(|x| f.mul(x, &scale)).collect();
    out.push(Check::new(
        "triple/formula",
        vd == want,
        format!("e*_0 e_{d} e*_0 φ = τ_{d}(θ_{d})^-1 η*_{d}(θ*_0)^-1 ζ_{d} φ"),
    ));
    out
}
