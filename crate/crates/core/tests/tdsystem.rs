use tdpair_core::appendix::{bundled_table, realize};
use tdpair_core::params::{random_admissible_context, validate_parameter_array, ParameterArray};
use tdpair_core::polykit::{lagrange_idempotents, tau, Matrix};
use tdpair_core::scalars::{Field, PrimeField, Rational, RationalField, Sampler, DEFAULT_PRIME};
use tdpair_core::tdsystem::{
    burnside_span_dim, construct_from_params, extract_td_system, irreducibility_check, random_parameter_array,
    roundtrip, sharp_cyclic_irreducible, submodule_closure,
};

fn q_ints(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| Rational::from_integer(x)).collect()
}

/// `A = diag(3, 1, −1, −3)` and the 4×4 Sylvester–Kac matrix, a Leonard
/// pair with both eigenvalue sequences `(3, 1, −1, −3)`.
fn krawtchouk_pair(q: &RationalField) -> (Matrix<Rational>, Matrix<Rational>) {
    let a = Matrix::from_fn(4, 4, |r, c| if r == c { q.from_i64(3 - 2 * r as i64) } else { q.zero() });
    let kac = [[0, 3, 0, 0], [1, 0, 2, 0], [0, 2, 0, 1], [0, 0, 3, 0]];
    let astar = Matrix::from_fn(4, 4, |r, c| q.from_i64(kac[r][c]));
    (a, astar)
}

#[test]
fn krawtchouk_leonard_pair() {
    let q = RationalField::default();
    let (a, astar) = krawtchouk_pair(&q);
    let k = q_ints(&[3, 1, -1, -3]);
    let sys = extract_td_system(&q, &a, &astar, &k, &k);
    assert!(sys.axioms_hold(), "{:?}", sys.axiom_failures);
    assert_eq!(sys.diameter, 3);
    assert_eq!(sys.shape, [1, 1, 1, 1]);
    assert!(sys.sharp && sys.irreducible);
    assert_eq!(sys.split[0], q.one());

    // The split sequence, recomputed from full matrix products.
    let es = lagrange_idempotents(&q, &astar, &k).unwrap();
    let mut denom = q.one();
    for i in 0..=3 {
        if i > 0 {
            denom = q.mul(&denom, &q.sub(&k[0], &k[i]));
        }
        let m = es[0].mul(&q, &tau(&q, i, &k).unwrap().eval_matrix(&q, &a)).mul(&q, &es[0]);
        let want = q.div(&sys.split[i], &denom).unwrap();
        assert_eq!(m, es[0].scale(&q, &want), "i = {i}");
    }

    // A sharp system's own parameter array satisfies the conditions.
    let pa = ParameterArray::new(3, k.clone(), k.clone(), sys.split.clone()).unwrap();
    let v = validate_parameter_array(&q, &pa);
    assert!(v.passed, "{:?}", v.failures);
    assert_eq!(v.beta.as_deref(), Some("2"));
}

#[test]
fn reordered_eigenvalues_are_not_tridiagonal() {
    let q = RationalField::default();
    let (a, astar) = krawtchouk_pair(&q);
    let k = q_ints(&[3, 1, -1, -3]);
    let mut bad = k.clone();
    bad.swap(0, 1);
    let sys = extract_td_system(&q, &a, &astar, &bad, &k);
    assert!(sys.axiom_failures.iter().any(|m| m.starts_with("tridiagonal/A*")), "{:?}", sys.axiom_failures);

    let f = PrimeField::new(DEFAULT_PRIME).unwrap();
    let pa = random_parameter_array(&mut Sampler::new(&f, 8), 3).unwrap();
    let real = construct_from_params(&f, &pa).unwrap();
    let mut theta = pa.theta.clone();
    theta.swap(0, 1);
    let sys = extract_td_system(&f, &real.a, &real.astar, &theta, &pa.theta_star);
    assert!(!sys.axioms_hold());
    assert!(sys.axiom_failures.iter().any(|m| m.starts_with("tridiagonal/A*")), "{:?}", sys.axiom_failures);
}

#[test]
fn wrong_spectrum_is_not_diagonalizable() {
    let q = RationalField::default();
    let (a, astar) = krawtchouk_pair(&q);
    let k = q_ints(&[3, 1, -1, -3]);
    let sys = extract_td_system(&q, &a, &astar, &k, &q_ints(&[3, 1, -1, 5]));
    assert!(sys.axiom_failures[0].starts_with("diagonalizable/A*"), "{:?}", sys.axiom_failures);
}

#[test]
fn irreducibility_tests_agree_on_realized_modules() {
    let f = PrimeField::new(DEFAULT_PRIME).unwrap();
    for d in 1..=4 {
        let table = bundled_table(d).unwrap();
        for seed in 0..3 {
            let ctx = random_admissible_context(&mut Sampler::new(&f, 100 + seed), d).unwrap();
            let real = realize(&f, &table, &ctx).unwrap();
            let burnside = irreducibility_check(&f, &real.a, &real.astar);
            let cyclic = sharp_cyclic_irreducible(&f, &real.a, &real.astar, &real.estar[0]);
            assert_eq!(cyclic, Some(burnside), "d={d} seed={seed}");
        }
    }
}

#[test]
fn irreducibility_tests_agree_on_a_reducible_pair() {
    // Block upper triangular: span(e_0) is invariant.
    let f = PrimeField::new(DEFAULT_PRIME).unwrap();
    let a = Matrix::from_rows(vec![
        vec![f.from_i64(1), f.from_i64(1), f.zero()],
        vec![f.zero(), f.from_i64(2), f.from_i64(1)],
        vec![f.zero(), f.zero(), f.from_i64(3)],
    ]);
    let astar = Matrix::from_rows(vec![
        vec![f.from_i64(5), f.from_i64(2), f.from_i64(7)],
        vec![f.zero(), f.from_i64(4), f.zero()],
        vec![f.zero(), f.from_i64(1), f.from_i64(6)],
    ]);
    assert!(burnside_span_dim(&f, &a, &astar) < 9);
    assert!(!irreducibility_check(&f, &a, &astar));
    let es = lagrange_idempotents(&f, &astar, &[f.from_i64(5), f.from_i64(4), f.from_i64(6)]).unwrap();
    assert_eq!(sharp_cyclic_irreducible(&f, &a, &astar, &es[0]), Some(false));
    let inv = submodule_closure(&f, &[&a, &astar], &[vec![f.one(), f.zero(), f.zero()]]);
    assert_eq!(inv.rank(), 1);
}

#[test]
fn random_three_dimensional_pair_spans_nine() {
    let f = PrimeField::new(DEFAULT_PRIME).unwrap();
    let mut s = Sampler::new(&f, 3);
    let mut m = || Matrix::from_fn(3, 3, |_, _| s.sample());
    let (a, astar) = (m(), m());
    assert_eq!(burnside_span_dim(&f, &a, &astar), 9);
}

#[test]
fn closure_is_idempotent() {
    let f = PrimeField::new(DEFAULT_PRIME).unwrap();
    let ctx = random_admissible_context(&mut Sampler::new(&f, 1), 3).unwrap();
    let real = realize(&f, &bundled_table(3).unwrap(), &ctx).unwrap();
    let e1 = real.e[1].apply(&f, &real.phi());
    let once = submodule_closure(&f, &[&real.a, &real.astar], &[e1]);
    let twice = submodule_closure(&f, &[&real.a, &real.astar], once.basis());
    assert_eq!(once.rank(), twice.rank());
    for b in twice.basis() {
        assert!(once.contains(&f, b));
    }
    for b in once.basis() {
        for m in [&real.a, &real.astar] {
            assert!(once.contains(&f, &m.apply(&f, b)));
        }
    }
}

#[test]
fn full_module_at_generic_point_is_a_sharp_system() {
    let f = PrimeField::new(DEFAULT_PRIME).unwrap();
    for d in 0..=5 {
        let ctx = random_admissible_context(&mut Sampler::new(&f, 77), d).unwrap();
        let real = realize(&f, &bundled_table(d).unwrap(), &ctx).unwrap();
        let sys = extract_td_system(&f, &real.a, &real.astar, &ctx.theta, &ctx.theta_star);
        assert!(sys.axioms_hold(), "d={d}: {:?}", sys.axiom_failures);
        assert!(sys.sharp);
        let binom: Vec<usize> = (0..=d).map(|i| tdpair_core::appendix::binomial(d, i)).collect();
        assert_eq!(sys.shape, binom);
        let mut want = vec![f.one()];
        want.extend(ctx.y.iter().cloned());
        assert_eq!(sys.split, want, "d = {d}");
    }
}

#[test]
fn roundtrips_over_both_fields() {
    let f = PrimeField::new(DEFAULT_PRIME).unwrap();
    let q = RationalField::default();
    for d in 0..=5 {
        for seed in 0..3 {
            let pa = random_parameter_array(&mut Sampler::new(&f, seed), d).unwrap();
            let rt = roundtrip(&f, &pa);
            assert!(rt.checks.iter().all(|c| c.passed), "fp d={d}: {:?}", rt.checks);
        }
    }
    for d in 0..=3 {
        let pa = random_parameter_array(&mut Sampler::new(&q, 1), d).unwrap();
        let rt = roundtrip(&q, &pa);
        assert!(rt.checks.iter().all(|c| c.passed), "qq d={d}: {:?}", rt.checks);
        let sys = rt.system.unwrap();
        let report = sys.report(&q);
        let back: Vec<Rational> = report.split_sequence.iter().map(|s| q.parse(s).unwrap()).collect();
        assert_eq!(back, pa.zeta);
    }
}

#[test]
fn krawtchouk_array_roundtrips() {
    let q = RationalField::default();
    let k = q_ints(&[3, 1, -1, -3]);
    let pa = ParameterArray::new(3, k.clone(), k, q_ints(&[1, 0, 0, 5])).unwrap();
    let rt = roundtrip(&q, &pa);
    assert!(rt.checks.iter().all(|c| c.passed), "{:?}", rt.checks);
    assert_eq!(rt.system.unwrap().shape, [1, 3, 3, 1]);
}
