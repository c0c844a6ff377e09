//! One PASS/FAIL line per acceptance criterion. Exits nonzero on any FAIL.

use std::time::Instant;

use tdpair_core::appendix::{bundled_table, mu_certificate, realize, relation_checks, ModuleRealization, ModuleTable};
use tdpair_core::params::{
    condition, epsilon, random_admissible_context, validate_parameter_array, ParameterArray,
};
use tdpair_core::polykit::eta_expansion_check;
use tdpair_core::report::Check;
use tdpair_core::scalars::{derive_seed, Field, PrimeField, Rational, RationalField, Sampler, DEFAULT_PRIME};
use tdpair_core::tdsystem::{random_parameter_array, roundtrip};
use tdpair_core::zigzag::{enumerate_convex_spanning, enumerate_feasible, feasible_rank_test};

const SEED: u64 = 0;
const FP_TRIALS: usize = 20;
const QQ_TRIALS: usize = 2;

fn stream(d: usize, trial: usize) -> u64 {
    ((d as u64) << 32) | trial as u64
}

fn realization<F: Field>(f: &F, table: &ModuleTable, trial: usize) -> Result<ModuleRealization<F>, String> {
    let mut s = Sampler::new(f, derive_seed(SEED, stream(table.d, trial)));
    let ctx = random_admissible_context(&mut s, table.d).map_err(|e| e.to_string())?;
    realize(f, table, &ctx).map_err(|e| e.to_string())
}

fn first_failure(checks: &[Check]) -> Option<&Check> {
    checks.iter().find(|c| !c.passed)
}

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

/// Criteria 1 and 2 share their trials.
fn relations_and_certificate() -> (Outcome, Outcome) {
    let fp = PrimeField::new(DEFAULT_PRIME).unwrap();
    let qq = RationalField::default();
    let (mut rel_n, mut mu_n) = (0usize, 0usize);
    let mut rel_bad = Vec::new();
    let mut mu_bad = Vec::new();
    let mut run = |label: &str, d: usize, t: usize, real: Result<(Vec<Check>, Vec<Check>), String>| match real {
        Ok((rel, mu)) => {
            rel_n += rel.len();
            mu_n += mu.len();
            if let Some(c) = first_failure(&rel) {
                rel_bad.push(format!("{label} d{d} t{t} {}", c.id));
            }
            if let Some(c) = first_failure(&mu) {
                mu_bad.push(format!("{label} d{d} t{t} {}", c.id));
            }
        }
        Err(e) => rel_bad.push(format!("{label} d{d} t{t}: {e}")),
    };
    for d in 0..=5 {
        let table = bundled_table(d).unwrap();
        for t in 0..FP_TRIALS {
            run("fp", d, t, realization(&fp, &table, t).map(|r| (relation_checks(&r), mu_certificate(&r))));
        }
        for t in 0..QQ_TRIALS {
            run("qq", d, t, realization(&qq, &table, t).map(|r| (relation_checks(&r), mu_certificate(&r))));
        }
    }
    let rel = outcome(
        rel_bad.is_empty() && rel_n > 0,
        format!("{rel_n} relation checks over d=0..5, {FP_TRIALS} fp + {QQ_TRIALS} qq trials each; failures {rel_bad:?}"),
    );
    let mu = outcome(mu_bad.is_empty() && mu_n > 0, format!("{mu_n} certificate checks; failures {mu_bad:?}"));
    (rel, mu)
}

fn mutation_test() -> Outcome {
    let f = PrimeField::new(DEFAULT_PRIME).unwrap();
    let table = bundled_table(3).unwrap();
    let positions = table.term_positions();
    let mut worst = (FP_TRIALS, String::new());
    for &(action, entry, term) in &positions {
        let bad = table.with_negated_term(action, entry, term);
        let caught = (0..FP_TRIALS)
            .filter(|&t| match realization(&f, &bad, t) {
                Err(_) => true,
                Ok(r) => first_failure(&relation_checks(&r)).is_some(),
            })
            .count();
        if caught < worst.0 {
            worst = (caught, format!("{action:?} entry {entry} term {term}"));
        }
    }
    outcome(
        worst.0 >= 19,
        format!("{} single-sign flips; weakest detection {}/{FP_TRIALS} {}", positions.len(), worst.0, worst.1),
    )
}

fn combinatorics() -> Outcome {
    let rows: [&[&str]; 5] = [
        &["e*0"],
        &["e*0", "e1 e*0"],
        &["e*0", "e1 e*0", "e2 e*0", "e*1 e2 e*0"],
        &[
            "e*0", "e1 e*0", "e2 e*0", "e3 e*0", "e*1 e2 e*0", "e*1 e3 e*0", "e*2 e3 e*0",
            "e2 e*1 e3 e*0",
        ],
        &[
            "e*0", "e1 e*0", "e2 e*0", "e3 e*0", "e4 e*0", "e*1 e2 e*0", "e*1 e3 e*0", "e*1 e4 e*0",
            "e*2 e3 e*0", "e*2 e4 e*0", "e*3 e4 e*0", "e2 e*1 e3 e*0", "e2 e*1 e4 e*0",
            "e3 e*1 e4 e*0", "e3 e*2 e4 e*0", "e*2 e3 e*1 e4 e*0",
        ],
    ];
    let mut bad = Vec::new();
    for (d, row) in rows.iter().enumerate() {
        let got: Vec<String> = enumerate_feasible(d).unwrap().iter().map(ToString::to_string).collect();
        if got != *row {
            bad.push(format!("d={d}"));
        }
    }
    let d5 = enumerate_feasible(5).unwrap().len();
    if d5 != 32 {
        bad.push(format!("d=5 count {d5}"));
    }
    let convex: [&[&str]; 3] = [&["()"], &["()", "(1)"], &["()", "(1)", "(2,1)"]];
    for (k, want) in convex.iter().enumerate() {
        let got: Vec<String> = enumerate_convex_spanning(k + 1).iter().map(|s| s.interior_text()).collect();
        if got != *want {
            bad.push(format!("convex r={} {got:?}", k + 1));
        }
    }
    outcome(bad.is_empty(), format!("feasible tables d<=4, d=5 count {d5}, convex r=1..3; mismatches {bad:?}"))
}

fn rank_experiment() -> Outcome {
    let f = PrimeField::new(DEFAULT_PRIME).unwrap();
    let mut ok = true;
    let mut per_d = Vec::new();
    for d in 0..=5 {
        let table = bundled_table(d).unwrap();
        let mut full = 0;
        let mut drops = Vec::new();
        for t in 0..FP_TRIALS {
            match realization(&f, &table, t) {
                Ok(r) => {
                    let rank = feasible_rank_test(&r);
                    if rank.rank == 1 << d {
                        full += 1;
                    } else {
                        drops.push(format!("t{t} rank {} dependent {:?}", rank.rank, rank.dependent));
                    }
                }
                Err(e) => drops.push(format!("t{t}: {e}")),
            }
        }
        ok &= full >= 19;
        per_d.push(format!("d{d} {full}/{FP_TRIALS}"));
        if !drops.is_empty() {
            per_d.push(format!("drops {drops:?}"));
        }
    }
    outcome(ok, per_d.join(", "))
}

fn roundtrips() -> Outcome {
    let f = PrimeField::new(DEFAULT_PRIME).unwrap();
    let mut bad = Vec::new();
    let mut n = 0;
    for d in 0..=5 {
        for t in 0..10 {
            let mut s = Sampler::new(&f, derive_seed(SEED, stream(d, t)));
            match random_parameter_array(&mut s, d) {
                Ok(pa) => {
                    n += 1;
                    let rt = roundtrip(&f, &pa);
                    if let Some(c) = first_failure(&rt.checks) {
                        bad.push(format!("d{d} t{t} {}: {}", c.id, c.detail));
                    }
                }
                Err(e) => bad.push(format!("d{d} t{t}: {e}")),
            }
        }
    }
    outcome(bad.is_empty(), format!("{n} fp round-trips (axioms, ρ_0 = 1, ζ recovered); failures {bad:?}"))
}

fn validator_goldens() -> Outcome {
    let q = RationalField::default();
    let ints = |xs: &[i64]| xs.iter().map(|&x| Rational::from_integer(x)).collect::<Vec<_>>();
    let k = ints(&[3, 1, -1, -3]);
    let pa = |z: &[i64]| ParameterArray::new(3, k.clone(), k.clone(), ints(z)).unwrap();
    let good = validate_parameter_array(&q, &pa(&[1, 0, 0, 5]));
    let eps_zero = (0..2).all(|i| q.is_zero(&epsilon(&q, &k, &k, i)));
    let zd = validate_parameter_array(&q, &pa(&[1, 0, 0, 0]));
    let z0 = validate_parameter_array(&q, &pa(&[2, 0, 0, 5]));
    let ids = |v: &tdpair_core::params::ValidationResult| v.failures.iter().map(|f| f.0.clone()).collect::<Vec<_>>();
    let passed = good.passed
        && good.beta.as_deref() == Some("2")
        && eps_zero
        && ids(&zd) == [condition::ZETA_D]
        && ids(&z0) == [condition::ZETA_0];
    outcome(
        passed,
        format!("β = {:?}, ε = 0: {eps_zero}; ζ_3 = 0 → {:?}; ζ_0 = 2 → {:?}", good.beta, ids(&zd), ids(&z0)),
    )
}

fn eta_expansion() -> Outcome {
    let f = PrimeField::new(DEFAULT_PRIME).unwrap();
    let q = RationalField::default();
    let mut bad = Vec::new();
    for n in 0..100u64 {
        let d = (n % 9) as usize;
        let s = derive_seed(SEED, n);
        let ok = if n % 2 == 0 {
            eta_expansion_check(&f, &Sampler::new(&f, s).sample_distinct(d + 1, &[]).unwrap())
        } else {
            eta_expansion_check(&q, &Sampler::new(&q, s).sample_distinct(d + 1, &[]).unwrap())
        };
        if ok != Ok(true) {
            bad.push(n);
        }
    }
    outcome(bad.is_empty(), format!("100 θ-lists, d = 0..8 over fp and qq; failures {bad:?}"))
}

fn main() {
    let mut all = true;
    let mut report = |n: usize, name: &str, start: Instant, o: Outcome| {
        all &= o.passed;
        println!(
            "{} criterion {n} {name} ({:.2}s): {}",
            if o.passed { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64(),
            o.detail
        );
    };
    let t = Instant::now();
    let (rel, mu) = relations_and_certificate();
    let shared = t.elapsed().as_secs_f64();
    report(1, "relation suite", t, rel);
    println!("  (criteria 1 and 2 share {shared:.2}s of trials)");
    report(2, "mu certificate", Instant::now(), mu);
    let t = Instant::now();
    report(3, "transcription mutations", t, mutation_test());
    let t = Instant::now();
    report(4, "combinatorics goldens", t, combinatorics());
    let t = Instant::now();
    report(5, "feasible-word rank", t, rank_experiment());
    let t = Instant::now();
    report(6, "round-trip", t, roundtrips());
    let t = Instant::now();
    report(7, "validator goldens", t, validator_goldens());
    let t = Instant::now();
    report(8, "eta expansion", t, eta_expansion());
    if !all {
        std::process::exit(1);
    }
}
