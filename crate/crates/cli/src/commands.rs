use std::path::Path;

use tdpair_core::appendix::{mu_certificate, realize, relation_checks, shape_check, triple_product_check, ModuleTable};
use tdpair_core::params::{
    condition, random_admissible_context, validate_parameter_array, ParameterArray, RawParameterArray,
};
use tdpair_core::report::{prefixed, trial_tag, Check, VerificationReport};
use tdpair_core::scalars::{derive_seed, Field, FieldSpec, PrimeField, RationalField, Sampler, DEFAULT_PRIME};
use tdpair_core::tdsystem::{random_parameter_array, roundtrip_with_table};
use tdpair_core::zigzag::{
    enumerate_convex_spanning, enumerate_feasible, enumerate_zz, feasible_rank_test, is_feasible, is_zz,
    ConvexSequence, Gen, ZzQuery,
};

use crate::args::{FieldArgs, FieldChoice, RoundtripArgs, TrialArgs, ZzEnumerateArgs};
use crate::run::{asset_version, degrees, load_tables, run_indexed, stream};
use crate::UsageError;

pub enum ActiveField {
    Q(RationalField),
    P(PrimeField),
}

macro_rules! with_field {
    ($active:expr, $f:ident => $body:expr) => {
        match $active {
            ActiveField::Q($f) => $body,
            ActiveField::P($f) => $body,
        }
    };
}

pub fn active_field(args: &FieldArgs) -> Result<ActiveField, UsageError> {
    match (args.field, args.prime) {
        (FieldChoice::Qq, Some(_)) => Err(UsageError("--prime requires --field fp".into())),
        (FieldChoice::Qq, None) => Ok(ActiveField::Q(RationalField::default())),
        (FieldChoice::Fp, p) => {
            let p = p.unwrap_or(DEFAULT_PRIME);
            PrimeField::new(p).map(ActiveField::P).map_err(|e| UsageError(format!("--prime {p}: {e}")))
        }
    }
}

/// Field echo for commands that involve no field arithmetic.
fn integer_descriptor() -> tdpair_core::scalars::FieldDescriptor {
    FieldSpec::rationals(0).descriptor()
}

fn read_array(path: &Path) -> Result<RawParameterArray, UsageError> {
    let text = std::fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| UsageError(format!("{}: {e}", path.display())))
}

pub fn check_params(input: &Path, field: &FieldArgs) -> Result<VerificationReport, UsageError> {
    let raw = read_array(input)?;
    let active = active_field(field)?;
    with_field!(&active, f => {
        let pa = ParameterArray::from_raw(f, &raw).map_err(|e| UsageError(format!("{}: {e}", input.display())))?;
        let v = validate_parameter_array(f, &pa);
        let mut r = VerificationReport::new("check-params", f.descriptor(), field.seed, None);
        r.trials = 1;
        for id in [
            condition::THETA_DISTINCT,
            condition::THETA_STAR_DISTINCT,
            condition::ZETA_0,
            condition::ZETA_D,
            condition::SUM,
            condition::BETA,
        ] {
            let failures: Vec<&str> =
                v.failures.iter().filter(|(c, _)| c == id).map(|(_, d)| d.as_str()).collect();
            if failures.is_empty() {
                r.push(Check::pass(id, "holds"));
            } else {
                r.push(Check::fail(id, failures.join("; ")));
            }
        }
        r.items.extend(v.notes.iter().cloned());
        if let Some(c) = &v.common_ratio {
            r.items.push(format!("common ratio {c}"));
        }
        if let Some(b) = &v.beta {
            r.items.push(format!("β = {b}"));
        }
        Ok(r.finish())
    })
}

#[derive(Debug, Clone, Copy)]
pub enum TrialKind {
    Relations,
    Mu,
    Shape,
    Rank,
}

impl TrialKind {
    fn command(self) -> &'static str {
        match self {
            TrialKind::Relations => "verify-appendix",
            TrialKind::Mu => "mu-certificate",
            TrialKind::Shape => "shape",
            TrialKind::Rank => "zz rank",
        }
    }
}

fn one_trial<F: Field>(f: &F, table: &ModuleTable, seed: u64, trial: usize, kind: TrialKind) -> Vec<Check> {
    let d = table.d;
    let mut s = Sampler::new(f, derive_seed(seed, stream(d, trial)));
    let ctx = match random_admissible_context(&mut s, d) {
        Ok(c) => c,
        Err(e) => return vec![Check::fail("context", e.to_string())],
    };
    let real = match realize(f, table, &ctx) {
        Ok(r) => r,
        Err(e) => return vec![Check::fail(e.check_id(), e.to_string())],
    };
    match kind {
        TrialKind::Relations => relation_checks(&real),
        TrialKind::Mu => {
            let mut c = mu_certificate(&real);
            c.extend(triple_product_check(&real));
            c
        }
        TrialKind::Shape => shape_check(&real).2,
        TrialKind::Rank => feasible_rank_test(&real).checks,
    }
}

pub fn trials(args: &TrialArgs, kind: TrialKind) -> Result<VerificationReport, UsageError> {
    let ds = degrees(args.d)?;
    let tables = load_tables(args.assets.as_deref(), &ds)?;
    let active = active_field(&args.field)?;
    let seed = args.field.seed;
    let n = args.trials;
    with_field!(&active, f => {
        let results = run_indexed(args.jobs, tables.len() * n, |k| {
            let (table, t) = (&tables[k / n], k % n);
            let prefix = format!("d{}/{}", table.d, trial_tag(t, n));
            prefixed(&prefix, one_trial(f, table, seed, t, kind)).collect::<Vec<_>>()
        });
        let mut r = VerificationReport::new(kind.command(), f.descriptor(), seed, asset_version(&tables));
        r.trials = tables.len() * n;
        r.extend(results.into_iter().flatten());
        Ok(r.finish())
    })
}

pub fn zz_enumerate(args: &ZzEnumerateArgs) -> Result<VerificationReport, UsageError> {
    let mut r = VerificationReport::new("zz enumerate", integer_descriptor(), 0, None);
    if args.feasible {
        let words = enumerate_feasible(args.d).map_err(|e| UsageError(e.to_string()))?;
        let expected = 1usize << args.d;
        r.push(Check::new(
            "zz/feasible/count",
            words.len() == expected,
            format!("{} words, 2^d = {expected}", words.len()),
        ));
        r.push(Check::new(
            "zz/feasible/predicates",
            words.iter().all(is_feasible),
            "every word is zigzag, ends in e*0 and has distinct indices",
        ));
        r.items = words.iter().map(ToString::to_string).collect();
    } else {
        let mut q = ZzQuery::new(args.d);
        q.exclude_r = args.exclude_r;
        q.exclude_s = args.exclude_s;
        if let Some(l) = args.max_len {
            q.max_len = l;
        }
        q.include_trivial = !args.no_trivial;
        let out = enumerate_zz(&q).map_err(|e| UsageError(e.to_string()))?;
        let avoids = |g: &Gen| {
            !(g.starred && q.exclude_s == Some(g.index) || !g.starred && q.exclude_r == Some(g.index))
        };
        let ok = out.words.iter().all(|w| is_zz(w) == Ok(true) && w.letters().iter().all(avoids));
        r.push(Check::new("zz/predicates", ok, "every word is zigzag and avoids the excluded generators"));
        r.push(Check::pass(
            "zz/counts",
            format!("words per length 0..={}: {:?} (truncated at the length cap)", q.max_len, out.counts),
        ));
        r.items = out.words.iter().map(ToString::to_string).collect();
    }
    r.trials = 1;
    Ok(r.finish())
}

pub fn convex(d: usize) -> VerificationReport {
    let mut r = VerificationReport::new("convex", integer_descriptor(), 0, None);
    r.trials = 1;
    for rr in 1..=d {
        let seqs = enumerate_convex_spanning(rr);
        let ok = seqs.iter().all(|s| {
            let e = &s.entries;
            e.first() == Some(&(rr as i64))
                && e.last() == Some(&0)
                && e.windows(2).all(|w| w[0] > w[1])
                && ConvexSequence::is_convex(e)
        });
        r.push(Check::new(format!("convex/r{rr}"), ok, format!("{} sequences", seqs.len())));
        r.items.extend(seqs.iter().map(|s| format!("r={rr} {}", s.interior_text())));
    }
    r.finish()
}

pub fn roundtrip(args: &RoundtripArgs) -> Result<VerificationReport, UsageError> {
    let active = active_field(&args.field)?;
    let seed = args.field.seed;
    if let Some(path) = &args.input {
        let raw = read_array(path)?;
        let tables = load_tables(args.assets.as_deref(), &degrees(Some(raw.d))?)?;
        return with_field!(&active, f => {
            let pa = ParameterArray::from_raw(f, &raw).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
            let rt = roundtrip_with_table(f, &tables[0], &pa);
            let mut r = VerificationReport::new("tds roundtrip", f.descriptor(), seed, asset_version(&tables));
            r.trials = 1;
            r.extend(rt.checks);
            if let Some(sys) = &rt.system {
                r.items.push(serde_json::to_string(&sys.report(f)).expect("serializable"));
            }
            Ok(r.finish())
        });
    }
    let ds = degrees(args.d)?;
    let tables = load_tables(args.assets.as_deref(), &ds)?;
    let n = args.trials;
    with_field!(&active, f => {
        let results = run_indexed(args.jobs, tables.len() * n, |k| {
            let (table, t) = (&tables[k / n], k % n);
            let prefix = format!("d{}/{}", table.d, trial_tag(t, n));
            let mut s = Sampler::new(f, derive_seed(seed, stream(table.d, t)));
            let checks = match random_parameter_array(&mut s, table.d) {
                Ok(pa) => roundtrip_with_table(f, table, &pa).checks,
                Err(e) => vec![Check::fail("tds/sample", e.to_string())],
            };
            prefixed(&prefix, checks).collect::<Vec<_>>()
        });
        let mut r = VerificationReport::new("tds roundtrip", f.descriptor(), seed, asset_version(&tables));
        r.trials = tables.len() * n;
        r.extend(results.into_iter().flatten());
        Ok(r.finish())
    })
}
