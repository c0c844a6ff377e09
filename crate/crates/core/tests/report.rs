use tdpair_core::report::{prefixed, trial_tag, Check, MergeError, VerificationReport};
use tdpair_core::scalars::{FieldKind, FieldSpec, DEFAULT_PRIME};

fn sample(spec: FieldSpec, command: &str, ids: &[(&str, bool)]) -> VerificationReport {
    let mut r = VerificationReport::new(command, spec.descriptor(), spec.seed, Some("v1+fnv1a:0".into()));
    r.trials = 1;
    r.extend(ids.iter().map(|&(id, ok)| Check::new(id, ok, "detail")));
    r.finish()
}

#[test]
fn json_roundtrip_is_byte_identical() {
    let p = FieldSpec::prime_field(DEFAULT_PRIME, 7).unwrap();
    let mut r = sample(p, "verify-appendix", &[("d3/t00/eq5", true), ("d3/t01/eq7", false)]);
    r.items.push("e*0".into());
    for text in [serde_json::to_string(&r).unwrap(), serde_json::to_string_pretty(&r).unwrap()] {
        let back: VerificationReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        let again = if text.contains('\n') {
            serde_json::to_string_pretty(&back).unwrap()
        } else {
            serde_json::to_string(&back).unwrap()
        };
        assert_eq!(again, text);
    }
}

#[test]
fn json_schema_keys() {
    let r = sample(FieldSpec::rationals(3), "shape", &[("a", true)]);
    let v: serde_json::Value = serde_json::to_value(&r).unwrap();
    for key in ["command", "field", "seed", "asset_version", "trials", "checks", "overall"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert!(v.get("items").is_none());
    assert_eq!(v["field"]["kind"], "qq");
    assert!(v["field"].get("prime").is_none());
    assert_eq!(v["checks"][0], serde_json::json!({"id": "a", "passed": true, "detail": "detail"}));
    let p = FieldSpec::prime_field(101, 0).unwrap();
    let v = serde_json::to_value(sample(p, "shape", &[])).unwrap();
    assert_eq!(v["field"]["kind"], "fp");
    assert_eq!(v["field"]["prime"], 101);
}

#[test]
fn overall_is_the_conjunction() {
    let q = FieldSpec::rationals(0);
    assert!(sample(q, "c", &[]).overall);
    assert!(sample(q, "c", &[("a", true), ("b", true)]).overall);
    let r = sample(q, "c", &[("b", true), ("a", false)]);
    assert!(!r.overall);
    assert_eq!(r.failures().map(|c| c.id.as_str()).collect::<Vec<_>>(), ["a"]);
}

#[test]
fn merge_rules() {
    let q = FieldSpec::rationals(0);
    let a = sample(q, "shape", &[("d1/x", true)]);
    let b = sample(q, "shape", &[("d0/x", false)]);
    let m = VerificationReport::merge(vec![a.clone(), b]).unwrap();
    assert_eq!(m.trials, 2);
    assert!(!m.overall);
    assert_eq!(m.checks[0].id, "d0/x");

    let other_seed = sample(FieldSpec::rationals(9), "shape", &[("y", true)]);
    let m = VerificationReport::merge(vec![a.clone(), other_seed]).unwrap();
    assert!(m.overall);
    assert_eq!(m.seed, 0);

    let p = FieldSpec::prime_field(101, 0).unwrap();
    let p2 = FieldSpec::prime_field(103, 0).unwrap();
    assert!(matches!(
        VerificationReport::merge(vec![a.clone(), sample(p, "shape", &[])]),
        Err(MergeError::FieldMismatch(..))
    ));
    assert!(matches!(
        VerificationReport::merge(vec![sample(p, "shape", &[]), sample(p2, "shape", &[])]),
        Err(MergeError::FieldMismatch(..))
    ));
    assert!(matches!(
        VerificationReport::merge(vec![a, sample(q, "convex", &[])]),
        Err(MergeError::CommandMismatch(..))
    ));
    assert_eq!(VerificationReport::merge(vec![]), Err(MergeError::Empty));
}

#[test]
fn prefixes_and_tags() {
    let ids: Vec<String> = prefixed("d2/t05", vec![Check::pass("eq5", ""), Check::fail("eq6", "")])
        .map(|c| c.id)
        .collect();
    assert_eq!(ids, ["d2/t05/eq5", "d2/t05/eq6"]);
    let mut tags: Vec<String> = (0..120).map(|t| trial_tag(t, 120)).collect();
    let sorted = {
        let mut s = tags.clone();
        s.sort();
        s
    };
    assert_eq!(tags, sorted);
    tags.dedup();
    assert_eq!(tags.len(), 120);
}

#[test]
fn field_spec_rejects_composites() {
    assert!(FieldSpec::prime_field(91, 0).is_err());
    let s = FieldSpec::prime_field(2, 0).unwrap();
    assert_eq!(s.kind, FieldKind::Fp);
    assert!(s.descriptor().same_field(&FieldSpec::prime_field(2, 5).unwrap().descriptor()));
}
