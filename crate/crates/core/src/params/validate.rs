use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::{recurrence_ratios, ParameterArray};
use crate::polykit::eta;
use crate::scalars::Field;

/// Condition identifiers used in [`ValidationResult::failures`].
pub mod condition {
    pub const THETA_DISTINCT: &str = "(i) θ distinct";
    pub const THETA_STAR_DISTINCT: &str = "(i) θ* distinct";
    pub const ZETA_0: &str = "(ii) ζ_0=1";
    pub const ZETA_D: &str = "(ii) ζ_d≠0";
    pub const SUM: &str = "(ii) sum≠0";
    pub const BETA: &str = "(iii) β-recurrent";
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationResult {
    pub passed: bool,
    /// `(condition id, detail)`; empty iff `passed`.
    pub failures: Vec<(String, String)>,
    /// Observations that are not failures, such as vacuous conditions.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    /// Common value of the ratio families, when (iii) holds non-vacuously.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub common_ratio: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<String>,
}

impl ValidationResult {
    pub fn failed(&self, id: &str) -> bool {
        self.failures.iter().any(|(c, _)| c == id)
    }
}

fn first_repeat<E: PartialEq>(seq: &[E]) -> Option<(usize, usize)> {
    (0..seq.len()).flat_map(|j| (0..j).map(move |i| (i, j))).find(|&(i, j)| seq[i] == seq[j])
}

/// Checks conditions (i)–(iii) of the classification conjecture.
pub fn validate_parameter_array<F: Field>(f: &F, pa: &ParameterArray<F::Elem>) -> ValidationResult {
    let d = pa.d;
    let mut failures = Vec::new();
    let mut notes = Vec::new();
    let mut common_ratio = None;
    let mut beta = None;

    let th_ok = match first_repeat(&pa.theta) {
        Some((i, j)) => {
            failures.push((condition::THETA_DISTINCT.into(), format!("θ_{i} = θ_{j}")));
            false
        }
        None => true,
    };
    let ths_ok = match first_repeat(&pa.theta_star) {
        Some((i, j)) => {
            failures.push((condition::THETA_STAR_DISTINCT.into(), format!("θ*_{i} = θ*_{j}")));
            false
        }
        None => true,
    };

    if !f.is_one(&pa.zeta[0]) {
        failures.push((condition::ZETA_0.into(), format!("ζ_0 = {}", f.format(&pa.zeta[0]))));
    }
    if f.is_zero(&pa.zeta[d]) {
        failures.push((condition::ZETA_D.into(), format!("ζ_{d} = 0")));
    }
    let mut sum = f.zero();
    for i in 0..=d {
        let a = eta(f, d - i, &pa.theta).expect("index in range").eval(f, &pa.theta[0]);
        let b = eta(f, d - i, &pa.theta_star).expect("index in range").eval(f, &pa.theta_star[0]);
        sum = f.add(&sum, &f.mul(&f.mul(&a, &b), &pa.zeta[i]));
    }
    if f.is_zero(&sum) {
        failures.push((condition::SUM.into(), "Σ η_{d−i}(θ_0) η*_{d−i}(θ*_0) ζ_i = 0".into()));
    }

    if d <= 2 {
        notes.push(format!("{} holds vacuously for d = {d}", condition::BETA));
    } else if th_ok && ths_ok {
        let r = recurrence_ratios(f, &pa.theta).expect("distinct entries");
        let rs = recurrence_ratios(f, &pa.theta_star).expect("distinct entries");
        let c = &r[0];
        let bad = r
            .iter()
            .enumerate()
            .map(|(k, x)| ("θ", k + 2, x))
            .chain(rs.iter().enumerate().map(|(k, x)| ("θ*", k + 2, x)))
            .find(|(_, _, x)| *x != c);
        match bad {
            Some((which, i, x)) => failures.push((
                condition::BETA.into(),
                format!("{which} ratio at i={i} is {} but θ ratio at i=2 is {}", f.format(x), f.format(c)),
            )),
            None => {
                common_ratio = Some(f.format(c));
                beta = Some(f.format(&f.sub(c, &f.one())));
            }
        }
    } else {
        failures.push((condition::BETA.into(), "ratios undefined without condition (i)".into()));
    }

    ValidationResult { passed: failures.is_empty(), failures, notes, common_ratio, beta }
}
