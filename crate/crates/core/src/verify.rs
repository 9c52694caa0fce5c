//! Applying preferences to a framework and checking that the result
//! singles out the intended extension.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::framework::{ArgumentationFramework, Extension};
use crate::preference::{PreferenceCollection, PreferenceSet};
use crate::semantics::{self, Semantics};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VerifyMethod {
    /// Drop every attack from a strictly weaker argument.
    Removal,
    /// Turn every attack from a strictly weaker argument around.
    Reversal,
}

impl VerifyMethod {
    pub const BOTH: [VerifyMethod; 2] = [VerifyMethod::Removal, VerifyMethod::Reversal];

    pub fn name(self) -> &'static str {
        match self {
            VerifyMethod::Removal => "removal",
            VerifyMethod::Reversal => "reversal",
        }
    }

    pub fn apply(self, framework: &ArgumentationFramework, prefs: &PreferenceSet) -> Result<ArgumentationFramework> {
        match self {
            VerifyMethod::Removal => apply_removal(framework, prefs),
            VerifyMethod::Reversal => apply_reversal(framework, prefs),
        }
    }
}

impl fmt::Display for VerifyMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for VerifyMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "removal" => Ok(VerifyMethod::Removal),
            "reversal" => Ok(VerifyMethod::Reversal),
            _ => Err(Error::InvalidConfig(format!("unknown verification method {s:?}"))),
        }
    }
}

/// Index pairs (stronger, weaker) of the strict atoms.
fn strict_pairs(framework: &ArgumentationFramework, prefs: &PreferenceSet) -> Result<BTreeSet<(usize, usize)>> {
    let mut out = BTreeSet::new();
    for p in prefs {
        let (a, b) = (framework.require(p.left())?, framework.require(p.right())?);
        if p.is_strict() {
            out.insert((a, b));
        }
    }
    Ok(out)
}

/// Keeps an attack (b, a) unless `a > b`.
pub fn apply_removal(framework: &ArgumentationFramework, prefs: &PreferenceSet) -> Result<ArgumentationFramework> {
    let strict = strict_pairs(framework, prefs)?;
    let attacks = framework
        .attack_pairs()
        .iter()
        .filter(|&&(b, a)| !strict.contains(&(a, b)))
        .copied()
        .collect();
    Ok(framework.with_attacks(attacks))
}

/// Replaces an attack (b, a) by (a, b) when `a > b`.
pub fn apply_reversal(framework: &ArgumentationFramework, prefs: &PreferenceSet) -> Result<ArgumentationFramework> {
    let strict = strict_pairs(framework, prefs)?;
    let attacks = framework
        .attack_pairs()
        .iter()
        .map(|&(b, a)| if strict.contains(&(a, b)) { (a, b) } else { (b, a) })
        .collect();
    Ok(framework.with_attacks(attacks))
}

fn require_verifiable(semantics: Semantics) -> Result<()> {
    if semantics.is_verifiable() {
        Ok(())
    } else {
        Err(Error::UnsupportedSemantics(semantics))
    }
}

fn check(
    framework: &ArgumentationFramework,
    e: &Extension,
    semantics: Semantics,
    prefs: &PreferenceSet,
    method: VerifyMethod,
) -> Result<(bool, BTreeSet<Extension>)> {
    let transformed = method.apply(framework, prefs)?;
    let found = semantics::enumerate(&transformed, semantics);
    let ok = found.len() == 1 && found.contains(e);
    Ok((ok, found))
}

fn warn_if_not_extension(framework: &ArgumentationFramework, e: &Extension, semantics: Semantics) -> Result<()> {
    if !semantics::is_extension(framework, e, semantics)? {
        log::warn!("{{{e}}} is not a {semantics} extension of the input framework; verification may fail");
    }
    Ok(())
}

/// True iff applying `prefs` leaves `e` as the only `semantics`-extension.
pub fn verify_set(
    framework: &ArgumentationFramework,
    e: &Extension,
    semantics: Semantics,
    prefs: &PreferenceSet,
    method: VerifyMethod,
) -> Result<bool> {
    require_verifiable(semantics)?;
    framework.to_argset(e)?;
    warn_if_not_extension(framework, e, semantics)?;
    Ok(check(framework, e, semantics, prefs, method)?.0)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyFailure {
    pub preferences: PreferenceSet,
    /// The extensions the transformed framework actually has.
    pub extensions: BTreeSet<Extension>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub vcheck: bool,
    pub total: usize,
    pub passed: usize,
    /// In canonical order of the failing sets.
    pub failures: Vec<VerifyFailure>,
}

/// Checks every set of `collection`.
pub fn verify_collection(
    framework: &ArgumentationFramework,
    e: &Extension,
    semantics: Semantics,
    collection: &PreferenceCollection,
    method: VerifyMethod,
) -> Result<VerifyReport> {
    verify_collection_until(framework, e, semantics, collection, method, None)
}

/// As [`verify_collection`], giving up once `deadline` has passed.
pub fn verify_collection_until(
    framework: &ArgumentationFramework,
    e: &Extension,
    semantics: Semantics,
    collection: &PreferenceCollection,
    method: VerifyMethod,
    deadline: Option<(Instant, u64)>,
) -> Result<VerifyReport> {
    require_verifiable(semantics)?;
    framework.to_argset(e)?;
    warn_if_not_extension(framework, e, semantics)?;
    let mut passed = 0;
    let mut failures = Vec::new();
    for prefs in collection.iter() {
        if let Some((at, budget_ms)) = deadline {
            if Instant::now() >= at {
                return Err(Error::DeadlineExceeded { budget_ms });
            }
        }
        let (ok, extensions) = check(framework, e, semantics, prefs, method)?;
        if ok {
            passed += 1;
        } else {
            failures.push(VerifyFailure {
                preferences: prefs.clone(),
                extensions,
            });
        }
    }
    Ok(VerifyReport {
        vcheck: failures.is_empty(),
        total: collection.len(),
        passed,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{collection, ext, prefs, running_example};
    use crate::inference::{compute_all, DefenderPolicy};

    fn example_prefs() -> PreferenceSet {
        prefs(&["C>D", "A>B", "C>B", "E>D"])
    }

    fn attacks_of(f: &ArgumentationFramework) -> Vec<(String, String)> {
        f.attacks().map(|(a, b)| (a.to_string(), b.to_string())).collect()
    }

    fn pairs(list: &[(&str, &str)]) -> Vec<(String, String)> {
        list.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
    }

    #[test]
    fn removal_example() {
        let out = apply_removal(&running_example(), &example_prefs()).unwrap();
        assert_eq!(attacks_of(&out), pairs(&[("A", "B"), ("C", "B"), ("C", "D")]));
        assert_eq!(out.arguments(), running_example().arguments());
    }

    #[test]
    fn reversal_example() {
        let out = apply_reversal(&running_example(), &example_prefs()).unwrap();
        assert_eq!(
            attacks_of(&out),
            pairs(&[("A", "B"), ("C", "B"), ("C", "D"), ("E", "D")])
        );
    }

    #[test]
    fn identity_transforms() {
        let f = running_example();
        for method in VerifyMethod::BOTH {
            assert_eq!(method.apply(&f, &PreferenceSet::new()).unwrap(), f);
            assert_eq!(method.apply(&f, &prefs(&["A=B", "E=D"])).unwrap(), f);
        }
    }

    #[test]
    fn reversal_collapses_into_existing_attack() {
        let f = ArgumentationFramework::from_names(&["x", "y"], &[("x", "y"), ("y", "x")]).unwrap();
        let out = apply_reversal(&f, &prefs(&["x>y"])).unwrap();
        assert_eq!(attacks_of(&out), pairs(&[("x", "y")]));
    }

    #[test]
    fn unknown_argument_in_prefs() {
        let f = running_example();
        assert!(matches!(
            apply_removal(&f, &prefs(&["Z>A"])),
            Err(Error::UnknownArgument(_))
        ));
    }

    #[test]
    fn verify_set_examples() {
        let f = running_example();
        for method in VerifyMethod::BOTH {
            assert!(verify_set(&f, &ext("A,C,E"), Semantics::Preferred, &example_prefs(), method).unwrap());
        }
        let toward_ad = prefs(&["D>C", "A>B", "D>E"]);
        assert!(!verify_set(
            &f,
            &ext("A,C,E"),
            Semantics::Preferred,
            &toward_ad,
            VerifyMethod::Removal
        )
        .unwrap());
        assert_eq!(
            verify_set(
                &f,
                &ext("A"),
                Semantics::Complete,
                &example_prefs(),
                VerifyMethod::Removal
            ),
            Err(Error::UnsupportedSemantics(Semantics::Complete))
        );
    }

    #[test]
    fn collection_reports() {
        let f = running_example();
        let any = DefenderPolicy::AnyExtensionDefender;
        let twelve = compute_all(&f, &ext("A,C,E"), any).unwrap();
        let report =
            verify_collection(&f, &ext("A,C,E"), Semantics::Preferred, &twelve, VerifyMethod::Removal).unwrap();
        assert_eq!((report.vcheck, report.total, report.passed), (true, 12, 12));

        let four = compute_all(&f, &ext("A,D"), any).unwrap();
        let report = verify_collection(&f, &ext("A,D"), Semantics::Preferred, &four, VerifyMethod::Reversal).unwrap();
        assert_eq!((report.vcheck, report.total, report.passed), (true, 4, 4));

        let report = verify_collection(
            &f,
            &ext("A"),
            Semantics::Grounded,
            &PreferenceCollection::new(),
            VerifyMethod::Removal,
        )
        .unwrap();
        assert_eq!((report.vcheck, report.total, report.passed), (true, 0, 0));
    }

    #[test]
    fn failures_are_listed_in_order() {
        let f = running_example();
        let c = collection(&[&["D>C", "A>B", "D>E"], &["C>D", "A>B", "C>B", "E>D"], &[]]);
        let report = verify_collection(&f, &ext("A,C,E"), Semantics::Preferred, &c, VerifyMethod::Removal).unwrap();
        assert!(!report.vcheck);
        assert_eq!(report.passed, 1);
        let failing: Vec<PreferenceSet> = report.failures.iter().map(|x| x.preferences.clone()).collect();
        assert_eq!(failing, vec![prefs(&[]), prefs(&["D>C", "A>B", "D>E"])]);
        assert!(report.failures[0].extensions.contains(&ext("A,D")));
    }

    #[test]
    fn report_json_shape() {
        let report = VerifyReport {
            vcheck: true,
            total: 1,
            passed: 1,
            failures: vec![],
        };
        assert_eq!(
            serde_json::to_string(&report).unwrap(),
            r#"{"vcheck":true,"total":1,"passed":1,"failures":[]}"#
        );
    }

    #[test]
    fn expired_deadline() {
        let f = running_example();
        let c = collection(&[&[]]);
        let past = Instant::now();
        std::thread::sleep(std::time::Duration::from_millis(2));
        assert_eq!(
            verify_collection_until(
                &f,
                &ext("A"),
                Semantics::Grounded,
                &c,
                VerifyMethod::Removal,
                Some((past, 0))
            ),
            Err(Error::DeadlineExceeded { budget_ms: 0 })
        );
    }
}
