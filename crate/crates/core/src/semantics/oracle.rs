//! Brute-force reference enumeration.
//!
//! Tries all 2^n subsets and filters them with direct transcriptions of the
//! semantic definitions. Only the public framework accessors are used, so
//! nothing here shares code with the labelling search.

use std::collections::BTreeSet;

use super::Semantics;
use crate::error::{Error, Result};
use crate::framework::{ArgumentationFramework, Extension};

pub const DEFAULT_ORACLE_BOUND: usize = 12;

pub fn oracle_enumerate(framework: &ArgumentationFramework, semantics: Semantics) -> Result<BTreeSet<Extension>> {
    oracle_enumerate_bounded(framework, semantics, DEFAULT_ORACLE_BOUND)
}

pub fn oracle_enumerate_bounded(
    framework: &ArgumentationFramework,
    semantics: Semantics,
    bound: usize,
) -> Result<BTreeSet<Extension>> {
    let n = framework.len();
    if n > bound || n >= 32 {
        return Err(Error::OracleBound { size: n, bound });
    }
    let args = framework.arguments();
    let pos = |a: &crate::framework::ArgumentId| args.iter().position(|x| x == a).unwrap();
    let attacks: Vec<(usize, usize)> = framework.attacks().map(|(f, t)| (pos(f), pos(t))).collect();
    let attacks_rel = |x: usize, y: usize| attacks.contains(&(x, y));

    let subsets: Vec<Vec<bool>> = (0u32..(1u32 << n))
        .map(|mask| (0..n).map(|i| mask & (1 << i) != 0).collect())
        .collect();

    let conflict_free = |s: &[bool]| !attacks.iter().any(|&(x, y)| s[x] && s[y]);
    let defends =
        |s: &[bool], a: usize| (0..n).all(|b| !attacks_rel(b, a) || (0..n).any(|c| s[c] && attacks_rel(c, b)));
    let admissible = |s: &[bool]| conflict_free(s) && (0..n).all(|a| !s[a] || defends(s, a));
    let complete = |s: &[bool]| admissible(s) && (0..n).all(|a| !defends(s, a) || s[a]);
    let stable = |s: &[bool]| conflict_free(s) && (0..n).all(|a| s[a] || (0..n).any(|b| s[b] && attacks_rel(b, a)));
    let subset_of = |s: &[bool], t: &[bool]| (0..n).all(|i| !s[i] || t[i]);

    let chosen: Vec<&Vec<bool>> = match semantics {
        Semantics::ConflictFree => subsets.iter().filter(|s| conflict_free(s)).collect(),
        Semantics::Admissible => subsets.iter().filter(|s| admissible(s)).collect(),
        Semantics::Complete => subsets.iter().filter(|s| complete(s)).collect(),
        Semantics::Stable => subsets.iter().filter(|s| stable(s)).collect(),
        Semantics::Preferred => {
            let adm: Vec<&Vec<bool>> = subsets.iter().filter(|s| admissible(s)).collect();
            adm.iter()
                .filter(|s| !adm.iter().any(|t| t != *s && subset_of(s, t)))
                .copied()
                .collect()
        }
        Semantics::Grounded => {
            let co: Vec<&Vec<bool>> = subsets.iter().filter(|s| complete(s)).collect();
            co.iter()
                .filter(|s| !co.iter().any(|t| t != *s && subset_of(t, s)))
                .copied()
                .collect()
        }
    };

    Ok(chosen
        .into_iter()
        .map(|s| (0..n).filter(|&i| s[i]).map(|i| args[i].clone()).collect())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{ext, running_example};

    #[test]
    fn admissible_sets_of_running_example() {
        let expected: BTreeSet<Extension> = ["A,C,E", "A,C", "A,D", "C,E", "A", "C", "D", ""]
            .iter()
            .map(|l| ext(l))
            .collect();
        assert_eq!(
            oracle_enumerate(&running_example(), Semantics::Admissible).unwrap(),
            expected
        );
    }

    #[test]
    fn empty_framework() {
        let f = ArgumentationFramework::from_names(&[], &[]).unwrap();
        for sem in Semantics::ALL {
            let all = oracle_enumerate(&f, sem).unwrap();
            assert_eq!(all.len(), 1);
            assert!(all.contains(&Extension::empty()));
        }
    }

    #[test]
    fn refuses_large_frameworks() {
        let names: Vec<String> = (0..13).map(|i| format!("a{i}")).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let f = ArgumentationFramework::from_names(&refs, &[]).unwrap();
        assert_eq!(
            oracle_enumerate(&f, Semantics::Stable),
            Err(Error::OracleBound { size: 13, bound: 12 })
        );
    }
}
