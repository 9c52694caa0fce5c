#![allow(dead_code)]

use prefarg_core::{ArgumentId, ArgumentationFramework, Extension};
use proptest::prelude::*;

pub fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("x{i}")).collect()
}

/// A framework from an adjacency mask over `n` arguments.
pub fn build(n: usize, mask: &[bool], self_attacks: bool) -> ArgumentationFramework {
    let names = names(n);
    let mut attacks = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if mask[i * n + j] && (i != j || self_attacks) {
                attacks.push((names[i].as_str(), names[j].as_str()));
            }
        }
    }
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    ArgumentationFramework::from_names(&refs, &attacks).unwrap()
}

pub fn framework(max_n: usize) -> impl Strategy<Value = ArgumentationFramework> {
    (0..=max_n, any::<bool>()).prop_flat_map(|(n, self_attacks)| {
        (
            Just(n),
            prop::collection::vec(prop::bool::weighted(0.35), n * n),
            Just(self_attacks),
        )
            .prop_map(|(n, mask, s)| build(n, &mask, s))
    })
}

/// A conflict-free subset obtained by dropping offending members greedily.
pub fn conflict_free_subset(f: &ArgumentationFramework, pick: &[bool]) -> Extension {
    let mut chosen: Vec<ArgumentId> = Vec::new();
    for (a, keep) in f.arguments().iter().zip(pick) {
        if !keep || f.has_attack(a, a) {
            continue;
        }
        if chosen.iter().any(|b| f.has_attack(a, b) || f.has_attack(b, a)) {
            continue;
        }
        chosen.push(a.clone());
    }
    Extension::new(chosen)
}

pub fn framework_and_cf(max_n: usize) -> impl Strategy<Value = (ArgumentationFramework, Extension)> {
    framework(max_n).prop_flat_map(|f| {
        let n = f.len();
        (Just(f), prop::collection::vec(any::<bool>(), n)).prop_map(|(f, pick)| {
            let e = conflict_free_subset(&f, &pick);
            (f, e)
        })
    })
}
