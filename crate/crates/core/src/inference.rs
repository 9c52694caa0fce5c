//! Inferring the preferences that justify a conflict-free extension.
//!
//! Every (member, non-member) pair linked by an attack falls into one of
//! three cases:
//!
//! 1. the non-member attacks the member and no defender exists: the member
//!    must be strictly preferred (`A>B`);
//! 2. the member attacks the non-member one-way: the attack must succeed
//!    (`A>B` or `A=B`);
//! 3. the non-member attacks the member but a defender exists: anything goes
//!    (`A>B`, `A=B` or `B>A`).
//!
//! The exhaustive result is the cross product of the case-2 and case-3
//! choices on top of the fixed case-1 atoms, so it always holds
//! `2^c2 * 3^c3` sets of `c1 + c2 + c3` atoms each.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bitset::ArgSet;
use crate::error::{Error, Result};
use crate::framework::{ArgumentId, ArgumentationFramework, Extension};
use crate::preference::{Preference, PreferenceCollection, PreferenceSet};

/// Collections above this many sets are refused before enumeration starts.
pub const DEFAULT_COLLECTION_CAP: u64 = 10_000_000;

/// Which extension members count as defenders in cases 1 and 3.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DefenderPolicy {
    /// A defender must itself be unattacked in the framework.
    #[default]
    #[serde(alias = "unattacked")]
    UnattackedDefender,
    /// Any other extension member attacking the attacker is a defender.
    #[serde(alias = "any-defender")]
    AnyExtensionDefender,
}

impl DefenderPolicy {
    pub fn name(self) -> &'static str {
        match self {
            DefenderPolicy::UnattackedDefender => "unattacked",
            DefenderPolicy::AnyExtensionDefender => "any-defender",
        }
    }
}

impl fmt::Display for DefenderPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DefenderPolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "unattacked" | "unattacked-defender" => Ok(DefenderPolicy::UnattackedDefender),
            "any-defender" | "any-extension-defender" => Ok(DefenderPolicy::AnyExtensionDefender),
            _ => Err(Error::InvalidConfig(format!("unknown defender policy {s:?}"))),
        }
    }
}

/// The (member, other) pairs of each case, in branch order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BranchStructure {
    /// (member, attacker) pairs without a defender.
    pub case1_pairs: Vec<(ArgumentId, ArgumentId)>,
    /// (member, attacked) pairs of one-way attacks from the extension.
    pub case2_pairs: Vec<(ArgumentId, ArgumentId)>,
    /// (member, attacker) pairs with at least one defender.
    pub case3_pairs: Vec<(ArgumentId, ArgumentId)>,
}

impl BranchStructure {
    pub fn c1(&self) -> usize {
        self.case1_pairs.len()
    }

    pub fn c2(&self) -> usize {
        self.case2_pairs.len()
    }

    pub fn c3(&self) -> usize {
        self.case3_pairs.len()
    }

    /// Atoms in every inferred set.
    pub fn preferences_per_set(&self) -> usize {
        self.c1() + self.c2() + self.c3()
    }

    /// Exact size of the exhaustive collection, `2^c2 * 3^c3`.
    pub fn collection_size(&self) -> BigUint {
        BigUint::from(2u32).pow(self.c2() as u32) * BigUint::from(3u32).pow(self.c3() as u32)
    }

    /// The collection size if it does not exceed `cap`.
    pub fn collection_size_within(&self, cap: u64) -> Option<u64> {
        let size = self.collection_size();
        u64::try_from(size).ok().filter(|s| *s <= cap)
    }

    fn case1_atoms(&self) -> PreferenceSet {
        self.case1_pairs.iter().map(|(a, b)| strict(a, b)).collect()
    }
}

fn strict(a: &ArgumentId, b: &ArgumentId) -> Preference {
    Preference::strict(a.clone(), b.clone()).expect("case pairs relate distinct arguments")
}

fn equal(a: &ArgumentId, b: &ArgumentId) -> Preference {
    Preference::equal(a.clone(), b.clone()).expect("case pairs relate distinct arguments")
}

fn case2_options(a: &ArgumentId, b: &ArgumentId) -> [Preference; 2] {
    [strict(a, b), equal(a, b)]
}

fn case3_options(a: &ArgumentId, b: &ArgumentId) -> [Preference; 3] {
    [strict(a, b), equal(a, b), strict(b, a)]
}

fn checked_members(framework: &ArgumentationFramework, e: &Extension) -> Result<ArgSet> {
    let members = framework.to_argset(e)?;
    if !framework.set_is_conflict_free(&members) {
        return Err(Error::NotConflictFree(e.clone()));
    }
    Ok(members)
}

/// Classifies every attack between the extension and the rest.
pub fn branch_structure(
    framework: &ArgumentationFramework,
    e: &Extension,
    policy: DefenderPolicy,
) -> Result<BranchStructure> {
    let members = checked_members(framework, e)?;
    let mut out = BranchStructure::default();
    let name = |i: usize| framework.name(i).clone();

    for a in members.iter() {
        for b in framework.attackers_idx(a).iter() {
            let defended = framework.attackers_idx(b).iter().any(|c| {
                c != a
                    && members.contains(c)
                    && (policy == DefenderPolicy::AnyExtensionDefender || framework.attackers_idx(c).is_empty())
            });
            if defended {
                out.case3_pairs.push((name(a), name(b)));
            } else {
                out.case1_pairs.push((name(a), name(b)));
            }
        }
        for b in framework.targets_idx(a).iter() {
            if !framework.targets_idx(b).contains(a) {
                out.case2_pairs.push((name(a), name(b)));
            }
        }
    }
    Ok(out)
}

/// The fixed strict atoms of case 1.
pub fn compute_case1(
    framework: &ArgumentationFramework,
    e: &Extension,
    policy: DefenderPolicy,
) -> Result<PreferenceSet> {
    Ok(branch_structure(framework, e, policy)?.case1_atoms())
}

/// Branches every set of `{seed}` two ways per case-2 pair.
pub fn expand_case2(
    framework: &ArgumentationFramework,
    e: &Extension,
    seed: &PreferenceSet,
) -> Result<PreferenceCollection> {
    // Case 2 does not depend on defenders.
    let structure = branch_structure(framework, e, DefenderPolicy::default())?;
    let mut working = vec![seed.clone()];
    for (a, b) in &structure.case2_pairs {
        working = branch(&working, &case2_options(a, b));
    }
    Ok(working.into_iter().collect())
}

/// Branches every set of `collection` three ways per case-3 pair.
pub fn expand_case3(
    framework: &ArgumentationFramework,
    e: &Extension,
    collection: &PreferenceCollection,
    policy: DefenderPolicy,
) -> Result<PreferenceCollection> {
    let structure = branch_structure(framework, e, policy)?;
    let mut working: Vec<PreferenceSet> = collection.iter().cloned().collect();
    for (a, b) in &structure.case3_pairs {
        working = branch(&working, &case3_options(a, b));
    }
    Ok(working.into_iter().collect())
}

fn branch(working: &[PreferenceSet], options: &[Preference]) -> Vec<PreferenceSet> {
    let mut next = Vec::with_capacity(working.len() * options.len());
    for set in working {
        for p in options {
            next.push(set.with(p.clone()));
        }
    }
    next
}

/// All justifying preference sets, refusing collections above
/// [`DEFAULT_COLLECTION_CAP`].
pub fn compute_all(
    framework: &ArgumentationFramework,
    e: &Extension,
    policy: DefenderPolicy,
) -> Result<PreferenceCollection> {
    compute_all_with_cap(framework, e, policy, DEFAULT_COLLECTION_CAP)
}

pub fn compute_all_with_cap(
    framework: &ArgumentationFramework,
    e: &Extension,
    policy: DefenderPolicy,
    cap: u64,
) -> Result<PreferenceCollection> {
    let structure = branch_structure(framework, e, policy)?;
    if structure.collection_size_within(cap).is_none() {
        return Err(Error::CollectionTooLarge {
            count: structure.collection_size().to_string(),
            cap,
        });
    }
    let mut working = vec![structure.case1_atoms()];
    for (a, b) in &structure.case2_pairs {
        working = branch(&working, &case2_options(a, b));
    }
    for (a, b) in &structure.case3_pairs {
        working = branch(&working, &case3_options(a, b));
    }
    Ok(working.into_iter().collect())
}

/// One justifying preference set, picking uniformly at random at each
/// case-2 and case-3 branch point. Deterministic for a given seed.
pub fn compute_approx(
    framework: &ArgumentationFramework,
    e: &Extension,
    policy: DefenderPolicy,
    seed: u64,
) -> Result<PreferenceSet> {
    let structure = branch_structure(framework, e, policy)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = structure.case1_atoms();
    for (a, b) in &structure.case2_pairs {
        let options = case2_options(a, b);
        out.insert(options[rng.random_range(0..options.len())].clone());
    }
    for (a, b) in &structure.case3_pairs {
        let options = case3_options(a, b);
        out.insert(options[rng.random_range(0..options.len())].clone());
    }
    Ok(out)
}
