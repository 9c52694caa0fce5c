//! Dung semantics.
//!
//! Complete and stable extensions come from a three-valued labelling
//! search with constraint propagation, preferred ones from a dedicated
//! maximal-admissible search, conflict-free and admissible sets from a
//! pruned subset backtracking. [`oracle`] holds an
//! independent brute-force enumeration used to cross-check both.

mod labelling;
pub mod oracle;
mod preferred;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bitset::ArgSet;
use crate::error::{Error, Result};
use crate::framework::{ArgumentId, ArgumentationFramework, Extension};

pub use oracle::{oracle_enumerate, oracle_enumerate_bounded, DEFAULT_ORACLE_BOUND};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Semantics {
    ConflictFree,
    Admissible,
    Complete,
    Grounded,
    Preferred,
    Stable,
}

impl Semantics {
    pub const ALL: [Semantics; 6] = [
        Semantics::ConflictFree,
        Semantics::Admissible,
        Semantics::Complete,
        Semantics::Grounded,
        Semantics::Preferred,
        Semantics::Stable,
    ];

    /// Semantics under which preference sets can be verified.
    pub const VERIFIABLE: [Semantics; 3] = [Semantics::Grounded, Semantics::Preferred, Semantics::Stable];

    pub fn name(self) -> &'static str {
        match self {
            Semantics::ConflictFree => "conflict-free",
            Semantics::Admissible => "admissible",
            Semantics::Complete => "complete",
            Semantics::Grounded => "grounded",
            Semantics::Preferred => "preferred",
            Semantics::Stable => "stable",
        }
    }

    pub fn is_verifiable(self) -> bool {
        Self::VERIFIABLE.contains(&self)
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Semantics {
    type Err = Error;

    /// Accepts full names and the usual two-letter abbreviations.
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "conflict-free" | "conflictfree" | "cf" => Ok(Semantics::ConflictFree),
            "admissible" | "adm" => Ok(Semantics::Admissible),
            "complete" | "co" => Ok(Semantics::Complete),
            "grounded" | "gr" => Ok(Semantics::Grounded),
            "preferred" | "pr" => Ok(Semantics::Preferred),
            "stable" | "st" => Ok(Semantics::Stable),
            _ => Err(Error::InvalidConfig(format!("unknown semantics {s:?}"))),
        }
    }
}

impl Serialize for Semantics {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for Semantics {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Whether every attacker of `a` is attacked by some member of `s`.
pub fn defends(framework: &ArgumentationFramework, s: &Extension, a: &ArgumentId) -> Result<bool> {
    let set = framework.to_argset(s)?;
    let a = framework.require(a)?;
    Ok(defends_idx(framework, &set, a))
}

/// The characteristic function: all arguments defended by `s`.
pub fn characteristic(framework: &ArgumentationFramework, s: &Extension) -> Result<Extension> {
    let set = framework.to_argset(s)?;
    Ok(framework.to_extension(&characteristic_idx(framework, &set)))
}

/// Least fixpoint of the characteristic function.
pub fn grounded(framework: &ArgumentationFramework) -> Extension {
    framework.to_extension(&grounded_set(framework))
}

/// All extensions under `semantics`, in canonical order.
pub fn enumerate(framework: &ArgumentationFramework, semantics: Semantics) -> BTreeSet<Extension> {
    extension_sets(framework, semantics)
        .iter()
        .map(|s| framework.to_extension(s))
        .collect()
}

/// Whether `e` is one of the `semantics`-extensions of `framework`.
pub fn is_extension(framework: &ArgumentationFramework, e: &Extension, semantics: Semantics) -> Result<bool> {
    let set = framework.to_argset(e)?;
    Ok(match semantics {
        Semantics::ConflictFree => framework.set_is_conflict_free(&set),
        Semantics::Admissible => is_admissible(framework, &set),
        Semantics::Complete => is_admissible(framework, &set) && characteristic_idx(framework, &set) == set,
        Semantics::Grounded => grounded_set(framework) == set,
        Semantics::Stable => framework.set_is_conflict_free(&set) && covers(framework, &set),
        Semantics::Preferred => extension_sets(framework, Semantics::Preferred).contains(&set),
    })
}

pub(crate) fn defends_idx(framework: &ArgumentationFramework, s: &ArgSet, a: usize) -> bool {
    framework
        .attackers_idx(a)
        .iter()
        .all(|b| framework.attackers_idx(b).intersects(s))
}

pub(crate) fn characteristic_idx(framework: &ArgumentationFramework, s: &ArgSet) -> ArgSet {
    let mut out = ArgSet::empty(framework.len());
    for a in 0..framework.len() {
        if defends_idx(framework, s, a) {
            out.insert(a);
        }
    }
    out
}

pub(crate) fn grounded_set(framework: &ArgumentationFramework) -> ArgSet {
    // The characteristic function is monotone, so iterating from the empty
    // set climbs to the least fixpoint in at most n + 1 rounds.
    let mut current = ArgSet::empty(framework.len());
    loop {
        let next = characteristic_idx(framework, &current);
        if next == current {
            return current;
        }
        current = next;
    }
}

fn is_admissible(framework: &ArgumentationFramework, s: &ArgSet) -> bool {
    framework.set_is_conflict_free(s) && s.iter().all(|a| defends_idx(framework, s, a))
}

fn covers(framework: &ArgumentationFramework, s: &ArgSet) -> bool {
    let mut attacked = s.clone();
    for a in s.iter() {
        attacked.union_with(framework.targets_idx(a));
    }
    attacked.len() == framework.len()
}

pub(crate) fn extension_sets(framework: &ArgumentationFramework, semantics: Semantics) -> Vec<ArgSet> {
    match semantics {
        Semantics::ConflictFree => subsets(framework, false),
        Semantics::Admissible => subsets(framework, true),
        Semantics::Grounded => vec![grounded_set(framework)],
        Semantics::Complete => labelling::complete(framework, false),
        Semantics::Stable => labelling::complete(framework, true),
        Semantics::Preferred => preferred::preferred(framework),
    }
}

/// Conflict-free (or admissible) sets by include/exclude backtracking in
/// index order.
fn subsets(framework: &ArgumentationFramework, admissible: bool) -> Vec<ArgSet> {
    let n = framework.len();
    let mut out = Vec::new();
    let mut members = ArgSet::empty(n);
    let mut blocked = ArgSet::empty(n);
    for a in 0..n {
        if framework.targets_idx(a).contains(a) {
            blocked.insert(a);
        }
    }
    subsets_rec(framework, admissible, 0, &mut members, &blocked, &mut out);
    out
}

fn subsets_rec(
    framework: &ArgumentationFramework,
    admissible: bool,
    next: usize,
    members: &mut ArgSet,
    blocked: &ArgSet,
    out: &mut Vec<ArgSet>,
) {
    let n = framework.len();
    if admissible && !still_defensible(framework, next, members, blocked) {
        return;
    }
    if next == n {
        if !admissible || members.iter().all(|a| defends_idx(framework, members, a)) {
            out.push(members.clone());
        }
        return;
    }
    subsets_rec(framework, admissible, next + 1, members, blocked, out);
    if !blocked.contains(next) {
        let mut blocked_with = blocked.clone();
        blocked_with.union_with(framework.targets_idx(next));
        blocked_with.union_with(framework.attackers_idx(next));
        members.insert(next);
        subsets_rec(framework, admissible, next + 1, members, &blocked_with, out);
        members.remove(next);
    }
}

/// Every attacker of a member must still be attackable by a member or by a
/// not-yet-decided, unblocked argument.
fn still_defensible(framework: &ArgumentationFramework, next: usize, members: &ArgSet, blocked: &ArgSet) -> bool {
    let mut available = members.clone();
    for j in next..framework.len() {
        if !blocked.contains(j) {
            available.insert(j);
        }
    }
    members.iter().all(|a| {
        framework
            .attackers_idx(a)
            .iter()
            .all(|b| framework.attackers_idx(b).intersects(&available))
    })
}
