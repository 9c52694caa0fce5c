//! Abstract argumentation frameworks: arguments, attacks and extensions.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bitset::ArgSet;
use crate::error::{Error, Result};

/// Name of an argument. Case-sensitive, ordered lexicographically.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArgumentId(Arc<str>);

impl ArgumentId {
    pub fn new(name: &str) -> Result<Self> {
        if is_valid_name(name) {
            Ok(ArgumentId(Arc::from(name)))
        } else {
            Err(Error::InvalidArgumentName(name.to_string()))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

pub(crate) fn is_valid_name(name: &str) -> bool {
    !name.is_empty() && name.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

impl FromStr for ArgumentId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ArgumentId::new(s)
    }
}

impl fmt::Display for ArgumentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for ArgumentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Serialize for ArgumentId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for ArgumentId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        ArgumentId::new(&s).map_err(serde::de::Error::custom)
    }
}

/// A set of arguments.
///
/// Extensions order by size first and then by their sorted member lists,
/// which is the canonical order for reporting sets of extensions.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Extension(BTreeSet<ArgumentId>);

impl Extension {
    pub fn new<I: IntoIterator<Item = ArgumentId>>(members: I) -> Self {
        Extension(members.into_iter().collect())
    }

    pub fn empty() -> Self {
        Extension::default()
    }

    /// Parses a comma-separated member list; the empty string is the empty set.
    pub fn parse_list(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Extension::empty());
        }
        text.split(',')
            .map(|t| ArgumentId::new(t.trim()))
            .collect::<Result<BTreeSet<_>>>()
            .map(Extension)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, a: &ArgumentId) -> bool {
        self.0.contains(a)
    }

    pub fn iter(&self) -> impl Iterator<Item = &ArgumentId> {
        self.0.iter()
    }

    pub fn members(&self) -> &BTreeSet<ArgumentId> {
        &self.0
    }

    pub fn is_subset(&self, other: &Extension) -> bool {
        self.0.is_subset(&other.0)
    }
}

impl Ord for Extension {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.iter().cmp(other.0.iter()))
    }
}

impl PartialOrd for Extension {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<ArgumentId> for Extension {
    fn from_iter<I: IntoIterator<Item = ArgumentId>>(iter: I) -> Self {
        Extension::new(iter)
    }
}

impl fmt::Display for Extension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for a in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            f.write_str(a.as_str())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Extension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

/// A finite argumentation framework.
///
/// Arguments are kept sorted, so argument indices follow the canonical
/// lexicographic order and index-ordered iteration is deterministic.
#[derive(Clone)]
pub struct ArgumentationFramework {
    names: Vec<ArgumentId>,
    index: HashMap<ArgumentId, usize>,
    attacks: BTreeSet<(usize, usize)>,
    attackers: Vec<ArgSet>,
    targets: Vec<ArgSet>,
}

impl ArgumentationFramework {
    /// Builds a framework; duplicate arguments and attacks collapse.
    pub fn new<A, R>(arguments: A, attacks: R) -> Result<Self>
    where
        A: IntoIterator<Item = ArgumentId>,
        R: IntoIterator<Item = (ArgumentId, ArgumentId)>,
    {
        let names: Vec<ArgumentId> = arguments.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        let index: HashMap<ArgumentId, usize> = names.iter().enumerate().map(|(i, a)| (a.clone(), i)).collect();
        let mut edges = BTreeSet::new();
        for (from, to) in attacks {
            let f = *index
                .get(&from)
                .ok_or_else(|| Error::UnknownArgument(from.to_string()))?;
            let t = *index.get(&to).ok_or_else(|| Error::UnknownArgument(to.to_string()))?;
            edges.insert((f, t));
        }
        Ok(Self::from_parts(names, index, edges))
    }

    /// Convenience constructor from string names.
    pub fn from_names(arguments: &[&str], attacks: &[(&str, &str)]) -> Result<Self> {
        let args = arguments
            .iter()
            .map(|a| ArgumentId::new(a))
            .collect::<Result<Vec<_>>>()?;
        let atts = attacks
            .iter()
            .map(|(a, b)| Ok((ArgumentId::new(a)?, ArgumentId::new(b)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(args, atts)
    }

    fn from_parts(
        names: Vec<ArgumentId>,
        index: HashMap<ArgumentId, usize>,
        attacks: BTreeSet<(usize, usize)>,
    ) -> Self {
        let n = names.len();
        let mut attackers = vec![ArgSet::empty(n); n];
        let mut targets = vec![ArgSet::empty(n); n];
        for &(f, t) in &attacks {
            attackers[t].insert(f);
            targets[f].insert(t);
        }
        ArgumentationFramework {
            names,
            index,
            attacks,
            attackers,
            targets,
        }
    }

    /// Same arguments, different attack relation (index pairs).
    pub(crate) fn with_attacks(&self, attacks: BTreeSet<(usize, usize)>) -> Self {
        Self::from_parts(self.names.clone(), self.index.clone(), attacks)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Arguments in canonical order.
    pub fn arguments(&self) -> &[ArgumentId] {
        &self.names
    }

    /// Attacks as (attacker, target) in canonical order.
    pub fn attacks(&self) -> impl Iterator<Item = (&ArgumentId, &ArgumentId)> + '_ {
        self.attacks.iter().map(move |&(f, t)| (&self.names[f], &self.names[t]))
    }

    pub fn attack_count(&self) -> usize {
        self.attacks.len()
    }

    pub fn contains(&self, a: &ArgumentId) -> bool {
        self.index.contains_key(a)
    }

    pub fn has_attack(&self, from: &ArgumentId, to: &ArgumentId) -> bool {
        match (self.index.get(from), self.index.get(to)) {
            (Some(&f), Some(&t)) => self.attacks.contains(&(f, t)),
            _ => false,
        }
    }

    pub fn attackers_of(&self, a: &ArgumentId) -> Result<BTreeSet<ArgumentId>> {
        let i = self.require(a)?;
        Ok(self.attackers[i].iter().map(|j| self.names[j].clone()).collect())
    }

    pub fn attacked_by(&self, a: &ArgumentId) -> Result<BTreeSet<ArgumentId>> {
        let i = self.require(a)?;
        Ok(self.targets[i].iter().map(|j| self.names[j].clone()).collect())
    }

    pub fn is_conflict_free(&self, s: &Extension) -> Result<bool> {
        let set = self.to_argset(s)?;
        Ok(self.set_is_conflict_free(&set))
    }

    pub(crate) fn require(&self, a: &ArgumentId) -> Result<usize> {
        self.index
            .get(a)
            .copied()
            .ok_or_else(|| Error::UnknownArgument(a.to_string()))
    }

    pub(crate) fn name(&self, i: usize) -> &ArgumentId {
        &self.names[i]
    }

    pub(crate) fn attack_pairs(&self) -> &BTreeSet<(usize, usize)> {
        &self.attacks
    }

    pub(crate) fn attackers_idx(&self, i: usize) -> &ArgSet {
        &self.attackers[i]
    }

    pub(crate) fn targets_idx(&self, i: usize) -> &ArgSet {
        &self.targets[i]
    }

    pub(crate) fn to_argset(&self, s: &Extension) -> Result<ArgSet> {
        let mut set = ArgSet::empty(self.len());
        for a in s.iter() {
            set.insert(self.require(a)?);
        }
        Ok(set)
    }

    pub(crate) fn to_extension(&self, s: &ArgSet) -> Extension {
        s.iter().map(|i| self.names[i].clone()).collect()
    }

    pub(crate) fn set_is_conflict_free(&self, s: &ArgSet) -> bool {
        s.iter().all(|i| !self.targets[i].intersects(s))
    }
}

impl PartialEq for ArgumentationFramework {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.attacks == other.attacks
    }
}

impl Eq for ArgumentationFramework {}

impl fmt::Debug for ArgumentationFramework {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ArgumentationFramework")
            .field("arguments", &self.names)
            .field("attacks", &self.attacks().collect::<Vec<_>>())
            .finish()
    }
}
