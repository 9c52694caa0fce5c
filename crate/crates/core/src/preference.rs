//! Pairwise preferences between arguments.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::framework::{ArgumentId, Extension};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PreferenceKind {
    /// `left = right`
    Equal,
    /// `left > right`
    Strict,
}

/// One preference atom, `A>B` or `A=B`.
///
/// Equalities are symmetric and stored with `left < right`, so `E=D` and
/// `D=E` are the same value. Strict preferences keep their orientation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Preference {
    left: ArgumentId,
    right: ArgumentId,
    kind: PreferenceKind,
}

impl Preference {
    pub fn new(kind: PreferenceKind, left: ArgumentId, right: ArgumentId) -> Result<Self> {
        if left == right {
            return Err(Error::ReflexivePreference(left.to_string()));
        }
        let (left, right) = match kind {
            PreferenceKind::Equal if right < left => (right, left),
            _ => (left, right),
        };
        Ok(Preference { left, right, kind })
    }

    /// `stronger > weaker`
    pub fn strict(stronger: ArgumentId, weaker: ArgumentId) -> Result<Self> {
        Self::new(PreferenceKind::Strict, stronger, weaker)
    }

    pub fn equal(a: ArgumentId, b: ArgumentId) -> Result<Self> {
        Self::new(PreferenceKind::Equal, a, b)
    }

    /// Symmetric normal form. Constructed values are already canonical, so
    /// this is the identity on them and idempotent in general.
    pub fn canonicalize(&self) -> Preference {
        Preference::new(self.kind, self.left.clone(), self.right.clone())
            .expect("preference values are never reflexive")
    }

    pub fn kind(&self) -> PreferenceKind {
        self.kind
    }

    pub fn left(&self) -> &ArgumentId {
        &self.left
    }

    pub fn right(&self) -> &ArgumentId {
        &self.right
    }

    pub fn is_strict(&self) -> bool {
        self.kind == PreferenceKind::Strict
    }

    /// The two arguments as an unordered pair (smaller first).
    pub fn pair(&self) -> (&ArgumentId, &ArgumentId) {
        if self.left < self.right {
            (&self.left, &self.right)
        } else {
            (&self.right, &self.left)
        }
    }
}

impl fmt::Display for Preference {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = match self.kind {
            PreferenceKind::Strict => '>',
            PreferenceKind::Equal => '=',
        };
        write!(f, "{}{}{}", self.left, op, self.right)
    }
}

impl fmt::Debug for Preference {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Preference {
    type Err = Error;

    /// Parses `NAME>NAME` or `NAME=NAME`, spaces around tokens allowed.
    fn from_str(s: &str) -> Result<Self> {
        let invalid = || Error::InvalidPreference(s.to_string());
        let (op_at, kind) = match (s.find('>'), s.find('=')) {
            (Some(i), None) => (i, PreferenceKind::Strict),
            (None, Some(i)) => (i, PreferenceKind::Equal),
            _ => return Err(invalid()),
        };
        let left = s[..op_at].trim();
        let right = s[op_at + 1..].trim();
        let left = ArgumentId::new(left).map_err(|_| invalid())?;
        let right = ArgumentId::new(right).map_err(|_| invalid())?;
        Preference::new(kind, left, right)
    }
}

impl Serialize for Preference {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Preference {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A set of preference atoms, kept sorted and duplicate-free.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PreferenceSet(Vec<Preference>);

impl PreferenceSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns false if the atom was already present.
    pub fn insert(&mut self, p: Preference) -> bool {
        match self.0.binary_search(&p) {
            Ok(_) => false,
            Err(at) => {
                self.0.insert(at, p);
                true
            }
        }
    }

    /// A copy with one more atom.
    pub fn with(&self, p: Preference) -> Self {
        let mut next = PreferenceSet(Vec::with_capacity(self.0.len() + 1));
        next.0.extend_from_slice(&self.0);
        next.insert(p);
        next
    }

    pub fn contains(&self, p: &Preference) -> bool {
        self.0.binary_search(p).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Preference> {
        self.0.iter()
    }

    pub fn union_with(&mut self, other: &PreferenceSet) {
        for p in other {
            self.insert(p.clone());
        }
    }

    /// Atoms as strings, sorted lexicographically.
    pub fn to_strings(&self) -> Vec<String> {
        let mut v: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        v.sort();
        v
    }
}

impl FromIterator<Preference> for PreferenceSet {
    fn from_iter<I: IntoIterator<Item = Preference>>(iter: I) -> Self {
        let mut v: Vec<Preference> = iter.into_iter().collect();
        v.sort();
        v.dedup();
        PreferenceSet(v)
    }
}

impl<'a> IntoIterator for &'a PreferenceSet {
    type Item = &'a Preference;
    type IntoIter = std::slice::Iter<'a, Preference>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for PreferenceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_strings().join(","))
    }
}

impl fmt::Debug for PreferenceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

impl Serialize for PreferenceSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PreferenceSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Ok(Vec::<Preference>::deserialize(deserializer)?.into_iter().collect())
    }
}

/// A set of preference sets.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct PreferenceCollection(BTreeSet<PreferenceSet>);

impl PreferenceCollection {
    pub fn new() -> Self {
        Self::default()
    }

    /// The collection holding only `set`.
    pub fn singleton(set: PreferenceSet) -> Self {
        PreferenceCollection(BTreeSet::from([set]))
    }

    pub fn insert(&mut self, set: PreferenceSet) -> bool {
        self.0.insert(set)
    }

    pub fn contains(&self, set: &PreferenceSet) -> bool {
        self.0.contains(set)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &PreferenceSet> {
        self.0.iter()
    }

    /// Union of all member sets.
    pub fn atoms(&self) -> PreferenceSet {
        self.0.iter().flat_map(|s| s.iter().cloned()).collect()
    }

    /// Member sets as sorted string arrays, sorted lexicographically.
    pub fn to_rows(&self) -> Vec<Vec<String>> {
        let mut rows: Vec<Vec<String>> = self.0.iter().map(|s| s.to_strings()).collect();
        rows.sort();
        rows
    }

    /// One set per line, atoms comma-separated.
    pub fn to_text(&self) -> String {
        self.to_rows().iter().map(|r| format!("{}\n", r.join(","))).collect()
    }

    /// Reads a collection from any of the accepted JSON shapes:
    /// `{"preference_sets": [[..], ..], ..}`, a bare array of arrays, or a
    /// single array of atoms (one set).
    pub fn from_json_document(text: &str) -> Result<Self> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Error::MalformedDocument(e.to_string()))?;
        let sets = match &value {
            serde_json::Value::Object(map) => map
                .get("preference_sets")
                .ok_or_else(|| Error::MalformedDocument("missing \"preference_sets\"".into()))?,
            _ => &value,
        };
        let serde_json::Value::Array(items) = sets else {
            return Err(Error::MalformedDocument("expected an array".into()));
        };
        if !items.is_empty() && items.iter().all(|v| v.is_string()) {
            return Ok(Self::singleton(parse_atoms(items)?));
        }
        let mut out = PreferenceCollection::new();
        for item in items {
            let serde_json::Value::Array(atoms) = item else {
                return Err(Error::MalformedDocument("expected an array of atoms".into()));
            };
            out.insert(parse_atoms(atoms)?);
        }
        Ok(out)
    }
}

fn parse_atoms(items: &[serde_json::Value]) -> Result<PreferenceSet> {
    items
        .iter()
        .map(|v| {
            v.as_str()
                .ok_or_else(|| Error::MalformedDocument(format!("atom {v} is not a string")))?
                .parse()
        })
        .collect()
}

impl FromIterator<PreferenceSet> for PreferenceCollection {
    fn from_iter<I: IntoIterator<Item = PreferenceSet>>(iter: I) -> Self {
        PreferenceCollection(iter.into_iter().collect())
    }
}

impl IntoIterator for PreferenceCollection {
    type Item = PreferenceSet;
    type IntoIter = std::collections::btree_set::IntoIter<PreferenceSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl fmt::Debug for PreferenceCollection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl Serialize for PreferenceCollection {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PreferenceCollection {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Ok(Vec::<PreferenceSet>::deserialize(deserializer)?.into_iter().collect())
    }
}

/// Inference output: the extension and its justifying preference sets.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PreferenceDocument {
    pub extension: Extension,
    pub preference_sets: PreferenceCollection,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{collection, id, pref, prefs};

    #[test]
    fn equality_is_canonicalized() {
        let p = Preference::equal(id("E"), id("D")).unwrap();
        assert_eq!(p.left(), &id("D"));
        assert_eq!(p, Preference::equal(id("D"), id("E")).unwrap());
        assert_eq!(p.to_string(), "D=E");
        assert_eq!(p.canonicalize(), p);
    }

    #[test]
    fn strict_keeps_orientation() {
        let p = Preference::strict(id("D"), id("C")).unwrap();
        assert_eq!(p.canonicalize(), p);
        assert_eq!(p.to_string(), "D>C");
        assert_ne!(p, Preference::strict(id("C"), id("D")).unwrap());
    }

    #[test]
    fn parsing() {
        assert_eq!(pref("C>D"), Preference::strict(id("C"), id("D")).unwrap());
        assert_eq!(pref(" E = D "), Preference::equal(id("D"), id("E")).unwrap());
        assert_eq!("C>C".parse::<Preference>(), Err(Error::ReflexivePreference("C".into())));
        for bad in ["C", "C>", ">D", "C>=D", "C<D", "C>D>E", "a-b>c"] {
            assert!(bad.parse::<Preference>().is_err(), "{bad}");
        }
    }

    #[test]
    fn set_ignores_insertion_order() {
        let a = prefs(&["C>D", "A=B", "E>D"]);
        let b = prefs(&["E>D", "B=A", "C>D", "C>D"]);
        assert_eq!(a, b);
        assert_eq!(a.len(), 3);
        assert_eq!(a.to_strings(), vec!["A=B", "C>D", "E>D"]);
    }

    #[test]
    fn string_sort_differs_from_value_order() {
        // '1' sorts before '>' as a byte, so serialization sorts the strings.
        let s = prefs(&["A>B", "A1>B"]);
        assert_eq!(s.to_strings(), vec!["A1>B", "A>B"]);
    }

    #[test]
    fn json_shapes() {
        let c = collection(&[&["A>B", "C>D"], &["A=B", "C>D"]]);
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(json, r#"[["A=B","C>D"],["A>B","C>D"]]"#);
        assert_eq!(PreferenceCollection::from_json_document(&json).unwrap(), c);

        let doc = r#"{"extension":["A"],"preference_sets":[["A>B"],["A=B"]]}"#;
        assert_eq!(
            PreferenceCollection::from_json_document(doc).unwrap(),
            collection(&[&["A>B"], &["A=B"]])
        );
        let single = r#"["C>D","A>B"]"#;
        assert_eq!(
            PreferenceCollection::from_json_document(single).unwrap(),
            collection(&[&["A>B", "C>D"]])
        );
        assert_eq!(
            PreferenceCollection::from_json_document("[[]]").unwrap(),
            collection(&[&[]])
        );
        assert!(PreferenceCollection::from_json_document("[]").unwrap().is_empty());
        assert!(PreferenceCollection::from_json_document(r#"{"x":1}"#).is_err());
        assert!(PreferenceCollection::from_json_document(r#"[["C>C"]]"#).is_err());
    }

    #[test]
    fn text_form() {
        let c = collection(&[&["C>D", "A>B"], &[]]);
        assert_eq!(c.to_text(), "\nA>B,C>D\n");
    }
}
