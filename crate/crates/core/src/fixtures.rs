//! Small reference frameworks and terse constructors for tests and examples.

use crate::framework::{ArgumentId, ArgumentationFramework, Extension};
use crate::preference::{Preference, PreferenceCollection, PreferenceSet};

/// Five arguments `A..E` with attacks `A→B, C→B, C→D, D→C, D→E`.
pub fn running_example() -> ArgumentationFramework {
    ArgumentationFramework::from_names(
        &["A", "B", "C", "D", "E"],
        &[("A", "B"), ("C", "B"), ("C", "D"), ("D", "C"), ("D", "E")],
    )
    .expect("valid fixture")
}

/// Panics on invalid names.
pub fn id(name: &str) -> ArgumentId {
    ArgumentId::new(name).expect("valid argument name")
}

/// `ext("A,C,E")`; the empty string yields the empty extension.
pub fn ext(list: &str) -> Extension {
    Extension::parse_list(list).expect("valid extension list")
}

/// `pref("C>D")` or `pref("E=D")`.
pub fn pref(text: &str) -> Preference {
    text.parse().expect("valid preference")
}

/// `prefs(&["C>D", "A=B"])`.
pub fn prefs(items: &[&str]) -> PreferenceSet {
    items.iter().map(|p| pref(p)).collect()
}

/// Collection from string slices, one slice per set.
pub fn collection(sets: &[&[&str]]) -> PreferenceCollection {
    sets.iter().map(|s| prefs(s)).collect()
}
