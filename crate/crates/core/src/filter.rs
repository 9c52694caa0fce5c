//! Comparing the preferences inferred for two extensions.
//!
//! Atoms are compared in canonical form, so `E=D` in one collection matches
//! `D=E` in the other.

use crate::preference::{PreferenceCollection, PreferenceSet};

/// Atoms occurring in some set of `c1` and in no set of `c2`.
pub fn unique_preferences(c1: &PreferenceCollection, c2: &PreferenceCollection) -> PreferenceSet {
    let other = c2.atoms();
    c1.atoms().iter().filter(|p| !other.contains(p)).cloned().collect()
}

/// Atoms occurring in some set of `c1` and in some set of `c2`.
pub fn common_preferences(c1: &PreferenceCollection, c2: &PreferenceCollection) -> PreferenceSet {
    let other = c2.atoms();
    c1.atoms().iter().filter(|p| other.contains(p)).cloned().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{collection, ext, prefs, running_example};
    use crate::inference::{compute_all, DefenderPolicy};

    fn pair() -> (PreferenceCollection, PreferenceCollection) {
        let f = running_example();
        let policy = DefenderPolicy::AnyExtensionDefender;
        (
            compute_all(&f, &ext("A,C,E"), policy).unwrap(),
            compute_all(&f, &ext("A,D"), policy).unwrap(),
        )
    }

    #[test]
    fn unique_goldens() {
        let (ace, ad) = pair();
        assert_eq!(unique_preferences(&ace, &ad), prefs(&["C>D", "E>D", "C>B", "C=B"]));
        assert_eq!(unique_preferences(&ad, &ace), prefs(&["D>C"]));
        assert!(unique_preferences(&ace, &ace).is_empty());
    }

    #[test]
    fn common_goldens() {
        let (ace, ad) = pair();
        let expected = prefs(&["A>B", "A=B", "D>E", "D=E"]);
        assert_eq!(common_preferences(&ace, &ad), expected);
        assert_eq!(common_preferences(&ad, &ace), expected);
        assert!(common_preferences(&ace, &PreferenceCollection::new()).is_empty());
        assert_eq!(common_preferences(&ace, &ace), ace.atoms());
    }

    #[test]
    fn equalities_match_across_orientations() {
        let c1 = collection(&[&["E=D"]]);
        let c2 = collection(&[&["D=E"]]);
        assert_eq!(common_preferences(&c1, &c2), prefs(&["D=E"]));
        assert!(unique_preferences(&c1, &c2).is_empty());
    }
}
