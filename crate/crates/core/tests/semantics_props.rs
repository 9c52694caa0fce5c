mod common;

use prefarg_core::format::{self, Format};
use prefarg_core::semantics::{self, characteristic, grounded};
use prefarg_core::{enumerate, is_extension, oracle_enumerate, Semantics};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn enumeration_matches_brute_force(f in common::framework(7)) {
        for sem in Semantics::ALL {
            prop_assert_eq!(enumerate(&f, sem), oracle_enumerate(&f, sem).unwrap(), "{}", sem);
        }
    }

    #[test]
    fn semantics_nest(f in common::framework(8)) {
        let cf = enumerate(&f, Semantics::ConflictFree);
        let adm = enumerate(&f, Semantics::Admissible);
        let co = enumerate(&f, Semantics::Complete);
        let pr = enumerate(&f, Semantics::Preferred);
        let st = enumerate(&f, Semantics::Stable);
        let gr = grounded(&f);
        prop_assert!(adm.is_subset(&cf));
        prop_assert!(co.is_subset(&adm));
        prop_assert!(pr.is_subset(&co));
        prop_assert!(st.is_subset(&pr));
        prop_assert!(!pr.is_empty());
        prop_assert!(co.contains(&gr));
        for e in &co {
            prop_assert!(gr.is_subset(e));
        }
        prop_assert_eq!(characteristic(&f, &gr).unwrap(), gr.clone());
        for sem in Semantics::ALL {
            for e in enumerate(&f, sem) {
                prop_assert!(is_extension(&f, &e, sem).unwrap());
            }
        }
    }

    #[test]
    fn characteristic_is_monotone((f, e) in common::framework_and_cf(7), extra in any::<u16>()) {
        let bigger: prefarg_core::Extension = f
            .arguments()
            .iter()
            .enumerate()
            .filter(|(i, a)| e.contains(a) || extra & (1 << i) != 0)
            .map(|(_, a)| a.clone())
            .collect();
        let small = characteristic(&f, &e).unwrap();
        let large = characteristic(&f, &bigger).unwrap();
        prop_assert!(small.is_subset(&large));
    }

    #[test]
    fn formats_round_trip(f in common::framework(9)) {
        for fmt in [Format::Apx, Format::Tgf] {
            let text = format::serialize(&f, fmt);
            let back = format::parse(&text, fmt).unwrap();
            prop_assert_eq!(&back, &f);
            prop_assert_eq!(format::serialize(&back, fmt), text);
        }
    }

    #[test]
    fn preferred_are_the_maximal_complete_extensions(f in common::framework(12)) {
        let complete = enumerate(&f, Semantics::Complete);
        let maximal: std::collections::BTreeSet<_> = complete
            .iter()
            .filter(|e| !complete.iter().any(|o| o != *e && e.is_subset(o)))
            .cloned()
            .collect();
        prop_assert_eq!(enumerate(&f, Semantics::Preferred), maximal);
    }

    #[test]
    fn grounded_is_the_unique_grounded_extension(f in common::framework(8)) {
        let all = semantics::enumerate(&f, Semantics::Grounded);
        prop_assert_eq!(all.len(), 1);
        prop_assert!(all.contains(&grounded(&f)));
    }
}
