//! Preference-based abstract argumentation.
//!
//! Computes Dung extensions, infers the argument preferences under which a
//! conflict-free set is justified, compares inferred preferences across
//! extensions and verifies them by attack removal or attack reversal.

mod bitset;
pub mod error;
pub mod filter;
pub mod fixtures;
pub mod format;
pub mod framework;
pub mod generator;
pub mod inference;
pub mod preference;
pub mod semantics;
pub mod verify;

pub use error::{Error, Result};
pub use filter::{common_preferences, unique_preferences};
pub use format::Format;
pub use framework::{ArgumentId, ArgumentationFramework, Extension};
pub use generator::{random_aaf, sample_instance, GeneratorConfig, Instance};
pub use inference::{
    branch_structure, compute_all, compute_all_with_cap, compute_approx, BranchStructure, DefenderPolicy,
    DEFAULT_COLLECTION_CAP,
};
pub use preference::{Preference, PreferenceCollection, PreferenceDocument, PreferenceKind, PreferenceSet};
pub use semantics::{enumerate, is_extension, oracle_enumerate, Semantics};
pub use verify::{
    apply_removal, apply_reversal, verify_collection, verify_set, VerifyFailure, VerifyMethod, VerifyReport,
};
