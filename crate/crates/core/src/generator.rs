//! Random frameworks and benchmark instance sampling.
//!
//! Every ordered pair of distinct arguments becomes an attack independently
//! with probability `attack_prob`. Self-attacks are opt-in.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::framework::{ArgumentId, ArgumentationFramework, Extension};
use crate::semantics::{self, Semantics};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneratorConfig {
    pub size: usize,
    pub attack_prob: f64,
    pub seed: u64,
    #[serde(default)]
    pub allow_self_attacks: bool,
}

impl GeneratorConfig {
    pub fn new(size: usize, attack_prob: f64, seed: u64) -> Self {
        GeneratorConfig {
            size,
            attack_prob,
            seed,
            allow_self_attacks: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.attack_prob) {
            return Err(Error::InvalidConfig(format!(
                "attack probability {} is outside [0, 1]",
                self.attack_prob
            )));
        }
        Ok(())
    }

    fn with_seed(&self, seed: u64) -> Self {
        GeneratorConfig { seed, ..self.clone() }
    }
}

/// `a1..an`.
pub fn argument_names(n: usize) -> Vec<ArgumentId> {
    (1..=n)
        .map(|i| ArgumentId::new(&format!("a{i}")).expect("generated names are valid"))
        .collect()
}

pub fn random_aaf(config: &GeneratorConfig) -> Result<ArgumentationFramework> {
    config.validate()?;
    let names = argument_names(config.size);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut attacks = Vec::new();
    for from in &names {
        for to in &names {
            if from == to && !config.allow_self_attacks {
                continue;
            }
            if rng.random_bool(config.attack_prob) {
                attacks.push((from.clone(), to.clone()));
            }
        }
    }
    ArgumentationFramework::new(names, attacks)
}

/// A well-mixed seed for stream `index` of `seed` (splitmix64 finalizer).
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// The largest `semantics`-extension, ties going to the smallest in
/// canonical order. `None` when all extensions are empty or none exist.
pub fn select_extension(framework: &ArgumentationFramework, semantics: Semantics) -> Option<Extension> {
    let all = semantics::enumerate(framework, semantics);
    let largest = all.iter().map(Extension::len).max()?;
    if largest == 0 {
        return None;
    }
    all.into_iter().find(|e| e.len() == largest)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Instance {
    pub framework: ArgumentationFramework,
    pub extension: Extension,
    /// Frameworks drawn, including the accepted one.
    pub attempts: usize,
    /// Seed of the accepted framework.
    pub seed: u64,
}

/// Draws frameworks until one has a non-empty `semantics`-extension.
///
/// The first draw uses `config.seed`; later draws use derived seeds.
pub fn sample_instance(config: &GeneratorConfig, semantics: Semantics, max_attempts: usize) -> Result<Instance> {
    if !semantics.is_verifiable() {
        return Err(Error::UnsupportedSemantics(semantics));
    }
    config.validate()?;
    for attempt in 0..max_attempts {
        let seed = if attempt == 0 {
            config.seed
        } else {
            derive_seed(config.seed, attempt as u64)
        };
        let framework = random_aaf(&config.with_seed(seed))?;
        if let Some(extension) = select_extension(&framework, semantics) {
            return Ok(Instance {
                framework,
                extension,
                attempts: attempt + 1,
                seed,
            });
        }
    }
    Err(Error::BudgetExhausted {
        semantics,
        attempts: max_attempts,
    })
}
