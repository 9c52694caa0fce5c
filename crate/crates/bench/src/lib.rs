//! Sweeps over framework size and attack probability, timing inference and
//! both verification methods on sampled instances.
//!
//! Each (size, probability) point samples its own instances, runs the
//! pipeline on each, and averages the instances whose preferences verified
//! under both methods. Results go to a CSV (one row per point) and a JSON
//! sidecar carrying the configuration and per-instance outcomes.

use std::io::Write;
use std::time::{Duration, Instant};

use prefarg_core::generator::{derive_seed, sample_instance};
use prefarg_core::inference::{branch_structure, compute_all_with_cap, compute_approx};
use prefarg_core::verify::verify_collection_until;
use prefarg_core::{
    ArgumentationFramework, DefenderPolicy, Error, Extension, GeneratorConfig, PreferenceCollection, Semantics,
    VerifyMethod,
};
use serde::{Deserialize, Serialize};

pub const CSV_COLUMNS: [&str; 8] = [
    "aaf_size",
    "ext_size",
    "attacks",
    "preference_sets",
    "preferences",
    "ctime_ms",
    "vtime1_ms",
    "vtime2_ms",
];

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    #[default]
    Exhaustive,
    #[serde(alias = "approx")]
    Approximate,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Caps {
    /// Per-instance budget for inference plus verification. Inference
    /// itself is bounded by `collection_cap` rather than by the clock.
    pub timeout_ms: Option<u64>,
    pub collection_cap: u64,
    /// Framework draws per instance before giving up on the requirement.
    pub max_attempts: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            timeout_ms: Some(60_000),
            collection_cap: 1_000_000,
            max_attempts: 1_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub semantics: Semantics,
    #[serde(default)]
    pub mode: Mode,
    #[serde(default)]
    pub policy: DefenderPolicy,
    pub sizes: Vec<usize>,
    pub probs: Vec<f64>,
    #[serde(default = "default_instances")]
    pub instances_per_point: usize,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub caps: Caps,
    /// With `false` the timing columns stay empty, making the CSV a pure
    /// function of the configuration.
    #[serde(default = "default_true")]
    pub timings: bool,
    #[serde(default)]
    pub allow_self_attacks: bool,
}

fn default_instances() -> usize {
    10
}

fn default_true() -> bool {
    true
}

impl SweepConfig {
    pub fn from_json(text: &str) -> Result<Self, Error> {
        let config: SweepConfig = serde_json::from_str(text).map_err(|e| Error::InvalidConfig(e.to_string()))?;
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<(), Error> {
        let fail = |m: &str| Err(Error::InvalidConfig(m.to_string()));
        if !self.semantics.is_verifiable() {
            return Err(Error::UnsupportedSemantics(self.semantics));
        }
        if self.sizes.is_empty() {
            return fail("sizes must not be empty");
        }
        if self.probs.is_empty() {
            return fail("probs must not be empty");
        }
        if self.probs.iter().any(|p| !(0.0..=1.0).contains(p)) {
            return fail("every probability must lie in [0, 1]");
        }
        if self.instances_per_point == 0 {
            return fail("instances_per_point must be at least 1");
        }
        if self.caps.max_attempts == 0 {
            return fail("caps.max_attempts must be at least 1");
        }
        Ok(())
    }

    /// Seed of instance `index` at point (`size`, `probs[prob_index]`).
    pub fn instance_seed(&self, size: usize, prob_index: usize, index: usize) -> u64 {
        let s = derive_seed(self.seed, size as u64);
        let s = derive_seed(s, prob_index as u64);
        derive_seed(s, index as u64)
    }
}

/// Measurements of one instance, or the mean over several.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub aaf_size: f64,
    pub ext_size: f64,
    pub attacks: f64,
    pub preference_sets: f64,
    pub preferences: f64,
    pub ctime_ms: f64,
    pub vtime1_ms: f64,
    pub vtime2_ms: f64,
    /// Both verifications succeeded.
    pub vcheck: bool,
}

impl BenchRecord {
    /// Arithmetic mean; `vcheck` holds only if it holds for all.
    pub fn mean(records: &[BenchRecord]) -> Option<BenchRecord> {
        if records.is_empty() {
            return None;
        }
        let n = records.len() as f64;
        let avg = |f: fn(&BenchRecord) -> f64| records.iter().map(f).sum::<f64>() / n;
        Some(BenchRecord {
            aaf_size: avg(|r| r.aaf_size),
            ext_size: avg(|r| r.ext_size),
            attacks: avg(|r| r.attacks),
            preference_sets: avg(|r| r.preference_sets),
            preferences: avg(|r| r.preferences),
            ctime_ms: avg(|r| r.ctime_ms),
            vtime1_ms: avg(|r| r.vtime1_ms),
            vtime2_ms: avg(|r| r.vtime2_ms),
            vcheck: records.iter().all(|r| r.vcheck),
        })
    }
}

fn millis(d: Duration) -> f64 {
    d.as_secs_f64() * 1000.0
}

/// Infers preferences for `e`, then verifies them by removal and by
/// reversal. `seed` drives the approximate mode's choices.
pub fn run_point(
    framework: &ArgumentationFramework,
    e: &Extension,
    semantics: Semantics,
    mode: Mode,
    policy: DefenderPolicy,
    caps: &Caps,
    seed: u64,
) -> Result<BenchRecord, Error> {
    let started = Instant::now();
    let deadline = caps.timeout_ms.map(|ms| (started + Duration::from_millis(ms), ms));
    let structure = branch_structure(framework, e, policy)?;

    let t = Instant::now();
    let collection = match mode {
        Mode::Exhaustive => compute_all_with_cap(framework, e, policy, caps.collection_cap)?,
        Mode::Approximate => PreferenceCollection::singleton(compute_approx(framework, e, policy, seed)?),
    };
    let ctime = t.elapsed();

    let mut times = [Duration::ZERO; 2];
    let mut vcheck = true;
    for (slot, method) in VerifyMethod::BOTH.into_iter().enumerate() {
        let t = Instant::now();
        let report = verify_collection_until(framework, e, semantics, &collection, method, deadline)?;
        times[slot] = t.elapsed();
        vcheck &= report.vcheck;
    }

    Ok(BenchRecord {
        aaf_size: framework.len() as f64,
        ext_size: e.len() as f64,
        attacks: framework.attack_count() as f64,
        preference_sets: collection.len() as f64,
        preferences: structure.preferences_per_set() as f64,
        ctime_ms: millis(ctime),
        vtime1_ms: millis(times[0]),
        vtime2_ms: millis(times[1]),
        vcheck,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceOutcome {
    pub index: usize,
    /// Seed of the accepted framework, when sampling succeeded.
    pub seed: Option<u64>,
    pub attempts: Option<usize>,
    pub extension: Option<Extension>,
    pub record: Option<BenchRecord>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointResult {
    pub aaf_size: usize,
    pub pr: f64,
    /// Mean over the admitted instances; `None` if none was admitted.
    pub mean: Option<BenchRecord>,
    /// Instances that completed with both verifications succeeding.
    pub admitted: usize,
    pub instances: Vec<InstanceOutcome>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub config: SweepConfig,
    pub points: Vec<PointResult>,
}

fn run_instance(config: &SweepConfig, size: usize, prob_index: usize, index: usize) -> InstanceOutcome {
    let mut gen = GeneratorConfig::new(
        size,
        config.probs[prob_index],
        config.instance_seed(size, prob_index, index),
    );
    gen.allow_self_attacks = config.allow_self_attacks;
    let mut outcome = InstanceOutcome {
        index,
        seed: None,
        attempts: None,
        extension: None,
        record: None,
        error: None,
    };
    let instance = match sample_instance(&gen, config.semantics, config.caps.max_attempts) {
        Ok(i) => i,
        Err(e) => {
            outcome.error = Some(e.to_string());
            return outcome;
        }
    };
    outcome.seed = Some(instance.seed);
    outcome.attempts = Some(instance.attempts);
    let result = run_point(
        &instance.framework,
        &instance.extension,
        config.semantics,
        config.mode,
        config.policy,
        &config.caps,
        instance.seed,
    );
    outcome.extension = Some(instance.extension);
    match result {
        Ok(mut record) => {
            if !record.vcheck {
                outcome.error = Some("preferences failed verification".into());
            }
            if !config.timings {
                record.ctime_ms = 0.0;
                record.vtime1_ms = 0.0;
                record.vtime2_ms = 0.0;
            }
            outcome.record = Some(record);
        }
        Err(e) => outcome.error = Some(e.to_string()),
    }
    outcome
}

/// Runs every (size, probability) point in order. Point failures are
/// recorded, never fatal.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepReport, Error> {
    config.validate()?;
    let mut points = Vec::new();
    for &size in &config.sizes {
        for (prob_index, &pr) in config.probs.iter().enumerate() {
            let instances: Vec<InstanceOutcome> = (0..config.instances_per_point)
                .map(|i| run_instance(config, size, prob_index, i))
                .collect();
            let admitted: Vec<BenchRecord> = instances
                .iter()
                .filter_map(|o| o.record.clone())
                .filter(|r| r.vcheck)
                .collect();
            log::info!(
                "n={size} pr={pr}: {}/{} instances admitted",
                admitted.len(),
                config.instances_per_point
            );
            points.push(PointResult {
                aaf_size: size,
                pr,
                mean: BenchRecord::mean(&admitted),
                admitted: admitted.len(),
                instances,
            });
        }
    }
    Ok(SweepReport {
        config: config.clone(),
        points,
    })
}

fn one_decimal(x: f64) -> String {
    format!("{x:.1}")
}

impl SweepReport {
    /// A `pr` column is appended when the sweep covers several
    /// probabilities.
    pub fn has_pr_column(&self) -> bool {
        self.config.probs.len() > 1
    }

    pub fn write_csv<W: Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let mut header: Vec<&str> = CSV_COLUMNS.to_vec();
        if self.has_pr_column() {
            header.push("pr");
        }
        w.write_record(&header)?;
        for point in &self.points {
            let mut row = vec![point.aaf_size.to_string()];
            match &point.mean {
                Some(m) => {
                    row.extend([m.ext_size, m.attacks, m.preference_sets, m.preferences].map(one_decimal));
                    if self.config.timings {
                        row.extend([m.ctime_ms, m.vtime1_ms, m.vtime2_ms].map(one_decimal));
                    } else {
                        row.extend(std::iter::repeat_n(String::new(), 3));
                    }
                }
                None => row.extend(std::iter::repeat_n(String::new(), CSV_COLUMNS.len() - 1)),
            }
            if self.has_pr_column() {
                row.push(point.pr.to_string());
            }
            w.write_record(&row)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory cannot fail");
        String::from_utf8(buf).expect("CSV output is UTF-8")
    }

    pub fn sidecar_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
