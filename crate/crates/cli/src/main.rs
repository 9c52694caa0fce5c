//! `prefarg`: solve, infer, verify, filter, generate and bench from the
//! command line.
//!
//! Results go to stdout, diagnostics to stderr. Exit codes: 0 success
//! (a failed verification is a result, not an error), 1 I/O failure,
//! 2 usage error, 3 unreadable input, 4 input rejected on semantic grounds.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use prefarg_bench::{run_sweep, SweepConfig};
use prefarg_core::format::{self, Format};
use prefarg_core::inference::{branch_structure, compute_all_with_cap, compute_approx};
use prefarg_core::{
    common_preferences, enumerate, sample_instance, unique_preferences, verify_collection, ArgumentationFramework,
    DefenderPolicy, Extension, GeneratorConfig, PreferenceCollection, PreferenceDocument, Semantics, VerifyMethod,
    DEFAULT_COLLECTION_CAP,
};

#[derive(Parser)]
#[command(
    name = "prefarg",
    version,
    about = "Preference inference and verification for abstract argumentation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum InferMode {
    Exhaustive,
    #[value(alias = "approximate")]
    Approx,
}

#[derive(Clone, Copy, ValueEnum)]
enum FilterMode {
    Unique,
    Common,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Apx,
    Tgf,
}

impl From<GraphFormat> for Format {
    fn from(f: GraphFormat) -> Format {
        match f {
            GraphFormat::Apx => Format::Apx,
            GraphFormat::Tgf => Format::Tgf,
        }
    }
}

#[derive(clap::Args)]
struct Input {
    /// Framework file (APX, or TGF for `.tgf` files).
    #[arg(long, short)]
    input: PathBuf,
    /// Override the format implied by the file extension.
    #[arg(long, value_enum)]
    input_format: Option<GraphFormat>,
}

impl Input {
    fn load(&self) -> Result<ArgumentationFramework> {
        let text = read(&self.input)?;
        let fmt = self
            .input_format
            .map(Format::from)
            .unwrap_or_else(|| Format::from_path(&self.input));
        format::parse(&text, fmt).with_context(|| format!("parsing {}", self.input.display()))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the extensions of a framework, one per line.
    Solve {
        #[command(flatten)]
        input: Input,
        /// conflict-free, admissible, complete, grounded, preferred or stable.
        #[arg(long, short)]
        semantics: Semantics,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Infer the preference sets that justify a conflict-free extension.
    Infer {
        #[command(flatten)]
        input: Input,
        /// Comma-separated argument names; an empty string is the empty set.
        #[arg(long, short, allow_hyphen_values = true)]
        extension: String,
        #[arg(long, value_enum, default_value = "exhaustive")]
        mode: InferMode,
        /// unattacked (defenders must be unattacked) or any-defender.
        #[arg(long, default_value = "unattacked")]
        policy: DefenderPolicy,
        /// Seed for the approximate mode.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Print the collection size instead of the collection.
        #[arg(long)]
        count_only: bool,
        /// Refuse exhaustive collections larger than this.
        #[arg(long, default_value_t = DEFAULT_COLLECTION_CAP)]
        cap: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: OutputFormat,
    },
    /// Check that preference sets single out an extension; prints a JSON report.
    Verify {
        #[command(flatten)]
        input: Input,
        #[arg(long, short, allow_hyphen_values = true)]
        extension: String,
        /// grounded, preferred or stable.
        #[arg(long, short)]
        semantics: Semantics,
        /// JSON preference document, as written by `infer`.
        #[arg(long, short)]
        prefs: PathBuf,
        /// removal or reversal.
        #[arg(long, short)]
        method: VerifyMethod,
    },
    /// Compare the preferences of two preference documents.
    Filter {
        #[arg(long, value_enum)]
        mode: FilterMode,
        #[arg(long)]
        prefs1: PathBuf,
        #[arg(long)]
        prefs2: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Print a random framework.
    Generate {
        #[arg(long, short = 'n')]
        size: usize,
        #[arg(long, short = 'p')]
        attack_prob: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        allow_self_attacks: bool,
        /// Redraw until the framework has a non-empty extension under this
        /// semantics, and name its largest one in a comment.
        #[arg(long)]
        require: Option<Semantics>,
        #[arg(long, default_value_t = 1000)]
        max_attempts: usize,
        #[arg(long, value_enum, default_value = "apx")]
        format: GraphFormat,
    },
    /// Run a benchmark sweep described by a JSON configuration.
    Bench {
        #[arg(long, short)]
        config: PathBuf,
        /// CSV destination; stdout when omitted.
        #[arg(long, short)]
        out: Option<PathBuf>,
        /// JSON sidecar destination; defaults to the CSV path with a `.json`
        /// extension.
        #[arg(long)]
        sidecar: Option<PathBuf>,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_prefs(path: &Path) -> Result<PreferenceCollection> {
    let text = read(path)?;
    PreferenceCollection::from_json_document(&text).with_context(|| format!("parsing {}", path.display()))
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("output values serialize")
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Solve {
            input,
            semantics,
            format,
        } => {
            let framework = input.load()?;
            let all = enumerate(&framework, semantics);
            match format {
                OutputFormat::Text => {
                    for e in &all {
                        println!("{e}");
                    }
                }
                OutputFormat::Json => println!("{}", json(&all)),
            }
        }
        Command::Infer {
            input,
            extension,
            mode,
            policy,
            seed,
            count_only,
            cap,
            format,
        } => {
            let framework = input.load()?;
            let e = Extension::parse_list(&extension)?;
            if count_only {
                let s = branch_structure(&framework, &e, policy)?;
                let size = match mode {
                    InferMode::Exhaustive => s.collection_size().to_string(),
                    InferMode::Approx => "1".to_string(),
                };
                match format {
                    OutputFormat::Text => println!("{size}"),
                    OutputFormat::Json => println!(
                        "{{\"preference_sets\":{size},\"preferences\":{},\"case1\":{},\"case2\":{},\"case3\":{}}}",
                        s.preferences_per_set(),
                        s.c1(),
                        s.c2(),
                        s.c3()
                    ),
                }
                return Ok(());
            }
            let preference_sets = match mode {
                InferMode::Exhaustive => compute_all_with_cap(&framework, &e, policy, cap)?,
                InferMode::Approx => PreferenceCollection::singleton(compute_approx(&framework, &e, policy, seed)?),
            };
            match format {
                OutputFormat::Text => print!("{}", preference_sets.to_text()),
                OutputFormat::Json => println!(
                    "{}",
                    json(&PreferenceDocument {
                        extension: e,
                        preference_sets
                    })
                ),
            }
        }
        Command::Verify {
            input,
            extension,
            semantics,
            prefs,
            method,
        } => {
            let framework = input.load()?;
            let e = Extension::parse_list(&extension)?;
            let collection = load_prefs(&prefs)?;
            let report = verify_collection(&framework, &e, semantics, &collection, method)?;
            println!("{}", json(&report));
        }
        Command::Filter {
            mode,
            prefs1,
            prefs2,
            format,
        } => {
            let c1 = load_prefs(&prefs1)?;
            let c2 = load_prefs(&prefs2)?;
            let out = match mode {
                FilterMode::Unique => unique_preferences(&c1, &c2),
                FilterMode::Common => common_preferences(&c1, &c2),
            };
            match format {
                OutputFormat::Text => println!("{}", out.to_strings().join(",")),
                OutputFormat::Json => println!("{}", json(&out)),
            }
        }
        Command::Generate {
            size,
            attack_prob,
            seed,
            allow_self_attacks,
            require,
            max_attempts,
            format,
        } => {
            let mut config = GeneratorConfig::new(size, attack_prob, seed);
            config.allow_self_attacks = allow_self_attacks;
            let fmt = Format::from(format);
            match require {
                None => print!("{}", format::serialize(&prefarg_core::random_aaf(&config)?, fmt)),
                Some(semantics) => {
                    let instance = sample_instance(&config, semantics, max_attempts)?;
                    if fmt == Format::Apx {
                        println!("% extension({semantics}): {}", instance.extension);
                    }
                    log::info!("accepted draw {} (seed {})", instance.attempts, instance.seed);
                    print!("{}", format::serialize(&instance.framework, fmt));
                }
            }
        }
        Command::Bench { config, out, sidecar } => {
            let sweep =
                SweepConfig::from_json(&read(&config)?).with_context(|| format!("loading {}", config.display()))?;
            let report = run_sweep(&sweep)?;
            match &out {
                Some(path) => {
                    fs::write(path, report.to_csv_string()).with_context(|| format!("writing {}", path.display()))?;
                    let side = sidecar.unwrap_or_else(|| path.with_extension("json"));
                    fs::write(&side, report.sidecar_json()).with_context(|| format!("writing {}", side.display()))?;
                }
                None => {
                    print!("{}", report.to_csv_string());
                    if let Some(side) = sidecar {
                        fs::write(&side, report.sidecar_json())
                            .with_context(|| format!("writing {}", side.display()))?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<prefarg_core::Error>() {
        Some(e) if e.is_parse_error() => 3,
        Some(_) => 4,
        None => 1,
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
