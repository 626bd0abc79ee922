//! `manin` — exact verification of double Poisson structures, weak
//! sections, and flag-variety splittings from JSON input specs or the
//! built-in cases.
//!
//! Exit codes: 0 when every clause passes, 1 when a check fails or a
//! computation is refused, 2 for argument or input-file errors.

use clap::{Parser, Subcommand, ValueEnum};
use manin::cli::{self, CommandOutcome};
use manin::flagapps::CaseKind;
use manin::sampling::effective_seed;
use manin::{DoubleVariant, Error, SuiteOpts};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Copy, Clone, Debug, ValueEnum)]
enum CaseArg {
    /// group × torus double (full flag variety)
    Gxt,
    /// group × group double (double flag variety)
    Gxg,
}

impl From<CaseArg> for CaseKind {
    fn from(c: CaseArg) -> CaseKind {
        match c {
            CaseArg::Gxt => CaseKind::GroupTorus,
            CaseArg::Gxg => CaseKind::GroupGroup,
        }
    }
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum VariantArg {
    Drinfeld,
    Heisenberg,
}

impl From<VariantArg> for DoubleVariant {
    fn from(v: VariantArg) -> DoubleVariant {
        match v {
            VariantArg::Drinfeld => DoubleVariant::Drinfeld,
            VariantArg::Heisenberg => DoubleVariant::Heisenberg,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "manin",
    version,
    about = "Exact checks for Manin triples, double Poisson structures, and weak splittings"
)]
struct Cli {
    /// Print the machine-readable JSON report instead of text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate the Lie structure, invariant form, and Manin-triple axioms of a spec file
    Validate {
        /// Path to the JSON input spec
        #[arg(long)]
        spec: PathBuf,
    },
    /// Construct the r-matrix of the triple and check its Schouten square
    Rmatrix {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Evaluate the double Poisson bivector at a section's base point
    BivectorAt {
        #[arg(long)]
        spec: PathBuf,
        /// Index into the spec's sections list
        #[arg(long)]
        section: usize,
    },
    /// Check section conditions and weak-section verification with sampling
    CheckSection {
        #[arg(long)]
        spec: PathBuf,
        /// Check only this section (default: all)
        #[arg(long)]
        section: Option<usize>,
        /// Random orbit points per section
        #[arg(long, default_value_t = 3)]
        samples: usize,
        /// Sampling seed (the MANIN_SEED environment variable overrides this)
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Run the weak-splitting suite over the spec's sections and coverage points
    CheckSplitting {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, default_value_t = 3)]
        samples: usize,
        #[arg(long)]
        seed: Option<u64>,
        /// Verify sections in parallel (the report order is deterministic either way)
        #[arg(long)]
        parallel: bool,
    },
    /// Run a built-in flag-variety suite end to end
    FlagSuite {
        #[arg(long, value_enum)]
        case: CaseArg,
        /// Matrix size n of sl_n
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        variant: VariantArg,
        /// Random orbit points per cell representative
        #[arg(long, default_value_t = 5)]
        samples: usize,
        /// Random coverage points for the cell-partition check
        #[arg(long, default_value_t = 100)]
        coverage: usize,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        parallel: bool,
        /// Allow n > 4 (the Weyl-pair count grows steeply)
        #[arg(long)]
        allow_large: bool,
    },
    /// List minimal-length coset representatives for W/W_I in S_n
    CosetReps {
        #[arg(long)]
        n: usize,
        /// Comma-separated 1-based simple reflections generating W_I (e.g. "1,3")
        #[arg(long, default_value = "")]
        parabolic: String,
    },
    /// Print a built-in case as a canonical JSON input spec
    ExportBuiltin {
        #[arg(long, value_enum)]
        case: CaseArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        variant: VariantArg,
        /// Coverage points to embed in the exported spec
        #[arg(long, default_value_t = 4)]
        coverage: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn load_spec(path: &Path) -> manin::Result<cli::InputSpec> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    cli::parse_input_spec(&text)
}

fn parse_parabolic(text: &str) -> manin::Result<Vec<usize>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>().map_err(|_| {
                Error::Spec {
                    pointer: "/parabolic".into(),
                    message: format!("not a simple-reflection number: {s:?}"),
                }
            })
        })
        .collect()
}

fn run(cli_args: Cli) -> manin::Result<CommandOutcome> {
    match cli_args.command {
        Command::Validate { spec } => cli::cmd_validate(&load_spec(&spec)?),
        Command::Rmatrix { spec } => cli::cmd_rmatrix(&load_spec(&spec)?),
        Command::BivectorAt { spec, section } => cli::cmd_bivector_at(&load_spec(&spec)?, section),
        Command::CheckSection { spec, section, samples, seed } => {
            cli::cmd_check_section(&load_spec(&spec)?, section, samples, effective_seed(seed))
        }
        Command::CheckSplitting { spec, samples, seed, parallel } => {
            cli::cmd_check_splitting(&load_spec(&spec)?, samples, effective_seed(seed), parallel)
        }
        Command::FlagSuite { case, n, variant, samples, coverage, seed, parallel, allow_large } => {
            let opts = SuiteOpts {
                seed: effective_seed(seed),
                samples_per_cell: samples,
                coverage_points: coverage,
                parallel,
                allow_large,
            };
            cli::cmd_flag_suite(case.into(), n, variant.into(), &opts)
        }
        Command::CosetReps { n, parabolic } => {
            cli::cmd_coset_reps(n, &parse_parabolic(&parabolic)?)
        }
        Command::ExportBuiltin { case, n, variant, coverage, seed } => {
            cli::cmd_export_builtin(case.into(), n, variant.into(), coverage, effective_seed(seed))
        }
    }
}

fn main() -> ExitCode {
    let cli_args = Cli::parse();
    let want_json = cli_args.json;
    match run(cli_args) {
        Ok(outcome) => {
            if want_json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&outcome.json)
                        .expect("report serialization cannot fail")
                );
            } else {
                print!("{}", outcome.human);
            }
            ExitCode::from(u8::try_from(outcome.exit_code).unwrap_or(1))
        }
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Spec { .. } | Error::RatParse { .. } | Error::Json(_) | Error::Io(_) => 2,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}
