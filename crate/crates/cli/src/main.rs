//! Command-line front end: parses point-configuration files, dispatches the
//! exact computations, and emits deterministic tables and reports.
//!
//! Exit codes: 0 on success, 2 for input problems (unreadable or malformed
//! files, bad flag values), 3 for mathematical precondition failures
//! (ambiguous or singular cubic, unrealizable torsion order, and the like).

mod input;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use fatpoints::catalog::{generate_over_fp, generate_over_q};
use fatpoints::interpolation::{alpha_t, dim_symbolic_component};
use fatpoints::verify::{support_experiment, verify_config};
use fatpoints::FieldSpec;

#[derive(Parser)]
#[command(
    name = "fatpoints",
    version,
    about = "Exact graded dimensions of symbolic powers of point ideals, and \
             the plane-cubic group law that predicts when they jump"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print dim [I^(t)]_d for the configuration in a file
    Dim {
        /// JSON configuration file
        input: PathBuf,
        /// Symbolic power; defaults to the file's "multiplicity", then to 1
        #[arg(long)]
        t: Option<u32>,
        /// Degree of the graded component
        #[arg(long)]
        d: u32,
        /// Write the result here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tabulate the initial degree alpha_t for t = 1..t-max (CSV)
    Alpha {
        /// JSON configuration file
        input: PathBuf,
        /// Largest symbolic power to tabulate
        #[arg(long, default_value_t = 4)]
        t_max: u32,
        /// Cap the degree search; a row's alpha cell is left empty when no
        /// form of degree <= d-max exists
        #[arg(long)]
        d_max: Option<u32>,
        /// Write the CSV here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare the torsion prediction for h0 against the rank oracle on
    /// nine plane points, for t = 1..t-max
    Verify {
        /// JSON configuration file with exactly nine points in the plane
        input: PathBuf,
        /// Largest symbolic power to check
        #[arg(long, default_value_t = 8)]
        t_max: u32,
        /// Torsion search bound; "no torsion" is certified only up to this
        #[arg(long, default_value_t = 36)]
        bound: u32,
        /// Write the JSON report here; the table still goes to stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit nine plane points whose class on the cubic through them has a
    /// prescribed torsion order, as a configuration file
    Generate {
        /// Desired torsion order of [3H - sum P_i]
        #[arg(long)]
        order: u32,
        /// "rationals" (orders 1-6) or a prime p for the field F_p
        #[arg(long, default_value = "rationals")]
        field: String,
        /// Selects among the deterministic seed windows
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the configuration here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate and verify one configuration per torsion order, tabulating
    /// where h1 first jumps (CSV)
    Support {
        /// Comma-separated torsion orders, e.g. 1,2,3
        #[arg(long, value_delimiter = ',', required = true)]
        orders: Vec<u32>,
        /// "rationals" or a prime p; orders the rational catalog cannot
        /// realize fall back to a finite field either way
        #[arg(long, default_value = "rationals")]
        field: String,
        /// Largest symbolic power in the h0 columns
        #[arg(long, default_value_t = 8)]
        t_max: u32,
        /// Write the CSV here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug)]
pub enum CliError {
    /// Unreadable or malformed input: exit code 2.
    Input(String),
    /// A computation's mathematical precondition failed: exit code 3.
    Math(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Math(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Math(m) => m,
        }
    }
}

fn math(e: fatpoints::Error) -> CliError {
    CliError::Math(e.to_string())
}

fn at_least_one(name: &str, value: u32) -> Result<(), CliError> {
    if value == 0 {
        return Err(CliError::Input(format!("{name} must be >= 1")));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Dim { input, t, d, out } => {
            let parsed = input::read_config(&input)?;
            let t = t.or(parsed.multiplicity).unwrap_or(1);
            at_least_one("t", t)?;
            let dim = dim_symbolic_component(&parsed.config, t, d);
            output::emit(out.as_deref(), &format!("{dim}\n"))
        }
        Command::Alpha {
            input,
            t_max,
            d_max,
            out,
        } => {
            at_least_one("t-max", t_max)?;
            let parsed = input::read_config(&input)?;
            let rows: Vec<(u32, Option<u32>)> = (1..=t_max)
                .map(|t| (t, alpha_t(&parsed.config, t, d_max)))
                .collect();
            output::emit(out.as_deref(), &output::alpha_csv(&rows))
        }
        Command::Verify {
            input,
            t_max,
            bound,
            out,
        } => {
            at_least_one("t-max", t_max)?;
            at_least_one("bound", bound)?;
            let parsed = input::read_config(&input)?;
            let report = verify_config(&parsed.config, t_max, bound).map_err(math)?;
            let json = serde_json::to_string_pretty(&output::verify_json(&report))
                .expect("report serializes")
                + "\n";
            print!("{}", output::verify_table(&report));
            match out {
                Some(path) => output::emit(Some(&path), &json),
                None => {
                    print!("\n{json}");
                    Ok(())
                }
            }
        }
        Command::Generate {
            order,
            field,
            seed,
            out,
        } => {
            at_least_one("order", order)?;
            let field = input::parse_field_flag(&field)?;
            let generated = match field {
                FieldSpec::Rationals => generate_over_q(order, seed),
                FieldSpec::Prime(p) => generate_over_fp(order, Some(p), seed),
            }
            .map_err(math)?;
            let json = serde_json::to_string_pretty(&output::config_json(&generated.config))
                .expect("configuration serializes")
                + "\n";
            output::emit(out.as_deref(), &json)
        }
        Command::Support {
            orders,
            field,
            t_max,
            out,
        } => {
            at_least_one("t-max", t_max)?;
            for &order in &orders {
                at_least_one("each order", order)?;
            }
            let field = input::parse_field_flag(&field)?;
            let summary = support_experiment(&orders, field, t_max).map_err(math)?;
            output::emit(out.as_deref(), &output::support_csv(&summary, t_max))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
