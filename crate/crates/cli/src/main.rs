//! `ratgen`: expand rational generating functions, derive their recurrences,
//! verify expansions against independent oracles, and browse the family catalog.
//!
//! Exit status: 0 on success, 1 on a verification or audit mismatch, 2 on
//! invalid input.

mod family;
mod output;
mod verify;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ratgen_core::{derive_recurrence, expand_theorem1, parse_poly, split_in_t, RationalGF};

use output::{assignment_echo, parse_assignment, records, render, Format, Query};
use verify::Oracle;

#[derive(Debug)]
pub struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<ratgen_core::Error> for CliError {
    fn from(e: ratgen_core::Error) -> Self {
        CliError::input(e.to_string())
    }
}

/// Successful run: text for stdout and the exit status (0 or 1).
pub struct Outcome {
    stdout: String,
    stderr: String,
    code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "ratgen",
    version,
    about = "Recursive polynomial families from rational generating functions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expand A(t)/B(t)^h to order N.
    Expand {
        #[command(flatten)]
        gf: GfArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Print the recursion satisfied by the coefficients.
    Recurrence {
        #[command(flatten)]
        gf: GfArgs,
    },
    /// Check the recursive expansion against independent constructions.
    Verify {
        #[command(flatten)]
        gf: GfArgs,
        /// Compute P_0 through P_N.
        #[arg(short = 'N', value_name = "ORDER")]
        order: usize,
        #[arg(long, value_enum, default_value = "all")]
        oracle: Oracle,
        /// Run the multinomial oracle past its order cap.
        #[arg(long)]
        force: bool,
        /// Add 1 to P_k before checking (exercises the failure path).
        #[arg(long, hide = true, value_name = "K")]
        corrupt_at: Option<usize>,
    },
    /// The built-in catalog of named families.
    Family {
        #[command(subcommand)]
        action: family::FamilyCommand,
    },
}

#[derive(Args, Debug)]
struct GfArgs {
    /// Numerator A(t), e.g. "t" or "2 - x*t".
    #[arg(long, allow_hyphen_values = true)]
    num: String,
    /// Denominator B(t); its constant term must be 1.
    #[arg(long, allow_hyphen_values = true)]
    den: String,
    /// Denominator power h.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pow: u32,
}

impl GfArgs {
    fn build(&self) -> Result<RationalGF, CliError> {
        let parse = |flag: &str, src: &str| {
            parse_poly(src)
                .map(|p| split_in_t(&p))
                .map_err(|e| CliError::input(format!("--{flag}: {e}")))
        };
        let num = parse("num", &self.num)?;
        let den = parse("den", &self.den)?;
        Ok(RationalGF::new(num, den, self.pow)?)
    }
}

#[derive(Args, Debug)]
pub struct OutputArgs {
    /// Compute P_0 through P_N.
    #[arg(short = 'N', value_name = "ORDER")]
    order: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Also evaluate each P_k at integer values, e.g. --at x=1,y=2.
    #[arg(long, value_name = "VAR=INT,...")]
    at: Vec<String>,
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Expand { gf, out } => {
            let g = gf.build()?;
            let at = parse_assignment(&out.at)?;
            let series = expand_theorem1(&g, out.order)?;
            let recs = records(&series, at.as_ref())?;
            let query = Query {
                command: "expand",
                num: gf.num.clone(),
                den: gf.den.clone(),
                pow: gf.pow,
                order: out.order,
                at: at.as_ref().map(assignment_echo),
                ..Query::default()
            };
            Ok(Outcome::ok(render(out.format, &query, &recs)))
        }
        Command::Recurrence { gf } => {
            let r = derive_recurrence(&gf.build()?)?;
            Ok(Outcome::ok(format!(
                "{r}\norder: {}\nforcing cutoff: {}\n",
                r.order(),
                r.forcing_cutoff()
            )))
        }
        Command::Verify {
            gf,
            order,
            oracle,
            force,
            corrupt_at,
        } => {
            let (report, ok) = verify::verify(&gf.build()?, order, oracle, force, corrupt_at)?;
            Ok(Outcome {
                stdout: report,
                stderr: String::new(),
                code: if ok { 0 } else { 1 },
            })
        }
        Command::Family { action } => family::run(action),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap exits 0 for --help/--version and 2 for usage errors
            e.exit();
        }
    };
    let (stdout, stderr, code) = match run(cli) {
        Ok(o) => (o.stdout, o.stderr, o.code),
        Err(e) => (String::new(), format!("error: {}\n", e.message), e.code),
    };
    let _ = std::io::stdout().write_all(stdout.as_bytes());
    let _ = std::io::stderr().write_all(stderr.as_bytes());
    ExitCode::from(code)
}
