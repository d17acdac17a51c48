use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::{Args, Subcommand};
use ratgen_core::families::{self, parse_params, ModeAudit};
use ratgen_core::{audit, expand_theorem1, list_families, Mode, Params};

use crate::output::{assignment_echo, in_t, parse_assignment, records, render, Query};
use crate::{CliError, Outcome, OutputArgs};

#[derive(Subcommand, Debug)]
pub enum FamilyCommand {
    /// List the catalog with each generating function.
    List,
    /// Expand a named family.
    Expand {
        #[command(flatten)]
        select: Selection,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Compare computed initial values and recurrence with the published ones.
    Audit {
        #[command(flatten)]
        select: Selection,
        /// Compute P_0 through P_N.
        #[arg(short = 'N', value_name = "ORDER")]
        order: usize,
    },
}

#[derive(Args, Debug)]
pub struct Selection {
    /// Family name, as shown by `family list`.
    name: String,
    /// Parameter assignment `key=value`; repeatable.
    #[arg(long = "param", value_name = "KEY=VALUE", allow_hyphen_values = true)]
    params: Vec<String>,
    /// Numerator as published (`printed`) or consistent with the published initial values (`canonical`).
    #[arg(long, default_value = "canonical", value_parser = parse_mode)]
    mode: Mode,
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse().map_err(|e: ratgen_core::Error| e.to_string())
}

impl Selection {
    fn params(&self) -> Result<Params, CliError> {
        let pairs = self
            .params
            .iter()
            .map(|p| {
                p.split_once('=')
                    .ok_or_else(|| CliError::input(format!("--param expects key=value, got `{p}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(parse_params(&self.name, pairs)?)
    }
}

fn params_echo(params: &Params) -> BTreeMap<String, String> {
    params
        .iter()
        .map(|(k, v)| (k.clone(), v.to_string()))
        .collect()
}

pub fn run(cmd: FamilyCommand) -> Result<Outcome, CliError> {
    match cmd {
        FamilyCommand::List => {
            let width = list_families()
                .iter()
                .map(|d| d.name.len())
                .max()
                .unwrap_or(0);
            let mut out = String::new();
            for d in list_families() {
                writeln!(out, "{:width$}  {}", d.name, d.generating_function).expect("write");
            }
            Ok(Outcome::ok(out))
        }
        FamilyCommand::Expand { select, out } => {
            let params = select.params()?;
            let spec = families::spec(&select.name, &params)?;
            let gf = spec.gf(select.mode)?;
            let at = parse_assignment(&out.at)?;
            let series = expand_theorem1(&gf, out.order)?;
            let recs = records(&series, at.as_ref())?;
            let query = Query {
                command: "family expand",
                family: Some(spec.name.to_string()),
                mode: Some(select.mode.to_string()),
                params: Some(params_echo(&spec.parameters)),
                num: in_t(gf.numerator()),
                den: in_t(gf.denominator()),
                pow: gf.power(),
                order: out.order,
                at: at.as_ref().map(assignment_echo),
            };
            Ok(Outcome::ok(render(out.format, &query, &recs)))
        }
        FamilyCommand::Audit { select, order } => {
            let params = select.params()?;
            let report = audit(&select.name, &params, order)?;
            let mut stdout = String::new();
            let mut header = format!("family: {}", report.family);
            if !report.parameters.is_empty() {
                let shown: Vec<_> = report
                    .parameters
                    .iter()
                    .map(|(k, v)| format!("{k}={v}"))
                    .collect();
                write!(header, " ({})", shown.join(", ")).expect("write");
            }
            writeln!(stdout, "{header}\nN: {order}").expect("write");
            let requested = report.mode(select.mode);
            write_mode(&mut stdout, requested);

            let mut stderr = String::new();
            for other in report.modes.iter().filter(|m| m.mode != select.mode) {
                if !other.all_match() {
                    writeln!(
                        stderr,
                        "WARN: {} mode disagrees with the published values",
                        other.mode
                    )
                    .expect("write");
                    let mut block = String::new();
                    write_mode(&mut block, other);
                    for line in block.lines() {
                        writeln!(stderr, "WARN: {line}").expect("write");
                    }
                }
            }
            Ok(Outcome {
                stdout,
                stderr,
                code: if requested.all_match() { 0 } else { 1 },
            })
        }
    }
}

fn write_mode(out: &mut String, m: &ModeAudit) {
    writeln!(out, "mode: {}", m.mode).expect("write");
    writeln!(out, "numerator: {}", in_t(&m.numerator)).expect("write");
    if m.entries.is_empty() {
        writeln!(out, "initial values: none published").expect("write");
    }
    for e in &m.entries {
        if e.matches() {
            writeln!(out, "  MATCH    P_{} = {}", e.k, e.computed).expect("write");
        } else {
            writeln!(
                out,
                "  MISMATCH P_{}: computed {}, stated {}",
                e.k, e.computed, e.stated
            )
            .expect("write");
        }
    }
    let verdict = if m.recurrence_matches() {
        "MATCH   "
    } else {
        "MISMATCH"
    };
    writeln!(out, "  {verdict} recurrence {}", m.recurrence).expect("write");
    writeln!(
        out,
        "verdict: {}",
        if m.all_match() { "match" } else { "mismatch" }
    )
    .expect("write");
}
