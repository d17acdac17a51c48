use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::ValueEnum;
use num_bigint::BigInt;
use ratgen_core::{Polynomial, SeriesPrefix, VariableId};
use serde::Serialize;

use crate::CliError;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

/// Echo of the inputs that produced a result set.
#[derive(Debug, Default, Serialize)]
pub struct Query {
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mode: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<BTreeMap<String, String>>,
    pub num: String,
    pub den: String,
    pub pow: u32,
    pub order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub at: Option<BTreeMap<String, String>>,
}

#[derive(Debug, Serialize)]
pub struct Record {
    pub k: usize,
    pub poly: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
}

#[derive(Debug, Serialize)]
struct Document<'a> {
    query: &'a Query,
    results: &'a [Record],
}

pub type Assignment = BTreeMap<VariableId, BigInt>;

/// Parses `x=1,y=-2`; repeated flags are merged.
pub fn parse_assignment(specs: &[String]) -> Result<Option<Assignment>, CliError> {
    if specs.is_empty() {
        return Ok(None);
    }
    let mut out = Assignment::new();
    for spec in specs {
        for pair in spec.split(',').filter(|s| !s.trim().is_empty()) {
            let (name, value) = pair
                .split_once('=')
                .ok_or_else(|| CliError::input(format!("--at expects var=int, got `{pair}`")))?;
            let var =
                VariableId::new(name.trim()).map_err(|e| CliError::input(format!("--at: {e}")))?;
            let value: BigInt = value
                .trim()
                .parse()
                .map_err(|_| CliError::input(format!("--at: `{value}` is not an integer")))?;
            out.insert(var, value);
        }
    }
    Ok(Some(out))
}

pub fn records(series: &SeriesPrefix, at: Option<&Assignment>) -> Result<Vec<Record>, CliError> {
    series
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, p)| {
            let value = at
                .map(|a| p.eval(a).map(|v| v.to_string()))
                .transpose()
                .map_err(|e| CliError::input(format!("--at: {e}")))?;
            Ok(Record {
                k,
                poly: p.to_string(),
                value,
            })
        })
        .collect()
}

pub fn assignment_echo(at: &Assignment) -> BTreeMap<String, String> {
    at.iter()
        .map(|(v, n)| (v.to_string(), n.to_string()))
        .collect()
}

pub fn render(format: Format, query: &Query, records: &[Record]) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            for r in records {
                match &r.value {
                    Some(v) => writeln!(out, "P_{} = {} (= {v})", r.k, r.poly),
                    None => writeln!(out, "P_{} = {}", r.k, r.poly),
                }
                .expect("write to string");
            }
            out
        }
        Format::Json => {
            let doc = Document {
                query,
                results: records,
            };
            let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
            s.push('\n');
            s
        }
        Format::Csv => {
            let with_value = records.iter().any(|r| r.value.is_some());
            let mut out = String::from(if with_value {
                "k,poly,value\n"
            } else {
                "k,poly\n"
            });
            for r in records {
                write!(out, "{},\"{}\"", r.k, r.poly.replace('"', "\"\"")).expect("write");
                if let Some(v) = &r.value {
                    write!(out, ",{v}").expect("write");
                }
                out.push('\n');
            }
            out
        }
    }
}

/// Coefficient list written back as one expression in `t`.
pub fn in_t(coeffs: &[Polynomial]) -> String {
    ratgen_core::join_in_t(coeffs).to_string()
}
