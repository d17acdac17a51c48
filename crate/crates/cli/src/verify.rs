use std::fmt::Write as _;
use std::thread;

use clap::ValueEnum;
use ratgen_core::{
    cauchy_mul, convolve_prop1, corollary2_residual_of, expand_corollary1, expand_theorem1,
    geometric_inverse, leading_block_residual, multinomial_inverse, Polynomial, RationalGF,
    Result as CoreResult, SeriesPrefix,
};

use crate::CliError;

/// Largest order the multinomial oracle runs at without `--force`.
pub const MULTINOMIAL_CAP: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Oracle {
    Geometric,
    Multinomial,
    Convolution,
    Corollary2,
    All,
}

impl Oracle {
    fn name(self) -> &'static str {
        match self {
            Oracle::Geometric => "geometric",
            Oracle::Multinomial => "multinomial",
            Oracle::Convolution => "convolution",
            Oracle::Corollary2 => "corollary2",
            Oracle::All => "all",
        }
    }
}

enum Verdict {
    Pass {
        order: usize,
    },
    Fail {
        order: usize,
        k: usize,
        detail: Vec<(&'static str, Polynomial)>,
    },
}

fn compare(subject: &SeriesPrefix, oracle: &SeriesPrefix, what: &'static str) -> Verdict {
    let order = oracle.order();
    match subject.first_difference(oracle) {
        None => Verdict::Pass { order },
        Some(k) => Verdict::Fail {
            order,
            k,
            detail: vec![("expansion", subject[k].clone()), (what, oracle[k].clone())],
        },
    }
}

fn zero_residual(residual: &[Polynomial], order: usize) -> Verdict {
    match residual.iter().position(|r| !r.is_zero()) {
        None => Verdict::Pass { order },
        Some(k) => Verdict::Fail {
            order,
            k,
            detail: vec![("residual", residual[k].clone())],
        },
    }
}

fn run_oracle(
    oracle: Oracle,
    gf: &RationalGF,
    subject: &SeriesPrefix,
    order: usize,
    force: bool,
) -> CoreResult<Verdict> {
    let reduced = gf.reduced();
    let num = SeriesPrefix::from_coeffs(reduced.numerator().to_vec(), order)?;
    Ok(match oracle {
        Oracle::Geometric => {
            let inv = geometric_inverse(reduced.denominator(), order)?;
            compare(
                subject,
                &cauchy_mul(&num, &inv)?,
                "numerator * geometric inverse",
            )
        }
        Oracle::Multinomial => {
            let capped = if force {
                order
            } else {
                order.min(MULTINOMIAL_CAP)
            };
            let inv = multinomial_inverse(reduced.denominator(), capped)?;
            let numc = num.truncate(capped);
            compare(
                &subject.truncate(capped),
                &cauchy_mul(&numc, &inv)?,
                "numerator * multinomial inverse",
            )
        }
        Oracle::Convolution => {
            let q = expand_corollary1(reduced.denominator(), order)?;
            compare(
                subject,
                &convolve_prop1(reduced.numerator(), &q),
                "convolution of numerator with 1/B",
            )
        }
        Oracle::Corollary2 => {
            let residual = corollary2_residual_of(&reduced, subject)?;
            match zero_residual(residual.coeffs(), order) {
                Verdict::Pass { .. } => {
                    zero_residual(&leading_block_residual(&reduced, subject)?, order)
                }
                fail => fail,
            }
        }
        Oracle::All => unreachable!("expanded by caller"),
    })
}

/// Runs the selected oracles against the recurrence expansion.
///
/// Returns the report text and whether every oracle passed.
pub fn verify(
    gf: &RationalGF,
    order: usize,
    selected: Oracle,
    force: bool,
    corrupt_at: Option<usize>,
) -> Result<(String, bool), CliError> {
    if selected == Oracle::Multinomial && order > MULTINOMIAL_CAP && !force {
        return Err(CliError::input(format!(
            "the multinomial oracle is exponential and limited to N <= {MULTINOMIAL_CAP}; pass --force to run it at N = {order}"
        )));
    }
    let mut subject = expand_theorem1(gf, order)?;
    if let Some(k) = corrupt_at.filter(|&k| k <= order) {
        let bumped = subject[k].add(&Polynomial::one());
        subject = subject.with_coeff(k, bumped)?;
    }
    let oracles: Vec<Oracle> = match selected {
        Oracle::All => vec![
            Oracle::Geometric,
            Oracle::Multinomial,
            Oracle::Convolution,
            Oracle::Corollary2,
        ],
        one => vec![one],
    };

    let verdicts: Vec<CoreResult<Verdict>> = thread::scope(|s| {
        let handles: Vec<_> = oracles
            .iter()
            .map(|&o| {
                let subject = &subject;
                s.spawn(move || run_oracle(o, gf, subject, order, force))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("oracle thread panicked"))
            .collect()
    });

    let mut report = String::new();
    let mut ok = true;
    for (oracle, verdict) in oracles.iter().zip(verdicts) {
        match verdict? {
            Verdict::Pass { order } => {
                writeln!(report, "PASS {} (N={order})", oracle.name()).expect("write");
            }
            Verdict::Fail { order, k, detail } => {
                ok = false;
                writeln!(report, "FAIL {} (N={order}) at k={k}", oracle.name()).expect("write");
                for (label, p) in detail {
                    writeln!(report, "  {label}: {p}").expect("write");
                }
            }
        }
    }
    Ok((report, ok))
}
