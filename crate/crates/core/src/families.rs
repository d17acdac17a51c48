//! Named polynomial families and an auditor for their published initial values.
//!
//! Several catalog entries print a numerator whose expansion does not start with
//! the initial values printed next to it. Each such family keeps both the
//! printed numerator and a canonical one that reproduces the stated values;
//! [`Mode`] selects between them.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::parser::parse_coefficient;
use crate::poly::{ExponentVector, Polynomial, VariableId};
use crate::recurrence::{derive_recurrence, expand_theorem1, RationalGF, Recurrence};
use crate::series::SeriesPrefix;

/// Which numerator of a family to use.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mode {
    /// The numerator exactly as published.
    Printed,
    /// A numerator consistent with the published initial values.
    #[default]
    Canonical,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Printed => "printed",
            Mode::Canonical => "canonical",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "printed" => Ok(Mode::Printed),
            "canonical" => Ok(Mode::Canonical),
            other => Err(Error::bad_parameter(
                "mode",
                format!("unknown mode `{other}`"),
            )),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamKind {
    Int {
        min: i64,
        max: i64,
    },
    /// A polynomial in the coefficient variables (no `t`).
    Poly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParamValue {
    Int(i64),
    Poly(Polynomial),
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(n) => write!(f, "{n}"),
            ParamValue::Poly(p) => write!(f, "{p}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParamDecl {
    pub name: &'static str,
    pub kind: ParamKind,
    pub default: &'static str,
}

impl ParamDecl {
    /// Parses a textual value for this parameter and checks its range.
    pub fn parse(&self, text: &str) -> Result<ParamValue> {
        match self.kind {
            ParamKind::Int { min, max } => {
                let n: i64 = text.trim().parse().map_err(|_| {
                    Error::bad_parameter(self.name, format!("expected an integer, got `{text}`"))
                })?;
                if n < min || n > max {
                    return Err(Error::bad_parameter(
                        self.name,
                        format!("{n} is outside {min}..={max}"),
                    ));
                }
                Ok(ParamValue::Int(n))
            }
            ParamKind::Poly => parse_coefficient(text)
                .map(ParamValue::Poly)
                .map_err(|e| Error::bad_parameter(self.name, e.to_string())),
        }
    }
}

/// Catalog entry: name, generating function as published, and parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyDescriptor {
    pub name: &'static str,
    pub title: &'static str,
    pub generating_function: &'static str,
    pub params: &'static [ParamDecl],
}

/// Resolved parameter values, keyed by parameter name.
pub type Params = BTreeMap<String, ParamValue>;

const EXPONENT_MAX: i64 = 4096;

const M_FROM_2: ParamKind = ParamKind::Int {
    min: 2,
    max: EXPONENT_MAX,
};
const POSITIVE: ParamKind = ParamKind::Int {
    min: 1,
    max: EXPONENT_MAX,
};
const ANY_INT: ParamKind = ParamKind::Int {
    min: i64::MIN,
    max: i64::MAX,
};

static CATALOG: &[FamilyDescriptor] = &[
    FamilyDescriptor {
        name: "catalan",
        title: "Catalan polynomials",
        generating_function: "1 / (1 - t + x*t^2)",
        params: &[],
    },
    FamilyDescriptor {
        name: "fibonacci",
        title: "Fibonacci polynomials",
        generating_function: "t / (1 - x*t - t^2)",
        params: &[],
    },
    FamilyDescriptor {
        name: "gen_catalan",
        title: "generalized Catalan polynomials",
        generating_function: "(1 + A*t) / (1 - m*t + x*t^m)",
        params: &[
            ParamDecl {
                name: "A",
                kind: ParamKind::Poly,
                default: "0",
            },
            ParamDecl {
                name: "m",
                kind: M_FROM_2,
                default: "2",
            },
        ],
    },
    FamilyDescriptor {
        name: "gen_fibonacci",
        title: "generalized Fibonacci polynomials U",
        generating_function: "t / (1 - x*t - t^m)",
        params: &[ParamDecl {
            name: "m",
            kind: M_FROM_2,
            default: "3",
        }],
    },
    FamilyDescriptor {
        name: "gen_lucas",
        title: "generalized Lucas polynomials V",
        generating_function: "(2 - x*t) / (1 - x*t - t^m)",
        params: &[ParamDecl {
            name: "m",
            kind: M_FROM_2,
            default: "3",
        }],
    },
    FamilyDescriptor {
        name: "gen_two_var_fibonacci",
        title: "generalized two-variable Fibonacci polynomials",
        generating_function: "(1 + A*t) / (1 - x^a*t - y^b*t^(b+c))",
        params: &[
            ParamDecl {
                name: "A",
                kind: ParamKind::Poly,
                default: "0",
            },
            ParamDecl {
                name: "a",
                kind: POSITIVE,
                default: "1",
            },
            ParamDecl {
                name: "b",
                kind: POSITIVE,
                default: "1",
            },
            ParamDecl {
                name: "c",
                kind: POSITIVE,
                default: "1",
            },
        ],
    },
    FamilyDescriptor {
        name: "horadam_first",
        title: "Horadam polynomials (first kind)",
        generating_function: "1 / (1 - p*x*t - q*t^2)",
        params: &[
            ParamDecl {
                name: "p",
                kind: ANY_INT,
                default: "1",
            },
            ParamDecl {
                name: "q",
                kind: ANY_INT,
                default: "1",
            },
        ],
    },
    FamilyDescriptor {
        name: "horadam_second",
        title: "Horadam polynomials (second kind)",
        generating_function: "(1 + q*t^2) / (1 - p*x*t - q*t^2)",
        params: &[
            ParamDecl {
                name: "p",
                kind: ANY_INT,
                default: "1",
            },
            ParamDecl {
                name: "q",
                kind: ANY_INT,
                default: "1",
            },
        ],
    },
    FamilyDescriptor {
        name: "jacobsthal",
        title: "Jacobsthal polynomials",
        generating_function: "t / (1 - t - x*t^2)",
        params: &[],
    },
    FamilyDescriptor {
        name: "pell",
        title: "Pell polynomials",
        generating_function: "1 / (1 - 2*x*t - t^2)",
        params: &[],
    },
    FamilyDescriptor {
        name: "pell_lucas",
        title: "Pell-Lucas polynomials",
        generating_function: "(2*x + 2*t) / (1 - 2*x*t - t^2)",
        params: &[],
    },
];

/// Every catalog entry, sorted by name.
pub fn list_families() -> &'static [FamilyDescriptor] {
    CATALOG
}

pub fn descriptor(name: &str) -> Result<&'static FamilyDescriptor> {
    CATALOG
        .iter()
        .find(|d| d.name == name)
        .ok_or_else(|| Error::UnknownFamily(name.to_string()))
}

/// Resolves `key=value` pairs against a family's declarations, filling defaults.
pub fn parse_params<'a, I>(name: &str, pairs: I) -> Result<Params>
where
    I: IntoIterator<Item = (&'a str, &'a str)>,
{
    let desc = descriptor(name)?;
    let mut given = Params::new();
    for (key, value) in pairs {
        let decl =
            desc.params.iter().find(|d| d.name == key).ok_or_else(|| {
                Error::bad_parameter(key, format!("`{name}` has no such parameter"))
            })?;
        given.insert(key.to_string(), decl.parse(value)?);
    }
    resolve(desc, &given)
}

fn resolve(desc: &FamilyDescriptor, given: &Params) -> Result<Params> {
    if let Some(key) = given
        .keys()
        .find(|k| !desc.params.iter().any(|d| d.name == *k))
    {
        return Err(Error::bad_parameter(
            key,
            format!("`{}` has no such parameter", desc.name),
        ));
    }
    let mut out = Params::new();
    for decl in desc.params {
        let value = match given.get(decl.name) {
            Some(v) => {
                check_value(decl, v)?;
                v.clone()
            }
            None => decl.parse(decl.default)?,
        };
        out.insert(decl.name.to_string(), value);
    }
    Ok(out)
}

fn check_value(decl: &ParamDecl, value: &ParamValue) -> Result<()> {
    match (decl.kind, value) {
        (ParamKind::Int { min, max }, ParamValue::Int(n)) if (min..=max).contains(n) => Ok(()),
        (ParamKind::Int { min, max }, ParamValue::Int(n)) => Err(Error::bad_parameter(
            decl.name,
            format!("{n} is outside {min}..={max}"),
        )),
        (ParamKind::Poly, ParamValue::Poly(p)) if !p.mentions(&VariableId::series()) => Ok(()),
        (ParamKind::Poly, ParamValue::Poly(_)) => {
            Err(Error::bad_parameter(decl.name, "must not mention t"))
        }
        (ParamKind::Int { .. }, _) => Err(Error::bad_parameter(decl.name, "expected an integer")),
        (ParamKind::Poly, _) => Err(Error::bad_parameter(decl.name, "expected a polynomial")),
    }
}

/// A catalog family instantiated at concrete parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub name: &'static str,
    pub parameters: Params,
    pub numerator_printed: Vec<Polynomial>,
    pub numerator_canonical: Vec<Polynomial>,
    pub denominator: Vec<Polynomial>,
    /// Initial values as published, indexed from `P₀`, when the source gives any.
    pub stated_initial_values: Option<Vec<Polynomial>>,
    /// Coefficients `c_j` of the published recurrence `P_k = Σ c_j·P_{k−j}`.
    pub stated_feedback: Vec<Polynomial>,
}

impl FamilySpec {
    pub fn numerator(&self, mode: Mode) -> &[Polynomial] {
        match mode {
            Mode::Printed => &self.numerator_printed,
            Mode::Canonical => &self.numerator_canonical,
        }
    }

    pub fn gf(&self, mode: Mode) -> Result<RationalGF> {
        RationalGF::simple(self.numerator(mode).to_vec(), self.denominator.clone())
    }
}

fn var(name: &str) -> Polynomial {
    Polynomial::var(VariableId::new(name).expect("catalog variable"))
}

fn int(n: i64) -> Polynomial {
    Polynomial::constant(n)
}

fn zero() -> Polynomial {
    Polynomial::zero()
}

fn power_of(name: &str, e: u32) -> Polynomial {
    Polynomial::monomial(
        1,
        ExponentVector::new().with(VariableId::new(name).expect("catalog variable"), e),
    )
}

/// Coefficient list with the given entries set and zeros elsewhere.
fn sparse(len: usize, entries: &[(usize, Polynomial)]) -> Vec<Polynomial> {
    let mut out = vec![zero(); len];
    for (i, p) in entries {
        out[*i] = out[*i].add(p);
    }
    out
}

fn int_param(params: &Params, key: &str) -> i64 {
    match params.get(key) {
        Some(ParamValue::Int(n)) => *n,
        _ => unreachable!("resolved integer parameter `{key}`"),
    }
}

fn poly_param(params: &Params, key: &str) -> Polynomial {
    match params.get(key) {
        Some(ParamValue::Poly(p)) => p.clone(),
        _ => unreachable!("resolved polynomial parameter `{key}`"),
    }
}

/// Instantiates a family without choosing a numerator.
pub fn spec(name: &str, params: &Params) -> Result<FamilySpec> {
    let desc = descriptor(name)?;
    let params = resolve(desc, params)?;
    let x = var("x");
    let one = int(1);

    let (printed, canonical, den, stated, feedback) = match desc.name {
        "fibonacci" => {
            let num = vec![zero(), one.clone()];
            (
                num.clone(),
                num,
                vec![one.clone(), -&x, int(-1)],
                Some(vec![zero(), one.clone()]),
                vec![x.clone(), one.clone()],
            )
        }
        "catalan" => (
            vec![one.clone()],
            vec![one.clone()],
            vec![one.clone(), int(-1), x.clone()],
            Some(vec![one.clone(), one.clone()]),
            vec![one.clone(), -&x],
        ),
        "gen_fibonacci" | "gen_lucas" => {
            let m = int_param(&params, "m") as usize;
            let den = sparse(m + 1, &[(0, one.clone()), (1, -&x), (m, int(-1))]);
            let feedback = sparse(m, &[(0, x.clone()), (m - 1, one.clone())]);
            let num = if desc.name == "gen_fibonacci" {
                vec![zero(), one.clone()]
            } else {
                vec![int(2), -&x]
            };
            (num.clone(), num, den, None, feedback)
        }
        "jacobsthal" => {
            let num = vec![zero(), one.clone()];
            (
                num.clone(),
                num,
                vec![one.clone(), int(-1), -&x],
                // published from J_1 on; P_0 = 0 prepended
                Some(vec![zero(), one.clone(), one.clone()]),
                vec![one.clone(), x.clone()],
            )
        }
        "horadam_first" | "horadam_second" => {
            let p = int_param(&params, "p");
            let q = int_param(&params, "q");
            let px = x.scale(&BigInt::from(p));
            let den = vec![one.clone(), -&px, int(-q)];
            let feedback = vec![px.clone(), int(q)];
            if desc.name == "horadam_first" {
                (
                    vec![one.clone()],
                    vec![zero(), one.clone()],
                    den,
                    Some(vec![zero(), one.clone()]),
                    feedback,
                )
            } else {
                // B_0 = 2, B_1 = x forces A_0 = 2 and A_1 = x - 2*p*x
                let a1 = x.scale(&(BigInt::from(1) - BigInt::from(2) * BigInt::from(p)));
                (
                    vec![one.clone(), zero(), int(q)],
                    vec![int(2), a1],
                    den,
                    Some(vec![int(2), x.clone()]),
                    feedback,
                )
            }
        }
        "pell" | "pell_lucas" => {
            let two_x = x.scale(&BigInt::from(2));
            let den = vec![one.clone(), -&two_x, int(-1)];
            let feedback = vec![two_x.clone(), one.clone()];
            if desc.name == "pell" {
                (
                    vec![one.clone()],
                    vec![zero(), one.clone()],
                    den,
                    Some(vec![zero(), one.clone()]),
                    feedback,
                )
            } else {
                // Q_0 = 2 forces A_0 = 2; Q_1 = A_1 + 2x·A_0 = 2x forces A_1 = -2x
                (
                    vec![two_x.clone(), int(2)],
                    vec![int(2), -&two_x],
                    den,
                    Some(vec![int(2), two_x.clone()]),
                    feedback,
                )
            }
        }
        "gen_catalan" => {
            let m = int_param(&params, "m");
            let a = poly_param(&params, "A");
            let mu = m as usize;
            let num = vec![one.clone(), a.clone()];
            let den = sparse(mu + 1, &[(0, one.clone()), (1, int(-m)), (mu, x.clone())]);
            let feedback = sparse(mu, &[(0, int(m)), (mu - 1, -&x)]);
            let stated = vec![one.clone(), a.add(&int(m))];
            (num.clone(), num, den, Some(stated), feedback)
        }
        "gen_two_var_fibonacci" => {
            let a_exp = int_param(&params, "a") as u32;
            let b_exp = int_param(&params, "b") as usize;
            let c_exp = int_param(&params, "c") as usize;
            let a = poly_param(&params, "A");
            let xa = power_of("x", a_exp);
            let yb = power_of("y", b_exp as u32);
            let lag = b_exp + c_exp;
            let num = vec![one.clone(), a.clone()];
            let den = sparse(lag + 1, &[(0, one.clone()), (1, -&xa), (lag, -&yb)]);
            let feedback = sparse(lag, &[(0, xa.clone()), (lag - 1, yb)]);
            let stated = vec![one.clone(), a.add(&xa)];
            (num.clone(), num, den, Some(stated), feedback)
        }
        other => unreachable!("catalog entry `{other}` without a constructor"),
    };

    Ok(FamilySpec {
        name: desc.name,
        parameters: params,
        numerator_printed: printed,
        numerator_canonical: canonical,
        denominator: den,
        stated_initial_values: stated,
        stated_feedback: feedback,
    })
}

pub fn instantiate(name: &str, params: &Params, mode: Mode) -> Result<RationalGF> {
    spec(name, params)?.gf(mode)
}

/// One compared initial value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryVerdict {
    pub k: usize,
    pub computed: Polynomial,
    pub stated: Polynomial,
}

impl EntryVerdict {
    pub fn matches(&self) -> bool {
        self.computed == self.stated
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModeAudit {
    pub mode: Mode,
    pub numerator: Vec<Polynomial>,
    pub expansion: SeriesPrefix,
    pub stated: Option<Vec<Polynomial>>,
    pub entries: Vec<EntryVerdict>,
    pub recurrence: Recurrence,
    pub stated_feedback: Vec<Polynomial>,
}

impl ModeAudit {
    pub fn recurrence_matches(&self) -> bool {
        self.recurrence.feedback() == self.stated_feedback.as_slice()
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &EntryVerdict> {
        self.entries.iter().filter(|e| !e.matches())
    }

    pub fn all_match(&self) -> bool {
        self.recurrence_matches() && self.mismatches().next().is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditReport {
    pub family: &'static str,
    pub parameters: Params,
    pub order: usize,
    /// Printed mode first, then canonical.
    pub modes: Vec<ModeAudit>,
}

impl AuditReport {
    pub fn mode(&self, mode: Mode) -> &ModeAudit {
        self.modes
            .iter()
            .find(|m| m.mode == mode)
            .expect("both modes audited")
    }

    pub fn all_match(&self) -> bool {
        self.modes.iter().all(ModeAudit::all_match)
    }
}

/// Expands the family to order `N` in both modes and compares the published
/// initial values and recurrence coefficients with what the expansion gives.
pub fn audit(name: &str, params: &Params, order: usize) -> Result<AuditReport> {
    let spec = spec(name, params)?;
    let mut modes = Vec::with_capacity(2);
    for mode in [Mode::Printed, Mode::Canonical] {
        let gf = spec.gf(mode)?;
        let expansion = expand_theorem1(&gf, order)?;
        let entries = spec
            .stated_initial_values
            .iter()
            .flatten()
            .enumerate()
            .take(order + 1)
            .map(|(k, stated)| EntryVerdict {
                k,
                computed: expansion[k].clone(),
                stated: stated.clone(),
            })
            .collect();
        modes.push(ModeAudit {
            mode,
            numerator: spec.numerator(mode).to_vec(),
            expansion,
            stated: spec.stated_initial_values.clone(),
            entries,
            recurrence: derive_recurrence(&gf)?,
            stated_feedback: spec.stated_feedback.clone(),
        });
    }
    Ok(AuditReport {
        family: spec.name,
        parameters: spec.parameters,
        order,
        modes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_poly;

    fn p(src: &str) -> Polynomial {
        parse_poly(src).unwrap()
    }

    fn seq(srcs: &[&str]) -> Vec<Polynomial> {
        srcs.iter().map(|s| p(s)).collect()
    }

    fn params(pairs: &[(&str, &str)], name: &str) -> Params {
        parse_params(name, pairs.iter().copied()).unwrap()
    }

    fn expand(name: &str, pairs: &[(&str, &str)], mode: Mode, n: usize) -> Vec<Polynomial> {
        let gf = instantiate(name, &params(pairs, name), mode).unwrap();
        expand_theorem1(&gf, n).unwrap().into_coeffs()
    }

    #[test]
    fn listing() {
        let names: Vec<_> = list_families().iter().map(|d| d.name).collect();
        assert_eq!(
            names,
            vec![
                "catalan",
                "fibonacci",
                "gen_catalan",
                "gen_fibonacci",
                "gen_lucas",
                "gen_two_var_fibonacci",
                "horadam_first",
                "horadam_second",
                "jacobsthal",
                "pell",
                "pell_lucas"
            ]
        );
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
        assert_eq!(list_families(), list_families());
        for d in list_families() {
            for mode in [Mode::Printed, Mode::Canonical] {
                let gf = instantiate(d.name, &Params::new(), mode).unwrap();
                assert!(gf.denominator()[0].is_one());
            }
        }
    }

    #[test]
    fn instantiate_examples() {
        let fib = instantiate("fibonacci", &Params::new(), Mode::Printed).unwrap();
        assert_eq!(fib.numerator(), &seq(&["0", "1"])[..]);
        assert_eq!(fib.denominator(), &seq(&["1", "-x", "-1"])[..]);

        let gc = instantiate(
            "gen_catalan",
            &params(&[("m", "2"), ("A", "0")], "gen_catalan"),
            Mode::Printed,
        )
        .unwrap();
        assert_eq!(gc.numerator(), &seq(&["1"])[..]);
        assert_eq!(gc.denominator(), &seq(&["1", "-2", "x"])[..]);
        assert_eq!(
            expand_theorem1(&gc, 1).unwrap().coeffs(),
            &seq(&["1", "2"])[..]
        );

        let pell = instantiate("pell", &Params::new(), Mode::Canonical).unwrap();
        assert_eq!(pell.numerator(), &seq(&["0", "1"])[..]);
        assert_eq!(pell.denominator(), &seq(&["1", "-2*x", "-1"])[..]);
    }

    #[test]
    fn bad_inputs() {
        assert_eq!(
            instantiate("lucas", &Params::new(), Mode::Canonical),
            Err(Error::UnknownFamily("lucas".into()))
        );
        for (name, pairs) in [
            ("gen_catalan", vec![("m", "1")]),
            ("gen_catalan", vec![("m", "two")]),
            ("gen_catalan", vec![("A", "x + t")]),
            ("gen_catalan", vec![("k", "3")]),
            ("gen_two_var_fibonacci", vec![("a", "0")]),
            ("fibonacci", vec![("m", "3")]),
        ] {
            assert!(
                matches!(
                    parse_params(name, pairs.iter().copied()),
                    Err(Error::BadParameter { .. })
                ),
                "{name} {pairs:?}"
            );
        }
        let mut raw = Params::new();
        raw.insert("m".into(), ParamValue::Poly(p("x")));
        assert!(matches!(
            spec("gen_catalan", &raw),
            Err(Error::BadParameter { .. })
        ));
        assert_eq!("printed".parse::<Mode>(), Ok(Mode::Printed));
        assert!("both".parse::<Mode>().is_err());
    }

    #[test]
    fn audit_examples() {
        let r = audit("catalan", &Params::new(), 4).unwrap();
        assert!(r.all_match());
        assert_eq!(
            r.mode(Mode::Canonical).expansion.coeffs()[..2],
            seq(&["1", "1"])[..]
        );

        let r = audit("pell_lucas", &Params::new(), 2).unwrap();
        let printed = r.mode(Mode::Printed);
        let first = printed.mismatches().next().unwrap();
        assert_eq!(
            (first.k, &first.computed, &first.stated),
            (0, &p("2*x"), &p("2"))
        );
        assert!(r.mode(Mode::Canonical).all_match());

        let r = audit("fibonacci", &Params::new(), 4).unwrap();
        assert!(r.mode(Mode::Printed).all_match() && r.mode(Mode::Canonical).all_match());

        let r = audit("pell", &Params::new(), 0).unwrap();
        assert_eq!(r.mode(Mode::Printed).entries.len(), 1);
    }

    #[test]
    fn canonical_numerators_reproduce_stated_values() {
        for d in list_families() {
            let r = audit(d.name, &Params::new(), 6).unwrap();
            assert!(r.mode(Mode::Canonical).all_match(), "{}", d.name);
        }
        for (p_, q_) in [("3", "-2"), ("-1", "5")] {
            for name in ["horadam_first", "horadam_second"] {
                let pr = params(&[("p", p_), ("q", q_)], name);
                assert!(audit(name, &pr, 4)
                    .unwrap()
                    .mode(Mode::Canonical)
                    .all_match());
            }
        }
    }

    #[test]
    fn printed_horadam_second_disagrees() {
        let r = audit("horadam_second", &Params::new(), 3).unwrap();
        let ks: Vec<usize> = r.mode(Mode::Printed).mismatches().map(|e| e.k).collect();
        assert_eq!(ks, vec![0]);
        assert_eq!(
            expand("horadam_second", &[], Mode::Canonical, 1),
            seq(&["2", "x"])
        );
    }

    #[test]
    fn lucas_and_jacobsthal_starts() {
        assert_eq!(
            expand("gen_lucas", &[("m", "4")], Mode::Canonical, 1),
            seq(&["2", "x"])
        );
        assert_eq!(
            expand("jacobsthal", &[], Mode::Canonical, 2),
            seq(&["0", "1", "1"])
        );
    }

    #[test]
    fn large_exponent_parameters() {
        let s = expand("gen_fibonacci", &[("m", "40")], Mode::Canonical, 45);
        assert_eq!(s[40], p("x^39"));
        assert_eq!(s[41], p("x^40 + 1"));
    }
}
