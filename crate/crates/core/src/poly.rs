//! Sparse multivariate polynomials over the integers.
//!
//! A [`Polynomial`] keeps its variables in a sorted list and stores each
//! monomial as an exponent vector aligned with that list. Variables that no
//! longer occur in any term are dropped after every operation, so two
//! polynomials are equal exactly when their normalized forms are
//! structurally equal.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Name of the series variable. It never appears inside a coefficient polynomial.
pub const SERIES_VARIABLE: &str = "t";

/// A coefficient-ring indeterminate such as `x` or `y`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VariableId(String);

impl VariableId {
    /// Validates `name` as a coefficient variable. The series variable is rejected.
    pub fn new(name: &str) -> Result<Self> {
        let mut chars = name.chars();
        let valid = matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
            && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !valid {
            return Err(Error::InvalidVariable(name.to_string()));
        }
        if name == SERIES_VARIABLE {
            return Err(Error::ReservedVariable(name.to_string()));
        }
        Ok(VariableId(name.to_string()))
    }

    /// The series variable `t`, for polynomials that are still written in `t`.
    pub fn series() -> Self {
        VariableId(SERIES_VARIABLE.to_string())
    }

    pub fn is_series(&self) -> bool {
        self.0 == SERIES_VARIABLE
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VariableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for VariableId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        VariableId::new(s)
    }
}

/// Exponents of a monomial keyed by variable. Absent variables have exponent 0
/// and zero exponents are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct ExponentVector(BTreeMap<VariableId, u32>);

impl ExponentVector {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, var: VariableId, exponent: u32) -> Self {
        self.set(var, exponent);
        self
    }

    pub fn set(&mut self, var: VariableId, exponent: u32) {
        if exponent == 0 {
            self.0.remove(&var);
        } else {
            self.0.insert(var, exponent);
        }
    }

    pub fn get(&self, var: &VariableId) -> u32 {
        self.0.get(var).copied().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u64 {
        self.0.values().map(|&e| u64::from(e)).sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&VariableId, u32)> {
        self.0.iter().map(|(v, &e)| (v, e))
    }
}

impl FromIterator<(VariableId, u32)> for ExponentVector {
    fn from_iter<I: IntoIterator<Item = (VariableId, u32)>>(iter: I) -> Self {
        let mut ev = ExponentVector::new();
        for (v, e) in iter {
            let e = ev.get(&v) + e;
            ev.set(v, e);
        }
        ev
    }
}

/// Exponent vector aligned with the owning polynomial's variable list.
/// Field order gives graded lexicographic ordering under `derive(Ord)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Monomial {
    degree: u64,
    exps: Vec<u32>,
}

impl Monomial {
    fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().map(|&e| u64::from(e)).sum();
        Monomial { degree, exps }
    }

    fn constant(width: usize) -> Self {
        Monomial {
            degree: 0,
            exps: vec![0; width],
        }
    }
}

/// Exact polynomial in ℤ[x, y, …] with a sparse term map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    vars: Vec<VariableId>,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Default for Polynomial {
    fn default() -> Self {
        Self::zero()
    }
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial {
            vars: Vec::new(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::constant(0), c);
        }
        Polynomial {
            vars: Vec::new(),
            terms,
        }
    }

    pub fn var(var: VariableId) -> Self {
        Self::monomial(BigInt::one(), ExponentVector::new().with(var, 1))
    }

    /// `coeff · x₁^e₁ ⋯`, normalized (zero when `coeff` is zero).
    pub fn monomial(coeff: impl Into<BigInt>, exponents: ExponentVector) -> Self {
        let coeff = coeff.into();
        if coeff.is_zero() {
            return Self::zero();
        }
        let vars: Vec<VariableId> = exponents.0.keys().cloned().collect();
        let mono = Monomial::new(exponents.0.values().copied().collect());
        let mut terms = BTreeMap::new();
        terms.insert(mono, coeff);
        Polynomial { vars, terms }
    }

    /// Sums the given terms; repeated exponent vectors are combined.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (ExponentVector, BigInt)>,
    {
        let mut acc = Self::zero();
        for (ev, c) in terms {
            acc.add_scaled_assign(&Self::monomial(c, ev), false);
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// The value of a constant polynomial, `None` if any variable occurs.
    pub fn as_constant(&self) -> Option<BigInt> {
        if !self.vars.is_empty() {
            return None;
        }
        Some(self.constant_term())
    }

    pub fn constant_term(&self) -> BigInt {
        self.terms
            .get(&Monomial::constant(self.vars.len()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Variables that occur in at least one term, in alphabetical order.
    pub fn variables(&self) -> &[VariableId] {
        &self.vars
    }

    pub fn mentions(&self, var: &VariableId) -> bool {
        self.vars.binary_search(var).is_ok()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().next_back().map(|m| m.degree)
    }

    /// Degree in a single variable; `None` for the zero polynomial.
    pub fn degree_in(&self, var: &VariableId) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        Some(match self.vars.binary_search(var) {
            Ok(i) => self.terms.keys().map(|m| m.exps[i]).max().unwrap_or(0),
            Err(_) => 0,
        })
    }

    /// Terms in canonical order: graded lexicographic, largest first.
    pub fn terms(&self) -> impl Iterator<Item = (ExponentVector, &BigInt)> + '_ {
        self.terms.iter().rev().map(move |(m, c)| {
            let ev = self
                .vars
                .iter()
                .zip(&m.exps)
                .filter(|(_, &e)| e != 0)
                .map(|(v, &e)| (v.clone(), e))
                .collect();
            (ev, c)
        })
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_scaled_assign(other, false);
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_scaled_assign(other, true);
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, factor: &BigInt) -> Polynomial {
        if factor.is_zero() {
            return Self::zero();
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * factor))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Self::zero();
        out.add_product_assign(self, other, false);
        out
    }

    /// Square-and-multiply power; `p⁰ = 1` for every `p`, including zero.
    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut result = Self::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = Polynomial::mul(&base, &base);
            }
        }
        result
    }

    /// `self ← self ± other`.
    pub fn add_scaled_assign(&mut self, other: &Polynomial, negate: bool) {
        if other.is_zero() {
            return;
        }
        let union = union_vars(&self.vars, &other.vars);
        self.widen_to(&union);
        let pos = positions(&other.vars, &union);
        for (m, c) in &other.terms {
            let key = if pos.is_none() {
                m.clone()
            } else {
                remap(m, pos.as_deref(), union.len())
            };
            accumulate(&mut self.terms, key, c, negate);
        }
        self.normalize_vars();
    }

    /// `self ← self ± a·b`, the fused step used by every recurrence in the crate.
    pub fn add_product_assign(&mut self, a: &Polynomial, b: &Polynomial, negate: bool) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let union = union_vars(&union_vars(&self.vars, &a.vars), &b.vars);
        self.widen_to(&union);
        let width = union.len();
        let pa = positions(&a.vars, &union);
        let pb = positions(&b.vars, &union);
        let a_terms: Vec<(Vec<u32>, &BigInt)> = a
            .terms
            .iter()
            .map(|(m, c)| (widen(&m.exps, pa.as_deref(), width), c))
            .collect();
        for (mb, cb) in &b.terms {
            let eb = widen(&mb.exps, pb.as_deref(), width);
            for (ea, ca) in &a_terms {
                let exps: Vec<u32> = ea
                    .iter()
                    .zip(&eb)
                    .map(|(x, y)| x.checked_add(*y).expect("exponent overflow"))
                    .collect();
                let prod = *ca * cb;
                accumulate_owned(&mut self.terms, Monomial::new(exps), prod, negate);
            }
        }
        self.normalize_vars();
    }

    /// Evaluates at an integer point. Every variable of `self` must be assigned.
    pub fn eval(&self, assignment: &BTreeMap<VariableId, BigInt>) -> Result<BigInt> {
        let values: Vec<&BigInt> = self
            .vars
            .iter()
            .map(|v| {
                assignment
                    .get(v)
                    .ok_or_else(|| Error::MissingVariable(v.to_string()))
            })
            .collect::<Result<_>>()?;
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (value, &e) in values.iter().zip(&m.exps) {
                if e != 0 {
                    term *= num_traits::pow::pow((*value).clone(), e as usize);
                }
            }
            total += term;
        }
        Ok(total)
    }

    /// Splits into coefficients of `var`: `self = Σ result[j]·varʲ`.
    /// Trailing zeros are trimmed; the zero polynomial gives `[0]`.
    pub fn coefficients_in(&self, var: &VariableId) -> Vec<Polynomial> {
        let Ok(idx) = self.vars.binary_search(var) else {
            return vec![self.clone()];
        };
        let rest: Vec<VariableId> = self
            .vars
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != idx)
            .map(|(_, v)| v.clone())
            .collect();
        let top = self.degree_in(var).unwrap_or(0) as usize;
        let mut out = vec![Polynomial::zero(); top + 1];
        for (m, c) in &self.terms {
            let e = m.exps[idx] as usize;
            let mut exps = m.exps.clone();
            exps.remove(idx);
            let slot = &mut out[e];
            if slot.vars.is_empty() && slot.terms.is_empty() {
                slot.vars = rest.clone();
            }
            slot.terms.insert(Monomial::new(exps), c.clone());
        }
        for p in &mut out {
            p.normalize_vars();
        }
        out
    }

    /// Inverse of [`Polynomial::coefficients_in`]: `Σ coeffs[j]·varʲ`.
    pub fn from_coefficients_in(var: &VariableId, coeffs: &[Polynomial]) -> Polynomial {
        let mut acc = Polynomial::zero();
        for (j, c) in coeffs.iter().enumerate() {
            let power = Polynomial::monomial(1, ExponentVector::new().with(var.clone(), j as u32));
            acc.add_product_assign(c, &power, false);
        }
        acc
    }

    fn widen_to(&mut self, union: &[VariableId]) {
        if self.vars.len() == union.len() {
            return;
        }
        if self.terms.is_empty() {
            self.vars = union.to_vec();
            return;
        }
        let pos = positions(&self.vars, union);
        let terms = std::mem::take(&mut self.terms);
        self.terms = terms
            .into_iter()
            .map(|(m, c)| (remap(&m, pos.as_deref(), union.len()), c))
            .collect();
        self.vars = union.to_vec();
    }

    /// Drops variables whose exponent is zero in every term.
    fn normalize_vars(&mut self) {
        let width = self.vars.len();
        if width == 0 {
            return;
        }
        let mut used = vec![false; width];
        for m in self.terms.keys() {
            for (u, &e) in used.iter_mut().zip(&m.exps) {
                *u |= e != 0;
            }
        }
        if used.iter().all(|&u| u) {
            return;
        }
        let keep: Vec<usize> = (0..width).filter(|&i| used[i]).collect();
        self.vars = keep.iter().map(|&i| self.vars[i].clone()).collect();
        let terms = std::mem::take(&mut self.terms);
        self.terms = terms
            .into_iter()
            .map(|(m, c)| (Monomial::new(keep.iter().map(|&i| m.exps[i]).collect()), c))
            .collect();
    }
}

fn accumulate(terms: &mut BTreeMap<Monomial, BigInt>, key: Monomial, c: &BigInt, negate: bool) {
    use std::collections::btree_map::Entry;
    match terms.entry(key) {
        Entry::Vacant(v) => {
            v.insert(if negate { -c } else { c.clone() });
        }
        Entry::Occupied(mut o) => {
            if negate {
                *o.get_mut() -= c;
            } else {
                *o.get_mut() += c;
            }
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

fn accumulate_owned(
    terms: &mut BTreeMap<Monomial, BigInt>,
    key: Monomial,
    c: BigInt,
    negate: bool,
) {
    use std::collections::btree_map::Entry;
    let c = if negate { -c } else { c };
    match terms.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

fn union_vars(a: &[VariableId], b: &[VariableId]) -> Vec<VariableId> {
    if a == b || b.is_empty() {
        return a.to_vec();
    }
    if a.is_empty() {
        return b.to_vec();
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push(b[j].clone());
                j += 1;
            }
            Ordering::Equal => {
                out.push(a[i].clone());
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Index of each of `sub`'s variables inside `sup`; `None` when they coincide.
fn positions(sub: &[VariableId], sup: &[VariableId]) -> Option<Vec<usize>> {
    if sub.len() == sup.len() {
        return None;
    }
    Some(
        sub.iter()
            .map(|v| sup.binary_search(v).expect("superset of variables"))
            .collect(),
    )
}

fn widen(exps: &[u32], pos: Option<&[usize]>, width: usize) -> Vec<u32> {
    match pos {
        None => exps.to_vec(),
        Some(pos) => {
            let mut out = vec![0; width];
            for (&p, &e) in pos.iter().zip(exps) {
                out[p] = e;
            }
            out
        }
    }
}

fn remap(m: &Monomial, pos: Option<&[usize]>, width: usize) -> Monomial {
    Monomial {
        degree: m.degree,
        exps: widen(&m.exps, pos, width),
    }
}

impl fmt::Display for Polynomial {
    /// Canonical text: graded-lex order, explicit `*`, `^` only for exponents ≥ 2,
    /// unit coefficients elided except on the constant term.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if m.degree == 0 || !mag.is_one() {
                factors.push(mag.to_string());
            }
            for (v, &e) in self.vars.iter().zip(&m.exps) {
                match e {
                    0 => {}
                    1 => factors.push(v.to_string()),
                    _ => factors.push(format!("{v}^{e}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl From<i64> for Polynomial {
    fn from(c: i64) -> Self {
        Polynomial::constant(c)
    }
}

impl From<BigInt> for Polynomial {
    fn from(c: BigInt) -> Self {
        Polynomial::constant(c)
    }
}

impl From<VariableId> for Polynomial {
    fn from(v: VariableId) -> Self {
        Polynomial::var(v)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                Polynomial::$method(self, rhs)
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                Polynomial::$method(&self, &rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                Polynomial::$method(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(&self)
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        let mut acc = Polynomial::zero();
        for p in iter {
            acc.add_scaled_assign(&p, false);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(name: &str) -> VariableId {
        VariableId::new(name).unwrap()
    }

    fn x() -> Polynomial {
        Polynomial::var(v("x"))
    }

    fn y() -> Polynomial {
        Polynomial::var(v("y"))
    }

    fn c(n: i64) -> Polynomial {
        Polynomial::constant(n)
    }

    #[test]
    fn variable_names() {
        assert!(VariableId::new("x").is_ok());
        assert!(VariableId::new("alpha_2").is_ok());
        assert_eq!(
            VariableId::new("t"),
            Err(Error::ReservedVariable("t".into()))
        );
        assert!(matches!(
            VariableId::new(""),
            Err(Error::InvalidVariable(_))
        ));
        assert!(matches!(
            VariableId::new("2x"),
            Err(Error::InvalidVariable(_))
        ));
        assert!(matches!(
            VariableId::new("x-y"),
            Err(Error::InvalidVariable(_))
        ));
        assert!(VariableId::series().is_series());
    }

    #[test]
    fn add_examples() {
        assert_eq!(&(&x() + &c(1)) + &(&x() - &c(1)), &c(2) * &x());
        let p = &x() * &y() + c(3);
        assert_eq!(&p + &Polynomial::zero(), p);
        let x2 = x().pow(2);
        assert_eq!((&x2 + &y()) + (&x2 - &y()), &c(2) * &x2);
        // y cancelled, so it must no longer be listed
        assert_eq!(((&x2 + &y()) + (&x2 - &y())).variables(), &[v("x")]);
    }

    #[test]
    fn mul_examples() {
        assert_eq!((c(1) + x()) * (c(1) - x()), c(1) - x().pow(2));
        assert!((x() * Polynomial::zero()).is_zero());
        let s = x() + y();
        assert_eq!(&s * &s, x().pow(2) + c(2) * x() * y() + y().pow(2));
    }

    #[test]
    fn pow_examples() {
        assert_eq!((x() - c(1)).pow(2), x().pow(2) - c(2) * x() + c(1));
        let p = x() * y() + c(7);
        assert_eq!(p.pow(1), p);
        assert_eq!(p.pow(0), Polynomial::one());
        assert_eq!(Polynomial::zero().pow(0), Polynomial::one());
    }

    #[test]
    fn eval_examples() {
        let at = |n: i64| BTreeMap::from([(v("x"), BigInt::from(n))]);
        assert_eq!((x() + c(1)).eval(&at(2)).unwrap(), BigInt::from(3));
        assert_eq!(
            Polynomial::zero().eval(&BTreeMap::new()).unwrap(),
            BigInt::zero()
        );
        // F_5(x) evaluated at 1 is the fifth Fibonacci number
        let f5 = x().pow(4) + c(3) * x().pow(2) + c(1);
        let fib5 = {
            let (mut a, mut b) = (0u64, 1u64);
            for _ in 0..5 {
                (a, b) = (b, a + b);
            }
            a
        };
        assert_eq!(f5.eval(&at(1)).unwrap(), BigInt::from(fib5));
        assert_eq!(
            (x() * y()).eval(&at(1)),
            Err(Error::MissingVariable("y".into()))
        );
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!((x().pow(2) + c(1)).to_string(), "x^2 + 1");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!((c(1) - x()).to_string(), "-x + 1");
        assert_eq!(
            (x().pow(2) * y() - c(3) * x() * y() + y().pow(3) - c(1)).to_string(),
            "x^2*y + y^3 - 3*x*y - 1"
        );
        assert_eq!(c(-1).to_string(), "-1");
    }

    #[test]
    fn degrees_and_terms() {
        let p = x().pow(3) * y() + c(2) * y().pow(2) + c(5);
        assert_eq!(p.total_degree(), Some(4));
        assert_eq!(p.degree_in(&v("y")), Some(2));
        assert_eq!(p.degree_in(&v("z")), Some(0));
        assert_eq!(Polynomial::zero().total_degree(), None);
        assert_eq!(p.constant_term(), BigInt::from(5));
        let terms: Vec<_> = p
            .terms()
            .map(|(e, c)| (e.total_degree(), c.clone()))
            .collect();
        assert_eq!(
            terms,
            vec![
                (4, BigInt::from(1)),
                (2, BigInt::from(2)),
                (0, BigInt::from(5))
            ]
        );
        let rebuilt = Polynomial::from_terms(p.terms().map(|(e, c)| (e, c.clone())));
        assert_eq!(rebuilt, p);
    }

    #[test]
    fn coefficients_in_variable() {
        let p = c(1) - x() * y() - y().pow(2);
        let parts = p.coefficients_in(&v("y"));
        assert_eq!(parts, vec![c(1), -x(), c(-1)]);
        assert_eq!(Polynomial::from_coefficients_in(&v("y"), &parts), p);
        assert_eq!(
            Polynomial::zero().coefficients_in(&v("y")),
            vec![Polynomial::zero()]
        );
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        let names = ["x", "y", "z"];
        let term = (-9i64..=9, prop::collection::vec(0u32..=4, 3))
            .prop_map(move |(coef, exps)| {
                let ev = names
                    .iter()
                    .zip(exps)
                    .map(|(n, e)| (v(n), e))
                    .collect::<ExponentVector>();
                (ev, BigInt::from(coef))
            })
            .prop_filter("degree <= 4", |(ev, _)| ev.total_degree() <= 4);
        prop::collection::vec(term, 0..6).prop_map(Polynomial::from_terms)
    }

    fn stored_zero(p: &Polynomial) -> bool {
        p.terms.values().any(|c| c.is_zero())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn ring_axioms(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(&p + &q, &q + &p);
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert_eq!((&p + &q) + &r, &p + &(&q + &r));
            prop_assert_eq!((&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert_eq!(&p + &Polynomial::zero(), p.clone());
            prop_assert_eq!(&p * &Polynomial::one(), p.clone());
            prop_assert!((&p - &p).is_zero());
        }

        #[test]
        fn normalized_form(p in arb_poly(), q in arb_poly()) {
            for r in [&p + &q, &p * &q, &p - &q] {
                prop_assert!(!stored_zero(&r));
                let again = Polynomial::from_terms(r.terms().map(|(e, c)| (e, c.clone())));
                prop_assert_eq!(&again, &r);
                for var in r.variables() {
                    prop_assert!(r.degree_in(var).unwrap() > 0);
                }
            }
        }

        #[test]
        fn eval_is_homomorphism(p in arb_poly(), q in arb_poly(), vals in prop::collection::vec(-6i64..=6, 3)) {
            let at: BTreeMap<VariableId, BigInt> = ["x", "y", "z"]
                .iter()
                .zip(vals)
                .map(|(n, a)| (v(n), BigInt::from(a)))
                .collect();
            let (ep, eq) = (p.eval(&at).unwrap(), q.eval(&at).unwrap());
            prop_assert_eq!((&p + &q).eval(&at).unwrap(), &ep + &eq);
            prop_assert_eq!((&p * &q).eval(&at).unwrap(), &ep * &eq);
        }

        #[test]
        fn degree_is_additive(p in arb_poly(), q in arb_poly()) {
            prop_assume!(!p.is_zero() && !q.is_zero());
            prop_assert_eq!(
                (&p * &q).total_degree(),
                Some(p.total_degree().unwrap() + q.total_degree().unwrap())
            );
        }

        #[test]
        fn pow_matches_repeated_mul(p in arb_poly()) {
            let p2 = &p * &p;
            prop_assert_eq!(p.pow(4), &p2 * &p2);
            prop_assert_eq!(p.pow(3), &p2 * &p);
        }
    }
}
