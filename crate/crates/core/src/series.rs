//! Truncated power series in `t` with polynomial coefficients, and the two
//! brute-force inversions of a denominator with unit constant term.

use std::ops::Index;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::{Polynomial, VariableId};

/// Coefficients `P₀ … P_N` of a series truncated after `t^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesPrefix {
    coeffs: Vec<Polynomial>,
}

impl SeriesPrefix {
    /// Builds a prefix of the given order from leading coefficients, padding
    /// with zeros or truncating as needed.
    pub fn from_coeffs(mut coeffs: Vec<Polynomial>, order: usize) -> Result<Self> {
        if let Some(p) = coeffs.iter().find(|p| p.mentions(&VariableId::series())) {
            return Err(Error::SeriesVariableInCoefficient(p.to_string()));
        }
        coeffs.resize(order + 1, Polynomial::zero());
        Ok(SeriesPrefix { coeffs })
    }

    /// Crate-internal constructor for coefficients already known to be free of `t`.
    pub(crate) fn from_vec_unchecked(coeffs: Vec<Polynomial>) -> Self {
        debug_assert!(!coeffs.is_empty());
        SeriesPrefix { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        SeriesPrefix {
            coeffs: vec![Polynomial::zero(); order + 1],
        }
    }

    /// `[1, 0, …, 0]`.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Polynomial::one();
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Polynomial> {
        self.coeffs
    }

    pub fn get(&self, k: usize) -> Option<&Polynomial> {
        self.coeffs.get(k)
    }

    /// The first `order + 1` coefficients.
    pub fn truncate(&self, order: usize) -> SeriesPrefix {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, Polynomial::zero());
        SeriesPrefix { coeffs }
    }

    /// Replaces one coefficient. Used by verification tooling to inject faults.
    pub fn with_coeff(mut self, k: usize, p: Polynomial) -> Result<Self> {
        if p.mentions(&VariableId::series()) {
            return Err(Error::SeriesVariableInCoefficient(p.to_string()));
        }
        if let Some(slot) = self.coeffs.get_mut(k) {
            *slot = p;
        }
        Ok(self)
    }

    /// First index where the two prefixes differ, comparing up to the shorter order.
    pub fn first_difference(&self, other: &SeriesPrefix) -> Option<usize> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b)
    }
}

impl Index<usize> for SeriesPrefix {
    type Output = Polynomial;

    fn index(&self, k: usize) -> &Polynomial {
        &self.coeffs[k]
    }
}

/// Cauchy product truncated at the common order.
pub fn cauchy_mul(a: &SeriesPrefix, b: &SeriesPrefix) -> Result<SeriesPrefix> {
    if a.order() != b.order() {
        return Err(Error::OrderMismatch {
            left: a.order(),
            right: b.order(),
        });
    }
    Ok(convolve_truncated(a.coeffs(), b.coeffs(), a.order()))
}

/// `out[k] = Σ_{j} a[j]·b[k−j]` for `k ≤ order`; either side may be shorter.
pub(crate) fn convolve_truncated(a: &[Polynomial], b: &[Polynomial], order: usize) -> SeriesPrefix {
    let mut out = vec![Polynomial::zero(); order + 1];
    for (j, aj) in a.iter().enumerate().take(order + 1) {
        if aj.is_zero() {
            continue;
        }
        for (i, bi) in b.iter().enumerate().take(order + 1 - j) {
            out[i + j].add_product_assign(aj, bi, false);
        }
    }
    SeriesPrefix { coeffs: out }
}

pub(crate) fn check_unit_constant(b: &[Polynomial]) -> Result<()> {
    match b.first() {
        Some(b0) if b0.is_one() => Ok(()),
        Some(b0) => Err(Error::BadConstantTerm(b0.to_string())),
        None => Err(Error::BadConstantTerm("0".to_string())),
    }
}

/// `1/B` as the geometric sum `Σ_{k≤N} hᵏ` with `h = 1 − B`.
///
/// `h` has no constant term, so `hᵏ` starts at `tᵏ` and the sum is exact
/// through order `N` after `N + 1` terms.
pub fn geometric_inverse(b: &[Polynomial], order: usize) -> Result<SeriesPrefix> {
    check_unit_constant(b)?;
    let mut h: Vec<Polynomial> = b.iter().map(Polynomial::neg).collect();
    h[0] = Polynomial::zero();
    let h = SeriesPrefix::from_coeffs(h, order)?;

    let mut sum = SeriesPrefix::one(order);
    let mut power = SeriesPrefix::one(order);
    for _ in 1..=order {
        power = cauchy_mul(&power, &h)?;
        for (s, p) in sum.coeffs.iter_mut().zip(&power.coeffs) {
            s.add_scaled_assign(p, false);
        }
    }
    Ok(sum)
}

/// `1/B` by expanding each `hᵏ` with the multinomial theorem.
///
/// Enumerates `(j₁, …, j_n)` in lexicographic order, keeping those whose
/// weight `j₁ + 2j₂ + ⋯ + n·j_n` is at most `N`. Each contributes
/// `(−1)ᵏ · k!/(j₁!⋯j_n!) · B₁^{j₁}⋯B_n^{j_n}` to the coefficient of
/// `t^{weight}`, where `k = j₁ + ⋯ + j_n`. Exponential in `n`; meant as an
/// oracle at small orders.
pub fn multinomial_inverse(b: &[Polynomial], order: usize) -> Result<SeriesPrefix> {
    check_unit_constant(b)?;
    let tail: Vec<&Polynomial> = b[1..].iter().take(order).collect();
    let mut out = vec![Polynomial::zero(); order + 1];
    if tail.is_empty() {
        out[0] = Polynomial::one();
        return Ok(SeriesPrefix { coeffs: out });
    }

    let factorials = factorial_table(order);
    // powers[l][e] = B_{l+1}^e with l·e bounded by the order
    let powers: Vec<Vec<Polynomial>> = tail
        .iter()
        .enumerate()
        .map(|(l, bl)| {
            let max_e = order / (l + 1);
            let mut row = Vec::with_capacity(max_e + 1);
            row.push(Polynomial::one());
            for e in 1..=max_e {
                let next = row[e - 1].mul(bl);
                row.push(next);
            }
            row
        })
        .collect();

    let mut js = vec![0usize; tail.len()];
    enumerate_compositions(&mut js, 0, 0, order, &mut |js| {
        if js.iter().zip(&tail).any(|(&j, bl)| j > 0 && bl.is_zero()) {
            return;
        }
        let k: usize = js.iter().sum();
        let weight: usize = js.iter().enumerate().map(|(l, &j)| (l + 1) * j).sum();
        let mut coef = factorials[k].clone();
        for &j in js.iter() {
            coef /= &factorials[j];
        }
        if k % 2 == 1 {
            coef = -coef;
        }
        let mut term = Polynomial::constant(coef);
        for (l, &j) in js.iter().enumerate() {
            if j > 0 {
                term = term.mul(&powers[l][j]);
            }
        }
        out[weight].add_scaled_assign(&term, false);
    });
    Ok(SeriesPrefix { coeffs: out })
}

fn factorial_table(n: usize) -> Vec<BigInt> {
    let mut table = Vec::with_capacity(n + 1);
    table.push(BigInt::one());
    for i in 1..=n {
        let next = &table[i - 1] * BigInt::from(i);
        table.push(next);
    }
    table
}

fn enumerate_compositions(
    js: &mut [usize],
    slot: usize,
    weight: usize,
    max_weight: usize,
    visit: &mut dyn FnMut(&[usize]),
) {
    if slot == js.len() {
        visit(js);
        return;
    }
    let step = slot + 1;
    let mut j = 0;
    while weight + j * step <= max_weight {
        js[slot] = j;
        enumerate_compositions(js, slot + 1, weight + j * step, max_weight, visit);
        j += 1;
    }
    js[slot] = 0;
}
