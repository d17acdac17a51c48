//! Recursive expansion of `A(t)/B(t)^h` with `B₀ = 1`.
//!
//! Writing `D = Bʰ = Σ D_j tʲ`, the coefficients of the series satisfy
//!
//! ```text
//! P₀ = A₀
//! P_k = [k ≤ m]·A_k − Σ_{j=1}^{min(n,k)} D_j·P_{k−j}      (k ≥ 1)
//! ```
//!
//! where `m` is the numerator degree and `n` the degree of `D`. The module
//! also exposes the inverse sequence `Q = 1/D`, the convolution `P = A ⊛ Q`,
//! and residual checks for the identity linking `A`, `B`, `P` and `Q`.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{Polynomial, VariableId};
use crate::series::{check_unit_constant, convolve_truncated, SeriesPrefix};

/// A rational generating function `A(t) / B(t)^h` over ℤ[x, y, …].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalGF {
    numerator: Vec<Polynomial>,
    denominator: Vec<Polynomial>,
    power: u32,
}

impl RationalGF {
    /// Validates and trims the coefficient lists (index j holds the coefficient of tʲ).
    ///
    /// The denominator's constant term must be exactly 1 and `power` at least 1.
    /// An empty or all-zero numerator is allowed and yields the zero family.
    pub fn new(
        numerator: Vec<Polynomial>,
        denominator: Vec<Polynomial>,
        power: u32,
    ) -> Result<Self> {
        if power == 0 {
            return Err(Error::InvalidPower);
        }
        let series = VariableId::series();
        if let Some(p) = numerator
            .iter()
            .chain(&denominator)
            .find(|p| p.mentions(&series))
        {
            return Err(Error::SeriesVariableInCoefficient(p.to_string()));
        }
        check_unit_constant(&denominator)?;
        Ok(RationalGF {
            numerator: trim(numerator),
            denominator: trim(denominator),
            power,
        })
    }

    /// `A / B` with `h = 1`.
    pub fn simple(numerator: Vec<Polynomial>, denominator: Vec<Polynomial>) -> Result<Self> {
        Self::new(numerator, denominator, 1)
    }

    pub fn numerator(&self) -> &[Polynomial] {
        &self.numerator
    }

    pub fn denominator(&self) -> &[Polynomial] {
        &self.denominator
    }

    pub fn power(&self) -> u32 {
        self.power
    }

    /// Numerator degree `m` in `t` (0 for the zero numerator).
    pub fn numerator_degree(&self) -> usize {
        self.numerator.len() - 1
    }

    /// The same function with `Bʰ` multiplied out and power 1.
    pub fn reduced(&self) -> RationalGF {
        if self.power == 1 {
            return self.clone();
        }
        RationalGF {
            numerator: self.numerator.clone(),
            denominator: raise_denominator(&self.denominator, self.power)
                .expect("validated denominator"),
            power: 1,
        }
    }
}

fn trim(mut coeffs: Vec<Polynomial>) -> Vec<Polynomial> {
    while coeffs.len() > 1 && coeffs.last().is_some_and(Polynomial::is_zero) {
        coeffs.pop();
    }
    if coeffs.is_empty() {
        coeffs.push(Polynomial::zero());
    }
    coeffs
}

/// Coefficients `D₀ … D_{hn}` of `Bʰ` as a polynomial in `t`.
pub fn raise_denominator(b: &[Polynomial], h: u32) -> Result<Vec<Polynomial>> {
    check_unit_constant(b)?;
    if h == 0 {
        return Err(Error::InvalidPower);
    }
    let b = trim(b.to_vec());
    let mut acc = b.clone();
    for _ in 1..h {
        let order = acc.len() + b.len() - 2;
        acc = convolve_truncated(&acc, &b, order).into_coeffs();
    }
    Ok(acc)
}

/// Runs the forced linear recurrence for `k = 0..=order`.
fn run_recurrence(
    numerator: &[Polynomial],
    denominator: &[Polynomial],
    order: usize,
) -> SeriesPrefix {
    let mut out: Vec<Polynomial> = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let mut pk = numerator.get(k).cloned().unwrap_or_default();
        for j in 1..=k.min(denominator.len() - 1) {
            pk.add_product_assign(&denominator[j], &out[k - j], true);
        }
        out.push(pk);
    }
    SeriesPrefix::from_vec_unchecked(out)
}

/// `P₀ … P_N` of `gf` by the forced recurrence, after reducing `Bʰ` to `D`.
pub fn expand_theorem1(gf: &RationalGF, order: usize) -> Result<SeriesPrefix> {
    let reduced = gf.reduced();
    check_unit_constant(&reduced.denominator)?;
    Ok(run_recurrence(
        &reduced.numerator,
        &reduced.denominator,
        order,
    ))
}

/// `Q₀ … Q_N` of `1/B`: `Q₀ = 1`, `Q_k = −Σ B_j·Q_{k−j}`.
pub fn expand_corollary1(b: &[Polynomial], order: usize) -> Result<SeriesPrefix> {
    check_unit_constant(b)?;
    Ok(run_recurrence(&[Polynomial::one()], b, order))
}

/// `P_k = Σ_{j=0}^{min(m,k)} A_j·Q_{k−j}` for every `k` up to `q.order()`.
pub fn convolve_prop1(a: &[Polynomial], q: &SeriesPrefix) -> SeriesPrefix {
    convolve_truncated(a, q.coeffs(), q.order())
}

/// For each `k ≤ N`:
/// `([k ≤ m]·A_k − P_k) − Σ_{j=1}^{min(n,k)} Σ_{l=0}^{min(m,k−j)} B_j·A_l·Q_{k−j−l}`.
///
/// Every entry is zero when the identity holds. Requires `h = 1`.
pub fn corollary2_residual(gf: &RationalGF, order: usize) -> Result<SeriesPrefix> {
    let expansion = expand_theorem1(gf, order)?;
    corollary2_residual_of(gf, &expansion)
}

/// [`corollary2_residual`] against a supplied expansion `P`.
pub fn corollary2_residual_of(gf: &RationalGF, expansion: &SeriesPrefix) -> Result<SeriesPrefix> {
    if gf.power != 1 {
        return Err(Error::PowerNotOne(gf.power));
    }
    let order = expansion.order();
    let (a, b) = (&gf.numerator, &gf.denominator);
    let q = expand_corollary1(b, order)?;
    let (m, n) = (a.len() - 1, b.len() - 1);
    let mut out = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let mut r = if k <= m {
            a[k].clone()
        } else {
            Polynomial::zero()
        };
        r.add_scaled_assign(&expansion[k], true);
        for j in 1..=n.min(k) {
            if b[j].is_zero() {
                continue;
            }
            for l in 0..=m.min(k - j) {
                let term = b[j].mul(&a[l]);
                r.add_product_assign(&term, &q[k - j - l], true);
            }
        }
        out.push(r);
    }
    Ok(SeriesPrefix::from_vec_unchecked(out))
}

/// The refinement for the leading block `0 ≤ k ≤ m`:
/// `(A_k − P_k) − Σ_{j=1}^{k} Σ_{i=0}^{k−j} B_j·A_i·Q_{k−j−i}`, with `B_j = 0`
/// beyond the denominator degree. Requires `h = 1`; returns `m + 1` entries.
pub fn leading_block_residual(
    gf: &RationalGF,
    expansion: &SeriesPrefix,
) -> Result<Vec<Polynomial>> {
    if gf.power != 1 {
        return Err(Error::PowerNotOne(gf.power));
    }
    let (a, b) = (&gf.numerator, &gf.denominator);
    let m = a.len() - 1;
    let q = expand_corollary1(b, m)?;
    let zero = Polynomial::zero();
    let mut out = Vec::with_capacity(m + 1);
    for k in 0..=m.min(expansion.order()) {
        let mut r = a[k].sub(&expansion[k]);
        for j in 1..=k {
            let bj = b.get(j).unwrap_or(&zero);
            if bj.is_zero() {
                continue;
            }
            for i in 0..=k - j {
                r.add_product_assign(&bj.mul(&a[i]), &q[k - j - i], true);
            }
        }
        out.push(r);
    }
    Ok(out)
}

/// The recursion produced by a generating function, as data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recurrence {
    order: usize,
    feedback: Vec<Polynomial>,
    forcing: Vec<Polynomial>,
}

impl Recurrence {
    /// Number of previous terms each step consults, the degree of `Bʰ`.
    pub fn order(&self) -> usize {
        self.order
    }

    /// `c_j = −D_j` for `j = 1..=order`, so that `P_k = Σ c_j·P_{k−j}` past the forcing block.
    pub fn feedback(&self) -> &[Polynomial] {
        &self.feedback
    }

    /// `A₀ … A_m`; term `k` is forced by `A_k` while `k ≤ m`.
    pub fn forcing(&self) -> &[Polynomial] {
        &self.forcing
    }

    pub fn forcing_cutoff(&self) -> usize {
        self.forcing.len() - 1
    }

    /// First index from which `P_k = Σ c_j·P_{k−j}` holds with all `order` terms present
    /// and no forcing: `max(m + 1, order)`.
    pub fn homogeneous_from(&self) -> usize {
        (self.forcing_cutoff() + 1).max(self.order)
    }

    /// Runs the recursion itself to order `N`.
    pub fn run(&self, order: usize) -> SeriesPrefix {
        let mut out: Vec<Polynomial> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut pk = self.forcing.get(k).cloned().unwrap_or_default();
            for j in 1..=k.min(self.order) {
                pk.add_product_assign(&self.feedback[j - 1], &out[k - j], false);
            }
            out.push(pk);
        }
        SeriesPrefix::from_vec_unchecked(out)
    }

    /// Values `P₀ … P_{s−1}` with `s = homogeneous_from()`.
    pub fn initial_values(&self) -> Vec<Polynomial> {
        let s = self.homogeneous_from();
        if s == 0 {
            return Vec::new();
        }
        self.run(s - 1).into_coeffs()
    }

    /// The right-hand side `Σ c_j·P_{k−j}` in canonical text, e.g. `x*P_{k-1} + P_{k-2}`.
    pub fn render_rhs(&self) -> String {
        let mut out = String::new();
        for (j, c) in self.feedback.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let var = format!("P_{{k-{}}}", j + 1);
            let (negative, body) = coefficient_factor(c);
            let piece = match body {
                None => var,
                Some(f) => format!("{f}*{var}"),
            };
            match (out.is_empty(), negative) {
                (true, true) => out.push('-'),
                (true, false) => {}
                (false, true) => out.push_str(" - "),
                (false, false) => out.push_str(" + "),
            }
            out.push_str(&piece);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// Sign and printed factor for a feedback coefficient; `None` means a unit.
fn coefficient_factor(c: &Polynomial) -> (bool, Option<String>) {
    if c.term_count() == 1 {
        let (_, coef) = c.terms().next().expect("one term");
        let negative = num_traits::Signed::is_negative(coef);
        let magnitude = if negative { c.neg() } else { c.clone() };
        if magnitude.is_one() {
            return (negative, None);
        }
        return (negative, Some(magnitude.to_string()));
    }
    (false, Some(format!("({c})")))
}

impl fmt::Display for Recurrence {
    /// `P_k = x*P_{k-1} + P_{k-2} (k >= 2); P_0 = 0; P_1 = 1`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "P_k = {} (k >= {})",
            self.render_rhs(),
            self.homogeneous_from()
        )?;
        for (k, p) in self.initial_values().iter().enumerate() {
            write!(f, "; P_{k} = {p}")?;
        }
        Ok(())
    }
}

/// The recursion for `gf`: feedback `−D₁ … −D_{hn}` and forcing `A₀ … A_m`.
pub fn derive_recurrence(gf: &RationalGF) -> Result<Recurrence> {
    let reduced = gf.reduced();
    check_unit_constant(&reduced.denominator)?;
    let feedback: Vec<Polynomial> = reduced.denominator[1..]
        .iter()
        .map(Polynomial::neg)
        .collect();
    Ok(Recurrence {
        order: feedback.len(),
        feedback,
        forcing: reduced.numerator,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::{join_in_t, parse_poly, split_in_t};
    use crate::series::{cauchy_mul, geometric_inverse};
    use proptest::prelude::*;

    fn p(src: &str) -> Polynomial {
        parse_poly(src).unwrap()
    }

    fn seq(srcs: &[&str]) -> Vec<Polynomial> {
        srcs.iter().map(|s| p(s)).collect()
    }

    fn series(srcs: &[&str]) -> SeriesPrefix {
        SeriesPrefix::from_coeffs(seq(srcs), srcs.len() - 1).unwrap()
    }

    fn gf(num: &str, den: &str, h: u32) -> RationalGF {
        RationalGF::new(split_in_t(&p(num)), split_in_t(&p(den)), h).unwrap()
    }

    fn fibonacci() -> RationalGF {
        gf("t", "1 - x*t - t^2", 1)
    }

    fn catalan() -> RationalGF {
        gf("1", "1 - t + x*t^2", 1)
    }

    #[test]
    fn construction_rules() {
        assert_eq!(
            RationalGF::simple(seq(&["1"]), seq(&["2", "-1"])),
            Err(Error::BadConstantTerm("2".into()))
        );
        assert_eq!(
            RationalGF::new(seq(&["1"]), seq(&["1"]), 0),
            Err(Error::InvalidPower)
        );
        let g = RationalGF::simple(seq(&["0", "1", "0"]), seq(&["1", "-1", "0", "0"])).unwrap();
        assert_eq!(g.numerator().len(), 2);
        assert_eq!(g.denominator().len(), 2);
        let zero = RationalGF::simple(vec![], seq(&["1", "-1"])).unwrap();
        assert_eq!(zero.numerator(), &[Polynomial::zero()]);
        assert!(expand_theorem1(&zero, 5)
            .unwrap()
            .coeffs()
            .iter()
            .all(Polynomial::is_zero));
    }

    #[test]
    fn raise_denominator_examples() {
        assert_eq!(
            raise_denominator(&seq(&["1", "-1"]), 2).unwrap(),
            seq(&["1", "-2", "1"])
        );
        let b = seq(&["1", "-x", "-1"]);
        assert_eq!(raise_denominator(&b, 1).unwrap(), b);
        let expected = seq(&["1", "-2*x", "x^2 - 2", "2*x", "1"]);
        assert_eq!(raise_denominator(&b, 2).unwrap(), expected);
        // through the polynomial ring with t as an ordinary variable
        let squared = p("1 - x*t - t^2").pow(2);
        assert_eq!(split_in_t(&squared), expected);
        assert!(matches!(
            raise_denominator(&seq(&["3"]), 2),
            Err(Error::BadConstantTerm(_))
        ));
    }

    #[test]
    fn recursive_expansion_examples() {
        assert_eq!(
            expand_theorem1(&fibonacci(), 3).unwrap(),
            series(&["0", "1", "x", "x^2 + 1"])
        );
        assert_eq!(
            expand_theorem1(&catalan(), 2).unwrap(),
            series(&["1", "1", "1 - x"])
        );
        assert_eq!(
            expand_theorem1(&gf("1", "1", 1), 4).unwrap(),
            SeriesPrefix::one(4)
        );
        let oracle = cauchy_mul(
            &SeriesPrefix::from_coeffs(seq(&["0", "1"]), 3).unwrap(),
            &geometric_inverse(&seq(&["1", "-x", "-1"]), 3).unwrap(),
        )
        .unwrap();
        assert_eq!(expand_theorem1(&fibonacci(), 3).unwrap(), oracle);
    }

    #[test]
    fn square_of_geometric_series() {
        let s = expand_theorem1(&gf("1", "1 - t", 2), 10).unwrap();
        for (k, pk) in s.coeffs().iter().enumerate() {
            assert_eq!(*pk, Polynomial::constant(k as i64 + 1));
        }
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(
            expand_corollary1(&seq(&["1", "-1"]), 4).unwrap(),
            series(&["1", "1", "1", "1", "1"])
        );
        assert_eq!(
            expand_corollary1(&seq(&["1", "-x", "-1"]), 3).unwrap(),
            series(&["1", "x", "x^2 + 1", "x^3 + 2*x"])
        );
        assert_eq!(
            expand_corollary1(&seq(&["1", "-2", "x"]), 2).unwrap(),
            series(&["1", "2", "4 - x"])
        );
        assert!(matches!(
            expand_corollary1(&seq(&["0", "1"]), 2),
            Err(Error::BadConstantTerm(_))
        ));
    }

    #[test]
    fn prop1_examples() {
        let q = series(&["1", "x", "x^2 + 1", "x^3 + 2*x"]);
        assert_eq!(convolve_prop1(&seq(&["1"]), &q), q);
        assert_eq!(
            convolve_prop1(&seq(&["0", "1"]), &q),
            series(&["0", "1", "x", "x^2 + 1"])
        );
        // V_0 = 2, V_1 = -x + 2x
        let q3 = expand_corollary1(&seq(&["1", "-x", "0", "-1"]), 4).unwrap();
        let v = convolve_prop1(&seq(&["2", "-x"]), &q3);
        assert_eq!(v[0], p("2"));
        assert_eq!(v[1], p("x"));
    }

    #[test]
    fn residual_examples() {
        for g in [fibonacci(), catalan(), gf("1", "1", 1)] {
            let r = corollary2_residual(&g, 8).unwrap();
            assert_eq!(r.order(), 8);
            assert!(r.coeffs().iter().all(Polynomial::is_zero));
        }
        assert_eq!(
            corollary2_residual(&gf("1", "1 - t", 2), 3),
            Err(Error::PowerNotOne(2))
        );
        let broken = expand_theorem1(&fibonacci(), 4)
            .unwrap()
            .with_coeff(2, p("x + 1"))
            .unwrap();
        let r = corollary2_residual_of(&fibonacci(), &broken).unwrap();
        assert_eq!(r.coeffs().iter().position(|c| !c.is_zero()), Some(2));
    }

    #[test]
    fn leading_block_examples() {
        let g = gf("2 - x*t + 3*t^2", "1 - x*t - t^3", 1);
        let e = expand_theorem1(&g, 4).unwrap();
        let r = leading_block_residual(&g, &e).unwrap();
        assert_eq!(r.len(), 3);
        assert!(r.iter().all(Polynomial::is_zero));
    }

    #[test]
    fn derive_examples() {
        let r = derive_recurrence(&fibonacci()).unwrap();
        assert_eq!(r.order(), 2);
        assert_eq!(r.feedback(), &seq(&["x", "1"])[..]);
        assert_eq!(r.forcing(), &seq(&["0", "1"])[..]);
        assert_eq!(
            r.to_string(),
            "P_k = x*P_{k-1} + P_{k-2} (k >= 2); P_0 = 0; P_1 = 1"
        );

        let r = derive_recurrence(&gf("1", "1 - t", 1)).unwrap();
        assert_eq!(
            (r.order(), r.feedback(), r.forcing()),
            (1, &seq(&["1"])[..], &seq(&["1"])[..])
        );
        assert_eq!(r.to_string(), "P_k = P_{k-1} (k >= 1); P_0 = 1");

        let r = derive_recurrence(&catalan()).unwrap();
        assert_eq!(r.feedback(), &seq(&["1", "-x"])[..]);
        assert_eq!(
            r.to_string(),
            "P_k = P_{k-1} - x*P_{k-2} (k >= 2); P_0 = 1; P_1 = 1"
        );

        let r = derive_recurrence(&gf("1", "1 - 3*t + x*t^3", 1)).unwrap();
        assert_eq!(
            r.to_string(),
            "P_k = 3*P_{k-1} - x*P_{k-3} (k >= 3); P_0 = 1; P_1 = 3; P_2 = 9"
        );

        let r = derive_recurrence(&gf("1 + t^2", "1 - (x + 1)*t", 1)).unwrap();
        assert_eq!(
            r.to_string(),
            "P_k = (x + 1)*P_{k-1} (k >= 3); P_0 = 1; P_1 = x + 1; P_2 = x^2 + 2*x + 2"
        );
        assert_eq!(
            derive_recurrence(&gf("1 + t", "1", 1)).unwrap().to_string(),
            "P_k = 0 (k >= 2); P_0 = 1; P_1 = 1"
        );
    }

    #[test]
    fn recurrence_runs_like_expansion() {
        let g = gf("1 + x*t", "1 - x*t + y*t^2", 2);
        let r = derive_recurrence(&g).unwrap();
        assert_eq!(r.order(), 4);
        assert_eq!(r.run(12), expand_theorem1(&g, 12).unwrap());
    }

    fn arb_coeff() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(
            (-5i64..=5, prop::sample::select(vec!["1", "x", "y", "z"])),
            0..3,
        )
        .prop_map(|ts| ts.into_iter().map(|(c, m)| p(m).scale(&c.into())).sum())
    }

    fn arb_gf() -> impl Strategy<Value = RationalGF> {
        (
            prop::collection::vec(arb_coeff(), 1..=4),
            prop::collection::vec(arb_coeff(), 0..=4),
            1u32..=2,
        )
            .prop_map(|(num, mut den, h)| {
                den.insert(0, Polynomial::one());
                RationalGF::new(num, den, h).unwrap()
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn recursive_expansion_matches_geometric_oracle(g in arb_gf()) {
            let n = 16;
            let d = raise_denominator(g.denominator(), g.power()).unwrap();
            let num = SeriesPrefix::from_coeffs(g.numerator().to_vec(), n).unwrap();
            let oracle = cauchy_mul(&num, &geometric_inverse(&d, n).unwrap()).unwrap();
            prop_assert_eq!(expand_theorem1(&g, n).unwrap(), oracle);
        }

        #[test]
        fn inverse_is_unit_numerator_case(g in arb_gf()) {
            let b = g.denominator().to_vec();
            let unit = RationalGF::simple(vec![Polynomial::one()], b.clone()).unwrap();
            prop_assert_eq!(expand_corollary1(&b, 12).unwrap(), expand_theorem1(&unit, 12).unwrap());
        }

        #[test]
        fn prop1_reconstructs(g in arb_gf()) {
            let d = raise_denominator(g.denominator(), g.power()).unwrap();
            let q = expand_corollary1(&d, 14).unwrap();
            prop_assert_eq!(convolve_prop1(g.numerator(), &q), expand_theorem1(&g, 14).unwrap());
        }

        #[test]
        fn residual_vanishes(g in arb_gf()) {
            let g = g.reduced();
            let e = expand_theorem1(&g, 12).unwrap();
            prop_assert!(corollary2_residual_of(&g, &e).unwrap().coeffs().iter().all(Polynomial::is_zero));
            prop_assert!(leading_block_residual(&g, &e).unwrap().iter().all(Polynomial::is_zero));
        }

        #[test]
        fn degree_growth_bound(g in arb_gf()) {
            let reduced = g.reduced();
            let deg = |ps: &[Polynomial]| ps.iter().filter_map(Polynomial::total_degree).max().unwrap_or(0);
            let a_deg = deg(reduced.numerator());
            let b_deg = deg(&reduced.denominator()[1..]);
            for (k, pk) in expand_theorem1(&g, 14).unwrap().coeffs().iter().enumerate() {
                if let Some(d) = pk.total_degree() {
                    prop_assert!(d <= a_deg + k as u64 * b_deg);
                }
            }
        }

        #[test]
        fn power_reduction_is_consistent(g in arb_gf()) {
            prop_assert_eq!(expand_theorem1(&g, 12).unwrap(), expand_theorem1(&g.reduced(), 12).unwrap());
            let rebuilt = join_in_t(&raise_denominator(g.denominator(), g.power()).unwrap());
            prop_assert_eq!(rebuilt, join_in_t(g.denominator()).pow(g.power()));
        }
    }
}
