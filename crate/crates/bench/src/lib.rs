//! Fixtures shared by the benchmarks.

use ratgen_core::{parse_poly, split_in_t, Polynomial, RationalGF};

fn in_t(src: &str) -> Vec<Polynomial> {
    split_in_t(&parse_poly(src).expect("fixture parses"))
}

/// `t / (1 - x t - t^2)`.
pub fn fibonacci() -> RationalGF {
    RationalGF::simple(in_t("t"), in_t("1 - x*t - t^2")).expect("valid fixture")
}

/// A three-variable denominator raised to a power.
pub fn dense(power: u32) -> RationalGF {
    RationalGF::new(in_t("1 + y*t"), in_t("1 - x*t - y*z*t^2 + x*z*t^3"), power)
        .expect("valid fixture")
}

/// Denominator coefficient list of [`dense`].
pub fn dense_denominator() -> Vec<Polynomial> {
    in_t("1 - x*t - y*z*t^2 + x*z*t^3")
}

/// A long expression for parser throughput.
pub fn long_expression(terms: usize) -> String {
    (0..terms)
        .map(|i| format!("{}*x^{}*y^{}*t^{}", i + 1, i % 7, i % 5, i % 11))
        .collect::<Vec<_>>()
        .join(" - ")
}
