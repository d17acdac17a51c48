//! Exact expansion of rational generating functions `A(t)/B(t)^h` with
//! polynomial coefficients in ℤ[x, y, …].
//!
//! The crate derives the linear recursion satisfied by the coefficient
//! polynomials, expands it to any order, and provides independent series
//! constructions to check the expansion against.
//!
//! ```
//! use ratgen_core::{expand_theorem1, parse_poly, split_in_t, RationalGF};
//!
//! let num = split_in_t(&parse_poly("t").unwrap());
//! let den = split_in_t(&parse_poly("1 - x*t - t^2").unwrap());
//! let fib = RationalGF::simple(num, den).unwrap();
//! let p = expand_theorem1(&fib, 4).unwrap();
//! assert_eq!(p[4].to_string(), "x^3 + 2*x");
//! ```

pub mod error;
pub mod families;
pub mod parser;
pub mod poly;
pub mod recurrence;
pub mod series;

pub use error::{Error, Result};
pub use families::{audit, instantiate, list_families, AuditReport, FamilySpec, Mode, Params};
pub use parser::{format_poly, join_in_t, parse_coefficient, parse_poly, split_in_t};
pub use poly::{ExponentVector, Polynomial, VariableId, SERIES_VARIABLE};
pub use recurrence::{
    convolve_prop1, corollary2_residual, corollary2_residual_of, derive_recurrence,
    expand_corollary1, expand_theorem1, leading_block_residual, raise_denominator, RationalGF,
    Recurrence,
};
pub use series::{cauchy_mul, geometric_inverse, multinomial_inverse, SeriesPrefix};
