//! Scalar and polynomial substrate shared by every other module.
//!
//! Exact work happens over [`Rational`] (arbitrary precision, always reduced)
//! and [`ComplexExact`]; numeric work over `f64` and [`Complex64`]. Numeric
//! q-series parameters that sit close to `+-1` are carried as [`SignedLog`]
//! so that factors `1 - a q^k` keep full relative accuracy.

mod laurent;
mod linsolve;
mod scalar;
mod signed_log;

pub use laurent::{from_i64, poly_eval, poly_is_proper, LaurentPoly};
pub use linsolve::{solve_exact, LinearSolution};
pub use scalar::{
    parse_rational, parse_real, rat, rat_to_f64, rational_string, rpow, ser_rational_map, ComplexExact, Rational,
    Scalar,
};
pub use signed_log::SignedLog;

pub use num_complex::Complex64;
