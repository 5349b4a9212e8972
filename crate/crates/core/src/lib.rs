//! Exact rational approximations to the Tschakaloff series
//!
//! ```text
//! T_q(z) = sum_{n >= 0} z^n q^{-n(n-1)/2},   |q| > 1,
//! ```
//!
//! together with the machinery needed to certify, for rational `q = q1/q2`
//! and `z = z1/z2`, that the integer pairs `(A_n, B_n)` built from the
//! polynomial `R_n(T; q) = (1 - qT)(1 - q^2 T)...(1 - q^n T)` give small,
//! provably non-zero linear forms `B_n T_q(z) - A_n`.
//!
//! All real quantities are carried as [`RationalInterval`] enclosures with
//! exact rational endpoints.
//!
//! Module map:
//!
//! * [`arith`]: big integers, rationals, interval enclosures, `isqrt`,
//!   `floor(n (sqrt 5 - 1) / 2)`, `sqrt`/`ln` enclosures and the size ratio `gamma`.
//! * [`qpoly`]: dense integer polynomials in `q`, Gaussian binomials and the
//!   coefficients `C_k(q)` of `R_n`.
//! * [`series`]: certified evaluation of `T_q(z)`, the theta companion and the
//!   remainder series `I_n`.
//! * [`approximants`]: the integers `A_n`, `B_n`, the normalized remainder and
//!   per-denominator witnesses.
//! * [`asymptotics`]: exponent limits, empirical exponents and the
//!   irrationality-measure estimate.
//! * [`cli`]: the `tschakaloff` command line front end.

pub mod approximants;
pub mod arith;
pub mod asymptotics;
pub mod cli;
mod error;
pub mod qpoly;
pub mod series;

pub use approximants::{ApproximantRecord, Witness};
pub use arith::{Integer, ProblemInstance, Rational, RationalInterval};
pub use error::{Error, Result};
pub use qpoly::QPolynomial;
pub use series::SeriesTermBudget;
