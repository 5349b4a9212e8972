//! Exact integers and rationals, rational-endpoint interval enclosures,
//! integer square roots and the `sqrt`/`ln` enclosures used downstream.

mod instance;
mod interval;
mod log;
mod rational;
mod roots;

pub use instance::ProblemInstance;
pub use interval::RationalInterval;
pub use log::{gamma_enclosure, ln2_enclosure, ln_enclosure};
pub use rational::{
    bits_for_width, floor_log2, format_rational, ipow, parse_rational, pow2, rpow, to_f64,
    to_sci_string, Integer, Rational,
};
pub use roots::{isqrt, m_of_n, sqrt_enclosure};

#[cfg(test)]
pub(crate) use rational::int;
pub(crate) use rational::rat;
