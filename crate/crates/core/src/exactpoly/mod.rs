//! Exact arithmetic over the rationals: scalars, polynomials in `h` and
//! Laurent polynomials in `h`.

mod laurent;
mod poly;
mod rational;

pub use laurent::LaurentPoly;
pub use poly::{poly_gcd, Poly};
pub use rational::{
    extended_gcd, height, int, is_integer, pow, power_exceeding, rat, rational_log,
    rational_nth_root, Rational,
};
