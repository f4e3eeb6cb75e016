//! Exact arithmetic: integer polynomials in `q, t` (or `α`), reduced rational
//! functions, q-shifted factorials and determinants.

mod det;
mod field;
mod parse;
mod poly;
mod qpoch;
mod ratfunc;
mod series;
mod upoly;
mod zp;

pub use det::{det, det_cofactor, ratfunc_det};
pub use field::{parse_rational, product, rational_to_string, sum, Field, Rational};
pub use poly::{MultiPoly, Vars};
pub use qpoch::{binomial, factorial, qpoch, qpoch_in, rising, MonomialArg};
pub use ratfunc::RatFunc;
pub use series::Laurent;
