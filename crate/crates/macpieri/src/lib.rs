//! Exact symbolic engine for the inverse Pieri formula of Macdonald
//! polynomials and its Schur, Hall–Littlewood, monomial and Jack
//! specializations.

pub mod arith;
pub mod error;
pub mod hook;
pub mod inverse_pieri;
pub mod inversions;
pub mod partitions;
pub mod pieri;
pub mod oracle;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
