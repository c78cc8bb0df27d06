//! Exact polynomial arithmetic over ℚ, ℤ and ℚ[t].
//!
//! [`Poly`] is generic over a [`Ring`]; the concrete instances used across the
//! crate are [`UPoly`] (coefficients in ℚ), [`ZPoly`] (coefficients in ℤ) and
//! [`BPoly`] (polynomials in `x` whose coefficients are polynomials in `t`).
//! Nothing in here touches floating point.

mod bivariate;
mod poly;
mod qpoly;
mod resultant;
mod ring;
mod text;

pub use bivariate::BPoly;
pub use poly::{Poly, DEFAULT_DEGREE_BOUND};
pub use qpoly::{integer_valuation, to_primitive_integer};
pub use resultant::{determinant, discriminant, resultant, sylvester_matrix};
pub use ring::{height, parse_rat, rat, rat_int, Rat, Ring};
pub use text::{format_bpoly, format_upoly, parse_bpoly, parse_upoly, ParseError};

use num_bigint::BigInt;
use thiserror::Error;

/// Univariate polynomial over ℚ.
pub type UPoly = Poly<Rat>;
/// Univariate polynomial over ℤ.
pub type ZPoly = Poly<BigInt>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("division is not exact")]
    NotExact,
    #[error("iterate degree {degree} exceeds the configured bound {bound}")]
    DegreeBound { degree: u128, bound: usize },
    #[error("iteration count must be at least 1")]
    ZeroIterate,
    #[error("operation needs degree at least {needed}, got {got:?}")]
    DegreeTooSmall { needed: usize, got: Option<usize> },
}
