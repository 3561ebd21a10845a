//! Exact scalar and polynomial arithmetic.
//!
//! Three layers, each exact:
//!
//! * [`CycRat`] — an element of the cyclotomic field `Q(ζ_N)`, stored as
//!   the reduced residue modulo the N-th cyclotomic polynomial with
//!   arbitrary-precision rational coefficients.
//! * [`PolyU`] — a polynomial in the variable `u = v²` with [`CycRat`]
//!   coefficients, kept in canonical form (no trailing zero coefficient).
//! * [`RatFnU`] — a quotient of two [`PolyU`], kept gcd-reduced with a
//!   monic denominator.

mod cyclotomic;
mod poly;
mod ratfn;

pub use cyclotomic::{cyclotomic_polynomial, CycRat, Rat};
pub use poly::PolyU;
pub use ratfn::RatFnU;

use thiserror::Error;

/// Errors raised by the exact-arithmetic layer.
///
/// `InexactDivision` and `NotRational` are meaningful failures: when they
/// escape from the Ψ pipeline they falsify an identity the computation
/// relies on, so they carry the offending value.
#[derive(Debug, Clone, Error)]
pub enum ExactError {
    #[error("conductor mismatch between cyclotomic elements: {left} vs {right}")]
    ConductorMismatch { left: u32, right: u32 },
    #[error("value is not rational: {0}")]
    NotRational(CycRat),
    #[error("value is not an integer: {0}")]
    NotInteger(Rat),
    #[error("inexact polynomial division, remainder {remainder}")]
    InexactDivision { remainder: PolyU },
    #[error("zero polynomial has no degree or leading coefficient")]
    ZeroPolynomial,
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
}
