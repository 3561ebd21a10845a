//! Exact computation of the strata map attached to a finite Coxeter group.
//!
//! The central object is the square matrix `Ψ = A·A′·A″` indexed by
//! conjugacy classes and irreducible representations, with entries in
//! `Z[v²]`. From Ψ the library extracts the map σ from conjugacy classes
//! to irreducible representations, together with the excluded sets
//! `Irr_*` and `Irr_**`, and the cross-sections τ′ and τ″ from the image
//! of σ back to conjugacy classes.
//!
//! Everything is computed with exact arithmetic: arbitrary-precision
//! rationals, cyclotomic field elements, and polynomials in `u = v²`.
//! There is no floating point anywhere.
//!
//! Module map:
//!
//! * [`exact`] — scalars ([`exact::CycRat`]), polynomials ([`exact::PolyU`])
//!   and normalized rational functions ([`exact::RatFnU`]).
//! * [`meta`] — group types and irreducible-representation metadata.
//! * [`coxeter`] — enumerated finite Coxeter groups with conjugacy-class
//!   data (minimal length, fixed-space dimension, class labels).
//! * [`hecke`] — the Iwahori–Hecke algebra recurrence for the expansion
//!   of `(-v²)^{|w|} T_{w⁻¹}⁻¹` and the trivial-representation column of Ψ.
//! * [`dihedral`] — closed-form `A`, `A′`, `A″` and Ψ for the dihedral
//!   groups `I2(p)`.
//! * [`strata`] — Ψ assembly and σ-extraction (Weyl and
//!   noncrystallographic modes).
//! * [`crosssec`] — the cross-sections τ′, τ″ and product groups.
//! * [`golden`] — embedded reference tables, the table file format, and
//!   the diff engine.
//! * [`verify`] — the named verification suites driven by the CLI and the
//!   acceptance test.

pub mod coxeter;
pub mod crosssec;
pub mod dihedral;
pub mod exact;
pub mod golden;
pub mod hecke;
pub mod meta;
pub mod strata;
pub mod verify;

pub use exact::{CycRat, ExactError, PolyU, Rat, RatFnU};

