//! Exact tropical geometry over the valued field `Q(t^(1/N))`.
//!
//! The crate computes tropicalizations of projective subschemes and of their
//! Hilbert-scheme points. Everything is exact: scalars are rational functions
//! in a fractional power of `t` with rational coefficients, tropical values
//! are rationals (or `-inf`), and all linear algebra is performed over the
//! field or over its residue field `Q`.
//!
//! Module map:
//!
//! - [`valfield`]: the field `K = Q(t^(1/N))`, its valuation, residue map and
//!   monomial section `w -> t^w`.
//! - [`tropical`]: max-plus values, tropical polynomials, zero loci and
//!   tropical projective points.
//! - [`numpoly`]: numerical polynomials in the `g(m_0, ..., m_s; x)` form.
//! - [`polyring`]: homogeneous polynomials over `K`, graded components of
//!   ideals, Hilbert functions and Plücker coordinates.
//! - [`initial`]: initial forms, initial spaces, the degree-`m_0` membership
//!   oracle and its non-membership certificates.
//! - [`monideal`]: monomial ideals, primary decomposition, multiplicities and
//!   arithmetic degree.
//! - [`hilbpoint`]: Hilbert points, their tropicalization and the pairs of
//!   infinitely near points in the plane.
//! - [`subdiv`]: regular subdivisions of plane Newton polygons and their dual
//!   tropical curves.
//! - [`selftest`]: seeded property corpora shared by the CLI and the test
//!   suites.

pub mod error;
pub mod hilbpoint;
pub mod initial;
pub mod linalg;
pub mod monideal;
pub mod numpoly;
pub mod polyring;
pub mod selftest;
pub mod subdiv;
pub mod tropical;
pub mod valfield;

pub use error::{Error, Result};
pub use valfield::{PuiseuxRat, Rat};
