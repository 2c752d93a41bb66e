//! Exact computations around Stillman-type bounds for multigraded polynomial
//! rings.
//!
//! The crate is layered bottom-up:
//!
//! * [`exactmath`]: rationals, integer/rational matrices, Smith normal form,
//!   Gordan alternatives and bounded enumeration;
//! * [`monoid`]: support monoids, pointedness, bounded factorization and
//!   a few named infinitely generated monoids;
//! * [`polyring`]: graded polynomial rings, homogeneity and regrading;
//! * [`resolution`]: Gröbner bases, Schreyer resolutions, minimalization and
//!   projective dimension;
//! * [`stillman`]: flattening bounds, the counterexample families, finest
//!   gradings and the assembled bound report.

pub mod exactmath;
pub mod monoid;
pub mod polyring;
pub mod resolution;
pub mod stillman;

pub use exactmath::{DegreeVector, IntMatrix, Rational, RationalMatrix};
pub use monoid::FgMonoid;
pub use polyring::{CoefficientField, GradingSpec, IdealPresentation, MGPolyRing, Monomial, Polynomial};
pub use stillman::{BoundReport, StillmanError};
