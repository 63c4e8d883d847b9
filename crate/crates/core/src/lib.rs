//! Exact computations around numerical Grothendieck groups and zeta functions
//! of endomorphisms over finite fields.
//!
//! - [`exact`]: rationals, polynomials, truncated series, Smith normal form, Padé.
//! - [`witt`]: the big Witt ring W(ℚ) at finite precision.
//! - [`lattice`]: Euler pairings on free abelian groups and their numerical quotients.
//! - [`zeta`]: zeta functions of ℤ/2-graded matrix realizations.
//! - [`points`]: brute-force point counting and Hasse–Weil zeta functions.
//! - [`cli`]: JSON job runner behind the `nczeta` binary.

pub mod cli;
pub mod error;
pub mod exact;
pub mod lattice;
pub mod points;
pub mod witt;
pub mod zeta;

pub use error::{Error, Result};
