//! Exact arithmetic substrate: rationals, dense matrices, polynomials,
//! rational functions, truncated power series, Smith/Hermite normal forms and
//! Padé reconstruction. Nothing here touches floating point.

pub mod charpoly;
pub mod matrix;
pub mod pade;
pub mod poly;
pub mod ratfunc;
pub mod rational;
pub mod series;
pub mod snf;

pub use charpoly::{charpoly, reverse_charpoly};
pub use matrix::{IntMatrix, Matrix, RatMatrix};
pub use pade::pade_reconstruct;
pub use poly::Polynomial;
pub use ratfunc::{LaurentFraction, RationalFunction};
pub use rational::{q, Rational};
pub use series::{series_exp, series_log, TruncatedSeries};
pub use snf::{hermite_normal_form, in_lattice, integer_kernel, smith_normal_form, SmithForm};
