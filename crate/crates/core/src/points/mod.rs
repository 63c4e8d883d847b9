//! Point counts of projective schemes over finite fields and the resulting
//! Hasse–Weil zeta functions.

pub mod count;
pub mod expr;
pub mod field;
pub mod hasse_weil;
pub mod scheme;

pub use count::{count_points, representative_count, CountOptions, CountVector, DEFAULT_BUDGET};
pub use expr::{parse_polynomial, IntPoly};
pub use field::{least_irreducible, FieldTower, GaloisField};
pub use hasse_weil::{
    functional_equation_constant, hasse_weil_zeta, scheme_functional_equation, zeta_from_counts, SchemeZetaReport,
};
pub use scheme::{ProjectiveScheme, SchemeInput};
