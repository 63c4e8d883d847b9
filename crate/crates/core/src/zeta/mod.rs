//! Zeta functions of endomorphisms from ℤ/2-graded trace realizations.

pub mod determinant;
pub mod realization;
pub mod superdim;

pub use determinant::{determinant, Block, SemisimpleBlockData};
pub use realization::{
    functional_equation_check, rationality_report, super_trace_identity, supertrace_sequence, verify_series_equals_det,
    zeta_det, zeta_from_traces, zeta_report, FunctionalEquation, FunctionalEquationCheck, SuperRealization,
    ZetaReport, DEFAULT_PRECISION,
};
pub use superdim::{euler_supertrace_class, SuperDimension};
