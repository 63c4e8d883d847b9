//! Zeta functions of endomorphisms given by a ℤ/2-graded matrix realization.
//!
//! `Z(f;t)` is computed two independent ways: as `exp(Σ aₙ tⁿ/n)` from the
//! supertraces `aₙ = tr(T₊ⁿ) − tr(T₋ⁿ)`, and as the determinant ratio
//! `det(I − tT₋) / det(I − tT₊)`.

use serde::{Deserialize, Serialize};

use super::superdim::SuperDimension;
use crate::error::{Error, Result};
use crate::exact::{pade_reconstruct, reverse_charpoly, RatMatrix, Rational, RationalFunction, TruncatedSeries};

pub const DEFAULT_PRECISION: usize = 12;

/// Even and odd parts `(T₊, T₋)` of an endomorphism acting on a super vector space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuperRealization {
    pub t_plus: RatMatrix,
    pub t_minus: RatMatrix,
    #[serde(default)]
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionalEquation {
    /// `(−1)^{tr(id)}` for realizations, or the empirically found sign for schemes.
    pub sign: i64,
    pub det: Rational,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZetaReport {
    pub series: TruncatedSeries,
    pub rational: Option<RationalFunction>,
    pub degree_gap: Option<i64>,
    pub super_trace_id: Option<SuperDimension>,
    pub functional_eq: Option<FunctionalEquation>,
}

impl SuperRealization {
    pub fn new(t_plus: RatMatrix, t_minus: RatMatrix, label: impl Into<String>) -> Result<Self> {
        let r = SuperRealization { t_plus, t_minus, label: label.into() };
        r.validate()?;
        Ok(r)
    }

    pub fn validate(&self) -> Result<()> {
        for m in [&self.t_plus, &self.t_minus] {
            if !m.is_square() {
                return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
            }
        }
        Ok(())
    }

    pub fn empty() -> Self {
        SuperRealization { t_plus: RatMatrix::zeros(0, 0), t_minus: RatMatrix::zeros(0, 0), label: String::new() }
    }

    /// Realization of `f ⊕ f′`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        SuperRealization {
            t_plus: self.t_plus.direct_sum(&other.t_plus),
            t_minus: self.t_minus.direct_sum(&other.t_minus),
            label: format!("{} ⊕ {}", self.label, other.label),
        }
    }

    /// Realization of `f ⊗ f′` with the Koszul grading: even part
    /// `T₊⊗T₊′ ⊕ T₋⊗T₋′`, odd part `T₊⊗T₋′ ⊕ T₋⊗T₊′`.
    pub fn tensor(&self, other: &Self) -> Self {
        let pp = self.t_plus.kronecker(&other.t_plus);
        let mm = self.t_minus.kronecker(&other.t_minus);
        let pm = self.t_plus.kronecker(&other.t_minus);
        let mp = self.t_minus.kronecker(&other.t_plus);
        SuperRealization {
            t_plus: pp.direct_sum(&mm),
            t_minus: pm.direct_sum(&mp),
            label: format!("{} ⊗ {}", self.label, other.label),
        }
    }

    /// Realization of `f⁻¹`, if both parts are invertible.
    pub fn inverse(&self) -> Result<Self> {
        let t_plus = self.t_plus.inverse()?.ok_or(Error::NotInvertible { which: "t_plus" })?;
        let t_minus = self.t_minus.inverse()?.ok_or(Error::NotInvertible { which: "t_minus" })?;
        Ok(SuperRealization { t_plus, t_minus, label: format!("{}⁻¹", self.label) })
    }
}

/// `aₙ = tr(T₊ⁿ) − tr(T₋ⁿ)` for `n = 1..=n_max`.
pub fn supertrace_sequence(r: &SuperRealization, n_max: usize) -> Vec<Rational> {
    let mut plus = r.t_plus.clone();
    let mut minus = r.t_minus.clone();
    let mut out = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        out.push(plus.trace() - minus.trace());
        if n < n_max {
            plus = &plus * &r.t_plus;
            minus = &minus * &r.t_minus;
        }
    }
    out
}

/// `exp(Σ_{n=1..N} aₙ tⁿ/n)` truncated at `t^N`.
pub fn zeta_from_traces(a: &[Rational], precision: usize) -> Result<TruncatedSeries> {
    if a.len() < precision {
        return Err(Error::DimensionMismatch { what: "trace sequence length", expected: precision, found: a.len() });
    }
    let mut log = vec![Rational::zero()];
    log.extend(a[..precision].iter().enumerate().map(|(i, x)| x / Rational::from_int(i as i64 + 1)));
    TruncatedSeries::new(log).exp()
}

/// `det(I − tT₋) / det(I − tT₊)` in lowest terms.
pub fn zeta_det(r: &SuperRealization) -> Result<RationalFunction> {
    let num = reverse_charpoly(&r.t_minus)?;
    let den = reverse_charpoly(&r.t_plus)?;
    RationalFunction::new(num, den)
}

/// Whether the determinant ratio expands to the exp-of-traces series through `t^N`.
pub fn verify_series_equals_det(r: &SuperRealization, precision: usize) -> Result<bool> {
    let series = zeta_from_traces(&supertrace_sequence(r, precision), precision)?;
    Ok(zeta_det(r)?.expand(precision) == series)
}

/// Padé reconstruction of `s` with `deg(den) − deg(num)`.
pub fn rationality_report(s: &TruncatedSeries, max_deg: usize) -> Result<(RationalFunction, i64)> {
    let rf = pade_reconstruct(s, max_deg)?;
    let gap = rf.degree_gap();
    Ok((rf, gap))
}

pub fn super_trace_identity(r: &SuperRealization) -> SuperDimension {
    SuperDimension::new(r.t_plus.rows() as i64, r.t_minus.rows() as i64)
}

/// Details of a functional-equation check for a realization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionalEquationCheck {
    pub holds: bool,
    pub trace_id: i64,
    /// `(−1)^{tr(id)}`
    pub sign: i64,
    /// `det(T₊) / det(T₋)`
    pub det: Rational,
    pub zeta: RationalFunction,
    pub inverse_zeta: RationalFunction,
}

/// Checks `Z(f⁻¹; t⁻¹) = (−t)^{tr(id)} · det(f) · Z(f; t)` as an identity in ℚ(t).
pub fn functional_equation_check(r: &SuperRealization) -> Result<FunctionalEquationCheck> {
    r.validate()?;
    let inv = r.inverse()?;
    let zeta = zeta_det(r)?;
    let inverse_zeta = zeta_det(&inv)?;
    let det = r.t_plus.determinant()? / r.t_minus.determinant()?;
    let trace_id = super_trace_identity(r).trace();
    let sign = if trace_id.rem_euclid(2) == 0 { 1 } else { -1 };

    let lhs = inverse_zeta.substitute_reciprocal(&Rational::one());
    let rhs = zeta.to_laurent().times_t_power(trace_id).scale(&(&det * Rational::from_int(sign)));
    Ok(FunctionalEquationCheck { holds: lhs.equals(&rhs), trace_id, sign, det, zeta, inverse_zeta })
}

/// Everything the engine knows about `Z(f;t)` at the given precision. The
/// Padé degree bound is `⌊N/2⌋`.
pub fn zeta_report(r: &SuperRealization, precision: usize) -> Result<ZetaReport> {
    r.validate()?;
    let series = zeta_from_traces(&supertrace_sequence(r, precision), precision)?;
    let (rational, degree_gap) = match rationality_report(&series, precision / 2) {
        Ok((rf, gap)) => (Some(rf), Some(gap)),
        Err(Error::NotRational { .. }) => (None, None),
        Err(e) => return Err(e),
    };
    let functional_eq = match functional_equation_check(r) {
        Ok(c) => Some(FunctionalEquation { sign: c.sign, det: c.det, holds: c.holds }),
        Err(Error::NotInvertible { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(ZetaReport { series, rational, degree_gap, super_trace_id: Some(super_trace_identity(r)), functional_eq })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{q, Polynomial};

    fn diag(v: &[i64]) -> RatMatrix {
        RatMatrix::diagonal(&v.iter().map(|&x| Rational::from_int(x)).collect::<Vec<_>>())
    }

    fn empty() -> RatMatrix {
        RatMatrix::zeros(0, 0)
    }

    fn elliptic() -> SuperRealization {
        let companion = RatMatrix::from_i64_rows(&[vec![0, -5], vec![1, -3]]).unwrap();
        SuperRealization::new(diag(&[1, 5]), companion, "E/F5").unwrap()
    }

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(Polynomial::from_i64(num), Polynomial::from_i64(den)).unwrap()
    }

    #[test]
    fn supertraces() {
        let p1 = SuperRealization::new(diag(&[1, 2]), empty(), "P1").unwrap();
        let expected: Vec<Rational> = (1..=6).map(|n| q(1, 1) + q(2, 1).pow(n)).collect();
        assert_eq!(supertrace_sequence(&p1, 6), expected);
        assert!(supertrace_sequence(&SuperRealization::empty(), 5).iter().all(Rational::is_zero));
        let m = RatMatrix::from_i64_rows(&[vec![1, 2], vec![3, -1]]).unwrap();
        let balanced = SuperRealization::new(m.clone(), m, "").unwrap();
        assert!(supertrace_sequence(&balanced, 5).iter().all(Rational::is_zero));
    }

    #[test]
    fn zeta_from_trace_sequences() {
        assert_eq!(zeta_from_traces(&vec![Rational::zero(); 4], 4).unwrap(), TruncatedSeries::one(4));
        assert_eq!(zeta_from_traces(&vec![Rational::one(); 4], 4).unwrap(), TruncatedSeries::from_i64(&[1; 5]));
        let a: Vec<Rational> = (1..=6).map(|n| q(1, 1) + q(2, 1).pow(n)).collect();
        assert_eq!(zeta_from_traces(&a, 6).unwrap(), rf(&[1], &[1, -3, 2]).expand(6));
        assert!(zeta_from_traces(&a, 7).is_err());
    }

    #[test]
    fn determinant_ratios() {
        let p1 = SuperRealization::new(diag(&[1, 2]), empty(), "").unwrap();
        assert_eq!(zeta_det(&p1).unwrap(), rf(&[1], &[1, -3, 2]));
        assert_eq!(zeta_det(&elliptic()).unwrap(), rf(&[1, 3, 5], &[1, -6, 5]));
        assert_eq!(zeta_det(&SuperRealization::empty()).unwrap(), RationalFunction::one());
    }

    #[test]
    fn series_matches_det() {
        let r = SuperRealization::new(diag(&[3, -1, 2]), diag(&[7]), "").unwrap();
        assert!(verify_series_equals_det(&r, 10).unwrap());
        assert!(verify_series_equals_det(&elliptic(), 12).unwrap());
    }

    #[test]
    fn corrupted_series_detected() {
        let r = elliptic();
        let mut coeffs = zeta_from_traces(&supertrace_sequence(&r, 8), 8).unwrap().into_coeffs();
        coeffs[3] = &coeffs[3] + q(1, 1);
        assert_ne!(zeta_det(&r).unwrap().expand(8), TruncatedSeries::new(coeffs));
    }

    #[test]
    fn degree_gaps() {
        let (r, gap) = rationality_report(&rf(&[1], &[1, -3, 2]).expand(12), 6).unwrap();
        assert_eq!((r, gap), (rf(&[1], &[1, -3, 2]), 2));
        let (_, gap) = rationality_report(&rf(&[1, 3, 5], &[1, -6, 5]).expand(12), 6).unwrap();
        assert_eq!(gap, 0);
        assert_eq!(rationality_report(&TruncatedSeries::one(12), 6).unwrap(), (RationalFunction::one(), 0));
    }

    #[test]
    fn degree_gap_needs_invertibility() {
        // With a kernel in T₊ the reverse characteristic polynomial loses degree,
        // so the gap falls below dim T₊ − dim T₋.
        let r = SuperRealization::new(diag(&[0]), empty(), "").unwrap();
        let report = zeta_report(&r, 12).unwrap();
        assert_eq!(report.degree_gap, Some(0));
        assert_eq!(super_trace_identity(&r).trace(), 1);
    }

    #[test]
    fn trace_identity() {
        let p1 = SuperRealization::new(diag(&[1, 2]), empty(), "").unwrap();
        assert_eq!(super_trace_identity(&p1), SuperDimension::new(2, 0));
        assert_eq!(super_trace_identity(&SuperRealization::empty()), SuperDimension::new(0, 0));
        let r = SuperRealization::new(diag(&[1, 2, 3]), diag(&[4, 5, 6]), "").unwrap();
        assert_eq!(super_trace_identity(&r).trace(), 0);
    }

    #[test]
    fn functional_equation_hand_case() {
        let r = SuperRealization::new(diag(&[2]), empty(), "").unwrap();
        let c = functional_equation_check(&r).unwrap();
        assert!(c.holds);
        assert_eq!((c.trace_id, c.sign, c.det.clone()), (1, -1, q(2, 1)));
        // Z(f⁻¹;t) = 1/(1 − t/2); at t⁻¹ this is 2t/(2t − 1).
        let lhs = c.inverse_zeta.substitute_reciprocal(&q(1, 1));
        let hand = crate::exact::LaurentFraction {
            num: Polynomial::from_i64(&[0, 2]),
            den: Polynomial::from_i64(&[-1, 2]),
            t_power: 0,
        };
        assert!(lhs.equals(&hand));
    }

    #[test]
    fn functional_equation_identity_matrix() {
        for m in 1..4 {
            let r = SuperRealization::new(RatMatrix::identity(m), empty(), "").unwrap();
            let c = functional_equation_check(&r).unwrap();
            assert!(c.holds);
            assert_eq!((c.det.clone(), c.trace_id), (q(1, 1), m as i64));
        }
    }

    #[test]
    fn functional_equation_singular() {
        let r = SuperRealization::new(diag(&[0, 1]), empty(), "").unwrap();
        assert_eq!(functional_equation_check(&r), Err(Error::NotInvertible { which: "t_plus" }));
    }

    #[test]
    fn functional_equation_wrong_det_fails() {
        // Sanity: perturbing det(f) breaks the identity.
        let r = elliptic();
        let c = functional_equation_check(&r).unwrap();
        assert!(c.holds);
        let lhs = c.inverse_zeta.substitute_reciprocal(&q(1, 1));
        let wrong = c.zeta.to_laurent().times_t_power(c.trace_id).scale(&(&c.det * q(2, 1)));
        assert!(!lhs.equals(&wrong));
    }

    #[test]
    fn tensor_and_sum_traces() {
        let a = elliptic();
        let b = SuperRealization::new(diag(&[2, 3]), diag(&[-1]), "").unwrap();
        let sa = supertrace_sequence(&a, 5);
        let sb = supertrace_sequence(&b, 5);
        let sum: Vec<Rational> = sa.iter().zip(&sb).map(|(x, y)| x + y).collect();
        let prod: Vec<Rational> = sa.iter().zip(&sb).map(|(x, y)| x * y).collect();
        assert_eq!(supertrace_sequence(&a.direct_sum(&b), 5), sum);
        assert_eq!(supertrace_sequence(&a.tensor(&b), 5), prod);
    }
}
