//! Truncated formal power series over ℚ.
//!
//! A series of precision `N` stores exactly the coefficients of `t^0..=t^N`.
//! Operations never change precision; combining two series of different
//! precision is an error rather than a silent truncation.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::Polynomial;
use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Builds a series from its coefficients `a_0..a_N`; precision is `len - 1`.
    /// Panics on an empty coefficient list.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least a_0");
        TruncatedSeries { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_int(c)).collect())
    }

    pub fn zero(precision: usize) -> Self {
        TruncatedSeries { coeffs: vec![Rational::zero(); precision + 1] }
    }

    pub fn one(precision: usize) -> Self {
        let mut s = Self::zero(precision);
        s.coeffs[0] = Rational::one();
        s
    }

    /// Expansion of a polynomial, truncated (or zero-padded) to `precision`.
    pub fn from_polynomial(p: &Polynomial, precision: usize) -> Self {
        Self::new(p.to_coeff_vec(precision + 1))
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn truncate(&self, precision: usize) -> Self {
        assert!(precision <= self.precision(), "cannot extend precision by truncation");
        Self::new(self.coeffs[..=precision].to_vec())
    }

    pub fn as_polynomial(&self) -> Polynomial {
        Polynomial::new(self.coeffs.clone())
    }

    fn check_same_precision(&self, other: &Self) -> Result<()> {
        if self.precision() != other.precision() {
            return Err(Error::PrecisionMismatch { left: self.precision(), right: other.precision() });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_precision(other)?;
        Ok(Self::new(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect()))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_precision(other)?;
        Ok(Self::new(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect()))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_precision(other)?;
        let n = self.coeffs.len();
        let mut out = vec![Rational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..n - i].iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Ok(Self::new(out))
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::BadConstantTerm { expected: "nonzero", found: a0.to_string() });
        }
        let inv0 = a0.recip();
        let n = self.coeffs.len();
        let mut out: Vec<Rational> = Vec::with_capacity(n);
        out.push(inv0.clone());
        for k in 1..n {
            let s: Rational = (1..=k).map(|j| &self.coeffs[j] * &out[k - j]).sum();
            out.push(-(s * &inv0));
        }
        Ok(Self::new(out))
    }

    /// Expansion of `num / den` where `den(0) != 0`.
    pub fn from_ratio(num: &Polynomial, den: &Polynomial, precision: usize) -> Result<Self> {
        let n = Self::from_polynomial(num, precision);
        let d = Self::from_polynomial(den, precision);
        n.mul(&d.inverse()?)
    }

    /// Formal derivative, keeping precision (top coefficient becomes 0).
    pub fn derivative(&self) -> Self {
        let n = self.coeffs.len();
        let mut out: Vec<Rational> =
            (1..n).map(|i| &self.coeffs[i] * Rational::from_int(i as i64)).collect();
        out.push(Rational::zero());
        Self::new(out)
    }

    /// `exp(s)` for a series with zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::BadConstantTerm { expected: "0", found: self.coeffs[0].to_string() });
        }
        // f = exp(g)  ⇒  n·f_n = Σ_{k=1..n} k·g_k·f_{n-k}
        let n = self.coeffs.len();
        let weighted: Vec<Rational> =
            self.coeffs.iter().enumerate().map(|(k, g)| g * Rational::from_int(k as i64)).collect();
        let mut f: Vec<Rational> = Vec::with_capacity(n);
        f.push(Rational::one());
        for m in 1..n {
            let s: Rational = (1..=m).map(|k| &weighted[k] * &f[m - k]).sum();
            f.push(s / Rational::from_int(m as i64));
        }
        Ok(Self::new(f))
    }

    /// `log(s)` for a series with constant term 1.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::BadConstantTerm { expected: "1", found: self.coeffs[0].to_string() });
        }
        // g = log f  ⇒  n·g_n = n·f_n − Σ_{k=1..n-1} k·g_k·f_{n-k}
        let n = self.coeffs.len();
        let mut g: Vec<Rational> = Vec::with_capacity(n);
        let mut kg: Vec<Rational> = Vec::with_capacity(n);
        g.push(Rational::zero());
        kg.push(Rational::zero());
        for m in 1..n {
            let mut s = &self.coeffs[m] * Rational::from_int(m as i64);
            for k in 1..m {
                s -= &(&kg[k] * &self.coeffs[m - k]);
            }
            g.push(&s / Rational::from_int(m as i64));
            kg.push(s);
        }
        Ok(Self::new(g))
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(t^{})", self.as_polynomial(), self.precision() + 1)
    }
}

impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TruncatedSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let coeffs = Vec::<Rational>::deserialize(deserializer)?;
        if coeffs.is_empty() {
            return Err(serde::de::Error::custom("series needs at least one coefficient"));
        }
        Ok(Self::new(coeffs))
    }
}

/// Free-function form of [`TruncatedSeries::exp`].
pub fn series_exp(s: &TruncatedSeries) -> Result<TruncatedSeries> {
    s.exp()
}

/// Free-function form of [`TruncatedSeries::log`].
pub fn series_log(s: &TruncatedSeries) -> Result<TruncatedSeries> {
    s.log()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::q;

    fn series(cs: &[(i64, i64)]) -> TruncatedSeries {
        TruncatedSeries::new(cs.iter().map(|&(n, d)| q(n, d)).collect())
    }

    #[test]
    fn exp_of_zero_is_one() {
        assert_eq!(TruncatedSeries::zero(5).exp().unwrap(), TruncatedSeries::one(5));
    }

    #[test]
    fn exp_of_t() {
        let s = series(&[(0, 1), (1, 1), (0, 1), (0, 1)]);
        assert_eq!(s.exp().unwrap(), series(&[(1, 1), (1, 1), (1, 2), (1, 6)]));
    }

    #[test]
    fn exp_of_weighted_powers_of_two() {
        // Σ 2ⁿtⁿ/n = −log(1 − 2t); its exp is the geometric series of 2t.
        let s = series(&[(0, 1), (2, 1), (4, 2), (8, 3)]);
        // Oracle: expand 1/(1−2t) by repeated multiplication of truncated factors.
        let two_t = TruncatedSeries::from_i64(&[0, 2, 0, 0]);
        let mut expected = TruncatedSeries::one(3);
        let mut power = TruncatedSeries::one(3);
        for _ in 0..3 {
            power = power.mul(&two_t).unwrap();
            expected = expected.add(&power).unwrap();
        }
        assert_eq!(expected, TruncatedSeries::from_i64(&[1, 2, 4, 8]));
        assert_eq!(s.exp().unwrap(), expected);
    }

    #[test]
    fn exp_rejects_nonzero_constant() {
        assert!(matches!(
            TruncatedSeries::one(3).exp(),
            Err(Error::BadConstantTerm { .. })
        ));
    }

    #[test]
    fn log_cases() {
        assert_eq!(TruncatedSeries::one(4).log().unwrap(), TruncatedSeries::zero(4));
        let geometric = TruncatedSeries::from_i64(&[1, 1, 1, 1]);
        assert_eq!(geometric.log().unwrap(), series(&[(0, 1), (1, 1), (1, 2), (1, 3)]));
        // (1−t)(1−2t) = 1 − 3t + 2t²; log = log(1−t) + log(1−2t), summed termwise.
        let p = TruncatedSeries::from_i64(&[1, -3, 2, 0]);
        let oracle: Vec<Rational> = (0..4)
            .map(|n| if n == 0 { q(0, 1) } else { -(q(1, 1) + q(2, 1).pow(n)) / q(n, 1) })
            .collect();
        assert_eq!(oracle, vec![q(0, 1), q(-3, 1), q(-5, 2), q(-3, 1)]);
        assert_eq!(p.log().unwrap().coeffs(), &oracle[..]);
        assert!(TruncatedSeries::from_i64(&[2, 1]).log().is_err());
    }

    #[test]
    fn inverse_and_ratio() {
        let s = TruncatedSeries::from_ratio(
            &Polynomial::one(),
            &Polynomial::from_i64(&[1, -3, 2]),
            5,
        )
        .unwrap();
        // 1/((1−t)(1−2t)) = Σ (2^{n+1} − 1) tⁿ
        assert_eq!(s, TruncatedSeries::from_i64(&[1, 3, 7, 15, 31, 63]));
    }

    #[test]
    fn mixed_precision_rejected() {
        let a = TruncatedSeries::one(3);
        let b = TruncatedSeries::one(4);
        assert_eq!(a.mul(&b), Err(Error::PrecisionMismatch { left: 3, right: 4 }));
    }
}
