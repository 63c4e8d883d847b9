//! The big Witt ring W(ℚ) = (1 + tℚ⟦t⟧, ×, ∗) truncated at a fixed precision.
//!
//! Addition is the product of series. Multiplication goes through ghost
//! coordinates `gh_n`, defined by `t·d/dt log(w) = Σ gh_n tⁿ`; over ℚ the ghost
//! map is a ring isomorphism onto ℚ^N with componentwise operations.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Rational, TruncatedSeries};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct WittVector {
    series: TruncatedSeries,
}

/// Ghost coordinates `gh_1..gh_N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GhostVector {
    components: Vec<Rational>,
}

impl WittVector {
    /// Wraps a series whose constant term is exactly 1.
    pub fn new(series: TruncatedSeries) -> Result<Self> {
        if !series.coeff(0).is_one() {
            return Err(Error::BadConstantTerm { expected: "1", found: series.coeff(0).to_string() });
        }
        Ok(WittVector { series })
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::BadConstantTerm { expected: "1", found: "nothing".into() });
        }
        Self::new(TruncatedSeries::new(coeffs))
    }

    /// Additive identity, the series 1.
    pub fn zero(precision: usize) -> Self {
        WittVector { series: TruncatedSeries::one(precision) }
    }

    /// Multiplicative identity `1/(1 − t)`.
    pub fn one(precision: usize) -> Self {
        WittVector { series: TruncatedSeries::new(vec![Rational::one(); precision + 1]) }
    }

    /// Teichmüller-type element `1/(1 − a·t)`, whose ghosts are `aⁿ`.
    pub fn geometric(a: &Rational, precision: usize) -> Self {
        let mut coeffs = Vec::with_capacity(precision + 1);
        let mut power = Rational::one();
        for _ in 0..=precision {
            coeffs.push(power.clone());
            power *= a;
        }
        WittVector { series: TruncatedSeries::new(coeffs) }
    }

    pub fn precision(&self) -> usize {
        self.series.precision()
    }

    pub fn series(&self) -> &TruncatedSeries {
        &self.series
    }

    pub fn into_series(self) -> TruncatedSeries {
        self.series
    }

    fn check_precision(&self, other: &Self) -> Result<()> {
        if self.precision() != other.precision() {
            return Err(Error::PrecisionMismatch { left: self.precision(), right: other.precision() });
        }
        Ok(())
    }

    /// Additive inverse: the reciprocal series.
    pub fn neg(&self) -> Self {
        WittVector { series: self.series.inverse().expect("constant term is 1") }
    }
}

impl GhostVector {
    pub fn new(components: Vec<Rational>) -> Self {
        GhostVector { components }
    }

    pub fn components(&self) -> &[Rational] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }
}

pub fn ghost(w: &WittVector) -> GhostVector {
    let log = w.series.log().expect("constant term is 1");
    let components = log
        .coeffs()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(n, c)| c * Rational::from_int(n as i64))
        .collect();
    GhostVector { components }
}

/// Inverse of [`ghost`]; the precision is the number of ghost components.
pub fn unghost(g: &GhostVector) -> WittVector {
    let mut log = vec![Rational::zero()];
    log.extend(g.components.iter().enumerate().map(|(i, c)| c / Rational::from_int(i as i64 + 1)));
    let series = TruncatedSeries::new(log).exp().expect("constant term is 0");
    WittVector { series }
}

/// Witt addition: the product of series.
pub fn witt_add(a: &WittVector, b: &WittVector) -> Result<WittVector> {
    a.check_precision(b)?;
    Ok(WittVector { series: a.series.mul(&b.series)? })
}

/// Witt multiplication: componentwise product in ghost coordinates.
pub fn witt_mul(a: &WittVector, b: &WittVector) -> Result<WittVector> {
    a.check_precision(b)?;
    let (ga, gb) = (ghost(a), ghost(b));
    let prod = ga.components.iter().zip(&gb.components).map(|(x, y)| x * y).collect();
    Ok(unghost(&GhostVector { components: prod }))
}

impl<'de> Deserialize<'de> for WittVector {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let coeffs = Vec::<Rational>::deserialize(deserializer)?;
        WittVector::from_coeffs(coeffs).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for WittVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.series.fmt(f)
    }
}
