use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::poly::Polynomial;
use super::rational::Rational;
use super::series::TruncatedSeries;
use crate::error::{Error, Result};

/// Quotient `num / den` in lowest terms with `den(0) = 1`.
///
/// The normalization makes structural equality coincide with equality of
/// rational functions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::BadConstantTerm { expected: "nonzero denominator", found: "0".into() });
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_zero() || g.degree() == Some(0) {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let d0 = den.coeff(0);
        if d0.is_zero() {
            return Err(Error::BadConstantTerm { expected: "nonzero denominator constant", found: "0".into() });
        }
        let inv = d0.recip();
        Ok(RationalFunction { num: num.scale(&inv), den: den.scale(&inv) })
    }

    pub fn polynomial(p: Polynomial) -> Self {
        RationalFunction { num: p, den: Polynomial::one() }
    }

    pub fn one() -> Self {
        Self::polynomial(Polynomial::one())
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    /// `deg(den) − deg(num)`; the zero function counts as degree 0.
    pub fn degree_gap(&self) -> i64 {
        self.den.degree_or_zero() as i64 - self.num.degree_or_zero() as i64
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.num * &other.num, &self.den * &other.den).expect("den(0) = 1 is preserved")
    }

    /// Quotient; fails when the result has a pole at `t = 0`.
    pub fn div(&self, other: &Self) -> Result<Self> {
        Self::new(&self.num * &other.den, &self.den * &other.num)
    }

    pub fn expand(&self, precision: usize) -> TruncatedSeries {
        TruncatedSeries::from_ratio(&self.num, &self.den, precision).expect("den(0) = 1")
    }

    /// `self(1 / (c·t))` as a Laurent-shifted fraction; `c` must be nonzero.
    pub fn substitute_reciprocal(&self, c: &Rational) -> LaurentFraction {
        let c_inv = c.recip();
        let dn = self.num.degree_or_zero();
        let dd = self.den.degree_or_zero();
        // p(1/(ct)) = t^{-dn} · Σ p_i c^{-i} t^{dn-i}
        LaurentFraction {
            num: self.num.reversed_scaled(&c_inv, dn),
            den: self.den.reversed_scaled(&c_inv, dd),
            t_power: dd as i64 - dn as i64,
        }
    }

    pub fn to_laurent(&self) -> LaurentFraction {
        LaurentFraction { num: self.num.clone(), den: self.den.clone(), t_power: 0 }
    }
}

/// `t^t_power · num / den`, with no normalization. Used for identities that
/// involve substitutions like `t ↦ 1/t` whose results have poles at 0.
#[derive(Clone, Debug)]
pub struct LaurentFraction {
    pub num: Polynomial,
    pub den: Polynomial,
    pub t_power: i64,
}

impl LaurentFraction {
    pub fn scale(&self, c: &Rational) -> Self {
        LaurentFraction { num: self.num.scale(c), den: self.den.clone(), t_power: self.t_power }
    }

    pub fn times_t_power(&self, k: i64) -> Self {
        LaurentFraction { num: self.num.clone(), den: self.den.clone(), t_power: self.t_power + k }
    }

    /// Exact equality as elements of ℚ(t), by cross multiplication.
    pub fn equals(&self, other: &Self) -> bool {
        let lhs = &self.num * &other.den;
        let rhs = &other.num * &self.den;
        let base = self.t_power.min(other.t_power);
        let lhs = lhs.shift((self.t_power - base) as usize);
        let rhs = rhs.shift((other.t_power - base) as usize);
        lhs == rhs
    }

    /// If `self / other` is a constant of ℚ(t), returns it.
    pub fn ratio_constant(&self, other: &Self) -> Option<Rational> {
        if other.num.is_zero() {
            return None;
        }
        if self.num.is_zero() {
            return Some(Rational::zero());
        }
        // self/other = t^{a−b} · (n1·d2)/(d1·n2)
        let top = &self.num * &other.den;
        let bottom = &self.den * &other.num;
        let (top, kt) = top.strip_t_power();
        let (bottom, kb) = bottom.strip_t_power();
        if self.t_power + kt as i64 != other.t_power + kb as i64 {
            return None;
        }
        if top.degree() != bottom.degree() {
            return None;
        }
        let c = top.leading() / bottom.leading();
        (bottom.scale(&c) == top).then_some(c)
    }
}

#[derive(Deserialize)]
struct RawRationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = RawRationalFunction::deserialize(deserializer)?;
        RationalFunction::new(raw.num, raw.den).map_err(serde::de::Error::custom)
    }
}

/// Writes `p` as `c · t^k · ∏(1 − a t)^m · rest`, splitting off rational linear factors.
/// Also returns the number of parenthesized factors.
fn factored(p: &Polynomial) -> (String, usize) {
    if p.is_zero() {
        return ("0".into(), 0);
    }
    let (stripped, k) = p.strip_t_power();
    let c = stripped.coeff(0);
    let normalized = stripped.scale(&c.recip());
    let (roots, _) = normalized.rational_roots();
    let mut linear: BTreeMap<Rational, usize> = BTreeMap::new();
    let mut product = Polynomial::one();
    for r in roots.iter().filter(|r| !r.is_zero()) {
        let a = r.recip();
        product = &product * &Polynomial::one_minus(a.clone());
        *linear.entry(a).or_default() += 1;
    }
    let rest = normalized.div_rem(&product).0;

    let mut factors: Vec<String> = Vec::new();
    for (a, mult) in &linear {
        let body = compact(&Polynomial::one_minus(a.clone()));
        factors.push(if *mult > 1 { format!("({body})^{mult}") } else { format!("({body})") });
    }
    if rest.degree().is_some_and(|d| d > 0) {
        factors.push(format!("({})", compact(&rest)));
    }
    let mut out = String::new();
    if !c.is_one() || (factors.is_empty() && k == 0) {
        if c == -Rational::one() && (k > 0 || !factors.is_empty()) {
            out.push('-');
        } else {
            out.push_str(&c.to_string());
        }
    }
    match k {
        0 => {}
        1 => out.push('t'),
        _ => out.push_str(&format!("t^{k}")),
    }
    let count = factors.len();
    for f in factors {
        out.push_str(&f);
    }
    (out, count)
}

fn compact(p: &Polynomial) -> String {
    p.to_string().replace(' ', "")
}

/// Factored display such as `1/((1-t)(1-2t))` or `(1+3t+5t^2)/((1-t)(1-5t))`.
impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (num, _) = factored(&self.num);
        if self.den.degree_or_zero() == 0 {
            return write!(f, "{num}");
        }
        let (den, count) = factored(&self.den);
        if count > 1 {
            write!(f, "{num}/({den})")
        } else {
            write!(f, "{num}/{den}")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::q;

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(Polynomial::from_i64(num), Polynomial::from_i64(den)).unwrap()
    }

    #[test]
    fn normalizes_to_lowest_terms() {
        // (1−t)(1+t) / ((1−t)·2) = (1+t)/2 … normalized with den(0)=1: (1/2 + t/2)/1
        let r = rf(&[1, 0, -1], &[2, -2]);
        assert_eq!(r.den(), &Polynomial::one());
        assert_eq!(r.num(), &Polynomial::new(vec![q(1, 2), q(1, 2)]));
    }

    #[test]
    fn pole_at_zero_rejected() {
        assert!(RationalFunction::new(Polynomial::one(), Polynomial::from_i64(&[0, 1])).is_err());
    }

    #[test]
    fn display_factored() {
        assert_eq!(rf(&[1], &[1, -3, 2]).to_string(), "1/((1-t)(1-2t))");
        let ell = rf(&[1, 3, 5], &[1, -6, 5]);
        assert_eq!(ell.to_string(), "(1+3t+5t^2)/((1-t)(1-5t))");
        assert_eq!(rf(&[1], &[1, -2]).to_string(), "1/(1-2t)");
        assert_eq!(rf(&[1], &[1, -2, 1]).to_string(), "1/(1-t)^2");
        assert_eq!(rf(&[0, -2], &[1, -2]).to_string(), "-2t/(1-2t)");
        assert_eq!(RationalFunction::one().to_string(), "1");
    }

    #[test]
    fn reciprocal_substitution_p1() {
        // Z = 1/((1−t)(1−2t)); Z(1/(2t)) = 2t²·Z(t)
        let z = rf(&[1], &[1, -3, 2]);
        let lhs = z.substitute_reciprocal(&q(2, 1));
        let rhs = z.to_laurent().times_t_power(2).scale(&q(2, 1));
        assert!(lhs.equals(&rhs));
        assert_eq!(lhs.ratio_constant(&z.to_laurent().times_t_power(2)), Some(q(2, 1)));
    }

    #[test]
    fn json_round_trip() {
        let z = rf(&[1, 3, 5], &[1, -6, 5]);
        let s = serde_json::to_string(&z).unwrap();
        assert_eq!(s, r#"{"num":["1","3","5"],"den":["1","-6","5"]}"#);
        assert_eq!(serde_json::from_str::<RationalFunction>(&s).unwrap(), z);
    }
}
