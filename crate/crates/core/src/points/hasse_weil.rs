use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{pade_reconstruct, Polynomial, Rational, RationalFunction, TruncatedSeries};
use crate::points::count::{CountOptions, CountVector};
use crate::points::scheme::ProjectiveScheme;
use crate::zeta::FunctionalEquation;

/// Hasse–Weil zeta function of a scheme, assembled from point counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemeZetaReport {
    pub label: String,
    pub q: u64,
    pub counts: Vec<u64>,
    pub series: TruncatedSeries,
    pub rational: RationalFunction,
    /// `rational` in factored notation, e.g. `1/((1-t)(1-2t))`.
    pub rational_form: String,
    /// `deg(den) − deg(num)`, the Euler characteristic for smooth proper input.
    #[serde(rename = "E")]
    pub euler_characteristic: i64,
    pub dimension: Option<u32>,
    /// Whether `dimension` came from trying the functional equation for each
    /// `d` rather than from the input.
    pub dimension_inferred: bool,
    /// `det` holds the constant `± q^{dE/2}`. `None` when no sign works.
    pub functional_eq: Option<FunctionalEquation>,
    /// Set when the result shows the input is not geometrically irreducible
    /// (or not smooth and proper), so the numbers carry no guarantee.
    pub caveat: Option<String>,
}

/// The constant `c` with `Z(1/(q^d t)) = c · t^E · Z(t)`, provided `c² = q^{dE}`.
pub fn functional_equation_constant(z: &RationalFunction, q: u64, d: u32, e: i64) -> Result<Rational> {
    let qd = Rational::from_int(q as i64).pow(d as i64);
    let lhs = z.substitute_reciprocal(&qd);
    let rhs = z.to_laurent().times_t_power(e);
    let c = lhs.ratio_constant(&rhs).ok_or(Error::NoSignWorks)?;
    if &c * &c != qd.pow(e) {
        return Err(Error::NoSignWorks);
    }
    Ok(c)
}

/// Sign `s` with `Z(1/(q^d t)) = s · t^E · q^{dE/2} · Z(t)`.
pub fn scheme_functional_equation(z: &RationalFunction, q: u64, d: u32, e: i64) -> Result<i64> {
    let c = functional_equation_constant(z, q, d, e)?;
    Ok(if c.is_negative() { -1 } else { 1 })
}

/// Multiplicity of `(1 − a t)` in `p`.
fn multiplicity(p: &Polynomial, a: &Rational) -> usize {
    let root = a.recip();
    let factor = Polynomial::one_minus(a.clone());
    let mut p = p.clone();
    let mut k = 0;
    while !p.is_zero() && p.eval(&root).is_zero() {
        p = p.div_rem(&factor).0;
        k += 1;
    }
    k
}

fn caveat(z: &RationalFunction, q: u64, d: Option<u32>) -> Option<String> {
    // For geometrically irreducible smooth proper X, H⁰ and H^{2d} are lines
    // on which Frobenius acts by 1 and q^d.
    let poles_at_one = multiplicity(z.den(), &Rational::one());
    if poles_at_one != 1 {
        return Some(format!("pole of order {poles_at_one} at t = 1; input is not geometrically irreducible"));
    }
    if let Some(d) = d.filter(|&d| d > 0) {
        let top = Rational::from_int(q as i64).pow(d as i64);
        let k = multiplicity(z.den(), &top);
        if k != 1 {
            return Some(format!("pole of order {k} at t = 1/{top}; input is not geometrically irreducible"));
        }
    }
    None
}

/// Counts `N₁..N_m`, reconstructs `Z_X(t)` with Padé bound `⌊m/2⌋`, and
/// checks the functional equation. The dimension is taken from the scheme
/// if given, otherwise the least `d ≤ N` for which a sign works.
pub fn hasse_weil_zeta(x: &ProjectiveScheme, m: usize, opts: &CountOptions) -> Result<SchemeZetaReport> {
    if m == 0 {
        return Err(Error::InsufficientPrecision { precision: 0, max_deg: 0 });
    }
    let counts = CountVector::count(x, m, opts)?;
    zeta_from_counts(&counts, x.dim_hint, x.num_vars().saturating_sub(1) as u32, &x.label)
}

/// The reconstruction half of [`hasse_weil_zeta`], for counts obtained elsewhere.
pub fn zeta_from_counts(counts: &CountVector, dim: Option<u32>, max_dim: u32, label: &str) -> Result<SchemeZetaReport> {
    let m = counts.counts.len();
    let series = counts.zeta_series();
    let rational = pade_reconstruct(&series, m / 2)?;
    let e = rational.degree_gap();
    let q = counts.q;

    let (dimension, dimension_inferred, functional_eq) = match dim {
        Some(d) => (Some(d), false, functional_equation_constant(&rational, q, d, e).ok().map(|c| (d, c))),
        None => {
            let found = (0..=max_dim).find_map(|d| functional_equation_constant(&rational, q, d, e).ok().map(|c| (d, c)));
            (found.as_ref().map(|(d, _)| *d), true, found)
        }
    };
    let functional_eq = functional_eq.map(|(_, c)| FunctionalEquation {
        sign: if c.is_negative() { -1 } else { 1 },
        det: c,
        holds: true,
    });
    Ok(SchemeZetaReport {
        label: label.to_string(),
        q,
        counts: counts.counts.clone(),
        series,
        rational_form: rational.to_string(),
        caveat: caveat(&rational, q, dimension),
        rational,
        euler_characteristic: e,
        dimension,
        dimension_inferred,
        functional_eq,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::points::scheme::SchemeInput;

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(Polynomial::from_i64(num), Polynomial::from_i64(den)).unwrap()
    }

    fn p1_zeta() -> RationalFunction {
        rf(&[1], &[1, -3, 2])
    }

    #[test]
    fn signs() {
        assert_eq!(scheme_functional_equation(&p1_zeta(), 2, 1, 2), Ok(1));
        assert_eq!(functional_equation_constant(&p1_zeta(), 2, 1, 2).unwrap(), Rational::from_int(2));
        let elliptic = rf(&[1, 3, 5], &[1, -6, 5]);
        assert_eq!(scheme_functional_equation(&elliptic, 5, 1, 0), Ok(1));
        assert_eq!(scheme_functional_equation(&rf(&[1], &[1, -1]), 2, 1, 2), Err(Error::NoSignWorks));
        // A point: Z = 1/(1−t) with d = 0, E = 1 gives Z(1/t) = −t·Z(t).
        assert_eq!(scheme_functional_equation(&rf(&[1], &[1, -1]), 2, 0, 1), Ok(-1));
    }

    #[test]
    fn constant_must_be_a_power_of_q() {
        // Z(1/(2t)) = c t² Z(t) holds with c = 2·3 for this Z, but c² ≠ 2².
        let z = rf(&[1], &[1, -3, 2]);
        let scaled = rf(&[1], &[1, -7, 6]);
        assert_eq!(scheme_functional_equation(&scaled, 6, 1, 2), Ok(1));
        assert_eq!(scheme_functional_equation(&scaled, 2, 1, 2), Err(Error::NoSignWorks));
        assert_eq!(scheme_functional_equation(&z, 3, 1, 2), Err(Error::NoSignWorks));
    }

    fn report(input: &str, m: usize) -> SchemeZetaReport {
        let input: SchemeInput = serde_json::from_str(input).unwrap();
        hasse_weil_zeta(&ProjectiveScheme::from_input(&input).unwrap(), m, &CountOptions::default()).unwrap()
    }

    #[test]
    fn projective_line_and_plane() {
        let r = report(r#"{"p": 2, "vars": ["x", "y"], "label": "P1/F2"}"#, 6);
        assert_eq!(r.counts, vec![3, 5, 9, 17, 33, 65]);
        assert_eq!(r.rational, p1_zeta());
        assert_eq!(r.rational_form, "1/((1-t)(1-2t))");
        assert_eq!((r.euler_characteristic, r.dimension, r.dimension_inferred), (2, Some(1), true));
        assert_eq!(r.functional_eq.as_ref().map(|f| f.sign), Some(1));
        assert_eq!(r.caveat, None);

        let r = report(r#"{"p": 2, "vars": ["x", "y", "z"], "dim": 2}"#, 8);
        assert_eq!(&r.counts[..3], &[7, 21, 73]);
        assert_eq!(r.rational, rf(&[1], &[1, -7, 14, -8]));
        assert_eq!(r.euler_characteristic, 3);
        // Z(1/(4t)) = −8t³·Z(t): odd E brings a minus sign.
        let fe = r.functional_eq.unwrap();
        assert_eq!((fe.sign, fe.det), (-1, Rational::from_int(-8)));
    }

    #[test]
    fn elliptic_curve_four_terms() {
        let r = report(r#"{"p": 5, "vars": ["x","y","z"], "equations": ["y^2*z - x^3 - x*z^2 - z^3"]}"#, 4);
        assert_eq!(&r.counts[..2], &[9, 27]);
        assert_eq!(r.rational, rf(&[1, 3, 5], &[1, -6, 5]));
        assert_eq!(r.rational_form, "(1+3t+5t^2)/((1-t)(1-5t))");
        assert_eq!((r.euler_characteristic, r.dimension), (0, Some(1)));
        let fe = r.functional_eq.unwrap();
        assert_eq!((fe.sign, fe.det), (1, Rational::one()));
    }

    #[test]
    fn reducible_input_is_flagged() {
        // Two points x(x − y) = 0 over 𝔽₃.
        let r = report(r#"{"p": 3, "vars": ["x","y"], "equations": ["x^2 - x*y"]}"#, 4);
        assert_eq!(r.counts, vec![2, 2, 2, 2]);
        assert_eq!(r.rational, rf(&[1], &[1, -2, 1]));
        assert!(r.caveat.is_some());
    }

    #[test]
    fn report_round_trips_through_json() {
        let r = report(r#"{"p": 2, "vars": ["x", "y"], "label": "P1/F2"}"#, 6);
        let back: SchemeZetaReport = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        assert_eq!(back, r);
    }
}
