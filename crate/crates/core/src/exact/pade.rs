//! Exact rational reconstruction of truncated series (Padé approximation).

use super::poly::Polynomial;
use super::ratfunc::RationalFunction;
use super::rational::Rational;
use super::series::TruncatedSeries;
use crate::error::{Error, Result};

/// Solves `a·x = b` over ℚ by exact Gaussian elimination.
///
/// Returns `None` when the system is inconsistent. Free variables are set to 0.
pub fn solve_linear(a: &[Vec<Rational>], b: &[Rational], unknowns: usize) -> Option<Vec<Rational>> {
    let mut rows: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..unknowns {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= &(&f * p);
            }
        }
        pivots.push(c);
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[unknowns].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); unknowns];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = rows[i][unknowns].clone();
    }
    Some(x)
}

/// Finds `p/q` with `deg p, deg q ≤ max_deg`, `q(0) = 1` and `p/q ≡ s` through
/// `t^N`, where `N = s.precision() ≥ 2·max_deg`.
///
/// Denominator degree is minimized first, then numerator degree; the result
/// is returned in lowest terms.
pub fn pade_reconstruct(s: &TruncatedSeries, max_deg: usize) -> Result<RationalFunction> {
    let n = s.precision();
    if !s.coeff(0).is_one() {
        return Err(Error::BadConstantTerm { expected: "1", found: s.coeff(0).to_string() });
    }
    if n < 2 * max_deg {
        return Err(Error::InsufficientPrecision { precision: n, max_deg });
    }
    let c = s.coeffs();
    for dq in 0..=max_deg {
        for dp in 0..=max_deg {
            // Unknowns q_1..q_dq; for k in dp+1..=N: Σ_{j=0..dq} q_j·c_{k−j} = 0.
            let mut a = Vec::new();
            let mut b = Vec::new();
            for k in dp + 1..=n {
                let row: Vec<Rational> =
                    (1..=dq).map(|j| if j <= k { c[k - j].clone() } else { Rational::zero() }).collect();
                a.push(row);
                b.push(-&c[k]);
            }
            let Some(qs) = solve_linear(&a, &b, dq) else {
                continue;
            };
            let mut q_coeffs = vec![Rational::one()];
            q_coeffs.extend(qs);
            let den = Polynomial::new(q_coeffs);
            let num_coeffs: Vec<Rational> = (0..=dp)
                .map(|k| (0..=dq.min(k)).map(|j| den.coeff(j) * &c[k - j]).sum())
                .collect();
            let num = Polynomial::new(num_coeffs);
            let rf = RationalFunction::new(num, den)?;
            debug_assert_eq!(rf.expand(n), *s);
            return Ok(rf);
        }
    }
    Err(Error::NotRational { max_deg, precision: n })
}
