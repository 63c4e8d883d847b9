//! Characteristic polynomials by reduction to upper Hessenberg form.
//!
//! The Hessenberg route uses only similarity transforms and a determinant
//! recurrence; it never looks at traces of powers, so it stays independent of
//! the exp-of-traces side of the zeta identities it is checked against.

use super::matrix::RatMatrix;
use super::poly::Polynomial;
use super::rational::Rational;
use crate::error::{Error, Result};

fn hessenberg(mut h: RatMatrix) -> RatMatrix {
    let n = h.rows();
    for c in 0..n.saturating_sub(2) {
        let Some(i) = (c + 1..n).find(|&i| !h[(i, c)].is_zero()) else {
            continue;
        };
        if i != c + 1 {
            h.swap_rows(i, c + 1);
            h.swap_cols(i, c + 1);
        }
        let pivot = h[(c + 1, c)].clone();
        for j in c + 2..n {
            if h[(j, c)].is_zero() {
                continue;
            }
            let u = &h[(j, c)] / &pivot;
            // row_j -= u·row_{c+1}; col_{c+1} += u·col_j
            for k in 0..n {
                let v = &u * &h[(c + 1, k)];
                h[(j, k)] -= &v;
            }
            for k in 0..n {
                let v = &u * &h[(k, j)];
                h[(k, c + 1)] += &v;
            }
        }
    }
    h
}

/// `det(x·I − T)`, monic of degree `dim T`.
pub fn charpoly(t: &RatMatrix) -> Result<Polynomial> {
    if !t.is_square() {
        return Err(Error::NotSquare { rows: t.rows(), cols: t.cols() });
    }
    let n = t.rows();
    let h = hessenberg(t.clone());
    let x = Polynomial::new(vec![Rational::zero(), Rational::one()]);
    // p[m] = charpoly of the leading m×m block.
    let mut p: Vec<Polynomial> = vec![Polynomial::one()];
    for m in 0..n {
        let mut next = &(&x - &Polynomial::constant(h[(m, m)].clone())) * &p[m];
        let mut prod = Rational::one();
        for i in (0..m).rev() {
            prod *= &h[(i + 1, i)];
            if prod.is_zero() {
                break;
            }
            let coeff = &prod * &h[(i, m)];
            next = &next - &p[i].scale(&coeff);
        }
        p.push(next);
    }
    Ok(p.pop().expect("nonempty"))
}

/// `det(I − t·T)`: the reversed characteristic polynomial, constant term 1.
pub fn reverse_charpoly(t: &RatMatrix) -> Result<Polynomial> {
    let cp = charpoly(t)?;
    Ok(cp.reversed_scaled(&Rational::one(), t.rows()))
}
