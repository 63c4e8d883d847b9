//! Smith and Hermite normal forms over ℤ.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

/// Result of [`smith_normal_form`]: `u · m · v = d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// Number of nonzero invariant factors.
    pub fn rank(&self) -> usize {
        (0..self.d.rows().min(self.d.cols())).take_while(|&i| !self.d[(i, i)].is_zero()).count()
    }

    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d[(i, i)].clone()).collect()
    }
}

fn row_axpy(m: &mut IntMatrix, target: usize, source: usize, factor: &BigInt) {
    for j in 0..m.cols() {
        let v = factor * &m[(source, j)];
        m[(target, j)] -= v;
    }
}

fn col_axpy(m: &mut IntMatrix, target: usize, source: usize, factor: &BigInt) {
    for i in 0..m.rows() {
        let v = factor * &m[(i, source)];
        m[(i, target)] -= v;
    }
}

/// Smith normal form with unimodular transforms.
///
/// The pivot is always the smallest-magnitude nonzero entry of the active
/// submatrix, first in row-major order on ties, so `u` and `v` are
/// reproducible.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let x = &d[(i, j)];
                    if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < d[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return SmithForm { u, d, v };
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let pivot = d[(t, t)].clone();
            for i in t + 1..rows {
                let quot = &d[(i, t)] / &pivot;
                if !quot.is_zero() {
                    row_axpy(&mut d, i, t, &quot);
                    row_axpy(&mut u, i, t, &quot);
                }
            }
            for j in t + 1..cols {
                let quot = &d[(t, j)] / &pivot;
                if !quot.is_zero() {
                    col_axpy(&mut d, j, t, &quot);
                    col_axpy(&mut v, j, t, &quot);
                }
            }
            let dirty = (t + 1..rows).any(|i| !d[(i, t)].is_zero()) || (t + 1..cols).any(|j| !d[(t, j)].is_zero());
            if dirty {
                continue;
            }
            // Enforce d_t | every remaining entry by folding an offending row into row t.
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !d[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let minus_one = BigInt::from(-1);
                    row_axpy(&mut d, t, i, &minus_one);
                    row_axpy(&mut u, t, i, &minus_one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            for j in 0..cols {
                d[(t, j)] = -&d[(t, j)];
            }
            for j in 0..rows {
                u[(t, j)] = -&u[(t, j)];
            }
        }
    }
    SmithForm { u, d, v }
}

/// ℤ-basis of `{ y : m·y = 0 }`, as column vectors of `v` beyond the rank.
pub fn integer_kernel(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(m);
    let r = snf.rank();
    (r..m.cols()).map(|j| (0..m.cols()).map(|i| snf.v[(i, j)].clone()).collect()).collect()
}

/// Row-style Hermite normal form of the lattice spanned by `vectors`:
/// echelon form, positive pivots, entries above each pivot reduced into `[0, pivot)`.
/// Zero rows are dropped, so the result is a basis.
pub fn hermite_normal_form(vectors: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let Some(n) = vectors.first().map(Vec::len) else {
        return Vec::new();
    };
    let mut a: Vec<Vec<BigInt>> = vectors.to_vec();
    let mut r = 0;
    for col in 0..n {
        if r == a.len() {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for i in r..a.len() {
                if !a[i][col].is_zero() && best.is_none_or(|b| a[i][col].abs() < a[b][col].abs()) {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            a.swap(r, b);
            let mut done = true;
            for i in r + 1..a.len() {
                if a[i][col].is_zero() {
                    continue;
                }
                let quot = &a[i][col] / &a[r][col];
                let pivot_row = a[r].clone();
                for (x, p) in a[i].iter_mut().zip(&pivot_row) {
                    *x -= &quot * p;
                }
                if !a[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if a[r][col].is_zero() {
            continue;
        }
        if a[r][col].is_negative() {
            for x in a[r].iter_mut() {
                *x = -&*x;
            }
        }
        let pivot_row = a[r].clone();
        for row in a.iter_mut().take(r) {
            let quot = row[col].div_floor(&pivot_row[col]);
            if !quot.is_zero() {
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &quot * p;
                }
            }
        }
        r += 1;
    }
    a.truncate(r);
    a
}

/// Membership of `v` in the lattice with Hermite basis `hnf`.
pub fn in_lattice(hnf: &[Vec<BigInt>], v: &[BigInt]) -> bool {
    let mut v = v.to_vec();
    for row in hnf {
        let Some(pc) = row.iter().position(|x| !x.is_zero()) else { continue };
        let (quot, rem) = v[pc].div_rem(&row[pc]);
        if !rem.is_zero() {
            return false;
        }
        for (x, p) in v.iter_mut().zip(row) {
            *x -= &quot * p;
        }
    }
    v.iter().all(Zero::is_zero)
}
