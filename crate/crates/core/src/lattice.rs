//! Euler pairings on finitely generated free abelian groups.
//!
//! A [`BilinearLattice`] is ℤⁿ with an integer Gram matrix `G`, so that
//! `χ(x, y) = xᵀ G y`. The numerical quotient is `ℤⁿ / Ker(χ)`, which only
//! makes sense when the left and right kernels coincide.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::matrix::int_rows_serde;
use crate::exact::{hermite_normal_form, in_lattice, integer_kernel, smith_normal_form, IntMatrix};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BilinearLattice {
    pub rank: usize,
    pub gram: IntMatrix,
    #[serde(default)]
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelReport {
    /// Hermite basis of `{x : xᵀG = 0}`.
    #[serde(with = "int_rows_serde")]
    pub left_basis: Vec<Vec<BigInt>>,
    /// Hermite basis of `{y : Gy = 0}`.
    #[serde(with = "int_rows_serde")]
    pub right_basis: Vec<Vec<BigInt>>,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumericalQuotient {
    pub rank: usize,
    /// `(n−k)×n`, surjective onto ℤ^{n−k} with kernel exactly Ker(χ).
    pub projection: IntMatrix,
    /// `n×(n−k)` right inverse of `projection`.
    pub section: IntMatrix,
    pub induced_gram: IntMatrix,
}

impl BilinearLattice {
    pub fn new(gram: IntMatrix, label: impl Into<String>) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::NotSquare { rows: gram.rows(), cols: gram.cols() });
        }
        Ok(BilinearLattice { rank: gram.rows(), gram, label: label.into() })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>], label: impl Into<String>) -> Result<Self> {
        Self::new(IntMatrix::from_i64_rows(rows)?, label)
    }

    /// Checks the schema invariant `gram` is `rank × rank`.
    pub fn validate(&self) -> Result<()> {
        if !self.gram.is_square() {
            return Err(Error::NotSquare { rows: self.gram.rows(), cols: self.gram.cols() });
        }
        if self.gram.rows() != self.rank {
            return Err(Error::DimensionMismatch { what: "gram size vs rank", expected: self.rank, found: self.gram.rows() });
        }
        Ok(())
    }
}

pub fn euler_pair(l: &BilinearLattice, x: &[BigInt], y: &[BigInt]) -> Result<BigInt> {
    for v in [x, y] {
        if v.len() != l.rank {
            return Err(Error::DimensionMismatch { what: "lattice vector", expected: l.rank, found: v.len() });
        }
    }
    let gy = l.gram.mul_vec(y)?;
    Ok(x.iter().zip(&gy).map(|(a, b)| a * b).sum())
}

/// Euler form `G = I − A` of the path algebra of a finite acyclic quiver with
/// adjacency matrix `A` (`A[i][j]` arrows from `i` to `j`).
pub fn quiver_euler_form(adjacency: &IntMatrix, n: usize) -> Result<BilinearLattice> {
    if !adjacency.is_square() {
        return Err(Error::NotSquare { rows: adjacency.rows(), cols: adjacency.cols() });
    }
    if adjacency.rows() != n {
        return Err(Error::DimensionMismatch { what: "adjacency size", expected: n, found: adjacency.rows() });
    }
    for i in 0..n {
        for j in 0..n {
            if adjacency[(i, j)] < BigInt::zero() {
                return Err(Error::NegativeEntry { row: i, col: j });
            }
        }
    }
    // Kahn's algorithm: acyclic iff every vertex can be peeled off.
    let mut indegree: Vec<usize> =
        (0..n).map(|j| (0..n).filter(|&i| !adjacency[(i, j)].is_zero()).count()).collect();
    let mut ready: Vec<usize> = (0..n).filter(|&j| indegree[j] == 0).collect();
    let mut seen = 0;
    while let Some(v) = ready.pop() {
        seen += 1;
        for j in 0..n {
            if !adjacency[(v, j)].is_zero() {
                indegree[j] -= 1;
                if indegree[j] == 0 {
                    ready.push(j);
                }
            }
        }
    }
    if seen != n {
        return Err(Error::NotAcyclic);
    }
    let gram = &IntMatrix::identity(n) - adjacency;
    BilinearLattice::new(gram, "")
}

fn same_sublattice(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> bool {
    a.iter().all(|v| in_lattice(b, v)) && b.iter().all(|v| in_lattice(a, v))
}

pub fn kernels(l: &BilinearLattice) -> KernelReport {
    let right_basis = hermite_normal_form(&integer_kernel(&l.gram));
    let left_basis = hermite_normal_form(&integer_kernel(&l.gram.transpose()));
    let agree = same_sublattice(&left_basis, &right_basis);
    KernelReport { left_basis, right_basis, agree }
}

/// `K₀ / Ker(χ)` with its induced pairing.
pub fn numerical_quotient(l: &BilinearLattice) -> Result<NumericalQuotient> {
    let report = kernels(l);
    if !report.agree {
        return Err(Error::KernelsDisagree);
    }
    let n = l.rank;
    let k = report.right_basis.len();
    let r = n - k;
    if k == 0 {
        return Ok(NumericalQuotient {
            rank: n,
            projection: IntMatrix::identity(n),
            section: IntMatrix::identity(n),
            induced_gram: l.gram.clone(),
        });
    }
    // Kernel rows B (k×n) are saturated, so U·B·V = [I_k | 0]. Then the last
    // n−k rows of Vᵀ give the projection and the last n−k columns of (Vᵀ)⁻¹
    // a section.
    let basis = IntMatrix::from_rows(report.right_basis.clone())?;
    let snf = smith_normal_form(&basis);
    debug_assert!(snf.invariant_factors().iter().all(|d| *d == BigInt::from(1)));
    let vt = snf.v.transpose();
    let vt_inv = vt
        .to_rational()
        .inverse()?
        .expect("unimodular")
        .map(|x| {
            debug_assert!(x.is_integer());
            x.numer().clone()
        });
    let mut projection = IntMatrix::zeros(r, n);
    let mut section = IntMatrix::zeros(n, r);
    for i in 0..r {
        for j in 0..n {
            projection[(i, j)] = vt[(k + i, j)].clone();
            section[(j, i)] = vt_inv[(j, k + i)].clone();
        }
    }
    let induced_gram = &(&section.transpose() * &l.gram) * &section;
    Ok(NumericalQuotient { rank: r, projection, section, induced_gram })
}

impl NumericalQuotient {
    pub fn project(&self, x: &[BigInt]) -> Result<Vec<BigInt>> {
        self.projection.mul_vec(x)
    }

    pub fn as_lattice(&self, label: impl Into<String>) -> BilinearLattice {
        BilinearLattice { rank: self.rank, gram: self.induced_gram.clone(), label: label.into() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn lat(rows: &[Vec<i64>]) -> BilinearLattice {
        BilinearLattice::from_i64_rows(rows, "test").unwrap()
    }

    #[test]
    fn pairing_examples() {
        let id = lat(&[vec![1, 0], vec![0, 1]]);
        assert_eq!(euler_pair(&id, &ints(&[1, 0]), &ints(&[1, 0])).unwrap(), BigInt::from(1));
        let a2 = lat(&[vec![1, -1], vec![0, 1]]);
        assert_eq!(euler_pair(&a2, &ints(&[1, 0]), &ints(&[0, 1])).unwrap(), BigInt::from(-1));
        assert_eq!(euler_pair(&a2, &ints(&[0, 0]), &ints(&[3, 7])).unwrap(), BigInt::zero());
        assert!(matches!(euler_pair(&a2, &ints(&[1]), &ints(&[0, 1])), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn quiver_forms() {
        let none = IntMatrix::zeros(2, 2);
        assert_eq!(quiver_euler_form(&none, 2).unwrap().gram, IntMatrix::identity(2));
        let a2 = IntMatrix::from_i64_rows(&[vec![0, 1], vec![0, 0]]).unwrap();
        assert_eq!(
            quiver_euler_form(&a2, 2).unwrap().gram,
            IntMatrix::from_i64_rows(&[vec![1, -1], vec![0, 1]]).unwrap()
        );
        let loop1 = IntMatrix::from_i64_rows(&[vec![1, 0], vec![0, 0]]).unwrap();
        assert_eq!(quiver_euler_form(&loop1, 2), Err(Error::NotAcyclic));
        let cycle = IntMatrix::from_i64_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(quiver_euler_form(&cycle, 2), Err(Error::NotAcyclic));
        let neg = IntMatrix::from_i64_rows(&[vec![0, -1], vec![0, 0]]).unwrap();
        assert!(matches!(quiver_euler_form(&neg, 2), Err(Error::NegativeEntry { .. })));
    }

    #[test]
    fn kernel_examples() {
        let r = kernels(&lat(&[vec![1, -1], vec![0, 1]]));
        assert!(r.left_basis.is_empty() && r.right_basis.is_empty() && r.agree);

        let r = kernels(&lat(&[vec![1, 1], vec![1, 1]]));
        assert_eq!(r.left_basis, vec![ints(&[1, -1])]);
        assert_eq!(r.right_basis, vec![ints(&[1, -1])]);
        assert!(r.agree);

        // xᵀG = 0 ⇔ x₀ = 0; Gy = 0 ⇔ y₁ = 0.
        let r = kernels(&lat(&[vec![0, 1], vec![0, 0]]));
        assert_eq!(r.left_basis, vec![ints(&[0, 1])]);
        assert_eq!(r.right_basis, vec![ints(&[1, 0])]);
        assert!(!r.agree);
    }

    #[test]
    fn quotient_examples() {
        let q = numerical_quotient(&lat(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]])).unwrap();
        assert_eq!(q.rank, 3);
        assert_eq!(q.induced_gram, IntMatrix::identity(3));

        let q = numerical_quotient(&lat(&[vec![1, 1], vec![1, 1]])).unwrap();
        assert_eq!(q.rank, 1);
        assert_eq!(q.induced_gram, IntMatrix::from_i64_rows(&[vec![1]]).unwrap());

        let q = numerical_quotient(&lat(&[vec![0, 0], vec![0, 0]])).unwrap();
        assert_eq!(q.rank, 0);

        assert_eq!(numerical_quotient(&lat(&[vec![0, 1], vec![0, 0]])), Err(Error::KernelsDisagree));
    }

    #[test]
    fn pairing_descends() {
        let l = lat(&[vec![2, 1, 3], vec![1, 1, 2], vec![3, 2, 5]]);
        let q = numerical_quotient(&l).unwrap();
        assert_eq!(q.rank, 2);
        let ql = q.as_lattice("quotient");
        let pi_sigma = &q.projection * &q.section;
        assert_eq!(pi_sigma, IntMatrix::identity(2));
        for x in [ints(&[1, 0, 0]), ints(&[0, 1, 0]), ints(&[4, -1, 2])] {
            for y in [ints(&[0, 0, 1]), ints(&[1, 1, 1]), ints(&[-2, 3, 0])] {
                let lhs = euler_pair(&l, &x, &y).unwrap();
                let rhs = euler_pair(&ql, &q.project(&x).unwrap(), &q.project(&y).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}
