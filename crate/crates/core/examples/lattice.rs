//! Euler forms, their kernels, and numerical quotients.
//!
//! cargo run --example lattice

use num_bigint::BigInt;
use nczeta::exact::IntMatrix;
use nczeta::lattice::{euler_pair, kernels, numerical_quotient, quiver_euler_form, BilinearLattice};

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn main() -> nczeta::Result<()> {
    // A₃ quiver 0 → 1 → 2: χ = I − A is unimodular, so nothing is killed.
    let a3 = IntMatrix::from_i64_rows(&[vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]])?;
    let l = quiver_euler_form(&a3, 3)?;
    println!("A3 Euler form:\n{}", l.gram);
    println!("χ(S0, S1) = {}", euler_pair(&l, &ints(&[1, 0, 0]), &ints(&[0, 1, 0]))?);
    println!("numerical rank = {}\n", numerical_quotient(&l)?.rank);

    // A symmetric form of rank 2 on ℤ³.
    let l = BilinearLattice::from_i64_rows(&[vec![2, 1, 3], vec![1, 1, 2], vec![3, 2, 5]], "degenerate")?;
    let k = kernels(&l);
    println!("kernel basis {:?}, left = right: {}", k.right_basis, k.agree);
    let q = numerical_quotient(&l)?;
    println!("projection:\n{}\ninduced pairing:\n{}", q.projection, q.induced_gram);

    // Left and right kernels differ; the quotient is not defined.
    let bad = BilinearLattice::from_i64_rows(&[vec![0, 1], vec![0, 0]], "")?;
    let k = kernels(&bad);
    println!("left {:?}, right {:?}: {:?}", k.left_basis, k.right_basis, numerical_quotient(&bad).err());
    Ok(())
}
