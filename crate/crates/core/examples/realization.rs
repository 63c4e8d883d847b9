//! Zeta functions of ℤ/2-graded matrix realizations, e.g. Frobenius acting on
//! the cohomology of an elliptic curve over 𝔽₅.
//!
//! cargo run --example realization

use nczeta::exact::{q, RatMatrix};
use nczeta::zeta::{
    determinant, euler_supertrace_class, supertrace_sequence, zeta_det, zeta_report, Block, SemisimpleBlockData,
    SuperRealization,
};

fn main() -> nczeta::Result<()> {
    let even = RatMatrix::from_i64_rows(&[vec![1, 0], vec![0, 5]])?;
    // Companion matrix of x² + 3x + 5: eigenvalues α, β with α + β = −3, αβ = 5.
    let odd = RatMatrix::from_i64_rows(&[vec![0, -5], vec![1, -3]])?;
    let r = SuperRealization::new(even, odd, "H*(E/F5)")?;

    let traces: Vec<String> = supertrace_sequence(&r, 6).iter().map(|a| a.to_string()).collect();
    println!("supertraces of Frobenius powers: {}", traces.join(", "));
    println!("Z(t) = {}", zeta_det(&r)?);

    let report = zeta_report(&r, 12)?;
    println!("series: {}", report.series);
    println!("Padé: {:?}, degree gap {:?}", report.rational.map(|z| z.to_string()), report.degree_gap);
    println!("super trace of identity: {:?}", report.super_trace_id);
    println!("class of Betti numbers (1, 2, 1): {:?}", euler_supertrace_class(&[1, 2, 1])?);

    let blocks = SemisimpleBlockData {
        blocks: vec![
            Block { matrix: RatMatrix::from_i64_rows(&[vec![2, 1], vec![1, 3]])?, mu: 1 },
            Block { matrix: RatMatrix::diagonal(&[q(3, 1)]), mu: -1 },
        ],
    };
    println!("determinant of block data: {}", determinant(&blocks)?);
    Ok(())
}
