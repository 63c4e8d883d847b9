//! Functional equations: Z(f⁻¹; 1/t) for realizations, and Z(1/(q^d t)) for
//! zeta functions of schemes.
//!
//! cargo run --example functional_equation

use nczeta::exact::{Polynomial, RatMatrix, RationalFunction};
use nczeta::points::{functional_equation_constant, scheme_functional_equation};
use nczeta::zeta::{functional_equation_check, SuperRealization};

fn main() -> nczeta::Result<()> {
    let doubling = SuperRealization::new(RatMatrix::from_i64_rows(&[vec![2]])?, RatMatrix::zeros(0, 0), "")?;
    let c = functional_equation_check(&doubling)?;
    println!("Z(f;t) = {}, Z(f⁻¹;t) = {}", c.zeta, c.inverse_zeta);
    println!("tr(id) = {}, det = {}, sign = {}, holds = {}", c.trace_id, c.det, c.sign, c.holds);

    let rf = |num: &[i64], den: &[i64]| RationalFunction::new(Polynomial::from_i64(num), Polynomial::from_i64(den));
    let cases = [
        ("P1 over F2", rf(&[1], &[1, -3, 2])?, 2, 1, 2),
        ("P2 over F2", rf(&[1], &[1, -7, 14, -8])?, 2, 2, 3),
        ("E over F5", rf(&[1, 3, 5], &[1, -6, 5])?, 5, 1, 0),
        ("1/(1-t)", rf(&[1], &[1, -1])?, 2, 1, 2),
    ];
    for (name, z, q, d, e) in cases {
        match scheme_functional_equation(&z, q, d, e) {
            Ok(sign) => {
                let c = functional_equation_constant(&z, q, d, e)?;
                println!("{name}: Z(1/(q^d t)) = {c} t^{e} Z(t), sign {sign:+}");
            }
            Err(err) => println!("{name}: {err}"),
        }
    }
    Ok(())
}
