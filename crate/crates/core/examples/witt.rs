//! Arithmetic in the big Witt ring W(ℚ) through ghost coordinates.
//!
//! cargo run --example witt

use nczeta::exact::{q, Rational};
use nczeta::witt::{ghost, unghost, witt_add, witt_mul, GhostVector, WittVector};

fn main() -> nczeta::Result<()> {
    let n = 6;
    let a = WittVector::geometric(&q(2, 1), n);
    let b = WittVector::geometric(&q(3, 1), n);
    println!("a = {a}\nb = {b}");
    println!("ghost(a) = {:?}", ghost(&a).components().iter().map(Rational::to_string).collect::<Vec<_>>());
    println!("a + b = {}", witt_add(&a, &b)?);
    println!("a * b = {}", witt_mul(&a, &b)?);
    println!("-a = {}", a.neg());

    // Ghost coordinates (1, 1, 1, …) are those of the multiplicative unit 1/(1 − t).
    let one = unghost(&GhostVector::new(vec![Rational::one(); n]));
    println!("unghost(1, 1, …) = {one}");
    assert_eq!(one, WittVector::one(n));

    let w = WittVector::from_coeffs(vec![q(1, 1), q(-1, 2), q(1, 3), q(0, 1), q(5, 7)])?;
    assert_eq!(unghost(&ghost(&w)), w);
    println!("round trip of {w} is exact");
    Ok(())
}
