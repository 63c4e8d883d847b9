//! Count points of the elliptic curve y²z = x³ + xz² + z³ over 𝔽_{5ⁿ} and
//! rebuild its zeta function.
//!
//! cargo run --release --example point_count -- 6

use std::time::Instant;

use nczeta::points::{hasse_weil_zeta, CountOptions, ProjectiveScheme, SchemeInput};

fn main() -> nczeta::Result<()> {
    let terms: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let input = SchemeInput {
        p: 5,
        r: 1,
        vars: vec!["x".into(), "y".into(), "z".into()],
        equations: vec!["y^2*z - x^3 - x*z^2 - z^3".into()],
        label: "E/F5".into(),
        dim: Some(1),
    };
    let curve = ProjectiveScheme::from_input(&input)?;
    let opts = CountOptions { budget: 300_000_000, workers: 0 };

    let start = Instant::now();
    let report = hasse_weil_zeta(&curve, terms, &opts)?;
    println!("{}: counts {:?}", report.label, report.counts);
    println!("Z(t) = {}", report.rational_form);
    println!("E = {}", report.euler_characteristic);
    if let Some(fe) = &report.functional_eq {
        println!("Z(1/(5t)) = {} t^E Z(t), sign {:+}", fe.det, fe.sign);
    }
    let num = report.rational.num();
    println!("leading / constant of numerator = {}", num.leading() / num.coeff(0));
    println!("({:.2?})", start.elapsed());
    Ok(())
}
