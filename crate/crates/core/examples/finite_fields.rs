//! Extension fields 𝔽_{qⁿ} and a few point counts.
//!
//! cargo run --example finite_fields

use nczeta::points::{count_points, CountOptions, FieldTower, ProjectiveScheme, SchemeInput};

fn main() -> nczeta::Result<()> {
    let tower = FieldTower::new(2, 1)?;
    for n in 1..=4 {
        let f = tower.build_extension(n)?;
        println!("F_{}: modulus coefficients {:?}", f.order(), f.modulus());
    }
    let f = tower.build_extension(3)?;
    let x = 2; // the class of x
    println!("in F_8: x^7 = {}, 1/x = {:?}", f.pow(x, 7), f.inverse(x));

    // A smooth conic over 𝔽₃ is a ℙ¹, so it has 3ⁿ + 1 points.
    let input = SchemeInput {
        p: 3,
        r: 1,
        vars: vec!["x".into(), "y".into(), "z".into()],
        equations: vec!["x^2 + y^2 - z^2".into()],
        label: "conic".into(),
        dim: Some(1),
    };
    let conic = ProjectiveScheme::from_input(&input)?;
    let tower = conic.tower();
    for n in 1..=4 {
        println!("|C(F_{})| = {}", tower.q().pow(n), count_points(&conic, &tower, n, &CountOptions::default())?);
    }
    Ok(())
}
