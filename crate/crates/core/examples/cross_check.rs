//! Compare the zeta function of a matrix realization with the one obtained by
//! counting points, using the fixtures shipped with the repository.
//!
//! cargo run --example cross_check

use std::path::PathBuf;

use nczeta::cli::cross_check;
use nczeta::points::CountOptions;

fn main() {
    let fixtures = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    let pairs = [
        ("p1_realization.json", "p1_f2.json"),
        ("elliptic_realization.json", "elliptic_f5.json"),
        ("p1_realization.json", "elliptic_f5.json"),
    ];
    for (realization, scheme) in pairs {
        match cross_check(&fixtures.join(realization), &fixtures.join(scheme), None, &CountOptions::default()) {
            Ok(r) => println!(
                "{} vs {}: {} / {} after {} terms -> {}",
                r.realization_label,
                r.scheme_label,
                r.realization_zeta,
                r.scheme_zeta,
                r.terms,
                if r.matches { "match" } else { "mismatch" }
            ),
            Err(e) => println!("error: {e}"),
        }
    }
}
