//! Engel words e_n = [e_{n-1}, x2] and whether an automorphism inverts them.
//!
//! cargo run --release --example engel -- 5

use std::time::Instant;

use anyhow::Result;
use wordchir::classify::{classify, engel, Bracket, ClassifyOptions, Rule};

fn main() -> Result<()> {
    let max: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(4);
    let opts = ClassifyOptions::default();
    for bracket in [Bracket::Standard, Bracket::Inverse] {
        println!("bracket {bracket:?}");
        for n in 1..=max {
            let e = engel(n, bracket);
            let t = Instant::now();
            let v = classify(&e, &opts)?;
            let orbit = v.firing(Rule::AutOrbit).map(|f| &f.params);
            println!(
                "  e_{n}: length {:>3}, exponents {:?}, {:?}, aut-invertible {:?} ({:.2?})",
                e.len(),
                e.exponent_vector().sums(),
                v.status,
                v.aut_invertible,
                t.elapsed()
            );
            if let Some(p) = orbit {
                println!("       {}", serde_json::to_string(p)?);
            }
            if let Some(c) = v.certificates.first() {
                println!("       {}", c.endo);
            }
        }
    }
    Ok(())
}
