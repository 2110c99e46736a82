//! Census of all reduced words in F_2 up to a length (default 6).
//!
//! cargo run --release --example census -- 7

use std::time::Instant;

use anyhow::Result;
use wordchir::classify::{census, ClassifyOptions};

fn main() -> Result<()> {
    let max: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(6);
    let opts = ClassifyOptions {
        census_max_length: max,
        ..ClassifyOptions::default()
    };
    println!("len  words  expected  aut-inverted  statuses");
    for n in 1..=max {
        let t = Instant::now();
        let c = census(n, &opts)?;
        println!(
            "{n:>3}  {:>5}  {:>8}  {:>12}  {:?}  ({:.2?})",
            c.total,
            c.expected_total,
            c.aut_invertible,
            c.histogram,
            t.elapsed()
        );
        if !c.not_aut_invertible.is_empty() {
            println!(
                "     {} words not inverted by any automorphism, e.g. {}",
                c.not_aut_invertible.len(),
                c.not_aut_invertible[0]
            );
        }
    }
    Ok(())
}
