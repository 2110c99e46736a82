//! Parsing, reduction and the basic word operations.
//!
//! cargo run --example words -- "x1 x2 x2^-1 x1^3" "abAB"

use anyhow::Result;
use wordchir::word::{enumerate_reduced, parse_infer, Word};

fn main() -> Result<()> {
    let mut inputs: Vec<String> = std::env::args().skip(1).collect();
    if inputs.is_empty() {
        inputs = vec![
            "x1 x2 x2^-1 x1^3".into(),
            "x2^-1 x1 x2 x1^-1 x2".into(),
            "abAB".into(),
        ];
    }
    for text in &inputs {
        let w = parse_infer(text)?;
        let (core, conj) = w.cyclic_reduce();
        println!("input      {text}");
        println!("reduced    {w}  (rank {}, length {})", w.rank(), w.len());
        println!("inverse    {}", w.invert());
        println!("exponents  {:?}", w.exponent_vector().sums());
        println!("cyclic     core {core}, conjugator {conj}");
        if let Some(c) = w.to_compact() {
            println!("compact    {c}");
        }
        println!();
    }

    let x = Word::generator(1, 2)?;
    let y = Word::generator(2, 2)?;
    let c = Word::commutator(&x, &y)?;
    println!("[x1, x2] = {c}, squared = {}", c.pow(2));
    for n in 1..=4 {
        println!(
            "reduced words of length {n} in F_2: {}",
            enumerate_reduced(2, n).len()
        );
    }
    Ok(())
}
