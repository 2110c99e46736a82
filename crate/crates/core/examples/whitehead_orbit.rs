//! Whitehead's algorithm: minimization, orbit equivalence, automorphisms
//! that invert a word.
//!
//! cargo run --release --example whitehead_orbit -- "x1^2 x2^2 x1 x2^-1"

use anyhow::Result;
use wordchir::whitehead::{aut_inverts, minimize, orbit_equivalent, DEFAULT_BUDGET};
use wordchir::word::{parse, parse_infer};

fn main() -> Result<()> {
    let w = match std::env::args().nth(1) {
        Some(text) => parse_infer(&text)?.with_rank(2.max(parse_infer(&text)?.rank()))?,
        None => parse("x1 x2^2 x1^-1 x2^-1", 2)?,
    };

    let m = minimize(&w)?;
    println!(
        "{w}: minimal length {} via {} moves -> {}",
        m.minimal.len(),
        m.trace.len(),
        m.minimal
    );

    let r = aut_inverts(&w, DEFAULT_BUDGET)?;
    println!("inverted by an automorphism: {}", r.found);
    println!(
        "  nodes explored {}, peak frontier {}",
        r.stats.nodes_explored, r.stats.peak_frontier
    );
    if let Some(aut) = &r.automorphism {
        print!("{}", aut.forward().to_text());
        println!("  image {} (inverse is {})", aut.apply(&w)?, w.invert());
        for mv in &r.move_trace {
            println!("  move {mv}");
        }
    }

    let primitive = parse("x1 x2 x1 x2^2", 2)?;
    let x1 = parse("x1", 2)?;
    let r = orbit_equivalent(&primitive, &x1, DEFAULT_BUDGET)?;
    println!("\n{primitive} ~ x1: {}", r.found);
    if let Some(aut) = r.automorphism {
        print!("{}", aut.forward().to_text());
    }
    Ok(())
}
