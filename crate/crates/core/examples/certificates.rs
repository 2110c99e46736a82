//! Inversion certificates: build, verify, transform, serialize.

use anyhow::Result;
use wordchir::morphism::{named_family, Automorphism, Endomorphism, Family, InversionCertificate};
use wordchir::word::parse;

fn main() -> Result<()> {
    let w = parse("x1 x2 x1^-1 x2^-1", 2)?;
    for family in [Family::InvertAll, Family::SwapInvert, Family::Swap] {
        let aut = named_family(family, &[], 2)?;
        let cert = InversionCertificate::automorphism(w.clone(), &aut);
        println!(
            "{family}: sends {w} to {}; valid = {}",
            aut.apply(&w)?,
            cert.is_valid()
        );
    }

    // A plain endomorphism certificate, checked from its text form.
    let endo = Endomorphism::parse_text("x1 -> x2\nx2 -> x1\n")?;
    let cert = InversionCertificate::endomorphism(w.clone(), endo);
    println!("\nswap as text:\n{}", cert.endo.to_text());
    println!("verify: {:?}", cert.verify());

    // Powers, conjugation by an automorphism, and extension to rank 3.
    let swap = named_family(Family::Swap, &[], 2)?;
    let cert = InversionCertificate::automorphism(w.clone(), &swap);
    let cubed = cert.power(3)?;
    println!("\npower 3: {} -> {:?}", cubed.word, cubed.verify());

    let sigma = Automorphism::new(
        Endomorphism::from_strs(&["x1 x2", "x2"])?,
        Endomorphism::from_strs(&["x1 x2^-1", "x2"])?,
    )?;
    let moved = cert.conjugate(&sigma)?;
    println!(
        "conjugated: word {} via {} -> {:?}",
        moved.word,
        moved.endo,
        moved.verify()
    );

    let lifted = cert.extend(3)?;
    println!(
        "rank 3: {} via {} -> {:?}",
        lifted.word,
        lifted.endo,
        lifted.verify()
    );

    let broken = InversionCertificate::endomorphism(w, Endomorphism::identity(2));
    println!("\nidentity map: {:?}", broken.verify());
    Ok(())
}
