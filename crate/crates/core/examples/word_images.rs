//! Images of word maps on finite groups and chirality witnesses.

use anyhow::Result;
use wordchir::group::{
    catalog, catalog_list, chirality_witness, image, is_inverse_closed, surjectivity_check,
    FiniteGroup, DEFAULT_EVAL_CAP,
};
use wordchir::word::parse;

fn show(g: &FiniteGroup, text: &str) -> Result<()> {
    let w = parse(text, 2)?;
    let set = image(g, &w, DEFAULT_EVAL_CAP)?;
    let labels: Vec<String> = set.members.iter().map(|&e| g.label(e)).collect();
    println!(
        "{:>4} | {:<20} | {:>3}/{:<3} | inverse closed {} | {{{}}}",
        g.name(),
        text,
        set.members.len(),
        g.order(),
        is_inverse_closed(&set, g),
        labels.join(", ")
    );
    Ok(())
}

fn main() -> Result<()> {
    for name in ["C3", "S3", "Q8", "A4"] {
        let g = catalog(name)?;
        for w in ["x1^2", "x1^3", "x1 x2 x1^-1 x2^-1", "x1^2 x2^3"] {
            show(&g, w)?;
        }
    }

    let g = catalog("C2xS3")?;
    println!(
        "\n{} has order {}, abelian: {}",
        g.name(),
        g.order(),
        g.is_abelian()
    );
    let w = parse("x1^2 x2^3 x1 x2", 2)?;
    println!(
        "surjective on {}: {}",
        g.name(),
        surjectivity_check(&w, &g, DEFAULT_EVAL_CAP)?
    );

    // Cayley tables round-trip through the text format.
    let text = catalog("C3")?.to_table_text();
    let parsed = FiniteGroup::parse_table_text("C3", &text)?;
    println!("\nC3 table:\n{text}parsed order {}", parsed.order());

    let sweep = chirality_witness(
        &parse("x1^2 x2^2", 2)?,
        &catalog_list("default")?,
        DEFAULT_EVAL_CAP,
    );
    println!(
        "witness for x1^2 x2^2: {:?} (checked {:?})",
        sweep.witness, sweep.checked
    );
    Ok(())
}
