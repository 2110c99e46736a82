//! Full classification pipeline with a JSON report that re-verifies.
//!
//! cargo run --release --example classify_words -- "x1^2 x2^2 x1 x2^-1" "x1 x2 x3 x1^-1"

use anyhow::Result;
use wordchir::classify::{classify, ClassifyOptions};
use wordchir::report::{verify_report, ItemReport, Report};
use wordchir::word::parse_infer;

fn main() -> Result<()> {
    let mut inputs: Vec<String> = std::env::args().skip(1).collect();
    if inputs.is_empty() {
        inputs = [
            "x1 x2 x1^-1 x2^-1",
            "x1^2 x2^3",
            "x1^2 x2^2 x1 x2^-1",
            "x1 x2 x1 x2^-1",
            "x1^2 x2^2 x1^-2 x2^-2",
            "x1 x2 x3 x1^-1 x2^-1 x3^-1",
        ]
        .map(String::from)
        .to_vec();
    }
    let opts = ClassifyOptions::default();
    let mut report = Report::new("classify");
    for (i, text) in inputs.iter().enumerate() {
        let w = parse_infer(text)?;
        let v = classify(&w, &opts)?;
        println!("{w}: {:?}", v.status);
        for r in &v.reasons {
            println!("  {:?} -> {:?}", r.rule, r.outcome);
        }
        for c in &v.certificates {
            println!("  certificate ({:?}): {}", c.kind, c.endo);
        }
        report.items.push(ItemReport::from_verdict(i, text, &v));
    }
    let json = report.to_json();
    let s = verify_report(&json)?;
    println!(
        "\nreport: {} bytes, {} certificates re-verified",
        json.len(),
        s.certificates
    );
    Ok(())
}
