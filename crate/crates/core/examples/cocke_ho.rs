//! The Cocke-Ho word [x^k (x^k)^(y^k) x^k, (y^k)^(x^k y^k) y^k] for small k
//! under both conjugation conventions.
//!
//! cargo run --release --example cocke_ho -- 1 2 3

use anyhow::Result;
use wordchir::classify::{cocke_ho_word, Conjugation};
use wordchir::whitehead::{aut_inverts, DEFAULT_BUDGET};

fn main() -> Result<()> {
    let mut ks: Vec<i64> = std::env::args()
        .skip(1)
        .map(|s| s.parse())
        .collect::<Result<_, _>>()?;
    if ks.is_empty() {
        ks = vec![1, 2, 3];
    }
    for conj in [Conjugation::Left, Conjugation::Right] {
        for &k in &ks {
            let w = cocke_ho_word(k, conj);
            let (core, _) = w.cyclic_reduce();
            let verdict = match aut_inverts(&w, DEFAULT_BUDGET) {
                Ok(r) => format!(
                    "aut-invertible {} ({} nodes)",
                    r.found, r.stats.nodes_explored
                ),
                Err(e) => format!("{e}"),
            };
            println!(
                "{conj:?} k={k}: length {}, cyclic core {}, exponents {:?}, {verdict}",
                w.len(),
                core.len(),
                w.exponent_vector().sums()
            );
        }
    }
    Ok(())
}
