//! JSON reports.
//!
//! Reports carry full certificates in the endomorphism text format so they
//! can be audited without re-running any search. [`verify_report`] re-checks
//! every certificate and every orbit automorphism using only the word and
//! morphism layers.
//!
//! Schema (all words in the indexed syntax, identity as `1`):
//!
//! ```text
//! {
//!   "tool": "wordchir", "version": "...", "command": "classify",
//!   "items": [{
//!     "index": 0, "input": "...", "word": "...", "rank": 2,
//!     "status": "Achiral" | "Chiral" | "Undecided" | null,
//!     "error": null | "...",
//!     "reasons": [{"rule": "...", "outcome": "...", "params": {...}}],
//!     "certificates": [{"kind": "AutomorphismWitness", "word": "...",
//!                       "rank": 2, "endomorphism": "x1 -> ...\n",
//!                       "inverse": "x1 -> ...\n" | null}],
//!     "witness": null | {"group": "...", "element": 3, "label": "..."},
//!     "aut_invertible": true | false | null,
//!     "in_d": true | false | null
//!   }],
//!   "census": null | {...}, "orbits": [...], "images": [...], "witnesses": [...]
//! }
//! ```

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classify::{CensusReport, ClassifyError, Status, Verdict};
use crate::group::Witness;
use crate::morphism::{CertificateKind, Endomorphism, InversionCertificate};
use crate::whitehead::{OrbitSearchResult, SearchStats};
use crate::word::{parse, Word};

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("malformed report: {0}")]
    Json(#[from] serde_json::Error),
    #[error("item {index}: {msg}")]
    Item { index: usize, msg: String },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CertificateReport {
    pub kind: CertificateKind,
    pub word: String,
    pub rank: usize,
    pub endomorphism: String,
    pub inverse: Option<String>,
}

impl From<&InversionCertificate> for CertificateReport {
    fn from(c: &InversionCertificate) -> Self {
        CertificateReport {
            kind: c.kind,
            word: c.word.to_string(),
            rank: c.word.rank(),
            endomorphism: c.endo.to_text(),
            inverse: c.aut_proof.as_ref().map(Endomorphism::to_text),
        }
    }
}

impl CertificateReport {
    /// Rebuilds the certificate from its text fields.
    pub fn to_certificate(&self) -> Result<InversionCertificate, String> {
        let word = parse(&self.word, self.rank).map_err(|e| e.to_string())?;
        let endo = Endomorphism::parse_text(&self.endomorphism).map_err(|e| e.to_string())?;
        let aut_proof = self
            .inverse
            .as_deref()
            .map(Endomorphism::parse_text)
            .transpose()
            .map_err(|e| e.to_string())?;
        Ok(InversionCertificate {
            word,
            endo,
            kind: self.kind,
            aut_proof,
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ItemReport {
    pub index: usize,
    pub input: String,
    pub word: String,
    pub rank: usize,
    pub length: usize,
    pub status: Option<Status>,
    pub error: Option<String>,
    #[serde(default)]
    pub reasons: Vec<serde_json::Value>,
    #[serde(default)]
    pub certificates: Vec<CertificateReport>,
    pub witness: Option<Witness>,
    pub aut_invertible: Option<bool>,
    pub in_d: Option<bool>,
}

impl ItemReport {
    pub fn from_verdict(index: usize, input: &str, v: &Verdict) -> Self {
        ItemReport {
            index,
            input: input.to_string(),
            word: v.word.to_string(),
            rank: v.word.rank(),
            length: v.word.len(),
            status: Some(v.status),
            error: None,
            reasons: v
                .reasons
                .iter()
                .map(|r| serde_json::to_value(r).expect("firings serialize"))
                .collect(),
            certificates: v.certificates.iter().map(CertificateReport::from).collect(),
            witness: v.witness.clone(),
            aut_invertible: v.aut_invertible,
            in_d: v.in_d,
        }
    }

    pub fn from_error(index: usize, input: &str, word: Option<&Word>, err: &ClassifyError) -> Self {
        ItemReport {
            index,
            input: input.to_string(),
            word: word.map(Word::to_string).unwrap_or_default(),
            rank: word.map(Word::rank).unwrap_or(0),
            length: word.map(Word::len).unwrap_or(0),
            status: None,
            error: Some(err.to_string()),
            reasons: Vec::new(),
            certificates: Vec::new(),
            witness: None,
            aut_invertible: None,
            in_d: None,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CensusSummary {
    pub length: usize,
    pub total: usize,
    pub expected_total: usize,
    pub aut_invertible: usize,
    pub not_aut_invertible: Vec<String>,
    pub indeterminate: Vec<String>,
    pub histogram: BTreeMap<String, usize>,
}

impl From<&CensusReport> for CensusSummary {
    fn from(c: &CensusReport) -> Self {
        CensusSummary {
            length: c.length,
            total: c.total,
            expected_total: c.expected_total,
            aut_invertible: c.aut_invertible,
            not_aut_invertible: c.not_aut_invertible.iter().map(Word::to_string).collect(),
            indeterminate: c.indeterminate.iter().map(Word::to_string).collect(),
            histogram: c
                .histogram
                .iter()
                .map(|(s, n)| (format!("{s:?}"), *n))
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OrbitReport {
    pub source: String,
    pub target: String,
    pub rank: usize,
    /// `None` when the budget ran out.
    pub found: Option<bool>,
    pub budget: usize,
    pub nodes_explored: usize,
    pub peak_frontier: usize,
    pub minimal_length: Option<usize>,
    pub automorphism: Option<String>,
    pub inverse: Option<String>,
    #[serde(default)]
    pub move_trace: Vec<String>,
    pub conjugator: Option<String>,
}

impl OrbitReport {
    pub fn from_result(u: &Word, v: &Word, budget: usize, r: &OrbitSearchResult) -> Self {
        OrbitReport {
            source: u.to_string(),
            target: v.to_string(),
            rank: u.rank(),
            found: Some(r.found),
            budget,
            nodes_explored: r.stats.nodes_explored,
            peak_frontier: r.stats.peak_frontier,
            minimal_length: Some(r.stats.minimal_length),
            automorphism: r.automorphism.as_ref().map(|a| a.forward().to_text()),
            inverse: r.automorphism.as_ref().map(|a| a.inverse_map().to_text()),
            move_trace: r.move_trace.iter().map(|m| m.to_string()).collect(),
            conjugator: r.conjugator.as_ref().map(Word::to_string),
        }
    }

    pub fn indeterminate(u: &Word, v: &Word, budget: usize, stats: SearchStats) -> Self {
        OrbitReport {
            source: u.to_string(),
            target: v.to_string(),
            rank: u.rank(),
            found: None,
            budget,
            nodes_explored: stats.nodes_explored,
            peak_frontier: stats.peak_frontier,
            minimal_length: None,
            automorphism: None,
            inverse: None,
            move_trace: Vec::new(),
            conjugator: None,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ImageReport {
    pub group: String,
    pub order: usize,
    pub word: String,
    pub members: Vec<usize>,
    pub labels: Vec<String>,
    pub inverse_closed: bool,
    pub surjective: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WitnessReport {
    pub word: String,
    pub witness: Option<Witness>,
    pub checked: Vec<String>,
    pub skipped: Vec<(String, String)>,
}

/// Top-level report document.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub command: String,
    #[serde(default)]
    pub items: Vec<ItemReport>,
    #[serde(default)]
    pub census: Option<CensusSummary>,
    #[serde(default)]
    pub orbits: Vec<OrbitReport>,
    #[serde(default)]
    pub images: Vec<ImageReport>,
    #[serde(default)]
    pub witnesses: Vec<WitnessReport>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            tool: "wordchir".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            command: command.into(),
            items: Vec::new(),
            census: None,
            orbits: Vec::new(),
            images: Vec::new(),
            witnesses: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Counts from [`verify_report`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct VerifySummary {
    pub certificates: usize,
    pub orbit_automorphisms: usize,
}

/// Re-verifies every certificate and orbit automorphism in a report. Also
/// checks that achiral items carry a certificate and that each printed word
/// re-parses to itself.
pub fn verify_report(json: &str) -> Result<VerifySummary, ReportError> {
    let report: Report = serde_json::from_str(json)?;
    let mut summary = VerifySummary::default();
    for item in &report.items {
        let fail = |msg: String| ReportError::Item {
            index: item.index,
            msg,
        };
        if item.error.is_some() {
            continue;
        }
        let word = parse(&item.word, item.rank).map_err(|e| fail(e.to_string()))?;
        if word.to_string() != item.word {
            return Err(fail(format!("word `{}` does not round-trip", item.word)));
        }
        if item.status == Some(Status::Achiral) && item.certificates.is_empty() {
            return Err(fail("achiral item without certificate".into()));
        }
        for c in &item.certificates {
            let cert = c.to_certificate().map_err(fail)?;
            if cert.word != word {
                return Err(fail(format!("certificate is for `{}`", c.word)));
            }
            cert.verify().map_err(|e| fail(e.to_string()))?;
            summary.certificates += 1;
        }
    }
    for (i, o) in report.orbits.iter().enumerate() {
        let fail = |msg: String| ReportError::Item { index: i, msg };
        let (Some(fwd), Some(inv)) = (&o.automorphism, &o.inverse) else {
            if o.found == Some(true) {
                return Err(fail("found without automorphism".into()));
            }
            continue;
        };
        let u = parse(&o.source, o.rank).map_err(|e| fail(e.to_string()))?;
        let v = parse(&o.target, o.rank).map_err(|e| fail(e.to_string()))?;
        let fwd = Endomorphism::parse_text(fwd).map_err(|e| fail(e.to_string()))?;
        let inv = Endomorphism::parse_text(inv).map_err(|e| fail(e.to_string()))?;
        fwd.check_two_sided_inverse(&inv)
            .map_err(|e| fail(e.to_string()))?;
        if fwd.apply(&u).map_err(|e| fail(e.to_string()))? != v {
            return Err(fail("automorphism does not map source to target".into()));
        }
        summary.orbit_automorphisms += 1;
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{classify, ClassifyOptions};
    use crate::group::catalog_list;

    #[test]
    fn report_round_trip_and_verify() {
        let opts = ClassifyOptions {
            catalog: catalog_list("S3").unwrap(),
            ..ClassifyOptions::default()
        };
        let mut report = Report::new("classify");
        for (i, s) in ["x1 x2 x1^-1 x2^-1", "x1^2 x2^3", "1"].iter().enumerate() {
            let w = parse(s, 2).unwrap();
            let v = classify(&w, &opts).unwrap();
            report.items.push(ItemReport::from_verdict(i, s, &v));
        }
        let json = report.to_json();
        let summary = verify_report(&json).unwrap();
        assert!(summary.certificates >= 3);
    }

    #[test]
    fn tampered_certificate_is_rejected() {
        let opts = ClassifyOptions {
            catalog: catalog_list("S3").unwrap(),
            ..ClassifyOptions::default()
        };
        let w = parse("x1 x2 x1^-1 x2^-1", 2).unwrap();
        let v = classify(&w, &opts).unwrap();
        let mut report = Report::new("classify");
        report.items.push(ItemReport::from_verdict(0, "c", &v));
        report.items[0].certificates[0].endomorphism = "x1 -> x1\nx2 -> x2\n".into();
        assert!(matches!(
            verify_report(&report.to_json()),
            Err(ReportError::Item { index: 0, .. })
        ));
    }
}
