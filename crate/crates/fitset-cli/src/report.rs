//! The verify report: a deterministic JSON document plus a text rendering.
//! All timing lives in one top-level object so that two runs over the same
//! corpus differ in nothing else.

use serde::Serialize;
use sha2::{Digest, Sha256};

use fitset_core::theorems::TheoremStatus;

use crate::corpus::CorpusEntry;
use crate::suites::{Skipped, SuiteResult};

pub const SCHEMA: &str = "fitset-report/1";

#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub hypotheses_unmet: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct EntryReport {
    pub group: String,
    pub file: String,
    pub order: usize,
    pub suites: Vec<SuiteResult>,
    pub set_errors: Vec<Skipped>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Timing {
    pub total_ms: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub tool_version: &'static str,
    pub corpus_digest: String,
    pub summary: Summary,
    pub entries: Vec<EntryReport>,
    pub timing: Timing,
}

/// Digest over the corpus contents, independent of load order.
pub fn corpus_digest(entries: &[CorpusEntry]) -> String {
    let mut named: Vec<(&str, &str)> = entries
        .iter()
        .map(|e| (e.file.as_str(), e.text.as_str()))
        .collect();
    named.sort();
    let mut hasher = Sha256::new();
    for (file, text) in named {
        hasher.update(file.as_bytes());
        hasher.update([0u8]);
        hasher.update(text.as_bytes());
        hasher.update([0u8]);
    }
    format!("{:x}", hasher.finalize())
}

impl Report {
    pub fn new(entries: Vec<EntryReport>, digest: String, total_ms: u128) -> Report {
        let mut summary = Summary::default();
        for entry in &entries {
            summary.skipped += entry.set_errors.len();
            for suite in &entry.suites {
                summary.skipped += suite.skipped.len();
                for item in &suite.items {
                    match item.report.status {
                        TheoremStatus::Pass => summary.pass += 1,
                        TheoremStatus::Fail => summary.fail += 1,
                        TheoremStatus::HypothesesUnmet => summary.hypotheses_unmet += 1,
                    }
                }
            }
        }
        Report {
            schema: SCHEMA,
            tool_version: env!("CARGO_PKG_VERSION"),
            corpus_digest: digest,
            summary,
            entries,
            timing: Timing { total_ms },
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let s = &self.summary;
        out.push_str(&format!(
            "corpus {} | pass {} fail {} hypotheses-unmet {} skipped {}\n",
            &self.corpus_digest[..self.corpus_digest.len().min(12)],
            s.pass,
            s.fail,
            s.hypotheses_unmet,
            s.skipped
        ));
        for entry in &self.entries {
            out.push_str(&format!(
                "{} ({}, order {})\n",
                entry.group, entry.file, entry.order
            ));
            for suite in &entry.suites {
                let mut pass = 0;
                let mut fails = Vec::new();
                let mut unmet = 0;
                for item in &suite.items {
                    match item.report.status {
                        TheoremStatus::Pass => pass += 1,
                        TheoremStatus::Fail => fails.push(item),
                        TheoremStatus::HypothesesUnmet => unmet += 1,
                    }
                }
                out.push_str(&format!(
                    "  {:<24} pass {pass:<4} unmet {unmet:<3} skipped {:<3}",
                    suite.suite,
                    suite.skipped.len()
                ));
                if fails.is_empty() {
                    out.push('\n');
                } else {
                    out.push_str(&format!(" FAIL {}\n", fails.len()));
                    for item in fails {
                        out.push_str(&format!(
                            "    FAIL {} [{}]\n",
                            item.subject, item.report.theorem_id
                        ));
                        for check in item
                            .report
                            .conclusions_checked
                            .iter()
                            .chain(item.report.hypotheses_checked.iter())
                            .filter(|c| !c.ok)
                        {
                            out.push_str(&format!(
                                "      {}: {}\n",
                                check.name,
                                check.witness.as_deref().unwrap_or("no witness")
                            ));
                        }
                    }
                }
            }
            for skip in &entry.set_errors {
                out.push_str(&format!("  skipped {}: {}\n", skip.subject, skip.reason));
            }
        }
        out
    }

    pub fn exit_code(&self) -> i32 {
        if self.summary.fail == 0 {
            0
        } else {
            1
        }
    }
}
