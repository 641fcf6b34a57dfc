//! Corpus loading. A corpus is a directory of JSON documents, each naming
//! one group, the Fitting-set specs to build on it, and the suites to run.

use std::fs;
use std::path::Path;
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use serde::Deserialize;
use serde_json::Value;

use fitset_core::group::Group;
use fitset_core::primes::PrimeSet;

/// One suite to run on an entry, with its parameters.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteDecl {
    pub name: String,
    /// Primes for pi-parameterized suites.
    #[serde(default)]
    pub pi: Option<Vec<u64>>,
    /// Case selector; `theorem-a` with `case: 2` means `theorem-a2`.
    #[serde(default)]
    pub case: Option<u8>,
    /// Length bound for the pi-length corollary.
    #[serde(default)]
    pub k: Option<u32>,
}

impl SuiteDecl {
    /// Canonical suite name with the case selector folded in.
    pub fn canonical_name(&self) -> String {
        match (self.name.as_str(), self.case) {
            ("theorem-a", Some(c)) => format!("theorem-a{c}"),
            _ => self.name.clone(),
        }
    }

    pub fn pi_set(&self) -> Option<PrimeSet> {
        self.pi.as_ref().map(|v| PrimeSet::new(v.iter().copied()))
    }
}

/// The JSON shape of one corpus file.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusDoc {
    pub group: Value,
    #[serde(default)]
    pub fitting_sets: Vec<Value>,
    pub suites: Vec<SuiteDecl>,
}

/// A parsed corpus entry: the document plus its materialized group.
pub struct CorpusEntry {
    /// File name (without directory) used in reports and digests.
    pub file: String,
    /// Raw document text, digested into the report.
    pub text: String,
    pub doc: CorpusDoc,
    pub group: Arc<Group>,
}

pub const KNOWN_SUITES: &[&str] = &[
    "lattice-invariants",
    "fitting-axioms",
    "products",
    "semilocal",
    "theorem-a1",
    "theorem-a2",
    "theorem-a3",
    "theorem-b",
    "prop-5-6",
    "corollaries",
    "counterexample-search",
];

/// The corpus bundled into the binary, keyed by file name.
pub const DEFAULT_CORPUS: &[(&str, &str)] = &[
    ("01-s3.json", include_str!("../corpus/01-s3.json")),
    ("02-c6.json", include_str!("../corpus/02-c6.json")),
    ("03-d8.json", include_str!("../corpus/03-d8.json")),
    ("04-q8.json", include_str!("../corpus/04-q8.json")),
    ("05-a4.json", include_str!("../corpus/05-a4.json")),
    ("06-s4.json", include_str!("../corpus/06-s4.json")),
    ("07-sl23.json", include_str!("../corpus/07-sl23.json")),
    ("08-s3xs3.json", include_str!("../corpus/08-s3xs3.json")),
    ("09-a5.json", include_str!("../corpus/09-a5.json")),
];

fn parse_entry(file: &str, text: String, cap: usize) -> Result<CorpusEntry> {
    let doc: CorpusDoc = serde_json::from_str(&text)
        .map_err(|e| anyhow!("{file}:{}:{}: {e}", e.line(), e.column()))?;
    for s in &doc.suites {
        let canonical = s.canonical_name();
        if !KNOWN_SUITES.contains(&canonical.as_str()) {
            bail!("{file}: unknown suite \"{canonical}\"");
        }
    }
    let group = Group::parse(&doc.group.to_string(), cap)
        .with_context(|| format!("{file}: group document"))?;
    Ok(CorpusEntry {
        file: file.to_string(),
        text,
        doc,
        group,
    })
}

/// Load every `*.json` in the directory, sorted by file name.
pub fn load_corpus(dir: &Path, cap: usize) -> Result<Vec<CorpusEntry>> {
    let mut files: Vec<_> = fs::read_dir(dir)
        .with_context(|| format!("reading corpus directory {}", dir.display()))?
        .collect::<std::io::Result<Vec<_>>>()?
        .into_iter()
        .map(|e| e.path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    let mut out = Vec::new();
    for path in files {
        let name = path
            .file_name()
            .and_then(|n| n.to_str())
            .ok_or_else(|| anyhow!("non-UTF-8 file name in corpus"))?
            .to_string();
        let text = fs::read_to_string(&path)
            .with_context(|| format!("reading {}", path.display()))?;
        out.push(parse_entry(&name, text, cap)?);
    }
    Ok(out)
}

/// The bundled default corpus.
pub fn load_default_corpus(cap: usize) -> Result<Vec<CorpusEntry>> {
    DEFAULT_CORPUS
        .iter()
        .map(|(name, text)| parse_entry(name, text.to_string(), cap))
        .collect()
}
