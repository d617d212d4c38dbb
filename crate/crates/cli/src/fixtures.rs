//! The worked-example corpus: loading and checking.

use bsdh_core::bsdh;
use bsdh_core::{DynkinType, RootSystem, Word};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// Corpus shipped with the binary.
pub const EMBEDDED: &str = include_str!("../fixtures/worked_examples.toml");

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpectedFlags {
    pub globally_generated: Option<bool>,
    pub very_ample: Option<bool>,
    pub fano: Option<bool>,
    pub weak_fano_certified: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Fixture {
    pub name: String,
    #[serde(rename = "type")]
    pub dynkin_type: String,
    pub word: String,
    pub expected_m: Option<Vec<i64>>,
    #[serde(default)]
    pub expected_flags: ExpectedFlags,
    pub source: String,
}

#[derive(Debug, Deserialize)]
struct Corpus {
    fixture: Vec<Fixture>,
}

/// Outcome of one corpus row.
#[derive(Debug, Clone, Serialize)]
pub struct FixtureResult {
    pub name: String,
    pub dynkin_type: String,
    pub word: String,
    pub m: Vec<i64>,
    pub mismatches: Vec<String>,
}

impl FixtureResult {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Parses a corpus and checks the structural invariants of every row.
pub fn parse(text: &str) -> Result<Vec<Fixture>, CliError> {
    let corpus: Corpus =
        toml::from_str(text).map_err(|e| CliError::Usage(format!("fixture file: {e}")))?;
    for f in &corpus.fixture {
        let word: Word = f
            .word
            .parse()
            .map_err(|e| CliError::Usage(format!("fixture {}: {e}", f.name)))?;
        if let Some(m) = &f.expected_m {
            if m.len() != word.len() {
                return Err(CliError::Usage(format!(
                    "fixture {}: expected_m has {} entries for a word of length {}",
                    f.name,
                    m.len(),
                    word.len()
                )));
            }
        }
    }
    Ok(corpus.fixture)
}

/// Computes the m-vector and flags of one row and compares bit-exactly.
pub fn check(f: &Fixture) -> Result<FixtureResult, CliError> {
    let ty: DynkinType = f
        .dynkin_type
        .parse()
        .map_err(|e| CliError::Usage(format!("fixture {}: {e}", f.name)))?;
    let word: Word = f
        .word
        .parse()
        .map_err(|e| CliError::Usage(format!("fixture {}: {e}", f.name)))?;
    let rs = RootSystem::new(ty);
    let c = bsdh::classify(&rs, &word)?;
    let mut mismatches = Vec::new();
    if let Some(m) = &f.expected_m {
        if c.m.coeffs() != m.as_slice() {
            mismatches.push(format!("m = {:?}, expected {m:?}", c.m.coeffs()));
        }
    }
    let e = &f.expected_flags;
    for (name, want, got) in [
        (
            "globally generated",
            e.globally_generated,
            c.globally_generated,
        ),
        ("very ample", e.very_ample, c.very_ample),
        ("Fano", e.fano, c.fano),
        (
            "weak Fano (certified)",
            e.weak_fano_certified,
            c.weak_fano_certified,
        ),
    ] {
        if let Some(want) = want {
            if want != got {
                mismatches.push(format!("{name} = {got}, expected {want}"));
            }
        }
    }
    Ok(FixtureResult {
        name: f.name.clone(),
        dynkin_type: ty.to_string(),
        word: word.to_string(),
        m: c.m.into_coeffs(),
        mismatches,
    })
}
