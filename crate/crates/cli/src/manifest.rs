//! Corpus manifest handling: a JSON array of `{family, parameters}` records.

use std::path::Path;

use sha2::{Digest, Sha256};
use thiserror::Error;

use cp2kit_core::FamilyDescriptor;

/// The built-in corpus: roughly 150 groups of order at most 512, covering
/// every constructor family.
pub const DEFAULT_MANIFEST_JSON: &str = include_str!("../data/default_manifest.json");

#[derive(Debug, Error)]
pub enum ManifestError {
    #[error("failed to read manifest: {0}")]
    Io(#[from] std::io::Error),
    #[error("failed to parse manifest: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("manifest is empty")]
    Empty,
}

#[derive(Debug, Clone)]
pub struct Manifest {
    pub entries: Vec<FamilyDescriptor>,
    /// SHA-256 of the manifest source bytes, hex encoded.
    pub hash: String,
}

impl Manifest {
    pub fn parse(source: &str) -> Result<Manifest, ManifestError> {
        let entries: Vec<FamilyDescriptor> = serde_json::from_str(source)?;
        if entries.is_empty() {
            return Err(ManifestError::Empty);
        }
        let mut hasher = Sha256::new();
        hasher.update(source.as_bytes());
        let hash = hex_string(&hasher.finalize());
        Ok(Manifest { entries, hash })
    }

    pub fn from_path(path: &Path) -> Result<Manifest, ManifestError> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn default_corpus() -> Manifest {
        Self::parse(DEFAULT_MANIFEST_JSON).expect("the built-in manifest parses")
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn hex_string(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_manifest_parses() {
        let m = Manifest::default_corpus();
        assert!(m.len() >= 140, "expected a corpus of ~150 groups, got {}", m.len());
        assert_eq!(m.hash.len(), 64);
    }

    #[test]
    fn default_manifest_orders_fit_the_corpus_cap() {
        let m = Manifest::default_corpus();
        for d in &m.entries {
            let order = d.predicted_order().unwrap_or_else(|| panic!("{} has no order", d.label()));
            assert!((1..=512).contains(&order), "{} has order {order}", d.label());
        }
    }

    #[test]
    fn every_default_entry_builds() {
        let m = Manifest::default_corpus();
        for d in &m.entries {
            let g = d.build(512).unwrap_or_else(|e| panic!("{} failed: {e}", d.label()));
            assert_eq!(g.order() as u64, d.predicted_order().unwrap());
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!(Manifest::parse("[]").is_err());
        assert!(Manifest::parse("{\"family\": \"cyclic\"}").is_err());
        assert!(Manifest::parse("[{\"family\": \"noSuchFamily\", \"parameters\": []}]").is_err());
    }
}
