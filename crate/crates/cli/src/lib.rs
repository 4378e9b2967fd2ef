//! Library side of the cp2kit command-line tool: manifest loading, the
//! corpus verification harness, report serialization, and single-group
//! analysis. The binary in `main.rs` is a thin wrapper over these modules.

pub mod analyze;
pub mod harness;
pub mod manifest;
pub mod report;

pub use harness::{build_corpus, verify_corpus, HarnessError, HarnessOptions};
pub use manifest::{Manifest, DEFAULT_MANIFEST_JSON};
pub use report::{GroupRecord, Summary, VerificationReport};
