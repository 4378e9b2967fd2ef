//! Report types and their serializations.
//!
//! The JSON report is the primary artifact; the census CSV is a projection
//! of it. Serialization is fully deterministic: struct field order, sorted
//! index lists, and no timestamps (timings are recorded only on request).

use serde::Serialize;

use cp2kit_core::checkers::{ClassVerdict, Cp2Classification, IntersectionProfile};
use cp2kit_core::FamilyDescriptor;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationReport {
    pub schema_version: u32,
    pub tool_version: String,
    pub corpus_manifest_hash: String,
    pub per_group: Vec<GroupRecord>,
    pub summary: Summary,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GroupRecord {
    pub family_descriptor: FamilyDescriptor,
    pub order: usize,
    pub class_verdict: ClassVerdict,
    pub classification: Cp2Classification,
    pub intersection: IntersectionProfile,
    pub cp2_structure: Cp2StructureChecks,
    pub timing_ms: u64,
}

/// Structural facts asserted for CP2 groups that are not p-groups: trivial
/// center, a Fitting subgroup that is the p-core of a single prime, and a
/// p-group Frattini subgroup (when the lattice is computable).
#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Cp2StructureChecks {
    pub applies: bool,
    pub center_trivial: Option<bool>,
    pub fitting_single_prime: Option<bool>,
    pub fitting_prime: Option<u32>,
    pub frattini_p_group: Option<bool>,
}

impl Cp2StructureChecks {
    pub fn not_applicable() -> Self {
        Cp2StructureChecks {
            applies: false,
            center_trivial: None,
            fitting_single_prime: None,
            fitting_prime: None,
            frattini_p_group: None,
        }
    }
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Summary {
    pub total_groups: usize,
    pub cp2_count: usize,
    pub discrepancies: Vec<String>,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Census projection: one CSV row per group with a stable column order.
    pub fn to_census_csv(&self) -> String {
        let mut out = String::from("order,family,cp1,cp,cn,cp2,branch\n");
        for rec in &self.per_group {
            let v = &rec.class_verdict;
            out.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                rec.order,
                rec.family_descriptor.family.name(),
                v.cp1,
                v.cp,
                v.cn,
                v.cp2,
                rec.classification.branch.as_str()
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use cp2kit_core::checkers::{class_verdict, classify_cp2, cp1_cp2_intersection};
    use cp2kit_core::constructors::{generalized_quaternion, Family, FamilyDescriptor};

    use super::*;

    fn q8_record() -> GroupRecord {
        let g = generalized_quaternion(8).unwrap();
        GroupRecord {
            family_descriptor: FamilyDescriptor::new(Family::GeneralizedQuaternion, vec![8]),
            order: 8,
            class_verdict: class_verdict(&g),
            classification: classify_cp2(&g),
            intersection: cp1_cp2_intersection(&g),
            cp2_structure: Cp2StructureChecks::not_applicable(),
            timing_ms: 0,
        }
    }

    fn report() -> VerificationReport {
        VerificationReport {
            schema_version: SCHEMA_VERSION,
            tool_version: "0.0.0-test".into(),
            corpus_manifest_hash: "00".repeat(32),
            per_group: vec![q8_record()],
            summary: Summary { total_groups: 1, cp2_count: 1, discrepancies: Vec::new() },
        }
    }

    #[test]
    fn census_row_shape() {
        let csv = report().to_census_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("order,family,cp1,cp,cn,cp2,branch"));
        assert_eq!(lines.next(), Some("8,generalizedQuaternion,false,true,true,true,pGroupOmega"));
        assert_eq!(lines.next(), None);
    }

    #[test]
    fn json_shape_and_stability() {
        let a = report().to_json();
        let b = report().to_json();
        assert_eq!(a, b);
        assert!(a.ends_with('\n'));
        let value: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(value["schemaVersion"], 1);
        assert_eq!(value["perGroup"][0]["classification"]["branch"], "pGroupOmega");
        assert_eq!(value["perGroup"][0]["classification"]["omegaEvidence"][0]["closed"], true);
        assert_eq!(value["perGroup"][0]["timingMs"], 0);
    }
}
