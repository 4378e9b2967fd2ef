//! Single-group analysis for `cp2kit analyze`.
//!
//! Input files are JSON, either a Cayley table
//! `{"order": n, "table": [[...]]}` or a permutation generating set
//! `{"degree": d, "generators": [[images]]}` (zero-based). The identity
//! need not be index 0 in a Cayley file; it is renumbered on load.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use cp2kit_core::checkers::{
    class_verdict, classify_cp2, cp1_cp2_intersection, largest_order_cut, ClassVerdict,
    Cp2Classification, IntersectionProfile, LargestOrderCut,
};
use cp2kit_core::group::{Group, GroupError, PermutationSpec};
use cp2kit_core::structure::{
    self, center, commutator_subgroup, conjugacy_classes, fitting, frattini_with_threshold,
};

#[derive(Debug, Error)]
pub enum AnalyzeError {
    #[error("failed to read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("failed to parse {path}: {source}")]
    Parse { path: String, source: serde_json::Error },
    #[error("{path} has neither a \"table\" nor a \"generators\" field")]
    UnknownFormat { path: String },
    #[error("not a valid group: {0}")]
    Group(#[from] GroupError),
}

#[derive(Deserialize)]
struct CayleyFile {
    order: usize,
    table: Vec<Vec<usize>>,
}

/// Loads a group from a Cayley or permutation JSON file.
pub fn load_group(path: &str, max_order: usize) -> Result<Group, AnalyzeError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| AnalyzeError::Io { path: path.into(), source })?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .map_err(|source| AnalyzeError::Parse { path: path.into(), source })?;
    if value.get("table").is_some() {
        let file: CayleyFile = serde_json::from_value(value)
            .map_err(|source| AnalyzeError::Parse { path: path.into(), source })?;
        if file.table.len() != file.order {
            return Err(GroupError::NotAGroup(format!(
                "declared order {} does not match the table size {}",
                file.order,
                file.table.len()
            ))
            .into());
        }
        Ok(Group::from_cayley_table(&file.table)?)
    } else if value.get("generators").is_some() {
        let spec: PermutationSpec = serde_json::from_value(value)
            .map_err(|source| AnalyzeError::Parse { path: path.into(), source })?;
        Ok(Group::permutation_closure(&spec, max_order)?.group)
    } else {
        Err(AnalyzeError::UnknownFormat { path: path.into() })
    }
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StructureSummary {
    pub center_order: usize,
    pub fitting_order: usize,
    pub frattini_order: Option<usize>,
    pub commutator_order: usize,
    pub exponent: u32,
    pub nilpotent: bool,
    pub solvable: bool,
    pub conjugacy_class_count: usize,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AnalyzeRecord {
    pub order: usize,
    pub prime_factors: Vec<u32>,
    pub order_spectrum: Vec<u32>,
    pub class_verdict: ClassVerdict,
    pub classification: Cp2Classification,
    pub intersection: IntersectionProfile,
    pub structure: StructureSummary,
    pub largest_order_cut: Option<LargestOrderCut>,
}

pub fn analyze_group(group: &Group, lattice_threshold: usize) -> AnalyzeRecord {
    let verdict = class_verdict(group);
    let cut = if verdict.cp2 && group.order() > 1 {
        largest_order_cut(group).ok()
    } else {
        None
    };
    AnalyzeRecord {
        order: group.order(),
        prime_factors: group.prime_factors().to_vec(),
        order_spectrum: group.order_spectrum().into_iter().collect(),
        classification: classify_cp2(group),
        intersection: cp1_cp2_intersection(group),
        structure: StructureSummary {
            center_order: center(group).len(),
            fitting_order: fitting(group).len(),
            frattini_order: frattini_with_threshold(group, lattice_threshold)
                .ok()
                .map(|s| s.len()),
            commutator_order: commutator_subgroup(group).len(),
            exponent: group.exponent(),
            nilpotent: structure::is_nilpotent(group),
            solvable: structure::is_solvable(group),
            conjugacy_class_count: conjugacy_classes(group).len(),
        },
        largest_order_cut: cut,
        class_verdict: verdict,
    }
}

impl AnalyzeRecord {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("record serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let v = &self.class_verdict;
        let mut out = String::new();
        out.push_str(&format!("order: {}\n", self.order));
        out.push_str(&format!(
            "prime factors: {}\n",
            self.prime_factors.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")
        ));
        out.push_str(&format!(
            "order spectrum: {{{}}}\n",
            self.order_spectrum.iter().map(|o| o.to_string()).collect::<Vec<_>>().join(", ")
        ));
        out.push_str(&format!(
            "classes: CP1={} CP={} CN={} CP2={}\n",
            v.cp1, v.cp, v.cn, v.cp2
        ));
        if let Some(w) = &v.witness {
            out.push_str(&format!(
                "violation: o(x*y) = {} > {} = max(o(x), o(y)) at x={}, y={}\n",
                w.oxy, w.bound, w.x, w.y
            ));
        }
        out.push_str(&format!("classification: {}", self.classification.branch.as_str()));
        if let Some(p) = self.classification.prime {
            out.push_str(&format!(" (p={p})"));
        }
        if let Some(d) = &self.classification.decomposition {
            out.push_str(&format!(
                " (p={}, q={}, alpha={}, beta={}, kernel={}, complement cyclic={})",
                d.p,
                d.q,
                d.alpha,
                d.beta,
                d.kernel.len(),
                d.complement_cyclic
            ));
        }
        out.push('\n');
        if self.intersection.in_intersection {
            out.push_str("in the CP1 and CP2 intersection\n");
        }
        let s = &self.structure;
        out.push_str(&format!(
            "structure: |Z|={} |F|={} |Phi|={} |G'|={} exponent={} nilpotent={} solvable={} classes={}\n",
            s.center_order,
            s.fitting_order,
            s.frattini_order.map_or("n/a".to_string(), |o| o.to_string()),
            s.commutator_order,
            s.exponent,
            s.nilpotent,
            s.solvable,
            s.conjugacy_class_count
        ));
        if let Some(cut) = &self.largest_order_cut {
            out.push_str(&format!(
                "largest-order cut: size={} normal={} quotient exponent={}\n",
                cut.cut_set.len(),
                cut.is_normal,
                cut.quotient_exponent.map_or("n/a".to_string(), |e| e.to_string())
            ));
        }
        out
    }
}
