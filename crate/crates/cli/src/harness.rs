//! The corpus verification harness.
//!
//! For every manifest entry the harness rebuilds the group, re-validates the
//! group axioms, evaluates all class predicates by their independent routes,
//! and checks every cross-cutting property the classes imply. Any failed
//! check lands in the discrepancy list with a tag; an empty list is the
//! success criterion (exit code 0).

use std::time::Instant;

use rayon::prelude::*;
use thiserror::Error;

use cp2kit_core::arith::prime_power;
use cp2kit_core::checkers::{
    self, class_verdict, classify_cp2, cp1_cp2_intersection, cp2_by_order_layers, largest_order_cut,
    order_map_property, Cp2Branch,
};
use cp2kit_core::constructors::Family;
use cp2kit_core::group::Group;
use cp2kit_core::structure::{
    self, center, fitting, frattini_with_threshold, p_core, subgroup_lattice_with_threshold,
};
use cp2kit_core::{FamilyDescriptor, GroupError};

use crate::manifest::Manifest;
use crate::report::{Cp2StructureChecks, GroupRecord, Summary, VerificationReport, SCHEMA_VERSION};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("failed to build {label}: {source}")]
    Construction { label: String, source: GroupError },
    #[error("failed to initialize worker pool: {0}")]
    Pool(String),
}

#[derive(Debug, Clone)]
pub struct HarnessOptions {
    /// Orders above this are rejected at construction time.
    pub max_order: usize,
    /// Orders above this skip lattice-based checks (Frattini, subgroup
    /// closure).
    pub lattice_threshold: usize,
    /// Worker count; groups are distributed whole and results merged in
    /// manifest order, so any value yields identical reports.
    pub jobs: usize,
    /// Record wall-clock timings per group. Off by default so reports are
    /// byte-identical across runs.
    pub record_timings: bool,
}

impl Default for HarnessOptions {
    fn default() -> Self {
        HarnessOptions {
            max_order: 512,
            lattice_threshold: structure::DEFAULT_LATTICE_THRESHOLD,
            jobs: 1,
            record_timings: false,
        }
    }
}

/// Runs the whole suite over a manifest and assembles the report.
pub fn verify_corpus(
    manifest: &Manifest,
    options: &HarnessOptions,
) -> Result<VerificationReport, HarnessError> {
    let run = |entries: &[FamilyDescriptor]| -> Result<Vec<(GroupRecord, Vec<String>)>, HarnessError> {
        entries
            .par_iter()
            .map(|d| analyze_corpus_entry(d, options))
            .collect::<Result<Vec<_>, _>>()
    };

    let results = if options.jobs <= 1 {
        // run on the current thread; rayon's global pool is bypassed
        manifest
            .entries
            .iter()
            .map(|d| analyze_corpus_entry(d, options))
            .collect::<Result<Vec<_>, _>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(options.jobs)
            .build()
            .map_err(|e| HarnessError::Pool(e.to_string()))?;
        pool.install(|| run(&manifest.entries))?
    };

    let mut per_group = Vec::with_capacity(results.len());
    let mut discrepancies = Vec::new();
    for (record, mut issues) in results {
        discrepancies.append(&mut issues);
        per_group.push(record);
    }
    let cp2_count = per_group.iter().filter(|r| r.class_verdict.cp2).count();
    Ok(VerificationReport {
        schema_version: SCHEMA_VERSION,
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        corpus_manifest_hash: manifest.hash.clone(),
        per_group,
        summary: Summary { total_groups: manifest.len(), cp2_count, discrepancies },
    })
}

fn analyze_corpus_entry(
    descriptor: &FamilyDescriptor,
    options: &HarnessOptions,
) -> Result<(GroupRecord, Vec<String>), HarnessError> {
    let started = Instant::now();
    let group = descriptor
        .build(options.max_order)
        .map_err(|source| HarnessError::Construction { label: descriptor.label(), source })?;
    let label = descriptor.label();
    let mut issues = Vec::new();
    let order = group.order();
    let mut report_issue = |tag: &str, detail: String| {
        issues.push(format!("{tag}: {label} order={order}: {detail}"));
    };

    // group axioms, re-established from scratch
    if let Some(problem) = axiom_violation(&group) {
        report_issue("AXIOMS", problem);
    }
    // order map sanity: o(a) = o(a^-1), conjugation invariance, Lagrange
    for a in 0..order {
        if group.element_order(a) != group.element_order(group.inv(a)) {
            report_issue("ORDER-SYMMETRY", format!("o({a}) != o(inverse)"));
            break;
        }
        if order as u64 % group.element_order(a) as u64 != 0 {
            report_issue("LAGRANGE", format!("o({a}) does not divide the group order"));
            break;
        }
    }
    'conj: for a in 0..order {
        for c in 0..order {
            if group.element_order(group.conjugate(a, c)) != group.element_order(a) {
                report_issue("CONJUGATION", format!("order not constant on the class of {a}"));
                break 'conj;
            }
        }
    }

    let verdict = class_verdict(&group);
    let classification = classify_cp2(&group);
    let intersection = cp1_cp2_intersection(&group);

    // witness validity by recomputation
    if let Some(w) = &verdict.witness {
        let oxy = group.element_order(group.mul(w.x, w.y));
        let bound = group.element_order(w.x).max(group.element_order(w.y));
        if oxy != w.oxy || bound != w.bound || oxy <= bound {
            report_issue("WITNESS", format!("witness ({}, {}) does not recompute", w.x, w.y));
        }
    }
    if verdict.cp2 != verdict.witness.is_none() {
        report_issue("WITNESS", "verdict and witness presence disagree".into());
    }

    // the two independent CP2 routes
    if verdict.cp2 != cp2_by_order_layers(&group) {
        report_issue(
            "THEOREM-DISCREPANCY",
            format!("pairwise oracle says {}, order-layer route disagrees", verdict.cp2),
        );
    }
    // oracle vs structural classifier
    if verdict.cp2 != classification.admits() {
        report_issue(
            "THEOREM-DISCREPANCY",
            format!(
                "pairwise oracle says {}, classifier branch is {}",
                verdict.cp2,
                classification.branch.as_str()
            ),
        );
    }

    // class chain
    if verdict.cp2 && !verdict.cp {
        report_issue("CLASS-CHAIN", "cp2 holds but cp fails".into());
    }
    if verdict.cp1 && !verdict.cp {
        report_issue("CLASS-CHAIN", "cp1 holds but cp fails".into());
    }
    if verdict.cp && !verdict.cn {
        report_issue("CLASS-CHAIN", "cp holds but cn fails".into());
    }

    // every CP2 group is solvable
    if verdict.cp2 && !structure::is_solvable(&group) {
        report_issue("SOLVABILITY", "cp2 group is not solvable".into());
    }

    // the exact order map identity on CP2 groups
    if verdict.cp2 && !order_map_property(&group).unwrap_or(false) {
        report_issue("ORDER-MAP", "o(xy) != max(o(x), o(y)) for some pair with o(x) != o(y)".into());
    }

    // powerful p-groups for odd p must satisfy the inequality
    if let Some(p) = group.single_prime() {
        if p != 2 {
            if let Ok(true) = structure::is_powerful(&group, p as u64) {
                if !verdict.cp2 {
                    report_issue("POWERFUL", format!("powerful {p}-group is not cp2"));
                }
            }
        }
    }

    // Frobenius constructions with p < q must land in the Frobenius branch
    if descriptor.family == Family::FrobeniusLinear {
        let p = descriptor.parameters[0];
        let q = prime_power(descriptor.parameters[2]).map(|(q, _)| q).unwrap_or(0);
        if p < q && classification.branch != Cp2Branch::FrobeniusPQ {
            report_issue(
                "FROBENIUS-BRANCH",
                format!("kernel prime {p} < complement prime {q} but branch is {}",
                    classification.branch.as_str()),
            );
        }
    }

    // branch invariants of the classification itself
    if let Some(d) = &classification.decomposition {
        if classification.branch == Cp2Branch::FrobeniusPQ {
            if d.p >= d.q || !d.complement_cyclic {
                report_issue("FROBENIUS-BRANCH", "frobenius branch violates p < q or cyclicity".into());
            }
            if d.kernel.len() * d.complement.len() != order {
                report_issue("FROBENIUS-BRANCH", "kernel and complement orders do not multiply up".into());
            }
            if d.kernel != fitting(&group) {
                report_issue("FROBENIUS-BRANCH", "kernel differs from the Fitting subgroup".into());
            }
        }
    }

    // structural facts for CP2 groups that are not p-groups
    let cp2_structure = if verdict.cp2 && !group.is_p_group() {
        let center_set = center(&group);
        let center_trivial = center_set.len() == 1;
        if !center_trivial {
            report_issue("CP2-STRUCTURE", format!("center has order {}", center_set.len()));
        }

        let fit = fitting(&group);
        let nontrivial_cores: Vec<u32> = group
            .prime_factors()
            .iter()
            .copied()
            .filter(|&p| p_core(&group, p as u64).len() > 1)
            .collect();
        let fitting_prime = match nontrivial_cores.as_slice() {
            [p] => Some(*p),
            _ => None,
        };
        let fitting_single_prime =
            fitting_prime.is_some_and(|p| p_core(&group, p as u64) == fit);
        if !fitting_single_prime {
            report_issue("CP2-STRUCTURE", "Fitting subgroup is not a single p-core".into());
        }

        let frattini_p_group = if order <= options.lattice_threshold {
            let phi = frattini_with_threshold(&group, options.lattice_threshold)
                .expect("order within threshold");
            let is_p = phi.len() == 1 || prime_power(phi.len() as u64).is_some();
            if !is_p {
                report_issue("CP2-STRUCTURE", format!("Frattini subgroup has order {}", phi.len()));
            }
            Some(is_p)
        } else {
            None
        };
        Cp2StructureChecks {
            applies: true,
            center_trivial: Some(center_trivial),
            fitting_single_prime: Some(fitting_single_prime),
            fitting_prime,
            frattini_p_group,
        }
    } else {
        Cp2StructureChecks::not_applicable()
    };

    // intersection record consistency
    if intersection.in_intersection {
        if intersection.branch == Some(checkers::IntersectionBranch::FrobeniusPQ1) {
            if intersection.commutator_equals_fitting != Some(true) {
                report_issue("INTERSECTION", "derived subgroup differs from the Fitting subgroup".into());
            }
            if intersection.partition_valid != Some(true) {
                report_issue("INTERSECTION", "Sylow partition fails".into());
            }
            if let (Some(d), Some(count)) = (&classification.decomposition, intersection.sylow_q_count)
            {
                let expected = (d.p as u64).pow(d.alpha);
                if count as u64 != expected {
                    report_issue(
                        "INTERSECTION",
                        format!("Sylow q-count {count} != p^alpha = {expected}"),
                    );
                }
                if d.beta != 1 {
                    report_issue("INTERSECTION", format!("complement order q^{} is not prime", d.beta));
                }
            }
        } else if !group.is_p_group() {
            report_issue("INTERSECTION", "non-p-group in the intersection lacks a Frobenius branch".into());
        } else if order > 1 {
            // p-group branch: exponent must be the prime itself
            let p = group.single_prime().unwrap_or(0);
            if group.exponent() != p {
                report_issue("INTERSECTION", format!("p-group exponent {} != {p}", group.exponent()));
            }
        }
    }

    // cut below the largest order: normal, with quotient exponent q
    if verdict.cp2 && order > 1 {
        match largest_order_cut(&group) {
            Ok(cut) => {
                let max_order = *group.order_spectrum().iter().last().unwrap() as u64;
                let q = prime_power(max_order).map(|(q, _)| q as u32);
                if !cut.is_normal {
                    report_issue("ORDER-CUT", "cut below the largest order is not normal".into());
                } else if q.is_none() || cut.quotient_exponent != q {
                    report_issue(
                        "ORDER-CUT",
                        format!("quotient exponent {:?} != top prime {q:?}", cut.quotient_exponent),
                    );
                }
            }
            Err(e) => report_issue("ORDER-CUT", format!("cut computation failed: {e}")),
        }
    }

    // CP2 is closed under subgroups: check the whole lattice when feasible
    if verdict.cp2 && order <= options.lattice_threshold {
        let lattice = subgroup_lattice_with_threshold(&group, options.lattice_threshold)
            .expect("order within threshold");
        for sub in &lattice.subgroups {
            if sub.len() == order {
                continue;
            }
            let induced = group.induced_subgroup(sub).expect("lattice members are subgroups");
            if !checkers::is_cp2(&induced) {
                report_issue(
                    "SUBGROUP-CLOSURE",
                    format!("subgroup of order {} violates the inequality", sub.len()),
                );
                break;
            }
        }
    }

    let timing_ms = if options.record_timings { started.elapsed().as_millis() as u64 } else { 0 };
    let record = GroupRecord {
        family_descriptor: descriptor.clone(),
        order,
        class_verdict: verdict,
        classification,
        intersection,
        cp2_structure,
        timing_ms,
    };
    Ok((record, issues))
}

/// Full identity/inverse/associativity sweep; exhaustive for orders within
/// the lattice threshold scale, sampled above (the corpus cap keeps
/// everything exhaustive in practice).
fn axiom_violation(g: &Group) -> Option<String> {
    let n = g.order();
    for b in 0..n {
        if g.mul(0, b) != b || g.mul(b, 0) != b {
            return Some(format!("identity fails at {b}"));
        }
    }
    for a in 0..n {
        if g.mul(a, g.inv(a)) != 0 || g.mul(g.inv(a), a) != 0 {
            return Some(format!("inverse fails at {a}"));
        }
    }
    if n <= 512 {
        for a in 0..n {
            for b in 0..n {
                let ab = g.mul(a, b);
                for c in 0..n {
                    if g.mul(ab, c) != g.mul(a, g.mul(b, c)) {
                        return Some(format!("associativity fails at ({a}, {b}, {c})"));
                    }
                }
            }
        }
    } else {
        let mut state = 0x243F_6A88_85A3_08D3u64;
        let mut next = || {
            state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
            let mut z = state;
            z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
            (z ^ (z >> 31)) as usize
        };
        for _ in 0..1_000_000 {
            let (a, b, c) = (next() % n, next() % n, next() % n);
            if g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)) {
                return Some(format!("associativity fails at ({a}, {b}, {c})"));
            }
        }
    }
    None
}

/// Convenience entry point used by the acceptance suite: builds every
/// corpus group once.
pub fn build_corpus(
    manifest: &Manifest,
    max_order: usize,
) -> Result<Vec<(FamilyDescriptor, Group)>, HarnessError> {
    manifest
        .entries
        .iter()
        .map(|d| {
            d.build(max_order)
                .map(|g| (d.clone(), g))
                .map_err(|source| HarnessError::Construction { label: d.label(), source })
        })
        .collect()
}
