//! Element-order class predicates and classifiers.
//!
//! The central predicate is the pairwise inequality
//! `o(xy) <= max(o(x), o(y))`; groups satisfying it for all pairs form the
//! class CP2. Two independent routes decide membership: an exhaustive
//! pairwise oracle and a structural check on order layers. A classifier
//! sorts CP2 groups into the p-group branch (closed omega layers) or the
//! Frobenius branch (p^alpha q^beta with kernel the Fitting subgroup and a
//! cyclic complement), and the two routes are cross-checked corpus-wide.
//!
//! The related classes: CP1 (all nonidentity orders prime), CP (all orders
//! prime powers), CN (all centralizers of nonidentity elements nilpotent).

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::arith::prime_power;
use crate::bitset::ElementSet;
use crate::group::Group;
use crate::structure::{
    self, centralizer, commutator_subgroup, fitting, is_cyclic_set, subgroup_conjugates, sylow,
};

#[derive(Debug, Error)]
pub enum CheckerError {
    #[error("the group does not satisfy the pairwise order inequality")]
    PreconditionNotCp2,
    #[error("the group is not a p-group for p = {p}")]
    NotAPGroup { p: u64 },
    #[error("the trivial group has no largest-order cut")]
    TrivialGroup,
}

/// A falsifying pair for the pairwise order inequality: `o(xy) > bound`
/// where `bound = max(o(x), o(y))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ViolationWitness {
    pub x: usize,
    pub y: usize,
    pub oxy: u32,
    pub bound: u32,
}

/// Per-group membership record for the four classes.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassVerdict {
    pub cp1: bool,
    pub cp: bool,
    pub cn: bool,
    pub cp2: bool,
    /// Present exactly when `cp2` is false; found by the pairwise oracle.
    pub witness: Option<ViolationWitness>,
}

/// Scans all ordered pairs in x-major order and returns the first violation
/// of `o(xy) <= max(o(x), o(y))`, or `None` when the group is in CP2.
pub fn cp2_oracle(g: &Group) -> Option<ViolationWitness> {
    let n = g.order();
    for x in 0..n {
        let ox = g.element_order(x);
        for y in 0..n {
            let bound = ox.max(g.element_order(y));
            let oxy = g.element_order(g.mul(x, y));
            if oxy > bound {
                return Some(ViolationWitness { x, y, oxy, bound });
            }
        }
    }
    None
}

pub fn is_cp2(g: &Group) -> bool {
    cp2_oracle(g).is_none()
}

/// The order layer `{ x : o(x) <= alpha }`.
pub fn order_layer(g: &Group, alpha: u32) -> ElementSet {
    ElementSet::from_indices(g.order(), (0..g.order()).filter(|&x| g.element_order(x) <= alpha))
}

/// Structural route to CP2: for every order alpha in the spectrum, the
/// layer `{ x : o(x) <= alpha }` must be a subgroup (and normal, which is
/// checked literally even though layers are conjugation-invariant by
/// construction). Equivalent to the pairwise oracle.
pub fn cp2_by_order_layers(g: &Group) -> bool {
    g.order_spectrum().into_iter().all(|alpha| {
        let layer = order_layer(g, alpha);
        g.is_subgroup_set(&layer) && g.is_normal_set(&layer)
    })
}

/// Every element order is a prime power.
pub fn is_cp(g: &Group) -> bool {
    (1..g.order()).all(|a| prime_power(g.element_order(a) as u64).is_some())
}

/// Every nonidentity element has prime order.
pub fn is_cp1(g: &Group) -> bool {
    (1..g.order()).all(|a| crate::arith::is_prime(g.element_order(a) as u64))
}

/// Every centralizer of a nonidentity element is nilpotent. Centralizers
/// repeat heavily (conjugate elements, central elements), so nilpotency is
/// memoized per distinct centralizer set.
pub fn is_cn(g: &Group) -> bool {
    let mut memo: HashMap<ElementSet, bool> = HashMap::new();
    for a in 1..g.order() {
        let c = centralizer(g, a);
        let nilpotent = *memo.entry(c.clone()).or_insert_with(|| {
            let induced = g.induced_subgroup(&c).expect("centralizers are subgroups");
            structure::is_nilpotent(&induced)
        });
        if !nilpotent {
            return false;
        }
    }
    true
}

pub fn class_verdict(g: &Group) -> ClassVerdict {
    let witness = cp2_oracle(g);
    ClassVerdict {
        cp1: is_cp1(g),
        cp: is_cp(g),
        cn: is_cn(g),
        cp2: witness.is_none(),
        witness,
    }
}

/// For a group already in CP2, checks the sharper identity
/// `o(xy) = max(o(x), o(y))` whenever `o(x) != o(y)`.
pub fn order_map_property(g: &Group) -> Result<bool, CheckerError> {
    if cp2_oracle(g).is_some() {
        return Err(CheckerError::PreconditionNotCp2);
    }
    let n = g.order();
    for x in 0..n {
        let ox = g.element_order(x);
        for y in 0..n {
            let oy = g.element_order(y);
            if ox != oy && g.element_order(g.mul(x, y)) != ox.max(oy) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// One omega layer of a p-group: whether `{ x : x^(p^n) = 1 }` is closed
/// under multiplication.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct OmegaLayer {
    pub n: u32,
    pub closed: bool,
}

/// Scans the omega layers of a p-group up to `log_p(exponent)`; beyond that
/// every layer is the whole group and closure is vacuous.
pub fn omega_condition(g: &Group, p: u64) -> Result<Vec<OmegaLayer>, CheckerError> {
    match g.prime_factors() {
        [] => return Ok(Vec::new()),
        [q] if *q as u64 == p => {}
        _ => return Err(CheckerError::NotAPGroup { p }),
    }
    let exponent = g.exponent() as u64;
    let mut layers = Vec::new();
    let mut bound = p;
    let mut level = 1;
    while bound <= exponent {
        let layer = order_layer(g, bound as u32);
        let closed =
            layer.iter().all(|a| layer.iter().all(|b| layer.contains(g.mul(a, b))));
        layers.push(OmegaLayer { n: level, closed });
        bound *= p;
        level += 1;
    }
    Ok(layers)
}

/// A verified Frobenius decomposition `G = kernel ⋊ complement` with
/// p-group kernel and q-group complement.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FrobeniusDecomposition {
    pub kernel: ElementSet,
    pub complement: ElementSet,
    pub p: u32,
    pub q: u32,
    pub alpha: u32,
    pub beta: u32,
    pub complement_cyclic: bool,
}

/// Tries to decompose `g` as a Frobenius group with kernel the Fitting
/// subgroup. Requires exactly two prime divisors, a Fitting subgroup that
/// is a full Sylow p-subgroup, and a fixed-point-free complement; returns
/// `None` when any condition fails. No p < q constraint is imposed here.
pub fn detect_frobenius(g: &Group) -> Option<FrobeniusDecomposition> {
    let primes = g.prime_factors();
    if primes.len() != 2 {
        return None;
    }
    let kernel = fitting(g);
    if kernel.len() <= 1 || kernel.len() == g.order() {
        return None;
    }
    let kernel_order = kernel.len() as u64;
    let (p, alpha) = prime_power(kernel_order)?;
    let q = *primes.iter().find(|&&r| r as u64 != p)? as u64;

    // kernel must be the full Sylow p-subgroup
    let mut p_part = 1u64;
    let mut rest = g.order() as u64;
    while rest % p == 0 {
        rest /= p;
        p_part *= p;
    }
    if kernel_order != p_part {
        return None;
    }

    let complement = sylow(g, q).ok()?;
    let (_, beta) = prime_power(complement.len() as u64)?;
    if kernel.len() * complement.len() != g.order() {
        return None;
    }
    if kernel.intersection(&complement).len() != 1 {
        return None;
    }
    // fixed-point-free action of the complement on the kernel
    for h in complement.iter() {
        if h == Group::IDENTITY {
            continue;
        }
        for k in kernel.iter() {
            if k != Group::IDENTITY && g.conjugate(k, h) == k {
                return None;
            }
        }
    }
    let complement_cyclic = is_cyclic_set(g, &complement);
    Some(FrobeniusDecomposition {
        kernel,
        complement,
        p: p as u32,
        q: q as u32,
        alpha,
        beta,
        complement_cyclic,
    })
}

/// Outcome branch of the CP2 classifier.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Cp2Branch {
    #[serde(rename = "pGroupOmega")]
    PGroupOmega,
    #[serde(rename = "frobeniusPQ")]
    FrobeniusPQ,
    #[serde(rename = "notCP2")]
    NotCp2,
}

impl Cp2Branch {
    pub fn as_str(&self) -> &'static str {
        match self {
            Cp2Branch::PGroupOmega => "pGroupOmega",
            Cp2Branch::FrobeniusPQ => "frobeniusPQ",
            Cp2Branch::NotCp2 => "notCP2",
        }
    }
}

/// Structural classification of CP2 membership, with the evidence for the
/// chosen branch attached.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Cp2Classification {
    pub branch: Cp2Branch,
    pub prime: Option<u32>,
    pub decomposition: Option<FrobeniusDecomposition>,
    pub omega_evidence: Option<Vec<OmegaLayer>>,
}

impl Cp2Classification {
    pub fn admits(&self) -> bool {
        self.branch != Cp2Branch::NotCp2
    }
}

/// Decides CP2 membership structurally: a p-group qualifies exactly when
/// every omega layer is closed; otherwise the group must decompose as a
/// Frobenius group with p < q and cyclic complement. Must agree with
/// [`cp2_oracle`] on every group; the harness reports any disagreement
/// instead of reconciling it.
pub fn classify_cp2(g: &Group) -> Cp2Classification {
    if g.is_p_group() {
        let prime = g.single_prime();
        let layers = match prime {
            Some(p) => omega_condition(g, p as u64).expect("prime matches the group"),
            None => Vec::new(),
        };
        let all_closed = layers.iter().all(|l| l.closed);
        Cp2Classification {
            branch: if all_closed { Cp2Branch::PGroupOmega } else { Cp2Branch::NotCp2 },
            prime,
            decomposition: None,
            omega_evidence: Some(layers),
        }
    } else {
        let decomposition = detect_frobenius(g);
        let qualifies = decomposition
            .as_ref()
            .is_some_and(|d| d.p < d.q && d.complement_cyclic);
        Cp2Classification {
            branch: if qualifies { Cp2Branch::FrobeniusPQ } else { Cp2Branch::NotCp2 },
            prime: None,
            decomposition,
            omega_evidence: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum IntersectionBranch {
    #[serde(rename = "exponentP")]
    ExponentP,
    #[serde(rename = "frobeniusPQ1")]
    FrobeniusPQ1,
}

/// Profile of membership in the intersection of CP1 and CP2. For the
/// Frobenius branch the record carries the checkable side conditions: the
/// derived subgroup equals the Fitting subgroup, the Sylow q-subgroup count
/// equals p^alpha, and the kernel plus the complement conjugates partition
/// the group.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct IntersectionProfile {
    pub in_intersection: bool,
    pub branch: Option<IntersectionBranch>,
    pub commutator_equals_fitting: Option<bool>,
    pub sylow_q_count: Option<usize>,
    pub partition_valid: Option<bool>,
}

pub fn cp1_cp2_intersection(g: &Group) -> IntersectionProfile {
    let absent = IntersectionProfile {
        in_intersection: false,
        branch: None,
        commutator_equals_fitting: None,
        sylow_q_count: None,
        partition_valid: None,
    };
    if !is_cp1(g) || !is_cp2(g) {
        return absent;
    }
    if g.is_p_group() {
        return IntersectionProfile {
            in_intersection: true,
            branch: Some(IntersectionBranch::ExponentP),
            commutator_equals_fitting: None,
            sylow_q_count: None,
            partition_valid: None,
        };
    }

    let kernel = fitting(g);
    let q = g
        .prime_factors()
        .iter()
        .map(|&r| r as u64)
        .find(|&r| kernel.len() as u64 % r != 0)
        .expect("a CP2 non-p-group has a single-prime Fitting subgroup");
    let complement = sylow(g, q).expect("q divides the order");
    let conjugates = subgroup_conjugates(g, &complement);

    // partition: kernel and the complement conjugates cover G and meet
    // pairwise only in the identity
    let mut covered = kernel.clone();
    let mut disjoint = true;
    for c in &conjugates {
        let mut overlap = covered.intersection(c);
        overlap.remove(Group::IDENTITY);
        disjoint &= overlap.is_empty();
        covered.union_with(c);
    }
    let partition_valid = disjoint && covered.len() == g.order();

    IntersectionProfile {
        in_intersection: true,
        branch: Some(IntersectionBranch::FrobeniusPQ1),
        commutator_equals_fitting: Some(commutator_subgroup(g) == kernel),
        sylow_q_count: Some(conjugates.len()),
        partition_valid: Some(partition_valid),
    }
}

/// The cut below the largest element order: `N = { x : o(x) < max }`.
/// For a CP2 group this is a normal subgroup and the quotient has exponent
/// equal to the prime base of the largest order.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LargestOrderCut {
    pub cut_set: ElementSet,
    pub is_normal: bool,
    /// Exponent of `G/N`; absent when the cut is not a normal subgroup.
    pub quotient_exponent: Option<u32>,
}

pub fn largest_order_cut(g: &Group) -> Result<LargestOrderCut, CheckerError> {
    if g.order() == 1 {
        return Err(CheckerError::TrivialGroup);
    }
    if cp2_oracle(g).is_some() {
        return Err(CheckerError::PreconditionNotCp2);
    }
    let max_order = *g.order_spectrum().iter().last().unwrap();
    let cut_set = ElementSet::from_indices(
        g.order(),
        (0..g.order()).filter(|&x| g.element_order(x) < max_order),
    );
    let is_normal = g.is_subgroup_set(&cut_set) && g.is_normal_set(&cut_set);
    let quotient_exponent = if is_normal {
        Some(g.quotient(&cut_set).expect("checked normal").exponent())
    } else {
        None
    };
    Ok(LargestOrderCut { cut_set, is_normal, quotient_exponent })
}
