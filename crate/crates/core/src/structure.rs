//! Subgroup machinery: closure, centralizers, conjugacy, Sylow subgroups,
//! p-cores, Fitting and Frattini subgroups, commutator and power subgroups,
//! central and derived series, nilpotency and solvability.
//!
//! Everything operates by direct enumeration over the dense table; groups
//! here are desk-scale and the point is verifiability, not asymptotics.

use std::collections::HashSet;

use serde::Serialize;
use thiserror::Error;

use crate::arith::{is_prime, smallest_prime_factor};
use crate::bitset::ElementSet;
use crate::group::Group;

/// Largest group order for which the full subgroup lattice (and hence the
/// Frattini subgroup) is computed.
pub const DEFAULT_LATTICE_THRESHOLD: usize = 512;

#[derive(Debug, Error)]
pub enum StructureError {
    #[error("the given set is not a subgroup")]
    NotASubgroup,
    #[error("group order {order} exceeds the lattice threshold {threshold}")]
    ThresholdExceeded { order: usize, threshold: usize },
    #[error("{p} is not prime")]
    NotPrime { p: u64 },
    #[error("{p} does not divide the group order")]
    DoesNotDivideOrder { p: u64 },
    #[error("the group is not a p-group for p = {p}")]
    NotAPGroup { p: u64 },
    #[error("p must be an odd prime")]
    EvenPrime,
}

/// All subgroups of a group, sorted by cardinality then lexicographically,
/// with maximality and normality flags aligned by index.
#[derive(Debug)]
pub struct SubgroupLattice {
    pub subgroups: Vec<ElementSet>,
    pub maximal: Vec<bool>,
    pub normal: Vec<bool>,
}

impl SubgroupLattice {
    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    /// Intersection of the maximal subgroups; the whole group when there are
    /// none (trivial group).
    pub fn frattini(&self, order: usize) -> ElementSet {
        let mut acc = ElementSet::full(order);
        for (s, &m) in self.subgroups.iter().zip(&self.maximal) {
            if m {
                acc.intersect_with(s);
            }
        }
        acc
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum SeriesKind {
    UpperCentral,
    Derived,
}

/// A subgroup series computed to its fixed point. `terms` holds the distinct
/// terms in computation order (ascending for the upper central series,
/// descending for the derived series).
#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SeriesReport {
    pub kind: SeriesKind,
    pub terms: Vec<ElementSet>,
    pub stabilized: bool,
}

/// Smallest subgroup containing `seed`: worklist closure under products.
/// Inverses come for free in a finite group.
pub fn generated_subgroup(g: &Group, seed: &ElementSet) -> ElementSet {
    generated_subgroup_with_limit(g, seed, usize::MAX)
}

/// Closure that bails out to the full group as soon as the member count
/// exceeds `limit`. Passing the largest proper-divisor order of |G| keeps
/// lattice joins cheap: any intermediate set bigger than that can only
/// generate the whole group.
fn generated_subgroup_with_limit(g: &Group, seed: &ElementSet, limit: usize) -> ElementSet {
    let n = g.order();
    let mut members = ElementSet::singleton(n, Group::IDENTITY);
    let mut list: Vec<usize> = vec![Group::IDENTITY];
    for s in seed.iter() {
        if !members.contains(s) {
            members.insert(s);
            list.push(s);
        }
    }
    let mut i = 0;
    while i < list.len() {
        let a = list[i];
        for j in 0..=i {
            let b = list[j];
            for x in [g.mul(a, b), g.mul(b, a)] {
                if !members.contains(x) {
                    members.insert(x);
                    list.push(x);
                }
            }
        }
        if list.len() > limit {
            return ElementSet::full(n);
        }
        i += 1;
    }
    members
}

/// The cyclic subgroup generated by a single element.
pub fn cyclic_subgroup(g: &Group, a: usize) -> ElementSet {
    let mut s = ElementSet::singleton(g.order(), Group::IDENTITY);
    let mut x = a;
    while x != Group::IDENTITY {
        s.insert(x);
        x = g.mul(x, a);
    }
    s
}

/// Whether a subgroup is normal; errs if the set is not a subgroup at all.
pub fn is_normal(g: &Group, s: &ElementSet) -> Result<bool, StructureError> {
    if !g.is_subgroup_set(s) {
        return Err(StructureError::NotASubgroup);
    }
    Ok(g.is_normal_set(s))
}

/// Smallest normal subgroup containing `seed`.
pub fn normal_closure(g: &Group, seed: &ElementSet) -> ElementSet {
    let n = g.order();
    let mut current = generated_subgroup(g, seed);
    loop {
        let mut expanded = current.clone();
        for x in current.iter() {
            for c in 0..n {
                expanded.insert(g.conjugate(x, c));
            }
        }
        if expanded == current {
            return current;
        }
        current = generated_subgroup(g, &expanded);
    }
}

/// `{ b : ab = ba }`, always a subgroup.
pub fn centralizer(g: &Group, a: usize) -> ElementSet {
    ElementSet::from_indices(g.order(), (0..g.order()).filter(|&b| g.mul(a, b) == g.mul(b, a)))
}

pub fn center(g: &Group) -> ElementSet {
    let n = g.order();
    ElementSet::from_indices(n, (0..n).filter(|&a| (0..n).all(|b| g.mul(a, b) == g.mul(b, a))))
}

/// Conjugacy classes, ordered by their smallest member.
pub fn conjugacy_classes(g: &Group) -> Vec<ElementSet> {
    let n = g.order();
    let mut assigned = vec![false; n];
    let mut classes = Vec::new();
    for a in 0..n {
        if assigned[a] {
            continue;
        }
        let mut class = ElementSet::empty(n);
        for c in 0..n {
            let x = g.conjugate(a, c);
            class.insert(x);
            assigned[x] = true;
        }
        classes.push(class);
    }
    classes
}

/// `{ x : x s x^{-1} = s }` for a subgroup `s`.
pub fn normalizer(g: &Group, s: &ElementSet) -> ElementSet {
    let n = g.order();
    ElementSet::from_indices(
        n,
        (0..n).filter(|&x| s.iter().all(|m| s.contains(g.conjugate(m, x)))),
    )
}

/// A Sylow p-subgroup, grown deterministically: start from the cyclic
/// subgroup of the smallest-index p-element, then repeatedly adjoin the
/// smallest normalizer element whose p-th power falls back inside. Each
/// step multiplies the order by p, so the loop reaches the full p-part.
pub fn sylow(g: &Group, p: u64) -> Result<ElementSet, StructureError> {
    if !is_prime(p) {
        return Err(StructureError::NotPrime { p });
    }
    let n = g.order() as u64;
    if n % p != 0 {
        return Err(StructureError::DoesNotDivideOrder { p });
    }
    let mut p_part = 1u64;
    let mut rest = n;
    while rest % p == 0 {
        rest /= p;
        p_part *= p;
    }

    let seed = (0..g.order())
        .find(|&a| {
            let o = g.element_order(a) as u64;
            o > 1 && crate::arith::prime_power(o).is_some_and(|(q, _)| q == p)
        })
        .expect("Cauchy: a p-element exists when p divides the order");
    let mut subgroup = cyclic_subgroup(g, seed);

    while (subgroup.len() as u64) < p_part {
        let norm = normalizer(g, &subgroup);
        let next = norm
            .iter()
            .find(|&x| !subgroup.contains(x) && subgroup.contains(g.pow(x, p)))
            .expect("normalizer of a non-maximal p-subgroup grows");
        let mut seeded = subgroup.clone();
        seeded.insert(next);
        subgroup = generated_subgroup(g, &seeded);
    }
    Ok(subgroup)
}

/// Conjugates of a subgroup, deduplicated, in first-appearance order over
/// ascending conjugators.
pub fn subgroup_conjugates(g: &Group, s: &ElementSet) -> Vec<ElementSet> {
    let mut seen: HashSet<ElementSet> = HashSet::new();
    let mut out = Vec::new();
    for c in 0..g.order() {
        let conj = ElementSet::from_indices(g.order(), s.iter().map(|m| g.conjugate(m, c)));
        if seen.insert(conj.clone()) {
            out.push(conj);
        }
    }
    out
}

/// The p-core `O_p(G)`: intersection of all conjugates of a Sylow
/// p-subgroup, i.e. the largest normal p-subgroup. Trivial when p does not
/// divide the order. `p` must be prime.
pub fn p_core(g: &Group, p: u64) -> ElementSet {
    assert!(is_prime(p), "p_core requires a prime, got {p}");
    if g.order() as u64 % p != 0 {
        return ElementSet::singleton(g.order(), Group::IDENTITY);
    }
    let syl = sylow(g, p).expect("p divides the order");
    let mut core = syl.clone();
    for c in 0..g.order() {
        let conj = ElementSet::from_indices(g.order(), syl.iter().map(|m| g.conjugate(m, c)));
        core.intersect_with(&conj);
    }
    core
}

/// Fitting subgroup: the product of the p-cores over all primes dividing
/// the order.
pub fn fitting(g: &Group) -> ElementSet {
    let mut seed = ElementSet::singleton(g.order(), Group::IDENTITY);
    for &p in g.prime_factors() {
        seed.union_with(&p_core(g, p as u64));
    }
    generated_subgroup(g, &seed)
}

/// All subgroups: the cyclic subgroups closed under pairwise joins.
pub fn subgroup_lattice(g: &Group) -> Result<SubgroupLattice, StructureError> {
    subgroup_lattice_with_threshold(g, DEFAULT_LATTICE_THRESHOLD)
}

pub fn subgroup_lattice_with_threshold(
    g: &Group,
    threshold: usize,
) -> Result<SubgroupLattice, StructureError> {
    let n = g.order();
    if n > threshold {
        return Err(StructureError::ThresholdExceeded { order: n, threshold });
    }

    let mut seen: HashSet<ElementSet> = HashSet::new();
    let mut subs: Vec<ElementSet> = Vec::new();
    let mut push = |s: ElementSet, subs: &mut Vec<ElementSet>| {
        if seen.insert(s.clone()) {
            subs.push(s);
        }
    };
    push(ElementSet::singleton(n, Group::IDENTITY), &mut subs);
    for a in 1..n {
        push(cyclic_subgroup(g, a), &mut subs);
    }

    // any set exceeding the largest proper-divisor order generates G
    let join_limit = match smallest_prime_factor(n as u64) {
        Some(spf) => n / spf as usize,
        None => 1,
    };

    // close under pairwise joins; each unordered pair is considered once
    let mut i = 0;
    while i < subs.len() {
        for j in 0..i {
            let (a, b) = (&subs[i], &subs[j]);
            if a.is_subset(b) || b.is_subset(a) {
                continue;
            }
            let join = generated_subgroup_with_limit(g, &a.union(b), join_limit);
            push(join, &mut subs);
        }
        i += 1;
    }

    subs.sort();
    let full = ElementSet::full(n);
    let maximal: Vec<bool> = subs
        .iter()
        .map(|s| {
            *s != full
                && !subs.iter().any(|t| t != s && *t != full && s.is_subset(t))
        })
        .collect();
    let normal: Vec<bool> = subs.iter().map(|s| g.is_normal_set(s)).collect();
    Ok(SubgroupLattice { subgroups: subs, maximal, normal })
}

/// Frattini subgroup: intersection of the maximal subgroups. Requires the
/// full lattice, so it is gated by the same order threshold.
pub fn frattini(g: &Group) -> Result<ElementSet, StructureError> {
    frattini_with_threshold(g, DEFAULT_LATTICE_THRESHOLD)
}

pub fn frattini_with_threshold(g: &Group, threshold: usize) -> Result<ElementSet, StructureError> {
    Ok(subgroup_lattice_with_threshold(g, threshold)?.frattini(g.order()))
}

/// Derived subgroup `G' = <[a,b]>`.
pub fn commutator_subgroup(g: &Group) -> ElementSet {
    commutator_subgroup_of(g, &ElementSet::full(g.order()))
}

/// Derived subgroup of the subgroup on `s`, as a subset of `g`.
pub fn commutator_subgroup_of(g: &Group, s: &ElementSet) -> ElementSet {
    let mut seed = ElementSet::empty(g.order());
    for a in s.iter() {
        for b in s.iter() {
            seed.insert(g.commutator(a, b));
        }
    }
    generated_subgroup(g, &seed)
}

/// `<x^k : x in G>`.
pub fn power_subgroup(g: &Group, k: u64) -> ElementSet {
    let seed = ElementSet::from_indices(g.order(), (0..g.order()).map(|a| g.pow(a, k)));
    generated_subgroup(g, &seed)
}

/// Least common multiple of the element orders.
pub fn exponent(g: &Group) -> u32 {
    g.exponent()
}

/// Ascending central series `1 <= Z(G) <= Z_2(G) <= ...` computed to its
/// fixed point.
pub fn upper_central_series(g: &Group) -> SeriesReport {
    let n = g.order();
    let mut terms = vec![ElementSet::singleton(n, Group::IDENTITY)];
    loop {
        let prev = terms.last().unwrap();
        let next = ElementSet::from_indices(
            n,
            (0..n).filter(|&a| (0..n).all(|b| prev.contains(g.commutator(a, b)))),
        );
        if next == *prev {
            return SeriesReport { kind: SeriesKind::UpperCentral, terms, stabilized: true };
        }
        terms.push(next);
    }
}

/// Descending derived series `G >= G' >= G'' >= ...` computed to its fixed
/// point.
pub fn derived_series(g: &Group) -> SeriesReport {
    let mut terms = vec![ElementSet::full(g.order())];
    loop {
        let next = commutator_subgroup_of(g, terms.last().unwrap());
        if next == *terms.last().unwrap() {
            return SeriesReport { kind: SeriesKind::Derived, terms, stabilized: true };
        }
        terms.push(next);
    }
}

pub fn is_nilpotent(g: &Group) -> bool {
    upper_central_series(g).terms.last().unwrap().len() == g.order()
}

pub fn is_solvable(g: &Group) -> bool {
    derived_series(g).terms.last().unwrap().len() == 1
}

/// Whether a p-group (p odd) is powerful: `G' <= G^p`.
pub fn is_powerful(g: &Group, p: u64) -> Result<bool, StructureError> {
    if !is_prime(p) {
        return Err(StructureError::NotPrime { p });
    }
    if p == 2 {
        return Err(StructureError::EvenPrime);
    }
    match g.prime_factors() {
        [] => {}
        [q] if *q as u64 == p => {}
        _ => return Err(StructureError::NotAPGroup { p }),
    }
    Ok(commutator_subgroup(g).is_subset(&power_subgroup(g, p)))
}

/// Whether the subgroup on `s` is cyclic (some member has order |s|).
pub fn is_cyclic_set(g: &Group, s: &ElementSet) -> bool {
    let k = s.len() as u32;
    s.iter().any(|a| g.element_order(a) == k)
}
