//! Finite groups as dense Cayley tables over element indices.
//!
//! A [`Group`] stores its full multiplication table together with cached
//! inverses, element orders and the prime factors of the order. The identity
//! is always element 0; every construction renumbers or arranges for that.
//! Groups are immutable after construction and safe to share across threads.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{distinct_prime_factors, lcm};
use crate::bitset::ElementSet;
use crate::perm::Permutation;

/// Default ceiling on constructed group order.
pub const DEFAULT_ORDER_CAP: usize = 20_160;

/// Largest order for which untrusted tables get the full triple-loop
/// associativity check; above it a fixed-seed random sample is used.
pub const EXHAUSTIVE_ASSOC_LIMIT: usize = 512;

const SAMPLED_ASSOC_TRIPLES: usize = 1_000_000;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("generated group exceeds the cap of {cap} elements")]
    ClosureCapExceeded { cap: usize },
    #[error("requested order {required} exceeds the cap of {cap}")]
    CapExceeded { required: usize, cap: usize },
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("the given set is not a subgroup")]
    NotASubgroup,
    #[error("the given subgroup is not normal")]
    NotNormal,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// How associativity of the table was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum AssocCheck {
    /// Built from operations that are associative by construction
    /// (generator closure, products, quotients).
    ByConstruction,
    /// All `n^3` triples of an untrusted table were checked.
    Exhaustive,
    /// Untrusted table above the exhaustive limit; a fixed-seed random
    /// sample of triples was checked.
    Sampled,
}

/// Generating set for a permutation group: `generators[k][i]` is the image
/// of point `i` under the k-th generator (zero-based bijections).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PermutationSpec {
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
}

/// Data for an outer semidirect product `target ⋊ actor`.
///
/// `action[h]` is the automorphism of `target` induced by actor element `h`,
/// given as an image array over target element indices.
pub struct ActionSpec {
    pub actor: Group,
    pub target: Group,
    pub action: Vec<Vec<usize>>,
}

/// A permutation group closure: the abstract group plus the permutation
/// realizing each element index.
#[derive(Debug)]
pub struct PermutationClosure {
    pub group: Group,
    pub elements: Vec<Permutation>,
}

impl PermutationClosure {
    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.elements.iter().position(|q| q == p)
    }
}

#[derive(Clone)]
pub struct Group {
    order: usize,
    table: Vec<u16>,
    inverse: Vec<u16>,
    element_order: Vec<u32>,
    prime_factors: Vec<u32>,
    assoc_check: AssocCheck,
}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Group(order={})", self.order)
    }
}

impl Group {
    /// Identity element index; invariant across all constructions.
    pub const IDENTITY: usize = 0;

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    /// Order of element `a`: least `k >= 1` with `a^k = e`.
    #[inline]
    pub fn element_order(&self, a: usize) -> u32 {
        self.element_order[a]
    }

    /// Distinct primes dividing the group order, ascending.
    pub fn prime_factors(&self) -> &[u32] {
        &self.prime_factors
    }

    /// `Some(p)` when the order is a nontrivial power of a single prime.
    pub fn single_prime(&self) -> Option<u32> {
        match self.prime_factors.as_slice() {
            [p] => Some(*p),
            _ => None,
        }
    }

    /// True for prime-power order; vacuously true for the trivial group.
    pub fn is_p_group(&self) -> bool {
        self.prime_factors.len() <= 1
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| (a..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn assoc_check(&self) -> AssocCheck {
        self.assoc_check
    }

    pub fn pow(&self, a: usize, mut e: u64) -> usize {
        let mut base = a;
        let mut acc = Self::IDENTITY;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `g a g^{-1}`.
    #[inline]
    pub fn conjugate(&self, a: usize, g: usize) -> usize {
        self.mul(self.mul(g, a), self.inv(g))
    }

    /// `[a, b] = a^{-1} b^{-1} a b`.
    #[inline]
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    /// The set of distinct element orders.
    pub fn order_spectrum(&self) -> BTreeSet<u32> {
        self.element_order.iter().copied().collect()
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> u32 {
        self.element_order.iter().fold(1u64, |acc, &o| lcm(acc, o as u64)) as u32
    }

    /// Builds a validated group from an untrusted multiplication table.
    ///
    /// The identity may sit at any index in the input; it is renumbered to
    /// index 0. Rejects anything that is not a group: missing identity,
    /// non-Latin rows or columns, missing inverses, associativity failures.
    pub fn from_cayley_table(raw: &[Vec<usize>]) -> Result<Group, GroupError> {
        let n = raw.len();
        if n == 0 {
            return Err(GroupError::NotAGroup("empty table".into()));
        }
        if n > DEFAULT_ORDER_CAP {
            return Err(GroupError::CapExceeded { required: n, cap: DEFAULT_ORDER_CAP });
        }
        for (i, row) in raw.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::NotAGroup(format!("row {i} has length {} != {n}", row.len())));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(GroupError::NotAGroup(format!("entry {bad} in row {i} out of range")));
            }
        }

        let identity = (0..n)
            .find(|&e| (0..n).all(|b| raw[e][b] == b) && (0..n).all(|a| raw[a][e] == a))
            .ok_or_else(|| GroupError::NotAGroup("no two-sided identity".into()))?;

        // Renumber by swapping the identity with index 0.
        let relabel = |x: usize| {
            if x == identity {
                0
            } else if x == 0 {
                identity
            } else {
                x
            }
        };
        let mut table = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                table[relabel(a) * n + relabel(b)] = relabel(raw[a][b]) as u16;
            }
        }

        // Latin square: rows and columns are permutations. This guarantees
        // the order computation below terminates.
        let mut seen = vec![false; n];
        for a in 0..n {
            seen.fill(false);
            for b in 0..n {
                let x = table[a * n + b] as usize;
                if seen[x] {
                    return Err(GroupError::NotAGroup(format!("row {a} is not a permutation")));
                }
                seen[x] = true;
            }
        }
        for b in 0..n {
            seen.fill(false);
            for a in 0..n {
                let x = table[a * n + b] as usize;
                if seen[x] {
                    return Err(GroupError::NotAGroup(format!("column {b} is not a permutation")));
                }
                seen[x] = true;
            }
        }

        // Two-sided inverses.
        for a in 0..n {
            let b = (0..n).find(|&b| table[a * n + b] == 0).unwrap();
            if table[b * n + a] != 0 {
                return Err(GroupError::NotAGroup(format!(
                    "left and right inverses of element {a} differ"
                )));
            }
        }

        let assoc = if n <= EXHAUSTIVE_ASSOC_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    let ab = table[a * n + b] as usize;
                    for c in 0..n {
                        let bc = table[b * n + c] as usize;
                        if table[ab * n + c] != table[a * n + bc] {
                            return Err(GroupError::NotAGroup(format!(
                                "associativity fails at ({a}, {b}, {c})"
                            )));
                        }
                    }
                }
            }
            AssocCheck::Exhaustive
        } else {
            let mut state = 0x9E37_79B9_7F4A_7C15u64;
            let mut next = || {
                // splitmix64; fixed seed keeps validation reproducible
                state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
                let mut z = state;
                z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
                z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
                (z ^ (z >> 31)) as usize
            };
            for _ in 0..SAMPLED_ASSOC_TRIPLES {
                let a = next() % n;
                let b = next() % n;
                let c = next() % n;
                let ab = table[a * n + b] as usize;
                let bc = table[b * n + c] as usize;
                if table[ab * n + c] != table[a * n + bc] {
                    return Err(GroupError::NotAGroup(format!(
                        "associativity fails at ({a}, {b}, {c})"
                    )));
                }
            }
            AssocCheck::Sampled
        };

        Ok(Self::from_table(table, n, assoc))
    }

    /// Group generated by permutations under composition, with the default
    /// closure cap.
    pub fn from_permutations(spec: &PermutationSpec) -> Result<Group, GroupError> {
        Ok(Self::permutation_closure(spec, DEFAULT_ORDER_CAP)?.group)
    }

    /// Breadth-first closure from the identity, applying generators in
    /// listed order; element numbering is the discovery order, so it is
    /// deterministic for a given spec.
    pub fn permutation_closure(
        spec: &PermutationSpec,
        cap: usize,
    ) -> Result<PermutationClosure, GroupError> {
        if spec.degree == 0 {
            return Err(GroupError::InvalidParameter("degree must be positive".into()));
        }
        let mut gens = Vec::with_capacity(spec.generators.len());
        for (k, images) in spec.generators.iter().enumerate() {
            if images.len() != spec.degree {
                return Err(GroupError::InvalidParameter(format!(
                    "generator {k} has degree {} != {}",
                    images.len(),
                    spec.degree
                )));
            }
            let p = Permutation::from_images(images).ok_or_else(|| {
                GroupError::InvalidParameter(format!("generator {k} is not a bijection"))
            })?;
            gens.push(p);
        }

        let ngens = gens.len();
        let mut elements = vec![Permutation::identity(spec.degree)];
        let mut index: HashMap<Permutation, u32> = HashMap::new();
        index.insert(elements[0].clone(), 0);
        // provenance[b] = (parent, generator) with elements[b] = parent ∘ gen
        let mut provenance: Vec<(u32, u32)> = vec![(0, 0)];
        let mut edges: Vec<u32> = Vec::new();

        let mut i = 0;
        while i < elements.len() {
            for (j, g) in gens.iter().enumerate() {
                let y = elements[i].compose(g);
                let yi = match index.get(&y) {
                    Some(&yi) => yi,
                    None => {
                        if elements.len() >= cap {
                            return Err(GroupError::ClosureCapExceeded { cap });
                        }
                        let yi = elements.len() as u32;
                        index.insert(y.clone(), yi);
                        elements.push(y);
                        provenance.push((i as u32, j as u32));
                        yi
                    }
                };
                edges.push(yi);
            }
            i += 1;
        }

        let n = elements.len();
        // Fill the table column by column via generator words: for
        // b = parent ∘ g we have a·b = (a·parent) ∘ g, and BFS order
        // guarantees parent < b.
        let mut table = vec![0u16; n * n];
        for a in 0..n {
            table[a * n] = a as u16;
        }
        for b in 1..n {
            let (parent, j) = provenance[b];
            let (parent, j) = (parent as usize, j as usize);
            for a in 0..n {
                let ap = table[a * n + parent] as usize;
                table[a * n + b] = edges[ap * ngens + j] as u16;
            }
        }

        Ok(PermutationClosure { group: Self::from_table(table, n, AssocCheck::ByConstruction), elements })
    }

    /// Componentwise product on pairs, numbered with the left factor major.
    pub fn direct_product(&self, other: &Group) -> Result<Group, GroupError> {
        let n = self
            .order
            .checked_mul(other.order)
            .filter(|&n| n <= DEFAULT_ORDER_CAP)
            .ok_or(GroupError::CapExceeded {
                required: self.order.saturating_mul(other.order),
                cap: DEFAULT_ORDER_CAP,
            })?;
        let bo = other.order;
        let mut table = vec![0u16; n * n];
        for x1 in 0..self.order {
            for y1 in 0..bo {
                let row = (x1 * bo + y1) * n;
                for x2 in 0..self.order {
                    let x = self.mul(x1, x2) * bo;
                    for y2 in 0..bo {
                        table[row + x2 * bo + y2] = (x + other.mul(y1, y2)) as u16;
                    }
                }
            }
        }
        Ok(Self::from_table(table, n, AssocCheck::ByConstruction))
    }

    /// Semidirect product `target ⋊ actor` with
    /// `(n1, h1)(n2, h2) = (n1 · action[h1](n2), h1 h2)`.
    ///
    /// Elements are numbered target-major: `(n, h) -> n·|actor| + h`.
    /// The action is fully validated: every map must be an automorphism of
    /// the target, the identity must act trivially, and the assignment must
    /// respect the actor's multiplication.
    pub fn semidirect_product(spec: &ActionSpec) -> Result<Group, GroupError> {
        let h = &spec.actor;
        let t = &spec.target;
        if spec.action.len() != h.order() {
            return Err(GroupError::InvalidAction(format!(
                "expected {} maps, got {}",
                h.order(),
                spec.action.len()
            )));
        }
        for (hi, map) in spec.action.iter().enumerate() {
            if map.len() != t.order() {
                return Err(GroupError::InvalidAction(format!(
                    "map {hi} has length {} != {}",
                    map.len(),
                    t.order()
                )));
            }
            let mut seen = vec![false; t.order()];
            for &img in map {
                if img >= t.order() || seen[img] {
                    return Err(GroupError::InvalidAction(format!("map {hi} is not a bijection")));
                }
                seen[img] = true;
            }
            for a in 0..t.order() {
                for b in 0..t.order() {
                    if map[t.mul(a, b)] != t.mul(map[a], map[b]) {
                        return Err(GroupError::InvalidAction(format!(
                            "map {hi} is not an automorphism"
                        )));
                    }
                }
            }
        }
        if spec.action[0].iter().enumerate().any(|(i, &img)| i != img) {
            return Err(GroupError::InvalidAction("identity must act trivially".into()));
        }
        for h1 in 0..h.order() {
            for h2 in 0..h.order() {
                let composite = &spec.action[h.mul(h1, h2)];
                let (a1, a2) = (&spec.action[h1], &spec.action[h2]);
                if (0..t.order()).any(|v| composite[v] != a1[a2[v]]) {
                    return Err(GroupError::InvalidAction(format!(
                        "action does not respect actor multiplication at ({h1}, {h2})"
                    )));
                }
            }
        }

        let n = t
            .order()
            .checked_mul(h.order())
            .filter(|&n| n <= DEFAULT_ORDER_CAP)
            .ok_or(GroupError::CapExceeded {
                required: t.order().saturating_mul(h.order()),
                cap: DEFAULT_ORDER_CAP,
            })?;
        let ho = h.order();
        let mut table = vec![0u16; n * n];
        for n1 in 0..t.order() {
            for h1 in 0..ho {
                let row = (n1 * ho + h1) * n;
                let act = &spec.action[h1];
                for n2 in 0..t.order() {
                    let tn = t.mul(n1, act[n2]) * ho;
                    for h2 in 0..ho {
                        table[row + n2 * ho + h2] = (tn + h.mul(h1, h2)) as u16;
                    }
                }
            }
        }
        Ok(Self::from_table(table, n, AssocCheck::ByConstruction))
    }

    /// Quotient by a normal subgroup. Cosets are numbered by their smallest
    /// member, so the identity coset is index 0.
    pub fn quotient(&self, normal: &ElementSet) -> Result<Group, GroupError> {
        if !self.is_subgroup_set(normal) {
            return Err(GroupError::NotASubgroup);
        }
        if !self.is_normal_set(normal) {
            return Err(GroupError::NotNormal);
        }
        let n = self.order;
        let mut coset_of = vec![u32::MAX; n];
        let mut reps: Vec<usize> = Vec::new();
        for a in 0..n {
            if coset_of[a] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(a);
            for s in normal.iter() {
                coset_of[self.mul(a, s)] = c;
            }
        }
        let q = reps.len();
        let mut table = vec![0u16; q * q];
        for (ca, &ra) in reps.iter().enumerate() {
            for (cb, &rb) in reps.iter().enumerate() {
                table[ca * q + cb] = coset_of[self.mul(ra, rb)] as u16;
            }
        }
        Ok(Self::from_table(table, q, AssocCheck::ByConstruction))
    }

    /// The subgroup on `members` as a standalone group, re-indexed in
    /// ascending member order (identity stays at 0).
    pub fn induced_subgroup(&self, members: &ElementSet) -> Result<Group, GroupError> {
        if !self.is_subgroup_set(members) {
            return Err(GroupError::NotASubgroup);
        }
        let elems: Vec<usize> = members.iter().collect();
        let m = elems.len();
        let mut local = vec![u32::MAX; self.order];
        for (i, &e) in elems.iter().enumerate() {
            local[e] = i as u32;
        }
        let mut table = vec![0u16; m * m];
        for (i, &a) in elems.iter().enumerate() {
            for (j, &b) in elems.iter().enumerate() {
                table[i * m + j] = local[self.mul(a, b)] as u16;
            }
        }
        Ok(Self::from_table(table, m, AssocCheck::ByConstruction))
    }

    /// Closure and identity membership; sufficient for subgroup status in a
    /// finite group.
    pub fn is_subgroup_set(&self, s: &ElementSet) -> bool {
        if s.capacity() != self.order || !s.contains(Self::IDENTITY) {
            return false;
        }
        s.iter().all(|a| s.iter().all(|b| s.contains(self.mul(a, b))))
    }

    pub fn is_normal_set(&self, s: &ElementSet) -> bool {
        (0..self.order).all(|g| s.iter().all(|x| s.contains(self.conjugate(x, g))))
    }

    /// Builds the cached arrays from a trusted table (identity at 0,
    /// associative by construction or already validated).
    pub(crate) fn from_table(table: Vec<u16>, order: usize, assoc_check: AssocCheck) -> Group {
        debug_assert_eq!(table.len(), order * order);
        let mut inverse = vec![0u16; order];
        for a in 0..order {
            let b = (0..order)
                .find(|&b| table[a * order + b] == 0)
                .expect("trusted table must have inverses");
            inverse[a] = b as u16;
        }
        let mut element_order = vec![0u32; order];
        for a in 0..order {
            let mut x = a;
            let mut k = 1u32;
            while x != Self::IDENTITY {
                x = table[x * order + a] as usize;
                k += 1;
                debug_assert!(k as usize <= order + 1);
            }
            element_order[a] = k;
        }
        let prime_factors = distinct_prime_factors(order as u64).into_iter().map(|p| p as u32).collect();
        Group { order, table, inverse, element_order, prime_factors, assoc_check }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic_raw(n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
    }

    #[test]
    fn trivial_table() {
        let g = Group::from_cayley_table(&[vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.element_order(0), 1);
        assert_eq!(g.order_spectrum().into_iter().collect::<Vec<_>>(), vec![1]);
    }

    #[test]
    fn c2_table() {
        let g = Group::from_cayley_table(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.element_order(0), 1);
        assert_eq!(g.element_order(1), 2);
    }

    #[test]
    fn identity_renumbered_to_zero() {
        // C6 written with the identity at index 3: a*b = wrap(a+b) in a
        // scrambled labeling. Build by relabeling the standard table.
        let relabel = [3usize, 0, 4, 1, 5, 2]; // old -> new labels
        let std = cyclic_raw(6);
        let mut raw = vec![vec![0usize; 6]; 6];
        for a in 0..6 {
            for b in 0..6 {
                raw[relabel[a]][relabel[b]] = relabel[std[a][b]];
            }
        }
        // the identity now sits at index 3
        assert!((0..6).all(|b| raw[3][b] == b));
        let g = Group::from_cayley_table(&raw).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.element_order(0), 1);
        // order spectrum of C6, independently: orders of g^k are 6/gcd(k,6)
        let expected: BTreeSet<u32> =
            (0..6u64).map(|k| (6 / crate::arith::gcd(k, 6)) as u32).collect();
        assert_eq!(g.order_spectrum(), expected);
        assert_eq!(g.order_spectrum().into_iter().collect::<Vec<_>>(), vec![1, 2, 3, 6]);
    }

    #[test]
    fn rejects_table_without_identity() {
        // Latin square (a, b) -> a + 2b mod 3: row 0 acts as a left identity
        // but no element is a two-sided identity
        let raw = vec![vec![0, 1, 2], vec![2, 0, 1], vec![1, 2, 0]];
        let err = Group::from_cayley_table(&raw).unwrap_err();
        assert!(matches!(err, GroupError::NotAGroup(ref m) if m.contains("identity")));
    }

    #[test]
    fn rejects_non_latin_rows() {
        let raw = vec![vec![0, 1], vec![1, 1]];
        assert!(Group::from_cayley_table(&raw).is_err());
    }

    #[test]
    fn rejects_non_associative_loop() {
        // Order-5 loop with identity and two-sided inverses; a group of
        // order 5 cannot have involutions, so this cannot be associative.
        let raw = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = Group::from_cayley_table(&raw).unwrap_err();
        assert!(matches!(err, GroupError::NotAGroup(ref m) if m.contains("associativity")));
    }

    #[test]
    fn s4_from_standard_generators() {
        let spec = PermutationSpec {
            degree: 4,
            generators: vec![vec![1, 0, 2, 3], vec![1, 2, 3, 0]],
        };
        let g = Group::from_permutations(&spec).unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(g.order_spectrum().into_iter().collect::<Vec<_>>(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn two_even_permutations_generate_a5() {
        let spec = PermutationSpec {
            degree: 5,
            generators: vec![vec![1, 0, 3, 2, 4], vec![0, 2, 4, 3, 1]],
        };
        let closure = Group::permutation_closure(&spec, DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(closure.group.order(), 60);
        // generators sit at indices 1 and 2 (first products of the identity)
        let sigma = closure.index_of(&Permutation::from_images(&[1, 0, 3, 2, 4]).unwrap());
        assert_eq!(sigma, Some(1));
    }

    #[test]
    fn empty_generator_list_gives_trivial_group() {
        let spec = PermutationSpec { degree: 1, generators: vec![] };
        let g = Group::from_permutations(&spec).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn closure_cap_is_enforced() {
        let spec = PermutationSpec {
            degree: 5,
            generators: vec![vec![1, 0, 2, 3, 4], vec![1, 2, 3, 4, 0]],
        };
        let err = Group::permutation_closure(&spec, 30).unwrap_err();
        assert!(matches!(err, GroupError::ClosureCapExceeded { cap: 30 }));
    }

    #[test]
    fn direct_product_orders_are_lcms() {
        let c2 = Group::from_cayley_table(&cyclic_raw(2)).unwrap();
        let c3 = Group::from_cayley_table(&cyclic_raw(3)).unwrap();
        let g = c2.direct_product(&c3).unwrap();
        assert_eq!(g.order(), 6);
        let mut found_order_6 = false;
        for x in 0..2 {
            for y in 0..3 {
                let o = g.element_order(x * 3 + y);
                let expected = lcm(c2.element_order(x) as u64, c3.element_order(y) as u64) as u32;
                assert_eq!(o, expected);
                found_order_6 |= o == 6;
            }
        }
        assert!(found_order_6);
    }

    #[test]
    fn direct_product_of_klein_type_has_exponent_two() {
        let c2 = Group::from_cayley_table(&cyclic_raw(2)).unwrap();
        let v4 = c2.direct_product(&c2).unwrap();
        assert_eq!(v4.order(), 4);
        assert_eq!(v4.exponent(), 2);
    }

    #[test]
    fn quaternion_times_c3_has_an_order_12_element() {
        let q8 = crate::constructors::generalized_quaternion(8).unwrap();
        let c3 = Group::from_cayley_table(&cyclic_raw(3)).unwrap();
        let g = q8.direct_product(&c3).unwrap();
        assert_eq!(g.order(), 24);
        let spectrum = g.order_spectrum();
        assert!(spectrum.contains(&3) && spectrum.contains(&4));
        // a commuting pair of orders 4 and 3: (i, identity) and (identity, w)
        let a = 3;
        let b = 1;
        assert_eq!(g.mul(a, b), g.mul(b, a));
        assert_eq!(g.element_order(a), 4);
        assert_eq!(g.element_order(b), 3);
        assert_eq!(g.element_order(g.mul(a, b)), 12);
    }

    #[test]
    fn quaternion_modulo_center_is_klein() {
        let q8 = crate::constructors::generalized_quaternion(8).unwrap();
        let center = ElementSet::from_indices(8, (0..8).filter(|&a| {
            (0..8).all(|b| q8.mul(a, b) == q8.mul(b, a))
        }));
        assert_eq!(center.len(), 2);
        let v4 = q8.quotient(&center).unwrap();
        assert_eq!(v4.order(), 4);
        assert_eq!(v4.exponent(), 2);
    }

    #[test]
    fn induced_subgroups_of_a4() {
        let a4 = crate::constructors::alternating(4).unwrap();
        let v4_set = ElementSet::from_indices(12, (0..12).filter(|&a| a4.element_order(a) <= 2));
        let v4 = a4.induced_subgroup(&v4_set).unwrap();
        assert_eq!(v4.order(), 4);
        assert_eq!(v4.exponent(), 2);

        let t = (0..12).find(|&a| a4.element_order(a) == 3).unwrap();
        let c3_set = ElementSet::from_indices(12, [0, t, a4.mul(t, t)]);
        let c3 = a4.induced_subgroup(&c3_set).unwrap();
        assert_eq!(c3.order(), 3);
        assert_eq!(c3.element_order(1), 3);

        assert!(matches!(
            a4.induced_subgroup(&ElementSet::from_indices(12, [0, t])),
            Err(GroupError::NotASubgroup)
        ));
    }

    #[test]
    fn semidirect_with_trivial_action_matches_direct_product() {
        let c3 = Group::from_cayley_table(&cyclic_raw(3)).unwrap();
        let c4 = Group::from_cayley_table(&cyclic_raw(4)).unwrap();
        let spec = ActionSpec {
            actor: c4.clone(),
            target: c3.clone(),
            action: vec![vec![0, 1, 2]; 4],
        };
        let semi = Group::semidirect_product(&spec).unwrap();
        let direct = c3.direct_product(&c4).unwrap();
        assert_eq!(semi.order(), direct.order());
        for a in 0..12 {
            for b in 0..12 {
                assert_eq!(semi.mul(a, b), direct.mul(a, b));
            }
        }
    }

    #[test]
    fn semidirect_rejects_non_automorphism() {
        let c3 = Group::from_cayley_table(&cyclic_raw(3)).unwrap();
        let c2 = Group::from_cayley_table(&cyclic_raw(2)).unwrap();
        // swapping identity with a nonidentity element is a bijection but
        // not an automorphism
        let spec = ActionSpec {
            actor: c2.clone(),
            target: c3.clone(),
            action: vec![vec![0, 1, 2], vec![1, 0, 2]],
        };
        assert!(matches!(
            Group::semidirect_product(&spec),
            Err(GroupError::InvalidAction(_))
        ));
    }

    #[test]
    fn quotient_by_whole_group_is_trivial() {
        let c6 = Group::from_cayley_table(&cyclic_raw(6)).unwrap();
        let q = c6.quotient(&ElementSet::full(6)).unwrap();
        assert_eq!(q.order(), 1);
    }

    #[test]
    fn quotient_rejects_non_normal_subgroup() {
        // S3 as permutations; the subgroup generated by a transposition is
        // not normal.
        let spec = PermutationSpec { degree: 3, generators: vec![vec![1, 0, 2], vec![1, 2, 0]] };
        let s3 = Group::from_permutations(&spec).unwrap();
        let t = (1..6).find(|&a| s3.element_order(a) == 2).unwrap();
        let sub = ElementSet::from_indices(6, [0, t]);
        assert!(s3.is_subgroup_set(&sub));
        assert!(matches!(s3.quotient(&sub), Err(GroupError::NotNormal)));
    }

    #[test]
    fn induced_subgroup_of_identity_is_trivial() {
        let c6 = Group::from_cayley_table(&cyclic_raw(6)).unwrap();
        let g = c6.induced_subgroup(&ElementSet::singleton(6, 0)).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn coset_order_divides_representative_order() {
        let c12 = Group::from_cayley_table(&cyclic_raw(12)).unwrap();
        let sub = ElementSet::from_indices(12, [0, 4, 8]);
        let q = c12.quotient(&sub).unwrap();
        assert_eq!(q.order(), 4);
        // cosets are numbered by smallest member; recover that numbering
        let mut reps: Vec<usize> = (0..12)
            .filter(|&x| sub.iter().all(|s| c12.mul(x, s) >= x))
            .collect();
        reps.sort_unstable();
        for a in 0..12 {
            let rep = sub.iter().map(|s| c12.mul(a, s)).min().unwrap();
            let coset = reps.iter().position(|&r| r == rep).unwrap();
            assert_eq!(c12.element_order(a) % q.element_order(coset), 0);
        }
    }
}
