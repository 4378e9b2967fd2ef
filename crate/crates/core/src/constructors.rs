//! Named group families used by the corpus harness and the test suites.
//!
//! Dihedral groups follow the order-n convention: `dihedral(n)` has n
//! elements, so `dihedral(8)` is the symmetry group of the square.

use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, prime_factorization, prime_power};
use crate::group::{ActionSpec, AssocCheck, Group, GroupError, DEFAULT_ORDER_CAP};

/// Degree ceiling for the symmetric-group constructor.
pub const MAX_SYMMETRIC_DEGREE: u64 = 7;
/// Degree ceiling for the alternating-group constructor.
pub const MAX_ALTERNATING_DEGREE: u64 = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Family {
    Cyclic,
    Abelian,
    Dihedral,
    GeneralizedQuaternion,
    Symmetric,
    Alternating,
    ElementaryAbelian,
    ExtraspecialExponentP,
    CoordinateShift,
    CoordinateShiftQuotient,
    FrobeniusLinear,
    Metacyclic,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Cyclic => "cyclic",
            Family::Abelian => "abelian",
            Family::Dihedral => "dihedral",
            Family::GeneralizedQuaternion => "generalizedQuaternion",
            Family::Symmetric => "symmetric",
            Family::Alternating => "alternating",
            Family::ElementaryAbelian => "elementaryAbelian",
            Family::ExtraspecialExponentP => "extraspecialExponentP",
            Family::CoordinateShift => "coordinateShift",
            Family::CoordinateShiftQuotient => "coordinateShiftQuotient",
            Family::FrobeniusLinear => "frobeniusLinear",
            Family::Metacyclic => "metacyclic",
        }
    }
}

/// A corpus entry: family tag plus its integer parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyDescriptor {
    pub family: Family,
    #[serde(default)]
    pub parameters: Vec<u64>,
}

impl FamilyDescriptor {
    pub fn new(family: Family, parameters: Vec<u64>) -> Self {
        FamilyDescriptor { family, parameters }
    }

    /// Short human label, e.g. `cyclic(6)` or `frobeniusLinear(2,4,5)`.
    pub fn label(&self) -> String {
        let params: Vec<String> = self.parameters.iter().map(|p| p.to_string()).collect();
        format!("{}({})", self.family.name(), params.join(","))
    }

    /// The group's order without constructing it, when the parameters are
    /// plausible; used for cheap cap checks.
    pub fn predicted_order(&self) -> Option<u64> {
        let p = &self.parameters;
        match self.family {
            Family::Cyclic => p.first().copied(),
            Family::Abelian => p.iter().try_fold(1u64, |acc, &k| acc.checked_mul(k)),
            Family::Dihedral => p.first().copied(),
            Family::GeneralizedQuaternion => p.first().copied(),
            Family::Symmetric => p.first().map(|&n| factorial(n)),
            Family::Alternating => p.first().map(|&n| if n < 2 { 1 } else { factorial(n) / 2 }),
            Family::ElementaryAbelian => match p.as_slice() {
                [q, k] => q.checked_pow(*k as u32),
                _ => None,
            },
            Family::ExtraspecialExponentP => p.first().and_then(|&q| q.checked_pow(3)),
            Family::CoordinateShift => match p.as_slice() {
                [q] => q.checked_pow(*q as u32 + 2),
                _ => None,
            },
            Family::CoordinateShiftQuotient => match p.as_slice() {
                [q] => q.checked_pow(*q as u32 + 1),
                _ => None,
            },
            Family::FrobeniusLinear => match p.as_slice() {
                [q, alpha, m] => q.checked_pow(*alpha as u32)?.checked_mul(*m),
                _ => None,
            },
            Family::Metacyclic => match p.as_slice() {
                [n, m, _] => n.checked_mul(*m),
                _ => None,
            },
        }
    }

    /// Builds the group, rejecting anything whose order exceeds `cap`.
    pub fn build(&self, cap: usize) -> Result<Group, GroupError> {
        if let Some(order) = self.predicted_order() {
            if order > cap as u64 {
                return Err(GroupError::CapExceeded { required: order as usize, cap });
            }
        }
        let p = &self.parameters;
        let bad = |what: &str| GroupError::InvalidParameter(format!("{}: {what}", self.label()));
        match (self.family, p.as_slice()) {
            (Family::Cyclic, [n]) => cyclic(*n),
            (Family::Abelian, parts) => abelian(parts),
            (Family::Dihedral, [n]) => dihedral(*n),
            (Family::GeneralizedQuaternion, [n]) => generalized_quaternion(*n),
            (Family::Symmetric, [n]) => symmetric(*n),
            (Family::Alternating, [n]) => alternating(*n),
            (Family::ElementaryAbelian, [q, k]) => elementary_abelian(*q, *k as u32),
            (Family::ExtraspecialExponentP, [q]) => extraspecial_exponent_p(*q),
            (Family::CoordinateShift, [q]) => Ok(coordinate_shift_extension(*q)?.group),
            (Family::CoordinateShiftQuotient, [q]) => coordinate_shift_quotient(*q),
            (Family::FrobeniusLinear, [q, alpha, m]) => frobenius_linear(*q, *alpha as u32, *m),
            (Family::Metacyclic, [n, m, r]) => metacyclic(*n, *m, *r),
            _ => Err(bad("wrong number of parameters")),
        }
    }
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// Cyclic group of order `n`.
pub fn cyclic(n: u64) -> Result<Group, GroupError> {
    if n == 0 {
        return Err(GroupError::InvalidParameter("cyclic order must be positive".into()));
    }
    check_cap(n)?;
    let n = n as usize;
    let mut table = vec![0u16; n * n];
    for a in 0..n {
        for b in 0..n {
            table[a * n + b] = ((a + b) % n) as u16;
        }
    }
    Ok(Group::from_table(table, n, AssocCheck::ByConstruction))
}

/// Direct product of cyclic groups of the given prime-power orders.
pub fn abelian(parts: &[u64]) -> Result<Group, GroupError> {
    for &k in parts {
        if prime_power(k).is_none() {
            return Err(GroupError::InvalidParameter(format!(
                "abelian invariant {k} is not a prime power"
            )));
        }
    }
    let mut g = cyclic(1)?;
    for &k in parts {
        g = g.direct_product(&cyclic(k)?)?;
    }
    Ok(g)
}

/// Elementary abelian group of order `p^k`.
pub fn elementary_abelian(p: u64, k: u32) -> Result<Group, GroupError> {
    if !is_prime(p) {
        return Err(GroupError::InvalidParameter(format!("{p} is not prime")));
    }
    abelian(&vec![p; k as usize])
}

/// Dihedral group of order `n` (order-n convention). Valid for n in {1, 2}
/// and even n >= 4; odd n > 2 is rejected.
pub fn dihedral(n: u64) -> Result<Group, GroupError> {
    match n {
        0 => Err(GroupError::InvalidParameter("dihedral order must be positive".into())),
        1 => cyclic(1),
        2 => cyclic(2),
        n if n % 2 == 1 => {
            Err(GroupError::InvalidParameter(format!("dihedral order {n} is odd")))
        }
        n => {
            check_cap(n)?;
            let n = n as usize;
            let m = n / 2;
            // indices 0..m are rotations a^i, m..n are reflections a^i b
            let mut table = vec![0u16; n * n];
            for i in 0..m {
                for j in 0..m {
                    table[i * n + j] = ((i + j) % m) as u16;
                    table[i * n + (m + j)] = (m + (i + j) % m) as u16;
                    table[(m + i) * n + j] = (m + (i + m - j % m) % m) as u16;
                    table[(m + i) * n + (m + j)] = ((i + m - j % m) % m) as u16;
                }
            }
            Ok(Group::from_table(table, n, AssocCheck::ByConstruction))
        }
    }
}

/// Generalized quaternion group of order `n = 2^k`, `k >= 3`:
/// `<a, b | a^(n/2) = 1, b^2 = a^(n/4), b a b^-1 = a^-1>`.
pub fn generalized_quaternion(n: u64) -> Result<Group, GroupError> {
    match prime_power(n) {
        Some((2, k)) if k >= 3 => {}
        _ => {
            return Err(GroupError::InvalidParameter(format!(
                "generalized quaternion order {n} is not 2^k with k >= 3"
            )))
        }
    }
    check_cap(n)?;
    let n = n as usize;
    let m = n / 2;
    let half = m / 2;
    let mut table = vec![0u16; n * n];
    for i in 0..m {
        for j in 0..m {
            table[i * n + j] = ((i + j) % m) as u16;
            table[i * n + (m + j)] = (m + (i + j) % m) as u16;
            table[(m + i) * n + j] = (m + (i + m - j) % m) as u16;
            table[(m + i) * n + (m + j)] = ((i + m - j + half) % m) as u16;
        }
    }
    Ok(Group::from_table(table, n, AssocCheck::ByConstruction))
}

/// Symmetric group on `n` points via the standard transposition + n-cycle
/// generating set.
pub fn symmetric(n: u64) -> Result<Group, GroupError> {
    if n == 0 || n > MAX_SYMMETRIC_DEGREE {
        return Err(GroupError::InvalidParameter(format!(
            "symmetric degree {n} outside 1..={MAX_SYMMETRIC_DEGREE}"
        )));
    }
    let n = n as usize;
    let mut generators = Vec::new();
    if n >= 2 {
        let mut t: Vec<usize> = (0..n).collect();
        t.swap(0, 1);
        generators.push(t);
        if n >= 3 {
            let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
            generators.push(cycle);
        }
    }
    Group::from_permutations(&crate::group::PermutationSpec { degree: n.max(1), generators })
}

/// Alternating group on `n` points.
pub fn alternating(n: u64) -> Result<Group, GroupError> {
    if n == 0 || n > MAX_ALTERNATING_DEGREE {
        return Err(GroupError::InvalidParameter(format!(
            "alternating degree {n} outside 1..={MAX_ALTERNATING_DEGREE}"
        )));
    }
    let n = n as usize;
    let mut generators: Vec<Vec<usize>> = Vec::new();
    if n >= 3 {
        let mut three: Vec<usize> = (0..n).collect();
        three[0] = 1;
        three[1] = 2;
        three[2] = 0;
        generators.push(three);
    }
    if n >= 4 {
        let cycle: Vec<usize> = if n % 2 == 1 {
            (0..n).map(|i| (i + 1) % n).collect()
        } else {
            // even degree: cycle the points 1..n-1, fixing 0
            (0..n).map(|i| if i == 0 { 0 } else { 1 + (i % (n - 1)) }).collect()
        };
        generators.push(cycle);
    }
    Group::from_permutations(&crate::group::PermutationSpec { degree: n.max(1), generators })
}

/// Heisenberg group modulo an odd prime: order p^3, exponent p, nonabelian.
/// Realized as upper unitriangular 3x3 matrices over `F_p`; element
/// `(a, b, c)` is indexed `a p^2 + b p + c`.
pub fn extraspecial_exponent_p(p: u64) -> Result<Group, GroupError> {
    if !is_prime(p) || p == 2 {
        return Err(GroupError::InvalidParameter(format!("{p} is not an odd prime")));
    }
    let order = p * p * p;
    check_cap(order)?;
    let (p, order) = (p as usize, order as usize);
    let mut table = vec![0u16; order * order];
    for a1 in 0..p {
        for b1 in 0..p {
            for c1 in 0..p {
                let row = ((a1 * p + b1) * p + c1) * order;
                for a2 in 0..p {
                    for b2 in 0..p {
                        let a = (a1 + a2) % p;
                        let b = (b1 + b2) % p;
                        let cc = (c1 + a1 * b2) % p;
                        for c2 in 0..p {
                            let c = (cc + c2) % p;
                            table[row + (a2 * p + b2) * p + c2] = ((a * p + b) * p + c) as u16;
                        }
                    }
                }
            }
        }
    }
    Ok(Group::from_table(table, order, AssocCheck::ByConstruction))
}

/// The wreath-like extension `(C_p)^p ⋊ C_{p^2}`: the cyclic factor's
/// generator `x` permutes the coordinates of the elementary abelian base
/// cyclically, so `x^p` acts trivially and is central.
pub struct CoordinateShiftGroup {
    pub group: Group,
    /// Index of the distinguished generator `x` of the cyclic factor.
    pub x: usize,
    /// Index of the central element `x^p`.
    pub x_p: usize,
}

pub fn coordinate_shift_extension(p: u64) -> Result<CoordinateShiftGroup, GroupError> {
    if !is_prime(p) {
        return Err(GroupError::InvalidParameter(format!("{p} is not prime")));
    }
    let base_order = p
        .checked_pow(p as u32)
        .filter(|b| b.checked_mul(p * p).is_some_and(|t| t <= DEFAULT_ORDER_CAP as u64))
        .ok_or(GroupError::CapExceeded { required: usize::MAX, cap: DEFAULT_ORDER_CAP })?;

    let target = elementary_abelian(p, p as u32)?;
    let actor = cyclic(p * p)?;
    let (pu, base) = (p as usize, base_order as usize);

    // digit j of v (base p, least significant first) is the j-th coordinate
    let shift = |v: usize, by: usize| -> usize {
        let mut digits = vec![0usize; pu];
        let mut rest = v;
        for d in digits.iter_mut() {
            *d = rest % pu;
            rest /= pu;
        }
        let mut out = 0usize;
        for j in (0..pu).rev() {
            out = out * pu + digits[(j + pu - by % pu) % pu];
        }
        out
    };
    let action: Vec<Vec<usize>> =
        (0..pu * pu).map(|h| (0..base).map(|v| shift(v, h % pu)).collect()).collect();

    let group = Group::semidirect_product(&ActionSpec { actor, target, action })?;
    // target-major numbering: (0, h) has index h
    Ok(CoordinateShiftGroup { group, x: 1, x_p: pu })
}

/// Quotient of [`coordinate_shift_extension`] by the central `<x^p>`;
/// isomorphic to a Sylow p-subgroup of the symmetric group on p^2 points.
pub fn coordinate_shift_quotient(p: u64) -> Result<Group, GroupError> {
    let ext = coordinate_shift_extension(p)?;
    let center_piece = cyclic_subgroup_set(&ext.group, ext.x_p);
    ext.group.quotient(&center_piece)
}

fn cyclic_subgroup_set(g: &Group, a: usize) -> crate::bitset::ElementSet {
    let mut s = crate::bitset::ElementSet::singleton(g.order(), Group::IDENTITY);
    let mut x = a;
    while x != Group::IDENTITY {
        s.insert(x);
        x = g.mul(x, a);
    }
    s
}

/// Frobenius group `(C_p)^alpha ⋊ C_m` where `m = q^beta` is a prime power
/// coprime to p with `m | p^alpha - 1`. The kernel is the additive group of
/// the field with `p^alpha` elements and the complement generator acts as
/// multiplication by a scalar of multiplicative order `m`, which is
/// automatically fixed-point free.
pub fn frobenius_linear(p: u64, alpha: u32, m: u64) -> Result<Group, GroupError> {
    if !is_prime(p) {
        return Err(GroupError::InvalidParameter(format!("{p} is not prime")));
    }
    if alpha == 0 {
        return Err(GroupError::InvalidParameter("kernel exponent must be positive".into()));
    }
    let (q, _beta) = prime_power(m).ok_or_else(|| {
        GroupError::InvalidParameter(format!("complement order {m} is not a prime power"))
    })?;
    if q == p {
        return Err(GroupError::InvalidParameter(format!(
            "complement prime {q} must differ from kernel prime {p}"
        )));
    }
    let kernel_order = p
        .checked_pow(alpha)
        .ok_or(GroupError::CapExceeded { required: usize::MAX, cap: DEFAULT_ORDER_CAP })?;
    if (kernel_order - 1) % m != 0 {
        return Err(GroupError::InvalidParameter(format!(
            "{m} does not divide p^alpha - 1 = {}",
            kernel_order - 1
        )));
    }
    check_cap(kernel_order.checked_mul(m).ok_or(GroupError::CapExceeded {
        required: usize::MAX,
        cap: DEFAULT_ORDER_CAP,
    })?)?;

    let field = SmallField::new(p, alpha);
    let generator = field.multiplicative_generator();
    let lambda = field.pow(generator, (kernel_order - 1) / m);

    let target = elementary_abelian(p, alpha)?;
    let actor = cyclic(m)?;
    let mut action: Vec<Vec<usize>> = Vec::with_capacity(m as usize);
    let mut scalar = 1u64; // lambda^h
    for _ in 0..m {
        action.push((0..kernel_order).map(|v| field.mul(scalar, v) as usize).collect());
        scalar = field.mul(scalar, lambda);
    }
    Group::semidirect_product(&ActionSpec { actor, target, action })
}

/// Split metacyclic group `C_n ⋊ C_m` with `y x y^{-1} = x^r`;
/// requires `r^m ≡ 1 (mod n)` and `gcd(r, n) = 1`.
pub fn metacyclic(n: u64, m: u64, r: u64) -> Result<Group, GroupError> {
    if n == 0 || m == 0 {
        return Err(GroupError::InvalidParameter("metacyclic orders must be positive".into()));
    }
    if crate::arith::gcd(r % n.max(1), n) != 1 {
        return Err(GroupError::InvalidParameter(format!("r = {r} is not a unit mod {n}")));
    }
    // r^m mod n
    let mut acc = 1u64;
    for _ in 0..m {
        acc = acc * (r % n) % n;
    }
    if acc % n != 1 % n {
        return Err(GroupError::InvalidParameter(format!("r^m = {acc} != 1 mod {n}")));
    }
    check_cap(n.checked_mul(m).ok_or(GroupError::CapExceeded {
        required: usize::MAX,
        cap: DEFAULT_ORDER_CAP,
    })?)?;

    let target = cyclic(n)?;
    let actor = cyclic(m)?;
    let mut action = Vec::with_capacity(m as usize);
    let mut rj = 1u64;
    for _ in 0..m {
        action.push((0..n).map(|i| (i * rj % n) as usize).collect());
        rj = rj * (r % n) % n;
    }
    Group::semidirect_product(&ActionSpec { actor, target, action })
}

fn check_cap(order: u64) -> Result<(), GroupError> {
    if order > DEFAULT_ORDER_CAP as u64 {
        Err(GroupError::CapExceeded { required: order as usize, cap: DEFAULT_ORDER_CAP })
    } else {
        Ok(())
    }
}

/// Arithmetic in the field with `p^alpha` elements; elements are indices
/// whose base-p digits are the coefficients of polynomials modulo a fixed
/// irreducible (the first one in coefficient order, so everything here is
/// deterministic).
struct SmallField {
    p: u64,
    alpha: u32,
    size: u64,
    /// coefficients of the monic irreducible, low degree first, without the
    /// leading 1 (empty for alpha = 1)
    reduction: Vec<u64>,
}

impl SmallField {
    fn new(p: u64, alpha: u32) -> SmallField {
        let size = p.pow(alpha);
        let reduction = if alpha == 1 { Vec::new() } else { Self::find_irreducible(p, alpha) };
        SmallField { p, alpha, size, reduction }
    }

    /// Lowest-index monic irreducible of degree alpha, by trial division
    /// against all lower-degree monics.
    fn find_irreducible(p: u64, alpha: u32) -> Vec<u64> {
        let tail_count = p.pow(alpha);
        'candidate: for idx in 0..tail_count {
            let mut coeffs = Vec::with_capacity(alpha as usize + 1);
            let mut rest = idx;
            for _ in 0..alpha {
                coeffs.push(rest % p);
                rest /= p;
            }
            coeffs.push(1); // monic
            for d in 1..=alpha / 2 {
                for div_idx in 0..p.pow(d) {
                    let mut div = Vec::with_capacity(d as usize + 1);
                    let mut rest = div_idx;
                    for _ in 0..d {
                        div.push(rest % p);
                        rest /= p;
                    }
                    div.push(1);
                    if poly_rem(&coeffs, &div, p).iter().all(|&c| c == 0) {
                        continue 'candidate;
                    }
                }
            }
            return coeffs[..alpha as usize].to_vec();
        }
        unreachable!("an irreducible of every degree exists over F_p")
    }

    fn digits(&self, x: u64) -> Vec<u64> {
        let mut d = Vec::with_capacity(self.alpha as usize);
        let mut rest = x;
        for _ in 0..self.alpha {
            d.push(rest % self.p);
            rest /= self.p;
        }
        d
    }

    fn undigits(&self, d: &[u64]) -> u64 {
        d.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    fn mul(&self, x: u64, y: u64) -> u64 {
        if self.alpha == 1 {
            return x * y % self.p;
        }
        let (a, b) = (self.digits(x), self.digits(y));
        let deg = self.alpha as usize;
        let mut prod = vec![0u64; 2 * deg - 1];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + ai * bj) % self.p;
            }
        }
        // reduce: X^deg = -reduction
        for i in (deg..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for (k, &r) in self.reduction.iter().enumerate() {
                let slot = i - deg + k;
                prod[slot] = (prod[slot] + c * (self.p - r) % self.p) % self.p;
            }
        }
        self.undigits(&prod[..deg])
    }

    fn pow(&self, x: u64, mut e: u64) -> u64 {
        let mut base = x;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// First generator of the multiplicative group in index order.
    fn multiplicative_generator(&self) -> u64 {
        let order = self.size - 1;
        let primes = prime_factorization(order);
        for g in 2..self.size {
            if primes.iter().all(|&(r, _)| self.pow(g, order / r) != 1) {
                return g;
            }
        }
        unreachable!("the multiplicative group of a finite field is cyclic")
    }
}

/// Remainder of `a / b` over F_p; both monic coefficient vectors, low first.
fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut rem: Vec<u64> = a.to_vec();
    let db = b.len() - 1;
    while rem.len() > db {
        let lead = *rem.last().unwrap() % p;
        let shift = rem.len() - 1 - db;
        if lead != 0 {
            for (k, &bk) in b.iter().enumerate() {
                let slot = shift + k;
                rem[slot] = (rem[slot] + (p - lead) * bk) % p;
            }
        }
        rem.pop();
    }
    rem
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitset::ElementSet;

    #[test]
    fn cyclic_edge_cases() {
        assert_eq!(cyclic(1).unwrap().order(), 1);
        assert!(cyclic(0).is_err());
        let c6 = cyclic(6).unwrap();
        assert_eq!(c6.order_spectrum().into_iter().collect::<Vec<_>>(), vec![1, 2, 3, 6]);
    }

    #[test]
    fn elementary_abelian_is_klein_for_2_2() {
        let v4 = elementary_abelian(2, 2).unwrap();
        assert_eq!(v4.order(), 4);
        assert_eq!(v4.exponent(), 2);
        assert!(v4.is_abelian());
    }

    #[test]
    fn abelian_from_partition() {
        let g = abelian(&[4, 2]).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.order_spectrum().into_iter().collect::<Vec<_>>(), vec![1, 2, 4]);
        assert!(abelian(&[6]).is_err()); // 6 is not a prime power
    }

    #[test]
    fn dihedral_order_profile() {
        // order-n convention: dihedral(8) is the square's symmetry group.
        let d8 = dihedral(8).unwrap();
        assert_eq!(d8.order(), 8);
        let mut counts = std::collections::BTreeMap::new();
        for a in 0..8 {
            *counts.entry(d8.element_order(a)).or_insert(0usize) += 1;
        }
        // 1 identity, 5 involutions (4 reflections + a^2), 2 rotations of order 4
        assert_eq!(counts.get(&1), Some(&1));
        assert_eq!(counts.get(&2), Some(&5));
        assert_eq!(counts.get(&4), Some(&2));
    }

    #[test]
    fn dihedral_matches_square_symmetries() {
        // independent route: generate the same group from the square's
        // rotation and a reflection as explicit permutations
        let spec = crate::group::PermutationSpec {
            degree: 4,
            generators: vec![vec![1, 2, 3, 0], vec![3, 2, 1, 0]],
        };
        let via_perms = Group::from_permutations(&spec).unwrap();
        let d8 = dihedral(8).unwrap();
        assert_eq!(via_perms.order(), 8);
        assert_eq!(via_perms.order_spectrum(), d8.order_spectrum());
        let profile = |g: &Group| {
            let mut v: Vec<u32> = (0..g.order()).map(|a| g.element_order(a)).collect();
            v.sort_unstable();
            v
        };
        assert_eq!(profile(&via_perms), profile(&d8));
    }

    #[test]
    fn small_dihedral_degenerates() {
        assert_eq!(dihedral(2).unwrap().order(), 2);
        let d4 = dihedral(4).unwrap();
        assert!(d4.is_abelian());
        assert_eq!(d4.exponent(), 2);
        assert!(dihedral(6).is_ok());
        assert!(dihedral(7).is_err());
    }

    #[test]
    fn quaternion_against_hand_built_table() {
        // independent oracle: the 8 unit quaternions +-1, +-i, +-j, +-k
        // with (sign, axis) coding; axis 0 = 1, 1 = i, 2 = j, 3 = k
        let mul = |x: (i32, usize), y: (i32, usize)| -> (i32, usize) {
            let (sx, ax) = x;
            let (sy, ay) = y;
            let (s, a) = match (ax, ay) {
                (0, a) => (1, a),
                (a, 0) => (1, a),
                (a, b) if a == b => (-1, 0),
                (1, 2) => (1, 3),
                (2, 1) => (-1, 3),
                (2, 3) => (1, 1),
                (3, 2) => (-1, 1),
                (3, 1) => (1, 2),
                (1, 3) => (-1, 2),
                _ => unreachable!(),
            };
            (sx * sy * s, a)
        };
        let code = |x: (i32, usize)| -> usize {
            if x.0 == 1 {
                x.1
            } else {
                4 + x.1
            }
        };
        let decode = |i: usize| -> (i32, usize) {
            if i < 4 {
                (1, i)
            } else {
                (-1, i - 4)
            }
        };
        let raw: Vec<Vec<usize>> =
            (0..8).map(|a| (0..8).map(|b| code(mul(decode(a), decode(b)))).collect()).collect();
        let oracle = Group::from_cayley_table(&raw).unwrap();
        let q8 = generalized_quaternion(8).unwrap();
        assert_eq!(oracle.order_spectrum(), q8.order_spectrum());
        assert_eq!(q8.order_spectrum().into_iter().collect::<Vec<_>>(), vec![1, 2, 4]);
        // unique involution, and it is central
        let involutions: Vec<usize> = (0..8).filter(|&a| q8.element_order(a) == 2).collect();
        assert_eq!(involutions.len(), 1);
        let z = involutions[0];
        assert!((0..8).all(|a| q8.mul(a, z) == q8.mul(z, a)));
    }

    #[test]
    fn q16_has_order_8_and_order_4_elements() {
        let q16 = generalized_quaternion(16).unwrap();
        assert_eq!(q16.order(), 16);
        assert_eq!(q16.element_order(1), 8); // a
        assert_eq!(q16.element_order(8), 4); // b
        assert!(generalized_quaternion(12).is_err());
        assert!(generalized_quaternion(4).is_err());
    }

    #[test]
    fn symmetric_and_alternating_orders() {
        assert_eq!(symmetric(1).unwrap().order(), 1);
        assert_eq!(symmetric(3).unwrap().order(), 6);
        assert_eq!(
            symmetric(3).unwrap().order_spectrum().into_iter().collect::<Vec<_>>(),
            vec![1, 2, 3]
        );
        assert_eq!(symmetric(4).unwrap().order(), 24);
        assert_eq!(alternating(3).unwrap().order(), 3);
        assert_eq!(alternating(4).unwrap().order(), 12);
        assert_eq!(alternating(5).unwrap().order(), 60);
        assert_eq!(alternating(6).unwrap().order(), 360);
        assert!(symmetric(8).is_err());
    }

    #[test]
    fn heisenberg_groups() {
        let h27 = extraspecial_exponent_p(3).unwrap();
        assert_eq!(h27.order(), 27);
        assert_eq!(h27.exponent(), 3);
        assert!(!h27.is_abelian());
        let h125 = extraspecial_exponent_p(5).unwrap();
        assert_eq!(h125.order(), 125);
        assert_eq!(h125.exponent(), 5);
        assert!(extraspecial_exponent_p(2).is_err());
        assert!(extraspecial_exponent_p(9).is_err());
    }

    #[test]
    fn coordinate_shift_structure() {
        let ext = coordinate_shift_extension(2).unwrap();
        assert_eq!(ext.group.order(), 16); // p^(p+2)
        assert_eq!(ext.group.element_order(ext.x), 4);
        let xp = ext.x_p;
        assert_eq!(ext.group.element_order(xp), 2);
        // x^p is central
        assert!((0..16).all(|a| ext.group.mul(a, xp) == ext.group.mul(xp, a)));
        assert_eq!(ext.group.mul(ext.x, ext.x), xp);

        let q = coordinate_shift_quotient(2).unwrap();
        assert_eq!(q.order(), 8);
    }

    #[test]
    fn coordinate_shift_quotient_matches_a_sylow_subgroup() {
        // the quotient is a Sylow p-subgroup of the symmetric group on p^2
        // points; for p = 2 that is the square's symmetry group
        let q = coordinate_shift_quotient(2).unwrap();
        let s4 = symmetric(4).unwrap();
        let syl = crate::structure::sylow(&s4, 2).unwrap();
        let d8 = s4.induced_subgroup(&syl).unwrap();
        assert_eq!(q.order(), d8.order());
        let profile = |g: &Group| {
            let mut v: Vec<u32> = (0..g.order()).map(|a| g.element_order(a)).collect();
            v.sort_unstable();
            v
        };
        assert_eq!(profile(&q), profile(&d8));
        assert_eq!(
            crate::structure::center(&q).len(),
            crate::structure::center(&d8).len()
        );
    }

    #[test]
    fn coordinate_shift_p3() {
        let ext = coordinate_shift_extension(3).unwrap();
        assert_eq!(ext.group.order(), 243);
        let xp = ext.x_p;
        assert!((0..243).all(|a| ext.group.mul(a, xp) == ext.group.mul(xp, a)));
        assert_eq!(coordinate_shift_quotient(3).unwrap().order(), 81);
    }

    #[test]
    fn frobenius_linear_instances() {
        let g12 = frobenius_linear(2, 2, 3).unwrap();
        assert_eq!(g12.order(), 12);
        // fixed-point-free: no nonidentity kernel element commutes with the
        // complement generator. kernel indices are multiples of 3 here
        // (target-major numbering with |H| = 3).
        let a4 = alternating(4).unwrap();
        assert_eq!(g12.order_spectrum(), a4.order_spectrum());

        let g80 = frobenius_linear(2, 4, 5).unwrap();
        assert_eq!(g80.order(), 80);
        let g72 = frobenius_linear(3, 2, 8).unwrap();
        assert_eq!(g72.order(), 72);

        assert!(frobenius_linear(2, 2, 5).is_err()); // 5 does not divide 3
        assert!(frobenius_linear(2, 2, 6).is_err()); // 6 not a prime power
        assert!(frobenius_linear(3, 2, 9).is_err()); // shares the prime
    }

    #[test]
    fn frobenius_action_is_fixed_point_free() {
        let g = frobenius_linear(3, 2, 8).unwrap();
        // kernel = indices with trivial complement part: (v, 0) -> v * 8
        let kernel: Vec<usize> = (0..9).map(|v| v * 8).collect();
        let kernel_set = ElementSet::from_indices(72, kernel.iter().copied());
        for h in 1..8 {
            // complement elements are (0, h) = h
            for &k in &kernel[1..] {
                assert_ne!(g.conjugate(k, h), k, "complement element {h} fixes kernel {k}");
            }
        }
        assert!(g.is_subgroup_set(&kernel_set));
        assert!(g.is_normal_set(&kernel_set));
    }

    #[test]
    fn metacyclic_modular_group() {
        let m27 = metacyclic(9, 3, 4).unwrap();
        assert_eq!(m27.order(), 27);
        assert!(!m27.is_abelian());
        assert_eq!(m27.exponent(), 9);
        assert!(metacyclic(9, 3, 2).is_err()); // 2^3 = 8 != 1 mod 9
        assert!(metacyclic(9, 3, 3).is_err()); // not a unit
    }

    #[test]
    fn descriptor_round_trip_and_caps() {
        let d = FamilyDescriptor::new(Family::FrobeniusLinear, vec![2, 4, 5]);
        assert_eq!(d.label(), "frobeniusLinear(2,4,5)");
        assert_eq!(d.predicted_order(), Some(80));
        assert!(d.build(512).is_ok());
        assert!(matches!(d.build(50), Err(GroupError::CapExceeded { .. })));

        let json = serde_json::to_string(&d).unwrap();
        assert!(json.contains("\"frobeniusLinear\""));
        let back: FamilyDescriptor = serde_json::from_str(&json).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn field_arithmetic_sanity() {
        let f9 = SmallField::new(3, 2);
        // multiplicative group has order 8 and is cyclic
        let g = f9.multiplicative_generator();
        let mut seen = std::collections::HashSet::new();
        let mut x = 1u64;
        for _ in 0..8 {
            x = f9.mul(x, g);
            seen.insert(x);
        }
        assert_eq!(seen.len(), 8);
        assert_eq!(x, 1);
    }
}
