//! Finite-group analysis kernel.
//!
//! The crate decides membership in four element-order classes of finite
//! groups by independent routes and computes the supporting structure:
//!
//! - [`group`]: dense Cayley tables with cached inverses and element
//!   orders; construction from raw tables, permutation generators, direct
//!   and semidirect products, quotients and induced subgroups.
//! - [`constructors`]: the named families driven by the corpus manifest
//!   (cyclic, dihedral, quaternion, symmetric, alternating, Heisenberg,
//!   field-action Frobenius groups, and friends).
//! - [`structure`]: centralizers, conjugacy, Sylow subgroups, p-cores,
//!   Fitting and Frattini subgroups, subgroup lattices, central and derived
//!   series.
//! - [`checkers`]: the class predicates (CP1, CP, CN, CP2), the pairwise
//!   oracle and its structural twin, the CP2 classifier and the
//!   intersection analyzer.
//!
//! Groups are immutable once built, so all analysis is safe to run in
//! parallel across groups.

pub mod arith;
pub mod bitset;
pub mod checkers;
pub mod constructors;
pub mod group;
pub mod perm;
pub mod structure;

pub use bitset::ElementSet;
pub use checkers::{
    ClassVerdict, Cp2Branch, Cp2Classification, FrobeniusDecomposition, IntersectionProfile,
    LargestOrderCut, ViolationWitness,
};
pub use constructors::{Family, FamilyDescriptor};
pub use group::{ActionSpec, AssocCheck, Group, GroupError, PermutationSpec};
pub use perm::Permutation;
pub use structure::{SeriesReport, SubgroupLattice};
