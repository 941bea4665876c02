//! Exact enumeration of chord diagrams.
//!
//! A chord diagram of order `n` is a set of `n` chords joining `2n` points on
//! a circle in pairs. This crate counts such diagrams up to the action of a
//! permutation group on the points, along three independent routes:
//!
//! * [`burnside`]: the general orbit-counting formula for an arbitrary group,
//!   summed over cycle-type classes of the wreath product `S_n ≀ S_2`;
//! * [`closed_forms`]: closed formulas for the cyclic group `C_2n` and the
//!   dihedral group `D_2n`, plus their asymptotic lower bounds;
//! * [`oracle`]: exhaustive enumeration of all `(2n-1)!!` matchings.
//!
//! [`classic_counts`] adds the noncrossing (Catalan), crossing-polynomial
//! (Touchard–Riordan) and strict-diagram counts.
//!
//! All counts are arbitrary precision ([`BigCount`]). Points are 0-based in
//! this API; the serialized [`diagram::ChordList`] form is 1-based.

pub mod burnside;
pub mod classic_counts;
pub mod closed_forms;
pub mod diagram;
mod error;
pub mod group_algebra;
pub mod numbers;
pub mod oracle;

pub use error::{Error, Result};

/// Arbitrary-precision nonnegative integer used for every count.
pub type BigCount = num_bigint::BigUint;

pub use burnside::{burnside_count, wreath_cycle_type_distribution, WreathTypeDistribution};
pub use classic_counts::{
    catalan_noncrossing, hk_sequences, touchard_polynomial, CrossingPolynomial, StrictSequences,
};
pub use closed_forms::{
    asymptotic_lower, cyclic_count, dihedral_count, kappa, nu, psi, psi_reflection,
    AsymptoticBound, BoundKind,
};
pub use diagram::{all_diagrams, apply, canonical_form, crossings, is_strict, ChordDiagram, ChordList};
pub use group_algebra::{
    cycle_type_of, divisors, euler_phi, generate_group, make_standard_group, partitions,
    CycleType, GroupElement, GroupKind, PermGroup,
};
pub use oracle::{OracleConfig, OrbitSummary};
