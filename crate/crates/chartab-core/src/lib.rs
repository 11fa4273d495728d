//! Exact combinatorics of square roots and character-table column sums in
//! finite reflection groups.
//!
//! For the symmetric group `S_n`, the hyperoctahedral group `B_n`, the
//! demihyperoctahedral group `D_n` and the generalized symmetric groups
//! `G(r,1,n)`, the sum of a character-table column equals the number of
//! square roots (for `G(r,1,n)` with `r > 2`: absolute square roots) of a
//! class representative.  This crate provides:
//!
//! * cycle-type index sets (partitions, bipartitions, r-partite types,
//!   `D_n` classes with split signs) and streaming enumeration ([`partition`]),
//! * closed-form product formulas for the per-class root counts ([`counts`]),
//! * truncated integer power series, Jacobi/Stieltjes continued fractions and
//!   the product generating functions built from them ([`series`], [`cfrac`]),
//! * a brute-force group oracle over colored permutations that recomputes
//!   every count independently ([`colored`], [`oracle`]),
//! * sequence builders with multiple independent computation routes and the
//!   verification suites that cross-check them ([`sequences`], [`verify`]).
//!
//! All arithmetic is exact: counts are arbitrary-precision integers and every
//! inequality is checked over the integers (surds are compared by squaring).

pub mod cache;
pub mod cfrac;
pub mod colored;
pub mod counts;
pub mod oracle;
pub mod partition;
pub mod sequences;
pub mod series;
pub mod text;
pub mod verify;

use thiserror::Error;

/// Arbitrary-precision signed integer used for every count in the crate.
pub type Int = num_bigint::BigInt;
/// Exact rational scalar (used internally where a formula parameter is a
/// non-integer rational; emitted coefficients are always integers).
pub type Rational = num_rational::BigRational;

/// Errors surfaced by fallible operations.
///
/// Internal invariants (e.g. exactness of census divisions) are asserted;
/// these variants cover caller-facing preconditions.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("not a D_n class: number of negative parts {0} is odd")]
    OddNegativeParts(usize),
    #[error("{0} is not in the domain of the bijection: {1}")]
    BijectionDomain(String, String),
    #[error("series has non-unit constant term; cannot invert")]
    NonUnitConstant,
    #[error("substitution exponent must be at least 1")]
    ZeroSubstitution,
    #[error("series coefficient at order {0} is not an integer: {1}")]
    NonIntegerCoefficient(usize, String),
    #[error("group order {order} exceeds the element budget {budget}")]
    BudgetExceeded { order: Int, budget: u64 },
    #[error("invalid group parameters: {0}")]
    InvalidGroup(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported method {method} for family {family}")]
    UnsupportedMethod { family: String, method: String },
    #[error("cache i/o: {0}")]
    Cache(String),
}

pub use counts::ZPair;
pub use partition::{
    bipartitions, dn_classes, partitions, r_partite_types, Bipartition, DnClass, Partition,
    RPartiteType, SplitSign,
};
pub use series::Series;
