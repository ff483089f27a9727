//! Exact Schur Q-function expansions, Stembridge coefficients, and Schubert
//! class restriction and pushforward coefficients between the Grassmannian
//! and the Lagrangian Grassmannian.

pub mod error;
pub mod hooks;
pub mod macdonald_you;
pub mod partition;
pub mod scalar;
pub mod schubert;
pub mod symfunc;
pub mod tableaux;

pub use error::{Error, Result};
pub use partition::{
    partitions_of, straighten, strict_partitions_of, FrobeniusForm, IntSequence, Partition, Sign,
    StrictPartition,
};
pub use scalar::{Field, Scalar};
pub use symfunc::{Expansion, QExpansion, SchurExpansion, SymFunc};
pub use tableaux::{e_coeff, e_signed, f_coeff, g_coeff};

/// Arbitrary-precision integers.
pub type Integer = num_bigint::BigInt;
/// Arbitrary-precision rationals.
pub type Rational = num_rational::BigRational;

pub type SymFuncZ = SymFunc<Integer>;
pub type SymFuncQ = SymFunc<Rational>;
pub type QExpansionZ = QExpansion<Integer>;
pub type QExpansionQ = QExpansion<Rational>;
