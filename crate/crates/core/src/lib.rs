//! Exact-arithmetic combinatorics of Young diagrams.
//!
//! The crate covers four layers:
//!
//! - [`partitions`]: partitions as Young diagrams, hook lengths, contents,
//!   step coordinates, addable corners and exhaustive enumeration.
//! - [`tableaux`]: closed-form counts of standard and semistandard tableaux
//!   (hook length and hook-content formulas) plus brute-force enumerators
//!   that serve as oracles.
//! - [`vershik`]: Vershik's `Q_j(m, n)` coefficients over sequences of
//!   positive rationals, with residual forms of the recursion, the
//!   normalization and the two moment identities.
//! - [`identities`]: the bridge between `Q_j(0, s)` and hook-product ratios,
//!   and checks for the hook-content moment identities, the squared
//!   dimension-ratio identity and the branching identity.
//!
//! [`verify`] drives exhaustive sweeps over all of the above and produces a
//! deterministic [`verify::Report`]; [`cli`] is the command-line front end.
//!
//! All arithmetic is exact: counts are [`BigUint`](num_bigint::BigUint) and
//! rationals are [`ExactRational`]. No floating point is used anywhere.

pub mod cli;
mod error;
pub mod identities;
pub mod partitions;
pub mod tableaux;
pub mod verify;
pub mod vershik;

pub use error::{Error, Result};
pub use identities::{IdentityCheck, IdentityId};
pub use partitions::{BoxCoord, Corner, Partition, StepCoords};
pub use tableaux::{FillingDimension, TableauCount};
pub use vershik::{IndexTriple, PairSequence};

/// Arbitrary-precision rational in lowest terms with a positive denominator.
///
/// `Display` prints `p/q`, or just `p` when the denominator is one.
pub type ExactRational = num_rational::BigRational;
