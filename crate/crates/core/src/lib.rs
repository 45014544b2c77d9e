//! Frobenius characters of set representations of symmetric groups.
//!
//! An action of `S_n` on a finite set `M` is described by the images of the
//! `n-1` adjacent transpositions ([`FiniteAction`]). The Frobenius character
//! of the associated permutation representation can be computed two ways:
//! from fixed-point counts in the power-sum basis ([`FiniteAction::frobenius_p`]),
//! or from Young-subgroup orbit counts directly in the monomial basis
//! ([`FiniteAction::frobenius_m`]). The two expansions agree coefficientwise,
//! and the crate verifies that agreement by independent computation routes,
//! together with the parking-function orbit formula
//! `(1/(n+1)) * prod binom(mu_i + n, n)`.
//!
//! Coefficient arithmetic is generic over [`Scalar`]; the default instance is
//! the exact arbitrary-precision [`Rational`], which every built-in check and
//! the CLI use.

pub mod json;
pub mod parking;
pub mod partitions;
pub mod scalar;
pub mod setaction;
pub mod symfunc;
pub mod verify;

/// Arbitrary-precision signed integer used for character values.
pub type Int = num_bigint::BigInt;
/// Arbitrary-precision nonnegative integer used for all counts.
pub type Nat = num_bigint::BigUint;
/// Exact rational scalar; the default coefficient type throughout.
pub type Rational = num_rational::BigRational;

pub use parking::{ParkingOutcome, PreferenceFunction};
pub use partitions::{Partition, Permutation};
pub use scalar::Scalar;
pub use setaction::{ClassProfile, FiniteAction, OrbitReport, YoungSubgroup};
pub use symfunc::{Basis, CharacterTable, SymFunc};
