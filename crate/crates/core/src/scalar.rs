//! Coefficient scalars for symmetric functions.
//!
//! The conversion and inner-product machinery only needs field arithmetic
//! plus a way to inject exact integer and rational data. [`crate::Rational`]
//! is the exact instance used by the CLI and all verification routes; `f64`
//! is available for approximate work at degrees where exact coefficients get
//! expensive.

use std::fmt::{Debug, Display};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Num, Signed, ToPrimitive};

/// Field-like coefficient type.
///
/// Division by a nonzero value must be exact whenever the type can represent
/// the result exactly; only [`crate::Rational`] gives the crate-wide exactness
/// guarantees.
pub trait Scalar: Num + Signed + Clone + PartialEq + Debug + Display + Send + Sync + 'static {
    fn from_int(n: &BigInt) -> Self;

    fn from_nat(n: &BigUint) -> Self {
        Self::from_int(&BigInt::from(n.clone()))
    }

    /// The exact value `num / den`; `den` must be nonzero.
    fn from_ratio(num: &BigInt, den: &BigUint) -> Self {
        Self::from_int(num) / Self::from_nat(den)
    }

    fn from_rational(r: &BigRational) -> Self {
        Self::from_int(r.numer()) / Self::from_int(r.denom())
    }
}

impl Scalar for BigRational {
    fn from_int(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }

    fn from_ratio(num: &BigInt, den: &BigUint) -> Self {
        BigRational::new(num.clone(), BigInt::from(den.clone()))
    }

    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }
}

impl Scalar for f64 {
    fn from_int(n: &BigInt) -> Self {
        n.to_f64().unwrap_or(f64::NAN)
    }
}
