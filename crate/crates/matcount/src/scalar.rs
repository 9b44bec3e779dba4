//! Scalar abstraction for exact integer arithmetic.
//!
//! Every count in this crate is an exact signed integer. The arithmetic and
//! counting routines are generic over [`ExactScalar`] so they can run on any
//! integer type that implements the `num` ecosystem traits; the crate-root
//! alias [`crate::ExactInt`] (an arbitrary-precision integer) is the type
//! every production path uses. Fixed-width instantiations such as `i64` or
//! `i128` are useful in tests and cross-checks but overflow outside small
//! parameter ranges.

use num_integer::Integer;
use num_traits::{FromPrimitive, NumAssign, Signed};
use std::fmt::{Debug, Display};
use std::hash::Hash;

use crate::error::Error;

/// Exact signed integer scalar: the alternating sums need signedness, the
/// grids need arbitrary magnitude, and reports need value-based hashing.
pub trait ExactScalar:
    Integer + Signed + NumAssign + FromPrimitive + Clone + Hash + Display + Debug + Send + Sync + 'static
{
}

impl<T> ExactScalar for T where
    T: Integer
        + Signed
        + NumAssign
        + FromPrimitive
        + Clone
        + Hash
        + Display
        + Debug
        + Send
        + Sync
        + 'static
{
}

/// Convert a nonnegative machine integer into the scalar type.
///
/// Panics only if the scalar type cannot represent `v`, which cannot happen
/// for arbitrary-precision scalars.
pub fn scalar_from_u64<T: ExactScalar>(v: u64) -> T {
    T::from_u64(v).expect("scalar type cannot represent input")
}

/// Canonical serialization: plain decimal text, optional leading `-`,
/// no separators.
pub fn to_decimal<T: ExactScalar>(v: &T) -> String {
    v.to_string()
}

/// Parse the canonical decimal form.
pub fn from_decimal<T: ExactScalar>(s: &str) -> Result<T, Error> {
    T::from_str_radix(s, 10).map_err(|_| Error::Domain(format!("not a decimal integer: {s:?}")))
}
