//! Exact counting of 0/1 matrices with a fixed number of ones per column
//! and no all-zero row, together with the brute-force enumerators and the
//! identity-verification harness that cross-check the closed forms.
//!
//! The counting core ([`arith`], [`counting`]) is generic over the scalar
//! type through [`scalar::ExactScalar`]; [`ExactInt`] is the
//! arbitrary-precision instantiation everything user-facing runs on.

pub mod arith;
pub mod bijection;
pub mod compose;
pub mod counting;
pub mod enumerate;
pub mod error;
pub mod matrix;
pub mod scalar;
pub mod shape;
pub mod verify;

/// Canonical exact integer: arbitrary precision, signed, serialized as
/// plain decimal text.
pub type ExactInt = num_bigint::BigInt;

pub use crate::error::Error;
pub use crate::scalar::ExactScalar;
pub use crate::shape::{MatrixShape, ShapeClass};
