//! Row-strict tableaux, Springer inversions, toric charts on the Hessenberg
//! cells of Springer fibers, and the Poincaré polynomials they assemble into.
//!
//! Polynomials are generic over their coefficient ring; the crate root fixes
//! the concrete aliases used throughout.

pub mod arith;
pub mod error;
pub mod frame;
pub mod inversions;
pub mod partition;
pub mod poincare;
pub mod poly;
pub mod tableau;
pub mod toric;
pub mod verify;

pub use error::{Error, Result};
pub use frame::{IjkDecomposition, ToricFrame};
pub use inversions::{PairKind, PairSet};
pub use partition::Partition;
pub use poincare::{Equivariant, ExtendedCell, ShiftedPolynomial, SmallerGroupForm};
pub use poly::{Coefficient, Polynomial};
pub use tableau::{enumerate_rst, RowStrictTableau};
pub use toric::{ComponentIndex, CTuple, ExponentVector, GroupElement, InvariantDecomposition};
pub use verify::VerificationReport;

/// Poincaré polynomials with machine-integer coefficients.
pub type IntPolynomial = Polynomial<u64>;

/// Poincaré polynomials split by character of `Z/n`.
pub type EquivariantPolynomial = Equivariant<u64>;
