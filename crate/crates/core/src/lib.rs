//! Signed partition calculus over super-spaces `C^n` with a twisted
//! involution: the maps `T_π`, bounded partition categories, sampled
//! super-orthogonal groups and Schur–Weyl comparisons.
//!
//! Numerical code is generic over `nalgebra::RealField` and the exact code
//! over [`scalar::Field`] / [`scalar::ExactRing`]; the aliases below fix the
//! common choices.

pub mod category;
pub mod error;
pub mod groups;
pub mod homspace;
pub mod intertwiner;
pub mod linalg;
pub mod oracle;
pub mod partition;
pub mod scalar;
pub mod superspace;
pub mod verify;

pub use category::PartitionCategory;
pub use error::{Error, Result};
pub use groups::{CMatrix, Family, GroupElement};
pub use homspace::{HomReport, Verdict};
pub use intertwiner::{SignedSparseMap, SparseMap};
pub use linalg::Matrix;
pub use partition::{Partition, PartitionClass};
pub use superspace::{Sign, SuperSpace};

pub type Rational = num_rational::BigRational;
pub type RationalMatrix = Matrix<Rational>;
pub type IntegerMatrix = Matrix<num_bigint::BigInt>;

pub type CMatrixF64 = CMatrix<f64>;
pub type CMatrixF32 = CMatrix<f32>;
pub type GroupElementF64 = GroupElement<f64>;
pub type GroupElementF32 = GroupElement<f32>;
