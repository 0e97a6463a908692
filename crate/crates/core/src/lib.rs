//! Exact combinatorics of symmetric varieties.
//!
//! Root systems and Weyl groups, involutions and their restricted root
//! systems, the spherical weight lattices, fans over the Weyl cochamber,
//! piecewise-linear line-bundle classes with their section and invariant
//! counts, and the combinatorial model of the GIT quotient.
//!
//! All arithmetic is exact. The linear algebra in [`linalg`] is generic over
//! the scalar; the domain types use [`Int`] and [`Rat`].

pub mod catalog;
pub mod error;
pub mod fan;
pub mod git;
pub mod involution;
pub mod linalg;
pub mod rootcore;
pub mod sections;

use num_bigint::BigInt;
use num_rational::BigRational;

pub type Int = BigInt;
pub type Rat = BigRational;
pub type IntMatrix = linalg::Matrix<Int>;
pub type RatMatrix = linalg::Matrix<Rat>;
pub type IntLattice = linalg::Lattice<Int>;

pub use error::{Error, ErrorKind};
