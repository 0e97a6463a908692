//! Piecewise-linear spherical line-bundle classes on a fan and their
//! sections, invariants and semiinvariants.

mod class;
mod toroidal;
mod wonderful;

pub use class::{boundary_divisor_class, classify_positivity, Positivity, SPicClass};
pub use toroidal::{
    enumerate_a, invariant_basis_toroidal, section_decomposition, toroidal_identity_holds, SectionReport,
};
pub use wonderful::{
    flag_invariant_data, invariant_basis_wonderful, invariant_dim_wonderful, non_exceptional_simple,
    section_dim_wonderful, semiinvariant_basis_wonderful, FlagInvariantData, MonomialBasisElement,
};
