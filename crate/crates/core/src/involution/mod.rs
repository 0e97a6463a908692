//! Involutions of root data, restricted root systems and spherical lattices.

mod datum;
mod lattices;
mod restricted;

pub use datum::{exceptional_roots, InvolutionDatum};
pub use lattices::{component_group, vust_test, ComponentGroup, OmegaHSpec, SphericalLatticeFamily};
pub use restricted::{restricted_root_system, RestrictedRootSystem};
