//! Root systems, weights and Weyl groups.

mod cartan;
mod reflection;
mod system;

pub use cartan::{irreducible_types, CartanDatum};
pub use reflection::{ReflectionGroup, DEFAULT_ENUMERATION_LIMIT};
pub use system::{compositions_up_to, decompose, leq_sigma, RootSystem, Weight};
