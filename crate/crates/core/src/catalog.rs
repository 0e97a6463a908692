//! Shipped involution data.

use std::sync::Arc;

use crate::error::Error;
use crate::involution::{InvolutionDatum, OmegaHSpec, RestrictedRootSystem, SphericalLatticeFamily};
use crate::rootcore::RootSystem;

/// A catalog entry: Cartan type, fixed nodes `Δ₀`, diagram automorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub name: &'static str,
    pub cartan: &'static str,
    pub delta0: &'static [usize],
    pub diagram_perm: &'static [usize],
}

pub const FIXTURES: &[Fixture] = &[
    Fixture {
        name: "A1-inner",
        cartan: "A1",
        delta0: &[],
        diagram_perm: &[0],
    },
    Fixture {
        name: "A1xA1-swap",
        cartan: "A1xA1",
        delta0: &[],
        diagram_perm: &[1, 0],
    },
    Fixture {
        name: "A2xA2-swap",
        cartan: "A2xA2",
        delta0: &[],
        diagram_perm: &[2, 3, 0, 1],
    },
    Fixture {
        name: "A2-minus-id",
        cartan: "A2",
        delta0: &[],
        diagram_perm: &[0, 1],
    },
    Fixture {
        name: "A2-minus-psi",
        cartan: "A2",
        delta0: &[],
        diagram_perm: &[1, 0],
    },
    // black middle node with the outer nodes exchanged
    Fixture {
        name: "A3-delta0-2",
        cartan: "A3",
        delta0: &[1],
        diagram_perm: &[2, 1, 0],
    },
];

impl Fixture {
    pub fn involution(&self) -> Result<InvolutionDatum, Error> {
        let rs = RootSystem::from_type(self.cartan)?;
        Ok(InvolutionDatum::from_satake(rs, self.delta0, self.diagram_perm)?)
    }

    pub fn family(&self, omega_h: OmegaHSpec) -> Result<Arc<SphericalLatticeFamily>, Error> {
        let rr = RestrictedRootSystem::new(self.involution()?)?;
        Ok(Arc::new(SphericalLatticeFamily::new(rr, omega_h)?))
    }
}

/// Looks up a fixture by name; a leading `fixture:` scheme is accepted.
pub fn fixture(name: &str) -> Option<&'static Fixture> {
    let name = name.strip_prefix("fixture:").unwrap_or(name);
    FIXTURES.iter().find(|f| f.name == name)
}

/// The group case `A_n × A_n` with the factors exchanged.
pub fn group_case(n: usize) -> Result<InvolutionDatum, Error> {
    let rs = RootSystem::from_type(&format!("A{n}xA{n}"))?;
    let perm: Vec<usize> = (0..2 * n).map(|i| (i + n) % (2 * n)).collect();
    Ok(InvolutionDatum::from_satake(rs, &[], &perm)?)
}
