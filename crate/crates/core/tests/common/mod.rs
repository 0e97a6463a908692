#![allow(dead_code)]

use std::sync::Arc;

use symvar_core::catalog::fixture;
use symvar_core::fan::CochamberFan;
use symvar_core::involution::{OmegaHSpec, SphericalLatticeFamily};
use symvar_core::Int;

pub fn z(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| Int::from(x)).collect()
}

pub fn family(name: &str, spec: OmegaHSpec) -> Arc<SphericalLatticeFamily> {
    fixture(name).expect("known fixture").family(spec).expect("valid fixture")
}

pub fn wonderful(name: &str, spec: OmegaHSpec) -> Arc<CochamberFan> {
    Arc::new(CochamberFan::wonderful(family(name, spec)))
}

/// A2 with σ = −id and the adjoint lattice, cochamber cut along [1,1].
pub fn subdivided() -> Arc<CochamberFan> {
    let fam = family("A2-minus-id", OmegaHSpec::OmegaAd);
    Arc::new(
        CochamberFan::new(fam, vec![z(&[1, 0]), z(&[1, 1]), z(&[0, 1])], vec![vec![0, 1], vec![1, 2]])
            .expect("valid subdivision"),
    )
}
