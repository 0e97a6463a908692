use std::collections::BTreeSet;

use super::{CochamberFan, Face};
use crate::error::FanError;
use crate::Int;

/// One face of a complete fan, annotated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceInfo {
    pub rays: Face,
    pub dim: usize,
    /// Codimension of the corresponding orbit (equal to `dim`).
    pub orbit_codim: usize,
    pub support: Vec<usize>,
    /// Number of `W̃`-translates of the face in the full fan.
    pub translates: usize,
    /// Indices (into the face list) of the faces one dimension up containing it.
    pub covered_by: Vec<usize>,
}

/// Face lattice of a complete fan with supports and `W̃`-translate counts.
pub fn orbit_poset(fan: &CochamberFan, limit: usize) -> Result<Vec<FaceInfo>, FanError> {
    fan.require_complete()?;
    let w = fan.family().restricted().weyl_group();
    let faces = fan.faces();
    let mut out = Vec::with_capacity(faces.len());
    for f in faces {
        let set: BTreeSet<Vec<Int>> = f.iter().map(|&r| fan.rays()[r].clone()).collect();
        let translates = w.set_orbit(&set, limit)?.len();
        let covered_by = faces
            .iter()
            .enumerate()
            .filter(|(_, g)| g.len() == f.len() + 1 && f.iter().all(|r| g.contains(r)))
            .map(|(k, _)| k)
            .collect();
        out.push(FaceInfo {
            rays: f.clone(),
            dim: f.len(),
            orbit_codim: f.len(),
            support: fan.face_support(f),
            translates,
            covered_by,
        });
    }
    Ok(out)
}
