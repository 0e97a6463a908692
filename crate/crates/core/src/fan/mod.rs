//! Fans subdividing the Weyl cochamber of the restricted root system.
//!
//! Covectors on `Λ_{S_H} ⊗ Q` are recorded by their pairings with the simple
//! restricted roots, `p_i = ⟨α̃_i, v⟩`, so the cochamber `C` is the
//! nonnegative orthant. Such `p` is integral on `Ω_H` exactly when
//! `P p ∈ Z^ℓ`, where the rows of `P` are a basis of `Ω_H` in
//! `Δ̃`-coordinates; `P p` are the lattice coordinates of the covector.

mod geometry;
mod poset;

use std::sync::Arc;

use log::warn;
use num_traits::{One, Signed, Zero};

use crate::error::FanError;
use crate::involution::SphericalLatticeFamily;
use crate::linalg::{common_denominator, content, dot, integral_vec, ratio_vec, smith_form, Matrix};
use crate::{Int, IntMatrix, Rat, RatMatrix};

pub use geometry::{meet_properly, orthant_share};
pub use poset::{orbit_poset, FaceInfo};

/// Sorted ray indices of a face.
pub type Face = Vec<usize>;

/// A validated fan of simplicial cones inside the cochamber.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CochamberFan {
    family: Arc<SphericalLatticeFamily>,
    lattice_basis: RatMatrix,
    rays: Vec<Vec<Int>>,
    ray_lattice_coords: Vec<Vec<Int>>,
    cones: Vec<Face>,
    faces: Vec<Face>,
    complete: bool,
}

impl CochamberFan {
    /// Validates rays (pairing coordinates) and maximal cones (ray indices).
    ///
    /// Non-primitive rays are replaced by the primitive lattice vector on
    /// the same line, with a warning.
    pub fn new(
        family: Arc<SphericalLatticeFamily>,
        rays: Vec<Vec<Int>>,
        cones: Vec<Vec<usize>>,
    ) -> Result<Self, FanError> {
        let ell = family.restricted().rank();
        let lattice_basis = family.omega_h_simple_coords();
        let mut prim = Vec::with_capacity(rays.len());
        let mut lat = Vec::with_capacity(rays.len());
        for (k, r) in rays.iter().enumerate() {
            if r.len() != ell {
                return Err(FanError::WrongLength {
                    expected: ell,
                    got: r.len(),
                });
            }
            if r.iter().all(Zero::is_zero) {
                return Err(FanError::ZeroRay(k));
            }
            if r.iter().any(Signed::is_negative) {
                return Err(FanError::OutsideCochamber(k));
            }
            let l = integral_vec(&lattice_basis.mul_vec(&ratio_vec(r))).ok_or(FanError::NotIntegral(k))?;
            let g = content(&l);
            if !g.is_one() {
                warn!("ray {k} is divisible by {g} in the lattice; using its primitive vector");
            }
            let l: Vec<Int> = l.iter().map(|x| x / &g).collect();
            let p: Vec<Int> = r.iter().map(|x| x / &g).collect();
            if let Some(j) = prim.iter().position(|q| *q == p) {
                return Err(FanError::DuplicateRay(j, k));
            }
            prim.push(p);
            lat.push(l);
        }

        let mut sorted_cones: Vec<Face> = Vec::with_capacity(cones.len());
        for (c, cone) in cones.iter().enumerate() {
            let mut s = cone.clone();
            s.sort_unstable();
            s.dedup();
            if s.len() != cone.len() {
                return Err(FanError::BadCone(c, "repeated ray index".into()));
            }
            if let Some(&bad) = s.iter().find(|&&i| i >= prim.len()) {
                return Err(FanError::BadCone(c, format!("ray index {bad} out of range")));
            }
            if s.len() != ell {
                return Err(FanError::BadCone(
                    c,
                    format!("maximal cones must have {ell} rays (only simplicial cones are supported)"),
                ));
            }
            let rs: Vec<Vec<Int>> = s.iter().map(|&i| prim[i].clone()).collect();
            if !geometry::independent(&rs) {
                return Err(FanError::BadCone(c, "rays are linearly dependent".into()));
            }
            if let Some(prev) = sorted_cones.iter().position(|p| *p == s) {
                return Err(FanError::BadCone(c, format!("repeats cone {prev}")));
            }
            sorted_cones.push(s);
        }
        if let Some(unused) = (0..prim.len()).find(|i| !sorted_cones.iter().any(|c| c.contains(i))) {
            return Err(FanError::UnusedRay(unused));
        }
        for a in 0..sorted_cones.len() {
            for b in a + 1..sorted_cones.len() {
                let ra: Vec<Vec<Int>> = sorted_cones[a].iter().map(|&i| prim[i].clone()).collect();
                let rb: Vec<Vec<Int>> = sorted_cones[b].iter().map(|&i| prim[i].clone()).collect();
                if !meet_properly(&ra, &rb) {
                    return Err(FanError::ImproperIntersection(a, b));
                }
            }
        }
        let share: Rat = sorted_cones
            .iter()
            .map(|c| orthant_share(&c.iter().map(|&i| prim[i].clone()).collect::<Vec<_>>()))
            .fold(Rat::zero(), |a, b| a + b);
        let complete = share == Rat::one();

        let mut faces: Vec<Face> = Vec::new();
        for c in &sorted_cones {
            for mask in 0u32..(1 << c.len()) {
                let f: Face = (0..c.len()).filter(|b| mask & (1 << b) != 0).map(|b| c[b]).collect();
                faces.push(f);
            }
        }
        faces.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
        faces.dedup();

        Ok(CochamberFan {
            family,
            lattice_basis,
            rays: prim,
            ray_lattice_coords: lat,
            cones: sorted_cones,
            faces,
            complete,
        })
    }

    /// The fan with the single cone `C`, rays the primitive lattice vectors
    /// on the edges of `C`.
    pub fn wonderful(family: Arc<SphericalLatticeFamily>) -> Self {
        let ell = family.restricted().rank();
        let basis = family.omega_h_simple_coords();
        let rays: Vec<Vec<Int>> = (0..ell)
            .map(|j| {
                // smallest t > 0 with t·P e_j integral
                let col = basis.col(j);
                let den = common_denominator(&col);
                let num: Vec<Int> = col.iter().map(|x| (x * Rat::from_integer(den.clone())).to_integer()).collect();
                let t = Rat::new(den, content(&num));
                let mut e = vec![Int::zero(); ell];
                e[j] = t.to_integer();
                debug_assert!(t.is_integer());
                e
            })
            .collect();
        Self::new(family, rays, vec![(0..ell).collect()]).expect("the cochamber is a valid fan")
    }

    pub fn family(&self) -> &Arc<SphericalLatticeFamily> {
        &self.family
    }

    /// Restricted rank `ℓ`.
    pub fn dim(&self) -> usize {
        self.family.restricted().rank()
    }

    /// Primitive rays in `Δ̃`-pairing coordinates.
    pub fn rays(&self) -> &[Vec<Int>] {
        &self.rays
    }

    /// Ray coordinates in the basis dual to the basis of `Ω_H`.
    pub fn ray_lattice_coords(&self) -> &[Vec<Int>] {
        &self.ray_lattice_coords
    }

    /// Maximal cones as sorted ray-index lists.
    pub fn cones(&self) -> &[Face] {
        &self.cones
    }

    /// All faces (cones of the fan), sorted by dimension then
    /// lexicographically; the zero face comes first.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Every maximal cone is spanned by part of a lattice basis.
    pub fn is_smooth(&self) -> bool {
        self.cones.iter().all(|c| {
            let m = Matrix::from_rows(c.iter().map(|&i| self.ray_lattice_coords[i].clone()).collect());
            smith_form(&m).diagonal.iter().all(One::is_one)
        })
    }

    pub fn require_complete(&self) -> Result<(), FanError> {
        if self.complete {
            Ok(())
        } else {
            Err(FanError::Incomplete)
        }
    }

    pub fn require_smooth(&self) -> Result<(), FanError> {
        if self.is_smooth() {
            Ok(())
        } else {
            Err(FanError::NotSmooth)
        }
    }

    /// Normalizes and checks a face given by ray indices.
    pub fn face(&self, rays: &[usize]) -> Result<Face, FanError> {
        let mut f = rays.to_vec();
        f.sort_unstable();
        f.dedup();
        if self.faces.binary_search_by(|x| x.len().cmp(&f.len()).then_with(|| x.cmp(&f))).is_ok() {
            Ok(f)
        } else {
            Err(FanError::UnknownFace(f))
        }
    }

    /// `{α̃_i : ⟨α̃_i, v⟩ > 0 for some ray v of the face}` as restricted indices.
    pub fn face_support(&self, face: &[usize]) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| face.iter().any(|&r| self.rays[r][i].is_positive()))
            .collect()
    }

    /// Maximal cones containing the face, in order.
    pub fn cones_containing(&self, face: &[usize]) -> Vec<usize> {
        (0..self.cones.len())
            .filter(|&c| face.iter().all(|r| self.cones[c].contains(r)))
            .collect()
    }

    /// `⟨μ, v⟩` for a weight `μ` in the span of the restricted roots and a
    /// covector in pairing coordinates.
    pub fn pair(&self, weight: &[Int], covector: &[Int]) -> Rat {
        let t = self
            .family
            .restricted()
            .simple_coords(weight)
            .expect("weight lies in the span of the restricted roots");
        dot(&t, &ratio_vec(covector))
    }

    /// Basis of `Ω_H` in `Δ̃`-coordinates (rows).
    pub fn lattice_basis(&self) -> &RatMatrix {
        &self.lattice_basis
    }

    /// Matrix whose rows are the lattice coordinates of the given rays.
    pub fn ray_matrix(&self, rays: &[usize]) -> IntMatrix {
        Matrix::from_rows_with_width(
            rays.iter().map(|&i| self.ray_lattice_coords[i].clone()).collect(),
            Some(self.dim()),
        )
    }
}

pub fn build_cochamber_fan(
    rays: Vec<Vec<Int>>,
    max_cones: Vec<Vec<usize>>,
    family: Arc<SphericalLatticeFamily>,
) -> Result<CochamberFan, FanError> {
    CochamberFan::new(family, rays, max_cones)
}

pub fn wonderful_fan(family: Arc<SphericalLatticeFamily>) -> CochamberFan {
    CochamberFan::wonderful(family)
}

pub fn is_smooth(fan: &CochamberFan) -> bool {
    fan.is_smooth()
}

pub fn face_support(fan: &CochamberFan, face: &[usize]) -> Vec<usize> {
    fan.face_support(face)
}
