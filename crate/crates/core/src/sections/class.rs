use std::sync::Arc;

use num_traits::{Signed, Zero};

use crate::error::SectionError;
use crate::fan::CochamberFan;
use crate::linalg::{integral_vec, to_ratio};
use crate::rootcore::Weight;
use crate::{Int, Rat};

/// A piecewise-linear class: one weight `λ_τ ∈ Ω_H` per maximal cone,
/// agreeing on shared rays.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SPicClass {
    fan: Arc<CochamberFan>,
    values: Vec<Weight>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Positivity {
    Ample,
    GloballyGenerated,
    Neither,
}

impl Positivity {
    pub fn as_str(self) -> &'static str {
        match self {
            Positivity::Ample => "ample",
            Positivity::GloballyGenerated => "globally_generated",
            Positivity::Neither => "neither",
        }
    }
}

impl SPicClass {
    pub fn per_cone(fan: Arc<CochamberFan>, values: Vec<Weight>) -> Result<Self, SectionError> {
        let cones = fan.cones();
        if values.len() != cones.len() {
            return Err(SectionError::WrongConeCount {
                expected: cones.len(),
                got: values.len(),
            });
        }
        let omega_h = fan.family().omega_h();
        for (c, v) in values.iter().enumerate() {
            if v.len() != omega_h.ambient_dim() || !omega_h.contains(v) {
                return Err(SectionError::NotInLattice(c));
            }
        }
        for a in 0..cones.len() {
            for b in a + 1..cones.len() {
                for r in cones[a].iter().filter(|r| cones[b].contains(r)) {
                    let v = &fan.rays()[*r];
                    if fan.pair(&values[a], v) != fan.pair(&values[b], v) {
                        return Err(SectionError::Incompatible(a, b, *r));
                    }
                }
            }
        }
        Ok(SPicClass { fan, values })
    }

    pub fn constant(fan: Arc<CochamberFan>, value: Weight) -> Result<Self, SectionError> {
        let n = fan.cones().len();
        Self::per_cone(fan, vec![value; n])
    }

    /// The class of the boundary divisor of a ray: on each cone containing
    /// the ray, the element of `Ω_H` equal to one on it and zero on the
    /// other rays of the cone; zero elsewhere.
    pub fn boundary(fan: Arc<CochamberFan>, ray: usize) -> Result<Self, SectionError> {
        fan.require_smooth()?;
        if ray >= fan.rays().len() {
            return Err(SectionError::UnknownRay(ray));
        }
        let fam = fan.family().clone();
        let n = fam.omega_h().ambient_dim();
        let values = fan
            .cones()
            .iter()
            .map(|cone| {
                let Some(pos) = cone.iter().position(|&r| r == ray) else {
                    return vec![Int::zero(); n];
                };
                let m = to_ratio(&fan.ray_matrix(cone));
                let mut e = vec![Rat::zero(); cone.len()];
                e[pos] = Rat::from_integer(1.into());
                let x = m.solve(&e).expect("cone rays are independent");
                let x = integral_vec(&x).expect("smooth cone has a unimodular ray matrix");
                fam.omega_h().from_coordinates(&x)
            })
            .collect();
        Self::per_cone(fan, values)
    }

    pub fn fan(&self) -> &Arc<CochamberFan> {
        &self.fan
    }

    pub fn values(&self) -> &[Weight] {
        &self.values
    }

    /// `λ̲(v)` at a ray, read off any cone containing it.
    pub fn value_at_ray(&self, ray: usize) -> Rat {
        let c = self
            .fan
            .cones()
            .iter()
            .position(|c| c.contains(&ray))
            .expect("every ray lies in a cone");
        self.fan.pair(&self.values[c], &self.fan.rays()[ray])
    }

    pub fn scale(&self, n: &Int) -> Self {
        SPicClass {
            fan: self.fan.clone(),
            values: self
                .values
                .iter()
                .map(|v| v.iter().map(|x| x * n).collect())
                .collect(),
        }
    }

    pub fn add(&self, other: &SPicClass) -> Self {
        assert!(Arc::ptr_eq(&self.fan, &other.fan) || self.fan == other.fan);
        SPicClass {
            fan: self.fan.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
                .collect(),
        }
    }

    /// Ample iff every `λ_τ` is strictly dominant and `λ_τ < λ_τ'` at each
    /// ray of `τ'` outside `τ`; globally generated when the weak versions hold.
    pub fn classify_positivity(&self) -> Result<Positivity, SectionError> {
        self.fan.require_smooth()?;
        self.fan.require_complete()?;
        let rr = self.fan.family().restricted();
        let mut strict = true;
        for v in &self.values {
            let c = rr.fundamental_coords(v).expect("class values lie in Ω_H");
            if c.iter().any(Signed::is_negative) {
                return Ok(Positivity::Neither);
            }
            if c.iter().any(Zero::is_zero) {
                strict = false;
            }
        }
        let cones = self.fan.cones();
        for (a, ca) in cones.iter().enumerate() {
            for (b, cb) in cones.iter().enumerate() {
                if a == b {
                    continue;
                }
                for r in cb.iter().filter(|r| !ca.contains(r)) {
                    let v = &self.fan.rays()[*r];
                    let lhs = self.fan.pair(&self.values[a], v);
                    let rhs = self.fan.pair(&self.values[b], v);
                    if lhs > rhs {
                        return Ok(Positivity::Neither);
                    }
                    if lhs == rhs {
                        strict = false;
                    }
                }
            }
        }
        Ok(if strict {
            Positivity::Ample
        } else {
            Positivity::GloballyGenerated
        })
    }

    /// Whether `μ ≤ λ̲` on `C`, checked at every ray of every cone.
    pub fn bounds(&self, mu: &[Int]) -> bool {
        (0..self.fan.rays().len()).all(|r| self.fan.pair(mu, &self.fan.rays()[r]) <= self.value_at_ray(r))
    }
}

pub fn boundary_divisor_class(fan: Arc<CochamberFan>, ray: usize) -> Result<SPicClass, SectionError> {
    SPicClass::boundary(fan, ray)
}

pub fn classify_positivity(cls: &SPicClass) -> Result<Positivity, SectionError> {
    cls.classify_positivity()
}
