use std::collections::HashSet;

use num_traits::{One, Signed, Zero};

use super::datum::InvolutionDatum;
use crate::error::InvolutionError;
use crate::linalg::{integral_vec, ratio_vec, to_ratio, vec_sub, Matrix};
use crate::rootcore::{ReflectionGroup, Weight};
use crate::{Int, IntMatrix, Rat, RatMatrix};

/// The restricted root system `Φ̃ = {α − σα : α ∈ Φ₁}`.
///
/// Weights are in fundamental-weight coordinates of the ambient system.
/// Restricted roots are additionally available in `Δ̃`-coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedRootSystem {
    inv: InvolutionDatum,
    roots: Vec<Weight>,
    positive: Vec<Weight>,
    simple: Vec<Weight>,
    simple_of_node: Vec<Option<usize>>,
    cartan: IntMatrix,
    reduced: bool,
    doubled: Vec<bool>,
    fundamental: Vec<Weight>,
}

impl RestrictedRootSystem {
    pub fn new(inv: InvolutionDatum) -> Result<Self, InvolutionError> {
        let rs = inv.root_system().clone();
        let n = rs.rank();
        if inv.delta1().is_empty() {
            return Err(InvolutionError::TrivialRestriction);
        }
        let tilde = |root: &[Int]| -> Weight {
            let w = rs.to_weight(root);
            vec_sub(&w, &inv.apply(&w))
        };

        let mut simple: Vec<Weight> = Vec::new();
        let mut simple_of_node = vec![None; n];
        for &i in inv.delta1() {
            let mut e = vec![Int::zero(); n];
            e[i] = Int::one();
            let t = tilde(&e);
            let idx = match simple.iter().position(|s| *s == t) {
                Some(k) => k,
                None => {
                    simple.push(t);
                    simple.len() - 1
                }
            };
            simple_of_node[i] = Some(idx);
        }
        let ell = simple.len();
        let anti_dim = n - to_ratio(&inv.sigma().add(&Matrix::identity(n))).rank();
        if anti_dim != ell {
            return Err(InvolutionError::NotARootSystem(format!(
                "{ell} simple restricted roots but the (-1)-eigenspace has dimension {anti_dim}"
            )));
        }
        let basis_cols = to_ratio(&Matrix::from_rows(simple.clone()).transpose());
        if basis_cols.rank() != ell {
            return Err(InvolutionError::NotARootSystem(
                "simple restricted roots are linearly dependent".into(),
            ));
        }

        let mut positive: Vec<Weight> = Vec::new();
        let mut seen = HashSet::new();
        for alpha in rs.positive_roots() {
            if !inv.is_moved(alpha) {
                continue;
            }
            let t = tilde(alpha);
            if seen.insert(t.clone()) {
                positive.push(t);
            }
        }
        let coords_of = |w: &Weight| -> Option<Vec<Int>> {
            let c = basis_cols.solve(&ratio_vec(w))?;
            integral_vec(&c)
        };
        let mut keyed = Vec::with_capacity(positive.len());
        for p in &positive {
            let c = coords_of(p).filter(|c| c.iter().all(|x| !x.is_negative())).ok_or_else(|| {
                InvolutionError::NotARootSystem(
                    "a positive restricted root is not a nonnegative integer combination of the simple ones".into(),
                )
            })?;
            keyed.push((c, p.clone()));
        }
        keyed.sort_by(|(x, _), (y, _)| {
            let hx: Int = x.iter().sum();
            let hy: Int = y.iter().sum();
            hx.cmp(&hy).then_with(|| y.cmp(x))
        });
        let positive: Vec<Weight> = keyed.into_iter().map(|(_, p)| p).collect();
        let mut roots = positive.clone();
        roots.extend(positive.iter().map(|w| w.iter().map(|x| -x.clone()).collect::<Vec<_>>()));
        let root_set: HashSet<&Weight> = roots.iter().collect();

        // root-system axioms: integral Cartan numbers and closure under reflections
        let gram = rs.gram().clone();
        let kappa = |x: &Weight, y: &Weight| crate::linalg::dot(&ratio_vec(x), &gram.mul_vec(&ratio_vec(y)));
        for b in &roots {
            let bb = kappa(b, b);
            for g in &roots {
                let c = Rat::from_integer(Int::from(2)) * kappa(g, b) / bb.clone();
                if !c.is_integer() {
                    return Err(InvolutionError::NotARootSystem(
                        "non-integral Cartan number between restricted roots".into(),
                    ));
                }
                let c = c.to_integer();
                let refl: Weight = g.iter().zip(b).map(|(x, y)| x.clone() - c.clone() * y.clone()).collect();
                if !root_set.contains(&refl) {
                    return Err(InvolutionError::NotARootSystem(
                        "restricted roots are not closed under their reflections".into(),
                    ));
                }
            }
        }

        let double = |w: &Weight| w.iter().map(|x| x.clone() * Int::from(2)).collect::<Vec<_>>();
        let reduced = !roots.iter().any(|r| root_set.contains(&double(r)));
        let doubled: Vec<bool> = simple.iter().map(|s| root_set.contains(&double(s))).collect();

        let two = Rat::from_integer(Int::from(2));
        let cartan = Matrix::from_fn(ell, ell, |i, j| {
            (two.clone() * kappa(&simple[j], &simple[i]) / kappa(&simple[i], &simple[i])).to_integer()
        });

        // ω̃_i ∈ span(Φ̃) with ⟨ω̃_i, β_j^∨⟩ = δ_ij, β_j = 2α̃_j when that is a root
        let beta: Vec<Weight> = simple
            .iter()
            .zip(&doubled)
            .map(|(s, &d)| if d { double(s) } else { s.clone() })
            .collect();
        let pairing = Matrix::from_fn(ell, ell, |k, j| {
            two.clone() * kappa(&simple[k], &beta[j]) / kappa(&beta[j], &beta[j])
        });
        let coeffs = pairing
            .inverse()
            .expect("pairing of simple restricted roots is nondegenerate");
        let mut fundamental = Vec::with_capacity(ell);
        for i in 0..ell {
            // row i of the inverse gives ω̃_i in Δ̃-coordinates
            let w: Vec<Rat> = basis_cols.mul_vec(coeffs.row(i));
            let w = integral_vec(&w).ok_or_else(|| {
                InvolutionError::NotARootSystem(format!(
                    "restricted fundamental weight {i} does not lie in the weight lattice"
                ))
            })?;
            fundamental.push(w);
        }

        Ok(RestrictedRootSystem {
            inv,
            roots,
            positive,
            simple,
            simple_of_node,
            cartan,
            reduced,
            doubled,
            fundamental,
        })
    }

    pub fn involution(&self) -> &InvolutionDatum {
        &self.inv
    }

    /// Restricted rank `ℓ`.
    pub fn rank(&self) -> usize {
        self.simple.len()
    }

    /// All restricted roots: positive ones sorted by height, then negatives.
    pub fn roots(&self) -> &[Weight] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive
    }

    /// `Δ̃`, ordered by the smallest simple root restricting to each element.
    pub fn simple(&self) -> &[Weight] {
        &self.simple
    }

    /// Index in `Δ̃` of the restriction of simple root `i` (`None` on `Δ₀`).
    pub fn simple_of_node(&self, i: usize) -> Option<usize> {
        self.simple_of_node[i]
    }

    /// Simple roots of `Δ₁` restricting to `α̃_j`.
    pub fn nodes_of_simple(&self, j: usize) -> Vec<usize> {
        (0..self.simple_of_node.len())
            .filter(|&i| self.simple_of_node[i] == Some(j))
            .collect()
    }

    /// `C_ij = ⟨α̃_j, α̃_i^∨⟩`.
    pub fn cartan(&self) -> &IntMatrix {
        &self.cartan
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// Whether `2α̃_j` is also a restricted root.
    pub fn is_doubled(&self, j: usize) -> bool {
        self.doubled[j]
    }

    pub fn fundamental_weights(&self) -> &[Weight] {
        &self.fundamental
    }

    /// `Σ_i ω̃_i`.
    pub fn rho(&self) -> Weight {
        let n = self.inv.rank();
        self.fundamental.iter().fold(vec![Int::zero(); n], |acc, w| {
            acc.iter().zip(w).map(|(a, b)| a.clone() + b.clone()).collect()
        })
    }

    /// Coordinates in `Δ̃` of a weight in its span, if it lies there.
    pub fn simple_coords(&self, w: &[Int]) -> Option<Vec<Rat>> {
        let cols = to_ratio(&Matrix::from_rows(self.simple.clone()).transpose());
        let x = cols.solve(&ratio_vec(w))?;
        (cols.mul_vec(&x) == ratio_vec(w)).then_some(x)
    }

    /// Coordinates in the `ω̃` basis of a weight in the span of `Φ̃`.
    pub fn fundamental_coords(&self, w: &[Int]) -> Option<Vec<Rat>> {
        let cols = to_ratio(&Matrix::from_rows(self.fundamental.clone()).transpose());
        let x = cols.solve(&ratio_vec(w))?;
        (cols.mul_vec(&x) == ratio_vec(w)).then_some(x)
    }

    pub fn from_fundamental_coords(&self, c: &[Int]) -> Weight {
        Matrix::from_rows(self.fundamental.clone()).vec_mul(c)
    }

    pub fn from_simple_coords(&self, c: &[Int]) -> Weight {
        Matrix::from_rows(self.simple.clone()).vec_mul(c)
    }

    /// Cartan matrix of the reduced system with simple roots `β_j`
    /// (`2α̃_j` when doubled): the `ω̃` are its fundamental weights.
    pub fn beta_cartan(&self) -> RatMatrix {
        let ell = self.rank();
        let scale = |j: usize| if self.doubled[j] { Rat::from_integer(Int::from(2)) } else { Rat::one() };
        // ⟨β_j, β_i^∨⟩ = (s_j / s_i) ⟨α̃_j, α̃_i^∨⟩
        Matrix::from_fn(ell, ell, |i, j| {
            Rat::from_integer(self.cartan[(i, j)].clone()) * scale(j) / scale(i)
        })
    }

    /// Weight dominant for `Φ̃` (nonnegative ω̃-coordinates).
    pub fn is_dominant(&self, w: &[Int]) -> bool {
        self.fundamental_coords(w)
            .is_some_and(|c| c.iter().all(|x| !x.is_negative()))
    }

    /// Reflections `s_α̃` acting on covectors in `Δ̃`-pairing coordinates
    /// (`p_i = ⟨α̃_i, v⟩`).
    pub fn covector_reflections(&self) -> Vec<IntMatrix> {
        let ell = self.rank();
        (0..ell)
            .map(|j| {
                Matrix::from_fn(ell, ell, |r, c| {
                    let id = if r == c { Int::one() } else { Int::zero() };
                    if c == j {
                        id - self.cartan[(j, r)].clone()
                    } else {
                        id
                    }
                })
            })
            .collect()
    }

    /// Reflections `s_α̃` acting on `Δ̃`-coordinates of weights.
    pub fn weight_reflections(&self) -> Vec<IntMatrix> {
        self.covector_reflections().iter().map(Matrix::transpose).collect()
    }

    /// `W̃` acting on covectors in `Δ̃`-pairing coordinates.
    pub fn weyl_group(&self) -> ReflectionGroup {
        ReflectionGroup::new(self.rank(), self.covector_reflections())
    }
}

pub fn restricted_root_system(inv: &InvolutionDatum) -> Result<RestrictedRootSystem, InvolutionError> {
    RestrictedRootSystem::new(inv.clone())
}
