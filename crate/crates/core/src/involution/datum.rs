use std::collections::HashSet;

use num_traits::{One, Signed, Zero};

use crate::error::InvolutionError;
use crate::linalg::{integral_vec, ratio_vec, to_ratio, Matrix};
use crate::rootcore::{RootSystem, Weight};
use crate::{Int, IntMatrix};

/// An involution of the weight lattice compatible with the root system.
///
/// `sigma` acts on fundamental-weight coordinates as `λ ↦ σ λ` (column
/// vectors). The fixed simple roots `Δ₀`, their complement `Δ₁`, the induced
/// involution `σ̄` of `Δ₁` and the exceptional roots are derived and checked
/// on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutionDatum {
    rs: RootSystem,
    sigma: IntMatrix,
    delta0: Vec<usize>,
    delta1: Vec<usize>,
    sigma_bar: Vec<usize>,
    exceptional: Vec<usize>,
}

fn invalid(msg: impl Into<String>) -> InvolutionError {
    InvolutionError::Invalid(msg.into())
}

impl InvolutionDatum {
    /// Builds `σ = −w_{0,Δ₀} ∘ ψ` from the fixed nodes `delta0` and a
    /// diagram automorphism `diagram_perm` (node `i` ↦ `diagram_perm[i]`).
    pub fn from_satake(
        rs: RootSystem,
        delta0: &[usize],
        diagram_perm: &[usize],
    ) -> Result<Self, InvolutionError> {
        let n = rs.rank();
        if !rs.datum().is_automorphism(diagram_perm) {
            return Err(invalid("diagram permutation is not a Cartan matrix automorphism"));
        }
        let mut d0: Vec<usize> = delta0.to_vec();
        d0.sort_unstable();
        d0.dedup();
        if let Some(&bad) = d0.iter().find(|&&i| i >= n) {
            return Err(invalid(format!("delta0 node {bad} out of range")));
        }
        if d0.iter().any(|&i| !d0.contains(&diagram_perm[i])) {
            return Err(invalid("delta0 is not stable under the diagram permutation"));
        }
        let w0 = longest_parabolic(&rs, &d0);
        let psi = Matrix::from_fn(n, n, |r, c| {
            if diagram_perm[c] == r {
                Int::one()
            } else {
                Int::zero()
            }
        });
        let sigma = w0.mul(&psi).neg();
        let datum = Self::from_matrix(rs, sigma)?;
        if datum.delta0 != d0 {
            return Err(invalid(format!(
                "simple roots fixed by sigma are {:?}, not the requested delta0 {:?}",
                datum.delta0, d0
            )));
        }
        Ok(datum)
    }

    /// Validates a raw matrix on fundamental-weight coordinates.
    pub fn from_matrix(rs: RootSystem, sigma: IntMatrix) -> Result<Self, InvolutionError> {
        let n = rs.rank();
        if sigma.rows() != n || sigma.cols() != n {
            return Err(invalid(format!("sigma must be a {n}x{n} matrix")));
        }
        if sigma.mul(&sigma) != Matrix::identity(n) {
            return Err(invalid("sigma is not an involution (sigma^2 != id)"));
        }
        let root_weights: HashSet<Weight> = rs.root_weights().into_iter().collect();
        if root_weights.iter().any(|w| !root_weights.contains(&sigma.mul_vec(w))) {
            return Err(invalid("sigma does not map roots to roots"));
        }
        let s = to_ratio(&sigma);
        if s.transpose().mul(rs.gram()).mul(&s) != *rs.gram() {
            return Err(invalid("sigma is not an isometry of the invariant form"));
        }
        let img = |i: usize| -> Vec<Int> {
            let w = sigma.mul_vec(&rs.simple_root(i));
            integral_vec(&rs.to_root_coords(&ratio_vec(&w))).expect("image of a root is a root")
        };
        let delta0: Vec<usize> = (0..n).filter(|&i| sigma.mul_vec(&rs.simple_root(i)) == rs.simple_root(i)).collect();
        let delta1: Vec<usize> = (0..n).filter(|i| !delta0.contains(i)).collect();
        let in_d0 = |r: &[Int]| r.iter().enumerate().all(|(k, x)| x.is_zero() || delta0.contains(&k));
        for alpha in rs.positive_roots() {
            let w = sigma.mul_vec(&rs.to_weight(alpha));
            let image = integral_vec(&rs.to_root_coords(&ratio_vec(&w))).unwrap();
            if in_d0(alpha) {
                if image != *alpha {
                    return Err(invalid("sigma does not fix the roots spanned by delta0"));
                }
            } else if !image.iter().all(|x| !x.is_positive()) {
                return Err(invalid(
                    "sigma does not send the positive roots outside span(delta0) to negative roots",
                ));
            }
        }
        let mut sigma_bar: Vec<usize> = (0..n).collect();
        for &i in &delta1 {
            let r = img(i);
            let hits: Vec<usize> = delta1.iter().copied().filter(|&k| !r[k].is_zero()).collect();
            match hits.as_slice() {
                [k] if r[*k] == -Int::one() => sigma_bar[i] = *k,
                _ => {
                    return Err(invalid(format!(
                        "no unique simple root beta with sigma(alpha_{i}) + beta in span(delta0)"
                    )))
                }
            }
        }
        if delta1.iter().any(|&i| sigma_bar[sigma_bar[i]] != i) {
            return Err(invalid("induced map on delta1 is not an involution"));
        }
        let exceptional = delta1
            .iter()
            .copied()
            .filter(|&i| {
                let a = rs.simple_root(i);
                sigma_bar[i] != i && !rs.kappa_int(&sigma.mul_vec(&a), &a).is_zero()
            })
            .collect();
        Ok(InvolutionDatum {
            rs,
            sigma,
            delta0,
            delta1,
            sigma_bar,
            exceptional,
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn sigma(&self) -> &IntMatrix {
        &self.sigma
    }

    pub fn apply(&self, w: &[Int]) -> Weight {
        self.sigma.mul_vec(w)
    }

    pub fn delta0(&self) -> &[usize] {
        &self.delta0
    }

    pub fn delta1(&self) -> &[usize] {
        &self.delta1
    }

    /// `σ̄(α_i)` as a node index (identity on `Δ₀`).
    pub fn sigma_bar(&self, i: usize) -> usize {
        self.sigma_bar[i]
    }

    /// Simple roots `α ∈ Δ₁` with `σ̄(α) ≠ α` and `κ(σα, α) ≠ 0`.
    pub fn exceptional(&self) -> &[usize] {
        &self.exceptional
    }

    /// Whether a root (simple-root coordinates) is moved by `σ`.
    pub fn is_moved(&self, root: &[Int]) -> bool {
        root.iter()
            .enumerate()
            .any(|(k, x)| !x.is_zero() && !self.delta0.contains(&k))
    }
}

pub fn exceptional_roots(inv: &InvolutionDatum) -> &[usize] {
    inv.exceptional()
}

/// Longest element of the parabolic subgroup on `nodes`, as a matrix on
/// fundamental-weight coordinates: the unique element sending the regular
/// vector `Σ_{i∈J} ω_i` to its antidominant position.
fn longest_parabolic(rs: &RootSystem, nodes: &[usize]) -> IntMatrix {
    let n = rs.rank();
    let refl = rs.simple_reflections();
    let mut w = Matrix::identity(n);
    let mut v = vec![Int::zero(); n];
    for &i in nodes {
        v[i] = Int::one();
    }
    while let Some(&i) = nodes.iter().find(|&&i| v[i].is_positive()) {
        v = refl[i].mul_vec(&v);
        w = refl[i].mul(&w);
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| Int::from(x)).collect()
    }

    #[test]
    fn a1_inner_is_minus_identity() {
        let inv = InvolutionDatum::from_satake(RootSystem::from_type("A1").unwrap(), &[], &[0]).unwrap();
        assert_eq!(inv.sigma(), &Matrix::identity(1).neg());
        assert_eq!(inv.delta1(), &[0]);
        assert!(inv.exceptional().is_empty());
    }

    #[test]
    fn swap_and_flip() {
        let rs = RootSystem::from_type("A1xA1").unwrap();
        let inv = InvolutionDatum::from_satake(rs.clone(), &[], &[1, 0]).unwrap();
        assert_eq!(inv.apply(&rs.simple_root(0)), z(&[0, -2]));
        assert!(inv.exceptional().is_empty());

        let rs = RootSystem::from_type("A2").unwrap();
        let inv = InvolutionDatum::from_satake(rs.clone(), &[], &[1, 0]).unwrap();
        let neg = |v: Vec<Int>| v.into_iter().map(|x| -x).collect::<Vec<_>>();
        assert_eq!(inv.apply(&rs.simple_root(0)), neg(rs.simple_root(1)));
        assert_eq!(inv.apply(&rs.simple_root(1)), neg(rs.simple_root(0)));
        assert_eq!(inv.exceptional(), &[0, 1]);
        assert_eq!(inv.sigma_bar(0), 1);
    }

    #[test]
    fn a3_with_black_middle_node() {
        let rs = RootSystem::from_type("A3").unwrap();
        let inv = InvolutionDatum::from_satake(rs.clone(), &[1], &[2, 1, 0]).unwrap();
        assert_eq!(inv.delta0(), &[1]);
        assert_eq!(inv.delta1(), &[0, 2]);
        assert_eq!(inv.sigma_bar(0), 2);
        // σ(α₁) = −(α₂ + α₃)
        let expected = rs.to_weight(&z(&[0, -1, -1]));
        assert_eq!(inv.apply(&rs.simple_root(0)), expected);
    }

    #[test]
    fn rejects_bad_matrices() {
        let rs = RootSystem::from_type("A2").unwrap();
        let trivial = InvolutionDatum::from_matrix(rs.clone(), Matrix::identity(2)).unwrap();
        assert!(trivial.delta1().is_empty());
        let not_inv = Matrix::from_rows(vec![z(&[0, -1]), z(&[1, 0])]);
        assert!(InvolutionDatum::from_matrix(rs.clone(), not_inv).is_err());
        let bad = InvolutionDatum::from_satake(rs, &[0], &[1, 0]);
        assert!(bad.is_err());
    }
}
