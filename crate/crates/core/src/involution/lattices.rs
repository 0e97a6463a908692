use num_traits::{One, Zero};

use super::restricted::RestrictedRootSystem;
use crate::error::InvolutionError;
use crate::linalg::{common_denominator, left_kernel, ratio_vec, smith_form, to_ratio, Matrix};
use crate::rootcore::Weight;
use crate::{Int, IntLattice, IntMatrix, Rat};

/// Which lattice to use as `Ω_H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OmegaHSpec {
    /// The simply connected case `Ω_H = Ω` (the default).
    Omega,
    /// The adjoint case `Ω_H = Ω_ad`.
    OmegaAd,
    /// Explicit generators (rows, fundamental-weight coordinates).
    Basis(IntMatrix),
}

/// The lattices `Ω_ad ⊆ Ω_H ⊆ Ω ⊆ Π` inside `Λ`, with the restriction map.
///
/// `r` is modeled by the anti-invariant coweights `Y₋`: `r(λ) = Y₋ λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphericalLatticeFamily {
    restricted: RestrictedRootSystem,
    omega: IntLattice,
    omega_ad: IntLattice,
    omega_h: IntLattice,
    pi: IntLattice,
    anti_coweights: IntMatrix,
    restriction_kernel: IntLattice,
}

/// Finite abelian group `Ω_H / Ω_ad` with coset representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentGroup {
    /// Invariant factors different from one, each dividing the next.
    pub invariant_factors: Vec<Int>,
    /// One canonical representative per coset, sorted; the zero coset first.
    pub cosets: Vec<Weight>,
}

impl ComponentGroup {
    pub fn order(&self) -> Int {
        self.invariant_factors.iter().fold(Int::one(), |a, b| a * b)
    }
}

impl SphericalLatticeFamily {
    pub fn new(restricted: RestrictedRootSystem, omega_h: OmegaHSpec) -> Result<Self, InvolutionError> {
        let inv = restricted.involution();
        let rs = inv.root_system();
        let n = rs.rank();
        let s_plus = inv.sigma().add(&Matrix::identity(n));

        // anti-invariant sublattice of Λ: (σ + 1) λ = 0
        let anti = left_kernel(&s_plus.transpose());
        // functionals λ ↦ 2κ(λ, α̃)/κ(α̃, α̃) restricted to it
        let gram = rs.gram();
        let k = to_ratio(&anti);
        let funcs: Vec<Vec<Rat>> = restricted
            .positive_roots()
            .iter()
            .map(|a| {
                let a = ratio_vec(a);
                let ga = gram.mul_vec(&a);
                let aa = crate::linalg::dot(&a, &ga);
                let scale = Rat::from_integer(Int::from(2)) / aa;
                k.mul_vec(&ga).into_iter().map(|x| x * scale.clone()).collect()
            })
            .collect();
        let ell = anti.rows();
        let m = funcs.len();
        let f = Matrix::from_fn(ell, m, |i, j| funcs[j][i].clone());
        let all: Vec<Rat> = f.iter_rows().flat_map(|r| r.to_vec()).collect();
        let den = common_denominator(&all);
        let f_int = f.map(|x| (x * Rat::from_integer(den.clone())).to_integer());
        // y ∈ Z^ℓ with y F ≡ 0 mod den, via the left kernel of [F; den·I]
        let stacked = f_int.vstack(&Matrix::identity(m).scale(&den));
        let ker = left_kernel(&stacked);
        let ys = Matrix::from_fn(ker.rows(), ell, |i, j| ker[(i, j)].clone());
        let omega = IntLattice::from_generators(&ys.mul(&anti));

        let omega_ad = IntLattice::from_rows(n, restricted.roots().to_vec());
        let mut pi_gens = omega.basis().clone();
        for &e in inv.exceptional() {
            let mut w = vec![Int::zero(); n];
            w[e] = Int::one();
            pi_gens = pi_gens.vstack(&Matrix::from_rows(vec![w]));
        }
        let pi = IntLattice::from_generators(&pi_gens);

        let omega_h = match omega_h {
            OmegaHSpec::Omega => omega.clone(),
            OmegaHSpec::OmegaAd => omega_ad.clone(),
            OmegaHSpec::Basis(b) => {
                if b.cols() != n {
                    return Err(InvolutionError::Sandwich(format!(
                        "omega_H generators must have length {n}"
                    )));
                }
                IntLattice::from_generators(&b)
            }
        };
        if !omega.contains_lattice(&omega_h) {
            return Err(InvolutionError::Sandwich("omega_H ⊄ omega".into()));
        }
        if !omega_h.contains_lattice(&omega_ad) {
            return Err(InvolutionError::Sandwich("omega_ad ⊄ omega_H".into()));
        }

        let anti_coweights = left_kernel(&s_plus);
        let restriction_kernel = IntLattice::from_generators(&left_kernel(&anti_coweights.transpose()));
        Ok(SphericalLatticeFamily {
            restricted,
            omega,
            omega_ad,
            omega_h,
            pi,
            anti_coweights,
            restriction_kernel,
        })
    }

    pub fn restricted(&self) -> &RestrictedRootSystem {
        &self.restricted
    }

    pub fn omega(&self) -> &IntLattice {
        &self.omega
    }

    pub fn omega_ad(&self) -> &IntLattice {
        &self.omega_ad
    }

    pub fn omega_h(&self) -> &IntLattice {
        &self.omega_h
    }

    pub fn pi(&self) -> &IntLattice {
        &self.pi
    }

    /// Basis (rows) of `Y₋ = {η ∈ Λ^∨ : ση = −η}` in simple-coroot coordinates.
    pub fn anti_coweights(&self) -> &IntMatrix {
        &self.anti_coweights
    }

    pub fn restriction_kernel(&self) -> &IntLattice {
        &self.restriction_kernel
    }

    /// `r(λ)` as the vector of pairings with the basis of `Y₋`.
    pub fn restrict(&self, w: &[Int]) -> Vec<Int> {
        self.anti_coweights.mul_vec(w)
    }

    /// Vust's criterion: `σλ = −λ` and `r(λ) ∈ r(Ω_H)`.
    pub fn vust_test(&self, w: &[Int]) -> bool {
        let inv = self.restricted.involution();
        if w.len() != inv.rank() {
            return false;
        }
        let s = inv.apply(w);
        if s.iter().zip(w).any(|(a, b)| a.clone() + b.clone() != Int::zero()) {
            return false;
        }
        let images: Vec<Vec<Int>> = self.omega_h.basis().iter_rows().map(|b| self.restrict(b)).collect();
        let r_omega_h = IntLattice::from_rows(self.anti_coweights.rows(), images);
        r_omega_h.contains(&self.restrict(w))
    }

    /// Whether `r` is injective on `Ω`.
    pub fn restriction_injective_on_omega(&self) -> bool {
        let images = self.omega.basis().iter_rows().map(|b| self.restrict(b)).collect::<Vec<_>>();
        let width = self.anti_coweights.rows();
        to_ratio(&Matrix::from_rows_with_width(images, Some(width))).rank() == self.omega.rank()
    }

    /// `Ω_H / Ω_ad` by Smith normal form.
    pub fn component_group(&self) -> ComponentGroup {
        let rel = self
            .omega_h
            .relative_basis(&self.omega_ad)
            .expect("omega_ad is contained in omega_H");
        let snf = smith_form(&rel);
        // in coordinates z = x V the sublattice is ⊕ d_i Z
        let v_inv = to_ratio(&snf.v).inverse().expect("unimodular");
        let v_inv = v_inv.map(|x| x.to_integer());
        let d = &snf.diagonal;
        let mut reps: Vec<Vec<Int>> = vec![vec![]];
        for di in d {
            let mut next = Vec::new();
            for r in &reps {
                let mut t = Int::zero();
                while t < *di {
                    let mut r2 = r.clone();
                    r2.push(t.clone());
                    next.push(r2);
                    t += Int::one();
                }
            }
            reps = next;
        }
        let mut cosets: Vec<Weight> = reps
            .iter()
            .map(|z| {
                let x = v_inv.vec_mul(z);
                self.omega_ad.reduce(&self.omega_h.from_coordinates(&x))
            })
            .collect();
        cosets.sort();
        cosets.dedup();
        let zero = vec![Int::zero(); self.restricted.involution().rank()];
        if let Some(p) = cosets.iter().position(|c| *c == zero) {
            let z = cosets.remove(p);
            cosets.insert(0, z);
        }
        ComponentGroup {
            invariant_factors: snf.invariant_factors(),
            cosets,
        }
    }

    /// Basis of `Ω_H` expressed in `Δ̃`-coordinates, one row per generator.
    pub fn omega_h_simple_coords(&self) -> Matrix<Rat> {
        let rows = self
            .omega_h
            .basis()
            .iter_rows()
            .map(|b| self.restricted.simple_coords(b).expect("omega_H lies in the span of the restricted roots"))
            .collect();
        Matrix::from_rows_with_width(rows, Some(self.restricted.rank()))
    }

    /// Dominant weights of `Ω` up to a bound on ω̃-coordinate sum.
    pub fn omega_plus_up_to(&self, height: u32) -> Vec<Weight> {
        let ell = self.restricted.rank();
        let mut out = Vec::new();
        for c in crate::rootcore::compositions_up_to(ell, height) {
            let w = self.restricted.from_fundamental_coords(&c);
            if self.omega.contains(&w) {
                out.push(w);
            }
        }
        out
    }
}

pub fn component_group(fam: &SphericalLatticeFamily) -> ComponentGroup {
    fam.component_group()
}

pub fn vust_test(fam: &SphericalLatticeFamily, w: &[Int]) -> bool {
    fam.vust_test(w)
}
