//! Semistable strata, ample witnesses and the combinatorial model of the
//! GIT quotient of a toroidal embedding by `K`.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::GitError;
use crate::fan::{orbit_poset, CochamberFan, Face};
use crate::linalg::{left_kernel, Matrix};
use crate::rootcore::{decompose, ReflectionGroup, Weight};
use crate::sections::{enumerate_a, Positivity, SPicClass};
use crate::{Int, Rat};

/// The semistable part of the `G`-orbit attached to a face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitStratum {
    pub face: Face,
    /// `I = supp ρ`; points of the orbit are semistable exactly where
    /// `p_I` does not vanish.
    pub support: Vec<usize>,
    /// `Δ₀ ∪ {α ∈ Δ₁ : α̃ ∉ I}`, the simple roots of the parabolic.
    pub parabolic_type: Vec<usize>,
    pub levi_restricted_rank: usize,
    /// Basis of `{μ ∈ Ω_H : ⟨μ, v⟩ = 0 for the rays v of the face}`.
    pub torus_lattice: Vec<Weight>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientReport {
    pub strata: Vec<OrbitStratum>,
    pub weyl_order: Int,
    /// `|Stab_W̃(ρ)|` per face, in face order.
    pub stabilizer_orders: Vec<Int>,
    /// `|A(nλ̲)|` for `n = 0..=N`.
    pub graded_invariant_dims: Vec<usize>,
}

/// Closed semistable `K`-orbits over a face: the torus `Y_S ∩ O_ρ` modulo
/// the stabilizer of the face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedOrbitClass {
    pub face: Face,
    pub torus_lattice: Vec<Weight>,
    /// Restricted simple reflections generating `Stab_W̃(ρ)`.
    pub stabilizer_generators: Vec<usize>,
    pub stabilizer_order: Int,
}

fn require_ample(cls: &SPicClass) -> Result<(), GitError> {
    match cls.classify_positivity()? {
        Positivity::Ample => Ok(()),
        _ => Err(GitError::NotAmple),
    }
}

/// `{j : c_j ≠ 0}` for the ω̃-coordinates `c` of `μ`.
pub fn weight_support(cls: &SPicClass, mu: &[Int]) -> Vec<usize> {
    let c = cls
        .fan()
        .family()
        .restricted()
        .fundamental_coords(mu)
        .expect("weights of Ω_H lie in the span of Φ̃");
    (0..c.len()).filter(|&j| !c[j].is_zero()).collect()
}

pub fn semistable_stratum(fan: &CochamberFan, face: &[usize]) -> Result<OrbitStratum, GitError> {
    fan.require_complete()?;
    fan.require_smooth()?;
    let face = fan.face(face)?;
    let fam = fan.family();
    let rr = fam.restricted();
    let inv = rr.involution();
    let support = fan.face_support(&face);
    let mut parabolic_type: Vec<usize> = inv.delta0().to_vec();
    parabolic_type.extend(
        inv.delta1()
            .iter()
            .copied()
            .filter(|&a| rr.simple_of_node(a).is_some_and(|j| !support.contains(&j))),
    );
    parabolic_type.sort_unstable();

    let r = fam.omega_h().rank();
    let kernel = if face.is_empty() {
        Matrix::identity(r)
    } else {
        left_kernel(&fan.ray_matrix(&face).transpose())
    };
    let torus_lattice: Vec<Weight> = kernel.iter_rows().map(|x| fam.omega_h().from_coordinates(x)).collect();
    let levi_restricted_rank = rr.rank() - face.len();
    debug_assert_eq!(torus_lattice.len(), levi_restricted_rank);
    Ok(OrbitStratum {
        face,
        support,
        parabolic_type,
        levi_restricted_rank,
        torus_lattice,
    })
}

/// The maximal cone used for a face: lexicographically smallest by rays.
fn chosen_cone(fan: &CochamberFan, face: &[usize]) -> usize {
    fan.cones_containing(face)
        .into_iter()
        .min_by(|&a, &b| fan.cones()[a].cmp(&fan.cones()[b]))
        .expect("every face lies in a maximal cone")
}

/// Whether `μ ∈ A(nλ̲)`.
fn in_a(cls: &SPicClass, n: &Int, mu: &[Int]) -> bool {
    let fam = cls.fan().family();
    mu.len() == fam.omega_h().ambient_dim()
        && fam.omega_h().contains(mu)
        && fam.restricted().is_dominant(mu)
        && cls.scale(n).bounds(mu)
}

fn agrees_on_face(cls: &SPicClass, n: &Int, mu: &[Int], face: &[usize]) -> bool {
    let fan = cls.fan();
    let n = Rat::from_integer(n.clone());
    face.iter()
        .all(|&r| fan.pair(mu, &fan.rays()[r]) == &n * cls.value_at_ray(r))
}

/// `(n, μ)` with `μ ∈ A(nλ̲)`, `supp μ = supp ρ` and `μ = nλ̲` on the face.
///
/// `λ_τ` is split as `Σ_{h∉I} a_h β_h + Σ_{k∈I} b_k ω̃_k`; the second part,
/// scaled by the least `n` putting it in `Ω_H`, is the witness.
pub fn ample_witness(cls: &SPicClass, face: &[usize]) -> Result<(Int, Weight), GitError> {
    require_ample(cls)?;
    let fan = cls.fan();
    let face = fan.face(face)?;
    let fam = fan.family();
    let rr = fam.restricted();
    let support = fan.face_support(&face);
    let complement: Vec<usize> = (0..rr.rank()).filter(|j| !support.contains(j)).collect();

    let lambda = &cls.values()[chosen_cone(fan, &face)];
    let c = rr.fundamental_coords(lambda).expect("class values lie in the span of Φ̃");
    let (_, b) = decompose(&rr.beta_cartan(), &c, &complement);

    // μ as a rational weight
    let n_weights = fam.omega_h().ambient_dim();
    let mut mu_q = vec![Rat::zero(); n_weights];
    for (&k, bk) in &b {
        for (x, w) in mu_q.iter_mut().zip(&rr.fundamental_weights()[k]) {
            *x += bk * Rat::from_integer(w.clone());
        }
    }
    let den = mu_q.iter().fold(Int::one(), |acc, x| acc.lcm(x.denom()));
    let base: Weight = mu_q.iter().map(|x| (x * Rat::from_integer(den.clone())).to_integer()).collect();
    // smallest m with m·base ∈ Ω_H; m divides the exponent of Λ/Ω_H
    let mut m = Int::one();
    let mu = loop {
        let cand: Weight = base.iter().map(|x| x * &m).collect();
        if fam.omega_h().contains(&cand) {
            break cand;
        }
        m += 1;
    };
    let n = den * m;

    if weight_support(cls, &mu) != support {
        return Err(GitError::ContractViolation(format!(
            "witness support {:?} differs from face support {support:?}",
            weight_support(cls, &mu)
        )));
    }
    if !in_a(cls, &n, &mu) {
        return Err(GitError::ContractViolation("witness is not in A(nλ)".into()));
    }
    if !agrees_on_face(cls, &n, &mu, &face) {
        return Err(GitError::ContractViolation("witness differs from nλ on the face".into()));
    }
    Ok((n, mu))
}

/// The inclusion `supp μ ⊇ supp ρ`, reported as a contract violation when
/// it fails.
pub fn inclusion_verdict(mu_support: &[usize], face_support: &[usize]) -> Result<bool, GitError> {
    if face_support.iter().all(|j| mu_support.contains(j)) {
        Ok(true)
    } else {
        Err(GitError::ContractViolation(format!(
            "support {mu_support:?} does not contain the face support {face_support:?}"
        )))
    }
}

/// For `μ ∈ A(nλ̲)` equal to `nλ̲` on the face, checks `supp μ ⊇ supp ρ`.
pub fn support_converse_check(cls: &SPicClass, n: &Int, mu: &[Int], face: &[usize]) -> Result<bool, GitError> {
    require_ample(cls)?;
    let fan = cls.fan();
    let face = fan.face(face)?;
    if !n.is_positive() {
        return Err(GitError::Precondition(format!("n = {n} is not positive")));
    }
    if !in_a(cls, n, mu) {
        return Err(GitError::Precondition("μ is not in A(nλ)".into()));
    }
    if !agrees_on_face(cls, n, mu, &face) {
        return Err(GitError::Precondition("μ differs from nλ on the face".into()));
    }
    inclusion_verdict(&weight_support(cls, mu), &fan.face_support(&face))
}

pub fn git_quotient_report(cls: &SPicClass, grading_bound: usize, limit: usize) -> Result<QuotientReport, GitError> {
    require_ample(cls)?;
    let fan = cls.fan();
    let strata = fan
        .faces()
        .iter()
        .map(|f| semistable_stratum(fan, f))
        .collect::<Result<Vec<_>, _>>()?;
    let weyl_order = Int::from(fan.family().restricted().weyl_group().order(limit)?);
    let poset = orbit_poset(fan, limit)?;
    let stabilizer_orders = poset.iter().map(|p| &weyl_order / Int::from(p.translates)).collect();
    let graded_invariant_dims = (0..=grading_bound)
        .map(|n| enumerate_a(&cls.scale(&Int::from(n))).map(|a| a.len()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(QuotientReport {
        strata,
        weyl_order,
        stabilizer_orders,
        graded_invariant_dims,
    })
}

pub fn closed_orbit_report(fan: &CochamberFan, limit: usize) -> Result<Vec<ClosedOrbitClass>, GitError> {
    let rr = fan.family().restricted();
    let refl = rr.covector_reflections();
    fan.faces()
        .iter()
        .map(|f| {
            let stratum = semistable_stratum(fan, f)?;
            let gens: Vec<usize> = (0..rr.rank()).filter(|j| !stratum.support.contains(j)).collect();
            let group = ReflectionGroup::new(rr.rank(), gens.iter().map(|&j| refl[j].clone()).collect());
            Ok(ClosedOrbitClass {
                face: stratum.face,
                torus_lattice: stratum.torus_lattice,
                stabilizer_generators: gens,
                stabilizer_order: Int::from(group.order(limit)?),
            })
        })
        .collect()
}
