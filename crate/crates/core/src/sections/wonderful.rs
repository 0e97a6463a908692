//! Sections, invariants and semiinvariants on the wonderful compactification.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use crate::error::SectionError;
use crate::involution::SphericalLatticeFamily;
use crate::linalg::{integral_vec, ratio_vec, to_ratio, vec_add, vec_sub, Matrix};
use crate::rootcore::Weight;
use crate::{Int, IntLattice, Rat};

/// A monomial `s^ν p^μ q^κ` in the generators of the (semi)invariant ring.
///
/// `s` is indexed by `Δ̃` (or by rays for toroidal bases), `p` by `Δ̃`,
/// `q` by the exceptional simple roots in node order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialBasisElement {
    pub s: Vec<Int>,
    pub p: Vec<Int>,
    pub q: Vec<Int>,
    pub weight: Weight,
}

impl MonomialBasisElement {
    /// `Σ s_j α̃_j + Σ p_j ω̃_j + Σ q_k ω_{e_k}` for a wonderful basis element.
    pub fn reconstruct(&self, fam: &SphericalLatticeFamily) -> Weight {
        let rr = fam.restricted();
        let inv = rr.involution();
        let mut w = vec_add(&rr.from_simple_coords(&self.s), &rr.from_fundamental_coords(&self.p));
        for (&e, q) in inv.exceptional().iter().zip(&self.q) {
            w[e] += q;
        }
        w
    }
}

/// The open-orbit data of `G/P_I` for `I ⊆ Δ̃`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagInvariantData {
    /// `Δ_I = Δ₀ ∪ {α ∈ Δ₁ : α̃ ∈ I}`.
    pub delta_i: Vec<usize>,
    /// Generators of the invariants: `ω̃_j` for `j ∉ I`.
    pub invariant_generators: Vec<Weight>,
    /// Generators of the semiinvariants: `ω̃_j` for non-exceptional `j ∉ I`
    /// and `ω_α` for exceptional `α ∉ Δ_I`.
    pub generators: Vec<Weight>,
    /// `Σ_{j∉I} ω̃_j`, the weight of the reduced equation of the complement
    /// of the open orbit.
    pub divisor_weight: Weight,
}

fn graded(a: &[Rat], b: &[Rat]) -> Ordering {
    let sa: Rat = a.iter().sum();
    let sb: Rat = b.iter().sum();
    sa.cmp(&sb).then_with(|| a.cmp(b))
}

/// All `(ν, μ)` with `μ = λ − Σ ν_j α̃_j` dominant, `ν ≥ 0`, `μ ∈ lattice`.
fn below(fam: &SphericalLatticeFamily, lambda: &[Int], lattice: &IntLattice) -> Vec<(Vec<Int>, Weight)> {
    let rr = fam.restricted();
    let rs = rr.involution().root_system();
    let lam_root = rs.to_root_coords(&ratio_vec(lambda));
    // a dominant μ has nonnegative root coordinates, and node i only sees
    // the α̃_j it restricts to
    let mut bounds = Vec::with_capacity(rr.rank());
    for j in 0..rr.rank() {
        let i = rr.nodes_of_simple(j)[0];
        let coef = rs.to_root_coords(&ratio_vec(&rr.simple()[j]))[i].clone();
        let b = (&lam_root[i] / coef).floor().to_integer();
        if b.is_negative() {
            return Vec::new();
        }
        bounds.push(b);
    }
    let mut nus: Vec<Vec<Int>> = vec![vec![]];
    for b in &bounds {
        let mut next = Vec::new();
        for p in &nus {
            let mut t = Int::zero();
            while t <= *b {
                let mut q = p.clone();
                q.push(t.clone());
                next.push(q);
                t += 1;
            }
        }
        nus = next;
    }
    nus.into_iter()
        .filter_map(|nu| {
            let mu = vec_sub(lambda, &rr.from_simple_coords(&nu));
            (rs.is_dominant(&mu) && lattice.contains(&mu)).then_some((nu, mu))
        })
        .collect()
}

fn sort_by_restricted(fam: &SphericalLatticeFamily, items: &mut [(Vec<Int>, Weight)]) {
    let rr = fam.restricted();
    items.sort_by(|a, b| {
        let ca = rr.fundamental_coords(&a.1).expect("in the span of the restricted roots");
        let cb = rr.fundamental_coords(&b.1).expect("in the span of the restricted roots");
        graded(&ca, &cb)
    });
}

fn sort_by_ambient(items: &mut [(Vec<Int>, Weight)]) {
    items.sort_by(|a, b| graded(&ratio_vec(&a.1), &ratio_vec(&b.1)));
}

fn check_len(fam: &SphericalLatticeFamily, lambda: &[Int]) -> Result<(), SectionError> {
    let n = fam.restricted().involution().rank();
    if lambda.len() != n {
        return Err(crate::error::RootError::WrongLength {
            expected: n,
            got: lambda.len(),
        }
        .into());
    }
    Ok(())
}

/// `{μ ∈ Π^+ : μ ≤_σ λ}` with Weyl dimensions, ordered graded-lex in
/// ω-coordinates, and the total dimension.
pub fn section_dim_wonderful(
    fam: &SphericalLatticeFamily,
    lambda: &[Int],
) -> Result<(Int, Vec<(Weight, Int)>), SectionError> {
    check_len(fam, lambda)?;
    if !fam.pi().contains(lambda) {
        return Err(SectionError::OutsideLattice("pi"));
    }
    let rs = fam.restricted().involution().root_system();
    let mut items = below(fam, lambda, fam.pi());
    sort_by_ambient(&mut items);
    let mut total = Int::zero();
    let mut out = Vec::with_capacity(items.len());
    for (_, mu) in items {
        let d = rs.weyl_dim(&mu)?;
        total += &d;
        out.push((mu, d));
    }
    Ok((total, out))
}

/// `|{μ ∈ Ω^+ : μ ≤_σ λ}|` when `λ ∈ Ω_H`, zero otherwise.
pub fn invariant_dim_wonderful(fam: &SphericalLatticeFamily, lambda: &[Int]) -> usize {
    if lambda.len() != fam.restricted().involution().rank() || !fam.omega_h().contains(lambda) {
        return 0;
    }
    below(fam, lambda, fam.omega()).len()
}

pub fn invariant_basis_wonderful(
    fam: &SphericalLatticeFamily,
    lambda: &[Int],
) -> Result<Vec<MonomialBasisElement>, SectionError> {
    check_len(fam, lambda)?;
    if !fam.omega_h().contains(lambda) {
        return Err(SectionError::OutsideLattice("omega_H"));
    }
    let rr = fam.restricted();
    let mut items = below(fam, lambda, fam.omega());
    sort_by_restricted(fam, &mut items);
    let out: Vec<MonomialBasisElement> = items
        .into_iter()
        .map(|(nu, mu)| {
            let c = rr.fundamental_coords(&mu).expect("Ω lies in the span of the restricted roots");
            MonomialBasisElement {
                s: nu,
                p: integral_vec(&c).expect("Ω is spanned by the ω̃"),
                q: Vec::new(),
                weight: lambda.to_vec(),
            }
        })
        .collect();
    for e in &out {
        debug_assert_eq!(e.reconstruct(fam), e.weight);
    }
    Ok(out)
}

/// Indices `j` of `Δ̃` none of whose nodes is exceptional.
pub fn non_exceptional_simple(fam: &SphericalLatticeFamily) -> Vec<usize> {
    let rr = fam.restricted();
    let exc = rr.involution().exceptional();
    (0..rr.rank())
        .filter(|&j| rr.nodes_of_simple(j).iter().all(|i| !exc.contains(i)))
        .collect()
}

pub fn semiinvariant_basis_wonderful(
    fam: &SphericalLatticeFamily,
    lambda: &[Int],
) -> Result<Vec<MonomialBasisElement>, SectionError> {
    check_len(fam, lambda)?;
    if !fam.pi().contains(lambda) {
        return Err(SectionError::OutsideLattice("pi"));
    }
    let rr = fam.restricted();
    let inv = rr.involution();
    let n = inv.rank();
    let exc = inv.exceptional();
    let ne = non_exceptional_simple(fam);
    // columns: ω_α for α ∈ Δ_e, then ω̃_j for j ∈ Δ̃_ne
    let mut cols: Vec<Weight> = exc
        .iter()
        .map(|&e| {
            let mut w = vec![Int::zero(); n];
            w[e] = 1.into();
            w
        })
        .collect();
    cols.extend(ne.iter().map(|&j| rr.fundamental_weights()[j].clone()));
    let basis = to_ratio(&Matrix::from_rows_with_width(cols, Some(n)).transpose());

    let mut items = below(fam, lambda, fam.pi());
    sort_by_ambient(&mut items);
    let mut out = Vec::with_capacity(items.len());
    for (nu, mu) in items {
        let x = basis
            .solve(&ratio_vec(&mu))
            .filter(|x| basis.mul_vec(x) == ratio_vec(&mu))
            .and_then(|x| integral_vec(&x))
            .ok_or(SectionError::OutsideLattice("the span of the semiinvariant generators"))?;
        let q = x[..exc.len()].to_vec();
        let mut p = vec![Int::zero(); rr.rank()];
        for (k, &j) in ne.iter().enumerate() {
            p[j] = x[exc.len() + k].clone();
        }
        let e = MonomialBasisElement {
            s: nu,
            p,
            q,
            weight: lambda.to_vec(),
        };
        debug_assert_eq!(e.reconstruct(fam), e.weight);
        out.push(e);
    }
    Ok(out)
}

pub fn flag_invariant_data(fam: &SphericalLatticeFamily, i_set: &[usize]) -> Result<FlagInvariantData, SectionError> {
    let rr = fam.restricted();
    let inv = rr.involution();
    let n = inv.rank();
    if let Some(&bad) = i_set.iter().find(|&&j| j >= rr.rank()) {
        return Err(SectionError::IndexOutOfRange(bad));
    }
    let in_i = |j: usize| i_set.contains(&j);
    let mut delta_i: Vec<usize> = inv.delta0().to_vec();
    delta_i.extend(inv.delta1().iter().copied().filter(|&a| rr.simple_of_node(a).is_some_and(in_i)));
    delta_i.sort_unstable();

    let complement: Vec<usize> = (0..rr.rank()).filter(|&j| !in_i(j)).collect();
    let invariant_generators: Vec<Weight> = complement.iter().map(|&j| rr.fundamental_weights()[j].clone()).collect();
    let ne = non_exceptional_simple(fam);
    let mut generators: Vec<Weight> = complement
        .iter()
        .filter(|j| ne.contains(j))
        .map(|&j| rr.fundamental_weights()[j].clone())
        .collect();
    for &e in inv.exceptional() {
        if !delta_i.contains(&e) {
            let mut w = vec![Int::zero(); n];
            w[e] = 1.into();
            generators.push(w);
        }
    }
    let divisor_weight = invariant_generators
        .iter()
        .fold(vec![Int::zero(); n], |acc, w| vec_add(&acc, w));
    Ok(FlagInvariantData {
        delta_i,
        invariant_generators,
        generators,
        divisor_weight,
    })
}
