use num_traits::{One, Zero};

use super::class::{Positivity, SPicClass};
use super::wonderful::MonomialBasisElement;
use crate::error::SectionError;
use crate::linalg::lp::{maximize, LpOutcome};
use crate::linalg::{integral_vec, Matrix};
use crate::rootcore::Weight;
use crate::{Int, Rat};

/// `A(λ̲)` with the module dimensions of `Γ(Y, L_λ̲)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionReport {
    pub a_set: Vec<Weight>,
    /// `dim V_μ` for each member of `a_set`.
    pub dims: Vec<Int>,
    pub total: Int,
    pub invariant_dim: usize,
    /// Per member, `λ̲(v_D) − ⟨μ, v_D⟩` for each ray `v_D`.
    pub exponents: Vec<Vec<Int>>,
}

/// Upper bounds on the ω̃-coordinates of points of
/// `{μ dominant : ⟨μ, v⟩ ≤ λ̲(v) for all rays v}`, or `None` if that
/// polytope is unbounded.
fn coordinate_box(cls: &SPicClass) -> Result<Option<Vec<Int>>, SectionError> {
    let fan = cls.fan();
    let rr = fan.family().restricted();
    let ell = rr.rank();
    let nr = fan.rays().len();
    // x = (c_1..c_ℓ, slack per ray), A x = b, x ≥ 0
    let a = Matrix::from_fn(nr, ell + nr, |r, col| {
        if col < ell {
            fan.pair(&rr.fundamental_weights()[col], &fan.rays()[r])
        } else if col - ell == r {
            Rat::one()
        } else {
            Rat::zero()
        }
    });
    let b: Vec<Rat> = (0..nr).map(|r| cls.value_at_ray(r)).collect();
    let mut bounds = Vec::with_capacity(ell);
    for j in 0..ell {
        let mut c = vec![Rat::zero(); ell + nr];
        c[j] = Rat::one();
        match maximize(&a, &b, &c) {
            LpOutcome::Optimal { value, .. } => bounds.push(value.floor().to_integer()),
            LpOutcome::Infeasible => return Ok(Some(vec![-Int::one(); ell])),
            LpOutcome::Unbounded => return Ok(None),
        }
    }
    Ok(Some(bounds))
}

fn graded_lex(a: &[Int], b: &[Int]) -> std::cmp::Ordering {
    let sa: Int = a.iter().sum();
    let sb: Int = b.iter().sum();
    sa.cmp(&sb).then_with(|| a.cmp(b))
}

fn boxed(bounds: &[Int]) -> Vec<Vec<Int>> {
    let mut out: Vec<Vec<Int>> = vec![vec![]];
    for b in bounds {
        let mut next = Vec::new();
        for p in &out {
            let mut t = Int::zero();
            while t <= *b {
                let mut q = p.clone();
                q.push(t.clone());
                next.push(q);
                t += 1;
            }
        }
        out = next;
    }
    out
}

/// `A(λ̲) = {μ ∈ Ω_H^+ : μ ≤ λ̲ on C}` in graded-lex order of ω̃-coordinates.
pub fn enumerate_a(cls: &SPicClass) -> Result<Vec<Weight>, SectionError> {
    if cls.classify_positivity()? == Positivity::Neither {
        return Err(SectionError::NotGloballyGenerated);
    }
    let Some(bounds) = coordinate_box(cls)? else {
        return Err(SectionError::Unbounded);
    };
    let fam = cls.fan().family();
    let rr = fam.restricted();
    let mut coords: Vec<Vec<Int>> = boxed(&bounds)
        .into_iter()
        .filter(|c| {
            let mu = rr.from_fundamental_coords(c);
            fam.omega_h().contains(&mu) && cls.bounds(&mu)
        })
        .collect();
    coords.sort_by(|a, b| graded_lex(a, b));
    Ok(coords.iter().map(|c| rr.from_fundamental_coords(c)).collect())
}

pub fn section_decomposition(cls: &SPicClass) -> Result<SectionReport, SectionError> {
    let a_set = enumerate_a(cls)?;
    let fan = cls.fan();
    let rs = fan.family().restricted().involution().root_system();
    let dims = a_set.iter().map(|mu| rs.weyl_dim(mu)).collect::<Result<Vec<_>, _>>()?;
    let total = dims.iter().sum();
    let exponents = a_set
        .iter()
        .map(|mu| {
            (0..fan.rays().len())
                .map(|r| (cls.value_at_ray(r) - fan.pair(mu, &fan.rays()[r])).to_integer())
                .collect()
        })
        .collect();
    Ok(SectionReport {
        invariant_dim: a_set.len(),
        a_set,
        dims,
        total,
        exponents,
    })
}

/// The basis `s^a p^μ` of the invariant sections of `L_λ̲`: one element per
/// `μ ∈ A(λ̲)`, with `s` indexed by rays.
pub fn invariant_basis_toroidal(cls: &SPicClass) -> Result<Vec<MonomialBasisElement>, SectionError> {
    let report = section_decomposition(cls)?;
    let rr = cls.fan().family().restricted();
    Ok(report
        .a_set
        .iter()
        .zip(report.exponents)
        .map(|(mu, s)| MonomialBasisElement {
            s,
            p: integral_vec(&rr.fundamental_coords(mu).expect("Ω_H lies in the span of Φ̃"))
                .expect("members of A have integral ω̃-coordinates"),
            q: Vec::new(),
            weight: cls.values()[0].clone(),
        })
        .collect())
}

/// Whether `λ̲ = μ + Σ_D s_D α̲_D` as classes, `μ` read from the `p`-exponents.
pub fn toroidal_identity_holds(cls: &SPicClass, e: &MonomialBasisElement) -> Result<bool, SectionError> {
    let fan = cls.fan();
    let rr = fan.family().restricted();
    let mut acc = SPicClass::constant(fan.clone(), rr.from_fundamental_coords(&e.p))?;
    for (d, a) in e.s.iter().enumerate() {
        acc = acc.add(&SPicClass::boundary(fan.clone(), d)?.scale(a));
    }
    Ok(acc == *cls)
}
