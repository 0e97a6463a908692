use std::collections::{BTreeMap, HashSet, VecDeque};

use num_traits::{One, Signed, Zero};

use super::cartan::CartanDatum;
use super::reflection::ReflectionGroup;
use crate::error::RootError;
use crate::linalg::{dot, integral_vec, ratio_vec, to_ratio, Matrix};
use crate::{Int, IntMatrix, Rat, RatMatrix};

/// Weight in fundamental-weight coordinates.
pub type Weight = Vec<Int>;

/// The finite root system of a Cartan datum.
///
/// Roots are stored in simple-root coordinates: positive roots sorted by
/// height then lexicographically, followed by their negatives in the same
/// order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    datum: CartanDatum,
    roots: Vec<Vec<Int>>,
    weyl_order: Int,
    gram: RatMatrix,
}

impl RootSystem {
    pub fn new(datum: CartanDatum) -> Self {
        let n = datum.rank();
        let a = datum.matrix().clone();
        let mut seen: HashSet<Vec<Int>> = HashSet::new();
        let mut queue = VecDeque::new();
        for i in 0..n {
            let e = unit(n, i);
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(beta) = queue.pop_front() {
            for i in 0..n {
                // ⟨β, α_i^∨⟩ = Σ_j β_j A_ij
                let p = dot(a.row(i), &beta);
                if p.is_zero() {
                    continue;
                }
                let mut r = beta.clone();
                r[i] = r[i].clone() - p;
                if seen.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
        }
        let mut positive: Vec<Vec<Int>> = seen
            .iter()
            .filter(|r| r.iter().all(|x| !x.is_negative()))
            .cloned()
            .collect();
        positive.sort_by(|x, y| height(x).cmp(&height(y)).then_with(|| y.cmp(x)));
        let mut roots = positive.clone();
        roots.extend(positive.iter().map(|r| r.iter().map(|x| -x.clone()).collect::<Vec<_>>()));
        debug_assert_eq!(roots.len(), seen.len());

        let d = Matrix::diagonal(datum.symmetrizers()).map(|x| Rat::from_integer(x.clone()));
        let ainv = to_ratio(&a).inverse().expect("finite-type Cartan matrix is invertible");
        let gram = d.mul(&ainv);
        let weyl_order = parabolic_order(&a, &(0..n).collect::<Vec<_>>());
        RootSystem {
            datum,
            roots,
            weyl_order,
            gram,
        }
    }

    pub fn from_type(name: &str) -> Result<Self, RootError> {
        Ok(Self::new(CartanDatum::from_type(name)?))
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn cartan(&self) -> &IntMatrix {
        self.datum.matrix()
    }

    /// All roots in simple-root coordinates.
    pub fn roots(&self) -> &[Vec<Int>] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Vec<Int>] {
        &self.roots[..self.roots.len() / 2]
    }

    pub fn simple_root(&self, i: usize) -> Weight {
        self.cartan().col(i)
    }

    pub fn weyl_order(&self) -> &Int {
        &self.weyl_order
    }

    /// Gram matrix of `κ` in fundamental-weight coordinates.
    pub fn gram(&self) -> &RatMatrix {
        &self.gram
    }

    /// Fundamental-weight coordinates of an element given in root coordinates.
    pub fn to_weight(&self, root_coords: &[Int]) -> Weight {
        self.cartan().mul_vec(root_coords)
    }

    /// Root coordinates (exact rationals) of a weight.
    pub fn to_root_coords(&self, w: &[Rat]) -> Vec<Rat> {
        to_ratio(self.cartan()).solve(w).expect("Cartan matrix is invertible")
    }

    pub fn root_weights(&self) -> Vec<Weight> {
        self.roots.iter().map(|r| self.to_weight(r)).collect()
    }

    pub fn is_root_weight(&self, w: &[Int]) -> bool {
        let Some(c) = integral_vec(&self.to_root_coords(&ratio_vec(w))) else {
            return false;
        };
        self.roots.contains(&c)
    }

    /// `κ(λ, μ)` for weights in fundamental-weight coordinates.
    pub fn kappa(&self, x: &[Rat], y: &[Rat]) -> Rat {
        dot(x, &self.gram.mul_vec(y))
    }

    pub fn kappa_int(&self, x: &[Int], y: &[Int]) -> Rat {
        self.kappa(&ratio_vec(x), &ratio_vec(y))
    }

    /// `κ(λ, α)` for `α` given in root coordinates; exact integer arithmetic.
    pub fn kappa_weight_root(&self, w: &[Int], root_coords: &[Int]) -> Int {
        let d = self.datum.symmetrizers();
        (0..self.rank()).fold(Int::zero(), |acc, j| {
            acc + root_coords[j].clone() * d[j].clone() * w[j].clone()
        })
    }

    /// Simple reflections as matrices on fundamental-weight coordinates.
    pub fn simple_reflections(&self) -> Vec<IntMatrix> {
        let n = self.rank();
        (0..n)
            .map(|i| {
                let a = self.simple_root(i);
                Matrix::from_fn(n, n, |r, c| {
                    let id = if r == c { Int::one() } else { Int::zero() };
                    if c == i {
                        id - a[r].clone()
                    } else {
                        id
                    }
                })
            })
            .collect()
    }

    pub fn weyl_group(&self) -> ReflectionGroup {
        ReflectionGroup::new(self.rank(), self.simple_reflections())
    }

    pub fn is_dominant(&self, w: &[Int]) -> bool {
        w.iter().all(|x| !x.is_negative())
    }

    pub fn rho(&self) -> Weight {
        vec![Int::one(); self.rank()]
    }

    /// Dimension of the irreducible module of highest weight `mu`.
    pub fn weyl_dim(&self, mu: &[Int]) -> Result<Int, RootError> {
        self.check_len(mu)?;
        if !self.is_dominant(mu) {
            return Err(RootError::NotDominant(mu.iter().map(Int::to_string).collect()));
        }
        let shifted: Vec<Int> = mu.iter().map(|x| x.clone() + Int::one()).collect();
        let rho = self.rho();
        let mut num = Int::one();
        let mut den = Int::one();
        for alpha in self.positive_roots() {
            num *= self.kappa_weight_root(&shifted, alpha);
            den *= self.kappa_weight_root(&rho, alpha);
        }
        debug_assert!((num.clone() % den.clone()).is_zero());
        Ok(num / den)
    }

    /// Solves `ω_j = Σ_{h∈K} a_h α_h + Σ_{k∉K} b_k ω_k` exactly.
    pub fn fundamental_weight_decomposition(
        &self,
        j: usize,
        k: &[usize],
    ) -> Result<(BTreeMap<usize, Rat>, BTreeMap<usize, Rat>), RootError> {
        let n = self.rank();
        for &i in k.iter().chain(std::iter::once(&j)) {
            if i >= n {
                return Err(RootError::IndexOutOfRange { index: i, rank: n });
            }
        }
        let mut target = vec![Rat::zero(); n];
        target[j] = Rat::one();
        Ok(decompose(&to_ratio(self.cartan()), &target, k))
    }

    fn check_len(&self, w: &[Int]) -> Result<(), RootError> {
        if w.len() != self.rank() {
            return Err(RootError::WrongLength {
                expected: self.rank(),
                got: w.len(),
            });
        }
        Ok(())
    }
}

/// Writes `target` (fundamental coordinates of a system with Cartan matrix
/// `cartan`) as `Σ_{h∈K} a_h α_h + Σ_{k∉K} b_k ω_k`.
pub fn decompose(
    cartan: &RatMatrix,
    target: &[Rat],
    k: &[usize],
) -> (BTreeMap<usize, Rat>, BTreeMap<usize, Rat>) {
    let n = cartan.rows();
    let in_k: Vec<bool> = (0..n).map(|i| k.contains(&i)).collect();
    let basis = Matrix::from_fn(n, n, |r, c| {
        if in_k[c] {
            cartan[(r, c)].clone()
        } else if r == c {
            Rat::one()
        } else {
            Rat::zero()
        }
    });
    let x = basis.solve(target).expect("decomposition basis is invertible");
    let mut a = BTreeMap::new();
    let mut b = BTreeMap::new();
    for (i, xi) in x.into_iter().enumerate() {
        if in_k[i] {
            a.insert(i, xi);
        } else {
            b.insert(i, xi);
        }
    }
    (a, b)
}

/// `lhs ≤ rhs` in the order generated by `simple` (nonnegative integer
/// combinations). `simple` must be linearly independent.
pub fn leq_sigma(lhs: &[Int], rhs: &[Int], simple: &[Weight]) -> bool {
    let diff: Vec<Rat> = rhs
        .iter()
        .zip(lhs)
        .map(|(r, l)| Rat::from_integer(r.clone() - l.clone()))
        .collect();
    if simple.is_empty() {
        return diff.iter().all(Zero::is_zero);
    }
    let cols = Matrix::from_rows(simple.to_vec()).transpose();
    let Some(c) = to_ratio(&cols).solve(&diff) else {
        return false;
    };
    // solve() returns some solution; independence makes it unique, but
    // confirm it reproduces the difference exactly
    if to_ratio(&cols).mul_vec(&c) != diff {
        return false;
    }
    c.iter().all(|x| x.is_integer() && !x.is_negative())
}

/// All vectors in `N^len` with coordinate sum at most `bound`, ordered by
/// sum and then lexicographically.
pub fn compositions_up_to(len: usize, bound: u32) -> Vec<Vec<Int>> {
    fn rec(len: usize, total: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == len {
            if total == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        for x in 0..=total {
            prefix.push(x);
            rec(len, total - x, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for total in 0..=bound {
        let mut level = Vec::new();
        rec(len, total, &mut Vec::new(), &mut level);
        out.extend(level);
    }
    out.into_iter()
        .map(|v| v.into_iter().map(Int::from).collect())
        .collect()
}

fn unit(n: usize, i: usize) -> Vec<Int> {
    let mut e = vec![Int::zero(); n];
    e[i] = Int::one();
    e
}

fn height(r: &[Int]) -> Int {
    r.iter().sum()
}

/// `|W_J|` by orbit-stabilizer: `W_{J∖k}` is the stabilizer of `ω_k` in `W_J`.
fn parabolic_order(a: &IntMatrix, j: &[usize]) -> Int {
    let Some((&k, rest)) = j.split_last() else {
        return Int::one();
    };
    let n = a.rows();
    let start = unit(n, k);
    let mut seen: HashSet<Vec<Int>> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for &i in j {
            if v[i].is_zero() {
                continue;
            }
            // s_i(λ) = λ - λ_i α_i, α_i = column i of A
            let w: Vec<Int> = (0..n).map(|r| v[r].clone() - v[i].clone() * a[(r, i)].clone()).collect();
            if seen.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    Int::from(seen.len()) * parabolic_order(a, rest)
}
