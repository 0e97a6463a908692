use std::collections::VecDeque;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::RootError;
use crate::linalg::Matrix;
use crate::{Int, IntMatrix};

/// A finite-type Cartan matrix with its symmetrizers.
///
/// Convention: `A[i][j] = ⟨α_j, α_i^∨⟩`, so column `j` holds the
/// fundamental-weight coordinates of `α_j`. The symmetrizers satisfy
/// `d_i A_ij = d_j A_ji` and are scaled per component so that short roots
/// have `κ(α, α) = 2`, i.e. `κ(α_i, α_j) = d_i A_ij`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CartanDatum {
    matrix: IntMatrix,
    symmetrizers: Vec<Int>,
    label: Option<String>,
}

impl CartanDatum {
    pub fn new(matrix: IntMatrix) -> Result<Self, RootError> {
        let n = matrix.rows();
        if n == 0 || !matrix.is_square() {
            return Err(RootError::InvalidCartan("matrix must be square and nonempty".into()));
        }
        let two = Int::from(2);
        for i in 0..n {
            if matrix[(i, i)] != two {
                return Err(RootError::InvalidCartan(format!("diagonal entry {i} is not 2")));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                if matrix[(i, j)].is_positive() {
                    return Err(RootError::InvalidCartan(format!(
                        "off-diagonal entry ({i}, {j}) is positive"
                    )));
                }
                if matrix[(i, j)].is_zero() != matrix[(j, i)].is_zero() {
                    return Err(RootError::InvalidCartan(format!(
                        "entries ({i}, {j}) and ({j}, {i}) are not both zero or both nonzero"
                    )));
                }
            }
        }
        let symmetrizers = symmetrize(&matrix)?;
        let sym = Matrix::from_fn(n, n, |i, j| symmetrizers[i].clone() * matrix[(i, j)].clone());
        for k in 1..=n {
            let minor = Matrix::from_fn(k, k, |i, j| sym[(i, j)].clone());
            if !minor.integer_determinant().is_positive() {
                return Err(RootError::NotFiniteType(format!(
                    "leading principal minor of size {k} is not positive"
                )));
            }
        }
        Ok(CartanDatum {
            matrix,
            symmetrizers,
            label: None,
        })
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self, RootError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(RootError::InvalidCartan("matrix must be square".into()));
        }
        Self::new(Matrix::from_rows(rows).map(|&x| Int::from(x)))
    }

    /// Parses a type name such as `A2`, `G2`, `E6` or a product `A1xA1`.
    pub fn from_type(name: &str) -> Result<Self, RootError> {
        let unknown = || RootError::UnknownType(name.to_string());
        let mut blocks = Vec::new();
        for part in name.split(['x', '×']) {
            let part = part.trim();
            let mut chars = part.chars();
            let family = chars.next().ok_or_else(unknown)?;
            let n: usize = chars.as_str().parse().map_err(|_| unknown())?;
            blocks.push(simple_type(family.to_ascii_uppercase(), n).ok_or_else(unknown)?);
        }
        let total: usize = blocks.iter().map(Vec::len).sum();
        let mut m = vec![vec![0i64; total]; total];
        let mut off = 0;
        for b in &blocks {
            for (i, row) in b.iter().enumerate() {
                for (j, &x) in row.iter().enumerate() {
                    m[off + i][off + j] = x;
                }
            }
            off += b.len();
        }
        let mut d = Self::from_rows(m)?;
        d.label = Some(name.replace('×', "x"));
        Ok(d)
    }

    pub fn rank(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn symmetrizers(&self) -> &[Int] {
        &self.symmetrizers
    }

    /// Type name when built from one.
    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    /// `κ(α_i, α_j)`.
    pub fn kappa_simple(&self, i: usize, j: usize) -> Int {
        self.symmetrizers[i].clone() * self.matrix[(i, j)].clone()
    }

    /// Node sets of the connected components of the Dynkin diagram.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.rank();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![];
            let mut queue = VecDeque::from([s]);
            seen[s] = true;
            while let Some(i) = queue.pop_front() {
                comp.push(i);
                for j in 0..n {
                    if !seen[j] && !self.matrix[(i, j)].is_zero() {
                        seen[j] = true;
                        queue.push_back(j);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_irreducible(&self) -> bool {
        self.components().len() == 1
    }

    /// Whether `perm` (node `i` ↦ `perm[i]`) preserves the Cartan matrix.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        let n = self.rank();
        if perm.len() != n {
            return false;
        }
        let mut hit = vec![false; n];
        for &p in perm {
            if p >= n || hit[p] {
                return false;
            }
            hit[p] = true;
        }
        (0..n).all(|i| (0..n).all(|j| self.matrix[(perm[i], perm[j])] == self.matrix[(i, j)]))
    }
}

impl fmt::Display for CartanDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.label {
            Some(l) => write!(f, "{l}"),
            None => write!(f, "{}", self.matrix),
        }
    }
}

/// Smallest positive symmetrizers, rescaled so the short roots of each
/// component have `d = 1`.
fn symmetrize(a: &IntMatrix) -> Result<Vec<Int>, RootError> {
    use num_rational::BigRational as Q;
    let n = a.rows();
    let mut d: Vec<Option<Q>> = vec![None; n];
    for s in 0..n {
        if d[s].is_some() {
            continue;
        }
        d[s] = Some(Q::one());
        let mut comp = vec![s];
        let mut queue = VecDeque::from([s]);
        while let Some(i) = queue.pop_front() {
            for j in 0..n {
                if i == j || a[(i, j)].is_zero() {
                    continue;
                }
                // d_j = d_i A_ij / A_ji
                let dj = d[i].clone().unwrap() * Q::new(a[(i, j)].clone(), a[(j, i)].clone());
                match &d[j] {
                    Some(x) if *x != dj => {
                        return Err(RootError::InvalidCartan("matrix is not symmetrizable".into()))
                    }
                    Some(_) => {}
                    None => {
                        d[j] = Some(dj);
                        comp.push(j);
                        queue.push_back(j);
                    }
                }
            }
        }
        let min = comp.iter().map(|&i| d[i].clone().unwrap()).min().unwrap();
        let mut scaled: Vec<Q> = comp.iter().map(|&i| d[i].clone().unwrap() / min.clone()).collect();
        let den = scaled.iter().fold(Int::one(), |acc, x| acc.lcm(x.denom()));
        if !den.is_one() {
            // cannot happen for crystallographic input, but keep values integral
            for x in &mut scaled {
                *x = x.clone() * Q::from_integer(den.clone());
            }
        }
        for (k, &i) in comp.iter().enumerate() {
            d[i] = Some(scaled[k].clone());
        }
    }
    Ok(d.into_iter().map(|x| x.unwrap().to_integer()).collect())
}

fn simple_type(family: char, n: usize) -> Option<Vec<Vec<i64>>> {
    let chain = |n: usize| {
        let mut m = vec![vec![0i64; n]; n];
        for i in 0..n {
            m[i][i] = 2;
            if i + 1 < n {
                m[i][i + 1] = -1;
                m[i + 1][i] = -1;
            }
        }
        m
    };
    let m = match (family, n) {
        ('A', n) if n >= 1 => chain(n),
        ('B', n) if n >= 2 => {
            let mut m = chain(n);
            m[n - 1][n - 2] = -2;
            m
        }
        ('C', n) if n >= 2 => {
            let mut m = chain(n);
            m[n - 2][n - 1] = -2;
            m
        }
        ('D', n) if n >= 3 => {
            let mut m = chain(n);
            m[n - 2][n - 1] = 0;
            m[n - 1][n - 2] = 0;
            m[n - 3][n - 1] = -1;
            m[n - 1][n - 3] = -1;
            m
        }
        ('E', n @ 6..=8) => {
            // Bourbaki labels: 1-3-4-5-..., with 2 attached to 4
            let mut m = vec![vec![0i64; n]; n];
            let mut edge = |a: usize, b: usize| {
                m[a - 1][b - 1] = -1;
                m[b - 1][a - 1] = -1;
            };
            edge(1, 3);
            edge(3, 4);
            edge(2, 4);
            for k in 4..n {
                edge(k, k + 1);
            }
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = 2;
            }
            m
        }
        ('F', 4) => vec![
            vec![2, -1, 0, 0],
            vec![-1, 2, -1, 0],
            vec![0, -2, 2, -1],
            vec![0, 0, -1, 2],
        ],
        ('G', 2) => vec![vec![2, -3], vec![-1, 2]],
        _ => return None,
    };
    Some(m)
}

/// Every irreducible type of rank at most `max_rank`, by name.
pub fn irreducible_types(max_rank: usize) -> Vec<String> {
    let mut out = Vec::new();
    for n in 1..=max_rank {
        out.push(format!("A{n}"));
        if n >= 2 {
            out.push(format!("B{n}"));
        }
        if n >= 3 {
            out.push(format!("C{n}"));
        }
        if n >= 4 {
            out.push(format!("D{n}"));
        }
        if n == 2 {
            out.push("G2".into());
        }
        if n == 4 {
            out.push("F4".into());
        }
        if (6..=8).contains(&n) {
            out.push(format!("E{n}"));
        }
    }
    out
}
