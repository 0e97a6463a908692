//! Exact two-phase simplex for small linear programs.
//!
//! Solves `maximize c·x subject to A x = b, x ≥ 0` over an exact field using
//! Bland's rule, so it always terminates.

use super::{Field, Matrix};

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome<T> {
    Optimal { value: T, point: Vec<T> },
    Infeasible,
    Unbounded,
}

struct Tableau<T> {
    /// `m + 1` rows: constraints then the objective row (reduced costs);
    /// last column is the right-hand side.
    t: Matrix<T>,
    basis: Vec<usize>,
}

impl<T: Field> Tableau<T> {
    fn rows(&self) -> usize {
        self.t.rows() - 1
    }

    fn vars(&self) -> usize {
        self.t.cols() - 1
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = T::one() / self.t[(r, c)].clone();
        for j in 0..self.t.cols() {
            self.t[(r, j)] = self.t[(r, j)].clone() * inv.clone();
        }
        for i in 0..self.t.rows() {
            if i == r || self.t[(i, c)].is_zero() {
                continue;
            }
            let f = self.t[(i, c)].clone();
            for j in 0..self.t.cols() {
                let v = self.t[(r, j)].clone() * f.clone();
                self.t[(i, j)] = self.t[(i, j)].clone() - v;
            }
        }
        self.basis[r] = c;
    }

    /// Runs the simplex on the objective row; `allowed` limits entering columns.
    /// Returns false if unbounded.
    fn optimize(&mut self, allowed: usize) -> bool {
        let m = self.rows();
        let obj = m;
        loop {
            // objective row stores -reduced cost; choose first negative (Bland)
            let Some(c) = (0..allowed).find(|&j| self.t[(obj, j)].is_negative()) else {
                return true;
            };
            let rhs = self.vars();
            let mut best: Option<(usize, T)> = None;
            for i in 0..m {
                if !self.t[(i, c)].is_positive() {
                    continue;
                }
                let ratio = self.t[(i, rhs)].clone() / self.t[(i, c)].clone();
                let better = match &best {
                    None => true,
                    Some((bi, br)) => {
                        ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi])
                    }
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            let Some((r, _)) = best else { return false };
            self.pivot(r, c);
        }
    }
}

pub fn maximize<T: Field>(a: &Matrix<T>, b: &[T], c: &[T]) -> LpOutcome<T> {
    let (m, n) = (a.rows(), a.cols());
    assert_eq!(b.len(), m);
    assert_eq!(c.len(), n);
    // columns: x (n), artificials (m), rhs
    let width = n + m + 1;
    let mut t = Matrix::zeros(m + 1, width);
    for i in 0..m {
        let flip = b[i].is_negative();
        for j in 0..n {
            t[(i, j)] = if flip { -a[(i, j)].clone() } else { a[(i, j)].clone() };
        }
        t[(i, n + i)] = T::one();
        t[(i, n + m)] = if flip { -b[i].clone() } else { b[i].clone() };
    }
    // phase one: maximize -Σ artificials, objective row = -(Σ constraint rows)
    for j in 0..width {
        if (n..n + m).contains(&j) {
            continue;
        }
        let s = (0..m).fold(T::zero(), |acc, i| acc + t[(i, j)].clone());
        t[(m, j)] = -s;
    }
    let mut tab = Tableau {
        t,
        basis: (n..n + m).collect(),
    };
    tab.optimize(n + m);
    if !tab.t[(m, n + m)].is_zero() {
        return LpOutcome::Infeasible;
    }
    // drive remaining artificials out of the basis where possible
    for r in 0..m {
        if tab.basis[r] >= n {
            if let Some(col) = (0..n).find(|&j| !tab.t[(r, j)].is_zero()) {
                tab.pivot(r, col);
            }
        }
    }
    // drop artificial columns (redundant rows keep a zero artificial basic)
    let keep_rows: Vec<usize> = (0..m).filter(|&r| tab.basis[r] < n).collect();
    let mut t2 = Matrix::zeros(keep_rows.len() + 1, n + 1);
    for (ni, &r) in keep_rows.iter().enumerate() {
        for j in 0..n {
            t2[(ni, j)] = tab.t[(r, j)].clone();
        }
        t2[(ni, n)] = tab.t[(r, n + m)].clone();
    }
    let basis: Vec<usize> = keep_rows.iter().map(|&r| tab.basis[r]).collect();
    let k = keep_rows.len();
    for j in 0..=n {
        let mut v = if j < n { -c[j].clone() } else { T::zero() };
        for (i, &bj) in basis.iter().enumerate() {
            v = v + c[bj].clone() * t2[(i, j)].clone();
        }
        t2[(k, j)] = v;
    }
    let mut tab = Tableau { t: t2, basis };
    if !tab.optimize(n) {
        return LpOutcome::Unbounded;
    }
    let mut point = vec![T::zero(); n];
    for (i, &bj) in tab.basis.iter().enumerate() {
        point[bj] = tab.t[(i, n)].clone();
    }
    LpOutcome::Optimal {
        value: tab.t[(k, n)].clone(),
        point,
    }
}

#[cfg(test)]
mod tests {
    use num_rational::Ratio;

    use super::*;

    type Q = Ratio<i64>;

    fn q(x: i64) -> Q {
        Q::from_integer(x)
    }

    #[test]
    fn small_program() {
        // max x + y, x + 2y + s1 = 4, 3x + y + s2 = 6
        let a = Matrix::from_rows(vec![
            vec![q(1), q(2), q(1), q(0)],
            vec![q(3), q(1), q(0), q(1)],
        ]);
        let out = maximize(&a, &[q(4), q(6)], &[q(1), q(1), q(0), q(0)]);
        match out {
            LpOutcome::Optimal { value, point } => {
                assert_eq!(value, Q::new(14, 5));
                assert_eq!(point[0], Q::new(8, 5));
                assert_eq!(point[1], Q::new(6, 5));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn infeasible_and_unbounded() {
        let a = Matrix::from_rows(vec![vec![q(1), q(1)]]);
        assert_eq!(maximize(&a, &[q(-1)], &[q(0), q(0)]), LpOutcome::Infeasible);
        let a = Matrix::from_rows(vec![vec![q(1), q(-1)]]);
        assert_eq!(maximize(&a, &[q(0)], &[q(1), q(0)]), LpOutcome::Unbounded);
    }

    #[test]
    fn redundant_constraints() {
        let a = Matrix::from_rows(vec![vec![q(1), q(1)], vec![q(2), q(2)]]);
        let out = maximize(&a, &[q(1), q(2)], &[q(1), q(0)]);
        assert!(matches!(out, LpOutcome::Optimal { value, .. } if value == q(1)));
    }
}
