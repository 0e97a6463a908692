use super::{Field, Matrix};

impl<T: Field> Matrix<T> {
    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix<T>, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols() {
            if r == m.rows() {
                break;
            }
            let Some(p) = (r..m.rows()).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = T::one() / m[(r, c)].clone();
            for j in c..m.cols() {
                m[(r, j)] = m[(r, j)].clone() * inv.clone();
            }
            for i in 0..m.rows() {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols() {
                    let v = m[(r, j)].clone() * f.clone();
                    m[(i, j)] = m[(i, j)].clone() - v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn determinant(&self) -> T {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let mut m = self.clone();
        let n = m.rows();
        let mut det = T::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return T::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det = det * pivot.clone();
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone() / pivot.clone();
                for j in c..n {
                    let v = m[(c, j)].clone() * f.clone();
                    m[(i, j)] = m[(i, j)].clone() - v;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Matrix<T>> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows();
        let (r, pivots) = self.hstack(&Matrix::identity(n)).rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| r[(i, n + j)].clone()))
    }

    /// Some solution of `M x = b` (free variables set to zero), if consistent.
    pub fn solve(&self, b: &[T]) -> Option<Vec<T>> {
        assert_eq!(self.rows(), b.len());
        let aug = self.hstack(&Matrix::from_fn(b.len(), 1, |i, _| b[i].clone()));
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols()) {
            return None;
        }
        let mut x = vec![T::zero(); self.cols()];
        for (row, &c) in pivots.iter().enumerate() {
            x[c] = r[(row, self.cols())].clone();
        }
        Some(x)
    }

    /// Some solution of `x M = v`, if consistent.
    pub fn solve_left(&self, v: &[T]) -> Option<Vec<T>> {
        self.transpose().solve(v)
    }

    /// Basis of the right null space `{x : M x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<T>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols()).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![T::zero(); self.cols()];
                x[f] = T::one();
                for (row, &c) in pivots.iter().enumerate() {
                    x[c] = -r[(row, f)].clone();
                }
                x
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use num_rational::Ratio;

    use super::*;

    type Q = Ratio<i64>;

    fn q(rows: &[&[i64]]) -> Matrix<Q> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Q::from_integer(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn inverse_of_a2_cartan() {
        let a = q(&[&[2, -1], &[-1, 2]]);
        let inv = a.inverse().unwrap();
        assert_eq!(inv[(0, 0)], Q::new(2, 3));
        assert_eq!(inv[(0, 1)], Q::new(1, 3));
        assert_eq!(a.mul(&inv), Matrix::identity(2));
        assert_eq!(a.determinant(), Q::from_integer(3));
    }

    #[test]
    fn singular_matrix_has_no_inverse() {
        let a = q(&[&[1, 2], &[2, 4]]);
        assert!(a.inverse().is_none());
        assert_eq!(a.rank(), 1);
        assert_eq!(a.nullspace().len(), 1);
        assert!(a.solve(&[Q::from_integer(1), Q::from_integer(0)]).is_none());
    }
}
