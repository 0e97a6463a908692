use super::{EuclideanRing, Matrix};

/// Row Hermite normal form `H = U A` with `U` unimodular.
///
/// `H` is in row echelon form with positive pivots, entries above each
/// pivot reduced into `[0, pivot)`, and zero rows last.
#[derive(Clone, Debug)]
pub struct HermiteForm<T> {
    pub h: Matrix<T>,
    pub u: Matrix<T>,
    pub pivots: Vec<usize>,
}

impl<T: EuclideanRing> HermiteForm<T> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// The nonzero rows of `H`.
    pub fn basis(&self) -> Matrix<T> {
        self.h.select_rows(&(0..self.rank()).collect::<Vec<_>>())
    }
}

fn row_axpy<T: EuclideanRing>(m: &mut Matrix<T>, target: usize, source: usize, f: &T) {
    if f.is_zero() {
        return;
    }
    for c in 0..m.cols() {
        let v = m[(source, c)].clone() * f.clone();
        m[(target, c)] = m[(target, c)].clone() + v;
    }
}

fn col_axpy<T: EuclideanRing>(m: &mut Matrix<T>, target: usize, source: usize, f: &T) {
    if f.is_zero() {
        return;
    }
    for r in 0..m.rows() {
        let v = m[(r, source)].clone() * f.clone();
        m[(r, target)] = m[(r, target)].clone() + v;
    }
}

fn negate_row<T: EuclideanRing>(m: &mut Matrix<T>, r: usize) {
    for c in 0..m.cols() {
        m[(r, c)] = -m[(r, c)].clone();
    }
}

pub fn hermite_form<T: EuclideanRing>(a: &Matrix<T>) -> HermiteForm<T> {
    let mut h = a.clone();
    let mut u = Matrix::identity(a.rows());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..h.cols() {
        if r == h.rows() {
            break;
        }
        loop {
            let best = (r..h.rows())
                .filter(|&i| !h[(i, c)].is_zero())
                .min_by(|&i, &j| h[(i, c)].abs().cmp(&h[(j, c)].abs()));
            let Some(best) = best else { break };
            h.swap_rows(r, best);
            u.swap_rows(r, best);
            let mut clean = true;
            for i in r + 1..h.rows() {
                if h[(i, c)].is_zero() {
                    continue;
                }
                let q = -h[(i, c)].div_floor(&h[(r, c)]);
                row_axpy(&mut h, i, r, &q);
                row_axpy(&mut u, i, r, &q);
                if !h[(i, c)].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if h[(r, c)].is_zero() {
            continue;
        }
        if h[(r, c)].is_negative() {
            negate_row(&mut h, r);
            negate_row(&mut u, r);
        }
        for i in 0..r {
            let q = -h[(i, c)].div_floor(&h[(r, c)]);
            row_axpy(&mut h, i, r, &q);
            row_axpy(&mut u, i, r, &q);
        }
        pivots.push(c);
        r += 1;
    }
    HermiteForm { h, u, pivots }
}

/// Basis (in Hermite form) of `{x ∈ Z^rows : x A = 0}`.
pub fn left_kernel<T: EuclideanRing>(a: &Matrix<T>) -> Matrix<T> {
    let hf = hermite_form(a);
    let zero_rows: Vec<usize> = (hf.rank()..a.rows()).collect();
    let k = hf.u.select_rows(&zero_rows);
    if k.rows() == 0 {
        return k;
    }
    hermite_form(&k).basis()
}

/// Smith normal form `D = U A V` with `U`, `V` unimodular.
#[derive(Clone, Debug)]
pub struct SmithForm<T> {
    /// Diagonal entries, each dividing the next; zeros (if any) last.
    pub diagonal: Vec<T>,
    pub u: Matrix<T>,
    pub v: Matrix<T>,
}

impl<T: EuclideanRing> SmithForm<T> {
    /// The entries different from one, zeros included.
    pub fn invariant_factors(&self) -> Vec<T> {
        self.diagonal.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

pub fn smith_form<T: EuclideanRing>(a: &Matrix<T>) -> SmithForm<T> {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = Matrix::identity(m);
    let mut v = Matrix::identity(n);
    let mut diagonal = Vec::new();
    for t in 0..m.min(n) {
        let best = (t..m)
            .flat_map(|i| (t..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !d[(i, j)].is_zero())
            .min_by(|&x, &y| d[x].abs().cmp(&d[y].abs()));
        let Some((bi, bj)) = best else { break };
        d.swap_rows(t, bi);
        u.swap_rows(t, bi);
        d.swap_cols(t, bj);
        v.swap_cols(t, bj);
        loop {
            let mut clean = true;
            for i in t + 1..m {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = -d[(i, t)].div_floor(&d[(t, t)]);
                row_axpy(&mut d, i, t, &q);
                row_axpy(&mut u, i, t, &q);
                clean &= d[(i, t)].is_zero();
            }
            for j in t + 1..n {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = -d[(t, j)].div_floor(&d[(t, t)]);
                col_axpy(&mut d, j, t, &q);
                col_axpy(&mut v, j, t, &q);
                clean &= d[(t, j)].is_zero();
            }
            if !clean {
                let row_best = (t + 1..m)
                    .filter(|&i| !d[(i, t)].is_zero())
                    .min_by(|&x, &y| d[(x, t)].abs().cmp(&d[(y, t)].abs()));
                if let Some(i) = row_best {
                    if d[(i, t)].abs() < d[(t, t)].abs() {
                        d.swap_rows(t, i);
                        u.swap_rows(t, i);
                    }
                }
                let col_best = (t + 1..n)
                    .filter(|&j| !d[(t, j)].is_zero())
                    .min_by(|&x, &y| d[(t, x)].abs().cmp(&d[(t, y)].abs()));
                if let Some(j) = col_best {
                    if d[(t, j)].abs() < d[(t, t)].abs() {
                        d.swap_cols(t, j);
                        v.swap_cols(t, j);
                    }
                }
                continue;
            }
            // divisibility of the remaining block by the pivot
            let bad = (t + 1..m).find(|&i| {
                (t + 1..n).any(|j| !d[(i, j)].is_multiple_of(&d[(t, t)]))
            });
            match bad {
                Some(i) => {
                    let one = T::one();
                    row_axpy(&mut d, t, i, &one);
                    row_axpy(&mut u, t, i, &one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            negate_row(&mut d, t);
            negate_row(&mut u, t);
        }
        diagonal.push(d[(t, t)].clone());
    }
    while diagonal.len() < m.min(n) {
        diagonal.push(T::zero());
    }
    SmithForm { diagonal, u, v }
}

impl<T: EuclideanRing> Matrix<T> {
    /// Fraction-free (Bareiss) determinant.
    pub fn integer_determinant(&self) -> T {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows();
        if n == 0 {
            return T::one();
        }
        let mut m = self.clone();
        let mut sign = T::one();
        let mut prev = T::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[(i, k)].is_zero()) else {
                    return T::zero();
                };
                m.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[(i, j)].clone() * m[(k, k)].clone()
                        - m[(i, k)].clone() * m[(k, j)].clone();
                    m[(i, j)] = num / prev.clone();
                }
            }
            prev = m[(k, k)].clone();
        }
        sign * m[(n - 1, n - 1)].clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(rows: &[&[i64]]) -> Matrix<i64> {
        Matrix::from_rows(rows.iter().map(|r| r.to_vec()).collect())
    }

    #[test]
    fn hermite_of_small_matrix() {
        let a = z(&[&[4, 6], &[2, 2]]);
        let hf = hermite_form(&a);
        assert_eq!(hf.u.mul(&a), hf.h);
        assert_eq!(hf.basis(), z(&[&[2, 0], &[0, 2]]));
        assert_eq!(hf.u.integer_determinant().abs(), 1);
    }

    #[test]
    fn smith_of_small_matrix() {
        let a = z(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let sf = smith_form(&a);
        assert_eq!(sf.diagonal, vec![2, 6, 12]);
        let d = sf.u.mul(&a).mul(&sf.v);
        assert_eq!(d, Matrix::diagonal(&[2, 6, 12]));
    }

    #[test]
    fn left_kernel_of_dependent_rows() {
        let a = z(&[&[1, 2], &[2, 4], &[0, 1]]);
        let k = left_kernel(&a);
        assert_eq!(k.rows(), 1);
        assert!(k.mul(&a).is_zero());
    }

    #[test]
    fn bareiss_agrees_with_known_determinants() {
        assert_eq!(z(&[&[2, -1], &[-1, 2]]).integer_determinant(), 3);
        assert_eq!(z(&[&[0, 1], &[1, 0]]).integer_determinant(), -1);
        assert_eq!(
            z(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]).integer_determinant(),
            4
        );
    }
}
