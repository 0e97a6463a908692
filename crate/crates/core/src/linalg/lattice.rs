use super::{hermite_form, EuclideanRing, Matrix};

/// A sublattice of `Z^n`, stored by its Hermite-normal-form basis rows.
///
/// Equality of lattices is equality of the canonical bases.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Lattice<T> {
    basis: Matrix<T>,
    pivots: Vec<usize>,
}

impl<T: EuclideanRing> Lattice<T> {
    /// The lattice spanned by the rows of `generators`.
    pub fn from_generators(generators: &Matrix<T>) -> Self {
        let hf = hermite_form(generators);
        Lattice {
            basis: hf.basis(),
            pivots: hf.pivots,
        }
    }

    pub fn from_rows(ambient: usize, rows: Vec<Vec<T>>) -> Self {
        Self::from_generators(&Matrix::from_rows_with_width(rows, Some(ambient)))
    }

    pub fn full(ambient: usize) -> Self {
        Self::from_generators(&Matrix::identity(ambient))
    }

    pub fn zero(ambient: usize) -> Self {
        Self::from_generators(&Matrix::zeros(0, ambient))
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    /// Canonical basis, one vector per row.
    pub fn basis(&self) -> &Matrix<T> {
        &self.basis
    }

    /// Integer coordinates of `v` in the canonical basis, if `v` lies in the lattice.
    pub fn coordinates(&self, v: &[T]) -> Option<Vec<T>> {
        assert_eq!(v.len(), self.ambient_dim(), "vector of wrong dimension");
        let mut rest = v.to_vec();
        let mut coords = Vec::with_capacity(self.rank());
        for (r, &p) in self.pivots.iter().enumerate() {
            let (q, rem) = rest[p].div_rem(&self.basis[(r, p)]);
            if !rem.is_zero() {
                return None;
            }
            if !q.is_zero() {
                for c in 0..rest.len() {
                    let x = self.basis[(r, c)].clone() * q.clone();
                    rest[c] = rest[c].clone() - x;
                }
            }
            coords.push(q);
        }
        rest.iter().all(T::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &[T]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Whether `other ⊆ self`.
    pub fn contains_lattice(&self, other: &Lattice<T>) -> bool {
        other.basis.iter_rows().all(|r| self.contains(r))
    }

    pub fn sum(&self, other: &Lattice<T>) -> Self {
        Self::from_generators(&self.basis.vstack(&other.basis))
    }

    /// The element of the coset `v + self` with pivot entries reduced into
    /// `[0, pivot)`; two vectors are congruent iff their reductions agree.
    pub fn reduce(&self, v: &[T]) -> Vec<T> {
        let mut rest = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            let q = rest[p].div_floor(&self.basis[(r, p)]);
            if q.is_zero() {
                continue;
            }
            for c in 0..rest.len() {
                let x = self.basis[(r, c)].clone() * q.clone();
                rest[c] = rest[c].clone() - x;
            }
        }
        rest
    }

    /// Expresses every basis vector of `sub` in the basis of `self`.
    ///
    /// Returns `None` unless `sub ⊆ self`.
    pub fn relative_basis(&self, sub: &Lattice<T>) -> Option<Matrix<T>> {
        let rows = sub
            .basis
            .iter_rows()
            .map(|r| self.coordinates(r))
            .collect::<Option<Vec<_>>>()?;
        Some(Matrix::from_rows_with_width(rows, Some(self.rank())))
    }

    /// Maps lattice coordinates back into the ambient space.
    pub fn from_coordinates(&self, coords: &[T]) -> Vec<T> {
        self.basis.vec_mul(coords)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_and_reduction() {
        let l = Lattice::from_rows(2, vec![vec![2i64, 0], vec![1, 1]]);
        assert_eq!(l.rank(), 2);
        assert!(l.contains(&[3, 1]));
        assert!(!l.contains(&[1, 0]));
        assert_eq!(l.reduce(&[3, 1]), vec![0, 0]);
        assert_eq!(l.reduce(&[5, 4]), l.reduce(&[1, 0]));
        let c = l.coordinates(&[3, 5]).unwrap();
        assert_eq!(l.from_coordinates(&c), vec![3, 5]);
    }

    #[test]
    fn sublattice_tests() {
        let big = Lattice::<i64>::full(2);
        let small = Lattice::from_rows(2, vec![vec![2, 2], vec![0, 4]]);
        assert!(big.contains_lattice(&small));
        assert!(!small.contains_lattice(&big));
        assert_eq!(big.sum(&small), big);
        let rel = big.relative_basis(&small).unwrap();
        assert_eq!(rel.integer_determinant().abs(), 8);
    }
}
