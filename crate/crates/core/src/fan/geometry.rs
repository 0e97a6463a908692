//! Exact tests on simplicial cones given by integer ray vectors.

use num_traits::{One, Signed, Zero};

use crate::linalg::lp::{maximize, LpOutcome};
use crate::linalg::{to_ratio, Matrix};
use crate::{Int, Rat};

/// Whether the cones spanned by `a` and `b` (each a linearly independent
/// family) meet exactly in the cone spanned by their common rays.
///
/// Decided by one LP: maximize the weight on non-common rays over
/// `Σ x_r r = Σ y_s s`, `x, y ≥ 0`, `Σ x + Σ y = 1`.
pub fn meet_properly(a: &[Vec<Int>], b: &[Vec<Int>]) -> bool {
    let dim = a.first().or(b.first()).map_or(0, Vec::len);
    let na = a.len();
    let nb = b.len();
    let vars = na + nb;
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for k in 0..dim {
        let mut row = Vec::with_capacity(vars);
        row.extend(a.iter().map(|r| Rat::from_integer(r[k].clone())));
        row.extend(b.iter().map(|s| -Rat::from_integer(s[k].clone())));
        rows.push(row);
    }
    rows.push(vec![Rat::one(); vars]);
    let mut rhs = vec![Rat::zero(); dim];
    rhs.push(Rat::one());
    let objective: Vec<Rat> = a
        .iter()
        .map(|r| if b.contains(r) { Rat::zero() } else { Rat::one() })
        .chain(b.iter().map(|s| if a.contains(s) { Rat::zero() } else { Rat::one() }))
        .collect();
    match maximize(&Matrix::from_rows(rows), &rhs, &objective) {
        LpOutcome::Infeasible => true,
        LpOutcome::Optimal { value, .. } => value.is_zero(),
        LpOutcome::Unbounded => unreachable!("the feasible region is bounded"),
    }
}

/// Share of the nonnegative orthant covered by the simplicial cone on
/// `rays`: the volume of its section by `Σ x = 1`, normalized so the whole
/// orthant has volume one.
pub fn orthant_share(rays: &[Vec<Int>]) -> Rat {
    let det = Matrix::from_rows(rays.to_vec()).integer_determinant().abs();
    let heights = rays.iter().fold(Int::one(), |acc, r| acc * r.iter().sum::<Int>());
    Rat::new(det, heights)
}

/// Whether the rows are linearly independent.
pub fn independent(rows: &[Vec<Int>]) -> bool {
    if rows.is_empty() {
        return true;
    }
    to_ratio(&Matrix::from_rows(rows.to_vec())).rank() == rows.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| Int::from(x)).collect()
    }

    #[test]
    fn proper_and_improper_meetings() {
        let c1 = vec![z(&[1, 0]), z(&[1, 1])];
        let c2 = vec![z(&[1, 1]), z(&[0, 1])];
        assert!(meet_properly(&c1, &c2));
        let c3 = vec![z(&[1, 0]), z(&[1, 2])];
        assert!(!meet_properly(&c3, &c2));
        let c4 = vec![z(&[2, 1]), z(&[0, 1])];
        assert!(!meet_properly(&c1, &c4));
        assert!(meet_properly(&[z(&[1, 0])], &[z(&[0, 1])]));
    }

    #[test]
    fn shares_add_up() {
        let total = orthant_share(&[z(&[1, 0]), z(&[1, 1])]) + orthant_share(&[z(&[1, 1]), z(&[0, 1])]);
        assert_eq!(total, Rat::one());
        assert_eq!(orthant_share(&[z(&[1, 0]), z(&[0, 1])]), Rat::one());
        assert_eq!(orthant_share(&[z(&[2, 0]), z(&[0, 1])]), Rat::one());
    }
}
