//! Exact Gaussian elimination over a field.

use num_traits::{One, Zero};

use super::rational::Rational;
use super::ratfunc::RatFunc;

/// The field operations elimination needs.
pub trait Field: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(q: &Rational) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Panics on a zero divisor.
    fn div(&self, other: &Self) -> Self;
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn div(&self, other: &Self) -> Self {
        self / other
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn from_rational(q: &Rational) -> Self {
        RatFunc::constant(q.clone())
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn div(&self, other: &Self) -> Self {
        self / other
    }
}

/// Dense row-major matrix.
pub type Matrix<F> = Vec<Vec<F>>;

/// Reduces in place to reduced row echelon form; returns the pivot columns.
pub fn rref<F: Field>(m: &mut Matrix<F>, cols: usize) -> Vec<usize> {
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = F::one().div(&m[r][c]);
        for v in &mut m[r][c..cols] {
            *v = v.mul(&inv);
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pivot = m[r][c..cols].to_vec();
                for (v, pv) in m[i][c..cols].iter_mut().zip(&pivot) {
                    *v = v.sub(&f.mul(pv));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(m: &Matrix<F>, cols: usize) -> usize {
    let mut work = m.clone();
    rref(&mut work, cols).len()
}

/// Basis of `{v : M v = 0}`, one vector per free column, with a `1` in that
/// column.
pub fn nullspace<F: Field>(m: &Matrix<F>, cols: usize) -> Vec<Vec<F>> {
    let mut work = m.clone();
    let pivots = rref(&mut work, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![F::zero(); cols];
            v[f] = F::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = F::zero().sub(&work[row][f]);
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational::int;
    use crate::poly::univariate::RationalPoly;

    #[test]
    fn rational_nullspace() {
        // rows: x + y + z = 0, 2x + 2y + 2z = 0
        let m = vec![vec![int(1), int(1), int(1)], vec![int(2), int(2), int(2)]];
        assert_eq!(rank(&m, 3), 1);
        let ns = nullspace(&m, 3);
        assert_eq!(ns.len(), 2);
        for v in ns {
            let s: Rational = v.iter().sum();
            assert!(Zero::is_zero(&s));
        }
    }

    #[test]
    fn parametric_nullspace_over_function_field() {
        // [[t, 1], [1, 1/t]] has rank 1 over Q(t)
        let t = RatFunc::x();
        let one = RatFunc::one();
        let m = vec![vec![t.clone(), one.clone()], vec![one.clone(), &one / &t]];
        assert_eq!(rank(&m, 2), 1);
        let ns = nullspace(&m, 2);
        assert_eq!(ns.len(), 1);
        // v = (-1/t, 1)
        assert_eq!(ns[0][0], -&(&one / &t));
        let _ = RationalPoly::x();
    }
}
