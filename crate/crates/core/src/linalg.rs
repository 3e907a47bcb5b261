//! Exact dense linear algebra over `K` and over the residue field `Q`.
//!
//! Pivots are chosen among the admissible entries of a column by lowest
//! representation cost, which keeps rational-function growth in check.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::valfield::{PuiseuxRat, Rat};

pub trait Field: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Panics on a zero divisor; callers only divide by pivots.
    fn div(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn cost(&self) -> u64;
}

impl Field for PuiseuxRat {
    fn zero() -> Self {
        PuiseuxRat::zero()
    }
    fn one() -> Self {
        PuiseuxRat::one()
    }
    fn is_zero(&self) -> bool {
        PuiseuxRat::is_zero(self)
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
        self.checked_div(other).expect("pivot is nonzero")
    }
    fn neg(&self) -> Self {
        -self
    }
    fn cost(&self) -> u64 {
        self.size()
    }
}

impl Field for Rat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
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
    fn neg(&self) -> Self {
        -self
    }
    fn cost(&self) -> u64 {
        self.numer().bits() + self.denom().bits()
    }
}

pub type Matrix<F> = Vec<Vec<F>>;

fn ncols<F>(rows: &Matrix<F>) -> usize {
    rows.first().map_or(0, |r| r.len())
}

/// `target -= factor * pivot`, skipping zero entries of the pivot row.
fn axpy<F: Field>(target: &mut [F], factor: &F, pivot: &[F], from: usize) {
    for j in from..pivot.len() {
        if !pivot[j].is_zero() {
            target[j] = target[j].sub(&factor.mul(&pivot[j]));
        }
    }
}

/// Row echelon form; returns the nonzero rows (a basis of the row space)
/// and their pivot columns.
pub fn echelon<F: Field>(mut rows: Matrix<F>) -> (Matrix<F>, Vec<usize>) {
    let n = ncols(&rows);
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..n {
        if top == rows.len() {
            break;
        }
        let pick = (top..rows.len())
            .filter(|&i| !rows[i][col].is_zero())
            .min_by_key(|&i| rows[i][col].cost());
        let Some(p) = pick else { continue };
        rows.swap(top, p);
        let (head, tail) = rows.split_at_mut(top + 1);
        let pivot_row = &head[top];
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].div(&pivot_row[col]);
            axpy(row, &factor, pivot_row, col);
        }
        pivots.push(col);
        top += 1;
    }
    rows.truncate(top);
    (rows, pivots)
}

pub fn rank<F: Field>(rows: Matrix<F>) -> usize {
    echelon(rows).0.len()
}

/// Reduced row echelon form with unit pivots. Unique for a given row space.
pub fn rref<F: Field>(rows: Matrix<F>) -> (Matrix<F>, Vec<usize>) {
    let (mut rows, pivots) = echelon(rows);
    for (i, &col) in pivots.iter().enumerate().rev() {
        let inv = F::one().div(&rows[i][col]);
        for x in rows[i].iter_mut() {
            if !x.is_zero() {
                *x = x.mul(&inv);
            }
        }
        let pivot_row = rows[i].clone();
        for row in rows.iter_mut().take(i) {
            if !row[col].is_zero() {
                let factor = row[col].clone();
                axpy(row, &factor, &pivot_row, col);
            }
        }
    }
    (rows, pivots)
}

pub fn det<F: Field>(mut m: Matrix<F>) -> F {
    let n = m.len();
    let mut acc = F::one();
    for col in 0..n {
        let pick = (col..n).filter(|&i| !m[i][col].is_zero()).min_by_key(|&i| m[i][col].cost());
        let Some(p) = pick else { return F::zero() };
        if p != col {
            m.swap(p, col);
            acc = acc.neg();
        }
        let (head, tail) = m.split_at_mut(col + 1);
        let pivot_row = &head[col];
        for row in tail.iter_mut() {
            if !row[col].is_zero() {
                let factor = row[col].div(&pivot_row[col]);
                axpy(row, &factor, pivot_row, col);
            }
        }
        acc = acc.mul(&m[col][col]);
    }
    acc
}

/// Basis of `{c : sum_i c_i rows_i = 0}`.
pub fn left_kernel<F: Field>(rows: &Matrix<F>) -> Matrix<F> {
    let m = rows.len();
    let n = ncols(rows);
    let aug: Matrix<F> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut v = r.clone();
            v.extend((0..m).map(|j| if i == j { F::one() } else { F::zero() }));
            v
        })
        .collect();
    let (red, pivots) = echelon(aug);
    red.into_iter()
        .zip(pivots.into_iter().chain(std::iter::repeat(usize::MAX)))
        .filter(|(_, p)| *p >= n)
        .map(|(r, _)| r[n..].to_vec())
        .collect()
}

/// Coefficients `c` with `sum_i c_i rows_i = target`; the rows must be
/// independent.
pub fn express_in_rows<F: Field>(rows: &Matrix<F>, target: &[F]) -> Result<Vec<F>> {
    let k = rows.len();
    let mut all = rows.clone();
    all.push(target.to_vec());
    let kernel = left_kernel(&all);
    let v = kernel
        .into_iter()
        .find(|c| !c[k].is_zero())
        .ok_or_else(|| Error::DegenerateInput("target not in the row span".into()))?;
    let scale = v[k].neg();
    Ok(v[..k].iter().map(|c| c.div(&scale)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::valfield::rat_int;

    fn q(rows: &[&[i64]]) -> Matrix<Rat> {
        rows.iter().map(|r| r.iter().map(|&x| rat_int(x)).collect()).collect()
    }

    fn k(rows: &[&[&str]]) -> Matrix<PuiseuxRat> {
        rows.iter().map(|r| r.iter().map(|s| s.parse().unwrap()).collect()).collect()
    }

    #[test]
    fn rank_over_q() {
        assert_eq!(rank(q(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]])), 2);
        assert_eq!(rank(q(&[&[0, 0]])), 0);
    }

    #[test]
    fn rref_is_canonical() {
        let (a, pa) = rref(q(&[&[1, 1, 0], &[1, -1, 0]]));
        let (b, pb) = rref(q(&[&[2, 0, 0], &[0, 3, 0]]));
        assert_eq!(a, b);
        assert_eq!(pa, pb);
    }

    #[test]
    fn determinant_over_k() {
        let m = k(&[&["t", "1"], &["1", "t"]]);
        assert_eq!(det(m), "t^2 - 1".parse().unwrap());
        let sing = k(&[&["1 + t", "2"], &["(1 + t)^2", "2 + 2*t"]]);
        assert!(Field::is_zero(&det(sing)));
    }

    #[test]
    fn left_kernel_and_expression() {
        let m = k(&[&["1", "t"], &["t", "t^2"], &["0", "1"]]);
        let ker = left_kernel(&m);
        assert_eq!(ker.len(), 1);
        for j in 0..2 {
            let s = (0..3).fold(PuiseuxRat::zero(), |acc, i| &acc + &(&ker[0][i] * &m[i][j]));
            assert!(s.is_zero());
        }
        let rows = k(&[&["1", "t"], &["0", "1"]]);
        let c = express_in_rows(&rows, &k(&[&["2", "3"]])[0]).unwrap();
        assert_eq!(c[0], PuiseuxRat::from_int(2));
        assert_eq!(c[1], "3 - 2*t".parse().unwrap());
    }
}
