//! Integer matrices with exact signature and rank.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::poly::LaurentPoly;
use crate::Error;

/// Dense matrix over arbitrary-precision integers, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m.set_i64(i, i, 1);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, data }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        IntMatrix::from_fn(r, c, |i, j| BigInt::from(rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn set_i64(&mut self, i: usize, j: usize, v: i64) {
        self.set(i, j, BigInt::from(v));
    }

    pub fn transpose(&self) -> Self {
        IntMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        IntMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + other.get(i, j))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        IntMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) - other.get(i, j))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        IntMatrix::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).map(|k| self.get(i, k) * other.get(k, j)).sum()
        })
    }

    /// `A + A^T`.
    pub fn symmetrized(&self) -> Self {
        self.add(&self.transpose())
    }

    /// `A - A^T`.
    pub fn skew_part(&self) -> Self {
        self.sub(&self.transpose())
    }

    /// The matrix of Laurent polynomials `A - t A^T`.
    pub fn alexander_matrix(&self) -> Vec<Vec<LaurentPoly>> {
        assert_eq!(self.rows, self.cols);
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| {
                        let a = LaurentPoly::from_coeffs(0, vec![self.get(i, j).clone()]);
                        let b = LaurentPoly::from_coeffs(1, vec![self.get(j, i).clone()]);
                        a.sub(&b)
                    })
                    .collect()
            })
            .collect()
    }

    fn to_rationals(&self) -> Vec<Vec<BigRational>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| BigRational::from(self.get(i, j).clone())).collect())
            .collect()
    }
}

/// Exact rank over the rationals by Gaussian elimination.
pub fn matrix_rank_rational(m: &IntMatrix) -> usize {
    let mut a = m.to_rationals();
    let (rows, cols) = (m.rows(), m.cols());
    let mut rank = 0;
    let mut col = 0;
    while rank < rows && col < cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            col += 1;
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..rows {
            if a[r][col].is_zero() {
                continue;
            }
            let (top, bottom) = a.split_at_mut(r);
            let pivot_row = &top[rank];
            let row = &mut bottom[0];
            let factor = &row[col] / &pivot_row[col];
            for (c, p) in pivot_row.iter().enumerate().skip(col) {
                let sub = &factor * p;
                row[c] -= sub;
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}

/// Exact signature (#positive minus #negative eigenvalues) of a symmetric
/// integer matrix.
///
/// Rational symmetric elimination: nonzero diagonal entries are used as
/// pivots directly; when the remaining diagonal is zero, a nonzero
/// off-diagonal entry spans a hyperbolic plane contributing +1 and -1.
pub fn symmetric_signature(m: &IntMatrix) -> Result<i64, Error> {
    let (pos, neg, _) = symmetric_inertia(m)?;
    Ok(pos as i64 - neg as i64)
}

/// Exact inertia `(pos, neg, zero)` of a symmetric integer matrix.
pub fn symmetric_inertia(m: &IntMatrix) -> Result<(usize, usize, usize), Error> {
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = m.rows();
    let mut s = m.to_rationals();
    let mut alive: Vec<usize> = (0..n).collect();
    let (mut pos, mut neg) = (0usize, 0usize);
    while !alive.is_empty() {
        if let Some(&k) = alive.iter().find(|&&k| !s[k][k].is_zero()) {
            if s[k][k].is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            let pivot = s[k][k].clone();
            alive.retain(|&x| x != k);
            for &i in &alive {
                if s[i][k].is_zero() {
                    continue;
                }
                let fi = &s[i][k] / &pivot;
                for &j in &alive {
                    let sub = &fi * &s[k][j];
                    s[i][j] -= sub;
                }
            }
            for &i in &alive {
                s[i][k] = BigRational::zero();
                s[k][i] = BigRational::zero();
            }
        } else if let Some((k, l)) = find_offdiag(&s, &alive) {
            // Hyperbolic pair: contributes one positive and one negative
            // eigenvalue. For remaining indices,
            // S'_ij = S_ij - (S_ik S_jl + S_il S_jk) / S_kl.
            pos += 1;
            neg += 1;
            let a = s[k][l].clone();
            alive.retain(|&x| x != k && x != l);
            let snapshot = s.clone();
            for &i in &alive {
                for &j in &alive {
                    let num = &snapshot[i][k] * &snapshot[j][l] + &snapshot[i][l] * &snapshot[j][k];
                    let sub = num / &a;
                    s[i][j] -= sub;
                }
            }
        } else {
            return Ok((pos, neg, alive.len()));
        }
    }
    Ok((pos, neg, 0))
}

fn find_offdiag(s: &[Vec<BigRational>], alive: &[usize]) -> Option<(usize, usize)> {
    for (a, &k) in alive.iter().enumerate() {
        for &l in &alive[a + 1..] {
            if !s[k][l].is_zero() {
                return Some((k, l));
            }
        }
    }
    None
}
