use std::fmt;

use super::field::{Elem, Field};
use crate::error::MatrixError;

/// A dense row-major matrix over F_q.
///
/// The matrix does not carry its field; arithmetic takes the field as an
/// argument so that many matrices can share one set of tables.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FqMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl fmt::Debug for FqMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<u32>> = (0..self.rows)
            .map(|r| self.row(r).iter().map(|e| e.code()).collect())
            .collect();
        write!(f, "FqMatrix{rows:?}")
    }
}

impl FqMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        FqMatrix {
            rows,
            cols,
            data: vec![Elem::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Elem::ONE);
        }
        m
    }

    pub fn from_elems(rows: usize, cols: usize, data: Vec<Elem>) -> Result<Self, MatrixError> {
        if data.len() != rows * cols {
            return Err(MatrixError::ShapeMismatch {
                left_rows: rows,
                left_cols: cols,
                right_rows: data.len(),
                right_cols: 1,
            });
        }
        Ok(FqMatrix { rows, cols, data })
    }

    /// Builds a matrix from rows of integer codes, checking each code is in `[0, q)`.
    pub fn from_codes<R: AsRef<[u32]>>(field: &Field, rows: &[R]) -> Result<Self, MatrixError> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(MatrixError::ShapeMismatch {
                    left_rows: rows.len(),
                    left_cols: cols,
                    right_rows: 1,
                    right_cols: r.len(),
                });
            }
            for &c in r {
                data.push(field.elem(c).ok_or(MatrixError::BadEntry { code: c, q: field.q() })?);
            }
        }
        Ok(FqMatrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Elem] {
        &self.data
    }

    pub fn codes(&self) -> Vec<Vec<u32>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(|e| e.code()).collect())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn neg(&self, field: &Field) -> Self {
        FqMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&e| field.neg(e)).collect(),
        }
    }

    pub fn add(&self, other: &Self, field: &Field) -> Result<Self, MatrixError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(self.mismatch(other));
        }
        Ok(FqMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| field.add(a, b)).collect(),
        })
    }

    pub fn scale(&self, s: Elem, field: &Field) -> Self {
        FqMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&e| field.mul(s, e)).collect(),
        }
    }

    pub fn mul(&self, other: &Self, field: &Field) -> Result<Self, MatrixError> {
        if self.cols != other.rows {
            return Err(self.mismatch(other));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let v = field.add(out.get(r, c), field.mul(a, other.get(k, c)));
                    out.set(r, c, v);
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product `self * v`.
    pub fn apply(&self, v: &[Elem], field: &Field) -> Vec<Elem> {
        debug_assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(Elem::ZERO, |acc, (&a, &b)| field.add(acc, field.mul(a, b)))
            })
            .collect()
    }

    /// Bilinear form `u^T self v`.
    pub fn bilinear(&self, u: &[Elem], v: &[Elem], field: &Field) -> Elem {
        let bv = self.apply(v, field);
        u.iter()
            .zip(&bv)
            .fold(Elem::ZERO, |acc, (&a, &b)| field.add(acc, field.mul(a, b)))
    }

    /// Submatrix on the given rows (all columns).
    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend_from_slice(self.row(r));
        }
        FqMatrix {
            rows: rows.len(),
            cols: self.cols,
            data,
        }
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Result<Self, MatrixError> {
        if self.cols != other.cols && self.rows > 0 && other.rows > 0 {
            return Err(self.mismatch(other));
        }
        let cols = if self.rows > 0 { self.cols } else { other.cols };
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(FqMatrix {
            rows: self.rows + other.rows,
            cols,
            data,
        })
    }

    /// Reduced row echelon form by Gauss-Jordan elimination.
    pub fn rref(&self, field: &Field) -> EchelonForm {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..m.cols {
            if lead == m.rows {
                break;
            }
            let Some(pr) = (lead..m.rows).find(|&r| !m.get(r, c).is_zero()) else {
                continue;
            };
            m.swap_rows(lead, pr);
            let inv = field.inv(m.get(lead, c)).expect("pivot is nonzero");
            for j in c..m.cols {
                let v = field.mul(inv, m.get(lead, j));
                m.set(lead, j, v);
            }
            for r in 0..m.rows {
                if r == lead {
                    continue;
                }
                let factor = m.get(r, c);
                if factor.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = field.sub(m.get(r, j), field.mul(factor, m.get(lead, j)));
                    m.set(r, j, v);
                }
            }
            pivots.push(c);
            lead += 1;
        }
        EchelonForm { matrix: m, pivots }
    }

    pub fn rank(&self, field: &Field) -> usize {
        self.rref(field).rank()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn mismatch(&self, other: &Self) -> MatrixError {
        MatrixError::ShapeMismatch {
            left_rows: self.rows,
            left_cols: self.cols,
            right_rows: other.rows,
            right_cols: other.cols,
        }
    }
}

/// A matrix in reduced row echelon form together with its pivot columns
/// (0-indexed, strictly increasing). Rows past `rank()` are zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EchelonForm {
    matrix: FqMatrix,
    pivots: Vec<usize>,
}

impl EchelonForm {
    /// Wraps a matrix already known to be in reduced row echelon form.
    pub(crate) fn from_parts(matrix: FqMatrix, pivots: Vec<usize>) -> Self {
        EchelonForm { matrix, pivots }
    }

    pub fn matrix(&self) -> &FqMatrix {
        &self.matrix
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// The nonzero rows, a basis of the row space.
    pub fn basis(&self) -> FqMatrix {
        let rows: Vec<usize> = (0..self.rank()).collect();
        self.matrix.select_rows(&rows)
    }

    pub fn into_matrix(self) -> FqMatrix {
        self.matrix
    }

    /// Checks the reduced row echelon shape: unit pivots, zero pivot
    /// columns elsewhere, zero rows past the rank, and each pivot being the
    /// leading nonzero entry of its row.
    pub fn is_canonical(&self) -> bool {
        let m = &self.matrix;
        if self.pivots.windows(2).any(|w| w[0] >= w[1]) || self.rank() > m.rows() {
            return false;
        }
        for (r, &p) in self.pivots.iter().enumerate() {
            if m.get(r, p) != Elem::ONE || m.row(r)[..p].iter().any(|e| !e.is_zero()) {
                return false;
            }
            if (0..m.rows()).any(|r2| r2 != r && !m.get(r2, p).is_zero()) {
                return false;
            }
        }
        (self.rank()..m.rows()).all(|r| m.row(r).iter().all(|e| e.is_zero()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random(field: &Field, rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> FqMatrix {
        let data = (0..rows * cols)
            .map(|_| field.elem(rng.gen_range(0..field.q())).unwrap())
            .collect();
        FqMatrix::from_elems(rows, cols, data).unwrap()
    }

    #[test]
    fn identity_is_neutral() {
        let f = Field::new(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let a = random(&f, 3, 4, &mut rng);
        assert_eq!(FqMatrix::identity(3).mul(&a, &f).unwrap(), a);
    }

    #[test]
    fn negation_is_identity_in_char_two() {
        let f = Field::new(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let a = random(&f, 4, 4, &mut rng);
        assert_eq!(a.neg(&f), a);
        let f8 = Field::new(8).unwrap();
        let b = random(&f8, 3, 3, &mut rng);
        assert_eq!(b.neg(&f8), b);
    }

    #[test]
    fn transpose_reverses_products() {
        let f = Field::new(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let a = random(&f, 3, 3, &mut rng);
            let b = random(&f, 3, 3, &mut rng);
            let lhs = a.mul(&b, &f).unwrap().transpose();
            let rhs = b.transpose().mul(&a.transpose(), &f).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn shape_mismatch() {
        let f = Field::new(2).unwrap();
        let a = FqMatrix::zeros(2, 3);
        assert!(matches!(a.mul(&a, &f), Err(MatrixError::ShapeMismatch { .. })));
    }

    #[test]
    fn rref_small_cases() {
        let f = Field::new(2).unwrap();
        let id = FqMatrix::identity(3).rref(&f);
        assert_eq!(id.pivots(), &[0, 1, 2]);
        assert_eq!(id.matrix(), &FqMatrix::identity(3));

        let m = FqMatrix::from_codes(&f, &[[0, 1], [0, 0]]).unwrap().rref(&f);
        assert_eq!(m.pivots(), &[1]);
        assert_eq!(m.rank(), 1);
        assert!(m.is_canonical());
    }

    #[test]
    fn rref_is_invariant_under_row_operations() {
        let f = Field::new(9).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..100 {
            let a = random(&f, 3, 5, &mut rng);
            let p = loop {
                let p = random(&f, 3, 3, &mut rng);
                if p.rank(&f) == 3 {
                    break p;
                }
            };
            let ra = a.rref(&f);
            assert!(ra.is_canonical());
            assert_eq!(ra.matrix().rref(&f), ra);
            assert_eq!(p.mul(&a, &f).unwrap().rref(&f), ra);
        }
    }

    #[test]
    fn rref_zero_rows_trail() {
        let f = Field::new(3).unwrap();
        let m = FqMatrix::from_codes(&f, &[[1, 2, 0], [2, 1, 0], [0, 0, 1]]).unwrap();
        let e = m.rref(&f);
        assert_eq!(e.rank(), 2);
        assert_eq!(e.pivots(), &[0, 2]);
        assert!(e.is_canonical());
        assert_eq!(e.basis().rows(), 2);
    }
}
