use alloc::vec;
use alloc::vec::Vec;

use super::{FVector, Fe, FiniteField};
use crate::{Error, Result};

/// Dense row-major matrix over some `F_q`. The field is passed to each
/// operation that needs arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Fe>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Fe::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Fe::ONE);
        }
        m
    }

    /// Builds a matrix from rows of equal length. An empty list gives a
    /// `0 x cols` matrix only through [`Matrix::zeros`].
    pub fn from_rows(rows: &[Vec<Fe>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    actual: r.len(),
                });
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn from_u8_rows(rows: &[&[u8]]) -> Result<Self> {
        let rows: Vec<Vec<Fe>> = rows.iter().map(|r| r.iter().map(|&x| Fe(x)).collect()).collect();
        Self::from_rows(&rows)
    }

    /// Matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_columns(rows: usize, columns: &[FVector]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    actual: c.len(),
                });
            }
            for (i, &x) in c.coords().iter().enumerate() {
                m.set(i, j, x);
            }
        }
        Ok(m)
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
    pub fn get(&self, r: usize, c: usize) -> Fe {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, x: Fe) {
        self.data[r * self.cols + c] = x;
    }

    pub fn row(&self, r: usize) -> &[Fe] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> FVector {
        FVector::new((0..self.rows).map(|r| self.get(r, c)).collect())
    }

    pub fn row_vectors(&self) -> impl Iterator<Item = &[Fe]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// Appends the rows of `other` below `self`.
    pub fn stack(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows > 0 && other.rows > 0 && self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                actual: other.cols,
            });
        }
        let cols = if self.rows > 0 { self.cols } else { other.cols };
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix {
            rows: self.rows + other.rows,
            cols,
            data,
        })
    }

    pub fn mul(&self, f: &FiniteField, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                actual: other.rows,
            });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let s = f.sum((0..self.cols).map(|t| f.mul(self.get(i, t), other.get(t, j))));
                out.set(i, j, s);
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, f: &FiniteField, v: &FVector) -> Result<FVector> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                actual: v.len(),
            });
        }
        Ok(FVector::new(
            (0..self.rows)
                .map(|r| f.inner_unchecked(self.row(r), v.coords()))
                .collect(),
        ))
    }

    /// Reduced row echelon form and the pivot column of each nonzero row.
    pub fn rref(&self, f: &FiniteField) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = f.inv(m.get(r, c)).unwrap();
            m.scale_row(f, r, inv);
            for i in 0..m.rows {
                let factor = m.get(i, c);
                if i != r && !factor.is_zero() {
                    m.add_row_multiple(f, i, r, f.neg(factor));
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self, f: &FiniteField) -> usize {
        self.rref(f).1.len()
    }

    pub fn inverse(&self, f: &FiniteField) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                actual: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, Fe::ONE);
        }
        let (red, pivots) = aug.rref(f);
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Singular);
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, red.get(i, n + j));
            }
        }
        Ok(inv)
    }

    pub fn determinant(&self, f: &FiniteField) -> Result<Fe> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                actual: self.cols,
            });
        }
        let mut m = self.clone();
        let mut det = Fe::ONE;
        for c in 0..m.cols {
            let Some(pr) = (c..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(Fe::ZERO);
            };
            if pr != c {
                m.swap_rows(c, pr);
                det = f.neg(det);
            }
            let pivot = m.get(c, c);
            det = f.mul(det, pivot);
            let inv = f.inv(pivot).unwrap();
            for i in c + 1..m.rows {
                let factor = f.mul(m.get(i, c), inv);
                if !factor.is_zero() {
                    m.add_row_multiple(f, i, c, f.neg(factor));
                }
            }
        }
        Ok(det)
    }

    /// Some `x` with `self * x = b`, if the system is consistent.
    pub fn solve(&self, f: &FiniteField, b: &FVector) -> Result<Option<FVector>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                actual: b.len(),
            });
        }
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols, b.coords()[i]);
        }
        let (red, pivots) = aug.rref(f);
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = FVector::zeros(self.cols);
        for (r, &c) in pivots.iter().enumerate() {
            x.coords_mut()[c] = red.get(r, self.cols);
        }
        Ok(Some(x))
    }

    /// Basis of `{x : self * x = 0}`, one vector per free column in
    /// increasing column order.
    pub fn null_space(&self, f: &FiniteField) -> Vec<FVector> {
        let (red, pivots) = self.rref(f);
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut x = FVector::zeros(self.cols);
            x.coords_mut()[free] = Fe::ONE;
            for (r, &pc) in pivots.iter().enumerate() {
                x.coords_mut()[pc] = f.neg(red.get(r, free));
            }
            basis.push(x);
        }
        basis
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn scale_row(&mut self, f: &FiniteField, r: usize, s: Fe) {
        for c in 0..self.cols {
            let x = self.get(r, c);
            self.set(r, c, f.mul(s, x));
        }
    }

    /// `row[dst] += s * row[src]`
    fn add_row_multiple(&mut self, f: &FiniteField, dst: usize, src: usize, s: Fe) {
        for c in 0..self.cols {
            let x = f.add(self.get(dst, c), f.mul(s, self.get(src, c)));
            self.set(dst, c, x);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn identity_and_all_ones() {
        let f3 = FiniteField::new(3).unwrap();
        let id = Matrix::identity(3);
        assert_eq!(id.rank(&f3), 3);
        assert_eq!(id.inverse(&f3).unwrap(), id);

        let f2 = FiniteField::new(2).unwrap();
        let ones = Matrix::from_u8_rows(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]).unwrap();
        assert_eq!(ones.rank(&f2), 1);
        assert_eq!(ones.inverse(&f2), Err(Error::Singular));
    }

    #[test]
    fn two_by_two_over_f3() {
        let f3 = FiniteField::new(3).unwrap();
        let a = Matrix::from_u8_rows(&[&[1, 1], &[1, 2]]).unwrap();
        assert_eq!(a.determinant(&f3).unwrap(), Fe(1));
        let inv = a.inverse(&f3).unwrap();
        assert_eq!(inv.mul(&f3, &a).unwrap(), Matrix::identity(2));
    }

    #[test]
    fn solve_and_null_space() {
        let f3 = FiniteField::new(3).unwrap();
        let a = Matrix::from_u8_rows(&[&[1, 2, 0]]).unwrap();
        let ns = a.null_space(&f3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(a.mul_vec(&f3, v).unwrap().is_zero());
        }
        let b = FVector::from_indices(&[2]);
        let x = a.solve(&f3, &b).unwrap().unwrap();
        assert_eq!(a.mul_vec(&f3, &x).unwrap(), b);

        let inconsistent = Matrix::from_u8_rows(&[&[1, 0], &[1, 0]]).unwrap();
        assert_eq!(inconsistent.solve(&f3, &FVector::from_indices(&[0, 1])).unwrap(), None);
    }

    fn matrix_strategy(q: u8, rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(0..q, rows * cols).prop_map(move |d| {
            let rs: Vec<Vec<Fe>> = d.chunks(cols).map(|c| c.iter().map(|&x| Fe(x)).collect()).collect();
            Matrix::from_rows(&rs).unwrap()
        })
    }

    proptest! {
        #[test]
        fn rank_of_product_is_bounded(
            q in prop::sample::select(vec![2u8, 3, 4, 5, 7, 9]),
            seed_a in matrix_strategy(16, 3, 4),
            seed_b in matrix_strategy(16, 4, 3),
        ) {
            let f = FiniteField::new(q as u32).unwrap();
            let reduce = |m: &Matrix| {
                let rs: Vec<Vec<Fe>> = m.row_vectors().map(|r| r.iter().map(|x| Fe(x.0 % q)).collect()).collect();
                Matrix::from_rows(&rs).unwrap()
            };
            let (a, b) = (reduce(&seed_a), reduce(&seed_b));
            let ab = a.mul(&f, &b).unwrap();
            prop_assert!(ab.rank(&f) <= a.rank(&f).min(b.rank(&f)));
            if let Ok(inv) = ab.inverse(&f) {
                prop_assert_eq!(inv.mul(&f, &ab).unwrap(), Matrix::identity(3));
                prop_assert_eq!(ab.rank(&f), 3);
            } else {
                prop_assert!(ab.rank(&f) < 3);
                prop_assert_eq!(ab.determinant(&f).unwrap(), Fe::ZERO);
            }
        }
    }
}
