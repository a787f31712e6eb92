use std::fmt;

use super::echelon::EchelonBasis;
use super::field::Field;
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Dense row-major matrix over a [`Field`].
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: F, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        Self {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = m.field.one();
        }
        m
    }

    /// Builds a matrix from row vectors; all rows must have length `cols`.
    pub fn from_rows(field: F, cols: usize, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n_rows = rows.len();
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Self {
            field,
            rows: n_rows,
            cols,
            data,
        })
    }

    pub fn from_i64_rows(field: F, rows: &[&[i64]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let conv = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Self::from_rows(field, cols, conv)
    }

    /// Flat row-major data of length `rows * cols`.
    pub fn from_flat(field: F, rows: usize, cols: usize, data: Vec<F::Elem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(Self {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn as_flat(&self) -> &[F::Elem] {
        &self.data
    }
    pub fn into_flat(self) -> Vec<F::Elem> {
        self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [F::Elem] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    fn check_field(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::DomainMismatch(format!(
                "{:?} vs {:?}",
                self.field, other.field
            )));
        }
        Ok(())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field.clone(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let f = &self.field;
        let mut out = Self::zeros(f.clone(), self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if f.is_zero(a) {
                    continue;
                }
                let orow = other.row(k);
                let dst = &mut out.data[r * other.cols..(r + 1) * other.cols];
                for (d, b) in dst.iter_mut().zip(orow) {
                    if !f.is_zero(b) {
                        f.add_mul_assign(d, a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self * v` for a column vector `v`.
    pub fn mul_vec(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok(self.mul_vec_unchecked(v))
    }

    /// Matrix-vector product skipping zero entries of `v`.
    pub(crate) fn mul_vec_unchecked(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.rows];
        for (c, x) in v.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                let m = &self.data[r * self.cols + c];
                if !f.is_zero(m) {
                    f.add_mul_assign(o, m, x);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |f, a, b| f.add(a, b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |f, a, b| f.sub(a, b))
    }

    fn zip_with(&self, other: &Self, op: impl Fn(&F, &F::Elem, &F::Elem) -> F::Elem) -> Result<Self> {
        self.check_field(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| op(&self.field, a, b))
            .collect();
        Ok(Self {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn scale(&self, s: &F::Elem) -> Self {
        let data = self.data.iter().map(|a| self.field.mul(a, s)).collect();
        Self {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Self {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref_with_pivots(&self) -> (Self, Vec<usize>) {
        let mut ech = EchelonBasis::new(self.field.clone(), self.cols);
        for r in 0..self.rows {
            ech.insert(self.row(r).to_vec());
        }
        let sub = ech.into_subspace();
        let pivots = sub.pivots().to_vec();
        let mut out = Self::zeros(self.field.clone(), self.rows, self.cols);
        for (i, row) in sub.basis().iter().enumerate() {
            out.row_mut(i).clone_from_slice(row);
        }
        (out, pivots)
    }

    pub fn rref(&self) -> Self {
        self.rref_with_pivots().0
    }

    pub fn rank(&self) -> usize {
        self.row_space().dim()
    }

    pub fn row_space(&self) -> Subspace<F> {
        let mut ech = EchelonBasis::new(self.field.clone(), self.cols);
        for r in 0..self.rows {
            if ech.is_full() {
                break;
            }
            ech.insert(self.row(r).to_vec());
        }
        ech.into_subspace()
    }

    pub fn column_space(&self) -> Subspace<F> {
        self.transpose().row_space()
    }

    /// `{v : self * v = 0}`.
    pub fn nullspace(&self) -> Subspace<F> {
        self.row_space().annihilator()
    }

    /// Some particular solution of `self * v = rhs`, free variables set to zero.
    pub fn solve(&self, rhs: &[F::Elem]) -> Result<Option<Vec<F::Elem>>> {
        if rhs.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: rhs.len(),
            });
        }
        let f = &self.field;
        // augmented [A | b]
        let mut ech = EchelonBasis::new(f.clone(), self.cols + 1);
        for r in 0..self.rows {
            let mut row = self.row(r).to_vec();
            row.push(rhs[r].clone());
            ech.insert(row);
        }
        let sub = ech.into_subspace();
        let mut x = vec![f.zero(); self.cols];
        for (row, &piv) in sub.basis().iter().zip(sub.pivots()) {
            if piv == self.cols {
                return Ok(None);
            }
            x[piv] = row[self.cols].clone();
        }
        Ok(Some(x))
    }

    /// Determinant by cofactor-free elimination; square matrices only.
    pub fn determinant(&self) -> Result<F::Elem> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let f = &self.field;
        let n = self.rows;
        let mut a = self.data.clone();
        let mut det = f.one();
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| !f.is_zero(&a[r * n + col])) else {
                return Ok(f.zero());
            };
            if piv != col {
                for c in 0..n {
                    a.swap(piv * n + c, col * n + c);
                }
                det = f.neg(&det);
            }
            let pv = a[col * n + col].clone();
            det = f.mul(&det, &pv);
            let inv = f.inv(&pv).expect("nonzero pivot");
            for r in col + 1..n {
                let factor = f.mul(&a[r * n + col], &inv);
                if f.is_zero(&factor) {
                    continue;
                }
                for c in col..n {
                    let v = f.mul(&factor, &a[col * n + c]);
                    a[r * n + c] = f.sub(&a[r * n + c], &v);
                }
            }
        }
        Ok(det)
    }
}

/// Reduced row echelon form (leftmost pivots, pivots scaled to one).
pub fn rref<F: Field>(m: &Matrix<F>) -> Matrix<F> {
    m.rref()
}

/// Canonical basis of `{v : m v = 0}`.
pub fn nullspace<F: Field>(m: &Matrix<F>) -> Subspace<F> {
    m.nullspace()
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix<{:?}> {}x{} [", self.field, self.rows, self.cols)?;
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(|x| self.field.format(x)).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::field::PrimeField;

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn rref_rank_one_over_f5() {
        let m = Matrix::from_i64_rows(f(5), &[&[2, 4], &[1, 2]]).unwrap();
        let expected = Matrix::from_i64_rows(f(5), &[&[1, 2], &[0, 0]]).unwrap();
        assert_eq!(m.rref(), expected);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn rref_identity() {
        let id = Matrix::identity(f(7), 4);
        assert_eq!(id.rref(), id);
    }

    #[test]
    fn nullspace_edge_cases() {
        let z = Matrix::zeros(f(3), 3, 3);
        assert_eq!(z.nullspace().dim(), 3);
        let id = Matrix::identity(f(3), 3);
        assert_eq!(id.nullspace().dim(), 0);
    }

    #[test]
    fn mixed_domains_rejected() {
        let a = Matrix::identity(f(3), 2);
        let b = Matrix::identity(f(5), 2);
        assert!(matches!(a.mul(&b), Err(Error::DomainMismatch(_))));
        assert!(matches!(a.vstack(&b), Err(Error::DomainMismatch(_))));
    }

    #[test]
    fn solve_affine() {
        let m = Matrix::from_i64_rows(f(7), &[&[1, 1], &[1, 6]]).unwrap();
        let x = m.solve(&[3, 1]).unwrap().unwrap();
        assert_eq!(m.mul_vec(&x).unwrap(), vec![3, 1]);
        let singular = Matrix::from_i64_rows(f(7), &[&[1, 1], &[2, 2]]).unwrap();
        assert_eq!(singular.solve(&[1, 1]).unwrap(), None);
    }

    #[test]
    fn determinant_small() {
        let m = Matrix::from_i64_rows(f(7), &[&[1, 2], &[3, 4]]).unwrap();
        assert_eq!(m.determinant().unwrap(), f(7).from_i64(-2));
    }
}
