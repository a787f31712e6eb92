use super::echelon::EchelonBasis;
use super::field::Field;
use super::matrix::Matrix;
use crate::error::{Error, Result};

/// A subspace of `F^n` stored by its reduced row echelon basis.
///
/// The representation is canonical, so `==` is subspace equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<F: Field> {
    field: F,
    ambient: usize,
    basis: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub(crate) fn from_rref_parts(
        field: F,
        ambient: usize,
        basis: Vec<Vec<F::Elem>>,
        pivots: Vec<usize>,
    ) -> Self {
        debug_assert!(pivots.windows(2).all(|w| w[0] < w[1]));
        Self {
            field,
            ambient,
            basis,
            pivots,
        }
    }

    pub fn zero(field: F, ambient: usize) -> Self {
        Self::from_rref_parts(field, ambient, Vec::new(), Vec::new())
    }

    pub fn full(field: F, ambient: usize) -> Self {
        Self::coordinate(field, ambient, 0..ambient)
    }

    /// Span of the standard basis vectors at `indices`.
    pub fn coordinate(field: F, ambient: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut idx: Vec<usize> = indices.into_iter().collect();
        idx.sort_unstable();
        idx.dedup();
        let basis = idx
            .iter()
            .map(|&i| {
                let mut v = vec![field.zero(); ambient];
                v[i] = field.one();
                v
            })
            .collect();
        Self::from_rref_parts(field, ambient, basis, idx)
    }

    /// Span of arbitrary vectors of length `ambient`.
    pub fn span<I>(field: F, ambient: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<F::Elem>>,
    {
        let mut ech = EchelonBasis::new(field, ambient);
        for v in vectors {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    found: v.len(),
                });
            }
            if ech.is_full() {
                break;
            }
            ech.insert(v);
        }
        Ok(ech.into_subspace())
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }
    pub fn basis(&self) -> &[Vec<F::Elem>] {
        &self.basis
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_matrix(&self) -> Matrix<F> {
        Matrix::from_rows(self.field.clone(), self.ambient, self.basis.clone())
            .expect("basis rows have ambient length")
    }

    /// Columns that are not pivots: their unit vectors span a complement.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&i| !is_pivot[i]).collect()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::DomainMismatch(format!(
                "{:?} vs {:?}",
                self.field, other.field
            )));
        }
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    fn check_vector(&self, v: &[F::Elem]) -> Result<()> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: v.len(),
            });
        }
        Ok(())
    }

    /// Normal form of `v` modulo this subspace: zero at every pivot column.
    pub fn reduce(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        self.check_vector(v)?;
        let f = &self.field;
        let mut w = v.to_vec();
        for (row, &c) in self.basis.iter().zip(&self.pivots) {
            let coef = w[c].clone();
            if f.is_zero(&coef) {
                continue;
            }
            for (dst, src) in w[c..].iter_mut().zip(&row[c..]) {
                if !f.is_zero(src) {
                    *dst = f.sub(dst, &f.mul(&coef, src));
                }
            }
        }
        Ok(w)
    }

    pub fn contains(&self, v: &[F::Elem]) -> Result<bool> {
        Ok(self.reduce(v)?.iter().all(|x| self.field.is_zero(x)))
    }

    /// Coordinates of `v` with respect to the echelon basis.
    pub fn coordinates(&self, v: &[F::Elem]) -> Result<Option<Vec<F::Elem>>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&c| v[c].clone()).collect()))
    }

    /// Linear combination of basis rows.
    pub fn combine(&self, coords: &[F::Elem]) -> Result<Vec<F::Elem>> {
        if coords.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: coords.len(),
            });
        }
        let f = &self.field;
        let mut out = vec![f.zero(); self.ambient];
        for (c, row) in coords.iter().zip(&self.basis) {
            if f.is_zero(c) {
                continue;
            }
            for (o, x) in out.iter_mut().zip(row) {
                if !f.is_zero(x) {
                    f.add_mul_assign(o, c, x);
                }
            }
        }
        Ok(out)
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut ech = EchelonBasis::from_subspace(self);
        for v in &other.basis {
            if ech.is_full() {
                break;
            }
            ech.insert(v.clone());
        }
        Ok(ech.into_subspace())
    }

    /// `{w : <w, v> = 0 for all v}` for the standard dot product.
    pub fn annihilator(&self) -> Self {
        let f = &self.field;
        let free = self.complement_indices();
        let vecs = free.iter().map(|&j| {
            let mut v = vec![f.zero(); self.ambient];
            v[j] = f.one();
            for (row, &c) in self.basis.iter().zip(&self.pivots) {
                v[c] = f.neg(&row[j]);
            }
            v
        });
        Self::span(f.clone(), self.ambient, vecs).expect("lengths match")
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.field.clone(), self.ambient));
        }
        Ok(self.annihilator().sum(&other.annihilator())?.annihilator())
    }

    pub fn is_subspace_of(&self, other: &Self) -> Result<bool> {
        self.check_compatible(other)?;
        for v in &self.basis {
            if !other.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `dim(self / sub)`; `sub` must be contained in `self`.
    pub fn quotient_dim(&self, sub: &Self) -> Result<usize> {
        if !sub.is_subspace_of(self)? {
            return Err(Error::PreconditionFailed(
                "quotient by a subspace that is not contained".into(),
            ));
        }
        Ok(self.dim() - sub.dim())
    }

    /// Image of the subspace under `m` (acting on column vectors).
    pub fn image(&self, m: &Matrix<F>) -> Result<Self> {
        if m.field() != &self.field {
            return Err(Error::DomainMismatch(format!(
                "{:?} vs {:?}",
                m.field(),
                self.field
            )));
        }
        if m.cols() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: m.cols(),
            });
        }
        Self::span(
            self.field.clone(),
            m.rows(),
            self.basis.iter().map(|v| m.mul_vec_unchecked(v)),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::field::PrimeField;

    fn f7() -> PrimeField {
        PrimeField::new(7).unwrap()
    }

    #[test]
    fn canonical_regardless_of_spanning_set() {
        let a = Subspace::span(f7(), 3, vec![vec![1, 2, 3], vec![0, 1, 1]]).unwrap();
        let b = Subspace::span(f7(), 3, vec![vec![1, 3, 4], vec![2, 4, 6], vec![0, 2, 2]]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn intersection_and_sum() {
        let u = Subspace::coordinate(f7(), 4, [0, 1]);
        let v = Subspace::coordinate(f7(), 4, [1, 2]);
        assert_eq!(u.intersection(&u).unwrap(), u);
        assert_eq!(u.sum(&Subspace::zero(f7(), 4)).unwrap(), u);
        let meet = u.intersection(&v).unwrap();
        assert_eq!(meet, Subspace::coordinate(f7(), 4, [1]));
        let join = u.sum(&v).unwrap();
        assert_eq!(join.dim() + meet.dim(), u.dim() + v.dim());
    }

    #[test]
    fn ambient_mismatch() {
        let u = Subspace::coordinate(f7(), 4, [0]);
        let v = Subspace::coordinate(f7(), 3, [0]);
        assert!(matches!(u.sum(&v), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(
            u.intersection(&v),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn annihilator_dimension() {
        let u = Subspace::span(f7(), 5, vec![vec![1, 2, 0, 3, 4], vec![0, 0, 1, 5, 6]]).unwrap();
        let ann = u.annihilator();
        assert_eq!(ann.dim(), 3);
        for w in ann.basis() {
            for v in u.basis() {
                let dot = v
                    .iter()
                    .zip(w)
                    .fold(0u32, |acc, (a, b)| f7().add(&acc, &f7().mul(a, b)));
                assert_eq!(dot, 0);
            }
        }
        assert_eq!(ann.annihilator(), u);
    }

    #[test]
    fn coordinates_roundtrip() {
        let u = Subspace::span(f7(), 3, vec![vec![1, 1, 0], vec![0, 1, 1]]).unwrap();
        let v = vec![2, 5, 3];
        let c = u.coordinates(&v).unwrap().unwrap();
        assert_eq!(u.combine(&c).unwrap(), v);
        assert_eq!(u.coordinates(&[0, 0, 1]).unwrap(), None);
    }
}
