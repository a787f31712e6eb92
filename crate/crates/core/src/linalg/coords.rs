use super::echelon::EchelonBasis;
use super::field::Field;
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Coordinates in a quotient `W / U` with respect to chosen representatives.
///
/// Given a subspace `U` and vectors `x_1..x_m` whose images in `F^n / U` are
/// linearly independent, [`QuotientCoordinates::coordinates`] returns the
/// unique `c` with `v - sum c_k x_k in U`, or `None` when `v` is not in
/// `U + span(x)`.
#[derive(Clone, Debug)]
pub struct QuotientCoordinates<F: Field> {
    modulo: Subspace<F>,
    /// RREF of `[x_k mod U | e_k]`
    tracked: Subspace<F>,
    n: usize,
    m: usize,
}

impl<F: Field> QuotientCoordinates<F> {
    pub fn new(modulo: Subspace<F>, reps: &[Vec<F::Elem>]) -> Result<Self> {
        let f = modulo.field().clone();
        let n = modulo.ambient_dim();
        let m = reps.len();
        let mut ech = EchelonBasis::new(f.clone(), n + m);
        for (k, x) in reps.iter().enumerate() {
            let mut row = modulo.reduce(x)?;
            row.extend((0..m).map(|j| if j == k { f.one() } else { f.zero() }));
            ech.insert(row);
        }
        let tracked = ech.into_subspace();
        if tracked.dim() != m || tracked.pivots().iter().any(|&p| p >= n) {
            return Err(Error::PreconditionFailed(
                "representatives are dependent modulo the subspace".into(),
            ));
        }
        Ok(Self {
            modulo,
            tracked,
            n,
            m,
        })
    }

    pub fn modulo(&self) -> &Subspace<F> {
        &self.modulo
    }

    pub fn len(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.m == 0
    }

    /// Canonical normal form of `v` modulo `U`.
    pub fn canonical(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        self.modulo.reduce(v)
    }

    pub fn coordinates(&self, v: &[F::Elem]) -> Result<Option<Vec<F::Elem>>> {
        let f = self.modulo.field();
        let mut r = self.modulo.reduce(v)?;
        let mut c = vec![f.zero(); self.m];
        for (row, &p) in self.tracked.basis().iter().zip(self.tracked.pivots()) {
            let coef = r[p].clone();
            if f.is_zero(&coef) {
                continue;
            }
            for (dst, src) in r.iter_mut().zip(&row[..self.n]) {
                if !f.is_zero(src) {
                    *dst = f.sub(dst, &f.mul(&coef, src));
                }
            }
            for (dst, src) in c.iter_mut().zip(&row[self.n..]) {
                if !f.is_zero(src) {
                    f.add_mul_assign(dst, &coef, src);
                }
            }
        }
        if r.iter().all(|x| f.is_zero(x)) {
            Ok(Some(c))
        } else {
            Ok(None)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::field::PrimeField;

    #[test]
    fn coordinates_modulo_subspace() {
        let f = PrimeField::new(5).unwrap();
        let u = Subspace::coordinate(f, 4, [3]);
        let reps = vec![vec![1, 1, 0, 2], vec![0, 1, 1, 0]];
        let qc = QuotientCoordinates::new(u, &reps).unwrap();
        // 2*x1 + 3*x2 + 4*e3
        let v = vec![2, 0, 3, 3];
        assert_eq!(qc.coordinates(&v).unwrap(), Some(vec![2, 3]));
        assert_eq!(qc.coordinates(&[1, 0, 0, 0]).unwrap(), None);
    }

    #[test]
    fn rejects_dependent_reps() {
        let f = PrimeField::new(5).unwrap();
        let u = Subspace::coordinate(f, 3, [2]);
        let reps = vec![vec![1, 0, 0], vec![1, 0, 1]];
        assert!(QuotientCoordinates::new(u, &reps).is_err());
    }
}
