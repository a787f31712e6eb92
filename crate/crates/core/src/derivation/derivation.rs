use crate::algebra::FDAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};

/// Above this dimension Leibniz is certified on (generator, basis) pairs,
/// which implies it on all pairs because every basis element is a word in
/// the generators.
pub const FULL_LEIBNIZ_LIMIT: usize = 50;

/// A linear self-map of an algebra certified to satisfy the Leibniz rule.
///
/// Column `i` of the matrix holds the coordinates of `D(b_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation<F: Field> {
    algebra_id: u64,
    matrix: Matrix<F>,
}

/// First basis pair `(i, j)` with `D(b_i b_j) != D(b_i) b_j + b_i D(b_j)`.
pub fn leibniz_failure<F: Field>(alg: &FDAlgebra<F>, m: &Matrix<F>) -> Option<(usize, usize)> {
    let n = alg.dim();
    let cols: Vec<Vec<F::Elem>> = (0..n).map(|i| m.column(i)).collect();
    let pair_ok = |i: usize, j: usize| -> bool {
        let f = alg.field();
        let mut lhs = vec![f.zero(); n];
        for (k, c) in alg.basis_product(i, j) {
            for (o, x) in lhs.iter_mut().zip(&cols[*k]) {
                if !f.is_zero(x) {
                    f.add_mul_assign(o, c, x);
                }
            }
        }
        let a = alg.mul_vec_basis(&cols[i], j);
        let b = alg.mul_basis_vec(i, &cols[j]);
        lhs.iter()
            .zip(a.iter().zip(&b))
            .all(|(l, (x, y))| *l == f.add(x, y))
    };
    if n <= FULL_LEIBNIZ_LIMIT {
        for i in 0..n {
            for j in 0..n {
                if !pair_ok(i, j) {
                    return Some((i, j));
                }
            }
        }
    } else {
        // D(1) = 0 and Leibniz on (g, b) for generators g give it on all
        // products by induction on word length.
        let unit_idx = (0..n).find(|&i| alg.unit_vector(i) == alg.unit());
        let unit_ok = match unit_idx {
            Some(u) => cols[u].iter().all(|x| alg.field().is_zero(x)),
            None => m.mul_vec_unchecked(alg.unit()).iter().all(|x| alg.field().is_zero(x)),
        };
        if !unit_ok {
            return Some((unit_idx.unwrap_or(0), unit_idx.unwrap_or(0)));
        }
        for &g in alg.generators() {
            for j in 0..n {
                if !pair_ok(g, j) {
                    return Some((g, j));
                }
            }
        }
    }
    None
}

impl<F: Field> Derivation<F> {
    /// Certifies the Leibniz rule; fails with `NotADerivation` otherwise.
    pub fn new(alg: &FDAlgebra<F>, matrix: Matrix<F>) -> Result<Self> {
        if matrix.rows() != alg.dim() || matrix.cols() != alg.dim() {
            return Err(Error::DimensionMismatch {
                expected: alg.dim(),
                found: matrix.rows().max(matrix.cols()),
            });
        }
        if matrix.field() != alg.field() {
            return Err(Error::DomainMismatch(format!(
                "{:?} vs {:?}",
                matrix.field(),
                alg.field()
            )));
        }
        if let Some((i, j)) = leibniz_failure(alg, &matrix) {
            return Err(Error::NotADerivation(format!(
                "Leibniz rule fails on ({}, {})",
                alg.label(i),
                alg.label(j)
            )));
        }
        Ok(Self {
            algebra_id: alg.id(),
            matrix,
        })
    }

    /// For maps known to be derivations by construction (brackets,
    /// inner derivations, central multiples).
    pub(crate) fn new_unchecked(alg: &FDAlgebra<F>, matrix: Matrix<F>) -> Self {
        debug_assert!(alg.dim() > 30 || leibniz_failure(alg, &matrix).is_none());
        Self {
            algebra_id: alg.id(),
            matrix,
        }
    }

    /// The unique derivation with the given values on the generators,
    /// extended along the generator words and then certified.
    pub fn from_generator_values(alg: &FDAlgebra<F>, values: &[F::Elem]) -> Result<Self> {
        let m = extend_from_generators(alg, values)?;
        Self::new(alg, m)
    }

    pub fn algebra_id(&self) -> u64 {
        self.algebra_id
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix<F> {
        self.matrix
    }

    pub fn field(&self) -> &F {
        self.matrix.field()
    }

    pub fn dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn owned_by(&self, alg: &FDAlgebra<F>) -> Result<()> {
        if self.algebra_id != alg.id() {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    pub fn apply(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        self.matrix.mul_vec_unchecked(v)
    }

    /// `D(b_i)`
    pub fn image_of_basis(&self, i: usize) -> Vec<F::Elem> {
        self.matrix.column(i)
    }

    /// Concatenated values `D(g)` on the generators of `alg`.
    pub fn generator_values(&self, alg: &FDAlgebra<F>) -> Vec<F::Elem> {
        alg.generators()
            .iter()
            .flat_map(|&g| self.matrix.column(g))
            .collect()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_algebra(other)?;
        Ok(Self {
            algebra_id: self.algebra_id,
            matrix: self.matrix.add(&other.matrix)?,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_algebra(other)?;
        Ok(Self {
            algebra_id: self.algebra_id,
            matrix: self.matrix.sub(&other.matrix)?,
        })
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        Self {
            algebra_id: self.algebra_id,
            matrix: self.matrix.scale(c),
        }
    }

    /// `D1 ∘ D2 - D2 ∘ D1`
    pub fn bracket(&self, other: &Self) -> Result<Self> {
        self.same_algebra(other)?;
        let ab = self.matrix.mul(&other.matrix)?;
        let ba = other.matrix.mul(&self.matrix)?;
        Ok(Self {
            algebra_id: self.algebra_id,
            matrix: ab.sub(&ba)?,
        })
    }

    /// `D^p` (a derivation in characteristic `p`).
    pub fn power(&self, p: u64) -> Self {
        let mut acc = Matrix::identity(self.field().clone(), self.dim());
        for _ in 0..p {
            acc = acc.mul(&self.matrix).expect("square");
        }
        Self {
            algebra_id: self.algebra_id,
            matrix: acc,
        }
    }

    /// `v -> z D(v)` for a central `z`.
    pub fn left_multiply(&self, alg: &FDAlgebra<F>, z: &[F::Elem]) -> Result<Self> {
        self.owned_by(alg)?;
        let lz = alg.left_mul_matrix(z);
        Ok(Self {
            algebra_id: self.algebra_id,
            matrix: lz.mul(&self.matrix)?,
        })
    }

    fn same_algebra(&self, other: &Self) -> Result<()> {
        if self.algebra_id != other.algebra_id {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }
}

/// Extends values on the generators to a linear map using
/// `D(w g) = D(w) g + w D(g)` along each basis element's word.
pub fn extend_from_generators<F: Field>(alg: &FDAlgebra<F>, values: &[F::Elem]) -> Result<Matrix<F>> {
    let n = alg.dim();
    let gens = alg.generators();
    if values.len() != gens.len() * n {
        return Err(Error::DimensionMismatch {
            expected: gens.len() * n,
            found: values.len(),
        });
    }
    let f = alg.field();
    let dg: Vec<&[F::Elem]> = values.chunks(n).collect();
    let mut m = Matrix::zeros(f.clone(), n, n);
    for (k, word) in alg.words().iter().enumerate() {
        let mut w = alg.unit().to_vec();
        let mut dw = vec![f.zero(); n];
        for &gi in word {
            let g = gens[gi];
            let mut next = alg.mul_vec_basis(&dw, g);
            let extra = alg.mul_vec(&w, dg[gi]);
            for (a, b) in next.iter_mut().zip(&extra) {
                if !f.is_zero(b) {
                    *a = f.add(a, b);
                }
            }
            dw = next;
            w = alg.mul_vec_basis(&w, g);
        }
        for (r, x) in dw.into_iter().enumerate() {
            m.set(r, k, x);
        }
    }
    Ok(m)
}

/// Concatenated `D(b_i b_j) - D(b_i) b_j - b_i D(b_j)` over all basis pairs.
pub fn leibniz_defect<F: Field>(alg: &FDAlgebra<F>, m: &Matrix<F>) -> Vec<F::Elem> {
    let n = alg.dim();
    let f = alg.field();
    let cols: Vec<Vec<F::Elem>> = (0..n).map(|i| m.column(i)).collect();
    let mut out = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            let mut v = vec![f.zero(); n];
            for (k, c) in alg.basis_product(i, j) {
                for (o, x) in v.iter_mut().zip(&cols[*k]) {
                    if !f.is_zero(x) {
                        f.add_mul_assign(o, c, x);
                    }
                }
            }
            let a = alg.mul_vec_basis(&cols[i], j);
            let b = alg.mul_basis_vec(i, &cols[j]);
            out.extend(v.iter().zip(a.iter().zip(&b)).map(|(l, (x, y))| f.sub(&f.sub(l, x), y)));
        }
    }
    out
}
