use std::sync::atomic::{AtomicU64, Ordering};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{EchelonBasis, Field, Matrix, Subspace};

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

/// Sparse coordinate vector: `(basis index, coefficient)` pairs.
pub type SparseVec<E> = Vec<(usize, E)>;

/// Largest dimension for which associativity is checked on every triple.
pub const EXHAUSTIVE_ASSOCIATIVITY_LIMIT: usize = 50;
const SAMPLED_TRIPLES: usize = 2000;

/// Everything needed to build an [`FDAlgebra`].
pub struct AlgebraData<F: Field> {
    pub field: F,
    pub labels: Vec<String>,
    /// `products[i * n + j]` = coordinates of `b_i * b_j`
    pub products: Vec<SparseVec<F::Elem>>,
    pub unit: Vec<F::Elem>,
    pub form: Option<Vec<F::Elem>>,
    pub radical: Subspace<F>,
    pub simple_count: usize,
    /// Basis indices generating the algebra as a unital algebra, together
    /// with a word in those generators for every basis element.
    pub generators: Option<(Vec<usize>, Vec<Vec<usize>>)>,
}

/// Finite-dimensional associative unital algebra given by structure constants.
#[derive(Clone, Debug)]
pub struct FDAlgebra<F: Field> {
    id: u64,
    field: F,
    labels: Vec<String>,
    products: Vec<SparseVec<F::Elem>>,
    unit: Vec<F::Elem>,
    form: Option<Vec<F::Elem>>,
    radical: Subspace<F>,
    simple_count: usize,
    generators: Vec<usize>,
    words: Vec<Vec<usize>>,
}

/// An element of a specific [`FDAlgebra`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement<F: Field> {
    algebra_id: u64,
    coords: Vec<F::Elem>,
}

impl<F: Field> AlgebraElement<F> {
    pub fn coords(&self) -> &[F::Elem] {
        &self.coords
    }
    pub fn into_coords(self) -> Vec<F::Elem> {
        self.coords
    }
    pub fn algebra_id(&self) -> u64 {
        self.algebra_id
    }
}

impl<F: Field> FDAlgebra<F> {
    /// Builds the algebra and verifies associativity, the unit, the
    /// symmetrizing form (if any), the radical and the generator words.
    pub fn new(data: AlgebraData<F>) -> Result<Self> {
        let alg = Self::new_unverified(data)?;
        alg.verify()?;
        Ok(alg)
    }

    pub(crate) fn new_unverified(data: AlgebraData<F>) -> Result<Self> {
        let n = data.labels.len();
        if data.products.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: data.products.len(),
            });
        }
        for v in [&data.unit].into_iter().chain(data.form.as_ref()) {
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: v.len(),
                });
            }
        }
        if data.radical.ambient_dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: data.radical.ambient_dim(),
            });
        }
        let field = data.field;
        let products = data
            .products
            .into_iter()
            .map(|sv| {
                let mut sv: SparseVec<F::Elem> =
                    sv.into_iter().filter(|(_, c)| !field.is_zero(c)).collect();
                sv.sort_by_key(|(k, _)| *k);
                sv
            })
            .collect();
        let (generators, words) = match data.generators {
            Some(g) => g,
            None => default_generators(&field, &data.unit, n),
        };
        Ok(Self {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            field,
            labels: data.labels,
            products,
            unit: data.unit,
            form: data.form,
            radical: data.radical,
            simple_count: data.simple_count,
            generators,
            words,
        })
    }

    pub fn id(&self) -> u64 {
        self.id
    }
    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.labels.len()
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }
    pub fn unit(&self) -> &[F::Elem] {
        &self.unit
    }
    pub fn form(&self) -> Option<&[F::Elem]> {
        self.form.as_deref()
    }
    pub fn radical(&self) -> &Subspace<F> {
        &self.radical
    }
    pub fn simple_count(&self) -> usize {
        self.simple_count
    }
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }
    pub fn words(&self) -> &[Vec<usize>] {
        &self.words
    }

    #[inline]
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, F::Elem)] {
        &self.products[i * self.dim() + j]
    }

    pub fn unit_vector(&self, i: usize) -> Vec<F::Elem> {
        let mut v = vec![self.field.zero(); self.dim()];
        v[i] = self.field.one();
        v
    }

    pub fn element(&self, coords: Vec<F::Elem>) -> Result<AlgebraElement<F>> {
        if coords.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: coords.len(),
            });
        }
        Ok(AlgebraElement {
            algebra_id: self.id,
            coords,
        })
    }

    pub fn basis_element(&self, i: usize) -> AlgebraElement<F> {
        AlgebraElement {
            algebra_id: self.id,
            coords: self.unit_vector(i),
        }
    }

    pub fn one(&self) -> AlgebraElement<F> {
        AlgebraElement {
            algebra_id: self.id,
            coords: self.unit.clone(),
        }
    }

    pub fn zero(&self) -> AlgebraElement<F> {
        AlgebraElement {
            algebra_id: self.id,
            coords: vec![self.field.zero(); self.dim()],
        }
    }

    pub fn owns(&self, a: &AlgebraElement<F>) -> Result<()> {
        if a.algebra_id != self.id {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    /// Bilinear product of two elements of this algebra.
    pub fn multiply(&self, a: &AlgebraElement<F>, b: &AlgebraElement<F>) -> Result<AlgebraElement<F>> {
        self.owns(a)?;
        self.owns(b)?;
        Ok(AlgebraElement {
            algebra_id: self.id,
            coords: self.mul_vec(&a.coords, &b.coords),
        })
    }

    /// Product of coordinate vectors.
    pub fn mul_vec(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let n = self.dim();
        let mut out = vec![f.zero(); n];
        let b_nz: Vec<(usize, &F::Elem)> = b
            .iter()
            .enumerate()
            .filter(|(_, x)| !f.is_zero(x))
            .collect();
        for (i, ai) in a.iter().enumerate() {
            if f.is_zero(ai) {
                continue;
            }
            for &(j, bj) in &b_nz {
                let ab = f.mul(ai, bj);
                for (k, c) in self.basis_product(i, j) {
                    f.add_mul_assign(&mut out[*k], &ab, c);
                }
            }
        }
        out
    }

    /// `v * b_j`
    pub fn mul_vec_basis(&self, v: &[F::Elem], j: usize) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim()];
        for (i, vi) in v.iter().enumerate() {
            if f.is_zero(vi) {
                continue;
            }
            for (k, c) in self.basis_product(i, j) {
                f.add_mul_assign(&mut out[*k], vi, c);
            }
        }
        out
    }

    /// `b_i * v`
    pub fn mul_basis_vec(&self, i: usize, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim()];
        for (j, vj) in v.iter().enumerate() {
            if f.is_zero(vj) {
                continue;
            }
            for (k, c) in self.basis_product(i, j) {
                f.add_mul_assign(&mut out[*k], vj, c);
            }
        }
        out
    }

    /// Matrix of `v -> a * v`.
    pub fn left_mul_matrix(&self, a: &[F::Elem]) -> Matrix<F> {
        let n = self.dim();
        let mut m = Matrix::zeros(self.field.clone(), n, n);
        for j in 0..n {
            let col = self.mul_vec(a, &self.unit_vector(j));
            for (k, x) in col.into_iter().enumerate() {
                m.set(k, j, x);
            }
        }
        m
    }

    /// Matrix of `v -> v * a`.
    pub fn right_mul_matrix(&self, a: &[F::Elem]) -> Matrix<F> {
        let n = self.dim();
        let mut m = Matrix::zeros(self.field.clone(), n, n);
        for j in 0..n {
            let col = self.mul_vec(&self.unit_vector(j), a);
            for (k, x) in col.into_iter().enumerate() {
                m.set(k, j, x);
            }
        }
        m
    }

    /// `ab - ba`
    pub fn commutator_vec(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let ab = self.mul_vec(a, b);
        let ba = self.mul_vec(b, a);
        ab.iter().zip(&ba).map(|(x, y)| f.sub(x, y)).collect()
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (i + 1..n).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// `s(v)` for the symmetrizing form.
    pub fn trace(&self, v: &[F::Elem]) -> Result<F::Elem> {
        let s = self.form.as_ref().ok_or(Error::NotSymmetric)?;
        let f = &self.field;
        let mut acc = f.zero();
        for (a, b) in s.iter().zip(v) {
            if !f.is_zero(a) && !f.is_zero(b) {
                f.add_mul_assign(&mut acc, a, b);
            }
        }
        Ok(acc)
    }

    /// Gram matrix `G[i][j] = s(b_i b_j)` of an arbitrary functional `s`.
    pub fn gram_matrix(&self, s: &[F::Elem]) -> Matrix<F> {
        let f = &self.field;
        let n = self.dim();
        let mut g = Matrix::zeros(f.clone(), n, n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = f.zero();
                for (k, c) in self.basis_product(i, j) {
                    f.add_mul_assign(&mut acc, c, &s[*k]);
                }
                g.set(i, j, acc);
            }
        }
        g
    }

    /// Product of the basis elements named by a word in the generators.
    pub fn word_product(&self, word: &[usize]) -> Vec<F::Elem> {
        let mut acc = self.unit.clone();
        for &g in word {
            acc = self.mul_vec_basis(&acc, self.generators[g]);
        }
        acc
    }

    /// Replaces the generating set; every word must multiply out to its
    /// basis element exactly.
    pub fn with_generators(mut self, generators: Vec<usize>, words: Vec<Vec<usize>>) -> Result<Self> {
        self.generators = generators;
        self.words = words;
        self.verify_words()?;
        Ok(self)
    }

    // ---- verification of constructor-supplied data ----

    pub fn verify(&self) -> Result<()> {
        self.verify_unit()?;
        self.verify_associativity()?;
        self.verify_form()?;
        self.verify_radical()?;
        self.verify_words()
    }

    fn verify_unit(&self) -> Result<()> {
        for i in 0..self.dim() {
            let e = self.unit_vector(i);
            if self.mul_vec(&self.unit, &e) != e || self.mul_vec(&e, &self.unit) != e {
                return Err(Error::VerificationFailed(format!(
                    "unit is not a two-sided identity on {}",
                    self.labels[i]
                )));
            }
        }
        Ok(())
    }

    fn associative_at(&self, i: usize, j: usize, k: usize) -> bool {
        let ek = self.unit_vector(k);
        let ei = self.unit_vector(i);
        let ij: Vec<F::Elem> = self.mul_vec_basis(&ei, j);
        let left = self.mul_vec(&ij, &ek);
        let jk = self.mul_vec_basis(&self.unit_vector(j), k);
        let right = self.mul_basis_vec(i, &jk);
        left == right
    }

    /// Exhaustive for `dim <= 50`, otherwise a seeded sample of triples.
    pub fn verify_associativity(&self) -> Result<()> {
        let n = self.dim();
        let fail = |i: usize, j: usize, k: usize| {
            Err(Error::VerificationFailed(format!(
                "associativity fails on ({}, {}, {})",
                self.labels[i], self.labels[j], self.labels[k]
            )))
        };
        if n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        if !self.associative_at(i, j, k) {
                            return fail(i, j, k);
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ n as u64);
            for _ in 0..SAMPLED_TRIPLES {
                let (i, j, k) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if !self.associative_at(i, j, k) {
                    return fail(i, j, k);
                }
            }
        }
        Ok(())
    }

    fn verify_form(&self) -> Result<()> {
        let Some(s) = &self.form else { return Ok(()) };
        let g = self.gram_matrix(s);
        let n = self.dim();
        for i in 0..n {
            for j in 0..i {
                if g.get(i, j) != g.get(j, i) {
                    return Err(Error::VerificationFailed(format!(
                        "form is not symmetric on ({}, {})",
                        self.labels[i], self.labels[j]
                    )));
                }
            }
        }
        if g.rank() != n {
            return Err(Error::VerificationFailed("form is degenerate".into()));
        }
        Ok(())
    }

    fn verify_radical(&self) -> Result<()> {
        let j = &self.radical;
        // two-sided ideal
        for u in j.basis() {
            for i in 0..self.dim() {
                if !j.contains(&self.mul_basis_vec(i, u))? || !j.contains(&self.mul_vec_basis(u, i))? {
                    return Err(Error::VerificationFailed(
                        "radical is not a two-sided ideal".into(),
                    ));
                }
            }
        }
        // nilpotent
        let mut power = j.clone();
        let mut steps = 0;
        while !power.is_zero() {
            steps += 1;
            if steps > self.dim() + 1 {
                return Err(Error::VerificationFailed("radical is not nilpotent".into()));
            }
            power = self.product_space(&power, j);
        }
        // semisimple quotient: its center has no nonzero nilpotents
        let quotient = self.quotient_unverified(j)?;
        if !quotient.center_is_reduced() {
            return Err(Error::VerificationFailed(
                "quotient by the radical has central nilpotents".into(),
            ));
        }
        Ok(())
    }

    fn verify_words(&self) -> Result<()> {
        if self.words.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: self.words.len(),
            });
        }
        for (k, w) in self.words.iter().enumerate() {
            if w.iter().any(|&g| g >= self.generators.len()) || self.word_product(w) != self.unit_vector(k) {
                return Err(Error::VerificationFailed(format!(
                    "generator word does not multiply to {}",
                    self.labels[k]
                )));
            }
        }
        Ok(())
    }

    /// `span{u v : u in U, v in V}`.
    pub fn product_space(&self, u: &Subspace<F>, v: &Subspace<F>) -> Subspace<F> {
        let n = self.dim();
        let mut ech = EchelonBasis::new(self.field.clone(), n);
        'outer: for a in u.basis() {
            for b in v.basis() {
                if ech.is_full() {
                    break 'outer;
                }
                ech.insert(self.mul_vec(a, b));
            }
        }
        ech.into_subspace()
    }

    /// Whether the center contains no nonzero nilpotent element.
    ///
    /// In characteristic `p` the `p`-th power map is additive on the center,
    /// so its nilradical is the kernel of an iterated Frobenius. In
    /// characteristic zero the nilradical of a commutative algebra is the
    /// radical of its trace form.
    fn center_is_reduced(&self) -> bool {
        let f = &self.field;
        let z = self.center();
        if z.is_zero() {
            return true;
        }
        let basis = z.basis().to_vec();
        let d = basis.len();
        let char_p = f.characteristic();
        if char_p > 0 {
            let mut exp = char_p;
            while (exp as usize) < self.dim().max(2) {
                exp = exp.saturating_mul(char_p);
            }
            let images = basis.iter().map(|b| self.power_vec(b, exp));
            let img = Subspace::span(f.clone(), self.dim(), images).expect("lengths match");
            img.dim() == d
        } else {
            // trace of left multiplication restricted to the center
            let mult_matrix = |a: &[F::Elem]| -> Matrix<F> {
                let cols: Vec<Vec<F::Elem>> = basis
                    .iter()
                    .map(|b| {
                        z.coordinates(&self.mul_vec(a, b))
                            .expect("lengths match")
                            .expect("center is a subalgebra")
                    })
                    .collect();
                Matrix::from_rows(f.clone(), d, cols).expect("square").transpose()
            };
            let mut gram = Matrix::zeros(f.clone(), d, d);
            for i in 0..d {
                for j in 0..d {
                    let prod = self.mul_vec(&basis[i], &basis[j]);
                    let m = mult_matrix(&prod);
                    let mut tr = f.zero();
                    for k in 0..d {
                        tr = f.add(&tr, m.get(k, k));
                    }
                    gram.set(i, j, tr);
                }
            }
            gram.rank() == d
        }
    }

    pub fn power_vec(&self, a: &[F::Elem], mut exp: u64) -> Vec<F::Elem> {
        let mut base = a.to_vec();
        let mut acc = self.unit.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul_vec(&acc, &base);
            }
            exp >>= 1;
            if exp > 0 {
                base = self.mul_vec(&base, &base);
            }
        }
        acc
    }

    /// Quotient by a two-sided ideal. The basis of the quotient is the set of
    /// non-pivot unit vectors of the ideal's echelon basis, labels carry over.
    /// The result has zero radical supplied and is not re-verified.
    pub(crate) fn quotient_unverified(&self, ideal: &Subspace<F>) -> Result<Self> {
        let f = &self.field;
        let keep = ideal.complement_indices();
        let m = keep.len();
        let project = |v: &[F::Elem]| -> Result<Vec<F::Elem>> {
            let r = ideal.reduce(v)?;
            Ok(keep.iter().map(|&k| r[k].clone()).collect())
        };
        let mut products = Vec::with_capacity(m * m);
        for &a in &keep {
            for &b in &keep {
                let prod = self.mul_vec_basis(&self.unit_vector(a), b);
                let pv = project(&prod)?;
                products.push(
                    pv.into_iter()
                        .enumerate()
                        .filter(|(_, c)| !f.is_zero(c))
                        .collect(),
                );
            }
        }
        let unit = project(&self.unit)?;
        let labels = keep.iter().map(|&k| self.labels[k].clone()).collect();
        Self::new_unverified(AlgebraData {
            field: f.clone(),
            labels,
            products,
            unit,
            form: None,
            radical: Subspace::zero(f.clone(), m),
            simple_count: 0,
            generators: None,
        })
    }

    /// Quotient algebra `A / I` for a two-sided ideal `I`, with the radical
    /// and simple count of the quotient supplied by the caller.
    pub fn quotient(&self, ideal: &Subspace<F>, radical: Subspace<F>, simple_count: usize) -> Result<Self> {
        for u in ideal.basis() {
            for i in 0..self.dim() {
                if !ideal.contains(&self.mul_basis_vec(i, u))? || !ideal.contains(&self.mul_vec_basis(u, i))? {
                    return Err(Error::NotABimodule("quotient by a non-ideal".into()));
                }
            }
        }
        let mut q = self.quotient_unverified(ideal)?;
        q.radical = radical;
        q.simple_count = simple_count;
        q.verify()?;
        Ok(q)
    }

    /// Same algebra with its symmetrizing form replaced (verified).
    pub fn with_form(mut self, form: Option<Vec<F::Elem>>) -> Result<Self> {
        self.form = form;
        self.verify_form()?;
        Ok(self)
    }
}

/// Every non-unit basis element is its own generator.
fn default_generators<F: Field>(field: &F, unit: &[F::Elem], n: usize) -> (Vec<usize>, Vec<Vec<usize>>) {
    let unit_index = (0..n).find(|&i| {
        unit.iter()
            .enumerate()
            .all(|(k, c)| if k == i { field.is_one(c) } else { field.is_zero(c) })
    });
    let generators: Vec<usize> = (0..n).filter(|&i| Some(i) != unit_index).collect();
    let words = (0..n)
        .map(|i| match generators.iter().position(|&g| g == i) {
            Some(pos) => vec![pos],
            None => Vec::new(),
        })
        .collect();
    (generators, words)
}

/// Seeded generator for the sampled checks.
pub(crate) fn sample_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
