//! `HH^1(A) = Der(A) / IDer(A)` with its bracket, `Z(A)`-action and
//! `p`-power map.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use crate::algebra::{AlgebraElement, FDAlgebra, Qci};
use crate::derivation::{
    basis_x, derivation_generator_values, derivation_values_qci, inner_generator_values, Derivation,
    MonomialDerivationId,
};
use crate::error::{Error, Result};
use crate::linalg::{EchelonBasis, Field, Matrix, PrimeField, QuotientCoordinates, Subspace};

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

/// A class in `HH^1(A)`: a representative and its canonical form (values on
/// the generators reduced modulo inner derivations).
#[derive(Clone, Debug)]
pub struct HH1Element<F: Field> {
    structure_id: u64,
    rep: Derivation<F>,
    canonical: Vec<F::Elem>,
}

impl<F: Field> HH1Element<F> {
    pub fn rep(&self) -> &Derivation<F> {
        &self.rep
    }
    pub fn canonical(&self) -> &[F::Elem] {
        &self.canonical
    }
    pub fn is_zero(&self) -> bool {
        let f = self.rep.field();
        self.canonical.iter().all(|x| f.is_zero(x))
    }
}

impl<F: Field> PartialEq for HH1Element<F> {
    fn eq(&self, other: &Self) -> bool {
        self.structure_id == other.structure_id && self.canonical == other.canonical
    }
}

impl<F: Field> Eq for HH1Element<F> {}

/// Basis, bracket table, `Z(A)`-action and `p`-power map of `HH^1(A)`.
#[derive(Clone, Debug)]
pub struct LieStructure<F: Field> {
    id: u64,
    algebra: Arc<FDAlgebra<F>>,
    der: Subspace<F>,
    coords: QuotientCoordinates<F>,
    reps: Vec<Derivation<F>>,
    labels: Vec<String>,
    /// `table[i * d + j]` = coordinates of `[b_i, b_j]`
    table: Vec<Vec<F::Elem>>,
    center: Subspace<F>,
    z_action: Vec<Matrix<F>>,
    p_power: Option<Vec<Vec<F::Elem>>>,
}

impl<F: Field> LieStructure<F> {
    /// Builds the structure from `Der(A)` and `IDer(A)` (both given by values
    /// on the generators) and representatives of a complement.
    pub fn new(
        algebra: Arc<FDAlgebra<F>>,
        der: Subspace<F>,
        inner: Subspace<F>,
        reps: Vec<(String, Derivation<F>)>,
    ) -> Result<Self> {
        let alg = algebra.as_ref();
        if !inner.is_subspace_of(&der)? {
            return Err(Error::PreconditionFailed("inner derivations not contained in Der(A)".into()));
        }
        if reps.len() + inner.dim() != der.dim() {
            return Err(Error::DimensionMismatch {
                expected: der.dim() - inner.dim(),
                found: reps.len(),
            });
        }
        let mut values = Vec::with_capacity(reps.len());
        for (_, d) in &reps {
            d.owned_by(alg)?;
            let v = d.generator_values(alg);
            if !der.contains(&v)? {
                return Err(Error::PreconditionFailed("representative outside Der(A)".into()));
            }
            values.push(v);
        }
        let coords = QuotientCoordinates::new(inner, &values)?;
        let (labels, reps): (Vec<String>, Vec<Derivation<F>>) = reps.into_iter().unzip();
        let center = alg.center();
        let mut s = Self {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            algebra,
            der,
            coords,
            reps,
            labels,
            table: Vec::new(),
            center,
            z_action: Vec::new(),
            p_power: None,
        };
        s.table = s.compute_table()?;
        s.z_action = s.compute_z_action()?;
        if s.field().characteristic() > 0 {
            s.p_power = Some(s.compute_p_power()?);
        }
        Ok(s)
    }

    pub fn id(&self) -> u64 {
        self.id
    }
    pub fn algebra(&self) -> &FDAlgebra<F> {
        &self.algebra
    }
    pub fn field(&self) -> &F {
        self.algebra.field()
    }
    pub fn dim(&self) -> usize {
        self.reps.len()
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn reps(&self) -> &[Derivation<F>] {
        &self.reps
    }
    /// `Der(A)` by values on the generators.
    pub fn der(&self) -> &Subspace<F> {
        &self.der
    }
    /// `IDer(A)` by values on the generators.
    pub fn inner(&self) -> &Subspace<F> {
        self.coords.modulo()
    }
    pub fn center_of_algebra(&self) -> &Subspace<F> {
        &self.center
    }
    pub fn z_action_matrices(&self) -> &[Matrix<F>] {
        &self.z_action
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Coordinates of the class of a derivation given by generator values.
    pub fn coordinates_of_values(&self, values: &[F::Elem]) -> Result<Vec<F::Elem>> {
        self.coords
            .coordinates(values)?
            .ok_or_else(|| Error::VerificationFailed("map is not in Der(A)".into()))
    }

    fn values_of_gens(&self, f: impl Fn(&[F::Elem]) -> Vec<F::Elem>) -> Vec<F::Elem> {
        let alg = self.algebra();
        alg.generators()
            .iter()
            .flat_map(|&g| f(&alg.unit_vector(g)))
            .collect()
    }

    fn compute_table(&self) -> Result<Vec<Vec<F::Elem>>> {
        let d = self.dim();
        let f = self.field();
        let alg = self.algebra();
        let gen_images: Vec<Vec<Vec<F::Elem>>> = self
            .reps
            .iter()
            .map(|r| alg.generators().iter().map(|&g| r.image_of_basis(g)).collect())
            .collect();
        let mut table = vec![vec![f.zero(); d]; d * d];
        for i in 0..d {
            for j in i + 1..d {
                let mut vals = Vec::with_capacity(alg.generators().len() * alg.dim());
                for gi in 0..alg.generators().len() {
                    let a = self.reps[i].apply(&gen_images[j][gi]);
                    let b = self.reps[j].apply(&gen_images[i][gi]);
                    vals.extend(a.iter().zip(&b).map(|(x, y)| f.sub(x, y)));
                }
                if vals.iter().all(|x| f.is_zero(x)) {
                    continue;
                }
                let c = self.coordinates_of_values(&vals)?;
                table[j * d + i] = c.iter().map(|x| f.neg(x)).collect();
                table[i * d + j] = c;
            }
        }
        Ok(table)
    }

    fn compute_z_action(&self) -> Result<Vec<Matrix<F>>> {
        let d = self.dim();
        let alg = self.algebra();
        let mut out = Vec::with_capacity(self.center.dim());
        for z in self.center.basis() {
            let mut m = Matrix::zeros(self.field().clone(), d, d);
            for (j, rep) in self.reps.iter().enumerate() {
                let vals = self.values_of_gens(|g| alg.mul_vec(z, &rep.apply(g)));
                for (i, c) in self.coordinates_of_values(&vals)?.into_iter().enumerate() {
                    m.set(i, j, c);
                }
            }
            out.push(m);
        }
        Ok(out)
    }

    fn compute_p_power(&self) -> Result<Vec<Vec<F::Elem>>> {
        let p = self.field().characteristic();
        self.reps
            .iter()
            .map(|rep| {
                let vals = self.values_of_gens(|g| {
                    let mut v = g.to_vec();
                    for _ in 0..p {
                        v = rep.apply(&v);
                    }
                    v
                });
                self.coordinates_of_values(&vals)
            })
            .collect()
    }

    // ---- coordinate-level operations ----

    pub fn basis_vector(&self, i: usize) -> Vec<F::Elem> {
        let f = self.field();
        (0..self.dim())
            .map(|k| if k == i { f.one() } else { f.zero() })
            .collect()
    }

    /// Structure constants of `[b_i, b_j]`.
    pub fn table_entry(&self, i: usize, j: usize) -> &[F::Elem] {
        &self.table[i * self.dim() + j]
    }

    pub fn bracket_coords(&self, u: &[F::Elem], v: &[F::Elem]) -> Vec<F::Elem> {
        let f = self.field();
        let d = self.dim();
        let mut out = vec![f.zero(); d];
        for (i, ui) in u.iter().enumerate() {
            if f.is_zero(ui) {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if f.is_zero(vj) {
                    continue;
                }
                let c = f.mul(ui, vj);
                for (o, t) in out.iter_mut().zip(&self.table[i * d + j]) {
                    if !f.is_zero(t) {
                        f.add_mul_assign(o, &c, t);
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad(u)` on coordinates.
    pub fn ad_matrix(&self, u: &[F::Elem]) -> Matrix<F> {
        let d = self.dim();
        let mut m = Matrix::zeros(self.field().clone(), d, d);
        for j in 0..d {
            let col = self.bracket_coords(u, &self.basis_vector(j));
            for (i, c) in col.into_iter().enumerate() {
                m.set(i, j, c);
            }
        }
        m
    }

    /// Coordinates in the `Z(A)` basis; `None` if `z` is not central.
    fn center_coords(&self, z: &[F::Elem]) -> Result<Option<Vec<F::Elem>>> {
        self.center.coordinates(z)
    }

    /// Matrix of `u ↦ z·u` for central `z`.
    pub fn z_action_matrix(&self, z: &[F::Elem]) -> Result<Matrix<F>> {
        let c = self.center_coords(z)?.ok_or(Error::NotCentral)?;
        let f = self.field();
        let d = self.dim();
        let mut m = Matrix::zeros(f.clone(), d, d);
        for (ck, a) in c.iter().zip(&self.z_action) {
            if !f.is_zero(ck) {
                m = m.add(&a.scale(ck))?;
            }
        }
        Ok(m)
    }

    /// Representative `Σ u_k D_k`.
    pub fn representative(&self, u: &[F::Elem]) -> Result<Derivation<F>> {
        if u.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: u.len(),
            });
        }
        let f = self.field();
        let n = self.algebra.dim();
        let mut acc = Matrix::zeros(f.clone(), n, n);
        for (c, r) in u.iter().zip(&self.reps) {
            if !f.is_zero(c) {
                acc = acc.add(&r.matrix().scale(c))?;
            }
        }
        Ok(Derivation::new_unchecked(self.algebra(), acc))
    }

    /// `u^[p]` in coordinates, computed on a representative.
    pub fn p_power_coords(&self, u: &[F::Elem]) -> Result<Vec<F::Elem>> {
        let p = self.field().characteristic();
        if p == 0 {
            return Err(Error::PreconditionFailed("p-power map needs positive characteristic".into()));
        }
        let rep = self.representative(u)?;
        let vals = self.values_of_gens(|g| {
            let mut v = g.to_vec();
            for _ in 0..p {
                v = rep.apply(&v);
            }
            v
        });
        self.coordinates_of_values(&vals)
    }

    /// Tabulated `b_i^[p]`.
    pub fn p_power_of_basis(&self, i: usize) -> Option<&[F::Elem]> {
        self.p_power.as_ref().map(|t| t[i].as_slice())
    }

    // ---- element-level operations ----

    pub fn element(&self, rep: Derivation<F>) -> Result<HH1Element<F>> {
        rep.owned_by(self.algebra())?;
        let canonical = self.coords.canonical(&rep.generator_values(self.algebra()))?;
        Ok(HH1Element {
            structure_id: self.id,
            rep,
            canonical,
        })
    }

    pub fn basis_element(&self, i: usize) -> HH1Element<F> {
        self.element(self.reps[i].clone()).expect("own representative")
    }

    pub fn element_from_coords(&self, u: &[F::Elem]) -> Result<HH1Element<F>> {
        self.element(self.representative(u)?)
    }

    pub fn coords_of(&self, u: &HH1Element<F>) -> Result<Vec<F::Elem>> {
        self.owns(u)?;
        self.coordinates_of_values(&u.rep.generator_values(self.algebra()))
    }

    fn owns(&self, u: &HH1Element<F>) -> Result<()> {
        if u.structure_id != self.id {
            return Err(Error::StructureMismatch);
        }
        Ok(())
    }

    /// Class of the commutator of the representatives.
    pub fn bracket(&self, u: &HH1Element<F>, v: &HH1Element<F>) -> Result<HH1Element<F>> {
        self.owns(u)?;
        self.owns(v)?;
        self.element(u.rep.bracket(&v.rep)?)
    }

    /// Class of `a ↦ z D(a)`.
    pub fn z_action(&self, z: &AlgebraElement<F>, u: &HH1Element<F>) -> Result<HH1Element<F>> {
        self.algebra.owns(z)?;
        self.owns(u)?;
        if self.center_coords(z.coords())?.is_none() {
            return Err(Error::NotCentral);
        }
        self.element(u.rep.left_multiply(self.algebra(), z.coords())?)
    }

    /// Class of the `p`-fold composite of the representative.
    pub fn p_power(&self, u: &HH1Element<F>) -> Result<HH1Element<F>> {
        self.owns(u)?;
        let p = self.field().characteristic();
        if p == 0 {
            return Err(Error::PreconditionFailed("p-power map needs positive characteristic".into()));
        }
        self.element(u.rep.power(p))
    }
}

/// `HH^1` of a quantum complete intersection on the classes of `X`.
pub fn hh1_qci(a: &Qci) -> Result<LieStructure<PrimeField>> {
    let alg = a.algebra();
    let reps = basis_x(a)?
        .into_iter()
        .map(|(id, d)| (id.to_string(), d))
        .collect();
    LieStructure::new(a.algebra_arc(), derivation_values_qci(a), inner_generator_values(alg), reps)
}

/// `HH^1` of an arbitrary algebra; representatives are the first solver
/// basis vectors that are independent modulo inner derivations.
pub fn hh1_generic<F: Field>(alg: Arc<FDAlgebra<F>>) -> Result<LieStructure<F>> {
    let der = derivation_generator_values(&alg)?;
    let inner = inner_generator_values(&alg);
    let mut ech = EchelonBasis::from_subspace(&inner);
    let mut reps = Vec::new();
    for v in der.basis() {
        if ech.insert(v.clone()) {
            let d = Derivation::from_generator_values(&alg, v)?;
            reps.push((format!("D{}", reps.len()), d));
        }
    }
    LieStructure::new(alg, der, inner, reps)
}

impl LieStructure<PrimeField> {
    /// Index of the class of a monomial derivation in `X`.
    pub fn x_index(&self, id: MonomialDerivationId) -> Option<usize> {
        self.position(&id.to_string())
    }
}
