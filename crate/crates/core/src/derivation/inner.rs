use super::derivation::Derivation;
use crate::algebra::{AlgebraElement, FDAlgebra};
use crate::error::Result;
use crate::linalg::{EchelonBasis, Field, Matrix, Subspace};

/// Matrix of `ad(w) = [w, -]`.
pub fn ad_matrix<F: Field>(alg: &FDAlgebra<F>, w: &[F::Elem]) -> Matrix<F> {
    alg.left_mul_matrix(w)
        .sub(&alg.right_mul_matrix(w))
        .expect("same shape")
}

pub fn inner_derivation<F: Field>(alg: &FDAlgebra<F>, w: &AlgebraElement<F>) -> Result<Derivation<F>> {
    alg.owns(w)?;
    Ok(Derivation::new_unchecked(alg, ad_matrix(alg, w.coords())))
}

/// `IDer(A)` as flattened matrices.
pub fn inner_derivations<F: Field>(alg: &FDAlgebra<F>) -> Subspace<F> {
    let n = alg.dim();
    let mut ech = EchelonBasis::new(alg.field().clone(), n * n);
    for i in 0..n {
        ech.insert(ad_matrix(alg, &alg.unit_vector(i)).into_flat());
    }
    ech.into_subspace()
}

/// `IDer(A)` by values on the generators.
pub fn inner_generator_values<F: Field>(alg: &FDAlgebra<F>) -> Subspace<F> {
    let n = alg.dim();
    let gens = alg.generators();
    let mut ech = EchelonBasis::new(alg.field().clone(), gens.len() * n);
    for i in 0..n {
        let e = alg.unit_vector(i);
        let v: Vec<F::Elem> = gens
            .iter()
            .flat_map(|&g| alg.commutator_vec(&e, &alg.unit_vector(g)))
            .collect();
        ech.insert(v);
    }
    ech.into_subspace()
}
