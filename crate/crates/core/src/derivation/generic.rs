//! Derivations of an arbitrary algebra by solving the Leibniz equations.

use super::derivation::extend_from_generators;
use crate::algebra::FDAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{EchelonBasis, Field, Matrix, Subspace};

/// Dimension limit for the raw Leibniz nullspace.
pub const GENERIC_DERIVATION_LIMIT: usize = 50;

/// `Der(A)` as a subspace of flattened `n x n` matrices (entry `(k, i)` at
/// `k * n + i`), from the Leibniz equations on every basis pair.
pub fn derivations_generic<F: Field>(alg: &FDAlgebra<F>) -> Result<Subspace<F>> {
    let n = alg.dim();
    if n > GENERIC_DERIVATION_LIMIT {
        return Err(Error::ScaleLimitExceeded {
            what: "generic derivation solve",
            dim: n,
            limit: GENERIC_DERIVATION_LIMIT,
        });
    }
    let f = alg.field();
    let unknowns = n * n;
    let mut ech = EchelonBasis::new(f.clone(), unknowns);
    let mut rows: Vec<Vec<F::Elem>> = vec![vec![f.zero(); unknowns]; n];
    let mut touched = vec![false; n];
    for i in 0..n {
        for j in 0..n {
            // D(b_i b_j) - D(b_i) b_j - b_i D(b_j), coordinate t
            for (l, c) in alg.basis_product(i, j) {
                for (t, row) in rows.iter_mut().enumerate() {
                    row[t * n + l] = f.add(&row[t * n + l], c);
                    touched[t] = true;
                }
            }
            for k in 0..n {
                for (t, c) in alg.basis_product(k, j) {
                    let idx = k * n + i;
                    rows[*t][idx] = f.sub(&rows[*t][idx], c);
                    touched[*t] = true;
                }
                for (t, c) in alg.basis_product(i, k) {
                    let idx = k * n + j;
                    rows[*t][idx] = f.sub(&rows[*t][idx], c);
                    touched[*t] = true;
                }
            }
            for t in 0..n {
                if touched[t] {
                    let row = std::mem::replace(&mut rows[t], vec![f.zero(); unknowns]);
                    touched[t] = false;
                    if !ech.is_full() {
                        ech.insert(row);
                    }
                }
            }
        }
    }
    Ok(ech.into_subspace().annihilator())
}

/// `Der(A)` parameterized by the values on the generators (ambient
/// `#generators * n`). A map extended along generator words is a derivation
/// iff it satisfies Leibniz on all (generator, basis) pairs.
pub fn derivation_generator_values<F: Field>(alg: &FDAlgebra<F>) -> Result<Subspace<F>> {
    let n = alg.dim();
    let f = alg.field();
    let gens = alg.generators();
    let g_count = gens.len() * n;
    let eq_count = gens.len() * n * n;
    let mut constraint = Matrix::zeros(f.clone(), eq_count, g_count);
    let mut unit = vec![f.zero(); g_count];
    for u in 0..g_count {
        unit[u] = f.one();
        let m = extend_from_generators(alg, &unit)?;
        unit[u] = f.zero();
        let cols: Vec<Vec<F::Elem>> = (0..n).map(|i| m.column(i)).collect();
        for (gi, &g) in gens.iter().enumerate() {
            for b in 0..n {
                let mut defect = vec![f.zero(); n];
                for (k, c) in alg.basis_product(g, b) {
                    for (o, x) in defect.iter_mut().zip(&cols[*k]) {
                        if !f.is_zero(x) {
                            f.add_mul_assign(o, c, x);
                        }
                    }
                }
                let l = alg.mul_basis_vec(g, &cols[b]);
                let r = alg.mul_vec_basis(&cols[g], b);
                let base = (gi * n + b) * n;
                for t in 0..n {
                    let v = f.sub(&f.sub(&defect[t], &l[t]), &r[t]);
                    if !f.is_zero(&v) {
                        constraint.set(base + t, u, v);
                    }
                }
            }
        }
    }
    Ok(constraint.nullspace())
}

/// Embeds generator values as flattened derivation matrices.
pub fn generator_values_to_matrices<F: Field>(alg: &FDAlgebra<F>, values: &Subspace<F>) -> Result<Subspace<F>> {
    let n = alg.dim();
    let mut ech = EchelonBasis::new(alg.field().clone(), n * n);
    for v in values.basis() {
        ech.insert(extend_from_generators(alg, v)?.into_flat());
    }
    Ok(ech.into_subspace())
}
