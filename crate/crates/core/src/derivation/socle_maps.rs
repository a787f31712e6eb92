//! Derivations with values in the socle and the second socle of a split
//! local symmetric algebra.

use super::derivation::{leibniz_defect, Derivation};
use super::inner::inner_derivations;
use crate::algebra::FDAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{EchelonBasis, Field, Matrix, QuotientCoordinates, Subspace};

/// A socle-valued derivation together with whether it is outer.
#[derive(Clone, Debug)]
pub struct SocleDerivation<F: Field> {
    pub derivation: Derivation<F>,
    pub outer: bool,
}

fn require_split_local_symmetric<F: Field>(alg: &FDAlgebra<F>) -> Result<()> {
    if alg.form().is_none() {
        return Err(Error::InvalidSocleMap("algebra has no symmetrizing form".into()));
    }
    if alg.simple_count() != 1 || alg.radical().dim() + 1 != alg.dim() {
        return Err(Error::InvalidSocleMap("algebra is not split local".into()));
    }
    Ok(())
}

/// `k 1 + J(A)^2`
fn unit_plus_j2<F: Field>(alg: &FDAlgebra<F>) -> Subspace<F> {
    let mut ech = EchelonBasis::from_subspace(&alg.radical_power(2));
    ech.insert(alg.unit().to_vec());
    ech.into_subspace()
}

/// Radical basis vectors forming a complement of `J^2` in `J`, chosen
/// greedily in basis order.
pub fn radical_generators<F: Field>(alg: &FDAlgebra<F>) -> Vec<Vec<F::Elem>> {
    let mut ech = EchelonBasis::from_subspace(&unit_plus_j2(alg));
    let mut out = Vec::new();
    for v in alg.radical().basis() {
        if ech.insert(v.clone()) {
            out.push(v.clone());
        }
    }
    out
}

/// Linear map vanishing on `k 1 + J^2` with `u_k ↦ s_k`.
fn map_from_complement<F: Field>(
    alg: &FDAlgebra<F>,
    reps: &[Vec<F::Elem>],
    images: &[Vec<F::Elem>],
) -> Result<Matrix<F>> {
    let f = alg.field();
    let n = alg.dim();
    let qc = QuotientCoordinates::new(unit_plus_j2(alg), reps)
        .map_err(|_| Error::InvalidSocleMap("arguments are dependent modulo k1 + J^2".into()))?;
    let mut m = Matrix::zeros(f.clone(), n, n);
    for i in 0..n {
        let c = qc
            .coordinates(&alg.unit_vector(i))?
            .ok_or_else(|| Error::InvalidSocleMap("arguments do not span J / J^2".into()))?;
        for (ck, img) in c.iter().zip(images) {
            if f.is_zero(ck) {
                continue;
            }
            for (r, x) in img.iter().enumerate() {
                if !f.is_zero(x) {
                    let cur = f.add(m.get(r, i), &f.mul(ck, x));
                    m.set(r, i, cur);
                }
            }
        }
    }
    Ok(m)
}

/// The map with `u_k ↦ s_k` on a complement `{u_k}` of `k 1 + J^2` inside
/// `J`, zero on `k 1 + J^2`. Every such map into `soc(A)` is a derivation,
/// and outer unless zero.
pub fn socle_valued_map<F: Field>(
    alg: &FDAlgebra<F>,
    assignments: &[(Vec<F::Elem>, Vec<F::Elem>)],
) -> Result<SocleDerivation<F>> {
    require_split_local_symmetric(alg)?;
    let soc = alg.socle_layer(1)?;
    let r = radical_generators(alg).len();
    if assignments.len() != r {
        return Err(Error::InvalidSocleMap(format!(
            "expected values on {r} elements spanning J / J^2"
        )));
    }
    for (u, s) in assignments {
        if !alg.radical().contains(u)? {
            return Err(Error::InvalidSocleMap("argument outside J(A)".into()));
        }
        if !soc.contains(s)? {
            return Err(Error::InvalidSocleMap("value outside soc(A)".into()));
        }
    }
    let reps: Vec<_> = assignments.iter().map(|(u, _)| u.clone()).collect();
    let imgs: Vec<_> = assignments.iter().map(|(_, s)| s.clone()).collect();
    let m = map_from_complement(alg, &reps, &imgs)?;
    let outer = !inner_derivations(alg).contains(m.as_flat())?;
    let derivation = Derivation::new(alg, m)?;
    Ok(SocleDerivation { derivation, outer })
}

/// Bases `x_1..x_r` of a complement of `J^2` in `J` and `y_1..y_r` in
/// `soc^2(A)` with `x_i y_j = δ_{ij} z`, `z` spanning `soc(A)`.
#[derive(Clone, Debug)]
pub struct SoclePairing<F: Field> {
    pub xs: Vec<Vec<F::Elem>>,
    pub ys: Vec<Vec<F::Elem>>,
    pub z: Vec<F::Elem>,
}

pub fn second_socle_pairing<F: Field>(alg: &FDAlgebra<F>) -> Result<SoclePairing<F>> {
    require_split_local_symmetric(alg)?;
    let f = alg.field();
    let n = alg.dim();
    let soc = alg.socle_layer(1)?;
    if soc.dim() != 1 {
        return Err(Error::PairingNotFound);
    }
    let z = soc.basis()[0].clone();
    let soc2 = alg.socle_layer(2)?;
    let xs = radical_generators(alg);
    let r = xs.len();
    let d2 = soc2.dim();
    // unknown: coefficients over the soc^2 basis; equations x_i y = δ_ij z
    let mut sys = Matrix::zeros(f.clone(), r * n, d2);
    for (t, w) in soc2.basis().iter().enumerate() {
        for (i, x) in xs.iter().enumerate() {
            for (k, v) in alg.mul_vec(x, w).into_iter().enumerate() {
                sys.set(i * n + k, t, v);
            }
        }
    }
    let mut ys = Vec::with_capacity(r);
    for j in 0..r {
        let mut rhs = vec![f.zero(); r * n];
        for (k, zk) in z.iter().enumerate() {
            rhs[j * n + k] = zk.clone();
        }
        let c = sys.solve(&rhs)?.ok_or(Error::PairingNotFound)?;
        ys.push(soc2.combine(&c)?);
    }
    Ok(SoclePairing { xs, ys, z })
}

fn sigma_map<F: Field>(alg: &FDAlgebra<F>, pairing: &SoclePairing<F>, sigma: &Matrix<F>) -> Result<Matrix<F>> {
    let f = alg.field();
    let r = pairing.xs.len();
    if sigma.rows() != r || sigma.cols() != r {
        return Err(Error::DimensionMismatch {
            expected: r,
            found: sigma.rows().max(sigma.cols()),
        });
    }
    let n = alg.dim();
    let images: Vec<Vec<F::Elem>> = (0..r)
        .map(|i| {
            let mut v = vec![f.zero(); n];
            for (j, y) in pairing.ys.iter().enumerate() {
                let s = sigma.get(i, j);
                if f.is_zero(s) {
                    continue;
                }
                for (o, yk) in v.iter_mut().zip(y) {
                    if !f.is_zero(yk) {
                        f.add_mul_assign(o, s, yk);
                    }
                }
            }
            v
        })
        .collect();
    map_from_complement(alg, &pairing.xs, &images)
}

/// `x_i ↦ Σ_j σ_{ij} y_j`, zero on `k 1 + J^2`. A derivation exactly when
/// `σ` is antisymmetric (odd characteristic).
pub fn second_socle_map<F: Field>(alg: &FDAlgebra<F>, sigma: &Matrix<F>) -> Result<Derivation<F>> {
    let pairing = second_socle_pairing(alg)?;
    let m = sigma_map(alg, &pairing, sigma)?;
    Derivation::new(alg, m)
}

/// The `σ` (flattened `r x r`) for which the second-socle map is a derivation.
pub fn second_socle_derivation_space<F: Field>(alg: &FDAlgebra<F>) -> Result<Subspace<F>> {
    let f = alg.field();
    let pairing = second_socle_pairing(alg)?;
    let r = pairing.xs.len();
    let mut columns = Vec::with_capacity(r * r);
    for a in 0..r {
        for b in 0..r {
            let mut sigma = Matrix::zeros(f.clone(), r, r);
            sigma.set(a, b, f.one());
            columns.push(leibniz_defect(alg, &sigma_map(alg, &pairing, &sigma)?));
        }
    }
    let len = columns.first().map_or(0, |c| c.len());
    let m = Matrix::from_rows(f.clone(), len, columns)?.transpose();
    Ok(m.nullspace())
}
