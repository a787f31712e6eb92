//! Sub- and quotient bimodules of an algebra and the Homs between them.

use super::algebra::FDAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{EchelonBasis, Field, Matrix, Subspace};

/// Largest algebra dimension accepted by the bimodule solvers.
pub const BIMODULE_DIM_LIMIT: usize = 50;

/// A bimodule carved out of the regular bimodule `A`.
#[derive(Clone, Debug)]
pub enum BimoduleSpec<F: Field> {
    /// The subspace itself, which must be a two-sided ideal.
    Sub(Subspace<F>),
    /// `A / U` for a two-sided ideal `U`.
    Quotient(Subspace<F>),
}

impl<F: Field> BimoduleSpec<F> {
    pub fn whole(alg: &FDAlgebra<F>) -> Self {
        Self::Sub(Subspace::full(alg.field().clone(), alg.dim()))
    }

    fn subspace(&self) -> &Subspace<F> {
        match self {
            Self::Sub(u) | Self::Quotient(u) => u,
        }
    }
}

/// Concrete module data: a basis in `A` and a coordinate map back.
#[derive(Clone, Debug)]
pub struct Bimodule<F: Field> {
    spec: BimoduleSpec<F>,
    /// algebra vectors representing the module basis
    basis: Vec<Vec<F::Elem>>,
    complement: Vec<usize>,
    /// actions of each generator of `A`
    left: Vec<Matrix<F>>,
    right: Vec<Matrix<F>>,
}

impl<F: Field> Bimodule<F> {
    pub fn new(alg: &FDAlgebra<F>, spec: BimoduleSpec<F>) -> Result<Self> {
        let u = spec.subspace();
        if u.ambient_dim() != alg.dim() || u.field() != alg.field() {
            return Err(Error::DimensionMismatch {
                expected: alg.dim(),
                found: u.ambient_dim(),
            });
        }
        for v in u.basis() {
            for i in 0..alg.dim() {
                if !u.contains(&alg.mul_basis_vec(i, v))? || !u.contains(&alg.mul_vec_basis(v, i))? {
                    return Err(Error::NotABimodule(
                        "subspace is not a two-sided ideal".into(),
                    ));
                }
            }
        }
        let (basis, complement) = match &spec {
            BimoduleSpec::Sub(u) => (u.basis().to_vec(), Vec::new()),
            BimoduleSpec::Quotient(u) => {
                let comp = u.complement_indices();
                (comp.iter().map(|&c| alg.unit_vector(c)).collect(), comp)
            }
        };
        let mut m = Self {
            spec,
            basis,
            complement,
            left: Vec::new(),
            right: Vec::new(),
        };
        let d = m.dim();
        for &g in alg.generators() {
            let mut l = Matrix::zeros(alg.field().clone(), d, d);
            let mut r = Matrix::zeros(alg.field().clone(), d, d);
            for t in 0..d {
                let gl = m.coordinates(&alg.mul_basis_vec(g, &m.basis[t]))?;
                let gr = m.coordinates(&alg.mul_vec_basis(&m.basis[t], g))?;
                for s in 0..d {
                    l.set(s, t, gl[s].clone());
                    r.set(s, t, gr[s].clone());
                }
            }
            m.left.push(l);
            m.right.push(r);
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn spec(&self) -> &BimoduleSpec<F> {
        &self.spec
    }

    /// Algebra vectors representing the basis of the module.
    pub fn basis(&self) -> &[Vec<F::Elem>] {
        &self.basis
    }

    /// Coordinates of (the image of) an algebra vector.
    pub fn coordinates(&self, w: &[F::Elem]) -> Result<Vec<F::Elem>> {
        match &self.spec {
            BimoduleSpec::Sub(u) => u
                .coordinates(w)?
                .ok_or_else(|| Error::NotABimodule("vector outside the submodule".into())),
            BimoduleSpec::Quotient(u) => {
                let r = u.reduce(w)?;
                Ok(self.complement.iter().map(|&c| r[c].clone()).collect())
            }
        }
    }

    /// Algebra vector representing a coordinate vector.
    pub fn lift(&self, coords: &[F::Elem], field: &F) -> Vec<F::Elem> {
        let n = self.basis.first().map_or(0, |b| b.len());
        let mut out = vec![field.zero(); n];
        for (c, b) in coords.iter().zip(&self.basis) {
            if field.is_zero(c) {
                continue;
            }
            for (o, x) in out.iter_mut().zip(b) {
                if !field.is_zero(x) {
                    field.add_mul_assign(o, c, x);
                }
            }
        }
        out
    }
}

fn check_scale<F: Field>(alg: &FDAlgebra<F>) -> Result<()> {
    if alg.dim() > BIMODULE_DIM_LIMIT {
        return Err(Error::ScaleLimitExceeded {
            what: "bimodule Hom",
            dim: alg.dim(),
            limit: BIMODULE_DIM_LIMIT,
        });
    }
    Ok(())
}

/// `Hom_{A^e}(M, N)` as a subspace of `dim N x dim M` matrices, flattened
/// row-major. Commuting with the generators of `A` on both sides is
/// equivalent to commuting with every element.
pub fn bimodule_hom<F: Field>(
    alg: &FDAlgebra<F>,
    m: &BimoduleSpec<F>,
    n: &BimoduleSpec<F>,
) -> Result<Subspace<F>> {
    check_scale(alg)?;
    let mm = Bimodule::new(alg, m.clone())?;
    let nn = Bimodule::new(alg, n.clone())?;
    Ok(hom_between(alg.field(), &mm, &nn))
}

pub(crate) fn hom_between<F: Field>(f: &F, mm: &Bimodule<F>, nn: &Bimodule<F>) -> Subspace<F> {
    let (dm, dn) = (mm.dim(), nn.dim());
    let unknowns = dm * dn;
    let mut ech = EchelonBasis::new(f.clone(), unknowns);
    let pairs = mm.left.iter().zip(&nn.left).chain(mm.right.iter().zip(&nn.right));
    for (am, an) in pairs {
        // (phi am - an phi)[r][c] = sum_s phi[r][s] am[s][c] - an[r][s] phi[s][c]
        for r in 0..dn {
            for c in 0..dm {
                if ech.is_full() {
                    break;
                }
                let mut row = vec![f.zero(); unknowns];
                for s in 0..dm {
                    let v = am.get(s, c);
                    if !f.is_zero(v) {
                        row[r * dm + s] = f.add(&row[r * dm + s], v);
                    }
                }
                for s in 0..dn {
                    let v = an.get(r, s);
                    if !f.is_zero(v) {
                        row[s * dm + c] = f.sub(&row[s * dm + c], v);
                    }
                }
                ech.insert(row);
            }
        }
    }
    ech.into_subspace().annihilator()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::qci::make_qci;

    #[test]
    fn endomorphisms_of_regular_bimodule_are_central() {
        let a = make_qci(3, 2, None).unwrap();
        let alg = a.algebra();
        let whole = BimoduleSpec::whole(alg);
        let hom = bimodule_hom(alg, &whole, &whole).unwrap();
        assert_eq!(hom.dim(), alg.center().dim());
    }

    #[test]
    fn non_ideal_is_rejected() {
        let a = make_qci(3, 2, None).unwrap();
        let alg = a.algebra();
        let u = Subspace::coordinate(a.field(), 9, [a.index(1, 0)]);
        let whole = BimoduleSpec::whole(alg);
        assert!(matches!(
            bimodule_hom(alg, &whole, &BimoduleSpec::Sub(u)),
            Err(Error::NotABimodule(_))
        ));
    }
}
