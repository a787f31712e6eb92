//! Subspace computations inside a tabulated Lie algebra.

use super::structure::LieStructure;
use crate::error::Result;
use crate::linalg::{EchelonBasis, Field, Matrix, Subspace};

/// Safety cap on series length.
const MAX_SERIES: usize = 256;

impl<F: Field> LieStructure<F> {
    pub fn full_space(&self) -> Subspace<F> {
        Subspace::full(self.field().clone(), self.dim())
    }

    pub fn span_coords(&self, vectors: impl IntoIterator<Item = Vec<F::Elem>>) -> Result<Subspace<F>> {
        Subspace::span(self.field().clone(), self.dim(), vectors)
    }

    /// `[U, V]`
    pub fn bracket_space(&self, u: &Subspace<F>, v: &Subspace<F>) -> Subspace<F> {
        let mut ech = EchelonBasis::new(self.field().clone(), self.dim());
        'outer: for a in u.basis() {
            for b in v.basis() {
                if ech.is_full() {
                    break 'outer;
                }
                ech.insert(self.bracket_coords(a, b));
            }
        }
        ech.into_subspace()
    }

    /// `L' = [L, L]`
    pub fn derived_algebra(&self) -> Subspace<F> {
        let full = self.full_space();
        self.bracket_space(&full, &full)
    }

    /// `S, [S,S], [[S,S],[S,S]], ...` until it stabilizes.
    pub fn derived_series(&self, s: &Subspace<F>) -> Vec<Subspace<F>> {
        let mut out = vec![s.clone()];
        for _ in 0..MAX_SERIES {
            let last = out.last().expect("nonempty");
            let next = self.bracket_space(last, last);
            if &next == last {
                break;
            }
            out.push(next);
        }
        out
    }

    /// `S, [S,S], [S,[S,S]], ...` until it stabilizes.
    pub fn lower_central_series(&self, s: &Subspace<F>) -> Vec<Subspace<F>> {
        let mut out = vec![s.clone()];
        for _ in 0..MAX_SERIES {
            let last = out.last().expect("nonempty");
            let next = self.bracket_space(s, last);
            if &next == last {
                break;
            }
            out.push(next);
        }
        out
    }

    pub fn is_solvable(&self, s: &Subspace<F>) -> bool {
        self.derived_series(s).last().is_some_and(|t| t.is_zero())
    }

    pub fn is_nilpotent(&self, s: &Subspace<F>) -> bool {
        self.lower_central_series(s).last().is_some_and(|t| t.is_zero())
    }

    pub fn is_abelian(&self, s: &Subspace<F>) -> bool {
        self.bracket_space(s, s).is_zero()
    }

    /// `C_L(S) = {v : [s, v] = 0 for all s in S}`
    pub fn centralizer(&self, s: &Subspace<F>) -> Subspace<F> {
        let d = self.dim();
        let mut ech = EchelonBasis::new(self.field().clone(), d);
        for u in s.basis() {
            let m = self.ad_matrix(u);
            for r in 0..d {
                if ech.is_full() {
                    break;
                }
                ech.insert(m.row(r).to_vec());
            }
        }
        ech.into_subspace().annihilator()
    }

    /// `Z(L)`
    pub fn lie_center(&self) -> Subspace<F> {
        self.centralizer(&self.full_space())
    }

    /// `Z(S) = S ∩ C_L(S)`
    pub fn center_of(&self, s: &Subspace<F>) -> Subspace<F> {
        s.intersection(&self.centralizer(s)).expect("same ambient space")
    }

    /// Closed under the bracket.
    pub fn is_subalgebra(&self, s: &Subspace<F>) -> bool {
        self.bracket_space(s, s).is_subspace_of(s).unwrap_or(false)
    }

    /// `span{z·u : z in I, u in U}` for a subspace `I` of `Z(A)`.
    pub fn module_product(&self, ideal: &Subspace<F>, u: &Subspace<F>) -> Result<Subspace<F>> {
        let mut ech = EchelonBasis::new(self.field().clone(), self.dim());
        for z in ideal.basis() {
            let m = self.z_action_matrix(z)?;
            for v in u.basis() {
                ech.insert(m.mul_vec(v)?);
            }
        }
        Ok(ech.into_subspace())
    }

    /// `soc_{Z(A)}(L) = {v : z·v = 0 for all z in J(Z(A))}`
    pub fn socle_as_z_module(&self) -> Result<Subspace<F>> {
        let d = self.dim();
        let jz = self.algebra().center_radical();
        let mut ech = EchelonBasis::new(self.field().clone(), d);
        for z in jz.basis() {
            let m = self.z_action_matrix(z)?;
            for r in 0..d {
                ech.insert(m.row(r).to_vec());
            }
        }
        Ok(ech.into_subspace().annihilator())
    }

    /// Every `ad(h)`, `h` in a basis of `H`, is diagonal in the chosen basis.
    pub fn is_diagonal_on_basis(&self, h: &Subspace<F>) -> bool {
        let f = self.field();
        h.basis().iter().all(|u| {
            let m = self.ad_matrix(u);
            (0..self.dim()).all(|i| (0..self.dim()).all(|j| i == j || f.is_zero(m.get(i, j))))
        })
    }

    /// `[u,u] = 0` and `[u,v] = -[v,u]` on the basis.
    pub fn antisymmetry_holds(&self) -> bool {
        let f = self.field();
        let d = self.dim();
        (0..d).all(|i| {
            self.table_entry(i, i).iter().all(|x| f.is_zero(x))
                && (0..d).all(|j| {
                    self.table_entry(i, j)
                        .iter()
                        .zip(self.table_entry(j, i))
                        .all(|(a, b)| f.is_zero(&f.add(a, b)))
                })
        })
    }

    /// First basis triple violating Jacobi, if any (exhaustive).
    pub fn jacobi_failure(&self) -> Option<(usize, usize, usize)> {
        let f = self.field();
        let d = self.dim();
        for i in 0..d {
            for j in i + 1..d {
                let ij = self.table_entry(i, j).to_vec();
                for k in j + 1..d {
                    let ek = self.basis_vector(k);
                    let ei = self.basis_vector(i);
                    let ej = self.basis_vector(j);
                    let a = self.bracket_coords(&ij, &ek);
                    let b = self.bracket_coords(self.table_entry(j, k), &ei);
                    let c = self.bracket_coords(self.table_entry(k, i), &ej);
                    if !a
                        .iter()
                        .zip(b.iter().zip(&c))
                        .all(|(x, (y, z))| f.is_zero(&f.add(&f.add(x, y), z)))
                    {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// `ad(u^[p]) = ad(u)^p` for every basis element.
    pub fn restricted_axiom_holds(&self) -> Result<bool> {
        let p = self.field().characteristic();
        for i in 0..self.dim() {
            let u = self.basis_vector(i);
            let up = self.p_power_coords(&u)?;
            let ad = self.ad_matrix(&u);
            let mut adp = Matrix::identity(self.field().clone(), self.dim());
            for _ in 0..p {
                adp = adp.mul(&ad)?;
            }
            if self.ad_matrix(&up) != adp {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
