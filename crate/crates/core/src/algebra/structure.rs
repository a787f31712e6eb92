//! Center, commutators, radical powers, perps and socle layers.

use super::algebra::FDAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{EchelonBasis, Field, Subspace};

impl<F: Field> FDAlgebra<F> {
    /// `{z : z b_i = b_i z for all i}` as a nullspace.
    pub fn center(&self) -> Subspace<F> {
        let f = self.field();
        let n = self.dim();
        // row (i, k): coefficient of b_k in z b_i - b_i z, as a functional of z
        let mut ech = EchelonBasis::new(f.clone(), n);
        for i in 0..n {
            let mut rows = vec![vec![f.zero(); n]; n];
            for j in 0..n {
                for (k, c) in self.basis_product(j, i) {
                    rows[*k][j] = f.add(&rows[*k][j], c);
                }
                for (k, c) in self.basis_product(i, j) {
                    rows[*k][j] = f.sub(&rows[*k][j], c);
                }
            }
            for r in rows {
                if ech.is_full() {
                    break;
                }
                ech.insert(r);
            }
        }
        ech.into_subspace().annihilator()
    }

    /// `span{b_i b_j - b_j b_i}`.
    pub fn commutator_space(&self) -> Subspace<F> {
        let f = self.field();
        let n = self.dim();
        let mut ech = EchelonBasis::new(f.clone(), n);
        for i in 0..n {
            for j in i + 1..n {
                let mut v = vec![f.zero(); n];
                for (k, c) in self.basis_product(i, j) {
                    v[*k] = f.add(&v[*k], c);
                }
                for (k, c) in self.basis_product(j, i) {
                    v[*k] = f.sub(&v[*k], c);
                }
                ech.insert(v);
            }
        }
        ech.into_subspace()
    }

    /// `J(A)^r`; `r = 0` gives the whole algebra.
    pub fn radical_power(&self, r: usize) -> Subspace<F> {
        let mut power = Subspace::full(self.field().clone(), self.dim());
        for _ in 0..r {
            if power.is_zero() {
                break;
            }
            power = self.product_space(&power, self.radical());
        }
        power
    }

    /// `[J^0, J^1, ..., J^m]` with `J^m = 0`, each power computed once.
    pub fn radical_powers(&self) -> Vec<Subspace<F>> {
        let mut out = vec![Subspace::full(self.field().clone(), self.dim())];
        while !out.last().expect("nonempty").is_zero() {
            let next = self.product_space(out.last().expect("nonempty"), self.radical());
            out.push(next);
        }
        out
    }

    /// `U^perp = {a : s(a u) = 0 for all u in U}`.
    pub fn perp(&self, u: &Subspace<F>) -> Result<Subspace<F>> {
        let s = self.form().ok_or(Error::NotSymmetric)?;
        if u.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: u.ambient_dim(),
            });
        }
        let f = self.field();
        let n = self.dim();
        // functional a -> s(a u) has coefficients s(b_i u)
        let rows = u.basis().iter().map(|v| {
            (0..n)
                .map(|i| {
                    let prod = self.mul_basis_vec(i, v);
                    let mut acc = f.zero();
                    for (x, y) in prod.iter().zip(s) {
                        if !f.is_zero(x) && !f.is_zero(y) {
                            f.add_mul_assign(&mut acc, x, y);
                        }
                    }
                    acc
                })
                .collect::<Vec<_>>()
        });
        Ok(Subspace::span(f.clone(), n, rows)?.annihilator())
    }

    /// `soc^n(A) = (J(A)^n)^perp`.
    pub fn socle_layer(&self, n: usize) -> Result<Subspace<F>> {
        self.perp(&self.radical_power(n))
    }

    /// Two-sided annihilator of the radical; no form needed.
    pub fn socle_by_annihilator(&self) -> Subspace<F> {
        let f = self.field();
        let n = self.dim();
        let mut ech = EchelonBasis::new(f.clone(), n);
        for u in self.radical().basis() {
            // a -> a u and a -> u a, coordinate rows
            let mut left = vec![vec![f.zero(); n]; n];
            let mut right = vec![vec![f.zero(); n]; n];
            for i in 0..n {
                let au = self.mul_basis_vec(i, u);
                let ua = self.mul_vec_basis(u, i);
                for k in 0..n {
                    left[k][i] = au[k].clone();
                    right[k][i] = ua[k].clone();
                }
            }
            for r in left.into_iter().chain(right) {
                if ech.is_full() {
                    break;
                }
                ech.insert(r);
            }
        }
        ech.into_subspace().annihilator()
    }

    /// `J(Z(A)) = Z(A) ∩ J(A)`.
    pub fn center_radical(&self) -> Subspace<F> {
        self.center()
            .intersection(self.radical())
            .expect("same ambient space")
    }

    /// `soc(Z(A))`: central elements annihilated by `J(Z(A))`.
    pub fn center_socle(&self) -> Subspace<F> {
        let f = self.field();
        let n = self.dim();
        let z = self.center();
        let jz = self.center_radical();
        let mut ech = EchelonBasis::new(f.clone(), n);
        for u in jz.basis() {
            let mut rows = vec![vec![f.zero(); n]; n];
            for i in 0..n {
                let ua = self.mul_vec_basis(u, i);
                for k in 0..n {
                    rows[k][i] = ua[k].clone();
                }
            }
            for r in rows {
                if ech.is_full() {
                    break;
                }
                ech.insert(r);
            }
        }
        ech.into_subspace()
            .annihilator()
            .intersection(&z)
            .expect("same ambient space")
    }
}
