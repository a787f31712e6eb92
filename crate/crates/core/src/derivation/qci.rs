//! Closed-form derivation calculus of the quantum complete intersection.

use std::fmt;

use super::derivation::Derivation;
use super::generic::generator_values_to_matrices;
use crate::algebra::{Monomial, Qci};
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, PrimeField, Subspace};

/// Linear conditions on the coefficients `α_{i,j}` of `D(x)` (columns
/// `0..p^2`) and `β_{i,j}` of `D(y)` (columns `p^2..2p^2`). Only nonzero
/// rows are kept:
///
/// * `α_{i,j-1}(1 - q^{i-1}) + β_{i-1,j}(1 - q^{j-1}) = 0` for `1 <= i,j <= p-1`
/// * `α_{0,j-1} = 0` and `β_{j-1,0} = 0` for `1 <= j <= p-1`
pub fn qci_constraint_matrix(a: &Qci) -> Matrix<PrimeField> {
    let f = a.field();
    let p = a.p();
    let n = p * p;
    let q = a.q();
    let mut rows = Vec::new();
    let qpow = |k: usize| f.pow(&q, k as u64);
    for i in 1..p {
        for j in 1..p {
            let ca = f.sub(&1, &qpow(i - 1));
            let cb = f.sub(&1, &qpow(j - 1));
            if ca == 0 && cb == 0 {
                continue;
            }
            let mut row = vec![0; 2 * n];
            row[a.index(i, j - 1)] = ca;
            row[n + a.index(i - 1, j)] = cb;
            rows.push(row);
        }
    }
    for j in 1..p {
        let mut row = vec![0; 2 * n];
        row[a.index(0, j - 1)] = 1;
        rows.push(row);
        let mut row = vec![0; 2 * n];
        row[n + a.index(j - 1, 0)] = 1;
        rows.push(row);
    }
    Matrix::from_rows(f, 2 * n, rows).expect("rows have length 2p^2")
}

/// Admissible values `(D(x), D(y))`, concatenated.
pub fn derivation_values_qci(a: &Qci) -> Subspace<PrimeField> {
    qci_constraint_matrix(a).nullspace()
}

/// `Der(A)` as flattened matrices, each value pair extended by the
/// product rule.
pub fn derivations_qci(a: &Qci) -> Result<Subspace<PrimeField>> {
    generator_values_to_matrices(a.algebra(), &derivation_values_qci(a))
}

/// `f` sends `x` to a monomial and kills `y`; `g` the other way round.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MonomialKind {
    F,
    G,
}

/// Names `f_{a,b}` (`x ↦ x^a y^b`, `y ↦ 0`) or `g_{a,b}` (`x ↦ 0`, `y ↦ x^a y^b`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonomialDerivationId {
    pub kind: MonomialKind,
    pub a: usize,
    pub b: usize,
}

impl fmt::Display for MonomialDerivationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            MonomialKind::F => 'f',
            MonomialKind::G => 'g',
        };
        write!(f, "{k}_{{{},{}}}", self.a, self.b)
    }
}

fn divides(e: usize, v: i64) -> bool {
    v.rem_euclid(e as i64) == 0
}

impl MonomialDerivationId {
    pub fn f(a: usize, b: usize) -> Self {
        Self {
            kind: MonomialKind::F,
            a,
            b,
        }
    }

    pub fn g(a: usize, b: usize) -> Self {
        Self {
            kind: MonomialKind::G,
            a,
            b,
        }
    }

    /// `f_{a,b}`: `b = p-1`, or `a >= 1` and `e | a-1`; dually for `g`.
    pub fn exists(&self, p: usize, e: usize) -> bool {
        if self.a >= p || self.b >= p {
            return false;
        }
        let (own, other) = match self.kind {
            MonomialKind::F => (self.a, self.b),
            MonomialKind::G => (self.b, self.a),
        };
        other == p - 1 || (own >= 1 && divides(e, own as i64 - 1))
    }

    /// Member of the complement basis `X`.
    pub fn in_x(&self, p: usize, e: usize) -> bool {
        if self.a >= p || self.b >= p {
            return false;
        }
        let (own, other) = match self.kind {
            MonomialKind::F => (self.a, self.b),
            MonomialKind::G => (self.b, self.a),
        };
        other == p - 1 || (own >= 1 && divides(e, own as i64 - 1) && divides(e, other as i64))
    }

    /// `x^a y^b` monomial of the value.
    pub fn monomial(&self) -> Monomial {
        Monomial::new(self.a, self.b)
    }
}

/// The derivation named by `id`, built from the explicit value formula
///
/// * `f_{a,b}(x^c y^d) = (Σ_{s<c} q^{bs}) x^{a+c-1} y^{b+d}`
/// * `g_{a,b}(x^c y^d) = (Σ_{t<d} q^{at}) x^{a+c} y^{b+d-1}`
///
/// and certified.
pub fn monomial_derivation(id: MonomialDerivationId, a: &Qci) -> Result<Derivation<PrimeField>> {
    let (p, e) = (a.p(), a.e());
    if !id.exists(p, e) {
        return Err(Error::NoSuchDerivation(id.to_string()));
    }
    Derivation::new(a.algebra(), monomial_matrix(id, a))
}

pub(crate) fn monomial_matrix(id: MonomialDerivationId, a: &Qci) -> Matrix<PrimeField> {
    let f = a.field();
    let p = a.p();
    let n = p * p;
    let q = a.q();
    let mut m = Matrix::zeros(f, n, n);
    let geometric = |ratio: u32, len: usize| {
        let mut acc = 0;
        let mut term = 1;
        for _ in 0..len {
            acc = f.add(&acc, &term);
            term = f.mul(&term, &ratio);
        }
        acc
    };
    for col in 0..n {
        let Monomial { i: c, j: d } = Monomial::from_index(col, p);
        let (coef, ti, tj) = match id.kind {
            MonomialKind::F if c >= 1 => (geometric(f.pow(&q, id.b as u64), c), id.a + c - 1, id.b + d),
            MonomialKind::G if d >= 1 => (geometric(f.pow(&q, id.a as u64), d), id.a + c, id.b + d - 1),
            _ => continue,
        };
        if ti < p && tj < p && coef != 0 {
            m.set(a.index(ti, tj), col, coef);
        }
    }
    m
}

/// The names in `X`, `f`s then `g`s, each in lexicographic `(a, b)` order.
pub fn basis_x_ids(p: usize, e: usize) -> Vec<MonomialDerivationId> {
    let mut out = Vec::new();
    for kind in [MonomialKind::F, MonomialKind::G] {
        for a in 0..p {
            for b in 0..p {
                let id = MonomialDerivationId { kind, a, b };
                if id.in_x(p, e) {
                    out.push(id);
                }
            }
        }
    }
    out
}

/// Certified derivations of `X`, whose classes form a basis of `HH^1(A)`.
pub fn basis_x(a: &Qci) -> Result<Vec<(MonomialDerivationId, Derivation<PrimeField>)>> {
    basis_x_ids(a.p(), a.e())
        .into_iter()
        .map(|id| Ok((id, monomial_derivation(id, a)?)))
        .collect()
}

/// `d_{i,j} = [x^i y^j, -]` on the generators:
/// `x ↦ (q^j - 1) x^{i+1} y^j`, `y ↦ (1 - q^i) x^i y^{j+1}`.
pub fn inner_qci_values(a: &Qci, i: usize, j: usize) -> Vec<u32> {
    let f = a.field();
    let q = a.q();
    let mut v = a.monomial_vec(i + 1, j, f.sub(&f.pow(&q, j as u64), &1));
    v.extend(a.monomial_vec(i, j + 1, f.sub(&1, &f.pow(&q, i as u64))));
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::make_qci;

    #[test]
    fn constraint_rank_and_nullity_p3() {
        let a = make_qci(3, 2, None).unwrap();
        let m = qci_constraint_matrix(&a);
        assert_eq!(m.rows(), 7);
        assert_eq!(m.rank(), 7);
        let ns = m.nullspace();
        assert_eq!((ns.ambient_dim(), ns.dim()), (18, 11));
    }

    #[test]
    fn x_for_p3() {
        let ids = basis_x_ids(3, 2);
        let names: Vec<String> = ids.iter().map(|i| i.to_string()).collect();
        let mut expect = vec![
            "f_{1,0}", "f_{1,2}", "f_{0,2}", "f_{2,2}", "g_{0,1}", "g_{2,1}", "g_{2,0}", "g_{2,2}",
        ];
        let mut got: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        expect.sort();
        got.sort();
        assert_eq!(got, expect);
    }

    #[test]
    fn x_size_formula() {
        for (p, e) in [(5, 2), (5, 4), (7, 2), (7, 3), (7, 6), (13, 4)] {
            let m = (p - 1) / e;
            assert_eq!(basis_x_ids(p, e).len(), 2 * (p + m * m));
        }
    }

    #[test]
    fn euler_derivation() {
        let a = make_qci(5, 2, None).unwrap();
        let d = monomial_derivation(MonomialDerivationId::f(1, 0), &a).unwrap();
        for c in 0..5 {
            for dd in 0..5 {
                let v = d.apply(&a.monomial_vec(c, dd, 1));
                assert_eq!(v, a.monomial_vec(c, dd, c as u32));
            }
        }
        let g = monomial_derivation(MonomialDerivationId::g(0, 1), &a).unwrap();
        for dd in 0..5 {
            assert_eq!(g.apply(&a.monomial_vec(0, dd, 1)), a.monomial_vec(0, dd, dd as u32));
        }
    }

    #[test]
    fn nonexistent_monomial_derivation() {
        let a = make_qci(5, 2, None).unwrap();
        assert!(matches!(
            monomial_derivation(MonomialDerivationId::f(2, 0), &a),
            Err(Error::NoSuchDerivation(_))
        ));
    }
}
