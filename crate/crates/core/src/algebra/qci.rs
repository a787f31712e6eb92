//! The quantum complete intersection `k<x,y | x^p = y^p = 0, yx = qxy>`.

use std::sync::Arc;

use super::algebra::{AlgebraData, FDAlgebra};
use crate::error::{Error, Result};
use crate::linalg::field::is_prime;
use crate::linalg::{Field, PrimeField, Subspace};

/// Exponent pair of the monomial `x^i y^j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub i: usize,
    pub j: usize,
}

impl Monomial {
    pub fn new(i: usize, j: usize) -> Self {
        Self { i, j }
    }

    pub fn index(self, p: usize) -> usize {
        self.i * p + self.j
    }

    pub fn from_index(idx: usize, p: usize) -> Self {
        Self {
            i: idx / p,
            j: idx % p,
        }
    }

    pub fn label(self) -> String {
        let part = |v: &str, e: usize| match e {
            0 => String::new(),
            1 => v.to_string(),
            _ => format!("{v}^{e}"),
        };
        match (self.i, self.j) {
            (0, 0) => "1".into(),
            (i, j) => format!("{}{}", part("x", i), part("y", j)),
        }
    }
}

/// Validated parameters `(p, e, q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QciParams {
    pub p: u32,
    pub e: u32,
    pub q: u32,
}

impl QciParams {
    pub fn new(p: u64, e: u64, q: Option<u64>) -> Result<Self> {
        if p < 3 || !is_prime(p) {
            return Err(Error::InvalidParameters(format!("p = {p} must be an odd prime")));
        }
        if e < 2 {
            return Err(Error::InvalidParameters(format!("e = {e} must be at least 2")));
        }
        if !(p - 1).is_multiple_of(e) {
            return Err(Error::InvalidParameters(format!(
                "e must divide p-1 (e = {e}, p = {p})"
            )));
        }
        let f = PrimeField::new(p).expect("checked prime");
        let q = match q {
            Some(q) => {
                let q = f.reduce(q as i64);
                if f.order(q) != Some(e) {
                    return Err(Error::InvalidParameters(format!(
                        "q = {q} does not have multiplicative order {e} mod {p}"
                    )));
                }
                q
            }
            None => f.pow(&f.least_primitive_root(), (p - 1) / e),
        };
        Ok(Self {
            p: p as u32,
            e: e as u32,
            q,
        })
    }

    pub fn field(&self) -> PrimeField {
        PrimeField::new(self.p as u64).expect("validated")
    }

    pub fn p(&self) -> usize {
        self.p as usize
    }

    pub fn e(&self) -> usize {
        self.e as usize
    }

    /// `(p - 1) / e`
    pub fn m(&self) -> usize {
        (self.p as usize - 1) / self.e as usize
    }

    /// All elements of order `e`, ascending.
    pub fn all_q(p: u64, e: u64) -> Result<Vec<u32>> {
        let base = Self::new(p, e, None)?;
        let f = base.field();
        Ok((1..p as u32).filter(|&q| f.order(q) == Some(e)).collect())
    }
}

/// A quantum complete intersection together with its parameters.
#[derive(Clone, Debug)]
pub struct Qci {
    params: QciParams,
    algebra: Arc<FDAlgebra<PrimeField>>,
}

impl Qci {
    pub fn new(p: u64, e: u64, q: Option<u64>) -> Result<Self> {
        Self::from_params(QciParams::new(p, e, q)?)
    }

    pub fn from_params(params: QciParams) -> Result<Self> {
        let f = params.field();
        let p = params.p();
        let n = p * p;
        let q = params.q;
        let mut products = Vec::with_capacity(n * n);
        for l in 0..n {
            let Monomial { i: a, j: b } = Monomial::from_index(l, p);
            for r in 0..n {
                let Monomial { i: c, j: d } = Monomial::from_index(r, p);
                if a + c >= p || b + d >= p {
                    products.push(Vec::new());
                } else {
                    let coef = f.pow(&q, (b * c) as u64);
                    products.push(vec![(Monomial::new(a + c, b + d).index(p), coef)]);
                }
            }
        }
        let labels = (0..n).map(|k| Monomial::from_index(k, p).label()).collect();
        let mut unit = vec![0; n];
        unit[0] = 1;
        let mut form = vec![0; n];
        form[n - 1] = 1;
        let radical = Subspace::coordinate(f, n, 1..n);
        // generators x (index p) and y (index 1); x^i y^j = x..x y..y
        let generators = vec![p, 1];
        let words = (0..n)
            .map(|k| {
                let m = Monomial::from_index(k, p);
                let mut w = vec![0; m.i];
                w.extend(std::iter::repeat_n(1, m.j));
                w
            })
            .collect();
        let algebra = FDAlgebra::new(AlgebraData {
            field: f,
            labels,
            products,
            unit,
            form: Some(form),
            radical,
            simple_count: 1,
            generators: Some((generators, words)),
        })?;
        Ok(Self {
            params,
            algebra: Arc::new(algebra),
        })
    }

    pub fn params(&self) -> QciParams {
        self.params
    }
    pub fn p(&self) -> usize {
        self.params.p()
    }
    pub fn e(&self) -> usize {
        self.params.e()
    }
    pub fn q(&self) -> u32 {
        self.params.q
    }
    pub fn field(&self) -> PrimeField {
        self.params.field()
    }
    pub fn algebra(&self) -> &FDAlgebra<PrimeField> {
        &self.algebra
    }
    pub fn algebra_arc(&self) -> Arc<FDAlgebra<PrimeField>> {
        Arc::clone(&self.algebra)
    }

    pub fn index(&self, i: usize, j: usize) -> usize {
        Monomial::new(i, j).index(self.p())
    }

    /// Coordinate vector of `c * x^i y^j`; zero if an exponent is out of range.
    pub fn monomial_vec(&self, i: usize, j: usize, c: u32) -> Vec<u32> {
        let p = self.p();
        let mut v = vec![0; p * p];
        if i < p && j < p {
            v[self.index(i, j)] = c;
        }
        v
    }

    /// Span of the monomials satisfying `pred`.
    pub fn monomial_span(&self, pred: impl Fn(usize, usize) -> bool) -> Subspace<PrimeField> {
        let p = self.p();
        Subspace::coordinate(
            self.field(),
            p * p,
            (0..p * p).filter(|&k| {
                let m = Monomial::from_index(k, p);
                pred(m.i, m.j)
            }),
        )
    }

    /// Monomial basis of the center: `e | i` and `e | j`, or `i = p-1`, or `j = p-1`.
    pub fn expected_center(&self) -> Subspace<PrimeField> {
        let (p, e) = (self.p(), self.e());
        self.monomial_span(|i, j| (i % e == 0 && j % e == 0) || i == p - 1 || j == p - 1)
    }

    /// Monomial basis of `[A,A]`: `1 <= i,j <= p-1` with `e ∤ i` or `e ∤ j`.
    pub fn expected_commutators(&self) -> Subspace<PrimeField> {
        let e = self.e();
        self.monomial_span(|i, j| i >= 1 && j >= 1 && (i % e != 0 || j % e != 0))
    }

    /// `J(A)^r` is spanned by the monomials of total degree at least `r`.
    pub fn expected_radical_power(&self, r: usize) -> Subspace<PrimeField> {
        self.monomial_span(|i, j| i + j >= r)
    }
}

/// `make_qci`: validated construction with default `q = g^{(p-1)/e}`.
pub fn make_qci(p: u64, e: u64, q: Option<u64>) -> Result<Qci> {
    Qci::new(p, e, q)
}

/// All `(p, e)` with `p` an odd prime `<= p_max`, `e >= 2`, `e | p-1`, in order.
pub fn parameter_grid(p_max: u64) -> Vec<(u64, u64)> {
    (3..=p_max)
        .filter(|&p| is_prime(p))
        .flat_map(|p| (2..p).filter(move |e| (p - 1) % e == 0).map(move |e| (p, e)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn yx_is_q_xy() {
        let a = make_qci(3, 2, None).unwrap();
        assert_eq!(a.q(), 2);
        let alg = a.algebra();
        let yx = alg.mul_vec(&a.monomial_vec(0, 1, 1), &a.monomial_vec(1, 0, 1));
        assert_eq!(yx, a.monomial_vec(1, 1, 2));
        let x3 = alg.mul_vec(&a.monomial_vec(2, 0, 1), &a.monomial_vec(1, 0, 1));
        assert!(x3.iter().all(|&c| c == 0));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(make_qci(7, 4, None), Err(Error::InvalidParameters(_))));
        assert!(matches!(make_qci(9, 2, None), Err(Error::InvalidParameters(_))));
        assert!(matches!(make_qci(7, 1, None), Err(Error::InvalidParameters(_))));
        // 2 has order 3 mod 7
        assert!(matches!(make_qci(7, 6, Some(2)), Err(Error::InvalidParameters(_))));
        assert!(make_qci(7, 3, Some(2)).is_ok());
    }

    #[test]
    fn grid_up_to_seven() {
        assert_eq!(
            parameter_grid(7),
            vec![(3, 2), (5, 2), (5, 4), (7, 2), (7, 3), (7, 6)]
        );
        assert_eq!(parameter_grid(13).len(), 14);
    }

    #[test]
    fn labels() {
        assert_eq!(Monomial::new(0, 0).label(), "1");
        assert_eq!(Monomial::new(2, 1).label(), "x^2y");
        assert_eq!(Monomial::new(0, 3).label(), "y^3");
    }
}
