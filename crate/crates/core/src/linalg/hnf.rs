//! Integer matrices and the row-style Hermite normal form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::field::{is_p_adic_unit, Rationals};
use super::matrix::Matrix;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    cols: usize,
    rows: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn new(cols: usize, rows: Vec<Vec<BigInt>>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                expected: cols,
                found: bad.len(),
            });
        }
        Ok(Self { cols, rows })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::new(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    /// Fails with `DomainMismatch` if any entry is not an integer.
    pub fn try_from_rational(m: &Matrix<Rationals>) -> Result<Self> {
        let mut rows = Vec::with_capacity(m.rows());
        for r in 0..m.rows() {
            let mut row = Vec::with_capacity(m.cols());
            for x in m.row(r) {
                if !x.is_integer() {
                    return Err(Error::DomainMismatch(format!(
                        "non-integer entry {x} in integer matrix"
                    )));
                }
                row.push(x.numer().clone());
            }
            rows.push(row);
        }
        Self::new(m.cols(), rows)
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    /// `(column, value)` of the first nonzero entry of each row.
    pub fn pivots(&self) -> Vec<(usize, BigInt)> {
        self.rows
            .iter()
            .filter_map(|r| {
                r.iter()
                    .position(|x| !x.is_zero())
                    .map(|c| (c, r[c].clone()))
            })
            .collect()
    }
}

/// Row-style Hermite normal form of the lattice spanned by the rows.
///
/// Output rows are nonzero, pivots strictly increase to the right, pivots are
/// positive, and entries above a pivot lie in `[0, pivot)`. Two matrices span
/// the same lattice iff their forms are equal.
pub fn hermite_normal_form(m: &IntMatrix) -> IntMatrix {
    let mut a: Vec<Vec<BigInt>> = m.rows.clone();
    let n_rows = a.len();
    let mut top = 0usize;
    for col in 0..m.cols {
        if top == n_rows {
            break;
        }
        loop {
            // smallest nonzero |entry| among remaining rows
            let best = (top..n_rows)
                .filter(|&r| !a[r][col].is_zero())
                .min_by(|&r, &s| a[r][col].abs().cmp(&a[s][col].abs()).then(r.cmp(&s)));
            let Some(best) = best else { break };
            a.swap(top, best);
            let mut done = true;
            for r in top + 1..n_rows {
                if a[r][col].is_zero() {
                    continue;
                }
                let q = a[r][col].div_floor(&a[top][col]);
                let pivot_row = a[top].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot_row) {
                    *x -= &q * y;
                }
                if !a[r][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if a[top][col].is_zero() {
            continue;
        }
        if a[top][col].is_negative() {
            for x in a[top].iter_mut() {
                *x = -x.clone();
            }
        }
        let pivot_row = a[top].clone();
        for r in 0..top {
            let q = a[r][col].div_floor(&pivot_row[col]);
            if q.is_zero() {
                continue;
            }
            for (x, y) in a[r].iter_mut().zip(&pivot_row) {
                *x -= &q * y;
            }
        }
        top += 1;
    }
    a.truncate(top);
    IntMatrix {
        cols: m.cols,
        rows: a,
    }
}

/// HNF of a rational matrix; every entry must be an integer.
pub fn hermite_normal_form_rational(m: &Matrix<Rationals>) -> Result<IntMatrix> {
    Ok(hermite_normal_form(&IntMatrix::try_from_rational(m)?))
}

/// Checks that the lattice in Hermite form is pure over the localisation
/// `Z_(p)` with pivots exactly at `expected_pivots`: every pivot is a
/// `p`-adic unit.
pub fn is_p_pure_at(hnf: &IntMatrix, expected_pivots: &[usize], p: u64) -> bool {
    let piv = hnf.pivots();
    piv.len() == expected_pivots.len()
        && piv
            .iter()
            .zip(expected_pivots)
            .all(|((c, v), e)| c == e && is_p_adic_unit(v, p))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn already_in_form() {
        let m = IntMatrix::from_i64(&[&[2, 0], &[0, 3]]).unwrap();
        assert_eq!(hermite_normal_form(&m), m);
    }

    #[test]
    fn determinant_two_lattice() {
        let m = IntMatrix::from_i64(&[&[1, 2], &[3, 4]]).unwrap();
        let expected = IntMatrix::from_i64(&[&[1, 0], &[0, 2]]).unwrap();
        assert_eq!(hermite_normal_form(&m), expected);
    }

    #[test]
    fn drops_dependent_rows() {
        let m = IntMatrix::from_i64(&[&[2, 4, 6], &[1, 2, 3], &[0, 0, 0]]).unwrap();
        let h = hermite_normal_form(&m);
        assert_eq!(h, IntMatrix::from_i64(&[&[1, 2, 3]]).unwrap());
    }

    #[test]
    fn rejects_fractions() {
        use num_rational::BigRational;
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let m = Matrix::from_rows(Rationals, 1, vec![vec![half]]).unwrap();
        assert!(matches!(
            hermite_normal_form_rational(&m),
            Err(Error::DomainMismatch(_))
        ));
    }

    #[test]
    fn p_purity() {
        let h = IntMatrix::from_i64(&[&[2, 0, 1], &[0, 0, 3]]).unwrap();
        assert!(is_p_pure_at(&h, &[0, 2], 5));
        assert!(!is_p_pure_at(&h, &[0, 2], 3));
        assert!(!is_p_pure_at(&h, &[0, 1], 5));
    }
}
