use super::field::Field;
use super::subspace::Subspace;

/// Incrementally maintained reduced row echelon basis.
///
/// Every stored row has a 1 at its pivot and zeros at all other pivot
/// columns, so reducing an incoming row touches each pivot column once and
/// never creates new nonzeros at pivot positions. The resulting basis is the
/// unique RREF of the span, independent of insertion order.
#[derive(Clone, Debug)]
pub struct EchelonBasis<F: Field> {
    field: F,
    cols: usize,
    rows: Vec<Vec<F::Elem>>,
    /// pivot column of each stored row
    pivots: Vec<usize>,
    /// column -> index into `rows`
    pivot_row: Vec<Option<usize>>,
}

impl<F: Field> EchelonBasis<F> {
    pub fn new(field: F, cols: usize) -> Self {
        Self {
            field,
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
            pivot_row: vec![None; cols],
        }
    }

    pub fn from_subspace(sub: &Subspace<F>) -> Self {
        let mut e = Self::new(sub.field().clone(), sub.ambient_dim());
        for (row, &p) in sub.basis().iter().zip(sub.pivots()) {
            e.pivot_row[p] = Some(e.rows.len());
            e.rows.push(row.clone());
            e.pivots.push(p);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }

    /// Reduces `v` in place against the stored basis.
    pub fn reduce_in_place(&self, v: &mut [F::Elem]) {
        let f = &self.field;
        // Pivot entries of `v` are unaffected by subtracting other pivot rows,
        // so the coefficients can be read off up front.
        let hits: Vec<(usize, F::Elem)> = self
            .pivots
            .iter()
            .enumerate()
            .filter(|(_, &c)| !f.is_zero(&v[c]))
            .map(|(r, &c)| (r, v[c].clone()))
            .collect();
        for (r, coef) in hits {
            let row = &self.rows[r];
            let start = self.pivots[r];
            for (dst, src) in v[start..].iter_mut().zip(&row[start..]) {
                if !f.is_zero(src) {
                    *dst = f.sub(dst, &f.mul(&coef, src));
                }
            }
        }
    }

    pub fn reduce(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let mut w = v.to_vec();
        self.reduce_in_place(&mut w);
        w
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        self.reduce(v).iter().all(|x| self.field.is_zero(x))
    }

    /// Adds `v` to the span. Returns `true` when the rank grew.
    pub fn insert(&mut self, mut v: Vec<F::Elem>) -> bool {
        assert_eq!(v.len(), self.cols, "row length must match ambient dimension");
        if self.is_full() {
            return false;
        }
        self.reduce_in_place(&mut v);
        let f = self.field.clone();
        let Some(lead) = v.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&v[lead]).expect("nonzero leading entry");
        for x in v[lead..].iter_mut() {
            if !f.is_zero(x) {
                *x = f.mul(x, &inv);
            }
        }
        // clear the new pivot column from existing rows
        for row in self.rows.iter_mut() {
            let coef = row[lead].clone();
            if f.is_zero(&coef) {
                continue;
            }
            for (dst, src) in row[lead..].iter_mut().zip(&v[lead..]) {
                if !f.is_zero(src) {
                    *dst = f.sub(dst, &f.mul(&coef, src));
                }
            }
        }
        self.pivot_row[lead] = Some(self.rows.len());
        self.rows.push(v);
        self.pivots.push(lead);
        true
    }

    /// Coefficients of `v` in the stored rows, if `v` is in the span. Row order
    /// is insertion order.
    pub fn coordinates(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&c| v[c].clone()).collect())
    }

    pub fn into_subspace(self) -> Subspace<F> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.pivots[i]);
        let pivots: Vec<usize> = order.iter().map(|&i| self.pivots[i]).collect();
        let mut rows: Vec<Option<Vec<F::Elem>>> = self.rows.into_iter().map(Some).collect();
        let basis = order
            .iter()
            .map(|&i| rows[i].take().expect("each row taken once"))
            .collect();
        Subspace::from_rref_parts(self.field, self.cols, basis, pivots)
    }
}
