//! Group algebra of `C_p ⋊ C_{p-1}` over `F_p`.

use super::algebra::{AlgebraData, FDAlgebra};
use crate::error::{Error, Result};
use crate::linalg::field::is_prime;
use crate::linalg::{EchelonBasis, Field, PrimeField};

/// `k<a, c | a^p = c^{p-1} = 1, c a c^-1 = a^g>` with `g` the least
/// primitive root, on the basis `a^i c^j` (index `i * (p-1) + j`).
pub fn make_group_algebra_cp_cpm1(p: u64) -> Result<FDAlgebra<PrimeField>> {
    if p < 3 || !is_prime(p) {
        return Err(Error::InvalidParameters(format!("p = {p} must be an odd prime")));
    }
    let f = PrimeField::new(p).expect("checked prime");
    let p = p as usize;
    let m = p - 1;
    let n = p * m;
    let g = f.least_primitive_root() as usize;
    let mut gpow = vec![1usize; m];
    for j in 1..m {
        gpow[j] = gpow[j - 1] * g % p;
    }
    let idx = |i: usize, j: usize| i * m + j;
    let mut products = Vec::with_capacity(n * n);
    for l in 0..n {
        let (i, j) = (l / m, l % m);
        for r in 0..n {
            let (k, t) = (r / m, r % m);
            // c^j a^k = a^{g^j k} c^j
            products.push(vec![(idx((i + gpow[j] * k) % p, (j + t) % m), 1)]);
        }
    }
    let labels = (0..n)
        .map(|l| {
            let (i, j) = (l / m, l % m);
            let part = |v: &str, e: usize| match e {
                0 => String::new(),
                1 => v.to_string(),
                _ => format!("{v}^{e}"),
            };
            if i == 0 && j == 0 {
                "1".to_string()
            } else {
                format!("{}{}", part("a", i), part("c", j))
            }
        })
        .collect();
    let mut unit = vec![0; n];
    unit[0] = 1;
    let form = unit.clone();
    // J = kG (a - 1), spanned by b (a - 1) for group elements b
    let mut ech = EchelonBasis::new(f, n);
    for l in 0..n {
        let (i, j) = (l / m, l % m);
        let mut v = vec![0u32; n];
        // a^i c^j a = a^{i + g^j} c^j
        v[idx((i + gpow[j]) % p, j)] = 1;
        v[l] = f.sub(&v[l], &1);
        ech.insert(v);
    }
    let radical = ech.into_subspace();
    let generators = vec![idx(1, 0), idx(0, 1)];
    let words = (0..n)
        .map(|l| {
            let (i, j) = (l / m, l % m);
            let mut w = vec![0; i];
            w.extend(std::iter::repeat_n(1, j));
            w
        })
        .collect();
    FDAlgebra::new(AlgebraData {
        field: f,
        labels,
        products,
        unit,
        form: Some(form),
        radical,
        simple_count: m,
        generators: Some((generators, words)),
    })
}
