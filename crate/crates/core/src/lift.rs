//! Chebyshev polynomials and an integral form of the quantum complete
//! intersection with `q = -1`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde_json::json;

use crate::algebra::{make_qci, sample_rng, AlgebraData, FDAlgebra, SparseVec};
use crate::error::{Error, Result};
use crate::linalg::field::{is_p_adic_unit, is_prime};
use crate::linalg::hnf::is_p_pure_at;
use crate::linalg::{hermite_normal_form, Field, IntMatrix, PrimeField, Rationals, Subspace};
use crate::report::Report;

/// Largest prime accepted by the lifted-algebra suite.
pub const LIFT_P_LIMIT: u64 = 13;

/// Dense integer polynomial, coefficients from the constant term up.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn constant(c: i64) -> Self {
        Self::from_i64(&[c])
    }

    /// The polynomial `u`.
    pub fn u() -> Self {
        Self::from_i64(&[0, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// `u * self`
    pub fn shift(&self) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut c = vec![BigInt::zero()];
        c.extend(self.coeffs.iter().cloned());
        Self::new(c)
    }

    pub fn eval_f64(&self, u: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * u + c.to_f64().expect("finite coefficient"))
    }

    /// Only even (resp. odd) powers occur when the degree is even (resp. odd).
    pub fn has_parity_of_degree(&self) -> bool {
        let Some(d) = self.degree() else { return true };
        self.coeffs
            .iter()
            .enumerate()
            .all(|(k, c)| c.is_zero() || (k % 2 == d % 2))
    }

    /// Coefficients reduced into `0..p`.
    pub fn reduce_mod(&self, p: u64) -> Vec<u64> {
        let m = BigInt::from(p);
        self.coeffs
            .iter()
            .map(|c| c.mod_floor(&m).to_u64().expect("residue fits"))
            .collect()
    }

    /// `2 * self(u/2)`, when it has integer coefficients.
    pub fn rescale_half(&self) -> Option<Self> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (k, c) in self.coeffs.iter().enumerate() {
            let num = c * BigInt::from(2);
            let den = BigInt::one() << k;
            let (q, r) = num.div_rem(&den);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(Self::new(out))
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let mono = match k {
                0 => String::new(),
                1 => "u".to_string(),
                _ => format!("u^{k}"),
            };
            if k == 0 || !abs.is_one() {
                write!(f, "{abs}")?;
            }
            f.write_str(&mono)?;
        }
        Ok(())
    }
}

/// `T_n` with `T_n(cos θ) = cos nθ`, from `T_{n+1} = 2u T_n - T_{n-1}`.
pub fn chebyshev_t(n: usize) -> IntPolynomial {
    let mut prev = IntPolynomial::constant(1);
    if n == 0 {
        return prev;
    }
    let mut cur = IntPolynomial::u();
    let two = BigInt::from(2);
    for _ in 1..n {
        let next = cur.shift().scale(&two).sub(&prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// `f_n` from `f_{n+1} = u f_n - f_{n-1}`, `f_0 = 2`, `f_1 = u`.
pub fn normalized_f(n: usize) -> IntPolynomial {
    let mut prev = IntPolynomial::constant(2);
    if n == 0 {
        return prev;
    }
    let mut cur = IntPolynomial::u();
    for _ in 1..n {
        let next = cur.shift().sub(&prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// `f_p ≡ u^p (mod p)`
pub fn reduces_to_monomial(f: &IntPolynomial, p: u64) -> bool {
    let Some(d) = f.degree() else { return false };
    f.reduce_mod(p)
        .iter()
        .enumerate()
        .all(|(k, &c)| if k == d { c == 1 } else { c == 0 })
}

/// `max |T_n(cos θ) - cos nθ|` over `samples` equally spaced angles.
pub fn trig_identity_error(n: usize, samples: usize) -> f64 {
    let t = chebyshev_t(n);
    (0..samples)
        .map(|s| {
            let theta = std::f64::consts::PI * (s as f64 + 0.5) / samples as f64;
            (t.eval_f64(theta.cos()) - (n as f64 * theta).cos()).abs()
        })
        .fold(0.0, f64::max)
}

fn check_lift_prime(p: u64) -> Result<()> {
    if p < 3 || !is_prime(p) {
        return Err(Error::InvalidParameters(format!("p = {p} must be an odd prime")));
    }
    Ok(())
}

/// The algebra on `γ^i δ^j` (`0 <= i,j <= p-1`) with `δγ = -γδ` and
/// `f_p(γ) = f_p(δ) = 0`, over the rationals with integral structure
/// constants.
#[derive(Clone, Debug)]
pub struct LiftedAlgebra {
    p: usize,
    algebra: FDAlgebra<Rationals>,
}

fn rat(c: &BigInt) -> BigRational {
    BigRational::from_integer(c.clone())
}

/// `u^k mod f`, as integer coefficient vectors, for `k < 2 deg f - 1`.
fn power_residues(f: &IntPolynomial) -> Vec<Vec<BigInt>> {
    let d = f.degree().expect("nonzero");
    let mut out = Vec::with_capacity(2 * d - 1);
    let mut cur = vec![BigInt::zero(); d];
    cur[0] = BigInt::one();
    for _ in 0..2 * d - 1 {
        out.push(cur.clone());
        // multiply by u and substitute u^d = u^d - f(u)
        let top = cur[d - 1].clone();
        let mut next = vec![BigInt::zero(); d];
        next[1..d].clone_from_slice(&cur[..d - 1]);
        if !top.is_zero() {
            for (k, n) in next.iter_mut().enumerate() {
                *n -= &top * f.coeff(k);
            }
        }
        cur = next;
    }
    out
}

impl LiftedAlgebra {
    pub fn p(&self) -> usize {
        self.p
    }

    pub fn algebra(&self) -> &FDAlgebra<Rationals> {
        &self.algebra
    }

    pub fn index(&self, i: usize, j: usize) -> usize {
        i * self.p + j
    }

    /// Integer coordinates of a rational vector of this algebra.
    pub fn integral(&self, v: &[BigRational]) -> Option<Vec<BigInt>> {
        v.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
    }

    /// Structure constants reduced mod `p`, as a verified local algebra
    /// with the coefficient of `γ^{p-1}δ^{p-1}` as form.
    pub fn reduction(&self) -> Result<FDAlgebra<PrimeField>> {
        let p = self.p;
        let n = p * p;
        let f = PrimeField::new(p as u64).expect("prime");
        let mut form = vec![0; n];
        form[n - 1] = 1;
        let mut unit = vec![0; n];
        unit[0] = 1;
        FDAlgebra::new(AlgebraData {
            field: f,
            labels: self.algebra.labels().to_vec(),
            products: reduce_products(&self.algebra, &f)?,
            unit,
            form: Some(form),
            radical: Subspace::coordinate(f, n, 1..n),
            simple_count: 1,
            generators: Some(generator_words(p)),
        })
    }
}

fn generator_words(p: usize) -> (Vec<usize>, Vec<Vec<usize>>) {
    let words = (0..p * p)
        .map(|k| {
            let (i, j) = (k / p, k % p);
            std::iter::repeat_n(0, i).chain(std::iter::repeat_n(1, j)).collect()
        })
        .collect();
    (vec![p, 1], words)
}

fn reduce_products(alg: &FDAlgebra<Rationals>, f: &PrimeField) -> Result<Vec<SparseVec<u32>>> {
    let n = alg.dim();
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut sv = Vec::new();
            for (k, c) in alg.basis_product(i, j) {
                let r = f
                    .reduce_rational(c)
                    .ok_or_else(|| Error::DomainMismatch(format!("structure constant {c} is not p-integral")))?;
                if r != 0 {
                    sv.push((*k, r));
                }
            }
            out.push(sv);
        }
    }
    Ok(out)
}

pub fn make_lifted_algebra(p: u64) -> Result<LiftedAlgebra> {
    check_lift_prime(p)?;
    let p = p as usize;
    let n = p * p;
    let res = power_residues(&normalized_f(p));
    let mut products = Vec::with_capacity(n * n);
    for x in 0..n {
        let (a, b) = (x / p, x % p);
        for y in 0..n {
            let (c, d) = (y / p, y % p);
            // γ^a δ^b γ^c δ^d = (-1)^{bc} γ^{a+c} δ^{b+d}
            let sign: i64 = if (b * c) % 2 == 1 { -1 } else { 1 };
            let mut sv: SparseVec<BigRational> = Vec::new();
            for (i, ci) in res[a + c].iter().enumerate() {
                if ci.is_zero() {
                    continue;
                }
                for (j, cj) in res[b + d].iter().enumerate() {
                    if cj.is_zero() {
                        continue;
                    }
                    sv.push((i * p + j, rat(&(ci * cj * sign))));
                }
            }
            products.push(sv);
        }
    }
    let labels = (0..n)
        .map(|k| {
            let (i, j) = (k / p, k % p);
            match (i, j) {
                (0, 0) => "1".to_string(),
                (i, 0) => format!("γ^{i}"),
                (0, j) => format!("δ^{j}"),
                (i, j) => format!("γ^{i}δ^{j}"),
            }
        })
        .collect();
    let mut unit = vec![BigRational::zero(); n];
    unit[0] = BigRational::one();
    let algebra = FDAlgebra::new_unverified(AlgebraData {
        field: Rationals,
        labels,
        products,
        unit,
        form: None,
        radical: Subspace::zero(Rationals, n),
        simple_count: 1,
        generators: Some(generator_words(p)),
    })?;
    Ok(LiftedAlgebra { p, algebra })
}

/// `γ^i δ^j` with `1 <= i,j <= p-1` and `i` or `j` odd, by index.
pub fn expected_commutator_monomials(p: usize) -> Vec<usize> {
    (1..p)
        .flat_map(|i| (1..p).map(move |j| (i, j)))
        .filter(|(i, j)| i % 2 == 1 || j % 2 == 1)
        .map(|(i, j)| i * p + j)
        .collect()
}

/// Rational span and integral lattice of all basis commutators.
#[derive(Clone, Debug)]
pub struct CommutatorLattice {
    pub span: Subspace<Rationals>,
    pub hnf: IntMatrix,
    pub expected: Vec<usize>,
    /// the rational span is the span of the expected monomials
    pub span_matches: bool,
    /// HNF pivots sit exactly on the expected monomials and are `p`-adic units
    pub pure: bool,
}

pub fn lifted_commutator_space(l: &LiftedAlgebra) -> Result<CommutatorLattice> {
    let alg = l.algebra();
    let n = alg.dim();
    let p = l.p();
    let mut rows: BTreeSet<Vec<BigInt>> = BTreeSet::new();
    for i in 0..n {
        for j in i + 1..n {
            let c = alg.commutator_vec(&alg.unit_vector(i), &alg.unit_vector(j));
            let v = l
                .integral(&c)
                .ok_or_else(|| Error::DomainMismatch("non-integral commutator".into()))?;
            if v.iter().any(|x| !x.is_zero()) {
                rows.insert(v);
            }
        }
    }
    let span = Subspace::span(
        Rationals,
        n,
        rows.iter().map(|r| r.iter().map(rat).collect::<Vec<_>>()),
    )?;
    let expected = expected_commutator_monomials(p);
    let span_matches = span == Subspace::coordinate(Rationals, n, expected.iter().copied());
    let hnf = hermite_normal_form(&IntMatrix::new(n, rows.into_iter().collect())?);
    let supported = hnf
        .rows()
        .iter()
        .all(|r| r.iter().enumerate().all(|(k, c)| c.is_zero() || expected.contains(&k)));
    let pure = supported && is_p_pure_at(&hnf, &expected, p as u64);
    Ok(CommutatorLattice {
        span,
        hnf,
        expected,
        span_matches,
        pure,
    })
}

/// The ideal spanned by `γ^i δ^j`, `i, j >= 1`.
pub fn mixed_ideal(l: &LiftedAlgebra) -> Subspace<Rationals> {
    let p = l.p();
    Subspace::coordinate(
        Rationals,
        p * p,
        (1..p).flat_map(|i| (1..p).map(move |j| i * p + j)),
    )
}

/// `Â / γδÂ`, basis `{1, ν^j, μ^i}` in the order of the original indices.
pub fn commutative_quotient(l: &LiftedAlgebra) -> Result<FDAlgebra<Rationals>> {
    let ideal = mixed_ideal(l);
    let alg = l.algebra();
    for u in ideal.basis() {
        for i in 0..alg.dim() {
            if !ideal.contains(&alg.mul_basis_vec(i, u))? || !ideal.contains(&alg.mul_vec_basis(u, i))? {
                return Err(Error::NotABimodule("γδÂ is not a two-sided ideal".into()));
            }
        }
    }
    // over the rationals the quotient is semisimple, so only the products matter
    alg.quotient_unverified(&ideal)
}

/// Positions of `μ = γ̄` and `ν = δ̄` in the quotient basis.
fn quotient_generators(p: usize) -> (usize, usize) {
    // kept indices: 0, 1..p (δ^j), then p, 2p, ... (γ^i)
    (p, 1)
}

/// Reduction of the quotient mod `p`, as a verified local algebra.
pub fn quotient_mod_p(l: &LiftedAlgebra, d: &FDAlgebra<Rationals>) -> Result<FDAlgebra<PrimeField>> {
    let p = l.p();
    let f = PrimeField::new(p as u64).expect("prime");
    let m = d.dim();
    let mut unit = vec![0; m];
    unit[0] = 1;
    FDAlgebra::new(AlgebraData {
        field: f,
        labels: d
            .labels()
            .iter()
            .map(|s| s.replace('γ', "μ").replace('δ', "ν"))
            .collect(),
        products: reduce_products(d, &f)?,
        unit,
        form: None,
        radical: Subspace::coordinate(f, m, 1..m),
        simple_count: 1,
        generators: None,
    })
}

/// `g(e)` for an element `e` of `alg` and an integer polynomial `g`.
fn eval_poly<F: Field>(alg: &FDAlgebra<F>, g: &IntPolynomial, e: &[F::Elem], to_elem: impl Fn(&BigInt) -> F::Elem) -> Vec<F::Elem> {
    let f = alg.field();
    let mut acc = vec![f.zero(); alg.dim()];
    let mut pw = alg.unit().to_vec();
    for c in g.coeffs() {
        let c = to_elem(c);
        for (a, x) in acc.iter_mut().zip(&pw) {
            f.add_mul_assign(a, &c, x);
        }
        pw = alg.mul_vec(&pw, e);
    }
    acc
}

/// Largest rank of `(a, b) ↦ s(ab)` over `samples` random functionals `s`
/// vanishing on commutators.
pub fn sampled_max_gram_rank(alg: &FDAlgebra<PrimeField>, samples: usize, seed: u64) -> usize {
    let f = alg.field();
    let p = f.modulus();
    let n = alg.dim();
    let allowed = alg.commutator_space().annihilator();
    let mut rng = sample_rng(seed);
    let mut best = 0;
    for _ in 0..samples {
        let c: Vec<u32> = (0..allowed.dim()).map(|_| rng.gen_range(0..p)).collect();
        let s = allowed.combine(&c).expect("dimensions agree");
        best = best.max(alg.gram_matrix(&s).rank());
        if best == n {
            break;
        }
    }
    best
}

/// In a local algebra, two independent elements of `soc` give Gram rows
/// `s(z b)` supported on the unit alone, so no form is nondegenerate.
pub fn socle_obstructs_symmetry(alg: &FDAlgebra<PrimeField>) -> bool {
    let soc = alg.socle_by_annihilator();
    let rad = alg.radical();
    alg.simple_count() == 1
        && soc.dim() >= 2
        && soc
            .basis()
            .iter()
            .all(|z| rad.basis().iter().all(|b| alg.mul_vec(z, b).iter().all(|&c| c == 0)))
}

/// The mod-`p` quotient is local with a 2-dimensional socle, hence not
/// symmetric; the QCI itself serves as a control.
pub fn check_d_mod_p_not_symmetric(r: &mut Report, l: &LiftedAlgebra, d: &FDAlgebra<Rationals>) -> Result<()> {
    let p = l.p();
    let dp = quotient_mod_p(l, d)?;
    let f = *dp.field();
    let (mu, nu) = quotient_generators(p);
    let (mu_v, nu_v) = (dp.unit_vector(mu), dp.unit_vector(nu));
    let zero = vec![0u32; dp.dim()];
    let relations = dp.mul_vec(&mu_v, &nu_v) == zero
        && dp.mul_vec(&nu_v, &mu_v) == zero
        && dp.power_vec(&mu_v, p as u64) == zero
        && dp.power_vec(&nu_v, p as u64) == zero;
    r.check_true("lift.d_relations", "in k⊗D: μν = νμ = 0 and μ^p = ν^p = 0", relations);
    let soc = dp.socle_by_annihilator();
    let expected_soc = Subspace::span(
        f,
        dp.dim(),
        [dp.power_vec(&mu_v, p as u64 - 1), dp.power_vec(&nu_v, p as u64 - 1)],
    )?;
    r.check_eq("lift.d_socle_dim", "dim soc(k⊗D) = 2", 2, soc.dim());
    r.check_true(
        "lift.d_socle_basis",
        "soc(k⊗D) is spanned by μ^{p-1}, ν^{p-1}",
        soc == expected_soc,
    );
    let sampled = sampled_max_gram_rank(&dp, 200, 11);
    let verdict = socle_obstructs_symmetry(&dp) && sampled < dp.dim();
    r.check_with(
        "lift.d_not_symmetric",
        "k⊗D is not symmetric",
        json!({"max_gram_rank_below": dp.dim(), "socle_obstruction": true}),
        json!({"sampled_max_gram_rank": sampled, "socle_obstruction": socle_obstructs_symmetry(&dp)}),
        verdict,
    );
    let control = make_qci(p as u64, 2, Some(p as u64 - 1))?;
    let calg = control.algebra();
    let form = calg.form().ok_or(Error::NotSymmetric)?;
    let control_ok = calg.gram_matrix(form).rank() == calg.dim() && !socle_obstructs_symmetry(calg);
    r.check_true(
        "lift.control_symmetric",
        "the QCI with e = 2 has a nondegenerate symmetrizing form",
        control_ok,
    );
    Ok(())
}

/// Coefficients of `f_p` as decimal strings, constant term first.
pub fn coefficient_strings(f: &IntPolynomial) -> Vec<String> {
    f.coeffs().iter().map(|c| c.to_string()).collect()
}

/// Everything about `f_p`, the lifted algebra and its quotient for one `p`.
pub fn verify_lift(p: u64) -> Result<Report> {
    check_lift_prime(p)?;
    if p > LIFT_P_LIMIT {
        return Err(Error::InvalidParameters(format!("p = {p} exceeds the limit {LIFT_P_LIMIT}")));
    }
    let pu = p as usize;
    let mut r = Report::new(p, 2, p - 1);
    let fp = normalized_f(pu);
    r.check_with(
        "lift.f_p",
        "f_p(u) = 2T_p(u/2), monic, reduces to u^p mod p",
        json!(format!("u^{p} mod {p}")),
        json!(fp.to_string()),
        fp.is_monic() && reduces_to_monomial(&fp, p) && chebyshev_t(pu).rescale_half() == Some(fp.clone()),
    );
    r.check_true(
        "lift.trig",
        "|T_p(cos θ) - cos pθ| < 1e-9 on 100 angles",
        trig_identity_error(pu, 100) < 1e-9,
    );
    let l = make_lifted_algebra(p)?;
    let alg = l.algebra();
    let assoc = alg.verify_associativity().is_ok();
    r.check_true("lift.associative", "the lifted algebra is associative", assoc);
    let (g, d) = (alg.unit_vector(pu), alg.unit_vector(1));
    let anti = alg
        .mul_vec(&d, &g)
        .iter()
        .zip(alg.mul_vec(&g, &d))
        .all(|(a, b)| (a + b).is_zero());
    let fp_zero = |e: &[BigRational]| eval_poly(alg, &fp, e, rat).iter().all(|c| c.is_zero());
    r.check_true(
        "lift.relations",
        "γδ + δγ = 0 and f_p(γ) = f_p(δ) = 0",
        anti && fp_zero(&g) && fp_zero(&d),
    );
    let reduced = l.reduction()?;
    let qci = make_qci(p, 2, Some(p - 1))?;
    let same = (0..pu * pu).all(|i| (0..pu * pu).all(|j| reduced.basis_product(i, j) == qci.algebra().basis_product(i, j)));
    r.check_true(
        "lift.reduction",
        "structure constants mod p are those of the QCI with e = 2, q = -1",
        same,
    );
    let lat = lifted_commutator_space(&l)?;
    let m = (pu - 1) / 2;
    r.check_eq(
        "lift.commutator_dim",
        "rank [Â,Â] = (p-1)^2 - ((p-1)/2)^2",
        (pu - 1) * (pu - 1) - m * m,
        lat.span.dim(),
    );
    r.check_true(
        "lift.commutator_basis",
        "γ^iδ^j with 1 <= i,j <= p-1, i or j odd, form a basis of [Â,Â]",
        lat.span_matches,
    );
    r.check_true(
        "lift.commutator_pure",
        "the commutator lattice is a p-pure sublattice on those monomials (HNF pivots are p-adic units)",
        lat.pure,
    );
    let ideal = mixed_ideal(&l);
    let g_d = alg.mul_vec(&g, &d);
    let gd_span = Subspace::span(Rationals, pu * pu, [g_d])?;
    let full = Subspace::full(Rationals, pu * pu);
    let left = alg.product_space(&full, &gd_span);
    let right = alg.product_space(&gd_span, &full);
    r.check_true(
        "lift.ideal",
        "Âγδ = γδÂ is spanned by γ^iδ^j, i,j >= 1, and contains [Â,Â]",
        left == ideal && right == ideal && lat.span.is_subspace_of(&ideal)?,
    );
    let dq = commutative_quotient(&l)?;
    r.check_eq("lift.quotient_rank", "rank Â/γδÂ = 2p - 1", 2 * pu - 1, dq.dim());
    let (mu, nu) = quotient_generators(pu);
    let (mu_v, nu_v) = (dq.unit_vector(mu), dq.unit_vector(nu));
    let quotient_ok = dq.is_commutative()
        && dq.mul_vec(&mu_v, &nu_v).iter().all(|c| c.is_zero())
        && eval_poly(&dq, &fp, &mu_v, rat).iter().all(|c| c.is_zero())
        && eval_poly(&dq, &fp, &nu_v, rat).iter().all(|c| c.is_zero());
    r.check_true(
        "lift.quotient_relations",
        "the quotient is commutative with μν = 0 and f_p(μ) = f_p(ν) = 0",
        quotient_ok,
    );
    check_d_mod_p_not_symmetric(&mut r, &l, &dq)?;
    Ok(r)
}

/// Non-leading coefficients of `f_p` divisible by `p`, all odd primes up to
/// `limit`; returns the primes where this fails.
pub fn monomial_reduction_failures(limit: u64) -> Vec<u64> {
    (3..=limit)
        .filter(|&p| is_prime(p))
        .filter(|&p| !reduces_to_monomial(&normalized_f(p as usize), p))
        .collect()
}

/// Every pivot of an HNF is a `p`-adic unit.
pub fn pivots_are_units(h: &IntMatrix, p: u64) -> bool {
    h.pivots().iter().all(|(_, v)| is_p_adic_unit(v, p))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_chebyshev() {
        assert_eq!(chebyshev_t(0), IntPolynomial::constant(1));
        assert_eq!(chebyshev_t(1), IntPolynomial::u());
        assert_eq!(chebyshev_t(2), IntPolynomial::from_i64(&[-1, 0, 2]));
        assert_eq!(normalized_f(2), IntPolynomial::from_i64(&[-2, 0, 1]));
        assert_eq!(normalized_f(3), IntPolynomial::from_i64(&[0, -3, 0, 1]));
        assert_eq!(normalized_f(3).to_string(), "u^3 - 3u");
        assert_eq!(normalized_f(5).to_string(), "u^5 - 5u^3 + 5u");
    }

    #[test]
    fn residues_p3() {
        // γ^3 = 3γ, γ^4 = 3γ^2
        let r = power_residues(&normalized_f(3));
        assert_eq!(r[3], vec![BigInt::zero(), BigInt::from(3), BigInt::zero()]);
        assert_eq!(r[4], vec![BigInt::zero(), BigInt::zero(), BigInt::from(3)]);
    }

    #[test]
    fn rejects_non_primes() {
        assert!(matches!(make_lifted_algebra(4), Err(Error::InvalidParameters(_))));
        assert!(matches!(verify_lift(2), Err(Error::InvalidParameters(_))));
    }
}
