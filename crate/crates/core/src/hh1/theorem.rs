//! Structure checks for `HH^1` of a quantum complete intersection.

use rand::Rng;

use super::structure::{hh1_qci, LieStructure};
use crate::algebra::{sample_rng, Qci};
use crate::derivation::{ad_matrix, inner_derivation, inner_qci_values, MonomialDerivationId as Id, MonomialKind};
use crate::error::Result;
use crate::linalg::{EchelonBasis, Field, PrimeField, Subspace};
use crate::report::Report;

type Lie = LieStructure<PrimeField>;

fn x_vector(lie: &Lie, ids: impl IntoIterator<Item = Id>) -> Result<Subspace<PrimeField>> {
    let vecs: Vec<Vec<u32>> = ids
        .into_iter()
        .map(|id| lie.basis_vector(lie.x_index(id).expect("member of X")))
        .collect();
    lie.span_coords(vecs)
}

/// `{f_{a,p-1} | p-e <= a <= p-1} ∪ {g_{p-1,b} | p-e <= b <= p-1}`
pub fn socle_set(p: usize, e: usize) -> Vec<Id> {
    (p - e..p)
        .map(|a| Id::f(a, p - 1))
        .chain((p - e..p).map(|b| Id::g(p - 1, b)))
        .collect()
}

/// The socle set together with `f_{e+1,p-1}` and `g_{p-1,e+1}` (for `e < p-1`).
pub fn derived_center_set(p: usize, e: usize) -> Vec<Id> {
    let mut s = socle_set(p, e);
    s.push(Id::f(e + 1, p - 1));
    s.push(Id::g(p - 1, e + 1));
    s
}

/// `X' = X \ {f_{1,0}, g_{0,1}}`
pub fn x_prime(p: usize, e: usize) -> Vec<Id> {
    crate::derivation::basis_x_ids(p, e)
        .into_iter()
        .filter(|id| *id != Id::f(1, 0) && *id != Id::g(0, 1))
        .collect()
}

/// `L_m`: classes of `f_{a,b}`, `g_{a,b}` in `X` with `a + b >= m`.
fn filtration_piece(lie: &Lie, p: usize, e: usize, m: usize) -> Result<Subspace<PrimeField>> {
    x_vector(
        lie,
        crate::derivation::basis_x_ids(p, e)
            .into_iter()
            .filter(|id| id.a + id.b >= m),
    )
}

/// Every composite of `p` derivations from `set` vanishes on `A`.
pub fn compositions_vanish(a: &Qci, lie: &Lie, set: &[Id]) -> bool {
    let f = a.field();
    let n = a.algebra().dim();
    let mut current = Subspace::full(f, n);
    for _ in 0..a.p() {
        let mut ech = EchelonBasis::new(f, n);
        for id in set {
            let rep = &lie.reps()[lie.x_index(*id).expect("member of X")];
            for u in current.basis() {
                if ech.is_full() {
                    break;
                }
                ech.insert(rep.apply(u));
            }
        }
        current = ech.into_subspace();
        if current.is_zero() {
            return true;
        }
    }
    current.is_zero()
}

/// Items (i)–(viii) of the structure theorem.
pub fn verify_lie_structure(a: &Qci, lie: &Lie) -> Result<Report> {
    let (p, e) = (a.p(), a.e());
    let m = (p - 1) / e;
    let mut r = Report::new(p as u64, e as u64, a.q() as u64);
    let dim_l = lie.dim();
    r.check_eq(
        "thm1.1.i",
        "dim HH^1(A) = 2(p + ((p-1)/e)^2)",
        2 * (p + m * m),
        dim_l,
    );
    r.check_eq("thm1.1.ii", "Z(L) = 0", 0, lie.lie_center().dim());

    let h = x_vector(lie, [Id::f(1, 0), Id::g(0, 1)])?;
    let derived = lie.derived_algebra();
    let toral = lie.is_diagonal_on_basis(&h) && lie.is_abelian(&h);
    r.check_eq("thm1.1.iii.h_dim", "H = span{[f_{1,0}], [g_{0,1}]} is 2-dimensional", 2, h.dim());
    r.check_true("thm1.1.iii.toral", "ad(H) diagonal on the classes of X, H abelian", toral);
    r.check_true(
        "thm1.1.iii.centralizer",
        "C_L(H) = H, so H is maximal toral",
        lie.centralizer(&h) == h,
    );
    let direct = h.intersection(&derived)?.is_zero() && h.dim() + derived.dim() == dim_l;
    r.check_true("thm1.1.iii.direct_sum", "L = H ⊕ L'", direct);

    let lcs = lie.lower_central_series(&derived);
    r.check_true("thm1.1.iv.nilpotent", "L' is nilpotent", lcs.last().is_some_and(|s| s.is_zero()));
    r.check_true("thm1.1.iv.solvable", "L is solvable", lie.is_solvable(&lie.full_space()));
    let mut filtration_ok = true;
    for k in 1..2 * p {
        let lk = filtration_piece(lie, p, e, k)?;
        let next = filtration_piece(lie, p, e, k + 1)?;
        if !lie.bracket_space(&derived, &lk).is_subspace_of(&next)? {
            filtration_ok = false;
        }
    }
    r.check_true("thm1.1.iv.filtration", "[L', L_m] ⊆ L_{m+1}", filtration_ok);

    let soc = lie.socle_as_z_module()?;
    let z_derived = lie.center_of(&derived);
    r.check_eq("thm1.1.v.soc_dim", "dim soc_{Z(A)}(L) = 2e", 2 * e, soc.dim());
    r.check_true(
        "thm1.1.v.soc_basis",
        "soc_{Z(A)}(L) is spanned by the classes of S",
        soc == x_vector(lie, socle_set(p, e))?,
    );
    r.check_true(
        "thm1.1.v.soc_in_center",
        "soc_{Z(A)}(L) ⊆ Z(L')",
        soc.is_subspace_of(&z_derived)?,
    );

    let jz_l = lie.module_product(&a.algebra().center_radical(), &lie.full_space())?;
    r.check_true("thm1.1.vi.jz_l", "J(Z(A)) L = L'", jz_l == derived);
    r.check_eq("thm1.1.vi.codim", "L' has codimension 2 in L", 2, dim_l - derived.dim());

    r.check_eq("thm1.1.vii.center_dim", "dim Z(L') = 2e + 2", 2 * e + 2, z_derived.dim());
    let expected_center = if e == p - 1 {
        derived.clone()
    } else {
        x_vector(lie, derived_center_set(p, e))?
    };
    r.check_true(
        "thm1.1.vii.center_basis",
        "Z(L') is spanned by the classes of S_3 (all of L' when e = p-1)",
        z_derived == expected_center,
    );
    r.check_eq(
        "thm1.1.vii.abelian",
        "L' is abelian iff e = p-1",
        e == p - 1,
        lie.is_abelian(&derived),
    );

    let f10 = lie.x_index(Id::f(1, 0)).expect("in X");
    let g01 = lie.x_index(Id::g(0, 1)).expect("in X");
    let h_ptoral = lie.p_power_of_basis(f10) == Some(lie.basis_vector(f10).as_slice())
        && lie.p_power_of_basis(g01) == Some(lie.basis_vector(g01).as_slice());
    r.check_true("thm1.1.viii.h_p_toral", "[f_{1,0}]^[p] = [f_{1,0}], [g_{0,1}]^[p] = [g_{0,1}]", h_ptoral);
    let basis_zero = x_prime(p, e).iter().all(|id| {
        let i = lie.x_index(*id).expect("in X");
        lie.p_power_of_basis(i)
            .is_some_and(|v| v.iter().all(|&c| c == 0))
    });
    r.check_true(
        "thm1.1.viii.derived_p_power_zero",
        "(L')^[p] = 0: every p-fold composite of derivations in X' vanishes",
        basis_zero && compositions_vanish(a, lie, &x_prime(p, e)),
    );

    // values obtained by direct computation of the bracket table
    let computed_center = if e == p - 1 {
        socle_set(p, e)
            .into_iter()
            .filter(|id| *id != Id::f(1, p - 1) && *id != Id::g(p - 1, 1))
            .collect()
    } else {
        socle_set(p, e)
    };
    r.check_eq(
        "lie.derived_center_dim",
        "dim Z(L') = 2e if e < p-1 and 2e-2 if e = p-1",
        computed_center.len(),
        z_derived.dim(),
    );
    r.check_true(
        "lie.derived_center_basis",
        "Z(L') is spanned by the classes of S, less f_{1,p-1} and g_{p-1,1} when e = p-1",
        z_derived == x_vector(lie, computed_center)?,
    );
    let missing = x_vector(lie, [Id::f(0, p - 1), Id::g(p - 1, 0)])?;
    r.check_true(
        "lie.jz_l_complement",
        "L' = J(Z(A))L ⊕ span{[f_{0,p-1}], [g_{p-1,0}]}",
        jz_l.is_subspace_of(&derived)? && jz_l.intersection(&missing)?.is_zero() && jz_l.dim() + 2 == derived.dim(),
    );
    r.check_eq("lie.derived_abelian", "L' is not abelian", false, lie.is_abelian(&derived));
    Ok(r)
}

/// Generator values of `c * f_{a,b}` or `c * g_{a,b}`; zero if the
/// exponents leave the range or `c = 0`.
fn monomial_values(a: &Qci, kind: MonomialKind, i: i64, j: i64, c: i64) -> Vec<u32> {
    let f = a.field();
    let n = a.algebra().dim();
    let mut v = vec![0; 2 * n];
    let c = f.from_i64(c);
    let p = a.p() as i64;
    if c == 0 || i < 0 || j < 0 || i >= p || j >= p {
        return v;
    }
    let idx = a.index(i as usize, j as usize);
    match kind {
        MonomialKind::F => v[idx] = c,
        MonomialKind::G => v[n + idx] = c,
    }
    v
}

fn add_values(f: &PrimeField, a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| f.add(x, y)).collect()
}

/// Tally for one closed-form relation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl RelationCheck {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            ..Self::default()
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Der-level bracket `[D_s, D_t]` on the generators.
fn bracket_values(a: &Qci, lie: &Lie, s: usize, t: usize) -> Vec<u32> {
    let f = a.field();
    let (du, dv) = (&lie.reps()[s], &lie.reps()[t]);
    a.algebra()
        .generators()
        .iter()
        .flat_map(|&g| {
            let x = du.apply(&dv.image_of_basis(g));
            let y = dv.apply(&du.image_of_basis(g));
            x.iter().zip(&y).map(|(a, b)| f.sub(a, b)).collect::<Vec<_>>()
        })
        .collect()
}

fn in_x(p: usize, e: usize, kind: MonomialKind, a: i64, b: i64) -> bool {
    let pi = p as i64;
    (0..pi).contains(&a) && (0..pi).contains(&b) && Id { kind, a: a as usize, b: b as usize }.in_x(p, e)
}

/// Compares the bracket of every pair in `X` with each closed-form relation
/// whose hypotheses the pair satisfies, exactly as the relation is stated.
/// Order of the result: `lemma5.4.i` to `lemma5.4.v`, then `lemma5.5.i`, `.ii`, `.v`.
pub fn check_bracket_closed_forms(a: &Qci, lie: &Lie) -> Result<Vec<RelationCheck>> {
    use MonomialKind::{F, G};
    let f = a.field();
    let (p, e) = (a.p(), a.e());
    let pi = p as i64;
    let ids = crate::derivation::basis_x_ids(p, e);
    let zero = monomial_values(a, F, 0, 0, 0);
    let q_inv_minus_one_inv = {
        let qi = f.inv(&a.q()).expect("q nonzero");
        f.inv(&f.sub(&qi, &1)).expect("q != 1")
    };
    let mut rel: Vec<RelationCheck> = ["lemma5.4.i", "lemma5.4.ii", "lemma5.4.iii", "lemma5.4.iv", "lemma5.4.v", "lemma5.5.i", "lemma5.5.ii", "lemma5.5.v"]
        .into_iter()
        .map(RelationCheck::new)
        .collect();
    for (s, u) in ids.iter().enumerate() {
        for (t, v) in ids.iter().enumerate() {
            let actual = bracket_values(a, lie, s, t);
            let (ai, bi, ci, di) = (u.a as i64, u.b as i64, v.a as i64, v.b as i64);
            let label = || format!("[{u}, {v}]");
            match (u.kind, v.kind) {
                (F, F) => {
                    if ai + ci - 1 < pi && bi + di < pi {
                        let expected = monomial_values(a, F, ai + ci - 1, bi + di, ci - ai);
                        let member = in_x(p, e, F, ai + ci - 1, bi + di);
                        rel[0].record(actual == expected && member, label);
                    } else {
                        rel[0].record(actual == zero, label);
                    }
                }
                (G, G) => {
                    if ai + ci < pi && bi + di - 1 < pi {
                        let expected = monomial_values(a, G, ai + ci, bi + di - 1, di - bi);
                        let member = in_x(p, e, G, ai + ci, bi + di - 1);
                        rel[1].record(actual == expected && member, label);
                    } else {
                        rel[1].record(actual == zero, label);
                    }
                }
                (F, G) => {
                    if ai + ci > pi - 1 || bi + di > pi - 1 {
                        rel[2].record(actual == zero, label);
                    } else if ai + ci < pi - 1 || bi + di < pi - 1 {
                        let both = ai + ci < pi - 1 && bi + di < pi - 1;
                        let expected = add_values(
                            &f,
                            &monomial_values(a, F, ai + ci, bi + di - 1, -bi),
                            &monomial_values(a, G, ai + ci - 1, bi + di, ci),
                        );
                        let members = in_x(p, e, F, ai + ci, bi + di - 1) && in_x(p, e, G, ai + ci - 1, bi + di);
                        rel[3].record(both && actual == expected && members, label);
                    } else {
                        let shape = (ai, bi, ci, di) == (0, pi - 1, pi - 1, 0);
                        let expected: Vec<u32> = inner_qci_values(a, p - 2, p - 2)
                            .iter()
                            .map(|x| f.mul(x, &q_inv_minus_one_inv))
                            .collect();
                        rel[4].record(shape && actual == expected, label);
                    }
                }
                (G, F) => {}
            }
        }
    }
    let f10 = lie.x_index(Id::f(1, 0)).expect("in X");
    let g01 = lie.x_index(Id::g(0, 1)).expect("in X");
    for (s, id) in ids.iter().enumerate() {
        let (ai, bi) = (id.a as i64, id.b as i64);
        let (c1, c2, slot) = match id.kind {
            F => (ai - 1, bi, 5),
            G => (ai, bi - 1, 6),
        };
        let lhs1 = bracket_values(a, lie, f10, s);
        let lhs2 = bracket_values(a, lie, g01, s);
        rel[slot].record(lhs1 == monomial_values(a, id.kind, ai, bi, c1), || format!("[f_{{1,0}}, {id}]"));
        rel[slot].record(lhs2 == monomial_values(a, id.kind, ai, bi, c2), || format!("[g_{{0,1}}, {id}]"));
    }
    rel[7].record(bracket_values(a, lie, f10, g01) == zero, || "[f_{1,0}, g_{0,1}]".into());
    Ok(rel)
}

/// The tabulated bracket of each pair in `X` is the class of the
/// Der-level bracket of the representatives.
pub fn table_matches_representatives(lie: &Lie) -> Result<bool> {
    for s in 0..lie.dim() {
        for t in 0..lie.dim() {
            let d = lie.reps()[s].bracket(&lie.reps()[t])?;
            let values = d.generator_values(lie.algebra());
            if lie.coordinates_of_values(&values)? != lie.table_entry(s, t) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `[f_{0,p-1}, g_{p-1,0}] = (q^{-1} - 1)^{-1} d_{p-2,p-2}` on full matrices.
pub fn check_inner_bracket_matrix(a: &Qci, lie: &Lie) -> Result<bool> {
    let f = a.field();
    let p = a.p();
    let alg = a.algebra();
    let fi = lie.x_index(Id::f(0, p - 1)).expect("in X");
    let gi = lie.x_index(Id::g(p - 1, 0)).expect("in X");
    let br = lie.reps()[fi].bracket(&lie.reps()[gi])?;
    let c = f.inv(&f.sub(&f.inv(&a.q()).expect("nonzero"), &1)).expect("q != 1");
    let d = ad_matrix(alg, &a.monomial_vec(p - 2, p - 2, 1)).scale(&c);
    Ok(br.matrix() == &d)
}

/// `x^e · [f_{a,b}] = [f_{a+e,b}]` (zero past the range), likewise for `y^e`
/// and for the `g`s.
pub fn check_z_action_shifts(a: &Qci, lie: &Lie) -> Result<bool> {
    let (p, e) = (a.p(), a.e());
    let xe = lie.z_action_matrix(&a.monomial_vec(e, 0, 1))?;
    let ye = lie.z_action_matrix(&a.monomial_vec(0, e, 1))?;
    for (s, id) in crate::derivation::basis_x_ids(p, e).iter().enumerate() {
        for (m, da, db) in [(&xe, e, 0), (&ye, 0, e)] {
            let got = m.column(s);
            let (ta, tb) = (id.a + da, id.b + db);
            let expected = if ta < p && tb < p {
                lie.basis_vector(lie.x_index(Id { kind: id.kind, a: ta, b: tb }).expect("in X"))
            } else {
                vec![0; lie.dim()]
            };
            if got != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Outcome of the randomized representative-independence checks.
#[derive(Clone, Debug, Default)]
pub struct WellDefinedness {
    pub samples: usize,
    pub bracket_ok: bool,
    pub z_action_ok: bool,
    pub p_power_ok: bool,
}

/// Replaces representatives by `rep + ad(w)` for random `w` and compares
/// canonical forms of brackets, `Z(A)`-multiples and `p`-th powers.
pub fn check_well_definedness(a: &Qci, lie: &Lie, samples: usize, seed: u64) -> Result<WellDefinedness> {
    let alg = a.algebra();
    let n = alg.dim();
    let d = lie.dim();
    let p = a.p() as u32;
    let mut rng = sample_rng(seed);
    let random_vec = |rng: &mut rand_chacha::ChaCha8Rng| -> Vec<u32> { (0..n).map(|_| rng.gen_range(0..p)).collect() };
    let center = alg.center();
    let mut out = WellDefinedness {
        samples,
        bracket_ok: true,
        z_action_ok: true,
        p_power_ok: true,
    };
    for _ in 0..samples {
        let i = rng.gen_range(0..d);
        let j = rng.gen_range(0..d);
        let w1 = alg.element(random_vec(&mut rng))?;
        let w2 = alg.element(random_vec(&mut rng))?;
        let u = lie.basis_element(i);
        let v = lie.basis_element(j);
        let u2 = lie.element(u.rep().add(&inner_derivation(alg, &w1)?)?)?;
        let v2 = lie.element(v.rep().add(&inner_derivation(alg, &w2)?)?)?;
        if u2 != u || v2 != v {
            out.bracket_ok = false;
        }
        let br = lie.bracket(&u2, &v2)?;
        if lie.coords_of(&br)? != lie.table_entry(i, j) {
            out.bracket_ok = false;
        }
        let zc: Vec<u32> = (0..center.dim()).map(|_| rng.gen_range(0..p)).collect();
        let z = alg.element(center.combine(&zc)?)?;
        let zu = lie.z_action(&z, &u2)?;
        let expected = lie.z_action_matrix(z.coords())?.column(i);
        if lie.coords_of(&zu)? != expected {
            out.z_action_ok = false;
        }
        let pp = lie.p_power(&u2)?;
        let expected = lie.p_power_of_basis(i).expect("positive characteristic");
        if lie.coords_of(&pp)? != expected {
            out.p_power_ok = false;
        }
    }
    Ok(out)
}

/// Builds the structure and runs [`verify_lie_structure`].
pub fn verify_structure_theorem(a: &Qci) -> Result<Report> {
    let lie = hh1_qci(a)?;
    verify_lie_structure(a, &lie)
}
