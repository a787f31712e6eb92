use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use qci_core::algebra::{bimodule_hom, make_group_algebra_cp_cpm1, make_qci, parameter_grid, BimoduleSpec, QciParams};
use qci_core::derivation::{derivation_values_qci, inner_generator_values};
use qci_core::linalg::{Field, Matrix, PrimeField, Rationals, Subspace};
use qci_core::verify::scan_row;

fn fp_matrix(p: u64, cols: usize, rows: &[Vec<u32>]) -> Matrix<PrimeField> {
    let f = PrimeField::new(p).unwrap();
    let rows = rows.iter().map(|r| r.iter().map(|&c| c % p as u32).collect()).collect();
    Matrix::from_rows(f, cols, rows).unwrap()
}

fn matrix_strategy(max_rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(prop::collection::vec(0u32..7, cols), 1..=max_rows)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_idempotent(rows in matrix_strategy(6, 5)) {
        let m = fp_matrix(7, 5, &rows);
        let r = m.rref();
        prop_assert_eq!(r.rref(), r);
    }

    #[test]
    fn rank_nullity(rows in matrix_strategy(6, 6)) {
        let m = fp_matrix(5, 6, &rows);
        let null = m.nullspace();
        prop_assert_eq!(m.rank() + null.dim(), 6);
        prop_assert_eq!(m.rank(), m.transpose().rank());
        for v in null.basis() {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(|&c| c == 0));
        }
    }

    #[test]
    fn rational_rank_nullity(rows in prop::collection::vec(prop::collection::vec(-4i64..5, 4), 1..5)) {
        let f = Rationals;
        let rows: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|r| r.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect())
            .collect();
        let m = Matrix::from_rows(f, 4, rows).unwrap();
        let null = m.nullspace();
        prop_assert_eq!(m.rank() + null.dim(), 4);
        prop_assert_eq!(m.rref().rref(), m.rref());
    }

    #[test]
    fn sum_and_intersection_dimensions(a in matrix_strategy(4, 6), b in matrix_strategy(4, 6)) {
        let u = fp_matrix(3, 6, &a).row_space();
        let v = fp_matrix(3, 6, &b).row_space();
        let s = u.sum(&v).unwrap();
        let i = u.intersection(&v).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + v.dim());
        prop_assert!(i.is_subspace_of(&u).unwrap() && u.is_subspace_of(&s).unwrap());
        prop_assert_eq!(u.annihilator().annihilator(), u);
    }

    #[test]
    fn perp_is_an_involution(rows in prop::collection::vec(prop::collection::vec(0u32..3, 9), 0..5)) {
        let a = make_qci(3, 2, None).unwrap();
        let alg = a.algebra();
        let u = Subspace::span(a.field(), 9, rows).unwrap();
        let up = alg.perp(&u).unwrap();
        prop_assert_eq!(u.dim() + up.dim(), 9);
        prop_assert_eq!(alg.perp(&up).unwrap(), u);
    }

    #[test]
    fn products_are_associative(x in prop::collection::vec(0u32..5, 25), y in prop::collection::vec(0u32..5, 25), z in prop::collection::vec(0u32..5, 25)) {
        let a = make_qci(5, 4, None).unwrap();
        let alg = a.algebra();
        let l = alg.mul_vec(&alg.mul_vec(&x, &y), &z);
        let r = alg.mul_vec(&x, &alg.mul_vec(&y, &z));
        prop_assert_eq!(l, r);
    }
}

#[test]
fn product_examples() {
    let a = make_qci(5, 2, Some(4)).unwrap();
    let alg = a.algebra();
    let prod = alg.mul_vec(&a.monomial_vec(2, 1, 1), &a.monomial_vec(1, 2, 1));
    assert_eq!(prod, a.monomial_vec(3, 3, 4));

    let a = make_qci(3, 2, None).unwrap();
    let alg = a.algebra();
    let f = a.field();
    let s: Vec<u32> = a.monomial_vec(1, 0, 1).iter().zip(a.monomial_vec(0, 1, 1)).map(|(u, v)| f.add(u, &v)).collect();
    let sq = alg.mul_vec(&s, &s);
    let expected: Vec<u32> = a.monomial_vec(2, 0, 1).iter().zip(a.monomial_vec(0, 2, 1)).map(|(u, v)| f.add(u, &v)).collect();
    assert_eq!(sq, expected);
    assert_eq!(alg.mul_vec(&a.monomial_vec(2, 0, 1), &a.monomial_vec(1, 0, 1)), vec![0; 9]);
}

#[test]
fn structure_examples() {
    let a = make_qci(3, 2, None).unwrap();
    let alg = a.algebra();
    assert_eq!(alg.center().dim(), 6);
    assert_eq!(alg.commutator_space().dim(), 3);
    assert_eq!(alg.radical_power(1).dim(), 8);
    assert!(alg.radical_power(5).is_zero());
    assert_eq!(alg.socle_layer(1).unwrap().dim(), 1);
    assert_eq!(alg.socle_layer(2).unwrap().dim(), 3);
    assert_eq!(alg.socle_layer(5).unwrap().dim(), 9);
    let full = Subspace::full(a.field(), 9);
    assert!(alg.perp(&full).unwrap().is_zero());
    let j = BimoduleSpec::Sub(alg.radical().clone());
    assert_eq!(bimodule_hom(alg, &j, &BimoduleSpec::whole(alg)).unwrap().dim(), 5);

    assert_eq!(make_qci(5, 4, None).unwrap().algebra().center().dim(), 10);
    assert_eq!(make_qci(7, 3, None).unwrap().algebra().commutator_space().dim(), 32);
    assert_eq!(make_qci(5, 2, None).unwrap().algebra().radical_power(2).dim(), 22);
}

#[test]
fn group_algebra_examples() {
    let g = make_group_algebra_cp_cpm1(3).unwrap();
    assert_eq!(g.dim(), 6);
    assert_eq!(g.center().dim(), 3);
    assert_eq!(g.center().dim() - g.simple_count() - 1, 0);
}

#[test]
fn dimensions_do_not_depend_on_q() {
    for (p, e) in parameter_grid(7) {
        let mut seen = None;
        for q in QciParams::all_q(p, e).unwrap() {
            let a = make_qci(p, e, Some(q as u64)).unwrap();
            let alg = a.algebra();
            let dims = (
                alg.center().dim(),
                alg.commutator_space().dim(),
                alg.center_socle().dim(),
                derivation_values_qci(&a).dim(),
                inner_generator_values(alg).dim(),
            );
            match &seen {
                None => seen = Some(dims),
                Some(s) => assert_eq!(s, &dims, "p={p} e={e} q={q}"),
            }
        }
    }
}

#[test]
fn lie_dimensions_do_not_depend_on_q() {
    for (p, e) in parameter_grid(7) {
        let base = scan_row(p, e).unwrap();
        for q in QciParams::all_q(p, e).unwrap() {
            let a = make_qci(p, e, Some(q as u64)).unwrap();
            let lie = qci_core::hh1::hh1_qci(&a).unwrap();
            let d = lie.derived_algebra();
            assert_eq!(
                (lie.dim(), d.dim(), lie.center_of(&d).dim(), lie.socle_as_z_module().unwrap().dim()),
                (base.dim_l, base.dim_l_prime, base.dim_center_l_prime, base.dim_soc),
                "p={p} e={e} q={q}"
            );
        }
    }
}
