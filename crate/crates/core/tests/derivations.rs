use qci_core::algebra::{make_group_algebra_cp_cpm1, make_qci, parameter_grid};
use qci_core::derivation::*;
use qci_core::linalg::{Field, Matrix, Subspace};
use qci_core::Error;

#[test]
fn closed_form_matches_leibniz_nullspace() {
    for (p, e) in parameter_grid(5) {
        let a = make_qci(p, e, None).unwrap();
        let generic = derivations_generic(a.algebra()).unwrap();
        let closed = derivations_qci(&a).unwrap();
        assert_eq!(generic, closed, "p={p} e={e}");
        let m = ((p - 1) / e) as usize;
        let pp = p as usize;
        assert_eq!(closed.dim(), pp * pp + 1 + m * m);
    }
}

#[test]
fn generator_value_solver_matches_closed_form() {
    for (p, e) in parameter_grid(7) {
        let a = make_qci(p, e, None).unwrap();
        assert_eq!(derivation_generator_values(a.algebra()).unwrap(), derivation_values_qci(&a));
    }
}

#[test]
fn constraint_rank_on_grid() {
    for (p, e) in parameter_grid(13) {
        let a = make_qci(p, e, None).unwrap();
        let (p, m) = (p as usize, ((p - 1) / e) as usize);
        let c = qci_constraint_matrix(&a);
        assert_eq!(c.rank(), p * p - 1 - m * m);
        assert_eq!(c.rows(), p * p - 1 - m * m);
    }
}

#[test]
fn inner_derivations_dimension() {
    let a = make_qci(3, 2, None).unwrap();
    assert_eq!(inner_derivations(a.algebra()).dim(), 3);
    let alg = a.algebra();
    let d = inner_derivation(alg, &alg.one()).unwrap();
    assert!(d.is_zero());
}

#[test]
fn inner_values_vanish_exactly_when_expected() {
    let a = make_qci(5, 4, None).unwrap();
    let (p, e) = (5usize, 4usize);
    for i in 0..p {
        for j in 0..p {
            let v = inner_qci_values(&a, i, j);
            let dx_zero = v[..p * p].iter().all(|&c| c == 0);
            assert_eq!(dx_zero, i == p - 1 || j % e == 0, "d_{{{i},{j}}}");
            let alg = a.algebra();
            let d = inner_derivation(alg, &alg.basis_element(a.index(i, j))).unwrap();
            assert_eq!(d.generator_values(alg), v);
        }
    }
}

#[test]
fn x_is_a_complement_of_inner() {
    for (p, e) in parameter_grid(7) {
        let a = make_qci(p, e, None).unwrap();
        let alg = a.algebra();
        let x = basis_x(&a).unwrap();
        let span_x = Subspace::span(
            a.field(),
            2 * alg.dim(),
            x.iter().map(|(_, d)| d.generator_values(alg)),
        )
        .unwrap();
        assert_eq!(span_x.dim(), x.len());
        let inner = inner_generator_values(alg);
        assert!(span_x.intersection(&inner).unwrap().is_zero());
        assert_eq!(span_x.sum(&inner).unwrap(), derivation_values_qci(&a));
    }
}

#[test]
fn derivations_preserve_radical() {
    let a = make_qci(5, 2, None).unwrap();
    let alg = a.algebra();
    let der = derivations_qci(&a).unwrap();
    let n = alg.dim();
    for v in der.basis() {
        let m = Matrix::from_flat(a.field(), n, n, v.clone()).unwrap();
        assert!(alg.radical().image(&m).unwrap().is_subspace_of(alg.radical()).unwrap());
    }
}

#[test]
fn group_algebra_derivations() {
    let g = make_group_algebra_cp_cpm1(3).unwrap();
    let der = derivations_generic(&g).unwrap();
    let via_gens = generator_values_to_matrices(&g, &derivation_generator_values(&g).unwrap()).unwrap();
    assert_eq!(der, via_gens);
    let inner = inner_derivations(&g);
    assert_eq!(inner.dim(), 6 - 3);
    assert!(inner.is_subspace_of(&der).unwrap());
}

#[test]
fn one_dimensional_algebra_has_no_derivations() {
    use qci_core::algebra::{AlgebraData, FDAlgebra};
    use qci_core::linalg::PrimeField;
    let f = PrimeField::new(5).unwrap();
    let k = FDAlgebra::new(AlgebraData {
        field: f,
        labels: vec!["1".into()],
        products: vec![vec![(0, 1)]],
        unit: vec![1],
        form: Some(vec![1]),
        radical: Subspace::zero(f, 1),
        simple_count: 1,
        generators: None,
    })
    .unwrap();
    assert!(derivations_generic(&k).unwrap().is_zero());
}

#[test]
fn socle_valued_maps_are_outer() {
    let a = make_qci(3, 2, None).unwrap();
    let alg = a.algebra();
    let x = a.monomial_vec(1, 0, 1);
    let y = a.monomial_vec(0, 1, 1);
    let z = a.monomial_vec(2, 2, 1);
    let zero = vec![0; 9];
    let sd = socle_valued_map(alg, &[(x.clone(), z.clone()), (y.clone(), zero.clone())]).unwrap();
    assert!(sd.outer);
    let sd0 = socle_valued_map(alg, &[(x.clone(), zero.clone()), (y.clone(), zero.clone())]).unwrap();
    assert!(sd0.derivation.is_zero() && !sd0.outer);
    // value outside the socle
    assert!(matches!(
        socle_valued_map(alg, &[(x, a.monomial_vec(1, 1, 1)), (y, zero)]),
        Err(Error::InvalidSocleMap(_))
    ));
}

#[test]
fn second_socle_maps() {
    for p in [3u64, 5] {
        let a = make_qci(p, 2, None).unwrap();
        let alg = a.algebra();
        let f = a.field();
        let anti = Matrix::from_i64_rows(f, &[&[0, 1], &[-1, 0]]).unwrap();
        assert!(second_socle_map(alg, &anti).is_ok());
        let diag = Matrix::from_i64_rows(f, &[&[1, 0], &[0, 0]]).unwrap();
        assert!(matches!(second_socle_map(alg, &diag), Err(Error::NotADerivation(_))));
        assert!(second_socle_map(alg, &Matrix::zeros(f, 2, 2)).unwrap().is_zero());
        assert_eq!(second_socle_derivation_space(alg).unwrap().dim(), 1);
        let pr = second_socle_pairing(alg).unwrap();
        for (i, x) in pr.xs.iter().enumerate() {
            for (j, y) in pr.ys.iter().enumerate() {
                let prod = alg.mul_vec(x, y);
                let expect: Vec<u32> = pr.z.iter().map(|&c| if i == j { c } else { f.zero() }).collect();
                assert_eq!(prod, expect);
            }
        }
    }
}
