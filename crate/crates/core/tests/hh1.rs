use qci_core::algebra::{make_qci, parameter_grid};
use qci_core::hh1::theorem::*;
use qci_core::hh1::{hh1_generic, hh1_qci};

mod common;
use common::{failing_clauses, vanishing_relation_failures};

#[test]
fn structure_theorem_small_grid() {
    for (p, e) in parameter_grid(7) {
        let a = make_qci(p, e, None).unwrap();
        let r = verify_structure_theorem(&a).unwrap();
        let fails: Vec<&str> = r.failures().map(|c| c.id.as_str()).collect();
        assert_eq!(fails, failing_clauses(p as usize, e as usize), "p={p} e={e}");
        assert!(r.checks.len() >= 20);
    }
}

#[test]
fn generic_path_agrees_on_lie_invariants() {
    for (p, e) in parameter_grid(5) {
        let a = make_qci(p, e, None).unwrap();
        let g = hh1_generic(a.algebra_arc()).unwrap();
        let l = hh1_qci(&a).unwrap();
        let (dg, dl) = (g.derived_algebra(), l.derived_algebra());
        assert_eq!(g.dim(), l.dim());
        assert_eq!(dg.dim(), dl.dim());
        assert_eq!(g.center_of(&dg).dim(), l.center_of(&dl).dim());
        assert_eq!(g.socle_as_z_module().unwrap().dim(), 2 * e as usize);
        let jz = a.algebra().center_radical();
        assert_eq!(
            g.module_product(&jz, &g.full_space()).unwrap().dim(),
            l.module_product(&jz, &l.full_space()).unwrap().dim()
        );
        assert_eq!(g.is_abelian(&dg), l.is_abelian(&dl));
        assert!(g.lie_center().is_zero());
    }
}

#[test]
fn brackets_match_closed_forms() {
    for (p, e) in parameter_grid(7) {
        let a = make_qci(p, e, None).unwrap();
        let lie = hh1_qci(&a).unwrap();
        for rel in check_bracket_closed_forms(&a, &lie).unwrap() {
            assert!(rel.checked > 0, "{} never applies at p={p} e={e}", rel.name);
            if rel.name == "lemma5.4.iii" {
                continue;
            }
            assert!(rel.passed(), "p={p} e={e} {}: {:?}", rel.name, rel.failures);
        }
        assert!(check_inner_bracket_matrix(&a, &lie).unwrap());
        assert!(check_z_action_shifts(&a, &lie).unwrap());
        assert!(table_matches_representatives(&lie).unwrap());
        assert!(lie.jacobi_failure().is_none());
        assert!(lie.antisymmetry_holds());
    }
}

#[test]
fn vanishing_relation_fails_exactly_on_single_overflow() {
    for (p, e) in parameter_grid(7) {
        let (pu, eu) = (p as usize, e as usize);
        let a = make_qci(p, e, None).unwrap();
        let lie = hh1_qci(&a).unwrap();
        let rel = &check_bracket_closed_forms(&a, &lie).unwrap()[2];
        let expected = vanishing_relation_failures(pu, eu);
        assert_eq!(rel.failures, expected, "p={p} e={e}");
    }
}

#[test]
fn restricted_axiom() {
    for (p, e) in parameter_grid(5) {
        let a = make_qci(p, e, None).unwrap();
        assert!(hh1_qci(&a).unwrap().restricted_axiom_holds().unwrap());
    }
}

#[test]
fn representatives_do_not_matter() {
    for (p, e) in parameter_grid(7) {
        let a = make_qci(p, e, None).unwrap();
        let lie = hh1_qci(&a).unwrap();
        let w = check_well_definedness(&a, &lie, 100, 7).unwrap();
        assert!(w.bracket_ok && w.z_action_ok && w.p_power_ok, "p={p} e={e}: {w:?}");
    }
}

#[test]
fn documented_examples() {
    let a = make_qci(13, 4, None).unwrap();
    assert_eq!(hh1_qci(&a).unwrap().dim(), 44);
    let a = make_qci(13, 12, None).unwrap();
    let l = hh1_qci(&a).unwrap();
    assert_eq!(l.dim(), 28);
    assert_eq!(l.socle_as_z_module().unwrap().dim(), 24);
    let a = make_qci(7, 2, None).unwrap();
    let l = hh1_qci(&a).unwrap();
    let d = l.derived_algebra();
    assert_eq!(d.dim(), 30);
    assert!(!l.is_abelian(&d));
    let soc = l.socle_as_z_module().unwrap();
    assert!(soc.is_subspace_of(&l.center_of(&d)).unwrap());
}
