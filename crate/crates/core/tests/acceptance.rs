//! One verdict line per acceptance criterion over the full parameter grid.
//!
//! A criterion prints PASS only if every sub-check holds. Sub-checks that are
//! known to fail (the documented clauses in `common`) make the verdict FAIL
//! but not the test; any other failure fails the test.

use std::collections::BTreeSet;
use std::sync::Arc;

use qci_core::algebra::{make_group_algebra_cp_cpm1, make_qci, parameter_grid};
use qci_core::hh1::hh1_qci;
use qci_core::hh1::theorem::{
    check_bracket_closed_forms, check_inner_bracket_matrix, check_well_definedness, verify_lie_structure,
};
use qci_core::lift::{monomial_reduction_failures, trig_identity_error, verify_lift};
use qci_core::report::Report;
use qci_core::socle::{
    check_asoca, check_brandt, check_second_socle, check_socle_bound, check_socle_coefficients, generic_bounds,
    verify_socle_qci,
};
use qci_core::verify::{verify_algebra, verify_derivations};

mod common;
use common::{failing_clauses, vanishing_relation_failures};

const P_MAX: u64 = 13;

#[derive(Default)]
struct Criterion {
    checked: usize,
    failures: BTreeSet<String>,
    documented: BTreeSet<String>,
}

impl Criterion {
    fn record(&mut self, name: impl Into<String>, ok: bool) {
        self.checked += 1;
        if !ok {
            self.failures.insert(name.into());
        }
    }

    fn records(&mut self, tag: &str, r: &Report, ids: &[&str]) {
        for id in ids {
            let c = r.get(id).unwrap_or_else(|| panic!("{tag}: missing record {id}"));
            self.record(format!("{tag} {id}"), c.pass);
        }
    }

    fn expect_failure(&mut self, name: impl Into<String>) {
        self.documented.insert(name.into());
    }
}

fn tag(p: u64, e: u64) -> String {
    format!("({p},{e})")
}

#[test]
fn acceptance() {
    let mut c: Vec<Criterion> = (0..9).map(|_| Criterion::default()).collect();
    let grid = parameter_grid(P_MAX);
    assert_eq!(grid.len(), 14);

    for &(p, e) in &grid {
        let t = tag(p, e);
        let (pu, eu) = (p as usize, e as usize);
        let a = make_qci(p, e, None).unwrap();
        let alg = verify_algebra(&a).unwrap();
        let der = verify_derivations(&a).unwrap();
        c[1].records(&t, &alg, &["lemma4.2.center_dim", "center.socle_dim", "lemma4.3.commutator_dim"]);
        c[1].records(&t, &der, &["lemma4.6.der_dim", "prop4.1.hh1_dim"]);

        let lie = hh1_qci(&a).unwrap();
        let thm = verify_lie_structure(&a, &lie).unwrap();
        for rec in thm.checks.iter().filter(|r| r.id.starts_with("thm1.1.") && r.id != "thm1.1.i") {
            c[2].record(format!("{t} {}", rec.id), rec.pass);
        }
        for id in failing_clauses(pu, eu) {
            c[2].expect_failure(format!("{t} {id}"));
        }

        c[3].records(&t, &der, &["lemma4.4.constraint_rank"]);
        if p <= 5 {
            c[3].records(&t, &der, &["lemma4.4.oracle"]);
        }

        if p <= 7 {
            for rel in check_bracket_closed_forms(&a, &lie).unwrap() {
                c[4].record(format!("{t} {}", rel.name), rel.passed());
                if rel.name == "lemma5.4.iii" {
                    assert_eq!(rel.failures, vanishing_relation_failures(pu, eu), "{t}");
                    if !rel.failures.is_empty() {
                        c[4].expect_failure(format!("{t} lemma5.4.iii"));
                    }
                }
            }
            c[4].record(format!("{t} inner bracket"), check_inner_bracket_matrix(&a, &lie).unwrap());

            let w = check_well_definedness(&a, &lie, 100, 7).unwrap();
            assert!(w.samples >= 100);
            c[5].record(format!("{t} bracket"), w.bracket_ok);
            c[5].record(format!("{t} z-action"), w.z_action_ok);
            c[5].record(format!("{t} p-power"), w.p_power_ok);
        }
        c[5].record(format!("{t} jacobi"), lie.jacobi_failure().is_none());

        let soc = verify_socle_qci(&a).unwrap();
        c[6].records(&t, &soc, &["thm1.2", "brandt", "remark.brandt_bound", "remark.socle_bound", "remark.equality"]);
        if p <= 5 {
            c[6].records(&t, &soc, &["prop3.3"]);
        }
        if (p, e) == (3, 2) || (p, e) == (13, 12) {
            let b = soc.get("remark.brandt_bound").unwrap();
            let s = soc.get("remark.socle_bound").unwrap();
            c[6].record(format!("{t} equality iff e = p-1"), (b.computed == s.computed) == (e == p - 1));
        }

        if p <= 5 {
            let mut r = Report::new(p, e, a.q() as u64);
            check_second_socle(&mut r, a.algebra(), u64::MAX).unwrap();
            c[7].records(&t, &r, &["prop3.5.dim", "prop3.5.antisymmetric"]);
            let exhaustive = r.get("prop3.5.antisymmetric").unwrap();
            c[7].record(format!("{t} exhaustive"), exhaustive.expected.to_string().contains("all"));
        }
    }

    for p in [3u64, 5, 7] {
        let t = format!("k(C_{p}⋊C_{})", p - 1);
        let g = Arc::new(make_group_algebra_cp_cpm1(p).unwrap());
        let b = generic_bounds(g.clone()).unwrap();
        let mut r = Report::new(p, 0, 0);
        check_socle_bound(&mut r, &b);
        check_brandt(&mut r, &g, &b).unwrap();
        c[6].records(&t, &r, &["thm1.2", "brandt"]);
        if p == 3 {
            check_asoca(&mut r, &g).unwrap();
            check_socle_coefficients(&mut r, &g, b.ext_sum).unwrap();
            c[6].records(&t, &r, &["prop3.3"]);
            c[6].record(format!("{t} 0 < 1"), b.brandt_bound == 0 && b.socle_bound == 1);
        }
    }

    c[8].record("f_p = u^p mod p, p <= 97", monomial_reduction_failures(97).is_empty());
    for n in 0..=13 {
        c[8].record(format!("trig n={n}"), trig_identity_error(n, 100) < 1e-9);
    }
    for p in [3u64, 5, 7] {
        let r = verify_lift(p).unwrap();
        for rec in &r.checks {
            c[8].record(format!("p={p} {}", rec.id), rec.pass);
        }
    }

    let titles = [
        "",
        "dimension formulas",
        "structure theorem clauses (ii)-(viii)",
        "closed-form derivations vs Leibniz nullspace",
        "bracket table",
        "well-definedness and Jacobi",
        "socle bounds",
        "second-socle maps",
        "Chebyshev lift",
    ];
    let mut undocumented = vec![];
    for (k, crit) in c.iter().enumerate().skip(1) {
        let verdict = if crit.failures.is_empty() { "PASS" } else { "FAIL" };
        println!(
            "criterion {k} {verdict}: {} ({} sub-checks, {} failing)",
            titles[k],
            crit.checked,
            crit.failures.len()
        );
        for f in &crit.failures {
            let note = if crit.documented.contains(f) { "documented" } else { "UNEXPECTED" };
            println!("    {note}: {f}");
        }
        for f in crit.failures.difference(&crit.documented) {
            undocumented.push(format!("criterion {k}: {f}"));
        }
        for f in crit.documented.difference(&crit.failures) {
            undocumented.push(format!("criterion {k}: expected failure did not occur: {f}"));
        }
    }
    println!("criterion 9 NOTE: the block-theoretic headline bound has no computable instance here; criteria 1-8 replace it");
    assert!(undocumented.is_empty(), "{undocumented:#?}");
}
