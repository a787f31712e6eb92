use qci_core::algebra::{make_qci, parameter_grid};
use qci_core::verify::{scan_row, verify_qci};

mod common;
use common::failing_clauses;

#[test]
fn only_documented_records_fail() {
    for (p, e) in parameter_grid(7) {
        let a = make_qci(p, e, None).unwrap();
        let r = verify_qci(&a).unwrap();
        assert!(r.checks.len() >= 20);
        let mut expected: Vec<&str> = failing_clauses(p as usize, e as usize);
        expected.push("lemma5.4.iii");
        let fails: Vec<&str> = r.failures().map(|c| c.id.as_str()).collect();
        assert_eq!(fails, expected, "p={p} e={e}");
        let mut ids: Vec<&str> = r.checks.iter().map(|c| c.id.as_str()).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), r.checks.len(), "duplicate ids");
    }
}

#[test]
fn reports_are_deterministic() {
    let a = make_qci(5, 2, None).unwrap();
    assert_eq!(verify_qci(&a).unwrap().to_json_pretty(), verify_qci(&a).unwrap().to_json_pretty());
}

#[test]
fn scan_rows_follow_corrected_formulas() {
    for (p, e) in parameter_grid(13) {
        let (pu, eu) = (p as usize, e as usize);
        let m = (pu - 1) / eu;
        let row = scan_row(p, e).unwrap();
        assert_eq!(row.dim_l, 2 * (pu + m * m));
        assert_eq!(row.dim_l_prime, row.dim_l - 2);
        assert_eq!(row.dim_center_l_prime, if eu == pu - 1 { 2 * eu - 2 } else { 2 * eu });
        assert_eq!(row.dim_soc, 2 * eu);
        assert_eq!(row.brandt_bound, m * m + 2 * pu - 3);
        assert_eq!(row.socle_bound, 2 * eu);
        assert!(!row.abelian);
    }
}
