use std::process::{Command, Output};

use serde_json::Value;

fn qci(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qci")).args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

fn check<'a>(report: &'a Value, id: &str) -> &'a Value {
    report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["id"] == id)
        .unwrap_or_else(|| panic!("no record {id}"))
}

#[test]
fn verify_small_instance() {
    let out = qci(&["verify", "--p", "3", "--e", "2", "--json"]);
    let r = stdout_json(&out);
    let c = check(&r, "thm1.1.i");
    assert_eq!(c["expected"], 8);
    assert_eq!(c["computed"], 8);
    assert_eq!(c["pass"], true);
    assert_eq!((r["p"].clone(), r["e"].clone(), r["q"].clone()), (3.into(), 2.into(), 2.into()));
    // the two structure-theorem clauses with known counterexamples fail
    assert_eq!(out.status.code(), Some(1));
    let failing: Vec<&str> = r["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["pass"] == false)
        .map(|c| c["id"].as_str().unwrap())
        .collect();
    assert_eq!(
        failing,
        [
            "thm1.1.v.soc_in_center",
            "thm1.1.vi.jz_l",
            "thm1.1.vii.center_dim",
            "thm1.1.vii.center_basis",
            "thm1.1.vii.abelian",
            "lemma5.4.iii"
        ]
    );
}

#[test]
fn verify_writes_file_and_is_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let out = qci(&["verify", "--p", "7", "--e", "3", "--json", a.to_str().unwrap()]);
    qci(&["verify", "--p", "7", "--e", "3", "--json", b.to_str().unwrap()]);
    let (ba, bb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(ba, bb);
    let r: Value = serde_json::from_slice(&ba).unwrap();
    let checks = r["checks"].as_array().unwrap();
    assert!(checks.len() >= 20);
    assert!(!String::from_utf8_lossy(&ba).contains("timestamp"));
    for c in checks {
        let keys: Vec<&String> = c.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["computed", "expected", "id", "paper_ref", "pass"]);
    }
    let exit_expected = if checks.iter().all(|c| c["pass"] == true) { 0 } else { 1 };
    assert_eq!(out.status.code(), Some(exit_expected));
    // text report still goes to stdout
    assert!(String::from_utf8_lossy(&out.stdout).contains("lemma4.2.center_dim"));
}

#[test]
fn invalid_parameters_exit_2() {
    let out = qci(&["verify", "--p", "7", "--e", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("e must divide p-1"));
    assert_eq!(qci(&["verify", "--p", "9", "--e", "2"]).status.code(), Some(2));
    assert_eq!(qci(&["verify", "--p", "7", "--e", "6", "--q", "2"]).status.code(), Some(2));
    assert_eq!(qci(&["lift", "--p", "4"]).status.code(), Some(2));
    assert_eq!(qci(&["scan", "--p-max", "2"]).status.code(), Some(2));
    assert_eq!(qci(&["verify", "--p", "7"]).status.code(), Some(2));
}

#[test]
fn prime_limit_and_override() {
    let out = qci(&["verify", "--p", "17", "--e", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--allow-large"));
    let out = qci(&["scan", "--p-max", "37", "--allow-large"]);
    assert_eq!(out.status.code(), Some(2));
    let out = qci(&["scan", "--p-max", "17", "--allow-large", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
    assert_eq!(stdout_json(&out)["rows"].as_array().unwrap().len(), 14 + 4);
}

#[test]
fn scan_rows() {
    let out = qci(&["scan", "--p-max", "7", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    let rows = v["rows"].as_array().unwrap();
    let pe: Vec<(u64, u64)> = rows
        .iter()
        .map(|r| (r["p"].as_u64().unwrap(), r["e"].as_u64().unwrap()))
        .collect();
    assert_eq!(pe, [(3, 2), (5, 2), (5, 4), (7, 2), (7, 3), (7, 6)]);
    let row = |p: u64, e: u64| rows.iter().find(|r| r["p"] == p && r["e"] == e).unwrap();
    let r54 = row(5, 4);
    assert_eq!(r54["dim_l"], 12);
    assert_eq!(r54["dim_soc"], 8);
    // 2e - 2 and non-abelian, see the decisions ledger
    assert_eq!(r54["dim_center_l_prime"], 6);
    assert_eq!(r54["abelian"], false);
    let r72 = row(7, 2);
    assert_eq!(r72["brandt_bound"], 20);
    assert_eq!(r72["socle_bound"], 4);
    let again = qci(&["scan", "--p-max", "7", "--json"]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn lift_outputs() {
    let out = qci(&["lift", "--p", "3", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["f_p"]["polynomial"], "u^3 - 3u");
    assert_eq!(v["quotient_rank"], 5);
    assert_eq!(v["commutator_dim"], 3);
    assert_eq!(v["not_symmetric"], true);

    let v = stdout_json(&qci(&["lift", "--p", "5", "--json"]));
    assert_eq!(v["f_p"]["polynomial"], "u^5 - 5u^3 + 5u");
    let coeffs: Vec<i64> = v["f_p"]["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap().parse().unwrap())
        .collect();
    assert_eq!(coeffs.last(), Some(&1));
    assert!(coeffs[..5].iter().all(|c| c % 5 == 0));
}
