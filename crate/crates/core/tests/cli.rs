//! The CLI's pass/fail must agree with calling the library directly.

use std::process::Command;

use serde_json::Value;

use csmall::cli::{run, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};
use csmall::field::{PrimeField, Rationals};
use csmall::fixedpoint::check_table_fixture;
use csmall::isometry::{vandermonde_check, witness_suite, CheckMode, DetForm};
use csmall::partition::{enumerate_elliptic, partitions, GroupKind, PartitionSeq};
use csmall::springer::{compare_springer_labels, sp_so_odd_agree};

fn call(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["csmall", "--format", "json"];
    full.extend_from_slice(args);
    let mut buf = Vec::new();
    let code = run(full, &mut buf);
    let v = serde_json::from_slice(&buf).unwrap_or_else(|e| panic!("{args:?}: {e}: {}", String::from_utf8_lossy(&buf)));
    (code, v)
}

fn rows(v: &Value) -> &Vec<Value> {
    v["rows"].as_array().unwrap()
}

#[test]
fn verify_06ii_agrees() {
    for n in 1..=5 {
        let (code, v) = call(&["verify-06ii", &n.to_string()]);
        let mut expected = Vec::new();
        for kind in GroupKind::ALL {
            for p in enumerate_elliptic(n, kind) {
                expected.push(compare_springer_labels(&p, kind).unwrap());
            }
        }
        assert_eq!(rows(&v).len(), expected.len());
        let all = expected.iter().all(|r| r.pass);
        assert_eq!(code == EXIT_PASS, all);
        for (row, r) in rows(&v).iter().zip(&expected) {
            assert_eq!(row["springer"], Value::from(r.springer.clone()));
            assert_eq!(row["status"] == "pass", r.pass);
        }
    }
}

#[test]
fn sp_so_odd_agree_agrees() {
    for n in 1..=6 {
        let (code, v) = call(&["verify-36", &n.to_string()]);
        let ps = partitions(n);
        assert_eq!(rows(&v).len(), ps.len());
        let all = ps.into_iter().all(|p| sp_so_odd_agree(&PartitionSeq::new(p).unwrap()).unwrap());
        assert_eq!(code == EXIT_PASS, all);
        assert_eq!(v["pass"], Value::from(all));
    }
}

#[test]
fn isometry_agrees() {
    for (p, kind, field) in [("2,1", "sp", "q"), ("1,1", "so-even", "q"), ("2", "so-odd", "11"), ("1,1,1", "sp", "13")]
    {
        let (code, v) = call(&["isometry", p, kind, "--seed", "3", "--field", field]);
        let ps: PartitionSeq = p.parse().unwrap();
        let k: GroupKind = kind.parse().unwrap();
        let direct = if field == "q" {
            witness_suite(&ps, k, Rationals, 3).unwrap()
        } else {
            witness_suite(&ps, k, PrimeField::new(field.parse().unwrap()).unwrap(), 3).unwrap()
        };
        assert_eq!(code == EXIT_PASS, direct.pass(), "{p} {kind}");
        assert_eq!(rows(&v)[0]["relative_position"], serde_json::json!(direct.relative_position));
    }
}

#[test]
fn vandermonde_agrees() {
    let (code, v) = call(&["vandermonde", "2", "--symbolic"]);
    let direct = vandermonde_check(2, DetForm::Plus, CheckMode::Symbolic, 0, 0).unwrap();
    assert_eq!(code == EXIT_PASS, direct.pass);
    assert_eq!(rows(&v)[1]["sign"], Value::from(direct.sign));
}

#[test]
fn fixtures_agree() {
    for t in ["g2", "f4", "e6", "e7", "e8"] {
        let (code, v) = call(&["fixtures", t]);
        let direct = check_table_fixture(t).unwrap();
        assert_eq!(rows(&v).len(), direct.rows.len());
        assert_eq!(code == EXIT_PASS, direct.pass());
    }
}

#[test]
fn pipeline_and_enumeration_agree() {
    let (code, p) = call(&["pipeline", "A1", "coxeter", "-"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(p["rows"][0]["P"], Value::from("q^3 - q"));
    for (q, rep, expected) in [("5", "diag:2", "120"), ("7", "diag:2", "336"), ("9", "diag:3", "720")] {
        let (code, b) = call(&["bruteforce", "sl2", q, rep, "s"]);
        assert_eq!(code, EXIT_PASS);
        assert_eq!(b["rows"][0]["count"], Value::from(expected));
    }
}

#[test]
fn elliptic_lists_every_class() {
    for kind in GroupKind::ALL {
        let (code, v) = call(&["elliptic", "4", &kind.to_string()]);
        assert_eq!(code, EXIT_PASS);
        assert_eq!(rows(&v).len(), enumerate_elliptic(4, kind).len());
    }
}

#[test]
fn output_is_deterministic() {
    let a = call(&["isometry", "2,1", "so-odd", "--seed", "9"]);
    let b = call(&["isometry", "2,1", "so-odd", "--seed", "9"]);
    assert_eq!(a, b);
}

#[test]
fn csv_is_parseable() {
    let mut buf = Vec::new();
    let code = run(["csmall", "--format", "csv", "fixtures", "e6"], &mut buf);
    assert_eq!(code, EXIT_PASS);
    let mut r = csv::Reader::from_reader(buf.as_slice());
    let n = r.records().map(|x| x.unwrap()).count();
    assert_eq!(n, check_table_fixture("e6").unwrap().rows.len());
}

#[test]
fn exit_codes_from_the_binary() {
    let bin = env!("CARGO_BIN_EXE_csmall");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let ok = status(&["verify-36", "4"]);
    assert_eq!(ok.status.code(), Some(EXIT_PASS));
    let bad = status(&["springer", "1,3", "sp"]);
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
    let unknown = status(&["frobnicate"]);
    assert_eq!(unknown.status.code(), Some(EXIT_USAGE));
    let rec = status(&["--format", "json", "pipeline", "E6", "Φ3Φ12", "-"]);
    assert_eq!(rec.status.code(), Some(EXIT_USAGE));
    let v: Value = serde_json::from_slice(&rec.stdout).unwrap();
    assert_eq!(v["pass"], Value::Bool(false));
    assert!(v["error"].as_str().unwrap().contains("missing data"));
}

/// Data whose count polynomial is not a multiple of the group order is a
/// verification failure, not a usage error.
#[test]
fn inconsistent_data_fails_verification() {
    let mut data = csmall::fixedpoint::builtin_type_a(1);
    for row in &mut data.a {
        row[0] = csmall::poly::QPoly::zero();
    }
    data.a[0][0] = csmall::poly::QPoly::one();
    let dir = std::env::temp_dir().join(format!("csmall-cli-{}", std::process::id()));
    data.save(&dir).unwrap();
    let (code, v) = call(&["pipeline", "A1", "Φ2", "-", "--data", dir.to_str().unwrap()]);
    std::fs::remove_dir_all(&dir).unwrap();
    assert_eq!(code, EXIT_FAIL);
    assert!(v["error"].as_str().unwrap().contains("verification failed"));
}
