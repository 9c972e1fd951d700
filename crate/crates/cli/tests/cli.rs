use std::path::PathBuf;
use std::process::{Command, Output};
use std::sync::atomic::{AtomicUsize, Ordering};

use serde_json::Value;

fn varwreath(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_varwreath"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = varwreath(&full);
    (code(&out), serde_json::from_slice(&out.stdout).expect("valid JSON"))
}

/// Manifest file removed on drop.
struct Manifest(PathBuf);

impl Manifest {
    fn as_str(&self) -> &str {
        self.0.to_str().unwrap()
    }
}

impl Drop for Manifest {
    fn drop(&mut self) {
        let _ = std::fs::remove_file(&self.0);
    }
}

fn manifest(contents: &str) -> Manifest {
    static NEXT: AtomicUsize = AtomicUsize::new(0);
    let n = NEXT.fetch_add(1, Ordering::Relaxed);
    let path = std::env::temp_dir().join(format!("varwreath-manifest-{}-{n}.txt", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    Manifest(path)
}

const EXAMPLE_2_1: &str = "C_{3^5}^6 * C_{3^3}^{aleph_0} * C_{3^2}^5 * C_3^{aleph_1} * C_{5^3}^4 * C_{5^2}";

#[test]
fn parse_prints_invariant_table() {
    let (c, v) = json(&["parse", EXAMPLE_2_1]);
    assert_eq!(c, 0);
    let p3 = &v["primes"][0];
    assert_eq!(p3["p"], 3);
    assert_eq!(p3["factors"][0]["u"], 5);
    assert_eq!(p3["factors"][0]["mult"], 6);
    assert_eq!(p3["factors"][1]["mult"], "aleph_0");
    assert_eq!(p3["first_infinite"], 2);
    assert_eq!(v["primes"][1]["first_infinite"], Value::Null);
    assert_eq!(v["exponent"], 30375);

    let text = stdout(&varwreath(&["parse", EXAMPLE_2_1]));
    assert!(text.contains("first infinite factor: C_{3^3}^{aleph_0} (i = 2)"), "{text}");
    assert!(text.contains("no infinite factor"));
}

#[test]
fn parse_small_forms() {
    assert_eq!(stdout(&varwreath(&["parse", "1"])), "trivial group\n");
    let (_, v) = json(&["parse", "C_{4}^2"]);
    assert_eq!(v["normalized"], "C_{2^2}^2");
}

#[test]
fn parse_error_points_at_column() {
    let out = varwreath(&["parse", "C_{6}"]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("C_{6}\n     ^"), "{err}");
    let (c, v) = json(&["parse", "C_2 * "]);
    assert_eq!(c, 2);
    assert_eq!(v["error"]["kind"], "parse");
    assert!(v["error"]["position"].is_u64());
}

#[test]
fn classify_examples() {
    let (c, v) = json(&["classify", "--passive", "C_3", "--active", "C_{3^2}^2"]);
    assert_eq!(c, 0);
    assert_eq!((v["d"].as_u64(), v["a"].as_u64(), v["b"].as_u64()), (Some(3), Some(17), Some(6)));
    assert_eq!(v["e"], serde_json::json!([2, 0, 2]));
    assert_eq!(v["class"], 17);

    let (_, v) = json(&["classify", "--passive", "D4", "--active", "C_{2^2}^3 * C_2"]);
    assert_eq!((v["a"].as_u64(), v["b"].as_u64(), v["class"].as_u64()), (Some(11), Some(2), Some(22)));
    assert_eq!(v["exponent"], 16);
    assert_eq!(v["solubility_bound"], 3);

    let out = varwreath(&["classify", "--passive", "C_2", "--active", "C_2^{aleph_0}"]);
    assert_eq!(code(&out), 3);
    assert!(stdout(&out).contains("not nilpotent (Baumslag: active group infinite)"));
}

#[test]
fn text_and_json_agree() {
    let args = ["classify", "--passive", "Q8", "--active", "C_4 * C_2^7"];
    let text = stdout(&varwreath(&args));
    let (_, v) = json(&args);
    assert!(text.contains(&format!("class = max{{13, 22}} = {}", v["class"])), "{text}");
    assert!(text.contains(&format!("a = {}, b = {}", v["a"], v["b"])));
    assert!(text.contains(&format!("exponent = {}", v["exponent"])));
}

#[test]
fn decide_exit_codes() {
    let a = "D4 * Q8 * C_3 * C_5 * C_7^{aleph_1}";
    let (c, v) = json(&[
        "decide",
        "--a1",
        a,
        "--a2",
        a,
        "--b1",
        "C_{2^5}^3 * C_{2^4}^{aleph_1} * C_2^8 * C_3^{aleph_1} * C_7^8",
        "--b2",
        "C_{2^5}^3 * C_{2^4}^{aleph_0} * C_{2^3}^2 * C_2^9 * C_3^{aleph_0} * C_7^9",
    ]);
    assert_eq!(c, 1);
    assert_eq!(v["verdict"], "unequal");
    let per_prime: Vec<(u64, bool)> = v["per_prime"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| (x["p"].as_u64().unwrap(), x["equivalent"].as_bool().unwrap()))
        .collect();
    assert_eq!(per_prime, [(2, true), (3, true), (7, false)]);
    assert_eq!(v["ignored_primes"], serde_json::json!([5]));

    let same = ["decide", "--a1", "C_3", "--a2", "C_3", "--b1", "C_9^2", "--b2", "C_9^2"];
    assert_eq!(code(&varwreath(&same)), 0);

    let (c, v) = json(&["decide", "--a1", "D4", "--a2", "Q8", "--b1", "C_4^3 * C_2", "--b2", "C_4 * C_2^7"]);
    assert_eq!(c, 1);
    assert_eq!(v["witness"]["separating_variety"], "N_4 B_2");

    let (c, v) = json(&["decide", "--a1", "D4", "--a2", "C_4 * C_2", "--b1", "C_4", "--b2", "C_4"]);
    assert_eq!(c, 3);
    assert_eq!(v["verdict"], "not_applicable");
    let asserted = [
        "decide", "--a1", "D4", "--a2", "C_4 * C_2", "--b1", "C_4", "--b2", "C_4", "--assert-var-equal",
    ];
    assert_eq!(code(&varwreath(&asserted)), 0);
}

#[test]
fn witness_for_a_chosen_prime() {
    let base = ["witness", "--a1", "Q8", "--a2", "Q8", "--b1", "C_4^3 * C_2", "--b2", "C_4 * C_2^7"];
    let (c, v) = json(&base);
    assert_eq!(c, 1);
    assert_eq!((v["class_b1"].as_u64(), v["class_b2"].as_u64()), (Some(8), Some(4)));
    assert_eq!(v["separating_variety"], "N_4 B_2");

    let mut wrong = base.to_vec();
    wrong.extend(["--prime", "3"]);
    assert_eq!(code(&varwreath(&wrong)), 3);

    let same = ["witness", "--a1", "C_2", "--a2", "C_2", "--b1", "C_2", "--b2", "C_2"];
    assert_eq!(code(&varwreath(&same)), 3);
}

#[test]
fn oracle_batch() {
    let m = manifest("# small cases\nC_2 Wr C_2\n\nC_3 Wr C_3\nC_2 Wr C_4\n");
    let (c, v) = json(&["oracle-verify", "--manifest", m.as_str()]);
    assert_eq!(c, 0);
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 3);
    assert!(entries.iter().all(|e| e["status"] == "match"));
    assert_eq!(entries[1]["detail"]["shield_class"], 3);
    assert_eq!(entries[1]["line"], 4);

    let m = manifest("C_3 Wr C_9^2\n");
    let out = varwreath(&["oracle-verify", "--manifest", m.as_str()]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("skipped: budget exceeded (3^81 * 81 elements"));

    let m = manifest("");
    let out = varwreath(&["oracle-verify", "--manifest", m.as_str()]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "no entries\n");

    let m = manifest("C_2 Wr C_{6}\n");
    assert_eq!(code(&varwreath(&["oracle-verify", "--manifest", m.as_str()])), 2);

    let m = manifest("C_2 Wr C_4\n");
    let out = varwreath(&["oracle-verify", "--manifest", m.as_str(), "--budget", "32"]);
    assert!(stdout(&out).contains("skipped"));
}

#[test]
fn demo_reproduces_examples() {
    let out = varwreath(&["--demo"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    for needle in [
        "a = 17, b = 6",
        "class = max{13, 22} = 22",
        "A2 Wr B2 lies in N_4 B_2, A1 Wr B1 does not",
        "p=7: NOT equivalent (t=1, w=1)",
        "ignored primes (divide m, not n): 5",
        "not nilpotent (Baumslag: active group infinite)",
    ] {
        assert!(text.contains(needle), "missing {needle:?}");
    }
    let (c, v) = json(&["demo"]);
    assert_eq!(c, 0);
    assert_eq!(v["examples"].as_array().unwrap().len(), 6);
}

#[test]
fn usage_errors() {
    assert_eq!(code(&varwreath(&[])), 2);
    assert_eq!(code(&varwreath(&["--demo", "parse", "1"])), 2);
    assert_eq!(code(&varwreath(&["classify", "--passive", "C_2"])), 2);
}
