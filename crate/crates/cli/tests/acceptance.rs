//! One test per acceptance criterion. Each prints a single `PASS`/`FAIL`
//! line; failures carry the structured diff from the report.

use std::process::Command;

use serde_json::Value;

struct Run {
    code: i32,
    report: Value,
}

fn typeii(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_typeii"))
        .args(args)
        .output()
        .expect("binary runs");
    let report = serde_json::from_slice(&out.stdout).unwrap_or_else(|_| {
        panic!(
            "no JSON from {args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        )
    });
    Run {
        code: out.status.code().unwrap_or(-1),
        report,
    }
}

fn verdict(n: u32, title: &str, passed: bool, detail: &Value) {
    if passed {
        println!("PASS criterion {n}: {title}");
    } else {
        println!("FAIL criterion {n}: {title}: {detail}");
    }
    assert!(passed, "criterion {n} failed: {detail}");
}

fn hit_pairs(report: &Value) -> Vec<(u64, u64)> {
    report["results"]["hits"]
        .as_array()
        .unwrap()
        .iter()
        .map(|h| (h["alpha"].as_u64().unwrap(), h["i"].as_u64().unwrap()))
        .collect()
}

fn recipe(n: u32, title: &str, name: &str) {
    let run = typeii(&["reproduce", name]);
    let failed: Vec<&Value> = run.report["results"]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] != Value::Bool(true))
        .collect();
    let detail = Value::Array(failed.iter().map(|c| (*c).clone()).collect());
    verdict(n, title, run.code == 0 && failed.is_empty(), &detail);
}

fn m_set(r: u32, t: u32, through: u32) -> (bool, Value) {
    let run = typeii(&[
        "lambda-filter",
        "--r",
        &r.to_string(),
        "--t",
        &t.to_string(),
        "--through",
        &through.to_string(),
    ]);
    assert_eq!(run.code, 0);
    let cmp = run.report["results"]["published_comparison"].clone();
    (cmp["agrees"] == Value::Bool(true), cmp)
}

#[test]
fn criterion_01_q_zeros_beta_1() {
    let run = typeii(&[
        "search-zeros",
        "--family",
        "q",
        "--beta",
        "1",
        "--alpha-max",
        "652",
        "--json",
    ]);
    let hits = hit_pairs(&run.report);
    let ok = run.code == 0 && hits == vec![(14, 1), (223, 15)];
    verdict(1, "q family zeros for beta = 1", ok, &run.report["results"]);
}

#[test]
fn criterion_02_q_zeros_beta_2() {
    let run = typeii(&[
        "search-zeros",
        "--family",
        "q",
        "--beta",
        "2",
        "--alpha-max",
        "652",
        "--json",
    ]);
    let hits = hit_pairs(&run.report);
    let ok = run.code == 0 && hits == vec![(28, 1)];
    verdict(2, "q family zeros for beta = 2", ok, &run.report["results"]);
}

#[test]
fn criterion_03_r_family_middle_zeros() {
    recipe(3, "r family zeros exactly at alpha = 2i - 3", "lemma-r");
}

#[test]
fn criterion_04_pell() {
    let run = typeii(&["pell", "--count", "5"]);
    let sols = run.report["results"]["solutions"].as_array().unwrap();
    let got: Vec<(String, String, String)> = sols
        .iter()
        .map(|s| {
            let f = |k: &str| s[k].as_str().unwrap().to_string();
            (f("x"), f("y"), f("alpha"))
        })
        .collect();
    let want: Vec<(String, String, String)> = [
        (2, 1, -1),
        (7, 4, 14),
        (26, 15, 223),
        (97, 56, 3134),
        (362, 209, 43679),
    ]
    .iter()
    .map(|(x, y, a)| (x.to_string(), y.to_string(), a.to_string()))
    .collect();
    verdict(
        4,
        "first five Pell solutions and alphas",
        run.code == 0 && got == want,
        &run.report["results"],
    );
}

#[test]
fn criterion_05_m_set_n_24m() {
    let (ok, cmp) = m_set(0, 6, 7);
    verdict(5, "m-set for r = 0, t = 6 through 7", ok, &cmp);
}

#[test]
fn criterion_06_m_sets_n_24m_8_and_16() {
    let mut diffs = Vec::new();
    for (r, t, through) in [
        (1, 4, 5),
        (1, 6, 6),
        (1, 7, 7),
        (2, 2, 3),
        (2, 4, 4),
        (2, 5, 5),
    ] {
        let (ok, cmp) = m_set(r, t, through);
        if !ok {
            diffs.push(cmp);
        }
    }
    verdict(
        6,
        "m-sets for r = 1 and r = 2",
        diffs.is_empty(),
        &Value::Array(diffs),
    );
}

#[test]
fn criterion_07_exceptional_weights() {
    recipe(7, "exceptional weights 24/80 and 40/160", "exceptional");
}

#[test]
fn criterion_08_middle_weight() {
    recipe(8, "middle-weight vanishing for m <= 20", "middle-weight");
}

#[test]
fn criterion_09_t9_remark() {
    recipe(9, "no vanishing weight for t = 9, m = 57", "t9-remark");
}

#[test]
fn criterion_10_golay() {
    recipe(
        10,
        "Golay profile, design tests and enumerator structure",
        "golay",
    );
}

#[test]
fn criterion_11_oracles() {
    recipe(
        11,
        "closed forms and J factorisation against oracles",
        "oracles",
    );
}
