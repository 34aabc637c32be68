//! Black-box tests of the `jacring` binary: exit codes, JSON determinism,
//! the CSV contract, and agreement between CLI payloads and direct library
//! calls (the command layer must add no mathematics of its own).

mod common;

use std::process::{Command, Output};

use common::FERMAT;
use jacring::report::hilbert_payload;
use jacring::{parse_polynomial, Field};

fn jacring(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jacring"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

/// JSON output with the isolated timing field blanked out.
fn stable_json(output: &Output) -> String {
    stdout(output)
        .lines()
        .filter(|line| !line.trim_start().starts_with("\"elapsed_ms\""))
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn hilbert_json_is_deterministic_and_matches_the_library() {
    let args = [
        "hilbert",
        "--poly",
        FERMAT,
        "--field",
        "Q",
        "--max-degree",
        "6",
        "--json",
    ];
    let first = jacring(&args);
    assert!(first.status.success());
    let second = jacring(&args);
    assert_eq!(stable_json(&first), stable_json(&second));

    let value: serde_json::Value = serde_json::from_str(&stdout(&first)).unwrap();
    assert_eq!(value["tool"], "jacring");
    assert_eq!(value["field"], "Q");

    let form = parse_polynomial(FERMAT, Field::Rationals, 5).unwrap();
    assert_eq!(value["input"], form.to_string());
    let payload = hilbert_payload(&form, 6).unwrap();
    for (row, expected) in value["result"]["rows"]
        .as_array()
        .unwrap()
        .iter()
        .zip(&payload.rows)
    {
        assert_eq!(row["degree"], expected.degree);
        assert_eq!(row["ideal_dimension"], expected.ideal_dimension);
        assert_eq!(row["quotient_dimension"], expected.quotient_dimension);
    }

    // Over F2 the ideal is spanned by squares: 1, 5, 10, 10 up to degree 3.
    let f2 = jacring(&[
        "hilbert",
        "--poly",
        FERMAT,
        "--field",
        "F2",
        "--max-degree",
        "3",
        "--json",
    ]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&f2)).unwrap();
    let dims: Vec<u64> = value["result"]["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["quotient_dimension"].as_u64().unwrap())
        .collect();
    assert_eq!(dims, [1, 5, 10, 10]);
}

#[test]
fn smooth_verdicts_from_the_command_line() {
    let out = jacring(&["smooth", "--poly", FERMAT, "--field", "Q", "--json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["result"]["status"], "Smooth");

    // The cone needs the ambient dimension raised explicitly.
    let cone = jacring(&[
        "smooth",
        "--poly",
        "x0^3+x1^3+x2^3+x3^3",
        "--vars",
        "5",
        "--field",
        "Q",
        "--json",
    ]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&cone)).unwrap();
    assert_eq!(value["result"]["status"], "Singular");

    let f3 = jacring(&["smooth", "--poly", FERMAT, "--field", "F3", "--json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&f3)).unwrap();
    assert_eq!(value["result"]["status"], "Singular");
}

#[test]
fn etale_subcommand_covers_all_three_verdicts() {
    for (hyperplane, expected) in [
        ("x0", "NotEtale"),
        ("x0+x1+x2+x3+x4", "Etale"),
        ("x0+x1", "SectionSingular"),
    ] {
        let out = jacring(&[
            "etale",
            "--poly",
            FERMAT,
            "--field",
            "Q",
            "--hyperplane",
            hyperplane,
            "--json",
        ]);
        assert!(out.status.success(), "{hyperplane}");
        let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(value["result"]["status"], expected, "{hyperplane}");
        if expected == "NotEtale" {
            assert_eq!(value["result"]["wlp_kernel_dimension"], 4);
            assert_eq!(value["result"]["tangent_kernel_dimension"], 4);
            assert_eq!(value["result"]["crosscheck_passed"], true);
        }
    }
}

#[test]
fn wlp_given_search_and_exhaustive_modes() {
    let given = jacring(&[
        "wlp",
        "--poly",
        FERMAT,
        "--field",
        "Q",
        "--degree",
        "2",
        "--linear-form",
        "x0",
        "--json",
    ]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&given)).unwrap();
    assert_eq!(value["result"]["mode"], "given");
    assert_eq!(value["result"]["kernel_dimension"], 4);
    assert_eq!(
        value["result"]["kernel_classes"],
        serde_json::json!(["x0*x1", "x0*x2", "x0*x3", "x0*x4"])
    );

    let search = jacring(&[
        "wlp", "--poly", FERMAT, "--field", "Q", "--search", "--trials", "20", "--seed", "5",
        "--json",
    ]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&search)).unwrap();
    assert_eq!(value["result"]["mode"], "search");
    assert!(value["result"]["outcome"]["WitnessFound"].is_object());

    let exhaustive = jacring(&[
        "wlp",
        "--poly",
        FERMAT,
        "--field",
        "F2",
        "--degree",
        "2",
        "--exhaustive",
        "--json",
    ]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&exhaustive)).unwrap();
    assert_eq!(value["result"]["mode"], "exhaustive");
    assert_eq!(value["result"]["witness"], serde_json::Value::Null);
    assert_eq!(value["result"]["classes_checked"], 31);
}

#[test]
fn demo_exit_codes() {
    for name in ["fermat-kernel", "char2", "contracted-lines"] {
        let out = jacring(&["demo", name]);
        assert!(out.status.success(), "demo {name} must pass");
    }
    let unknown = jacring(&["demo", "no-such-demo"]);
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn input_errors_exit_with_code_two() {
    // Unparseable polynomial.
    let bad = jacring(&["hilbert", "--poly", "x0 + $", "--field", "Q"]);
    assert_eq!(bad.status.code(), Some(2));

    // Non-homogeneous input is rejected.
    let mixed = jacring(&["hilbert", "--poly", "x0^2 + x1", "--field", "Q"]);
    assert_eq!(mixed.status.code(), Some(2));

    // The zero polynomial is rejected.
    let zero = jacring(&["hilbert", "--poly", "x0 - x0", "--field", "Q"]);
    assert_eq!(zero.status.code(), Some(2));

    // Bad field specification.
    let field = jacring(&["hilbert", "--poly", "x0^2", "--field", "F4"]);
    assert_eq!(field.status.code(), Some(2));

    // --poly and --poly-file conflict (clap reports usage errors as 2).
    let both = jacring(&[
        "hilbert",
        "--poly",
        "x0^2",
        "--poly-file",
        "/tmp/nope.txt",
        "--field",
        "Q",
    ]);
    assert_eq!(both.status.code(), Some(2));

    // Missing polynomial entirely.
    let none = jacring(&["hilbert", "--field", "Q"]);
    assert_eq!(none.status.code(), Some(2));

    // Exhaustive enumeration over the rationals is refused.
    let infinite = jacring(&["wlp", "--poly", FERMAT, "--field", "Q", "--exhaustive"]);
    assert_eq!(infinite.status.code(), Some(2));
}

#[test]
fn resource_guards_exit_with_code_three() {
    let probe = jacring(&[
        "probe",
        "--n",
        "9",
        "--d",
        "6",
        "--field",
        "Q",
        "--samples",
        "1",
    ]);
    assert_eq!(probe.status.code(), Some(3));

    let exhaustive = jacring(&[
        "wlp",
        "--poly",
        FERMAT,
        "--field",
        "F10007",
        "--degree",
        "2",
        "--exhaustive",
    ]);
    assert_eq!(exhaustive.status.code(), Some(3));
}

#[test]
fn probe_writes_reproducible_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path_a = dir.path().join("a.csv");
    let path_b = dir.path().join("b.csv");
    for path in [&path_a, &path_b] {
        let out = jacring(&[
            "probe",
            "--n",
            "4",
            "--d",
            "3",
            "--field",
            "F101",
            "--samples",
            "6",
            "--seed",
            "9",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    let strip_ms = |text: &str| -> Vec<String> {
        text.lines()
            .map(|line| {
                line.rsplit_once(',')
                    .map(|(head, _)| head.to_string())
                    .unwrap()
            })
            .collect()
    };
    let a = std::fs::read_to_string(&path_a).unwrap();
    let b = std::fs::read_to_string(&path_b).unwrap();
    assert_eq!(strip_ms(&a), strip_ms(&b));
    assert!(a.starts_with("n,d,char,sample,seed,smooth,wlp_injective,kernel_dim,ms\n"));
    assert_eq!(a.lines().count(), 7);

    // The polynomial-file input path agrees with inline input.
    let poly_path = dir.path().join("fermat.txt");
    std::fs::write(&poly_path, FERMAT).unwrap();
    let from_file = jacring(&[
        "hilbert",
        "--poly-file",
        poly_path.to_str().unwrap(),
        "--field",
        "Q",
        "--max-degree",
        "6",
        "--json",
    ]);
    let inline = jacring(&[
        "hilbert",
        "--poly",
        FERMAT,
        "--field",
        "Q",
        "--max-degree",
        "6",
        "--json",
    ]);
    let file_value: serde_json::Value = serde_json::from_str(&stdout(&from_file)).unwrap();
    let inline_value: serde_json::Value = serde_json::from_str(&stdout(&inline)).unwrap();
    assert_eq!(file_value["result"], inline_value["result"]);
}
