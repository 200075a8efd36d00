use std::process::Command;

use proptest::prelude::*;
use weyl_cli::expr::{eval_ast, parse_expr, print};
use weyl_cli::report::AnalysisReport;
use weyl_cli::sketch::marked_points;
use weyl_cli::{run, Output};
use weyl_core::{Scalar, WeylElement};

const WORKED: &str = "p^4+p^3*q+p^2*q^2+q^3+q";

fn weyl(args: &[&str]) -> Output {
    run(std::iter::once("weyl").chain(args.iter().copied()), None)
}

#[test]
fn normalize_golden() {
    let out = weyl(&["normalize", "q*p"]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "p*q - 1\n"));
    let out = weyl(&["normalize", "(p + q)^2"]);
    assert_eq!(out.stdout, "p^2 + 2*p*q + q^2 - 1\n");
    assert_eq!(weyl(&["normalize", "1/2 * p"]).stdout, "1/2*p\n");
    assert_eq!(weyl(&["normalize", "-q^3*p"]).stdout, "-p*q^3 + 3*q^2\n");
}

#[test]
fn commutator_golden() {
    assert_eq!(weyl(&["commutator", "p", "q"]).stdout, "1\n");
    assert_eq!(weyl(&["commutator", "h", "p"]).stdout, "-p\n");
    assert_eq!(weyl(&["commutator", "h", "q"]).stdout, "q\n");
}

#[test]
fn grade_golden() {
    let out = weyl(&["grade", "p^2*q + q^3 + p"]);
    assert_eq!(out.code, 0);
    assert_eq!(
        out.stdout,
        "grade span: [-1, 3]\n\
         grade -1: p^2*q + p\n  h-form: (h + 2) * p\n\
         grade 3: q^3\n  h-form: (1) * q^3\n"
    );
}

#[test]
fn polygon_worked_example() {
    let out = weyl(&["polygon", WORKED]);
    assert_eq!(out.code, 0);
    let (head, sketch) = out.stdout.split_once("lattice:\n").unwrap();
    assert_eq!(
        head,
        "edges:\n\
         \x20 weight (1,2) degree 6 support (0,3) (2,2) polynomial X^2*Y^2 + Y^3 power index 1\n\
         \x20 weight (1,1) degree 4 support (2,2) (3,1) (4,0) polynomial X^4 + X^3*Y + X^2*Y^2 power index 1\n\
         vertices:\n\
         \x20 (2,2) separating weight (2,3)\n"
    );
    // Only the marked point set of the sketch is contractual.
    assert_eq!(marked_points(sketch), vec![(0, 1), (0, 3), (2, 2), (3, 1), (4, 0)]);
}

#[test]
fn polygon_without_edges() {
    let out = weyl(&["polygon", "p^2*q^2 + p*q + 1"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("edges: none\n"));
    assert_eq!(marked_points(&out.stdout), vec![(0, 0), (1, 1), (2, 2)]);
}

#[test]
fn analyze_h_cites_axis_rule() {
    let out = weyl(&["analyze", "h"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("verdict: unsolvable\n"));
    assert!(out.stdout.contains("rule: AxisPowerIndexOne\n"));
    assert!(out.stdout.contains("  weight: (1,1)\n"));
    assert!(out.stdout.contains("  power_index: 1\n"));
}

#[test]
fn analyze_affine_witness() {
    let out = weyl(&["analyze", "p + q^2"]);
    assert!(out.stdout.contains("verdict: solvable\nwitness: q\n"));
    let out = weyl(&["analyze", "-p"]);
    assert!(out.stdout.contains("witness: -q\n"));
}

#[test]
fn analyze_json_round_trip() {
    for expr in ["h", "p + q^2", WORKED, "(p+q)^2", "0", "-3/4*q^3 + 2", "p^3 + q^2"] {
        let out = weyl(&["analyze", expr, "--json"]);
        assert_eq!(out.code, 0, "{expr}: {}", out.stderr);
        let report: AnalysisReport = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(report.schema, "weyl-report/1");
        assert_eq!(report.input, expr);
        let again = serde_json::to_string_pretty(&report).unwrap();
        assert_eq!(format!("{again}\n"), out.stdout);
        let value: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        let back: AnalysisReport = serde_json::from_value(value).unwrap();
        assert_eq!(back, report);
    }
}

#[test]
fn analyze_json_fields() {
    let out = weyl(&["analyze", "p + q^2", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["verdict"]["outcome"], "Solvable");
    assert_eq!(v["witness"]["text"], "q");
    assert_eq!(v["polygon"]["edges"][0]["weight"], serde_json::json!([2, 1]));
    assert_eq!(v["polygon"]["edges"][0]["power_index"], 1);
    let out = weyl(&["analyze", "(p+q)^2", "--json", "--box", "2"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["verdict"]["outcome"], "Unknown");
    assert_eq!(v["oracle_bound"], 2);
}

#[test]
fn oracle_subcommand() {
    assert_eq!(weyl(&["oracle", "q", "--box", "1"]).stdout, "witness: -p\n");
    assert_eq!(
        weyl(&["oracle", "h", "--box", "3"]).stdout,
        "no witness with exponents <= 3\n"
    );
    let out = weyl(&["oracle", "q"]);
    assert_eq!(out.code, 1);
}

#[test]
fn box_cap_from_environment() {
    let args = ["weyl", "oracle", "q", "--box", "9"];
    assert_eq!(run(args, None).code, 1);
    assert_eq!(run(args, Some("9")).code, 0);
    assert_eq!(run(args, Some("nine")).code, 1);
    let out = run(["weyl", "analyze", "q", "--box", "3"], Some("2"));
    assert_eq!(out.code, 1);
    assert_eq!(out.stderr, "error: box bound 3 exceeds the oracle cap 2\n");
}

#[test]
fn help_and_version_exit_zero() {
    let out = weyl(&["--help"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("analyze"));
    assert_eq!(weyl(&["--version"]).code, 0);
}

#[test]
fn malformed_inputs_exit_one() {
    let bad = [
        "", "   ", "p +", "+ p", "p q", "2p", "p^", "p^-1", "p^1.5", "p^1/2", "1/0", "1/", "(p",
        "p)", "()", "x", "p ** 2", "1.5", "--p", "p*-q", "q^99999999999", "p + * q", "h^", "(p+q",
        "1//2", "p^q", "pq", "\u{00e9}",
    ];
    assert!(bad.len() >= 20);
    for s in bad {
        for cmd in ["normalize", "grade", "polygon", "analyze"] {
            let out = weyl(&[cmd, s]);
            assert_eq!(out.code, 1, "{cmd} {s:?} gave {out:?}");
            assert!(out.stdout.is_empty());
            assert!(out.stderr.starts_with("error: "), "{cmd} {s:?}: {}", out.stderr);
        }
    }
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        vec![],
        vec!["frobnicate", "p"],
        vec!["normalize"],
        vec!["commutator", "p"],
        vec!["analyze", "p", "--box", "-1"],
        vec!["analyze", "p", "--box", "many"],
        vec!["oracle", "p", "--box"],
        vec!["polygon", "0"],
        vec!["grade", "0"],
    ] {
        let out = weyl(&args);
        assert_eq!(out.code, 1, "{args:?} gave {out:?}");
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_weyl");
    let ok = Command::new(bin).args(["normalize", "q*p"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "p*q - 1\n");
    let bad = Command::new(bin).args(["normalize", "p^"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
    let capped = Command::new(bin)
        .args(["oracle", "q", "--box", "9"])
        .env("WEYL_BOX_CAP", "9")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&capped.stdout), "witness: -p\n");
}

fn element() -> impl Strategy<Value = WeylElement> {
    prop::collection::vec(((0u32..5, 0u32..5), -20i64..20, 1i64..6), 0..8).prop_map(|terms| {
        WeylElement::from_terms(
            terms
                .into_iter()
                .map(|(m, n, d)| (m, Scalar::new(n.into(), d.into()))),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(600))]

    #[test]
    fn print_parse_round_trip(x in element()) {
        let text = print(&x);
        let ast = parse_expr(&text).unwrap();
        prop_assert_eq!(eval_ast(&ast), x);
    }
}
