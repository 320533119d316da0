//! Acceptance suite: one test per acceptance criterion, every comparison
//! exact. Each test prints its own pass line (visible with
//! `cargo test --test acceptance -- --nocapture`); the per-test result
//! lines of the harness double as the pass/fail report.

use std::process::Command;

use hyperchen_core::algebra::{convolve, AlgebraElement};
use hyperchen_core::bases::{expand_basis, BasisFamily, BasisId};
use hyperchen_core::effective::third_order_magnus_fixture;
use hyperchen_core::perm::{signed_permutations, SignedPermutation};
use hyperchen_core::scalar::{int, ratio};
use hyperchen_core::verify::{
    verify_bases, verify_bch, verify_chen, verify_gl, verify_omega, verify_recursion,
    verify_shuffle_convolution, verify_solomon, VerifyOptions, GOLDEN_PRODUCTS,
    GOLDEN_REGRESSION_FREE,
};
use hyperchen_core::{Rat, RatElement};

fn ones(degree: usize, perms: &[&str]) -> RatElement {
    AlgebraElement::from_terms(
        degree,
        perms
            .iter()
            .map(|s| (s.parse::<SignedPermutation>().unwrap(), int(1))),
    )
    .unwrap()
}

fn basis(s: &str) -> RatElement {
    AlgebraElement::basis(s.parse().unwrap())
}

fn assert_suite(report: hyperchen_core::report::SuiteReport) {
    for check in &report.checks {
        assert!(
            check.passed,
            "suite {} check {} {:?} failed: {:?}",
            report.suite, check.name, check.params, check.failure
        );
    }
}

#[test]
fn criterion_01_convolution_golden_tests() {
    for (x, y, expected) in GOLDEN_PRODUCTS {
        let got = convolve(&basis(x), &basis(y));
        assert_eq!(got, ones(4, expected), "{x} * {y}");
    }
    println!("criterion 01 (convolution golden tests): PASS");
}

#[test]
fn criterion_02_support_count_law() {
    for n in 1..5usize {
        for m in 1..=5 - n {
            let expected = num_integer::binomial((n + m) as u64, n as u64) as usize;
            for sigma in signed_permutations(n) {
                for beta in signed_permutations(m) {
                    let prod: RatElement = convolve(
                        &AlgebraElement::basis(sigma.clone()),
                        &AlgebraElement::basis(beta),
                    );
                    assert_eq!(prod.support_size(), expected);
                    assert!(prod.terms().all(|(_, c)| c == &int::<Rat>(1)));
                }
            }
        }
    }
    println!("criterion 02 (support-count law, total degree <= 5): PASS");
}

#[test]
fn criterion_03_regression_class_counts() {
    for (i, expected) in GOLDEN_REGRESSION_FREE.iter().enumerate() {
        let n = i + 1;
        let r: RatElement = expand_basis(&BasisId::empty_subset(BasisFamily::R, n));
        assert_eq!(r, ones(n, expected), "printed expansion at degree {n}");
    }
    for n in 1..=7usize {
        let count = signed_permutations(n)
            .filter(|p| p.regression_set().is_empty())
            .count();
        let expected = 2 * (1..=n).product::<usize>();
        assert_eq!(count, expected, "degree {n}");
    }
    println!("criterion 03 (regression-class counts, degrees 1..7): PASS");
}

#[test]
fn criterion_04_moebius_and_product_rules() {
    // moebius roundtrip to degree 5, both product rules and the T-D
    // isomorphism by full expansion to total degree 6
    assert_suite(verify_bases(&VerifyOptions::default()));
    println!("criterion 04 (moebius roundtrip, product rules, T-D isomorphism): PASS");
}

#[test]
fn criterion_05_omega_dual_formulas() {
    // both closed forms to degree 5, equality with log of the
    // regression-free series, exponential round trip
    assert_suite(verify_omega(&VerifyOptions::default()));
    println!("criterion 05 (omega dual formulas and log/exp, degrees <= 5): PASS");
}

#[test]
fn criterion_06_third_order_fixture() {
    let omega = third_order_magnus_fixture::<Rat>().expect("frozen expansion");
    assert_eq!(omega.part_or_zero(1).support_size(), 2);
    assert_eq!(omega.part_or_zero(2).support_size(), 8);
    assert_eq!(omega.part_or_zero(3).support_size(), 48);
    let part3 = omega.part_or_zero(3);
    let plus: Rat = ratio(1, 3);
    let minus: Rat = ratio(-1, 6);
    assert_eq!(part3.terms().filter(|(_, c)| **c == plus).count(), 24);
    assert_eq!(part3.terms().filter(|(_, c)| **c == minus).count(), 24);
    println!("criterion 06 (third-order coefficient fixture): PASS");
}

#[test]
fn criterion_07_chen_product_formula() {
    let opts = VerifyOptions {
        max_total_degree: 4,
        dim: 2,
        seed: 7,
        models: 5,
        ..VerifyOptions::default()
    };
    assert_suite(verify_chen(&opts));
    println!("criterion 07 (chen product formula and general variant): PASS");
}

#[test]
fn criterion_08_shuffle_convolution_relation() {
    assert_suite(verify_shuffle_convolution(&VerifyOptions::default()));
    println!("criterion 08 (shuffle-convolution relation, total degree <= 5): PASS");
}

#[test]
fn criterion_09_effective_expansion() {
    let small = VerifyOptions {
        dim: 2,
        max_degree: 4,
        ..VerifyOptions::default()
    };
    assert_suite(verify_gl(&small));
    let large = VerifyOptions {
        dim: 3,
        max_degree: 3,
        ..VerifyOptions::default()
    };
    assert_suite(verify_gl(&large));
    assert_suite(verify_recursion(&VerifyOptions::default()));
    println!("criterion 09 (effective-evolution expansion, shuffle expansion, recursion): PASS");
}

#[test]
fn criterion_10_bch_identity() {
    let opts = VerifyOptions {
        dim: 2,
        max_degree: 4,
        ..VerifyOptions::default()
    };
    assert_suite(verify_bch(&opts));
    println!("criterion 10 (log of the picard series, degree <= 4): PASS");
}

#[test]
fn criterion_11_solomon_idempotency() {
    assert_suite(verify_solomon(&VerifyOptions::default()));
    println!("criterion 11 (solomon idempotency, degrees <= 4): PASS");
}

const MODEL: &str = r#"{
  "dim": 2,
  "H": [["0,1", "2"], ["-1/2,0,3", "0"]],
  "P": [1, 0],
  "lower": "-1",
  "upper": "0"
}"#;

/// The command list documented in the README; every entry must be
/// byte-identical across runs.
fn documented_commands(model: &str) -> Vec<Vec<String>> {
    let own = |args: &[&str]| args.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    vec![
        own(&["perm", "compose", "-3 1 -2", "2 -3 1"]),
        own(&["perm", "inverse", "2 -3 1"]),
        own(&["perm", "standardize", "5 8 2"]),
        own(&["perm", "standardize", "-2 7 -1 2", "--ties"]),
        own(&["perm", "descents", "2 3 1"]),
        own(&["perm", "regressions", "4 -3 -5 6 -2 1"]),
        own(&["conv", "2 3 1", "1"]),
        own(&["conv", "1 -2", "2 -1"]),
        own(&["shuffle", "1 -2", "^3"]),
        own(&["basis", "R", "2", ""]),
        own(&["basis", "T", "3", "1,2"]),
        own(&["basis", "D", "3", "2"]),
        own(&["sol", "3"]),
        own(&["omega", "--max-degree", "3", "--basis", "T"]),
        own(&["omega", "--max-degree", "3", "--basis", "canonical"]),
        own(&["basis-id", r#"{"family":"T","n":3,"S":[1]}"#]),
        own(&["eval", "angle", "--model", model, "--perm", "-3 1 -2"]),
        own(&["eval", "bracket", "--model", model, "--word", "^2 -3 1"]),
        own(&[
            "eval",
            "composite",
            "--model",
            model,
            "--head",
            "2 -1",
            "--tail",
            "2",
        ]),
        own(&["eval", "picard", "--model", model, "--order", "3"]),
        own(&["dump", "--model", model]),
        own(&["verify", "conv"]),
        own(&["verify", "shuffleconv"]),
        own(&["verify", "bases"]),
        own(&["verify", "sol"]),
        own(&["verify", "omega"]),
        own(&["verify", "gl", "--models", "2"]),
        own(&["verify", "recursion", "--models", "2"]),
        own(&["verify", "magnus", "--models", "2"]),
        own(&["verify", "bch", "--models", "2"]),
        own(&[
            "verify",
            "chen",
            "--max-total-degree",
            "4",
            "--dim",
            "2",
            "--seed",
            "7",
        ]),
    ]
}

#[test]
fn criterion_12_cli_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let model_path = dir.path().join("model.json");
    std::fs::write(&model_path, MODEL).unwrap();
    let model = model_path.to_string_lossy().into_owned();

    for args in documented_commands(&model) {
        let run = || {
            Command::new(env!("CARGO_BIN_EXE_hyperchen"))
                .args(&args)
                .output()
                .expect("binary runs")
        };
        let first = run();
        let second = run();
        assert!(
            first.status.success(),
            "documented command {args:?} failed: {}",
            String::from_utf8_lossy(&first.stderr)
        );
        assert_eq!(first.status.code(), second.status.code(), "{args:?}");
        assert_eq!(first.stdout, second.stdout, "stdout differs for {args:?}");
    }
    println!("criterion 12 (byte-identical CLI output): PASS");
}
