//! Acceptance criteria, one test per criterion. Each test also prints a
//! PASS/FAIL line with its case count, wall time and time limit (visible
//! with `--nocapture`).

use std::time::Duration;

use trophilb::selftest::{run_suite, DEFAULT_SEED};

fn criterion(id: u32, suite: &str, label: &str, limit_secs: u64) {
    let report = run_suite(suite, DEFAULT_SEED).expect("known suite");
    let in_time = report.elapsed <= Duration::from_secs(limit_secs);
    let pass = report.passed() && in_time && report.cases > 0;
    println!(
        "{} criterion {id} [{suite}] {label}: {} cases, {} failures, {:.2}s (limit {limit_secs}s)",
        if pass { "PASS" } else { "FAIL" },
        report.cases,
        report.failures.len(),
        report.elapsed.as_secs_f64(),
    );
    for f in report.failures.iter().take(5) {
        println!("    {f}");
    }
    assert!(pass, "criterion {id} failed");
}

#[test]
fn criterion_1_double_point_table() {
    criterion(1, "pairs", "double-point family matches the tabulated tropical points", 60);
}

#[test]
fn criterion_2_membership_matches_zero_locus() {
    criterion(2, "kapranov", "membership agrees with the tropical zero locus", 120);
}

#[test]
fn criterion_3_certificates() {
    criterion(3, "certificates", "non-members have witnesses, members have no monomial at m0 and m0+1", 120);
}

#[test]
fn criterion_4_hilbert_function_preserved() {
    criterion(4, "hilbert", "initial spaces preserve the Hilbert function", 60);
}

#[test]
fn criterion_5_numerical_polynomials() {
    criterion(5, "numpoly", "decompose round-trips and g(1..1; d) is binomial", 10);
}

#[test]
fn criterion_6_monomial_ideal_inequalities() {
    criterion(6, "monideal", "monomial-ideal inequalities and decompositions", 180);
}

#[test]
fn criterion_7_extension_invariance() {
    criterion(7, "extension", "membership is unchanged over Q(t^(1/2))", 30);
}

#[test]
fn criterion_8_equal_trop_points() {
    criterion(8, "trop-point", "equal tropical Hilbert points give equal membership", 60);
}

#[test]
fn criterion_9_subdivisions() {
    criterion(9, "subdiv", "dual curves balance and the flat conic has a witness", 30);
}
