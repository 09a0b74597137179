//! One test per acceptance criterion. Each prints a `[PASS]`/`[FAIL]` line
//! followed by its detail lines, then asserts.

use supereasy::verify::{self, CheckOutcome, SuiteConfig};

fn report(outcome: CheckOutcome) {
    println!("{}", outcome.headline());
    for line in &outcome.details {
        println!("    {line}");
    }
    assert!(outcome.passed, "{}", outcome.headline());
}

fn cfg() -> SuiteConfig {
    SuiteConfig::default()
}

#[test]
fn criterion_01_super_identity() {
    report(verify::check_super_identity(8));
}

#[test]
fn criterion_02_identity_law() {
    report(verify::check_identity_law(6));
}

#[test]
fn criterion_03_tensor_law() {
    report(verify::check_tensor_law(&[2, 3, 4], 3));
}

#[test]
fn criterion_04_adjoint_law() {
    report(verify::check_adjoint_law(&[2, 3, 4], 3));
}

#[test]
fn criterion_05_composition_scalar() {
    report(verify::check_composition_scalar(&[2, 4, 6], 4));
}

#[test]
fn criterion_06_half_commutation() {
    report(verify::check_half_commutation(6));
}

#[test]
fn criterion_07_generation_claims() {
    report(verify::check_generation(6));
}

#[test]
fn criterion_08_counting_oracles() {
    report(verify::check_counting(4));
}

#[test]
fn criterion_09_group_membership() {
    let c = cfg();
    report(verify::check_membership(6, 100, c.seed, 1e-10));
}

#[test]
fn criterion_10_classification_numerics() {
    let c = cfg();
    report(verify::check_classification(c.seed, 1e-10, 8, 6, 50));
}

#[test]
fn criterion_11_schur_weyl_equality() {
    let c = cfg();
    report(verify::check_schur_weyl(&[2, 3, 4], 6, c.samples, c.seed));
}

#[test]
fn criterion_12_determinism() {
    let c = SuiteConfig::quick();
    let first = verify::render_text(&c, &verify::run_suite(&c));
    let second = verify::render_text(&c, &verify::run_suite(&c));
    let mut outcome = verify::check_determinism(&c);
    outcome.details.push(format!(
        "{} two full quick-suite renders including check 12, {} bytes, identical: {}",
        if first == second { "ok" } else { "FAIL" },
        first.len(),
        first == second
    ));
    outcome.passed &= first == second;
    report(outcome);
}
