//! Acceptance criteria 1-11. Every comparison is exact (integers, rationals,
//! cyclotomic numbers); the only tolerances are the wall-clock budgets below.
//!
//! Run with `cargo test -p tensor-walks --test acceptance -- --nocapture`
//! to see the per-criterion report.

use std::time::Duration;

use num_bigint::BigUint;
use tensor_walks::closed_forms::{
    abelian_walks, cyclic_walks, paley_closed_form, paley_theorem, wreath_brute_force,
    wreath_invariants, wreath_invariants_printed, PaleyKind, PaleyTarget, TheoremVariant,
};
use tensor_walks::arith::{rat, rat_frac};
use tensor_walks::verify::{run_suite, SuiteReport};

/// (criterion, suite, wall-clock budget)
const CRITERIA: [(u32, &str, Duration); 11] = [
    (1, "cyclic", Duration::from_secs(1)),
    (2, "abelian", Duration::from_secs(1)),
    (3, "s4", Duration::from_secs(5)),
    (4, "sn", Duration::from_secs(30)),
    (5, "paley", Duration::from_secs(10)),
    (6, "wreath", Duration::from_secs(60)),
    (7, "linear", Duration::from_secs(5)),
    (8, "engines", Duration::from_secs(120)),
    (9, "genfnc", Duration::from_secs(30)),
    (10, "diagram", Duration::from_secs(10)),
    (11, "gauss", Duration::from_secs(1)),
];

fn line(n: u32, budget: Duration, r: &SuiteReport) -> (bool, String) {
    let in_time = r.elapsed < budget;
    let ok = r.passed() && in_time;
    let mut s = format!(
        "criterion {n:>2} [{}]: {} ({} checks, {} ms, budget {} ms)",
        r.suite,
        if ok { "PASS" } else { "FAIL" },
        r.checks.len(),
        r.elapsed.as_millis(),
        budget.as_millis()
    );
    for c in r.checks.iter().filter(|c| c.name.starts_with("discrepancy")) {
        s.push_str(&format!("\n      report: {}: {}", c.name, c.detail));
    }
    for c in r.failures() {
        s.push_str(&format!("\n      failed: {}: {}", c.name, c.detail));
    }
    if !in_time {
        s.push_str("\n      failed: over the time budget");
    }
    (ok, s)
}

#[test]
fn acceptance_criteria() {
    tensor_walks::init_thread_pool().unwrap();
    let mut all = true;
    for (n, suite, budget) in CRITERIA {
        let report = run_suite(suite).unwrap_or_else(|e| panic!("suite {suite} errored: {e}"));
        let (ok, text) = line(n, budget, &report);
        println!("{text}");
        all &= ok;
    }
    assert!(all, "at least one acceptance criterion failed; see the report above");
}

// Headline fixtures, pinned independently of the suites.

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

#[test]
fn fixture_z10() {
    assert_eq!(cyclic_walks(10, 6, 0, 8).unwrap(), big(15));
    assert_eq!(cyclic_walks(10, 12, 0, 0).unwrap(), big(948));
}

#[test]
fn fixture_z4_z2() {
    assert_eq!(abelian_walks(&[4, 2], 6, &[2, 0]).unwrap(), big(16));
    assert_eq!(abelian_walks(&[4, 2], 6, &[1, 1]).unwrap(), big(12));
}

#[test]
fn fixture_paley() {
    let t = |p, kind| PaleyTarget::new(p, kind).unwrap();
    assert_eq!(paley_closed_form(t(13, PaleyKind::QuadraticResidue), 2).unwrap(), big(2));
    assert_eq!(paley_closed_form(t(7, PaleyKind::QuadraticNonResidue), 2).unwrap(), big(2));
    assert_eq!(paley_closed_form(t(13, PaleyKind::Zero), 2).unwrap(), big(6));
    let printed = paley_theorem(t(7, PaleyKind::QuadraticResidue), 1, TheoremVariant::Printed).unwrap();
    assert_eq!(*printed.rational_part(), rat_frac(12, 28));
    assert_eq!(paley_closed_form(t(7, PaleyKind::QuadraticResidue), 1).unwrap(), big(1));
}

#[test]
fn fixture_wreath() {
    assert_eq!(wreath_invariants(2, 2, 4).unwrap(), big(4));
    assert_eq!(wreath_invariants(2, 2, 3).unwrap(), big(0));
    assert_eq!(wreath_invariants(3, 2, 3).unwrap(), big(1));
    assert_eq!(wreath_brute_force(2, 3, 2).unwrap(), big(1));
    assert_eq!(wreath_invariants_printed(2, 3, 2).unwrap(), rat_frac(42, 48));
    assert_eq!(wreath_invariants_printed(2, 2, 4).unwrap(), rat(4));
}
