//! The acceptance gate: one PASS/FAIL line per criterion, then a single
//! assertion over all of them so every line is printed even when one fails.
//!
//! Lines go straight to stderr, past the test harness's output capture, so
//! they show up in a plain `cargo test` run.

use std::fmt::Write as _;
use std::io::Write as _;

use tromino::verify::{acceptance_checks, invariant_checks, VerifyOptions};

#[test]
fn acceptance() {
    let checks = acceptance_checks(&VerifyOptions::default());
    let mut out = String::new();
    for c in &checks {
        let status = if c.pass { "PASS" } else { "FAIL" };
        let _ = writeln!(
            out,
            "[{status}] criterion {:>2} {}: {} | {} | {}",
            c.criterion.unwrap_or_default(),
            c.id,
            c.scope,
            c.lhs,
            c.rhs
        );
        if let Some(note) = &c.note {
            let _ = writeln!(out, "         note: {note}");
        }
    }
    emit(&out);
    let failed: Vec<&str> = checks.iter().filter(|c| !c.pass).map(|c| c.id.as_str()).collect();
    assert_eq!(checks.len(), 12);
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

#[test]
fn invariants() {
    let checks = invariant_checks();
    let mut out = String::new();
    for c in &checks {
        let _ = writeln!(out, "[{}] {}: {} | {}", if c.pass { "PASS" } else { "FAIL" }, c.id, c.lhs, c.rhs);
    }
    emit(&out);
    let failed: Vec<&str> = checks.iter().filter(|c| !c.pass).map(|c| c.id.as_str()).collect();
    assert!(failed.is_empty(), "failed invariants: {failed:?}");
}

/// One write per test so parallel tests do not interleave their lines.
fn emit(text: &str) {
    let _ = std::io::stderr().lock().write_all(format!("\n{text}").as_bytes());
}
