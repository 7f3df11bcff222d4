//! Exit criteria. Each test prints one `[PASS]`/`[FAIL]` line, then asserts.
//!
//! Run with `cargo test -p kostka --test acceptance -- --nocapture` to see the
//! lines.

use std::time::{Duration, Instant};

use kostka::partition::partitions_of;
use kostka::verify::{
    verify_adjacent_transfer, verify_bounded_counts, verify_covers, verify_monotonicity,
    verify_oracle, verify_permutation_invariance, verify_theorem1, verify_transfer_chains, Report,
};
use kostka::KostkaEngine;

fn gate(id: u32, name: &str, limit: Option<Duration>, run: impl FnOnce() -> Report) {
    let start = Instant::now();
    let report = run();
    let elapsed = start.elapsed();
    let in_time = limit.is_none_or(|l| elapsed <= l);
    let ok = report.passed() && report.checked > 0 && in_time;
    println!(
        "[{}] criterion {id}: {name} ({}; {:.2?}{})",
        if ok { "PASS" } else { "FAIL" },
        report.summary(),
        elapsed,
        limit.map_or(String::new(), |l| format!(" of {l:?}")),
    );
    assert!(report.checked > 0, "criterion {id} checked nothing");
    assert!(report.passed(), "criterion {id}:\n{}", report.to_text());
    assert!(in_time, "criterion {id} took {elapsed:?}, limit {limit:?}");
}

#[test]
fn c01_positivity_iff_dominance() {
    gate(1, "K > 0 iff dominance, m <= 7", Some(Duration::from_secs(30)), || {
        verify_theorem1(7)
    });
}

#[test]
fn c02_monotone_under_dominance_straight() {
    gate(2, "K(λ,μ) <= K(λ,ν) for μ ⊵ ν, straight, m <= 6", Some(Duration::from_secs(60)), || {
        verify_monotonicity(6, false)
    });
}

#[test]
fn c03_monotone_under_dominance_skew() {
    gate(3, "same inequality, skew shapes <= 6 cells, <= 4 rows", None, || {
        verify_monotonicity(6, true)
    });
}

#[test]
fn c04_bounded_counts() {
    gate(4, "S(x;a) symmetry, monotonicity, T+U split, r <= 4, x_k <= 4", Some(Duration::from_secs(10)), || {
        verify_bounded_counts(4, 4)
    });
}

#[test]
fn c05_adjacent_transfer_and_classes() {
    gate(5, "adjacent transfer, whole and class by class, <= 6 cells", None, || {
        verify_adjacent_transfer(6, 4)
    });
}

#[test]
fn c06_covers_match_hasse_diagram() {
    gate(6, "covers() equals brute-force Hasse covers, n <= 10", Some(Duration::from_secs(30)), || {
        verify_covers(10)
    });
}

#[test]
fn c07_strip_recursion_matches_enumeration() {
    gate(7, "strip recursion equals enumeration, shapes <= 8 cells", None, || {
        verify_oracle(8, 4, 8)
    });
}

#[test]
fn c08_transfer_chains() {
    gate(8, "column-move chains are adjacent transfers with K weakly increasing, n <= 6", None, || {
        verify_transfer_chains(6)
    });
}

#[test]
fn c09_permutation_invariance() {
    gate(9, "K invariant under permuting the content, shapes <= 7 cells", None, || {
        verify_permutation_invariance(7, 4)
    });
}

fn matrix_gate(n: usize, entries: usize, limit: Duration) {
    let start = Instant::now();
    let m = KostkaEngine::new().matrix(n);
    let elapsed = start.elapsed();
    let size_ok = m.order.len() * m.order.len() == entries && m.order == partitions_of(n);
    let failures = m.invariant_failures();
    let ok = size_ok && failures.is_empty() && elapsed <= limit;
    println!(
        "[{}] criterion 10: Kostka matrix n = {n}, {entries} entries ({:.2?} of {limit:?}, {} invariant failures)",
        if ok { "PASS" } else { "FAIL" },
        elapsed,
        failures.len()
    );
    assert!(size_ok);
    assert!(failures.is_empty(), "{failures:?}");
    assert!(elapsed <= limit, "n = {n} took {elapsed:?}");
}

#[test]
fn c10_matrix_n12() {
    matrix_gate(12, 77 * 77, Duration::from_secs(10));
}

#[test]
fn c10_matrix_n16() {
    matrix_gate(16, 231 * 231, Duration::from_secs(120));
}
