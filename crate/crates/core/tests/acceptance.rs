//! Acceptance gate: runs every verification suite and reports one
//! pass/fail line per acceptance criterion (plus the supporting
//! invariants). The build is acceptable exactly when this test passes.

use strata_core::verify;

#[test]
fn acceptance_criteria() {
    let checks = verify::run_suite("all").expect("the all suite exists");

    let mut failures = Vec::new();
    println!("=== acceptance criteria ===");
    for (number, description) in verify::criteria() {
        let relevant: Vec<_> =
            checks.iter().filter(|c| c.criterion == Some(number)).collect();
        assert!(
            !relevant.is_empty(),
            "criterion {number} has no implementing checks"
        );
        let passed = relevant.iter().all(|c| c.passed);
        println!(
            "criterion {number:>2}: {} — {description}",
            if passed { "PASS" } else { "FAIL" }
        );
        for check in relevant {
            println!(
                "    {} {}: {}",
                if check.passed { "ok " } else { "FAIL" },
                check.name,
                check.detail
            );
            if !check.passed {
                failures.push(format!("criterion {number} / {}: {}", check.name, check.detail));
            }
        }
    }

    println!("=== supporting invariants ===");
    for check in checks.iter().filter(|c| c.criterion.is_none()) {
        println!(
            "    {} {}: {}",
            if check.passed { "ok " } else { "FAIL" },
            check.name,
            check.detail
        );
        if !check.passed {
            failures.push(format!("invariant {}: {}", check.name, check.detail));
        }
    }

    assert!(failures.is_empty(), "failing checks:\n{}", failures.join("\n"));
}
