//! The full verification battery, one test per suite.

use skeinlab::verify::{run_suite, Suite, VerifyConfig};

fn run(suite: Suite) {
    let config = VerifyConfig::default();
    for report in run_suite(suite, &config) {
        for item in &report.items {
            println!(
                "[{}] {}: {} ({})",
                if item.passed { "PASS" } else { "FAIL" },
                report.suite,
                item.name,
                item.detail
            );
        }
        assert!(report.passed(), "suite {} failed", report.suite);
    }
}

#[test]
fn series_suite_passes() {
    run(Suite::Series);
}

#[test]
fn skein_suite_passes() {
    run(Suite::Skein);
}

#[test]
fn higher_suite_passes() {
    run(Suite::Higher);
}

#[test]
fn eight_t_suite_passes() {
    run(Suite::EightT);
}

#[test]
fn chord_suite_passes() {
    run(Suite::Chord);
}
