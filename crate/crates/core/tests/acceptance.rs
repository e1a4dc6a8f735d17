//! One line per acceptance criterion, full scope.

use std::process::ExitCode;
use std::time::Instant;

use adideals::verify::{run_claim, VerifyConfig, CLAIMS};

fn main() -> ExitCode {
    let cfg = VerifyConfig::default();
    let mut failed = 0;
    for (k, (name, description)) in CLAIMS.iter().enumerate() {
        let start = Instant::now();
        let report = run_claim(name, &cfg).expect("known claim");
        let status = if report.passed { "PASS" } else { "FAIL" };
        println!(
            "{status} {:>2} {name:<20} {description} ({} checks, {:.1}s)",
            k + 1,
            report.checks,
            start.elapsed().as_secs_f64()
        );
        for f in report.failures.iter().take(10) {
            println!("       {f}");
        }
        if !report.passed {
            failed += 1;
        }
    }
    println!("{} of {} criteria passed", CLAIMS.len() - failed, CLAIMS.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
