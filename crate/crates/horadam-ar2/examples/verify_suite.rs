//! Run the built-in verification suite and print one line per check.
//!
//!     cargo run --example verify_suite

use horadam_ar2::{run_all, VerifyOptions};

fn main() {
    let records = run_all(&VerifyOptions::default());
    let mut failures = 0;
    for r in &records {
        let status = if r.passed { "PASS" } else { "FAIL" };
        println!(
            "{status}  {:<24} observed {:.3e} vs threshold {:.3e}  ({})",
            r.check, r.observed, r.threshold, r.detail
        );
        failures += usize::from(!r.passed);
    }
    println!(
        "{} of {} checks passed",
        records.len() - failures,
        records.len()
    );
    std::process::exit(if failures > 0 { 1 } else { 0 });
}
