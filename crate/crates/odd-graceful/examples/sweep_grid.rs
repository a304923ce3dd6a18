//! Label and verify a whole rectangle of instances in one go.
//!
//! Run with: cargo run --release --example sweep_grid

use odd_graceful::{run_sweep, LabelingMethod};

fn main() -> Result<(), odd_graceful::Error> {
    let report = run_sweep(3..=40, 2..=40, LabelingMethod::General)?;
    println!(
        "general method: {} instances, {} failures, {} ms",
        report.total, report.failures, report.wall_time_ms
    );
    for instance in report.instances.iter().filter(|i| !i.passed) {
        println!(
            "  FAIL n = {}, m = {}: {:?}",
            instance.n, instance.m, instance.detail
        );
    }

    // The closed forms exist for m <= 6 and must reproduce the general
    // labels exactly.
    let report = run_sweep(3..=40, 2..=6, LabelingMethod::ClosedForm)?;
    let agree = report
        .instances
        .iter()
        .all(|i| i.matches_general == Some(true));
    println!(
        "closed form:    {} instances, {} failures, all match general: {agree}",
        report.total, report.failures
    );
    Ok(())
}
