//! Verify labelings from first principles and inspect the diagnostics.
//!
//! Run with: cargo run --example verify_labeling

use odd_graceful::{
    verify_odd_graceful, Labeling, LabelingMethod, TensorGraph, Witness,
};

fn main() -> Result<(), odd_graceful::Error> {
    let g = TensorGraph::build(6, 4)?;
    let f = Labeling::generate(&g, LabelingMethod::General)?;

    let report = verify_odd_graceful(&g, &f)?;
    println!("constructive labeling of P_6 ^ P_4 (q = {}):", report.q);
    for check in &report.checks {
        let tag = if check.advisory { " (advisory)" } else { "" };
        println!(
            "  {:<20} {}{tag}",
            check.name,
            if check.passed { "pass" } else { "FAIL" }
        );
    }
    assert!(report.passed);

    // Now break it: duplicate one vertex label and watch the verifier
    // name the witnesses.
    let mut labels = f.vertex_labels().to_vec();
    labels[0] = labels[2];
    let broken = Labeling::from_vertex_labels(g.n(), g.m(), LabelingMethod::Search, labels)?;
    let report = verify_odd_graceful(&g, &broken)?;
    println!("\nafter duplicating one label: passed = {}", report.passed);
    for witness in &report.witnesses {
        match witness {
            Witness::Vertex { vertex, label, reason } => {
                println!("  vertex {vertex} label {label}: {reason}")
            }
            Witness::Edge { from, to, label, reason } => {
                println!("  edge {from} -> {to} label {label}: {reason}")
            }
        }
    }
    Ok(())
}
