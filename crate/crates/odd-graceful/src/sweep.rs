//! Batch verification over a rectangle of `(n, m)` instances.

use crate::error::{Error, Result};
use crate::graph::TensorGraph;
use crate::labeling::{Labeling, LabelingMethod};
use crate::verify::verify_odd_graceful;
use serde::Serialize;
use std::ops::RangeInclusive;
use std::time::Instant;

/// One `(n, m)` instance's outcome.
#[derive(Clone, Debug, Serialize)]
pub struct SweepInstance {
    pub n: u32,
    pub m: u32,
    pub q: u64,
    pub passed: bool,
    /// Only set for closed-form sweeps: whether every vertex label equals
    /// the general method's.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matches_general: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// Outcome of a whole sweep. Reproducible modulo `wall_time_ms`.
#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub method: LabelingMethod,
    pub total: usize,
    pub failures: usize,
    pub wall_time_ms: u64,
    pub instances: Vec<SweepInstance>,
}

impl SweepReport {
    pub fn all_passed(&self) -> bool {
        self.failures == 0
    }
}

fn run_instance(n: u32, m: u32, method: LabelingMethod) -> SweepInstance {
    let q = 2 * u64::from(n - 1) * u64::from(m - 1);
    let outcome = TensorGraph::build(n, m).and_then(|g| {
        let f = Labeling::generate(&g, method)?;
        let report = verify_odd_graceful(&g, &f)?;
        let matches_general = if method == LabelingMethod::ClosedForm {
            let general = Labeling::generate(&g, LabelingMethod::General)?;
            Some(f.vertex_labels() == general.vertex_labels())
        } else {
            None
        };
        Ok((report, matches_general))
    });
    match outcome {
        Ok((report, matches_general)) => SweepInstance {
            n,
            m,
            q,
            passed: report.passed && matches_general != Some(false),
            matches_general,
            detail: (!report.passed).then(|| {
                report
                    .checks
                    .iter()
                    .filter(|c| !c.advisory && !c.passed)
                    .map(|c| c.name)
                    .collect::<Vec<_>>()
                    .join(", ")
            }),
        },
        Err(e) => SweepInstance {
            n,
            m,
            q,
            passed: false,
            matches_general: None,
            detail: Some(e.to_string()),
        },
    }
}

/// Labels and verifies every `(n, m)` in the given inclusive ranges.
///
/// Failures do not abort the sweep; they are collected so a single report
/// shows every counterexample. Instances appear in ascending `(n, m)`
/// order. Empty ranges produce an empty, passing report.
pub fn run_sweep(
    n_range: RangeInclusive<u32>,
    m_range: RangeInclusive<u32>,
    method: LabelingMethod,
) -> Result<SweepReport> {
    if matches!(method, LabelingMethod::Search) {
        return Err(Error::MethodNotConstructive("search".to_string()));
    }
    let start = Instant::now();
    let mut instances = Vec::new();
    for n in n_range {
        for m in m_range.clone() {
            instances.push(run_instance(n, m, method));
        }
    }
    let failures = instances.iter().filter(|r| !r.passed).count();
    Ok(SweepReport {
        method,
        total: instances.len(),
        failures,
        wall_time_ms: start.elapsed().as_millis() as u64,
        instances,
    })
}
