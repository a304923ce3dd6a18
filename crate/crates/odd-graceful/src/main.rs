//! Command-line front end: `label`, `verify`, `predict`, `search`, `sweep`.
//!
//! Exit codes: 0 success/verified, 1 verification or search failure,
//! 2 usage error (bad flags or invalid input documents), 3 internal error
//! (I/O and other environment failures).

use clap::{Parser, Subcommand, ValueEnum};
use odd_graceful::{
    cross_check_predictions, export_graph, parse_labeling, run_sweep, search_odd_graceful,
    serialize_labeling, verify_odd_graceful, Error, ExportFormat, Labeling, LabelingDocument,
    LabelingMethod, SearchBudget, SearchStatus, TensorGraph,
};
use serde::Serialize;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "odd-graceful",
    version,
    about = "Odd graceful labelings of the tensor product of two paths"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    General,
    ClosedForm,
}

impl From<MethodArg> for LabelingMethod {
    fn from(value: MethodArg) -> Self {
        match value {
            MethodArg::General => LabelingMethod::General,
            MethodArg::ClosedForm => LabelingMethod::ClosedForm,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    /// Canonical JSON labeling document
    Doc,
    /// Graphviz DOT with grid layout hints
    Dot,
    /// One CSV row per canonical edge
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a labeling and print it as a document, DOT, or CSV
    Label {
        /// Vertices per line
        #[arg(long)]
        n: u32,
        /// Number of lines
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value_t = MethodArg::General)]
        method: MethodArg,
        /// Include induced edge labels in the document
        #[arg(long)]
        edges: bool,
        #[arg(long, value_enum, default_value_t = FormatArg::Doc)]
        format: FormatArg,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check whether a labeling document is odd graceful
    Verify {
        /// Labeling document to verify
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Cross-check predicted edge labels against the induced ones
    Predict {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
    },
    /// Exhaustively search for odd graceful labelings
    Search {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        /// Search-tree node budget
        #[arg(long, default_value_t = 10_000_000)]
        max_nodes: u64,
        /// Enumerate all labelings instead of stopping at the first
        #[arg(long)]
        all: bool,
        /// Fix the first vertex's label to 0 (faster, but enumeration is
        /// no longer complete)
        #[arg(long)]
        fix_zero: bool,
    },
    /// Label and verify every instance in a rectangle of dimensions
    Sweep {
        /// Inclusive range of n, e.g. 3..40 or a single value
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<u32>,
        /// Inclusive range of m
        #[arg(long, value_parser = parse_range)]
        m: RangeInclusive<u32>,
        #[arg(long, value_enum, default_value_t = MethodArg::General)]
        method: MethodArg,
        /// Also write the full JSON report to a file
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

fn parse_range(s: &str) -> Result<RangeInclusive<u32>, Error> {
    let bad = || Error::InvalidRange(s.to_string());
    if let Some((lo, hi)) = s.split_once("..") {
        let lo: u32 = lo.trim().parse().map_err(|_| bad())?;
        let hi: u32 = hi.trim().parse().map_err(|_| bad())?;
        Ok(lo..=hi)
    } else {
        let v: u32 = s.trim().parse().map_err(|_| bad())?;
        Ok(v..=v)
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Io(_) => 3,
        _ => 2,
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

#[derive(Serialize)]
struct SearchReport {
    n: u32,
    m: u32,
    status: SearchStatus,
    nodes_expanded: u64,
    labelings_found: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    warning: Option<String>,
    labelings: Vec<LabelingDocument>,
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Label {
            n,
            m,
            method,
            edges,
            format,
            out,
        } => {
            let g = TensorGraph::build(n, m)?;
            let f = Labeling::generate(&g, method.into())?;
            let text = match format {
                FormatArg::Doc => serialize_labeling(&f, edges)?,
                FormatArg::Dot => export_graph(&g, Some(&f), ExportFormat::Dot)?,
                FormatArg::Csv => export_graph(&g, Some(&f), ExportFormat::Csv)?,
            };
            emit(&text, out.as_ref())?;
            Ok(0)
        }
        Command::Verify { input } => {
            let text = std::fs::read_to_string(&input)?;
            let f = parse_labeling(&text)?;
            let g = TensorGraph::build(f.n(), f.m())?;
            let report = verify_odd_graceful(&g, &f)?;
            println!("{}", serde_json::to_string_pretty(&report)?);
            if report.passed {
                eprintln!("odd graceful: yes ({} x {}, q = {})", f.n(), f.m(), report.q);
                Ok(0)
            } else {
                eprintln!("odd graceful: NO ({} x {}, q = {})", f.n(), f.m(), report.q);
                Ok(1)
            }
        }
        Command::Predict { n, m } => {
            let g = TensorGraph::build(n, m)?;
            let f = Labeling::generate(&g, LabelingMethod::General)?;
            let check = cross_check_predictions(&g, &f)?;
            println!("{}", serde_json::to_string_pretty(&check)?);
            eprintln!(
                "predictions: {} covered, {} not covered, {} mismatches",
                check.covered,
                check.not_covered,
                check.mismatches.len()
            );
            Ok(if check.all_covered_match() { 0 } else { 1 })
        }
        Command::Search {
            n,
            m,
            max_nodes,
            all,
            fix_zero,
        } => {
            let g = TensorGraph::build(n, m)?;
            let budget = SearchBudget {
                max_nodes,
                find_all: all,
                fix_first_vertex_zero: fix_zero,
            };
            let outcome = search_odd_graceful(&g, &budget)?;
            if let Some(warning) = &outcome.warning {
                eprintln!("warning: {warning}");
            }
            let report = SearchReport {
                n,
                m,
                status: outcome.status,
                nodes_expanded: outcome.nodes_expanded,
                labelings_found: outcome.labelings.len(),
                warning: outcome.warning.clone(),
                labelings: outcome
                    .labelings
                    .iter()
                    .map(|f| LabelingDocument::from_labeling(f, false))
                    .collect::<Result<_, _>>()?,
            };
            println!("{}", serde_json::to_string_pretty(&report)?);
            Ok(match outcome.status {
                SearchStatus::Found => 0,
                _ => 1,
            })
        }
        Command::Sweep {
            n,
            m,
            method,
            report,
        } => {
            let sweep = run_sweep(n, m, method.into())?;
            if let Some(path) = &report {
                std::fs::write(path, serde_json::to_string_pretty(&sweep)? + "\n")?;
            }
            for instance in sweep.instances.iter().filter(|i| !i.passed) {
                eprintln!(
                    "FAIL n = {}, m = {}: {}",
                    instance.n,
                    instance.m,
                    instance.detail.as_deref().unwrap_or("verification failed")
                );
            }
            println!(
                "{} instances, {} failures, {} ms",
                sweep.total, sweep.failures, sweep.wall_time_ms
            );
            Ok(if sweep.all_passed() { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
