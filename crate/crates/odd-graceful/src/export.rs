//! DOT and CSV renderings of a grid with optional labels.
//!
//! The DOT output names vertices `v_i_j` and pins them to an `(i, j)` grid
//! layout; the CSV output is one row per canonical edge. Both annotate
//! vertex and edge labels when a labeling is supplied — in the
//! channel-assignment reading, vertices are base stations on a grid and
//! labels are their channels.

use crate::edges::induce_edge_labels;
use crate::error::{Error, Result};
use crate::graph::TensorGraph;
use crate::labeling::Labeling;
use std::fmt::Write as _;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Csv,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dot" => Ok(ExportFormat::Dot),
            "csv" => Ok(ExportFormat::Csv),
            other => Err(Error::UnsupportedFormat(other.to_string())),
        }
    }
}

/// Renders `g` (and `f`'s labels, when given) in the requested format.
pub fn export_graph(g: &TensorGraph, f: Option<&Labeling>, format: ExportFormat) -> Result<String> {
    if let Some(f) = f {
        if f.n() != g.n() || f.m() != g.m() {
            return Err(Error::DimensionMismatch {
                g_n: g.n(),
                g_m: g.m(),
                fn_n: f.n(),
                fn_m: f.m(),
            });
        }
    }
    match format {
        ExportFormat::Dot => export_dot(g, f),
        ExportFormat::Csv => export_csv(g, f),
    }
}

fn export_dot(g: &TensorGraph, f: Option<&Labeling>) -> Result<String> {
    let mut out = String::new();
    writeln!(out, "graph tensor_p{}_p{} {{", g.n(), g.m()).unwrap();
    writeln!(out, "  layout=neato;").unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for v in g.vertices() {
        match f.map(|f| f.get(v).expect("vertex in range")) {
            Some(label) => writeln!(
                out,
                "  v_{}_{} [pos=\"{},{}!\", label=\"{}\"];",
                v.i, v.j, v.i, v.j, label
            )
            .unwrap(),
            None => writeln!(out, "  v_{}_{} [pos=\"{},{}!\"];", v.i, v.j, v.i, v.j).unwrap(),
        }
    }
    match f {
        Some(f) => {
            for &((u, v), label) in induce_edge_labels(g, f)?.entries() {
                writeln!(
                    out,
                    "  v_{}_{} -- v_{}_{} [label=\"{}\"];",
                    u.i, u.j, v.i, v.j, label
                )
                .unwrap();
            }
        }
        None => {
            for &(u, v) in g.edges() {
                writeln!(out, "  v_{}_{} -- v_{}_{};", u.i, u.j, v.i, v.j).unwrap();
            }
        }
    }
    writeln!(out, "}}").unwrap();
    Ok(out)
}

fn export_csv(g: &TensorGraph, f: Option<&Labeling>) -> Result<String> {
    let mut out = String::from("i1,j1,i2,j2,fu,fv,edge_label\n");
    for &(u, v) in g.edges() {
        match f {
            Some(f) => {
                let fu = f.get(u).expect("vertex in range");
                let fv = f.get(v).expect("vertex in range");
                writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    u.i,
                    u.j,
                    v.i,
                    v.j,
                    fu,
                    fv,
                    fu.abs_diff(fv)
                )
                .unwrap();
            }
            None => writeln!(out, "{},{},{},{},,,", u.i, u.j, v.i, v.j).unwrap(),
        }
    }
    Ok(out)
}
