//! Render a labeled grid as Graphviz DOT and as an edge-list CSV.
//!
//! Writes p4xp3.dot and p4xp3.csv to the current directory; render the
//! DOT with `neato -Tpng p4xp3.dot -o p4xp3.png`.
//!
//! Run with: cargo run --example export_formats

use odd_graceful::{export_graph, ExportFormat, Labeling, LabelingMethod, TensorGraph};

fn main() -> Result<(), odd_graceful::Error> {
    let g = TensorGraph::build(4, 3)?;
    let f = Labeling::generate(&g, LabelingMethod::General)?;

    let dot = export_graph(&g, Some(&f), ExportFormat::Dot)?;
    let csv = export_graph(&g, Some(&f), ExportFormat::Csv)?;

    std::fs::write("p4xp3.dot", &dot)?;
    std::fs::write("p4xp3.csv", &csv)?;
    println!("wrote p4xp3.dot and p4xp3.csv\n");

    println!("{dot}");
    println!("{csv}");
    Ok(())
}
