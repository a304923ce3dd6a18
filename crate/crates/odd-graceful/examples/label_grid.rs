//! Build a grid, label it with both constructive methods, and print the
//! canonical document.
//!
//! Run with: cargo run --example label_grid

use odd_graceful::{serialize_labeling, GridVertex, Labeling, LabelingMethod, TensorGraph};

fn main() -> Result<(), odd_graceful::Error> {
    let g = TensorGraph::build(8, 5)?;
    println!(
        "P_8 ^ P_5: {} vertices, {} edges (q = 2(n-1)(m-1))",
        g.vertex_count(),
        g.edge_count()
    );

    let general = Labeling::generate(&g, LabelingMethod::General)?;
    let closed = Labeling::generate(&g, LabelingMethod::ClosedForm)?;
    assert_eq!(general.vertex_labels(), closed.vertex_labels());
    println!("general and closed-form labels agree on every vertex\n");

    // labels line by line, the way the grid is drawn
    for j in 1..=g.m() {
        let row: Vec<u64> = (1..=g.n())
            .map(|i| general.get(GridVertex::new(i, j)).unwrap())
            .collect();
        println!("line {j}: {row:?}");
    }

    println!("\ncanonical document:\n{}", serialize_labeling(&general, false)?);
    Ok(())
}
