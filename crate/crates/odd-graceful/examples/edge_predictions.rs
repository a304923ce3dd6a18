//! Compare the closed-form edge-label predictions against the labels
//! induced by the vertex labeling.
//!
//! The stated formulas only cover certain row/line parity combinations;
//! the rest come back as not-covered. On covered edges the prediction is
//! exact.
//!
//! Run with: cargo run --example edge_predictions

use odd_graceful::{
    cross_check_predictions, predict_edge_label, Direction, Labeling, LabelingMethod, TensorGraph,
};

fn main() -> Result<(), odd_graceful::Error> {
    let (n, m) = (5, 7);
    let g = TensorGraph::build(n, m)?;
    let f = Labeling::generate(&g, LabelingMethod::General)?;

    // one edge at a time
    for (i, j, direction) in [
        (1, 1, Direction::Up),
        (2, 1, Direction::Down),
        (2, 1, Direction::Up),
        (3, 3, Direction::Up),
        (2, 6, Direction::Down),
    ] {
        let p = predict_edge_label(i, j, n, m, direction)?;
        let (u, v) = p.edge;
        let induced = f.get(u).unwrap().abs_diff(f.get(v).unwrap());
        match p.predicted {
            Some(value) => println!(
                "{u} -> {v} [{direction}]: predicted {value}, induced {induced} ({:?})",
                p.rule
            ),
            None => println!("{u} -> {v} [{direction}]: not covered, induced {induced}"),
        }
    }

    // the whole graph at once
    let check = cross_check_predictions(&g, &f)?;
    println!(
        "\nP_{n} ^ P_{m}: {} edges, {} covered (all exact: {}), {} not covered",
        check.total_edges,
        check.covered,
        check.all_covered_match(),
        check.not_covered
    );
    Ok(())
}
