//! Train a forest on the bundled Iris table and print its shape.
//!
//! cargo run --example train_forest

use std::path::Path;

use category_trees::{load_dataset, BuildConfig, DatasetSpec, Forest, Result};

fn iris() -> DatasetSpec {
    DatasetSpec::new(
        Path::new(env!("CARGO_MANIFEST_DIR")).join("data/iris.csv"),
        &["species"],
        &["sepal_length", "sepal_width", "petal_length", "petal_width"],
    )
}

pub fn run() -> Result<Forest> {
    let dataset = load_dataset(&iris())?;
    let forest = Forest::train(&dataset, &BuildConfig::default())?;
    println!("{} rows, {} categories", dataset.len(), dataset.categories.len());
    for tree in &forest.trees {
        println!(
            "tree {:<12} rows {:>3}  nodes {:>2}  depth {}",
            tree.category().as_str(),
            tree.assigned_rows.len(),
            tree.nodes().len(),
            tree.max_depth()
        );
    }
    println!("foreign assignments: {}", forest.foreign_assignment_count(&dataset));
    Ok(forest)
}

fn main() -> Result<()> {
    run().map(|_| ())
}
