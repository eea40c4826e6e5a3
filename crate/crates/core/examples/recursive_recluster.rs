//! Re-run the assignment until the clusters settle, printing how many rows
//! move at each generation.
//!
//! cargo run --example recursive_recluster

use std::path::Path;

use category_trees::{
    load_dataset, recursive_recluster, secondary_clusters, BuildConfig, ClusterSet, DatasetSpec,
    Forest, ReclusterConfig, Result,
};

pub fn run() -> Result<ClusterSet> {
    let spec = DatasetSpec::new(
        Path::new(env!("CARGO_MANIFEST_DIR")).join("data/iris.csv"),
        &["species"],
        &["sepal_length", "sepal_width", "petal_length", "petal_width"],
    );
    let dataset = load_dataset(&spec)?;
    let forest = Forest::train(&dataset, &BuildConfig::default())?;
    let mut current = secondary_clusters(&forest, &dataset);
    println!("generation 0: {} rows away from their label", current.changes_from_previous);

    let step = ReclusterConfig { max_iters: 1, ..Default::default() };
    for _ in 0..20 {
        let next = recursive_recluster(&current, &dataset, &step)?;
        println!(
            "generation {}: {} rows moved, sizes {:?}",
            next.generation,
            next.changes_from_previous,
            next.clusters.values().map(Vec::len).collect::<Vec<_>>()
        );
        current = next;
        if current.changes_from_previous == 0 {
            break;
        }
    }
    Ok(current)
}

fn main() -> Result<()> {
    run().map(|_| ())
}
