//! Secondary clusters: the rows each category's tree claims, including rows
//! labelled with another category.
//!
//! cargo run --example secondary_clusters

use std::path::Path;

use category_trees::{load_dataset, secondary_clusters, BuildConfig, ClusterSet, DatasetSpec, Forest, Result};

pub fn run() -> Result<ClusterSet> {
    let spec = DatasetSpec::new(
        Path::new(env!("CARGO_MANIFEST_DIR")).join("data/iris.csv"),
        &["species"],
        &["sepal_length", "sepal_width", "petal_length", "petal_width"],
    );
    let dataset = load_dataset(&spec)?;
    let forest = Forest::train(&dataset, &BuildConfig::default())?;
    let clusters = secondary_clusters(&forest, &dataset);

    let own = clusters.own_row_counts(&dataset);
    for (key, ids) in &clusters.clusters {
        println!("{key:<12} {:>3} rows, {:>3} of its own", ids.len(), own[key]);
    }
    println!("rows claimed by another category: {}", clusters.changes_from_previous);
    Ok(clusters)
}

fn main() -> Result<()> {
    run().map(|_| ())
}
