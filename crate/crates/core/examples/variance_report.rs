//! Before/after variance table: species labels against the secondary
//! clusters, in raw units.
//!
//! cargo run --example variance_report

use std::path::Path;

use category_trees::metrics::render_table;
use category_trees::{
    build_variance_report, load_dataset, secondary_clusters, BuildConfig, ClusterSet, DatasetSpec,
    Forest, Result, VarianceOptions, VarianceReport,
};

pub fn run() -> Result<Vec<VarianceReport>> {
    let spec = DatasetSpec::new(
        Path::new(env!("CARGO_MANIFEST_DIR")).join("data/iris.csv"),
        &["species"],
        &["sepal_length", "sepal_width", "petal_length", "petal_width"],
    );
    let dataset = load_dataset(&spec)?;
    let forest = Forest::train(&dataset, &BuildConfig::default())?;
    let before = ClusterSet::from_categories(&dataset);
    let after = secondary_clusters(&forest, &dataset);
    let columns: Vec<String> = dataset.feature_names.clone();
    let reports = build_variance_report(&dataset, &before, &after, &columns, &VarianceOptions::default())?;
    print!("{}", render_table(&reports));
    Ok(reports)
}

fn main() -> Result<()> {
    run().map(|_| ())
}
