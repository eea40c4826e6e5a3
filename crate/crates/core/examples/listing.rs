//! Print the member rows of every cluster in the original CSV layout.
//!
//! cargo run --example listing

use std::path::Path;

use category_trees::{load_dataset, secondary_clusters, BuildConfig, DatasetSpec, Forest, Result};

pub fn run() -> Result<String> {
    let spec = DatasetSpec::new(
        Path::new(env!("CARGO_MANIFEST_DIR")).join("data/iris.csv"),
        &["species"],
        &["sepal_length", "sepal_width", "petal_length", "petal_width"],
    );
    let dataset = load_dataset(&spec)?;
    let forest = Forest::train(&dataset, &BuildConfig::default())?;
    let text = secondary_clusters(&forest, &dataset).listing(&dataset, "Species");
    print!("{text}");
    Ok(text)
}

fn main() -> Result<()> {
    run().map(|_| ())
}
