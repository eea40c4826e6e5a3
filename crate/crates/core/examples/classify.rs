//! Classify a few hand-written flowers in raw units, then round-trip the
//! forest through JSON.
//!
//! cargo run --example classify

use std::path::Path;

use category_trees::{load_dataset, BuildConfig, DatasetSpec, Forest, Result};

pub fn run() -> Result<Vec<String>> {
    let spec = DatasetSpec::new(
        Path::new(env!("CARGO_MANIFEST_DIR")).join("data/iris.csv"),
        &["species"],
        &["sepal_length", "sepal_width", "petal_length", "petal_width"],
    );
    let dataset = load_dataset(&spec)?;
    let forest = Forest::train(&dataset, &BuildConfig::default())?;

    let queries = [
        [5.0, 3.5, 1.4, 0.2],
        [6.0, 2.8, 4.4, 1.3],
        [7.2, 3.1, 6.0, 2.2],
    ];
    // The saved forest carries the normalisation ranges, so raw input works.
    let restored = Forest::from_json(&forest.to_json()?)?;
    let mut out = Vec::new();
    for q in &queries {
        let label = restored.classify_raw(q)?;
        println!("{q:?} -> {label}");
        out.push(label.to_string());
    }
    Ok(out)
}

fn main() -> Result<()> {
    run().map(|_| ())
}
