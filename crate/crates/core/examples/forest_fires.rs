//! Forest fires case study: grid cells as categories, fire month as the
//! analysed column.
//!
//! cargo run --example forest_fires -- path/to/forestfires.csv

use std::path::Path;

use category_trees::cli::{cmd_recluster, RunConfig};
use category_trees::{Result, VarianceReport};

pub fn run(data: &Path, output_dir: &Path) -> Result<VarianceReport> {
    let mut cfg = RunConfig::load(&Path::new(env!("CARGO_MANIFEST_DIR")).join("recipes/forest_fires.toml"))?;
    cfg.dataset.path = data.to_path_buf();
    cfg.output_dir = output_dir.to_path_buf();
    let out = cmd_recluster(&cfg, None)?;
    print!("{}", out.render_table("Sector"));
    println!(
        "{} rows ({} dropped), {} claimed by another sector",
        out.report.rows, out.report.dropped_rows, out.report.foreign_assignments
    );
    Ok(out.report.variance[0].clone())
}

fn main() -> Result<()> {
    let data = std::env::args().nth(1).unwrap_or_else(|| "data/forestfires.csv".into());
    run(Path::new(&data), Path::new("out/forest_fires")).map(|_| ())
}
