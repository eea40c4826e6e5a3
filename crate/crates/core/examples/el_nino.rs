//! El Nino buoy case study: each buoy is a category and all five readings
//! are analysed.
//!
//! cargo run --example el_nino -- path/to/elnino

use std::path::Path;

use category_trees::cli::{cmd_recluster, RunConfig};
use category_trees::metrics::render_table;
use category_trees::{Result, VarianceReport};

pub fn run(data: &Path, output_dir: &Path) -> Result<Vec<VarianceReport>> {
    let mut cfg = RunConfig::load(&Path::new(env!("CARGO_MANIFEST_DIR")).join("recipes/el_nino.toml"))?;
    cfg.dataset.path = data.to_path_buf();
    cfg.output_dir = output_dir.to_path_buf();
    let out = cmd_recluster(&cfg, None)?;
    print!("{}", render_table(&out.report.variance));
    println!("{} rows after dropping {} incomplete", out.report.rows, out.report.dropped_rows);
    if !out.report.clusters_without_own_rows.is_empty() {
        println!("buoys holding none of their own rows: {:?}", out.report.clusters_without_own_rows);
    }
    Ok(out.report.variance)
}

fn main() -> Result<()> {
    let data = std::env::args().nth(1).unwrap_or_else(|| "data/elnino".into());
    run(Path::new(&data), Path::new("out/el_nino")).map(|_| ())
}
