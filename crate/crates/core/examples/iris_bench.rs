//! Training accuracy and a seeded 70/30 hold-out on Iris, driven by the
//! bundled recipe.
//!
//! cargo run --example iris_bench [seed]

use std::path::Path;

use category_trees::cli::{cmd_bench, BenchSummary, RunConfig};
use category_trees::Result;

pub fn run(seed: u64) -> Result<BenchSummary> {
    let mut cfg = RunConfig::load(&Path::new(env!("CARGO_MANIFEST_DIR")).join("recipes/iris.toml"))?;
    cfg.seed = seed;
    let s = cmd_bench(&cfg)?;
    println!("train accuracy {:.4} over {} rows", s.train_accuracy, s.rows);
    println!("{} nodes, depth {}", s.node_count, s.max_depth);
    if let Some(h) = &s.holdout {
        println!("hold-out accuracy {:.4} ({} train / {} test)", h.accuracy, h.train_rows, h.test_rows);
    }
    Ok(s)
}

fn main() -> Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(42);
    run(seed).map(|_| ())
}
