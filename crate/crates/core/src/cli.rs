//! Run configuration and the four commands behind the `cattree` binary:
//! `train`, `recluster`, `classify` and `bench`.
//!
//! Commands return structured output; writing to files or stdout is left to
//! the caller except for the artifacts `train` and `recluster` persist in
//! `output_dir`.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ingest::{load_dataset, read_feature_rows, Dataset, DatasetSpec};
use crate::metrics::{build_variance_report, render_table, VarianceOptions, VarianceReport};
use crate::model::CategoryId;
use crate::recluster::{recursive_recluster, secondary_clusters, ClusterSet, ReclusterConfig};
use crate::tree::{BuildConfig, Forest};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Table,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportConfig {
    /// Columns whose grouped variance is reported; defaults to the output
    /// column.
    #[serde(default)]
    pub columns: Vec<String>,
    #[serde(default)]
    pub variance: VarianceOptions,
    #[serde(default)]
    pub format: OutputFormat,
    /// Word used in cluster listing headers, e.g. "Sector".
    #[serde(default)]
    pub cluster_noun: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BenchConfig {
    /// Share of rows held out when `seed` is non-zero.
    #[serde(default = "default_holdout")]
    pub holdout_fraction: f64,
}

fn default_holdout() -> f64 {
    0.3
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            holdout_fraction: default_holdout(),
        }
    }
}

fn default_output_dir() -> PathBuf {
    PathBuf::from("out")
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub dataset: DatasetSpec,
    #[serde(default)]
    pub build: BuildConfig,
    #[serde(default)]
    pub recluster: ReclusterOptions,
    #[serde(default)]
    pub report: ReportConfig,
    #[serde(default)]
    pub bench: BenchConfig,
    /// Shuffle seed; 0 disables shuffling.
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_output_dir")]
    pub output_dir: PathBuf,
    /// Row count the source file is expected to yield after cleaning.
    #[serde(default)]
    pub expected_rows: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReclusterOptions {
    #[serde(default = "one")]
    pub max_iters: usize,
    #[serde(default = "one")]
    pub min_changes: usize,
}

fn one() -> usize {
    1
}

impl Default for ReclusterOptions {
    fn default() -> Self {
        ReclusterOptions {
            max_iters: 1,
            min_changes: 1,
        }
    }
}

/// Command-line overrides for [`RunConfig`] fields.
#[derive(Clone, Debug, Default, Args)]
pub struct Overrides {
    /// Input data file (replaces `dataset.path`)
    #[arg(long)]
    pub data: Option<PathBuf>,
    #[arg(long)]
    pub target: Option<f64>,
    #[arg(long)]
    pub depth_cap: Option<usize>,
    #[arg(long)]
    pub min_branch_size: Option<usize>,
    #[arg(long)]
    pub max_iters: Option<usize>,
    #[arg(long)]
    pub min_changes: Option<usize>,
    /// Comma-separated report columns
    #[arg(long, value_delimiter = ',')]
    pub columns: Option<Vec<String>>,
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub output_dir: Option<PathBuf>,
    /// Disable min-max feature normalisation
    #[arg(long)]
    pub raw: bool,
}

impl RunConfig {
    pub fn new(dataset: DatasetSpec) -> Self {
        RunConfig {
            dataset,
            build: BuildConfig::default(),
            recluster: ReclusterOptions::default(),
            report: ReportConfig::default(),
            bench: BenchConfig::default(),
            seed: 0,
            output_dir: default_output_dir(),
            expected_rows: None,
        }
    }

    /// Parses a TOML config. Relative paths are resolved against the
    /// config file's directory.
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let mut cfg: RunConfig =
            toml::from_str(&text).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        let base = path.parent().unwrap_or(Path::new("."));
        if cfg.dataset.path.is_relative() {
            cfg.dataset.path = base.join(&cfg.dataset.path);
        }
        if cfg.output_dir.is_relative() {
            cfg.output_dir = base.join(&cfg.output_dir);
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn apply(&mut self, o: &Overrides) -> Result<()> {
        if let Some(p) = &o.data {
            self.dataset.path = p.clone();
        }
        if let Some(v) = o.target {
            self.build.target = v;
        }
        if let Some(v) = o.depth_cap {
            self.build.depth_cap = v;
        }
        if let Some(v) = o.min_branch_size {
            self.build.min_branch_size = v;
        }
        if let Some(v) = o.max_iters {
            self.recluster.max_iters = v;
        }
        if let Some(v) = o.min_changes {
            self.recluster.min_changes = v;
        }
        if let Some(v) = &o.columns {
            self.report.columns = v.clone();
        }
        if let Some(v) = o.format {
            self.report.format = v;
        }
        if let Some(v) = o.seed {
            self.seed = v;
        }
        if let Some(v) = &o.output_dir {
            self.output_dir = v.clone();
        }
        if o.raw {
            self.dataset.normalize = false;
        }
        self.validate()
    }

    pub fn validate(&self) -> Result<()> {
        let b = &self.build;
        if !(b.target > 0.0 && b.target.is_finite()) {
            return Err(Error::InvalidTarget(b.target));
        }
        if !(1..=64).contains(&b.depth_cap) {
            return Err(Error::Config(format!("depth_cap {} outside 1..=64", b.depth_cap)));
        }
        if b.min_branch_size == 0 {
            return Err(Error::Config("min_branch_size must be >= 1".into()));
        }
        if self.recluster.max_iters > 100 {
            return Err(Error::Config(format!(
                "max_iters {} outside 0..=100",
                self.recluster.max_iters
            )));
        }
        let h = self.bench.holdout_fraction;
        if !(0.0..1.0).contains(&h) {
            return Err(Error::Config(format!("holdout_fraction {h} outside [0, 1)")));
        }
        Ok(())
    }

    fn recluster_config(&self) -> ReclusterConfig {
        ReclusterConfig {
            max_iters: self.recluster.max_iters,
            min_changes: self.recluster.min_changes,
            target: self.build.target,
        }
    }

    fn report_columns(&self, dataset: &Dataset) -> Vec<String> {
        if !self.report.columns.is_empty() {
            self.report.columns.clone()
        } else if let Some(out) = &dataset.output_name {
            vec![out.clone()]
        } else {
            dataset.feature_names.clone()
        }
    }

    pub fn forest_path(&self) -> PathBuf {
        self.output_dir.join("forest.json")
    }
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    if let Some(dir) = path.parent() {
        std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    }
    std::fs::write(path, contents).map_err(|e| Error::io(path, e))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrainSummary {
    pub rows: usize,
    pub dropped_rows: usize,
    pub categories: usize,
    pub foreign_assignments: usize,
    pub node_count: usize,
    pub max_depth: usize,
    pub tree_depths: BTreeMap<CategoryId, usize>,
}

impl TrainSummary {
    fn new(forest: &Forest, dataset: &Dataset) -> Self {
        TrainSummary {
            rows: dataset.len(),
            dropped_rows: dataset.dropped_count,
            categories: forest.trees.len(),
            foreign_assignments: forest.foreign_assignment_count(dataset),
            node_count: forest.node_count(),
            max_depth: forest.max_depth(),
            tree_depths: forest
                .trees
                .iter()
                .map(|t| (t.category().clone(), t.max_depth()))
                .collect(),
        }
    }
}

pub struct TrainOutput {
    pub forest: Forest,
    pub summary: TrainSummary,
}

/// Trains a forest and writes `forest.json` and `summary.json` into the
/// output directory.
pub fn cmd_train(cfg: &RunConfig) -> Result<TrainOutput> {
    let dataset = load_dataset(&cfg.dataset)?;
    let forest = Forest::train(&dataset, &cfg.build)?;
    let summary = TrainSummary::new(&forest, &dataset);
    write_file(&cfg.forest_path(), &forest.to_json()?)?;
    write_file(
        &cfg.output_dir.join("summary.json"),
        &serde_json::to_string_pretty(&summary)?,
    )?;
    Ok(TrainOutput { forest, summary })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReclusterReport {
    pub rows: usize,
    pub dropped_rows: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected_rows: Option<usize>,
    pub foreign_assignments: usize,
    /// Non-empty secondary clusters holding none of their own category's rows.
    pub clusters_without_own_rows: Vec<CategoryId>,
    pub secondary: ClusterSet,
    #[serde(rename = "final")]
    pub final_clusters: ClusterSet,
    pub variance: Vec<VarianceReport>,
}

impl ReclusterReport {
    pub fn row_count_matches(&self) -> bool {
        self.expected_rows.is_none_or(|n| n == self.rows)
    }
}

pub struct ReclusterOutput {
    pub dataset: Dataset,
    pub forest: Forest,
    pub report: ReclusterReport,
}

impl ReclusterOutput {
    /// Cluster listings followed by the variance table.
    pub fn render_table(&self, noun: &str) -> String {
        let mut out = self.report.final_clusters.listing(&self.dataset, noun);
        out.push_str(&render_table(&self.report.variance));
        out
    }
}

/// Trains (or loads, when `forest` is given) a forest, forms the secondary
/// clusters, reclusters them and compares grouped variance against the raw
/// category grouping. Writes `clusters.json` and `report.json`.
pub fn cmd_recluster(cfg: &RunConfig, forest: Option<&Path>) -> Result<ReclusterOutput> {
    let dataset = load_dataset(&cfg.dataset)?;
    let forest = match forest {
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| Error::io(p, e))?;
            let f = Forest::from_json(&text)?;
            let rows: usize = f.trees.iter().map(|t| t.assigned_rows.len()).sum();
            if rows != dataset.len() || !f.categories().eq(dataset.categories.iter()) {
                return Err(Error::Config(format!(
                    "{} was not trained on this dataset",
                    p.display()
                )));
            }
            f
        }
        None => Forest::train(&dataset, &cfg.build)?,
    };
    let secondary = secondary_clusters(&forest, &dataset);
    let final_clusters = recursive_recluster(&secondary, &dataset, &cfg.recluster_config())?;
    let before = ClusterSet::from_categories(&dataset);
    let variance = build_variance_report(
        &dataset,
        &before,
        &final_clusters,
        &cfg.report_columns(&dataset),
        &cfg.report.variance,
    )?;
    let report = ReclusterReport {
        rows: dataset.len(),
        dropped_rows: dataset.dropped_count,
        expected_rows: cfg.expected_rows,
        foreign_assignments: forest.foreign_assignment_count(&dataset),
        clusters_without_own_rows: secondary.clusters_without_own_rows(&dataset),
        secondary,
        final_clusters,
        variance,
    };
    write_file(
        &cfg.output_dir.join("clusters.json"),
        &report.final_clusters.to_json()?,
    )?;
    write_file(
        &cfg.output_dir.join("report.json"),
        &serde_json::to_string_pretty(&report)?,
    )?;
    Ok(ReclusterOutput {
        dataset,
        forest,
        report,
    })
}

/// Classifies every row of `input` (a CSV naming the forest's feature
/// columns), preserving input order.
pub fn cmd_classify(forest: &Forest, input: &Path) -> Result<Vec<CategoryId>> {
    read_feature_rows(input, &forest.feature_names)?
        .iter()
        .map(|row| forest.classify_raw(row))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HoldoutResult {
    pub seed: u64,
    pub fraction: f64,
    pub train_rows: usize,
    pub test_rows: usize,
    pub accuracy: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchSummary {
    pub rows: usize,
    pub categories: usize,
    pub train_accuracy: f64,
    pub foreign_assignments: usize,
    pub node_count: usize,
    pub max_depth: usize,
    pub secondary_clusters: usize,
    pub clusters_without_own_rows: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub holdout: Option<HoldoutResult>,
}

fn accuracy(forest: &Forest, dataset: &Dataset) -> Result<f64> {
    if dataset.is_empty() {
        return Ok(0.0);
    }
    let mut hits = 0usize;
    for row in &dataset.rows {
        if forest.classify(&row.features)? == row.category {
            hits += 1;
        }
    }
    Ok(hits as f64 / dataset.len() as f64)
}

/// Train-set accuracy, plus a seeded hold-out split when `seed` is non-zero.
pub fn cmd_bench(cfg: &RunConfig) -> Result<BenchSummary> {
    let dataset = load_dataset(&cfg.dataset)?;
    let forest = Forest::train(&dataset, &cfg.build)?;
    let secondary = secondary_clusters(&forest, &dataset);

    let holdout = if cfg.seed != 0 && cfg.bench.holdout_fraction > 0.0 {
        let mut ids: Vec<usize> = (0..dataset.len()).collect();
        ids.shuffle(&mut ChaCha8Rng::seed_from_u64(cfg.seed));
        let n_test = ((dataset.len() as f64) * cfg.bench.holdout_fraction).round() as usize;
        let (test_ids, train_ids) = ids.split_at(n_test.min(dataset.len().saturating_sub(1)));
        let train = dataset.subset(train_ids);
        let test = dataset.subset(test_ids);
        let held = Forest::train(&train, &cfg.build)?;
        Some(HoldoutResult {
            seed: cfg.seed,
            fraction: cfg.bench.holdout_fraction,
            train_rows: train.len(),
            test_rows: test.len(),
            accuracy: accuracy(&held, &test)?,
        })
    } else {
        None
    };

    Ok(BenchSummary {
        rows: dataset.len(),
        categories: forest.trees.len(),
        train_accuracy: accuracy(&forest, &dataset)?,
        foreign_assignments: forest.foreign_assignment_count(&dataset),
        node_count: forest.node_count(),
        max_depth: forest.max_depth(),
        secondary_clusters: secondary.clusters.values().filter(|c| !c.is_empty()).count(),
        clusters_without_own_rows: secondary.clusters_without_own_rows(&dataset).len(),
        holdout,
    })
}
