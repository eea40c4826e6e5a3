//! Category Trees: exemplar-based classifiers arranged as one tree per
//! labelled category, with secondary clustering over the tree populations,
//! recursive reclustering, and variance-based cluster evaluation.
//!
//! ```no_run
//! use category_trees::{load_dataset, secondary_clusters, BuildConfig, DatasetSpec, Forest};
//!
//! let dataset = load_dataset(&DatasetSpec::forest_fires("forestfires.csv"))?;
//! let forest = Forest::train(&dataset, &BuildConfig::default())?;
//! let clusters = secondary_clusters(&forest, &dataset);
//! println!("{}", clusters.listing(&dataset, "Sector"));
//! # Ok::<(), category_trees::Error>(())
//! ```

pub mod cli;
pub mod error;
pub mod ingest;
pub mod metrics;
pub mod model;
pub mod recluster;
pub mod tree;

pub use error::{Error, Result};
pub use ingest::{encode_month, load_dataset, minmax_normalize, Dataset, DatasetSpec, Encoding};
pub use metrics::{
    build_variance_report, grouped_variance, information_gain, variance, GroupWeighting,
    VarianceKind, VarianceOptions, VarianceReport,
};
pub use model::{
    compute_exemplar, compute_weights, row_error, CategoryClassifier, CategoryId, DataRow,
    FeatureVector, DEFAULT_TARGET, EPS,
};
pub use recluster::{recursive_recluster, secondary_clusters, ClusterSet, ReclusterConfig};
pub use tree::{assign_rows, build_tree, train_base_layer, BuildConfig, Forest, TreeNode};
